//! Braid words and the word-level constructions used to build cobordisms
//! between torus knots.
//!
//! A letter `e > 0` is the Artin generator `σ_e`, a positive crossing between
//! the strands at positions `e` and `e + 1` (1-based); `e < 0` is its inverse.
//! For `σ_i` the strand at position `i` passes *over* the strand at `i + 1`;
//! for `σ_i⁻¹` it passes under. With these conventions the closure of
//! `σ_1³` is the positive trefoil `T(2,3)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{bail, Error, Result};

/// A word in the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// Permutation and component count of a braid closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureInfo {
    /// `permutation[i]` is the end position of the strand starting at position `i` (0-based).
    pub permutation: Vec<usize>,
    pub component_count: usize,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            bail!(Argument, "a braid needs at least one strand");
        }
        for &e in &letters {
            if e == 0 || e.unsigned_abs() as usize >= strands {
                bail!(Argument, "letter {e} out of range for {strands} strands");
            }
        }
        Ok(Self { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn empty(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    pub fn closure_info(&self) -> ClosureInfo {
        // Track which starting strand sits at each position.
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &e in &self.letters {
            let g = e.unsigned_abs() as usize;
            at.swap(g - 1, g);
        }
        let mut permutation = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            permutation[start] = pos;
        }
        let mut seen = vec![false; self.strands];
        let mut component_count = 0;
        for i in 0..self.strands {
            if seen[i] {
                continue;
            }
            component_count += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = permutation[j];
            }
        }
        ClosureInfo {
            permutation,
            component_count,
        }
    }

    pub fn is_knot(&self) -> bool {
        self.closure_info().component_count == 1
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|e| e.signum() as i64).sum()
    }

    /// Negates every letter and reverses the word. The closure is the mirror image.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|e| -e).collect(),
        }
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &e in &self.letters {
            if out.last() == Some(&-e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    /// Occurrence count of each generator index `1..strands`.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands.saturating_sub(1)];
        for &e in &self.letters {
            counts[e.unsigned_abs() as usize - 1] += 1;
        }
        counts
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|e| *e != 0 && (e.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for e in &self.letters {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `n: e1 e2 ... ek`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `n: e1 e2 ...`, got {s:?}")))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {:?}", head.trim())))?;
        let letters = tail
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `(σ_1 ⋯ σ_{p-1})^q` on `p` strands.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord> {
    if p == 0 || q == 0 {
        bail!(Argument, "torus braid parameters must be positive, got ({p},{q})");
    }
    let factor: Vec<i32> = (1..p as i32).collect();
    let letters = factor.iter().copied().cycle().take(factor.len() * q).collect();
    Ok(BraidWord::from_parts_unchecked(p, letters))
}

/// Braid connected sum: `w2` is shifted up by `n1 - 1` so the two closures share one strand.
pub fn connected_sum(w1: &BraidWord, w2: &BraidWord) -> Result<BraidWord> {
    if !w1.is_knot() || !w2.is_knot() {
        bail!(Precondition, "connected sum is only defined here for knot closures");
    }
    let shift = (w1.strands - 1) as i32;
    let mut letters = w1.letters.clone();
    letters.extend(w2.letters.iter().map(|&e| e + e.signum() * shift));
    Ok(BraidWord::from_parts_unchecked(w1.strands + w2.strands - 1, letters))
}

/// Splices `t` full twists `(σ_1 ⋯ σ_{k-1})^{k t}` on strands `1..=k` in front of letter `at`.
pub fn insert_full_twists(w: &BraidWord, k: usize, t: usize, at: usize) -> Result<BraidWord> {
    if k < 2 || k > w.strands {
        bail!(Argument, "cannot twist {k} strands of a {}-strand braid", w.strands);
    }
    if at > w.len() {
        bail!(Argument, "insert position {at} beyond word length {}", w.len());
    }
    let twist = full_twist(0, k, 1);
    let mut letters = Vec::with_capacity(w.len() + twist.len() * t);
    letters.extend_from_slice(&w.letters[..at]);
    for _ in 0..t {
        letters.extend_from_slice(&twist);
    }
    letters.extend_from_slice(&w.letters[at..]);
    Ok(BraidWord::from_parts_unchecked(w.strands, letters))
}

/// Full twist `(σ_{b+1} ⋯ σ_{b+k-1})^k` on strands `b+1..=b+k`, every letter with sign `sign`.
fn full_twist(base: usize, k: usize, sign: i32) -> Vec<i32> {
    let mut out = Vec::with_capacity(k * (k - 1));
    for _ in 0..k {
        out.extend((1..k).map(|j| sign * (base + j) as i32));
    }
    out
}

/// The `k²` crossings carrying the strand group at `base+1..=base+k` across the group
/// at `base+k+1..=base+2k`, each crossing with sign `sign`.
fn group_crossing(base: usize, k: usize, sign: i32) -> Vec<i32> {
    let mut out = Vec::with_capacity(k * k);
    for j in (1..=k).rev() {
        out.extend((0..k).map(|r| sign * (base + j + r) as i32));
    }
    out
}

/// Number of letters one companion crossing expands to in a `k`-cable.
pub fn cable_block_len(k: usize) -> usize {
    k * (k - 1) + k * k
}

/// The block replacing the companion letter `e` in a `k`-cable.
pub fn cable_block(e: i32, k: usize) -> Vec<i32> {
    let sign = e.signum();
    let base = (e.unsigned_abs() as usize - 1) * k;
    let mut block = full_twist(base, k, -sign);
    block.extend(group_crossing(base, k, sign));
    block
}

/// The `k`-strand cable of the closure of `w`: `C_{k,0}` or, with `unit_prefix`, `C_{k,1}`.
///
/// Each letter becomes a framing full twist of opposite sign on the lower group followed by
/// `k²` crossings of the letter's sign; the unit prefix `σ_1 ⋯ σ_{k-1}` goes in front.
pub fn cable(w: &BraidWord, k: usize, unit_prefix: bool) -> Result<BraidWord> {
    if k < 2 {
        bail!(Argument, "cable index must be at least 2, got {k}");
    }
    if unit_prefix && !w.is_knot() {
        bail!(Precondition, "the (k,1)-cable needs a knot companion");
    }
    let mut letters = Vec::with_capacity(w.len() * cable_block_len(k) + k);
    if unit_prefix {
        letters.extend(1..k as i32);
    }
    for &e in &w.letters {
        letters.extend(cable_block(e, k));
    }
    Ok(BraidWord::from_parts_unchecked(w.strands * k, letters))
}

/// Changes the positive crossings at `positions` into negative ones.
pub fn flip_crossings(w: &BraidWord, positions: &[usize]) -> Result<BraidWord> {
    let mut letters = w.letters.clone();
    for &i in positions {
        match letters.get(i) {
            None => bail!(Argument, "flip position {i} out of range (length {})", w.len()),
            Some(&e) if e < 0 => bail!(Argument, "letter at {i} is already negative"),
            Some(_) => letters[i] = -letters[i],
        }
    }
    Ok(BraidWord::from_parts_unchecked(w.strands, letters))
}

/// Removes the last strand when it lies entirely above or entirely below the rest
/// and returns to its own position, then freely reduces.
///
/// The result lives on one strand fewer. Free reduction is tried first, so a
/// word such as `σ_1⁻¹σ_1` always qualifies.
pub fn reduce_pulled_strand(w: &BraidWord) -> Result<BraidWord> {
    let reduced = w.free_reduce();
    let origin: Vec<usize> = (0..reduced.len()).collect();
    let (word, _) = remove_last_strand(&reduced, &origin)?;
    Ok(word.free_reduce())
}

/// Strand removal that also carries, for every surviving letter, its tag in `origin`.
fn remove_last_strand(w: &BraidWord, origin: &[usize]) -> Result<(BraidWord, Vec<usize>)> {
    let n = w.strands;
    if n < 2 {
        bail!(NotApplicable, "a single strand cannot be removed");
    }
    let mut pos = n - 1;
    let mut over: Option<bool> = None;
    let mut letters = Vec::with_capacity(w.len());
    let mut kept = Vec::with_capacity(w.len());
    for (idx, &e) in w.letters.iter().enumerate() {
        let g = e.unsigned_abs() as usize;
        let this_over = if pos + 1 == g {
            pos = g;
            e > 0
        } else if pos == g {
            pos = g - 1;
            e < 0
        } else {
            let shifted = if g > pos { g - 1 } else { g } as i32;
            letters.push(e.signum() * shifted);
            kept.push(origin[idx]);
            continue;
        };
        match over {
            None => over = Some(this_over),
            Some(o) if o != this_over => {
                bail!(NotApplicable, "strand {n} passes both over and under (letter {idx})")
            }
            Some(_) => {}
        }
    }
    if pos != n - 1 {
        bail!(NotApplicable, "strand {n} does not close up on itself");
    }
    Ok((BraidWord::from_parts_unchecked(n - 1, letters), kept))
}

/// Crossing changes that unknot the square torus braid `(σ_1 ⋯ σ_{l-1})^l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnknottingCertificate {
    pub l: usize,
    /// Indices into `torus_braid(l, l)`, in the order they are flipped.
    pub flip_positions: Vec<usize>,
    /// Words after each flip-and-pull round, starting with `torus_braid(l, l)`.
    pub trace: Vec<BraidWord>,
}

/// Flips the last `l-1` crossings, pulls the last strand straight, and recurses on
/// the remaining square torus braid. Uses `(l-1) + (l-2) + ... + 1` flips.
pub fn unknot_square_torus(l: usize) -> Result<UnknottingCertificate> {
    let mut word = torus_braid(l.max(1), l.max(1))?;
    let mut origin: Vec<usize> = (0..word.len()).collect();
    let mut trace = vec![word.clone()];
    let mut flip_positions = Vec::with_capacity(l * l.saturating_sub(1) / 2);
    for s in (2..=l).rev() {
        let start = word.len() - (s - 1);
        let local: Vec<usize> = (start..word.len()).collect();
        word = flip_crossings(&word, &local)?;
        flip_positions.extend(local.iter().map(|&i| origin[i]));
        let (next, kept) = remove_last_strand(&word, &origin)?;
        word = next;
        origin = kept;
        trace.push(word.clone());
    }
    Ok(UnknottingCertificate {
        l: l.max(1),
        flip_positions,
        trace,
    })
}

/// Component count of the closure of `torus_braid(p, q)` by the gcd rule.
pub fn torus_component_count(p: usize, q: usize) -> usize {
    p.gcd(&q)
}
