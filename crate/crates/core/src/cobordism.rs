//! Move ledgers for cobordisms between torus knots and the resulting bounds
//! on the cobordism distance `d_χ(T(m,m+1), T(k,N))`.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::braid::{cable, cable_block, cable_block_len, torus_braid, unknot_square_torus, BraidWord};
use crate::error::{bail, Result};
use crate::signatures::{torus_lt_signature, torus_signature, RationalAngle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    Saddle,
    CrossingFlip,
    PositiveNullTwist,
    NegativeNullTwist,
}

/// One elementary step, stored as a splice of the braid word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    /// Index of the first affected letter.
    pub position: usize,
    /// Number of letters removed at `position`.
    pub removed: usize,
    /// Letters inserted in their place.
    pub inserted: Vec<i32>,
}

impl Move {
    /// A saddle deleting the letter at `position`.
    pub fn saddle(position: usize) -> Self {
        Self {
            kind: MoveKind::Saddle,
            position,
            removed: 1,
            inserted: Vec::new(),
        }
    }

    /// χ-cost: 1 for a saddle, 0 otherwise.
    pub fn cost(&self) -> u64 {
        u64::from(self.kind == MoveKind::Saddle)
    }

    /// `+1` or `−1` for null-homologous twists, 0 otherwise.
    pub fn twist_weight(&self) -> i64 {
        match self.kind {
            MoveKind::PositiveNullTwist => 1,
            MoveKind::NegativeNullTwist => -1,
            _ => 0,
        }
    }

    fn apply(&self, letters: &mut Vec<i32>) -> Result<()> {
        let end = self.position + self.removed;
        if end > letters.len() {
            bail!(
                Argument,
                "move at {}..{end} exceeds word length {}",
                self.position,
                letters.len()
            );
        }
        letters.splice(self.position..end, self.inserted.iter().copied());
        Ok(())
    }
}

/// Source word, target word and the moves between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismPlan {
    pub source: BraidWord,
    pub target: BraidWord,
    pub moves: Vec<Move>,
}

impl CobordismPlan {
    fn count(&self, kind: MoveKind) -> u64 {
        self.moves.iter().filter(|m| m.kind == kind).count() as u64
    }

    pub fn pos_twists(&self) -> u64 {
        self.count(MoveKind::PositiveNullTwist)
    }

    pub fn neg_twists(&self) -> u64 {
        self.count(MoveKind::NegativeNullTwist)
    }

    pub fn saddle_count(&self) -> u64 {
        self.count(MoveKind::Saddle)
    }

    /// Applies the moves to the source. Strands above the target's strand
    /// count must have become free of crossings and are dropped.
    pub fn replay(&self) -> Result<BraidWord> {
        let mut letters = self.source.letters().to_vec();
        for m in &self.moves {
            m.apply(&mut letters)?;
        }
        BraidWord::new(self.target.strands(), letters)
    }

    /// Whether replaying reproduces the target letter for letter.
    pub fn is_consistent(&self) -> bool {
        self.replay().is_ok_and(|w| w == self.target)
    }
}

/// Deletes letters of `T(m,m+1)` down to `T(kl,kl+1)`, `l = ⌊m/k⌋`.
///
/// Every letter `σ_i` with `i ≥ kl` goes, then `m − kl` whole factors; that is
/// `(m − kl)(m + kl)` saddles. Deletions are recorded from the back so every
/// recorded position refers to the word as it is at that step.
pub fn saddle_reduce_torus(m: usize, k: usize) -> Result<CobordismPlan> {
    if k < 2 || m < k {
        bail!(Argument, "saddle reduction needs m >= k >= 2, got m={m}, k={k}");
    }
    let kl = m / k * k;
    let source = torus_braid(m, m + 1)?;
    let target = torus_braid(kl, kl + 1)?;
    let letters = source.letters();
    let mut doomed: Vec<usize> = (0..letters.len()).filter(|&i| letters[i] as usize >= kl).collect();
    // After the high letters are gone, factors of length kl − 1 remain; drop the last m − kl.
    let factor = kl - 1;
    let survivors: Vec<usize> = (0..letters.len()).filter(|&i| (letters[i] as usize) < kl).collect();
    doomed.extend(survivors[(kl + 1) * factor..].iter().copied());
    doomed.sort_unstable();
    let moves = doomed.into_iter().rev().map(Move::saddle).collect();
    Ok(CobordismPlan { source, target, moves })
}

/// `n > 0` with `gcd(k, n) = 1` closest to `2l²/k` (distance below `k`), smaller on ties.
pub fn choose_n(k: u64, l: u64) -> Result<u64> {
    if k < 2 {
        bail!(Argument, "choose_n needs k >= 2, got {k}");
    }
    let target = 2 * l * l; // compare |n·k − 2l²| to keep integers
    let centre = target / k;
    (centre.saturating_sub(k).max(1)..=centre + k)
        .filter(|&n| n.gcd(&k) == 1 && n.abs_diff(target / k) <= k && (n * k).abs_diff(target) < k * k)
        .min_by_key(|&n| ((n * k).abs_diff(target), n))
        .ok_or_else(|| crate::Error::Argument(format!("no admissible n for k={k}, l={l}")))
}

/// The untwisting construction for `K_k = C_{k,1}(T(l,l+1))`.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Plan {
    pub m: usize,
    pub k: usize,
    pub l: usize,
    pub n: u64,
    /// `K_k → C_{k,1}` of the unknotted companion, one positive twist per companion flip.
    pub untwisting: CobordismPlan,
    /// Full twists `(σ_1 ⋯ σ_{k−1})^k` inserted on both knots: `l²`.
    pub framing_full_twists: usize,
    /// Saddles separating the framed cable from `T(m, m+k)` (fewer than `mk`).
    pub cable_framing_saddles: u64,
    /// Saddles separating the framed `T(k, kl² + n)` from `T(k, N)` (fewer than `k²`).
    pub torus_framing_saddles: u64,
}

impl Theorem1Plan {
    /// The knot `K_k`.
    pub fn cable_knot(&self) -> &BraidWord {
        &self.untwisting.source
    }
}

/// Builds `K_k` and translates the unknotting flips of `T(l,l)` into positive
/// null-homologous twists on the cabled strands.
pub fn build_theorem1_plan(m: usize, k: usize) -> Result<Theorem1Plan> {
    if ![2, 3, 4, 6].contains(&k) {
        bail!(Argument, "k must be one of 2, 3, 4, 6, got {k}");
    }
    if m < k {
        bail!(Argument, "the construction needs m >= k, got m={m}, k={k}");
    }
    let l = m / k;
    let companion = torus_braid(l, l + 1)?;
    let source = cable(&companion, k, true)?;
    let cert = unknot_square_torus(l)?;
    // T(l,l+1) starts with the letters of T(l,l), so the flip positions carry over.
    let offset = k - 1;
    let block = cable_block_len(k);
    let mut letters = companion.letters().to_vec();
    let mut moves = Vec::with_capacity(cert.flip_positions.len());
    for &i in &cert.flip_positions {
        let e = letters[i];
        letters[i] = -e;
        moves.push(Move {
            kind: MoveKind::PositiveNullTwist,
            position: offset + i * block,
            removed: block,
            inserted: cable_block(-e, k),
        });
    }
    let flipped = BraidWord::new(companion.strands(), letters)?;
    let target = cable(&flipped, k, true)?;
    Ok(Theorem1Plan {
        m,
        k,
        l,
        n: choose_n(k as u64, l as u64)?,
        untwisting: CobordismPlan { source, target, moves },
        framing_full_twists: l * l,
        cable_framing_saddles: (m * k) as u64,
        torus_framing_saddles: (k * k) as u64,
    })
}

/// McCoy: `x` positive and `x` negative null-homologous twists to the unknot give `g4 ≤ x`.
pub fn mccoy_genus_bound(plan: &CobordismPlan) -> u64 {
    plan.pos_twists().max(plan.neg_twists())
}

/// Which signature enters the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaKind {
    Classical,
    Zeta3,
}

impl fmt::Display for SigmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaKind::Classical => "classical",
            SigmaKind::Zeta3 => "zeta3",
        })
    }
}

impl SigmaKind {
    pub fn for_k(k: u64) -> Self {
        if k == 3 {
            SigmaKind::Zeta3
        } else {
            SigmaKind::Classical
        }
    }

    /// `σ*(T(p,q))` for coprime `p, q`.
    pub fn torus(&self, p: u64, q: u64) -> Result<i64> {
        match self {
            SigmaKind::Classical => torus_signature(p, q),
            SigmaKind::Zeta3 => Ok(torus_lt_signature(p, q, RationalAngle::third())?.value),
        }
    }
}

/// Constants the construction leaves open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundConfig {
    /// Extra null-homologous twists beyond `σ/2` needed to unknot `T(k,n)`.
    pub c_k: i64,
    /// Error of twisting `T(k, ·)` up, and of the common framing change.
    pub twist_up: i64,
}

impl BoundConfig {
    /// `c_k = 2` for every `k`, twist-up constant `2c_k`.
    pub fn with_ck(c_k: i64) -> Self {
        Self { c_k, twist_up: 2 * c_k }
    }
}

impl Default for BoundConfig {
    fn default() -> Self {
        Self::with_ck(2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerItem {
    pub label: String,
    pub count: i64,
}

/// Two-sided estimate of `d_χ(T(m,m+1), T(k,N))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub m: u64,
    pub k: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub l: u64,
    pub n: u64,
    pub sigma_kind: SigmaKind,
    pub lower: i64,
    pub upper: i64,
    pub gap: i64,
    pub ledger: Vec<LedgerItem>,
    pub thresholds_ok: bool,
}

/// Smallest `N` with `gcd(k,N) = 1` meeting the threshold for `m`.
pub fn min_admissible_n(m: u64, k: u64) -> u64 {
    let mut n = 1;
    // Jump close to the threshold first.
    if k == 3 {
        n = (5 * m * m).div_ceil(12).max(1);
    } else if k > 0 {
        n = (m * m * k * k + 2 * m * m).div_ceil(k * k * k).max(1);
    }
    while n.gcd(&k) != 1 || !meets_threshold(m, k, n) {
        n += 1;
    }
    n
}

fn meets_threshold(m: u64, k: u64, big_n: u64) -> bool {
    let (m, k, big_n) = (m as u128, k as u128, big_n as u128);
    if k == 3 {
        12 * big_n >= 5 * m * m
    } else {
        big_n * k * k * k >= m * m * k * k + 2 * m * m
    }
}

/// Lower bound from signatures and upper bound from the construction's ledger.
///
/// `upper − lower` is itemized; every item is nonnegative. For `m < k` the
/// companion `T(m,m+1)` is compared to the unknot directly.
pub fn bound_report(m: u64, k: u64, big_n: u64, config: &BoundConfig) -> Result<BoundReport> {
    if ![2, 3, 4, 6].contains(&k) {
        bail!(Argument, "k must be one of 2, 3, 4, 6, got {k}");
    }
    if m == 0 || big_n == 0 {
        bail!(Argument, "m and N must be positive");
    }
    if big_n.gcd(&k) != 1 {
        bail!(Argument, "gcd(k, N) = gcd({k}, {big_n}) must be 1");
    }
    if !meets_threshold(m, k, big_n) {
        if k == 3 {
            bail!(
                Precondition,
                "N = {big_n} violates N >= 5m^2/12 (needs N >= {})",
                (5 * m * m).div_ceil(12)
            );
        }
        bail!(
            Precondition,
            "N = {big_n} violates N >= m^2/k + 2m^2/k^3 for m={m}, k={k}"
        );
    }
    let kind = SigmaKind::for_k(k);
    let sig_big = kind.torus(k, big_n)?;
    let sig_m = kind.torus(m, m + 1)?;
    let lower = (sig_big - sig_m).abs();

    let l = m / k;
    let n = choose_n(k, l)?;
    // BBL: T(k,j) unknots with ⌈σ/2⌉ + c_k positive twists (classical σ).
    let twists_to_unknot = |j: u64| -> Result<i64> { Ok((torus_signature(k, j)? + 1).div_euclid(2) + config.c_k) };

    let mut ledger = Vec::new();
    let mut push = |label: &str, count: i64| {
        ledger.push(LedgerItem {
            label: label.to_string(),
            count,
        })
    };
    // Upper bound chain; `reference` is the signature-sized part the items are measured against.
    let reference = if l == 0 {
        // d(T(m,m+1), O) ≤ 2g(T(m,m+1)) = m(m−1); d(O, T(k,N)) ≤ 2x.
        let x = twists_to_unknot(big_n)?;
        push("companion Seifert genus", (m * (m - 1)) as i64);
        push("twist slack", (2 * x - sig_big).max(0));
        sig_big
    } else {
        let kl = k * l;
        let pos = (l * (l - 1) / 2) as i64;
        let x = pos.max(twists_to_unknot(n)?);
        let sig_n = kind.torus(k, n)?;
        let n0 = k * l * l + n;
        let drift = (sig_big - kind.torus(k, n0)?).abs();
        push("reduction saddles", ((m - kl) * (m + kl)) as i64);
        push("final saddles", ((k - 1) * (m - 1)) as i64);
        push("cable framing saddles", (m * k) as i64);
        push("torus framing saddles", (k * k) as i64);
        push("twist slack", (2 * x - sig_n).max(0));
        push("twist-up constant", config.twist_up);
        sig_n + drift
    };
    push("signature drift", (reference - lower).max(0));
    let gap: i64 = ledger.iter().map(|i| i.count).sum();
    Ok(BoundReport {
        m,
        k,
        big_n,
        l,
        n,
        sigma_kind: kind,
        lower,
        upper: lower + gap,
        gap,
        ledger,
        thresholds_ok: true,
    })
}

/// Smallest line `gap ≤ a·m + b` with `a ≥ 0` over all points.
///
/// Candidates are the lines through two points and the horizontal lines
/// through one point. Among those lying above every point, the one with the
/// least total excess `Σ (a·m + b − gap)` wins, ties going to the smaller
/// `(a, b)`.
pub fn fit_affine_envelope(points: &[(i64, i64)]) -> Result<(Rational64, Rational64)> {
    if points.is_empty() {
        bail!(Argument, "cannot fit an envelope to no points");
    }
    let mut candidates: Vec<(Rational64, Rational64)> = points
        .iter()
        .map(|&(_, g)| (Rational64::from_integer(0), Rational64::from_integer(g)))
        .collect();
    for (i, &(m1, g1)) in points.iter().enumerate() {
        for &(m2, g2) in &points[i + 1..] {
            if m1 == m2 {
                continue;
            }
            let a = Rational64::new(g2 - g1, m2 - m1);
            if a < Rational64::from_integer(0) {
                continue;
            }
            candidates.push((a, Rational64::from_integer(g1) - a * m1));
        }
    }
    let bounds_all =
        |&(a, b): &(Rational64, Rational64)| points.iter().all(|&(m, g)| a * m + b >= Rational64::from_integer(g));
    let excess =
        |&(a, b): &(Rational64, Rational64)| -> Rational64 { points.iter().map(|&(m, g)| a * m + b - g).sum() };
    Ok(candidates
        .into_iter()
        .filter(bounds_all)
        .min_by(|x, y| excess(x).cmp(&excess(y)).then(x.cmp(y)))
        .expect("the horizontal line through the highest point bounds everything"))
}

/// One sweep row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub m: u64,
    pub k: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub lower: i64,
    pub upper: i64,
    pub gap: i64,
}

/// Bound reports for each `m` at the smallest admissible `N`, with the fitted envelope.
pub fn sweep(
    k: u64,
    ms: impl IntoIterator<Item = u64>,
    config: &BoundConfig,
) -> Result<(Vec<SweepRow>, (Rational64, Rational64))> {
    let mut rows = Vec::new();
    for m in ms {
        let big_n = min_admissible_n(m, k);
        let r = bound_report(m, k, big_n, config)?;
        rows.push(SweepRow {
            m,
            k,
            big_n,
            lower: r.lower,
            upper: r.upper,
            gap: r.gap,
        });
    }
    let pts: Vec<(i64, i64)> = rows.iter().map(|r| (r.m as i64, r.gap)).collect();
    let fit = fit_affine_envelope(&pts)?;
    Ok((rows, fit))
}

/// Sweep rows as CSV with header `m,k,N,lower,upper,gap`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("m,k,N,lower,upper,gap\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.m, r.k, r.big_n, r.lower, r.upper, r.gap
        ));
    }
    out
}
