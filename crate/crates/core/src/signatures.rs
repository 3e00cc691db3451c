//! Classical and Levine-Tristram signatures.
//!
//! Signatures use the convention in which positive torus knots are positive:
//! `σ_ω(K)` is the signature of `−((1−ω)V + (1−ω̄)Vᵀ)` with `ω = e^{2πit}`.
//!
//! Values at arbitrary rational angles are exact. The step function
//! `t ↦ σ_t` only changes at roots of `det(tV − Vᵀ)` on the unit circle, so
//! the value at `t` equals the value at any nearby point `ω'` that is not
//! separated from `e^{2πit}` by such a root. Sturm sequences in the real
//! variable `x = ω + ω̄` find a nearby `ω'` with rational `cot`, where the form
//! becomes a Gaussian-integer Hermitian matrix.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{bail, Error, Result};
use crate::form::{hermitian_inertia, symmetric_inertia};
use crate::poly::{palindromic_to_trace, real_cyclotomic, IntPoly, Sturm};
use crate::seifert::{alexander_coefficients, SeifertMatrix};

/// A rational angle `t ∈ (0,1)` standing for `ω = e^{2πit}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalAngle {
    num: u64,
    den: u64,
}

impl RationalAngle {
    /// Reduces `num/den`; the value must lie strictly between 0 and 1.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num == 0 || num >= den {
            bail!(Argument, "angle {num}/{den} must lie strictly inside (0,1)");
        }
        let g = num.gcd(&den);
        Ok(Self {
            num: num / g,
            den: den / g,
        })
    }

    /// `ω = −1`.
    pub fn half() -> Self {
        Self { num: 1, den: 2 }
    }

    /// `ζ3`.
    pub fn third() -> Self {
        Self { num: 1, den: 3 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// `1 − t`, the complex conjugate angle.
    pub fn conjugate(&self) -> Self {
        Self {
            num: self.den - self.num,
            den: self.den,
        }
    }

    /// Fractional part of `k·t`, or `None` when it is an integer.
    pub fn times(&self, k: u64) -> Option<Self> {
        let n = (self.num as u128 * k as u128 % self.den as u128) as u64;
        (n != 0).then(|| Self::new(n, self.den).expect("reduced in range"))
    }

    /// Midpoint of two angles.
    pub fn midpoint(&self, other: &Self) -> Self {
        let den = 2 * self.den / self.den.gcd(&other.den) * other.den;
        let num = self.num * (den / self.den) + other.num * (den / other.den);
        Self::new(num, 2 * den).expect("midpoint of angles is an angle")
    }
}

impl Ord for RationalAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for RationalAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for RationalAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("angle {s:?} is not of the form num/den")))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("angle {s:?}: {e}")))
        };
        Self::new(parse(n)?, parse(d)?)
    }
}

/// Value of a signature function at one angle, with its one-sided limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureValue {
    pub value: i64,
    pub left_limit: i64,
    pub right_limit: i64,
    pub at_jump: bool,
}

impl SignatureValue {
    pub fn regular(value: i64) -> Self {
        Self {
            value,
            left_limit: value,
            right_limit: value,
            at_jump: false,
        }
    }

    /// The average of two one-sided limits.
    pub fn jump(left_limit: i64, right_limit: i64) -> Self {
        Self {
            value: (left_limit + right_limit) / 2,
            left_limit,
            right_limit,
            at_jump: true,
        }
    }

    fn swapped(self) -> Self {
        Self {
            left_limit: self.right_limit,
            right_limit: self.left_limit,
            ..self
        }
    }
}

impl fmt::Display for SignatureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.at_jump {
            write!(
                f,
                "{} (jump: left {}, right {})",
                self.value, self.left_limit, self.right_limit
            )
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Classical signature `σ(K)`.
pub fn signature(v: &SeifertMatrix) -> i64 {
    let neg: Vec<Vec<i64>> = v.symmetrized().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    symmetric_inertia(&neg).signature()
}

/// Levine-Tristram signature `σ_t`; see [`LtSignatureFunction`].
pub fn lt_signature(v: &SeifertMatrix, t: RationalAngle) -> SignatureValue {
    LtSignatureFunction::new(v).eval(t)
}

/// The signature function of a Seifert form, prepared for many evaluations.
#[derive(Debug, Clone)]
pub struct LtSignatureFunction {
    sym: Vec<Vec<i64>>,
    anti: Vec<Vec<i64>>,
    /// Squarefree part of `det(tV − Vᵀ)` in `x = t + 1/t`, without the factor at `t = 1`.
    /// `None` when the determinant vanishes identically.
    trace: Option<(IntPoly, Sturm)>,
}

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

impl LtSignatureFunction {
    pub fn new(v: &SeifertMatrix) -> Self {
        let n = v.beta();
        let sym = v.symmetrized();
        let anti: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| v.entries()[i][j] - v.entries()[j][i]).collect())
            .collect();
        let mut f = alexander_coefficients(v);
        let trace = if f.iter().all(|c| c.is_zero()) {
            None
        } else {
            if n % 2 == 1 {
                // Anti-palindromic: strip the factor (t − 1).
                let mut g = vec![BigInt::zero(); n];
                g[n - 1] = f[n].clone();
                for k in (1..n).rev() {
                    g[k - 1] = &f[k] + &g[k];
                }
                debug_assert!((&f[0] + &g[0]).is_zero());
                f = g;
            }
            let p = palindromic_to_trace(&f).squarefree();
            let s = Sturm::new(&p);
            Some((p, s))
        };
        Self { sym, anti, trace }
    }

    /// `σ_t`, with the average of the one-sided limits at roots of the Alexander polynomial.
    pub fn eval(&self, t: RationalAngle) -> SignatureValue {
        if 2 * t.num > t.den {
            // σ_{1−t} = σ_t; only the sides swap.
            return self.eval(t.conjugate()).swapped();
        }
        if t.den == 2 {
            return self.eval_half();
        }
        let Some((p, ps)) = &self.trace else {
            // Degenerate everywhere: report the generic value just left of t.
            let (_, above) = side_intervals(t);
            return SignatureValue::regular(self.value_on(Some(&above.0), &above.1));
        };
        let jump = is_alexander_root(p, t);
        let mut bits = start_bits(t);
        loop {
            let (lo, hi) = two_cos_bounds(t, bits);
            let isolated = !ps.is_root(&lo) && !ps.is_root(&hi) && ps.roots_between(&lo, &hi) == usize::from(jump);
            if isolated {
                if !jump {
                    return SignatureValue::regular(self.value_on(Some(&lo), &hi));
                }
                let (lo2, hi2) = two_cos_bounds(t, bits + 16);
                if lo < lo2 && hi2 < hi {
                    // Larger x is smaller t: the part above the root gives the left limit.
                    let left = self.value_on(Some(&hi2), &hi);
                    let right = self.value_on(Some(&lo), &lo2);
                    return SignatureValue::jump(left, right);
                }
            }
            bits *= 2;
        }
    }

    fn eval_half(&self) -> SignatureValue {
        let Some((p, _)) = &self.trace else {
            return SignatureValue::regular(self.integer_value());
        };
        if p.sign_at(&q(-2, 1)) != 0 {
            return SignatureValue::regular(self.integer_value());
        }
        // Both sides agree by symmetry; take a root-free interval just above x = −2.
        let r = p.div_exact(&IntPoly::from_i64(&[2, 1]));
        let rs = Sturm::new(&r);
        let mut hi = q(0, 1);
        while rs.is_root(&hi) || rs.roots_between(&q(-2, 1), &hi) > 0 {
            hi = (q(-2, 1) + hi) / q(2, 1);
        }
        let left = self.value_on(None, &hi);
        SignatureValue::jump(left, left)
    }

    fn integer_value(&self) -> i64 {
        let neg: Vec<Vec<i64>> = self.sym.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        symmetric_inertia(&neg).signature()
    }

    /// Signature at some point with `x = ω + ω̄` in `[lo, hi]` (`lo = None` means −2).
    fn value_on(&self, lo: Option<&Q>, hi: &Q) -> i64 {
        // x = 2(1 − s²)/(1 + s²) with s = tan(θ/2), so s² = (2 − x)/(2 + x).
        let two = q(2, 1);
        let s2_lo = (&two - hi) / (&two + hi);
        let s2_hi = lo.map(|lo| (&two - lo) / (&two + lo));
        let (u, v) = pythagorean_between(&s2_lo, s2_hi.as_ref());
        // −(V + Vᵀ) + i cot(θ/2) (V − Vᵀ), scaled by u > 0, with cot(θ/2) = v/u.
        let re: Vec<Vec<BigInt>> = self.sym.iter().map(|r| r.iter().map(|&x| -&u * x).collect()).collect();
        let im: Vec<Vec<BigInt>> = self.anti.iter().map(|r| r.iter().map(|&x| &v * x).collect()).collect();
        hermitian_inertia(&re, &im).signature()
    }
}

/// Whether `e^{2πit}` is a root of the polynomial with trace form `p`.
fn is_alexander_root(p: &IntPoly, t: RationalAngle) -> bool {
    let d = t.den;
    // The minimal polynomial of 2cos(2πt) has degree φ(d)/2.
    if totient(d) / 2 > p.degree().unwrap_or(0) as u64 {
        return false;
    }
    matches!(p.div_rem_exact(&real_cyclotomic(d)), Some((_, r)) if r.is_zero())
}

fn totient(mut n: u64) -> u64 {
    let mut out = n;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            while n.is_multiple_of(f) {
                n /= f;
            }
            out -= out / f;
        }
        f += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn start_bits(t: RationalAngle) -> u64 {
    // 2 ± 2cos(2πt) is about (π/den)² away from ±2 at worst.
    40 + 2 * (64 - t.den.leading_zeros() as u64)
}

/// Root-free `x` intervals strictly below and strictly above `2cos(2πt)`,
/// ignoring the Alexander polynomial; for forms that are degenerate everywhere.
fn side_intervals(t: RationalAngle) -> ((Q, Q), (Q, Q)) {
    let bits = start_bits(t);
    let (lo, hi) = two_cos_bounds(t, bits);
    let (lo2, hi2) = two_cos_bounds(t, bits + 16);
    ((lo, lo2), (hi2, hi))
}

fn pow2(bits: u64) -> Q {
    Q::from_integer(BigInt::one() << bits)
}

fn round_down(x: &Q, bits: u64) -> Q {
    let s = pow2(bits);
    (x * &s).floor() / s
}

fn round_up(x: &Q, bits: u64) -> Q {
    let s = pow2(bits);
    (x * &s).ceil() / s
}

/// Consecutive partial sums of an alternating series with eventually decreasing terms.
///
/// `term(i)` is the absolute value of the `i`-th term; summation stops once the
/// terms are decreasing (from `from` on) and below `2^-bits`.
fn alternating_bounds(term: impl Fn(u64, &Q) -> Q, first: Q, from: u64, bits: u64) -> (Q, Q) {
    let eps = Q::new(BigInt::one(), BigInt::one() << bits);
    let mut sum = first.clone();
    let mut cur = first;
    let mut i = 0u64;
    loop {
        i += 1;
        cur = term(i, &cur);
        let prev = sum.clone();
        if i % 2 == 1 {
            sum -= &cur;
        } else {
            sum += &cur;
        }
        if i >= from && cur < eps {
            return if prev < sum { (prev, sum) } else { (sum, prev) };
        }
    }
}

/// `atan(1/n)` bounds.
fn atan_inv_bounds(n: i64, bits: u64) -> (Q, Q) {
    let n2 = Q::from_integer(BigInt::from(n * n));
    alternating_bounds(
        |i, prev| prev * Q::from_integer(BigInt::from(2 * i - 1)) / (&n2 * Q::from_integer(BigInt::from(2 * i + 1))),
        q(1, n),
        1,
        bits,
    )
}

/// Rational bounds on π from Machin's formula.
fn pi_bounds(bits: u64) -> (Q, Q) {
    let (a_lo, a_hi) = atan_inv_bounds(5, bits + 8);
    let (b_lo, b_hi) = atan_inv_bounds(239, bits + 8);
    let lo = a_lo * q(16, 1) - b_hi * q(4, 1);
    let hi = a_hi * q(16, 1) - b_lo * q(4, 1);
    (round_down(&lo, bits), round_up(&hi, bits))
}

/// `cos(r)` bounds for `0 ≤ r ≤ 4`.
fn cos_bounds(r: &Q, bits: u64) -> (Q, Q) {
    let r2 = r * r;
    // Terms r^{2i}/(2i)! decrease once (2i−1)(2i) > 16.
    alternating_bounds(
        |i, prev| prev * &r2 / Q::from_integer(BigInt::from((2 * i - 1) * (2 * i))),
        q(1, 1),
        3,
        bits,
    )
}

/// Strict bounds `lo < 2cos(2πt) < hi` with dyadic endpoints, for `0 < t < 1/2`.
fn two_cos_bounds(t: RationalAngle, bits: u64) -> (Q, Q) {
    let (pl, ph) = pi_bounds(bits + 8);
    let scale = q(2 * t.num as i64, t.den as i64);
    let y_lo = round_down(&(pl * &scale), bits + 4);
    let y_hi = round_up(&(ph * &scale), bits + 4);
    // cos decreases on [0, π].
    let (c_lo, _) = cos_bounds(&y_hi, bits + 4);
    let (_, c_hi) = cos_bounds(&y_lo, bits + 4);
    let ulp = Q::new(BigInt::one(), BigInt::one() << bits);
    let lo = round_down(&(c_lo * q(2, 1)), bits) - &ulp;
    let hi = round_up(&(c_hi * q(2, 1)), bits) + ulp;
    (lo, hi)
}

/// `(u, v)` with `v = 2^j` and `lo ≤ (u/v)² ≤ hi` (`hi = None` is unbounded).
fn pythagorean_between(lo: &Q, hi: Option<&Q>) -> (BigInt, BigInt) {
    debug_assert!(lo.is_positive());
    let mut v = BigInt::one();
    loop {
        let v2 = &v * &v;
        let target = lo * Q::from_integer(v2.clone());
        let c = target.ceil().to_integer();
        let mut u = c.sqrt();
        if &u * &u < c {
            u += 1;
        }
        let fits = match hi {
            None => true,
            Some(hi) => Q::from_integer(&u * &u) <= hi * Q::from_integer(v2),
        };
        if fits {
            return (u, v);
        }
        v *= 2;
    }
}

/// Jump angles of the signature function of `T(p,q)` with their signed sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureProfile {
    p: u64,
    q: u64,
    jumps: Vec<(RationalAngle, i64)>,
}

impl SignatureProfile {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Sorted by angle.
    pub fn jumps(&self) -> &[(RationalAngle, i64)] {
        &self.jumps
    }

    /// Partial sum of the jumps up to `t`, averaged at a jump.
    pub fn value_at(&self, t: RationalAngle) -> SignatureValue {
        let below: i64 = self.jumps.iter().take_while(|(a, _)| *a < t).map(|(_, j)| j).sum();
        match self.jumps.iter().find(|(a, _)| *a == t) {
            Some((_, j)) => SignatureValue::jump(below, below + j),
            None => SignatureValue::regular(below),
        }
    }

    /// CSV with header `angle_num,angle_den,jump`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("angle_num,angle_den,jump\n");
        for (a, j) in &self.jumps {
            out.push_str(&format!("{},{},{}\n", a.num, a.den, j));
        }
        out
    }
}

fn check_coprime(p: u64, q: u64) -> Result<()> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        bail!(
            Argument,
            "T({p},{q}) is not a knot: p and q must be coprime and positive"
        );
    }
    Ok(())
}

/// Jump profile of `T(p,q)`: `±2` at each fractional part of `i/p + j/q`.
pub fn lt_profile(p: u64, q: u64) -> Result<SignatureProfile> {
    check_coprime(p, q)?;
    let pq = p * q;
    let mut jumps = Vec::with_capacity(((p - 1) * (q - 1)) as usize);
    for i in 1..p {
        for j in 1..q {
            let s = i * q + j * p;
            // Coprimality keeps s off multiples of pq and makes all angles distinct.
            let jump = if s > pq { 2 } else { -2 };
            jumps.push((RationalAngle::new(s % pq, pq)?, jump));
        }
    }
    jumps.sort();
    Ok(SignatureProfile { p, q, jumps })
}

/// `σ_t(T(p,q))` for coprime `p, q`.
pub fn torus_lt_signature(p: u64, q: u64, t: RationalAngle) -> Result<SignatureValue> {
    check_coprime(p, q)?;
    let pq = p as u128 * q as u128;
    let (tn, td) = (t.num as u128, t.den as u128);
    let (mut below, mut at) = (0i64, 0i64);
    for i in 1..p as u128 {
        for j in 1..q as u128 {
            let s = i * q as u128 + j * p as u128;
            let jump = if s > pq { 2 } else { -2 };
            // Compare (s mod pq)/pq with t.
            match ((s % pq) * td).cmp(&(tn * pq)) {
                Ordering::Less => below += jump,
                Ordering::Equal => at += jump,
                Ordering::Greater => {}
            }
        }
    }
    Ok(if at == 0 {
        SignatureValue::regular(below)
    } else {
        SignatureValue::jump(below, below + at)
    })
}

/// Classical signature of the torus link `T(p,q)` (any `p, q ≥ 1`).
///
/// Counts lattice points `i/p + j/q` inside versus outside `(1/2, 3/2)`; the
/// Gordon-Litherland-Murasugi recursion is evaluated alongside and must agree.
pub fn torus_signature(p: u64, q: u64) -> Result<i64> {
    if p == 0 || q == 0 {
        bail!(Argument, "torus link indices must be positive, got ({p},{q})");
    }
    let (p2, q2, pq) = (2 * p as u128, 2 * q as u128, p as u128 * q as u128);
    let mut sigma = 0i64;
    for i in 1..p as u128 {
        for j in 1..q as u128 {
            // 2pq(i/p + j/q) compared with pq and 3pq.
            let s = i * q2 + j * p2;
            if s > pq && s < 3 * pq {
                sigma += 1;
            } else if s < pq || s > 3 * pq {
                sigma -= 1;
            }
        }
    }
    let glm = -glm_negative(p as i64, q as i64);
    assert_eq!(sigma, glm, "lattice count and recursion disagree for T({p},{q})");
    Ok(sigma)
}

/// The recursion in its native convention, where positive torus links are negative.
fn glm_negative(a: i64, b: i64) -> i64 {
    let (s, r) = (a.max(b), a.min(b));
    let odd = r % 2 == 1;
    if r == 1 {
        0
    } else if r == 2 {
        1 - s
    } else if s == r {
        (-r * r + if odd { 1 } else { 2 }) / 2
    } else if s == 2 * r {
        1 - r * r
    } else if 2 * r < s {
        glm_negative(s - 2 * r, r) - r * r + i64::from(odd)
    } else {
        -glm_negative(2 * r - s, r) - r * r + if odd { 1 } else { 2 }
    }
}

/// Companion knot of a cable.
#[derive(Debug, Clone)]
pub enum Companion {
    Seifert(SeifertMatrix),
    Torus { p: u64, q: u64 },
}

impl Companion {
    fn lt_value(&self, t: RationalAngle) -> Result<i64> {
        Ok(match self {
            Companion::Seifert(v) => lt_signature(v, t).value,
            Companion::Torus { p, q } => torus_lt_signature(*p, *q, t)?.value,
        })
    }
}

/// `σ_t(C_{p,q}(K)) = σ_{pt}(K) + σ_t(T(p,q))`; an integral `p·t` contributes 0.
pub fn cable_lt_signature(companion: &Companion, p: u64, q: u64, t: RationalAngle) -> Result<i64> {
    let base = match t.times(p) {
        Some(pt) => companion.lt_value(pt)?,
        None => 0,
    };
    let pattern = if p == 1 || q == 1 {
        0
    } else {
        torus_lt_signature(p, q, t)?.value
    };
    Ok(base + pattern)
}

/// `max |σ_t(Ka) − σ_t(Kb)|` over the sample angles and `t = 1/2`, skipping jumps.
pub fn signature_lower_bound(va: &SeifertMatrix, vb: &SeifertMatrix, sample: &[RationalAngle]) -> i64 {
    let (fa, fb) = (LtSignatureFunction::new(va), LtSignatureFunction::new(vb));
    std::iter::once(RationalAngle::half())
        .chain(sample.iter().copied())
        .filter_map(|t| {
            let (a, b) = (fa.eval(t), fb.eval(t));
            (!a.at_jump && !b.at_jump).then(|| (a.value - b.value).abs())
        })
        .max()
        .unwrap_or(0)
}
