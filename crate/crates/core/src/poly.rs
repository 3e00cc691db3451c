//! Dense integer polynomials with the real-root tools used to locate steps of
//! signature functions: Sturm chains, cyclotomic and real-cyclotomic polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree; no trailing zeros (the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    #[cfg(test)]
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero()];
        out.extend(self.0.iter().cloned());
        Self(out)
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the (positive) content.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self(self.0.iter().map(|c| c / &g).collect())
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every intermediate leading term; `None` if the division leaves the integers.
    pub fn div_rem_exact(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return Some((Self::default(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        let lc = d.lead();
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let (c, rem) = r[i].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in d.0.iter().enumerate() {
                r[i - dd + j] -= &c * dj;
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        Some((Self::new(q), Self::new(r)))
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        match self.div_rem_exact(d) {
            Some((q, r)) if r.is_zero() => q,
            _ => panic!("inexact polynomial division"),
        }
    }

    /// Pseudo-remainder scaled by a positive constant, so its sign pattern is
    /// that of the true remainder.
    pub fn positive_prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::default();
        };
        if da < dd {
            return self.clone();
        }
        let lc = d.lead().clone();
        let mut r = self.0.clone();
        for i in (dd..=da).rev() {
            // r <- lc * r - r[i] x^{i-dd} d
            let c = r[i].clone();
            for v in r.iter_mut() {
                *v *= &lc;
            }
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[i - dd + j] -= &c * dj;
                }
            }
        }
        r.truncate(dd);
        let mut out = Self::new(r);
        if lc.is_negative() && (da - dd + 1) % 2 == 1 {
            out = out.neg();
        }
        out
    }

    /// Greatest common divisor up to a constant factor, made primitive.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_prem(&b).primitive();
            a = b;
            b = r;
        }
        if !a.is_zero() && a.lead().is_negative() {
            a = a.neg();
        }
        a
    }

    /// Removes repeated factors.
    pub fn squarefree(&self) -> Self {
        let p = self.primitive();
        if p.degree().unwrap_or(0) == 0 {
            return p;
        }
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return p;
        }
        // g is primitive, so by Gauss's lemma it divides p over the integers.
        p.div_exact(&g).primitive()
    }

    /// Sign of the value at `r`, computed as a homogeneous integer evaluation.
    pub fn sign_at(&self, r: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let (num, den) = (r.numer(), r.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Horner in the homogenized form sum c_i num^i den^(d-i).
        for (i, c) in self.0.iter().enumerate().rev() {
            acc = acc * num + c * &den_pow;
            if i > 0 {
                den_pow *= den;
            }
        }
        sign_of(&acc)
    }
}

pub(crate) fn sign_of(v: &BigInt) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// A Sturm chain counting the distinct real roots of a polynomial.
#[derive(Debug, Clone)]
pub(crate) struct Sturm {
    chain: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return Self { chain };
        }
        let p0 = p.primitive();
        let p1 = p0.derivative().primitive();
        chain.push(p0);
        if !p1.is_zero() {
            chain.push(p1);
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].positive_prem(&chain[n - 1]).neg().primitive();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        Self { chain }
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, r: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(r)))
    }

    /// Distinct roots in the open interval; endpoints must not be roots.
    pub fn roots_between(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        self.variations_at(lo) - self.variations_at(hi)
    }

    pub fn is_root(&self, r: &BigRational) -> bool {
        self.chain.first().is_some_and(|p| p.sign_at(r) == 0)
    }
}

/// Cyclotomic polynomial `Φ_n`.
pub(crate) fn cyclotomic(n: u64) -> IntPoly {
    fn go(n: u64, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n as usize] = BigInt::one();
        let mut p = IntPoly::new(coeffs);
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = p.div_exact(&go(d, memo));
            }
        }
        memo.insert(n, p.clone());
        p
    }
    go(n, &mut HashMap::new())
}

/// Rewrites a palindromic coefficient list `c_0..c_{2m}` (read as the Laurent
/// polynomial `sum c_j t^{j-m}`) as a polynomial in `x = t + 1/t`.
pub(crate) fn palindromic_to_trace(coeffs: &[BigInt]) -> IntPoly {
    assert!(coeffs.len() % 2 == 1, "palindromic list must have odd length");
    let m = coeffs.len() / 2;
    // D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}; t^k + t^-k = D_k(x).
    let mut prev = IntPoly::from_i64(&[2]);
    let mut cur = IntPoly::from_i64(&[0, 1]);
    let mut out = IntPoly::new(vec![coeffs[m].clone()]);
    for k in 1..=m {
        let c = &coeffs[m + k];
        if !c.is_zero() {
            out = out.add(&IntPoly(cur.0.iter().map(|v| v * c).collect()));
        }
        let next = cur.shift().sub(&prev);
        prev = cur;
        cur = next;
    }
    out
}

/// Minimal polynomial of `2cos(2π/d)` for `d ≥ 3`.
pub(crate) fn real_cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 3);
    palindromic_to_trace(cyclotomic(d).coeffs())
}
