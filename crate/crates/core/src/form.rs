//! Inertia of integer and Gaussian-integer Hermitian forms by fraction-free
//! (Bareiss) congruence elimination.
//!
//! The pivots are leading principal minors of a congruent matrix, so the sign
//! pattern of consecutive pivots gives the inertia without leaving the ring.
//! Elimination runs first in checked `i128` arithmetic and restarts with
//! `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Positive, negative and zero index of a Hermitian form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub nullity: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Integer-like scalars with overflow reporting.
pub(crate) trait Int: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn signum_i32(&self) -> i32;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Exact division; the caller guarantees divisibility.
    fn div_exact(&self, o: &Self) -> Self;
    fn abs_cmp(&self, o: &Self) -> std::cmp::Ordering;
}

impl Int for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum_i32(&self) -> i32 {
        self.signum() as i32
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert_eq!(self % o, 0);
        self / o
    }
    fn abs_cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.unsigned_abs().cmp(&o.unsigned_abs())
    }
}

impl Int for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum_i32(&self) -> i32 {
        crate::poly::sign_of(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(Zero::is_zero(&r));
        q
    }
    fn abs_cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.abs().cmp(&o.abs())
    }
}

/// Scalars of a Hermitian elimination: the integers or the Gaussian integers.
pub(crate) trait Herm: Clone + std::fmt::Debug {
    type Base: Int;
    fn is_zero(&self) -> bool;
    /// Real part (the whole value for diagonal entries).
    fn re(&self) -> &Self::Base;
    fn conj(&self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div_real(&self, d: &Self::Base) -> Self;
    /// Units `c` to try in `row_i += c row_j` when every diagonal entry vanishes.
    fn combination_units() -> Vec<Self>;
}

impl<T: Int> Herm for T {
    type Base = T;
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn re(&self) -> &T {
        self
    }
    fn conj(&self) -> Option<Self> {
        Some(self.clone())
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Int::add(self, o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Int::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Int::mul(self, o)
    }
    fn div_real(&self, d: &T) -> Self {
        self.div_exact(d)
    }
    fn combination_units() -> Vec<Self> {
        vec![T::from_i64(1)]
    }
}

/// `re + i·im`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Gauss<T> {
    pub re: T,
    pub im: T,
}

impl<T: Int> Herm for Gauss<T> {
    type Base = T;
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn re(&self) -> &T {
        &self.re
    }
    fn conj(&self) -> Option<Self> {
        Some(Gauss {
            re: self.re.clone(),
            im: self.im.neg()?,
        })
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(Gauss {
            re: self.re.add(&o.re)?,
            im: self.im.add(&o.im)?,
        })
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(Gauss {
            re: self.re.sub(&o.re)?,
            im: self.im.sub(&o.im)?,
        })
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        if self.im.is_zero() && o.im.is_zero() {
            return Some(Gauss {
                re: self.re.mul(&o.re)?,
                im: T::zero(),
            });
        }
        let re = self.re.mul(&o.re)?.sub(&self.im.mul(&o.im)?)?;
        let im = self.re.mul(&o.im)?.add(&self.im.mul(&o.re)?)?;
        Some(Gauss { re, im })
    }
    fn div_real(&self, d: &T) -> Self {
        Gauss {
            re: self.re.div_exact(d),
            im: self.im.div_exact(d),
        }
    }
    fn combination_units() -> Vec<Self> {
        vec![
            Gauss {
                re: T::from_i64(1),
                im: T::zero(),
            },
            Gauss {
                re: T::zero(),
                im: T::from_i64(1),
            },
        ]
    }
}

/// Fraction-free symmetric elimination; `None` on arithmetic overflow.
fn bareiss_inertia<R: Herm>(mut a: Vec<Vec<R>>) -> Option<Inertia> {
    let n = a.len();
    let mut prev: Option<R::Base> = None; // previous pivot; None stands for 1
    let mut prev_sign = 1;
    let (mut positive, mut negative) = (0, 0);
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        // Pivot: smallest nonzero diagonal entry among the remaining indices.
        let mut best: Option<usize> = None;
        for i in k..n {
            let d = a[perm[i]][perm[i]].re();
            if !Int::is_zero(d) && best.is_none_or(|b| d.abs_cmp(a[perm[b]][perm[b]].re()).is_lt()) {
                best = Some(i);
            }
        }
        if best.is_none() {
            // All remaining diagonal entries vanish; create one by a congruence.
            let pair = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[perm[i]][perm[j]].is_zero());
            let Some((i, j)) = pair else { break };
            let (pi, pj) = (perm[i], perm[j]);
            let rest: Vec<usize> = perm[k..].to_vec();
            let mut done = false;
            for c in R::combination_units() {
                // new a_ii = 2 Re(c * a_ji) because a_ii = a_jj = 0
                let t = c.mul(&a[pj][pi])?;
                if Int::is_zero(t.re()) {
                    continue;
                }
                let cc = c.conj()?;
                for &l in &rest {
                    let v = c.mul(&a[pj][l])?;
                    a[pi][l] = a[pi][l].add(&v)?;
                }
                for &l in &rest {
                    let v = a[l][pj].mul(&cc)?;
                    a[l][pi] = a[l][pi].add(&v)?;
                }
                done = true;
                break;
            }
            debug_assert!(done, "no unit produced a nonzero diagonal");
            best = Some(i);
        }
        let b = best.unwrap();
        perm.swap(k, b);
        let pk = perm[k];
        let pivot = a[pk][pk].re().clone();
        let sign = pivot.signum_i32();
        if sign * prev_sign > 0 {
            positive += 1;
        } else {
            negative += 1;
        }
        prev_sign = sign;
        let pivot_h = a[pk][pk].clone();
        for ii in k + 1..n {
            let i = perm[ii];
            let aik = a[i][pk].clone();
            for jj in ii..n {
                let j = perm[jj];
                let num = pivot_h.mul(&a[i][j])?.sub(&aik.mul(&a[pk][j])?)?;
                let v = match &prev {
                    Some(d) => num.div_real(d),
                    None => num,
                };
                if jj != ii {
                    a[j][i] = v.conj()?;
                }
                a[i][j] = v;
            }
        }
        prev = Some(pivot);
    }
    let rank = positive + negative;
    Some(Inertia {
        positive,
        negative,
        nullity: n - rank,
    })
}

/// Inertia of a symmetric integer matrix.
pub fn symmetric_inertia(m: &[Vec<i64>]) -> Inertia {
    let small: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    if let Some(i) = bareiss_inertia(small) {
        return i;
    }
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    bareiss_inertia(big).expect("BigInt elimination cannot overflow")
}

/// Inertia of the Hermitian matrix `re + i·im` (`re` symmetric, `im` antisymmetric).
pub(crate) fn hermitian_inertia(re: &[Vec<BigInt>], im: &[Vec<BigInt>]) -> Inertia {
    let fits = |m: &[Vec<BigInt>]| m.iter().flatten().all(|v| i128::try_from(v).is_ok());
    if fits(re) && fits(im) {
        let small: Vec<Vec<Gauss<i128>>> = re
            .iter()
            .zip(im)
            .map(|(r, i)| {
                r.iter()
                    .zip(i)
                    .map(|(a, b)| Gauss {
                        re: i128::try_from(a).unwrap(),
                        im: i128::try_from(b).unwrap(),
                    })
                    .collect()
            })
            .collect();
        if let Some(i) = bareiss_inertia(small) {
            return i;
        }
    }
    let big: Vec<Vec<Gauss<BigInt>>> = re
        .iter()
        .zip(im)
        .map(|(r, i)| {
            r.iter()
                .zip(i)
                .map(|(a, b)| Gauss {
                    re: a.clone(),
                    im: b.clone(),
                })
                .collect()
        })
        .collect();
    bareiss_inertia(big).expect("BigInt elimination cannot overflow")
}
