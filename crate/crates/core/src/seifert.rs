//! Seifert matrices of Bennequin surfaces and Alexander polynomials.
//!
//! The surface of a braid closure is built from one disk per strand and one
//! twisted band per crossing. Its first homology has a basis of cycles, one
//! for each pair of consecutive crossings in the same column.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::modular::det_pencil;

/// Seifert form on the cycle basis of a Bennequin surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    /// Wraps a square matrix.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Self {
        let n = entries.len();
        assert!(entries.iter().all(|r| r.len() == n), "Seifert matrix must be square");
        Self { entries }
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// First Betti number of the surface (the matrix size).
    pub fn beta(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        let n = self.beta();
        Self {
            entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect(),
        }
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.beta();
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[i][j] + self.entries[j][i]).collect())
            .collect()
    }

    /// Block sum `V ⊕ W`, the Seifert form of a connected sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.beta(), other.beta());
        let mut entries = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            entries[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            entries[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        Self { entries }
    }
}

/// One row per line, space-separated.
impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A cycle between two consecutive crossings of one column.
struct Cycle {
    column: usize,
    start: usize,
    end: usize,
    start_sign: i64,
    end_sign: i64,
}

/// Linking of cycles in columns `i` and `i + 1`, as `(V[a][b], V[b][a])`.
///
/// Only interleaved pairs link; the value does not depend on crossing signs.
fn adjacent_link(a: &Cycle, b: &Cycle) -> (i64, i64) {
    if a.start < b.start && b.start < a.end && a.end < b.end {
        (-1, 0)
    } else if b.start < a.start && a.start < b.end && b.end < a.end {
        (1, 0)
    } else {
        (0, 0)
    }
}

/// Seifert matrix of the Bennequin surface of the closure of `w`.
///
/// Cycles are ordered by column, then by position. A generator that never
/// occurs splits the surface; the result is then the block sum of the pieces.
pub fn seifert_matrix(w: &BraidWord) -> SeifertMatrix {
    let letters = w.letters();
    let mut cycles = Vec::new();
    for column in 1..w.strands() {
        let occ: Vec<usize> = (0..letters.len())
            .filter(|&k| letters[k].unsigned_abs() as usize == column)
            .collect();
        for pair in occ.windows(2) {
            cycles.push(Cycle {
                column,
                start: pair[0],
                end: pair[1],
                start_sign: letters[pair[0]].signum() as i64,
                end_sign: letters[pair[1]].signum() as i64,
            });
        }
    }
    let n = cycles.len();
    let mut v = vec![vec![0i64; n]; n];
    for a in 0..n {
        let ca = &cycles[a];
        v[a][a] = -(ca.start_sign + ca.end_sign) / 2;
        for b in a + 1..n {
            let cb = &cycles[b];
            if cb.column == ca.column && cb.start == ca.end {
                // Shared crossing: the band twist decides which push-off links.
                if ca.end_sign > 0 {
                    v[a][b] = 1;
                } else {
                    v[b][a] = -1;
                }
            } else if cb.column == ca.column + 1 {
                let (ab, ba) = adjacent_link(ca, cb);
                v[a][b] = ab;
                v[b][a] = ba;
            }
        }
    }
    SeifertMatrix { entries: v }
}

/// Laurent polynomial with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([(0, BigInt::one())])
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (d, c) in terms {
            *coeffs.entry(d).or_default() += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn coeff(&self, d: i64) -> BigInt {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Invariant under `t ↔ t⁻¹`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(d, c)| self.coeffs.get(&-d) == Some(c))
    }

    /// Shift to span `[-⌊s/2⌋, ⌈s/2⌉]` and make the top coefficient positive.
    pub fn normalized(&self) -> Self {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Self::zero();
        };
        let shift = -(hi - lo) / 2 - lo;
        let flip = self.coeffs[&hi].is_negative();
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, c)| (d + shift, if flip { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .flat_map(|(d, c)| other.terms().map(move |(e, k)| (d + e, c * k))),
        )
    }
}

/// Terms `c_d*t^d` in ascending `d`, joined by ` + `.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(d, c)| format!("{c}*t^{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Raw coefficients of `det(t·V − Vᵀ)`, ascending in `t`.
pub(crate) fn alexander_coefficients(v: &SeifertMatrix) -> Vec<BigInt> {
    det_pencil(&v.entries, &v.transpose().entries)
}

/// Normalized Alexander polynomial `det(t·V − Vᵀ)`.
///
/// For knots the result is symmetric with positive top coefficient and
/// evaluates to ±1 at `t = 1`. A split link gives the zero polynomial.
pub fn alexander_polynomial(v: &SeifertMatrix) -> LaurentPolynomial {
    let coeffs = alexander_coefficients(v);
    LaurentPolynomial::from_terms(coeffs.into_iter().enumerate().map(|(d, c)| (d as i64, c))).normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;

    fn word(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_matrix_and_polynomial() {
        let v = seifert_matrix(&word(2, &[1, 1, 1]));
        assert_eq!(v.entries(), &[vec![-1, 1], vec![0, -1]]);
        assert_eq!(v.to_string(), "-1 1\n0 -1\n");
        let a = alexander_polynomial(&v);
        assert_eq!(a.to_string(), "1*t^-1 + -1*t^0 + 1*t^1");
    }

    #[test]
    fn empty_word() {
        let v = seifert_matrix(&BraidWord::empty(1));
        assert_eq!(v.beta(), 0);
        assert_eq!(alexander_polynomial(&v), LaurentPolynomial::one());
    }

    #[test]
    fn torus_sizes() {
        for (p, q) in [(2, 3), (3, 4), (3, 5), (4, 7)] {
            let v = seifert_matrix(&torus_braid(p, q).unwrap());
            assert_eq!(v.beta(), q * (p - 1) - p + 1);
        }
    }

    #[test]
    fn figure_eight() {
        let v = seifert_matrix(&word(3, &[1, -2, 1, -2]));
        let a = alexander_polynomial(&v);
        assert_eq!(a.to_string(), "1*t^-1 + -3*t^0 + 1*t^1");
    }

    #[test]
    fn split_generators_give_block_sum() {
        let v = seifert_matrix(&word(4, &[1, 3, 1, 3, 1]));
        assert_eq!(v.entries(), &[vec![-1, 1, 0], vec![0, -1, 0], vec![0, 0, -1]]);
    }
}
