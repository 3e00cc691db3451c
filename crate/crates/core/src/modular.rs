//! Multi-modular computation of `det(t·A - B)` for integer matrices.
//!
//! Per prime the polynomial comes from one characteristic polynomial
//! (Hessenberg reduction), and the integer coefficients are recovered by CRT
//! against a coefficient bound.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, descending.
fn primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Characteristic polynomial `det(xI - M)` over F_p, ascending coefficients.
fn charpoly_mod(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    // Reduce to upper Hessenberg form by similarity transforms.
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in m + 1..n {
            let u = mul_mod(h[i][m - 1], inv, p);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = mul_mod(u, h[m][j], p);
                h[i][j] = (h[i][j] + p - t) % p;
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[m] = (row[m] + t) % p;
            }
        }
    }
    // p_m(x) = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod subdiag) p_{m-i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = (cur[k + 1] + c) % p;
            cur[k] = (cur[k] + p - mul_mod(h[m - 1][m - 1], c, p)) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, h[m - i][m - i - 1], p);
            if t == 0 {
                break;
            }
            let coef = mul_mod(t, h[m - i - 1][m - 1], p);
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                cur[k] = (cur[k] + p - mul_mod(coef, c, p)) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// Determinant and inverse over F_p; `None` when singular.
fn det_inverse_mod(m: &[Vec<u64>], p: u64) -> Option<(u64, Vec<Vec<u64>>)> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let mut det = 1u64;
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        if piv != col {
            a.swap(piv, col);
            det = (p - det) % p;
        }
        det = mul_mod(det, a[col][col], p);
        let inv = inv_mod(a[col][col], p);
        for v in a[col].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                *v = (*v + p - mul_mod(f, pv, p)) % p;
            }
        }
    }
    Some((det, a.into_iter().map(|r| r[n..].to_vec()).collect()))
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + mul_mod(aik, b[k][j], p)) % p;
            }
        }
    }
    out
}

/// Coefficients of `det(t·A - B)` mod p, length `n + 1`.
fn det_pencil_mod(a: &[Vec<i64>], b: &[Vec<i64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let am: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&v| reduce(v, p)).collect()).collect();
    let bm: Vec<Vec<u64>> = b.iter().map(|r| r.iter().map(|&v| reduce(v, p)).collect()).collect();
    // Find c with M = cA - B invertible; then det(tA - B) = det(M) det(I + (t - c) M^{-1} A).
    for c in 0..=(n as u64 + 1) {
        let m: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| (mul_mod(c, am[i][j], p) + p - bm[i][j]) % p).collect())
            .collect();
        let Some((det_m, inv)) = det_inverse_mod(&m, p) else {
            continue;
        };
        let k = mat_mul_mod(&inv, &am, p);
        // det(I + u K) = sum_j e_j u^j with e_j = (-1)^j [x^{n-j}] det(xI - K).
        let chi = charpoly_mod(k, p);
        let mut g: Vec<u64> = (0..=n)
            .map(|j| {
                let v = chi[n - j];
                if j % 2 == 0 {
                    v
                } else {
                    (p - v) % p
                }
            })
            .collect();
        for v in g.iter_mut() {
            *v = mul_mod(*v, det_m, p);
        }
        // Substitute u = t - c (Taylor shift).
        let neg_c = (p - c % p) % p;
        for i in 0..n {
            for j in (i..n).rev() {
                g[j] = (g[j] + mul_mod(neg_c, g[j + 1], p)) % p;
            }
        }
        return g;
    }
    // n + 2 distinct roots of a degree-n polynomial: it vanishes identically.
    vec![0; n + 1]
}

/// Exact integer coefficients of `det(t·A - B)`, ascending, length `n + 1`.
pub(crate) fn det_pencil(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    // Every coefficient is bounded by prod_i sum_j (|a_ij| + |b_ij|).
    let mut bound = BigUint::one();
    for i in 0..n {
        let row: u64 = (0..n).map(|j| a[i][j].unsigned_abs() + b[i][j].unsigned_abs()).sum();
        bound *= BigUint::from(row.max(1));
    }
    let target = bound * 2u32 + 1u32;

    let mut modulus = BigUint::one();
    let mut residues: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    for p in primes() {
        if modulus > target {
            break;
        }
        let g = det_pencil_mod(a, b, p);
        // CRT: x ≡ r (mod M), x ≡ g (mod p).
        let m_mod_p = (&modulus % p).iter_u64_digits().next().unwrap_or(0);
        let inv = inv_mod(m_mod_p, p);
        for (r, &gp) in residues.iter_mut().zip(&g) {
            let r_mod_p = (&*r % p).iter_u64_digits().next().unwrap_or(0);
            let delta = mul_mod((gp + p - r_mod_p) % p, inv, p);
            *r += &modulus * delta;
        }
        modulus *= p;
    }
    let half = &modulus >> 1;
    residues
        .into_iter()
        .map(|r| {
            if r > half {
                BigInt::from(r) - BigInt::from(modulus.clone())
            } else {
                BigInt::from(r)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * brute_det(&minor)
            })
            .sum()
    }

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    #[test]
    fn pencil_matches_interpolation_oracle() {
        // Compare against cofactor-expanded determinants at several t.
        let a = vec![vec![-1, 1, 0], vec![0, -1, 1], vec![2, 0, -1]];
        let b: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| a[j][i]).collect()).collect();
        let f = det_pencil(&a, &b);
        for t in -3i64..=3 {
            let m: Vec<Vec<i64>> = (0..3)
                .map(|i| (0..3).map(|j| t * a[i][j] - b[i][j]).collect())
                .collect();
            let val: BigInt = f.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c);
            assert_eq!(val, BigInt::from(brute_det(&m)), "t={t}");
        }
    }

    #[test]
    fn singular_leading_matrix() {
        let a = vec![vec![0, 1], vec![0, 0]];
        let b = vec![vec![1, 0], vec![1, 1]];
        // det(tA - B) = det([[-1, t], [-1, -1]]) = 1 + t
        let f = det_pencil(&a, &b);
        assert_eq!(f, vec![BigInt::one(), BigInt::one(), BigInt::zero()]);
    }

    #[test]
    fn identically_zero_pencil() {
        let a = vec![vec![1, 0], vec![0, 0]];
        let b = vec![vec![2, 0], vec![0, 0]];
        assert!(det_pencil(&a, &b).iter().all(|c| c.is_zero()));
    }
}
