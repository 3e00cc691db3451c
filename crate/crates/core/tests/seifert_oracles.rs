//! Seifert matrices against closed forms and against braid-move invariance.

use cobound::braid::{connected_sum, torus_braid};
use cobound::{
    alexander_polynomial, lt_signature, seifert_matrix, signature, BraidWord, LaurentPolynomial, RationalAngle,
};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

/// Dense ascending coefficients of `∏ num / ∏ den` for products of `t^e − 1`,
/// by exact long division.
fn binomial_quotient(num: &[usize], den: &[usize]) -> Vec<i64> {
    let mut p = vec![1i64];
    for &e in num {
        let mut next = vec![0i64; p.len() + e];
        for (i, &c) in p.iter().enumerate() {
            next[i + e] += c;
            next[i] -= c;
        }
        p = next;
    }
    for &e in den {
        // p = (t^e − 1) q: from the top, q_{i} = p_{i+e} + q_{i+e}.
        let deg = p.len() - 1 - e;
        let mut q = vec![0i64; deg + 1];
        for i in (0..=deg).rev() {
            q[i] = p[i + e] + if i + e <= deg { q[i + e] } else { 0 };
        }
        // remainder check: p_i + q_i == 0 for i < e
        for i in 0..e {
            let qi = if i <= deg { q[i] } else { 0 };
            assert_eq!(p[i] + qi, 0, "inexact division");
        }
        p = q;
    }
    p
}

fn laurent(coeffs: &[i64]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(coeffs.iter().enumerate().map(|(d, &c)| (d as i64, BigInt::from(c)))).normalized()
}

#[test]
fn torus_alexander_matches_product_formula() {
    for p in 2..=9usize {
        for q in p + 1..=40 {
            if p * q > 80 || p.gcd(&q) != 1 {
                continue;
            }
            let expected = laurent(&binomial_quotient(&[p * q, 1], &[p, q]));
            let got = alexander_polynomial(&seifert_matrix(&torus_braid(p, q).unwrap()));
            assert_eq!(got, expected, "T({p},{q})");
            assert!(got.is_symmetric());
            assert_eq!(got.eval_at_one(), BigInt::from(1));
        }
    }
}

#[test]
fn unknot_and_trefoil_polynomials() {
    assert_eq!(
        alexander_polynomial(&seifert_matrix(&BraidWord::empty(1))),
        LaurentPolynomial::one()
    );
    let w: BraidWord = "3: 1 2".parse().unwrap();
    assert_eq!(alexander_polynomial(&seifert_matrix(&w)), LaurentPolynomial::one());
    let v = seifert_matrix(&"2: 1 1 1".parse().unwrap());
    assert_eq!(alexander_polynomial(&v).to_string(), "1*t^-1 + -1*t^0 + 1*t^1");
}

#[test]
fn betti_number_of_connected_surfaces() {
    for w in ["2: 1 1 1", "3: 1 -2 1 -2", "4: 1 2 3 -1 2 -3 2", "5: 1 2 3 4 4 3 2 1"] {
        let w: BraidWord = w.parse().unwrap();
        assert_eq!(seifert_matrix(&w).beta(), w.len() + 1 - w.strands());
    }
}

#[test]
fn figure_eight_is_amphichiral() {
    let v = seifert_matrix(&"3: 1 -2 1 -2".parse().unwrap());
    assert_eq!(signature(&v), 0);
    assert_eq!(alexander_polynomial(&v).to_string(), "1*t^-1 + -3*t^0 + 1*t^1");
}

#[test]
fn torus_determinants_are_nonzero() {
    for (p, q) in [(2, 3), (3, 4), (3, 5), (2, 9), (4, 7)] {
        let v = seifert_matrix(&torus_braid(p, q).unwrap());
        let sym: Vec<Vec<i64>> = v.symmetrized();
        // Δ(−1) = ±det(V + Vᵀ) is odd for knots.
        let a = alexander_polynomial(&v);
        let at_minus_one: BigInt = a
            .terms()
            .map(|(d, c)| if d.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum();
        assert!(at_minus_one.is_odd(), "T({p},{q})");
        assert_eq!(sym.len(), v.beta());
    }
}

/// Words on `n` strands in which every generator occurs, so the surface is connected.
fn connected_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let g = n as i32 - 1;
            (
                Just(n),
                prop::collection::vec(prop_oneof![1..=g, -g..=-1], 0..9),
                prop::collection::vec(any::<bool>(), n - 1),
            )
        })
        .prop_map(|(n, mut letters, signs)| {
            for (i, s) in signs.into_iter().enumerate() {
                let e = i as i32 + 1;
                letters.push(if s { e } else { -e });
            }
            BraidWord::new(n, letters).unwrap()
        })
}

fn invariants(w: &BraidWord) -> (LaurentPolynomial, i64, i64) {
    let v = seifert_matrix(w);
    let third = lt_signature(&v, RationalAngle::third());
    (
        alexander_polynomial(&v),
        signature(&v),
        if third.at_jump { i64::MIN } else { third.value },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_invariance(w in connected_word(), k in 0usize..12) {
        let mut letters = w.letters().to_vec();
        let k = k % letters.len();
        letters.rotate_left(k);
        let u = BraidWord::new(w.strands(), letters).unwrap();
        prop_assert_eq!(invariants(&w), invariants(&u));
    }

    #[test]
    fn stabilization_invariance(w in connected_word(), positive in any::<bool>()) {
        let n = w.strands();
        let mut letters = w.letters().to_vec();
        letters.push(if positive { n as i32 } else { -(n as i32) });
        let u = BraidWord::new(n + 1, letters).unwrap();
        prop_assert_eq!(invariants(&w), invariants(&u));
    }

    #[test]
    fn cancelling_pair_invariance(w in connected_word(), at in 0usize..12, e in 1i32..=3) {
        let n = w.strands() as i32;
        let e = (e - 1) % (n - 1) + 1;
        let mut letters = w.letters().to_vec();
        let at = at % (letters.len() + 1);
        letters.splice(at..at, [e, -e]);
        let u = BraidWord::new(w.strands(), letters).unwrap();
        prop_assert_eq!(invariants(&w), invariants(&u));
    }

    #[test]
    fn braid_relation_invariance(w in connected_word(), at in 0usize..12, s in prop_oneof![Just(1i32), Just(-1)]) {
        // Insert σ_i σ_{i+1} σ_i · (σ_{i+1} σ_i σ_{i+1})⁻¹ (trivial) only where n ≥ 3, and
        // check the rewritten word against the original.
        prop_assume!(w.strands() >= 3);
        let mut letters = w.letters().to_vec();
        let at = at % (letters.len() + 1);
        let (a, b) = (1, 2);
        letters.splice(at..at, [s * a, s * b, s * a, -s * b, -s * a, -s * b]);
        let u = BraidWord::new(w.strands(), letters).unwrap();
        prop_assert_eq!(invariants(&w), invariants(&u));
    }

    #[test]
    fn mirror_negates_signatures(w in connected_word()) {
        let (_, s, t) = invariants(&w);
        let (_, ms, mt) = invariants(&w.mirror());
        prop_assert_eq!(s, -ms);
        if t != i64::MIN && mt != i64::MIN {
            prop_assert_eq!(t, -mt);
        }
    }

    #[test]
    fn connected_sum_is_block_sum(a in connected_word(), b in connected_word()) {
        prop_assume!(a.is_knot() && b.is_knot());
        let s = connected_sum(&a, &b).unwrap();
        let (pa, sa, _) = invariants(&a);
        let (pb, sb, _) = invariants(&b);
        let (ps, ss, _) = invariants(&s);
        prop_assert_eq!(ss, sa + sb);
        prop_assert_eq!(ps, pa.mul(&pb).normalized());
    }
}

#[test]
fn direct_sum_for_missing_generator() {
    let w: BraidWord = "4: 1 3 1 3 1 3".parse().unwrap();
    let v = seifert_matrix(&w);
    let e = v.entries();
    assert_eq!(v.beta(), 4);
    for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        assert_eq!((e[i][j], e[j][i]), (0, 0));
    }
}
