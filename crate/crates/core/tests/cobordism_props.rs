//! Move ledgers replay exactly; bound reports and envelopes keep their invariants.

use cobound::braid::torus_braid;
use cobound::cobordism::{min_admissible_n, SigmaKind};
use cobound::{
    alexander_polynomial, bound_report, build_theorem1_plan, choose_n, fit_affine_envelope, mccoy_genus_bound,
    saddle_reduce_torus, seifert_matrix, signature, sweep, BoundConfig, LaurentPolynomial, MoveKind,
};
use num_integer::Integer;
use num_rational::Rational64;
use proptest::prelude::*;

#[test]
fn untwisting_reaches_a_trivial_cable() {
    for k in [2usize, 3, 4] {
        for l in 1..=3usize {
            let plan = build_theorem1_plan(k * l, k).unwrap();
            let u = &plan.untwisting;
            assert!(u.is_consistent(), "k={k}, l={l}");
            assert_eq!(u.pos_twists() as usize, l * (l - 1) / 2);
            assert_eq!((u.neg_twists(), u.saddle_count()), (0, 0));
            assert_eq!(mccoy_genus_bound(u) as usize, l * (l - 1) / 2);
            assert!(plan.cable_knot().is_knot() && u.target.is_knot());
            let v = seifert_matrix(&u.target);
            assert_eq!(alexander_polynomial(&v), LaurentPolynomial::one(), "k={k}, l={l}");
            assert_eq!(signature(&v), 0);
        }
    }
}

#[test]
fn twist_moves_replace_whole_cable_blocks() {
    let plan = build_theorem1_plan(8, 2).unwrap();
    let block = cobound::braid::cable_block_len(2);
    for m in &plan.untwisting.moves {
        assert_eq!(m.kind, MoveKind::PositiveNullTwist);
        assert_eq!((m.cost(), m.twist_weight()), (0, 1));
        assert_eq!((m.removed, m.inserted.len()), (block, block));
        assert_eq!((m.position - 1) % block, 0);
    }
}

#[test]
fn choose_n_meets_its_constraints() {
    for k in [2u64, 3, 4, 6] {
        for l in 0..40u64 {
            let n = choose_n(k, l).unwrap();
            assert_eq!(n.gcd(&k), 1);
            let dist = (n * k).abs_diff(2 * l * l);
            assert!(dist < k * k, "k={k}, l={l}, n={n}");
            // No coprime candidate is strictly closer.
            for c in 1..n + 2 * k {
                if c.gcd(&k) == 1 {
                    assert!((c * k).abs_diff(2 * l * l) >= dist);
                }
            }
        }
    }
}

#[test]
fn sigma_zero_for_cables_by_seifert_form() {
    for (k, l) in [(2usize, 1usize), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2)] {
        let plan = build_theorem1_plan(k * l, k).unwrap();
        let v = seifert_matrix(plan.cable_knot());
        let value = match SigmaKind::for_k(k as u64) {
            SigmaKind::Classical => signature(&v),
            SigmaKind::Zeta3 => cobound::lt_signature(&v, cobound::RationalAngle::third()).value,
        };
        assert_eq!(value, 0, "k={k}, l={l}");
    }
}

#[test]
fn small_m_reports_compare_with_the_unknot() {
    let cfg = BoundConfig::default();
    for (m, k) in [(1u64, 2u64), (1, 3), (2, 3), (3, 4), (5, 6)] {
        let r = bound_report(m, k, min_admissible_n(m, k), &cfg).unwrap();
        assert_eq!(r.l, 0);
        assert!(0 <= r.lower && r.lower <= r.upper);
    }
}

#[test]
fn report_json_shape() {
    let r = bound_report(7, 2, 37, &BoundConfig::default()).unwrap();
    let json: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in [
        "m",
        "k",
        "N",
        "l",
        "n",
        "sigma_kind",
        "lower",
        "upper",
        "gap",
        "ledger",
        "thresholds_ok",
    ] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert_eq!(json["sigma_kind"], "classical");
    assert_eq!(json["ledger"][0]["label"], "reduction saddles");
    assert_eq!(json["ledger"][0]["count"], 13);
}

#[test]
fn sweep_rows_are_ordered_and_fitted() {
    let (rows, (a, b)) = sweep(4, 4..=12, &BoundConfig::default()).unwrap();
    assert_eq!(
        rows.iter().map(|r| r.m).collect::<Vec<_>>(),
        (4..=12).collect::<Vec<_>>()
    );
    for r in &rows {
        assert!(a * r.m as i64 + b >= Rational64::from_integer(r.gap));
    }
    let csv = cobound::sweep_csv(&rows);
    assert!(csv.starts_with("m,k,N,lower,upper,gap\n"));
    assert_eq!(csv.lines().count(), rows.len() + 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn saddle_replay_matches_target(k in 2usize..=6, extra in 0usize..16) {
        let m = k + extra;
        let plan = saddle_reduce_torus(m, k).unwrap();
        let kl = m / k * k;
        prop_assert!(plan.is_consistent());
        prop_assert_eq!(plan.target, torus_braid(kl, kl + 1).unwrap());
        prop_assert!(plan.moves.iter().all(|mv| mv.kind == MoveKind::Saddle && mv.cost() == 1));
    }

    #[test]
    fn untwisting_plans_replay(k in prop::sample::select(vec![2usize, 3, 4, 6]), m in 2usize..=30) {
        prop_assume!(m >= k);
        let plan = build_theorem1_plan(m, k).unwrap();
        prop_assert!(plan.untwisting.is_consistent());
        prop_assert_eq!(plan.l, m / k);
        prop_assert_eq!(plan.untwisting.pos_twists() as usize, plan.l * (plan.l - 1) / 2);
    }

    #[test]
    fn reports_are_ordered(k in prop::sample::select(vec![2u64, 3, 4, 6]), m in 1u64..=24, bump in 0u64..30) {
        let mut big_n = min_admissible_n(m, k) + bump;
        while big_n.gcd(&k) != 1 {
            big_n += 1;
        }
        let r = bound_report(m, k, big_n, &BoundConfig::default()).unwrap();
        prop_assert!(0 <= r.lower && r.lower <= r.upper);
        prop_assert!(r.ledger.iter().all(|i| i.count >= 0));
        prop_assert_eq!(r.gap, r.upper - r.lower);
        prop_assert_eq!(r.l, m / k);
    }

    #[test]
    fn envelope_bounds_every_point(points in prop::collection::vec((1i64..40, -50i64..200), 1..12)) {
        let (a, b) = fit_affine_envelope(&points).unwrap();
        prop_assert!(a >= Rational64::from_integer(0));
        for &(m, g) in &points {
            prop_assert!(a * m + b >= Rational64::from_integer(g));
        }
    }

    #[test]
    fn envelope_recovers_a_line(a in 0i64..10, b in -20i64..20, ms in prop::collection::btree_set(1i64..50, 2..8)) {
        let points: Vec<_> = ms.iter().map(|&m| (m, a * m + b)).collect();
        prop_assert_eq!(fit_affine_envelope(&points).unwrap(), (Rational64::from_integer(a), Rational64::from_integer(b)));
    }
}
