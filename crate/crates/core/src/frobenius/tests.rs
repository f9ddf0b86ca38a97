use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::partition::partitions_of;

fn p(v: &[usize]) -> Partition {
    Partition::from_composition(v)
}

fn hprod(v: &[usize]) -> SymFunc {
    SymFunc::from_composition(Basis::H, v).unwrap()
}

fn eprod(v: &[usize]) -> SymFunc {
    SymFunc::from_composition(Basis::E, v).unwrap()
}

fn s(v: &[usize]) -> SymFunc {
    SymFunc::from_basis(Basis::S, &p(v))
}

#[test]
fn fsur_of_h22() {
    let expected = hprod(&[1])
        + hprod(&[2])
        + hprod(&[1, 1]).scale(&crate::symfunc::terms::q(3))
        + hprod(&[2, 1]).scale(&crate::symfunc::terms::q(2))
        + hprod(&[1, 1, 1])
        + hprod(&[2, 2]);
    assert_eq!(fsur(&hprod(&[2, 2])), expected);
    assert_eq!(fsur_h_direct(&p(&[2, 2])), expected);
    assert_eq!(functions_m(&[2, 2], false).len(), 9);
}

#[test]
fn fsur_of_e53() {
    let expected = eprod(&[5, 3])
        + &hprod(&[1]) * &eprod(&[4, 2])
        + &hprod(&[2]) * &eprod(&[3, 1])
        + &hprod(&[3]) * &eprod(&[2]);
    assert_eq!(fsur(&eprod(&[5, 3])), expected);
    assert_eq!(fsur_e_direct(&p(&[5, 3])), expected);
    assert_eq!(functions_m(&[5, 3], true).len(), 4);
}

#[test]
fn fsur_fixes_elementary() {
    for n in 0..=10 {
        assert_eq!(fsur(&SymFunc::e(n)), SymFunc::e(n), "n = {n}");
    }
}

#[test]
fn fsur_of_power_sums() {
    for n in 1..=12 {
        let expected: SymFunc = (1..=n).filter(|d| n % d == 0).map(SymFunc::p).sum();
        assert_eq!(fsur(&SymFunc::p(n)), expected, "n = {n}");
    }
}

#[test]
fn fsur_p_formula() {
    let p1 = SymFunc::p(1);
    let p2 = SymFunc::p(2);
    let expected = &p1 + &p2.scale(&crate::symfunc::terms::q(2)) + (&p1 + &p2).pow(2);
    assert_eq!(fsur_p_direct(&p(&[2, 2])), expected);
    for n in 1..=6 {
        for lam in partitions_of(n) {
            let by_op = fsur(&SymFunc::from_basis(Basis::P, &lam));
            assert_eq!(fsur_p_direct(&lam), by_op, "{lam}");
            assert_eq!(fsur_p_by_set_partitions(&lam), by_op, "{lam}");
        }
    }
}

#[test]
fn direct_formulas_match_operator() {
    for n in 1..=6 {
        for lam in partitions_of(n) {
            assert_eq!(
                fsur_h_direct(&lam),
                fsur(&SymFunc::from_basis(Basis::H, &lam))
            );
            assert_eq!(
                fsur_e_direct(&lam),
                fsur(&SymFunc::from_basis(Basis::E, &lam))
            );
        }
    }
}

#[test]
fn set_partition_counts() {
    let bell = [1, 1, 2, 5, 15, 52, 203];
    for (n, &b) in bell.iter().enumerate() {
        assert_eq!(set_partitions(n).len(), b);
    }
}

#[test]
fn inverse_routes_agree() {
    for n in 0..=6 {
        for lam in partitions_of(n) {
            let f = SymFunc::from_basis(Basis::S, &lam);
            let a = fsurinv_with(&f, InverseRoute::Cadogan);
            let b = fsurinv_with(&f, InverseRoute::Iteration);
            assert_eq!(a, b, "{lam}");
            assert_eq!(fsur(&a), f);
        }
    }
}

#[test]
fn inverse_examples() {
    assert_eq!(fsurinv(&SymFunc::h(2)), &SymFunc::h(2) - &SymFunc::e(1));
    let e1 = SymFunc::e(1);
    let expected = e1.pow(3) - e1.pow(2).scale(&crate::symfunc::terms::q(3))
        + e1.scale(&crate::symfunc::terms::q(2));
    assert_eq!(fsurinv(&e1.pow(3)), expected);
    assert_eq!(falling_factorial(3), expected);
    for r in 0..=8 {
        assert_eq!(fsurinv_h_direct(r), fsurinv(&SymFunc::h(r)), "r = {r}");
    }
}

#[test]
fn word_formula_for_e_products() {
    for lam in [
        &[1][..],
        &[2],
        &[1, 1],
        &[2, 1],
        &[3, 1],
        &[2, 2],
        &[2, 1, 1],
        &[3, 2],
        &[2, 2, 1],
    ] {
        let f = eprod(lam);
        assert_eq!(fsurinv_e_words(lam), fsurinv(&f), "{lam:?}");
    }
    // zeros in the composition are harmless
    assert_eq!(fsurinv_e_words(&[2, 0, 1]), fsurinv(&eprod(&[2, 1])));
    assert_eq!(fsurinv_e_words(&[1, 1]), &eprod(&[1, 1]) - &eprod(&[1]));
}

#[test]
fn product_formula_and_divisibility() {
    for (lam, k) in [
        (&[][..], 2),
        (&[2], 1),
        (&[2], 2),
        (&[2, 1], 1),
        (&[3], 2),
        (&[2, 2], 1),
    ] {
        let f = &eprod(lam) * &SymFunc::e(1).pow(k);
        let inv = fsurinv(&f);
        assert_eq!(fsurinveprod(lam, k), inv, "{lam:?} {k}");
        assert!(falling_factorial_divides(&inv, k));
    }
    let e1 = SymFunc::e(1);
    assert!(e1_power_divides(&(&e1.pow(2) * &SymFunc::e(3)), 2));
    assert!(!e1_power_divides(&(&e1.pow(2) + &SymFunc::e(2)), 1));
    assert!(!falling_factorial_divides(&e1.pow(2), 2));
    assert!(falling_factorial_divides(&(&e1.pow(2) - &e1), 2));
}

#[test]
fn frobenius_series_examples() {
    let fs = frobenius_series(&s(&[2]), 2);
    assert_eq!(
        fs.homogeneous(2).unwrap(),
        s(&[2]).scale(&crate::symfunc::terms::q(2)) + s(&[1, 1])
    );
    let r = coeff(&CoeffQuery::new(CoeffKind::R, p(&[2]), p(&[2]))).unwrap();
    assert_eq!(r, BigInt::from(2));
}

#[test]
fn fsur_expansion_matches() {
    for n in 0..=6 {
        for lam in partitions_of(n) {
            let f = SymFunc::from_basis(Basis::S, &lam);
            assert_eq!(fsur_expansion(&f), fsur(&f), "{lam}");
        }
    }
}

#[test]
fn coefficient_routes_agree() {
    for kind in CoeffKind::ALL {
        for m in 0..=4 {
            for lam in partitions_of(m) {
                for n in 0..=4 {
                    for mu in partitions_of(n) {
                        let q = CoeffQuery::new(kind, lam.clone(), mu.clone());
                        let a = coeff(&q).unwrap();
                        assert_eq!(a, coeff_by_operator(&q).unwrap(), "{kind} {lam} {mu}");
                        if let Some(t) = coeff_transposed(&q).unwrap() {
                            assert_eq!(a, t, "transposed {kind} {lam} {mu}");
                        }
                        if kind.is_nonnegative() {
                            assert!(a >= BigInt::from(0));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn surjective_and_stable_are_unitriangular() {
    for m in 0..=5 {
        for lam in partitions_of(m) {
            for n in m..=5 {
                for mu in partitions_of(n) {
                    let delta = BigInt::from((lam == mu) as i32);
                    let t = coeff(&CoeffQuery::new(CoeffKind::T, lam.clone(), mu.clone())).unwrap();
                    let a = coeff(&CoeffQuery::new(CoeffKind::A, lam.clone(), mu.clone())).unwrap();
                    assert_eq!(t, delta, "t {lam} {mu}");
                    assert_eq!(a, delta, "a {lam} {mu}");
                }
            }
        }
    }
    let t = coeff(&CoeffQuery::new(CoeffKind::T, p(&[1]), p(&[2]))).unwrap();
    assert_eq!(t, BigInt::from(0));
    assert!(!vanishing_check(VanishingKind::TBound, &p(&[1]), &p(&[2])));
}

#[test]
fn rows_and_columns() {
    let row = coeff_row(CoeffKind::T, &p(&[2, 1]), 3).unwrap();
    for (mu, v) in &row {
        let q = CoeffQuery::new(CoeffKind::T, p(&[2, 1]), mu.clone());
        assert_eq!(*v, coeff(&q).unwrap());
    }
    let col = coeff_column(CoeffKind::R, &p(&[1]), 4).unwrap();
    for (lam, v) in &col {
        let q = CoeffQuery::new(CoeffKind::R, lam.clone(), p(&[1]));
        assert_eq!(*v, coeff(&q).unwrap());
    }
    assert!(!col.is_empty());
}

#[test]
fn stable_matrices_are_inverse() {
    let a = stable_matrix(CoeffKind::A, 5).unwrap();
    let b = stable_matrix(CoeffKind::B, 5).unwrap();
    assert!(a.is_upper_unitriangular());
    assert!(b.is_upper_unitriangular());
    assert!(a.mul(&b).is_identity());
    assert_eq!(stable_matrix_inverse(&a).unwrap(), b);
    let by_op = CoeffMatrix::by_operator(CoeffKind::A, 5).unwrap();
    assert_eq!(a, by_op);
}

#[test]
fn matrix_serialization() {
    let a = stable_matrix(CoeffKind::A, 2).unwrap();
    let csv = a.to_csv();
    assert_eq!(csv.lines().count(), a.partitions.len() + 1);
    let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(json["kind"], "a");
    assert_eq!(json["rows"].as_array().unwrap().len(), a.partitions.len());
}

#[test]
fn vanishing_bounds_hold() {
    for (vk, ck) in [
        (VanishingKind::RBound, CoeffKind::R),
        (VanishingKind::TBound, CoeffKind::T),
        (VanishingKind::ABound, CoeffKind::A),
    ] {
        assert_eq!(vk.coeff_kind(), ck);
        for m in 0..=5 {
            for lam in partitions_of(m) {
                for n in 0..=5 {
                    for mu in partitions_of(n) {
                        if !vanishing_check(vk, &lam, &mu) {
                            let c = coeff(&CoeffQuery::new(ck, lam.clone(), mu.clone())).unwrap();
                            assert_eq!(c, BigInt::from(0), "{ck} {lam} {mu}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn durfee_witnesses() {
    assert!(durfee_criterion(&p(&[2, 2]), 2));
    let w = witness_search(&p(&[2, 2]), 2)
        .unwrap()
        .expect("witness exists");
    assert!(w.part(0) <= 2);
    let r = coeff(&CoeffQuery::new(CoeffKind::R, w.clone(), p(&[2, 2]))).unwrap();
    assert!(r > BigInt::from(0));

    assert!(!durfee_criterion(&p(&[3, 3, 3]), 2));
    assert_eq!(witness_search(&p(&[3, 3, 3]), 2).unwrap(), None);
}

#[test]
fn witness_search_matches_coefficients() {
    for mu in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[1, 1, 1])] {
        for k in 1..=3 {
            let found = vanishing::restriction_coefficients_with_short_rows(&mu, k).unwrap();
            for (lam, v) in &found {
                let q = CoeffQuery::new(CoeffKind::R, lam.clone(), mu.clone());
                assert_eq!(*v, coeff(&q).unwrap(), "{lam} {mu}");
            }
            // nothing is missed
            for size in 0..=k * mu.size() {
                for lam in partitions_of(size).into_iter().filter(|l| l.part(0) <= k) {
                    let c = coeff(&CoeffQuery::new(CoeffKind::R, lam.clone(), mu.clone())).unwrap();
                    let listed = found.iter().any(|(l, _)| *l == lam);
                    assert_eq!(listed, c != BigInt::from(0), "{lam} {mu} k={k}");
                }
            }
        }
    }
}

#[test]
fn stabilization() {
    for (lam, mu) in [
        (p(&[1]), p(&[])),
        (p(&[2]), p(&[1])),
        (p(&[2, 1]), p(&[1])),
        (p(&[2]), p(&[2])),
    ] {
        assert!(stabilization_check(&lam, &mu).unwrap(), "{lam} {mu}");
    }
}

#[test]
fn tilde_bases() {
    assert_eq!(tilde_h(&p(&[2])), &SymFunc::h(2) - &SymFunc::e(1));
    for n in 0..=4 {
        for lam in partitions_of(n) {
            let th = tilde_h(&lam);
            assert_eq!(fsur(&th), SymFunc::from_basis(Basis::H, &lam));
            let ts = tilde_s(&lam);
            let h = crate::symfunc::standard_series(StandardSeries::H, n);
            assert_eq!(fsur(&ts), s(lam.parts()).skewed_by(&h).unwrap());
            assert!(integral_output(&ts, Basis::S).is_ok());
        }
    }
}

#[test]
fn stable_inverse_round_trip() {
    for n in 0..=5 {
        for lam in partitions_of(n) {
            let f = SymFunc::from_basis(Basis::S, &lam);
            assert_eq!(stable_transform(&stable_transform_inverse(&f)), f);
        }
    }
}

#[test]
fn integrality_error_kind() {
    let half = SymFunc::p(2).scale(&num_rational::BigRational::new(1.into(), 2.into()));
    assert!(matches!(
        integral_output(&half, Basis::S),
        Err(Error::Integrality(_))
    ));
}

fn arb_h_product() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..4, 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fsur_keeps_degree_and_top(v in arb_h_product()) {
        let f = hprod(&v);
        let g = fsur(&f);
        prop_assert_eq!(g.degree(), f.degree());
        prop_assert_eq!(g.top_component(), f.top_component());
        prop_assert_eq!(fsurinv(&g), f);
    }

    #[test]
    fn fsur_is_integral_on_schur(v in arb_h_product()) {
        let lam = Partition::from_composition(&v);
        let g = fsur(&SymFunc::from_basis(Basis::S, &lam));
        for c in integral_output(&g, Basis::S).unwrap().values() {
            prop_assert!(*c >= BigInt::from(0));
        }
    }
}
