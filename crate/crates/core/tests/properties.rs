mod common;

use proptest::prelude::*;

use qchl::algebra::GradedLinearMap;
use qchl::catalog;
use qchl::checks::{check_hom_jacobi, check_multiplicative, check_skew};
use qchl::codec;
use qchl::constructions::{power_twist, twist_by_weak_morphism};
use qchl::grading::{Bicharacter, GradingGroup, GroupElement};
use qchl::linalg::{RatMatrix, RowEchelon};
use qchl::rational::{format_rational, parse_rational, qf, Q};

use common::{dense_kernel, dense_rank, eps_from_table, violated_identities};

fn rat() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Q> {
    rat().prop_filter("nonzero", |x| *x != qf(0, 1))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    // Small entries with many zeros, so rank deficiency actually occurs.
    proptest::collection::vec(prop_oneof![2 => Just(qf(0, 1)), 3 => rat()], rows * cols).prop_map(
        move |v| RatMatrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone()),
    )
}

/// A valid table on `ℤ^2`: diagonal `±1`, off-diagonal `t` and `1/t`.
fn free_bicharacter() -> impl Strategy<Value = Vec<Vec<Q>>> {
    (any::<bool>(), any::<bool>(), nonzero_rat()).prop_map(|(s0, s1, t)| {
        let sign = |s: bool| if s { qf(1, 1) } else { qf(-1, 1) };
        vec![vec![sign(s0), t.clone()], vec![qf(1, 1) / t, sign(s1)]]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rationals_print_and_parse_back(x in rat(), y in nonzero_rat()) {
        let z = x / y;
        prop_assert_eq!(parse_rational(&format_rational(&z)).unwrap(), z);
    }

    #[test]
    fn valid_free_tables_are_bicharacters(table in free_bicharacter(),
                                          a in (-4i64..=4, -4i64..=4),
                                          b in (-4i64..=4, -4i64..=4)) {
        let group = GradingGroup::new(2, vec![]).unwrap();
        let bc = Bicharacter::new(group, table.clone()).unwrap();
        let (ga, gb) = (vec![a.0, a.1], vec![b.0, b.1]);
        let lib = bc.eps(&GroupElement(ga.clone()), &GroupElement(gb.clone())).unwrap();
        prop_assert_eq!(&lib, &eps_from_table(&table, &ga, &gb));
        let back = bc.eps(&GroupElement(gb), &GroupElement(ga)).unwrap();
        prop_assert_eq!(lib * back, qf(1, 1));
    }

    #[test]
    fn asymmetric_free_tables_are_rejected(table in free_bicharacter(), bump in nonzero_rat()) {
        let mut table = table;
        table[0][1] = &table[0][1] * &bump;
        let group = GradingGroup::new(2, vec![]).unwrap();
        let elems: Vec<Vec<i64>> = (-1..=1).flat_map(|x| (-1..=1).map(move |y| vec![x, y])).collect();
        let oracle = |a: &[i64], b: &[i64]| eps_from_table(&table, a, b);
        let add = |a: &[i64], b: &[i64]| vec![a[0] + b[0], a[1] + b[1]];
        let bad = violated_identities(&elems, &oracle, &add);
        let accepted = Bicharacter::new(group, table.clone()).is_ok();
        prop_assert_eq!(accepted, bad == [false; 3]);
    }

    #[test]
    fn rank_matches_dense_oracle(m in matrix(4, 5)) {
        let rows = m.to_rows();
        prop_assert_eq!(m.rank(), dense_rank(&rows));
        let mut echelon = RowEchelon::new(5);
        for r in &rows {
            echelon.insert(r.clone());
        }
        prop_assert_eq!(echelon.rank(), m.rank());
        prop_assert_eq!(echelon.kernel_basis(), m.kernel_basis());
    }

    #[test]
    fn kernel_is_annihilated_and_full(m in matrix(3, 5)) {
        let k = m.kernel_basis();
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.cols(), dense_kernel(&m.to_rows(), 5).len());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(3, 3)) {
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), RatMatrix::identity(3));
                prop_assert_eq!(inv.mul(&m), RatMatrix::identity(3));
            }
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn sl2_family_is_hom_lie_and_round_trips(p in proptest::collection::vec(rat(), 6)) {
        let a = catalog::sl2_hom(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
        prop_assert!(check_skew(&a).passed);
        prop_assert!(check_hom_jacobi(&a).passed);
        let text = codec::algebra_to_json(&a);
        let back = codec::parse_algebra(&text).unwrap();
        prop_assert_eq!(codec::algebra_to_json(&back), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn nilpotent_family_round_trips(p in nonzero_rat(), q in nonzero_rat(),
                                    rest in proptest::collection::vec(rat(), 4)) {
        let a = catalog::nilpotent_l(&p, &q, &rest[0], &rest[1], &rest[2], &rest[3]).unwrap();
        let back = codec::parse_algebra(&codec::algebra_to_json(&a)).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn twisting_by_identity_is_neutral(p in proptest::collection::vec(rat(), 6)) {
        let a = catalog::sl2_hom(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
        let id = GradedLinearMap::endo(a.space(), RatMatrix::identity(3)).unwrap();
        let t = twist_by_weak_morphism(&a, &id).unwrap();
        prop_assert_eq!(t.alpha(), a.alpha());
        prop_assert_eq!(t.bracket(), a.bracket());
    }

    #[test]
    fn power_twists_stay_hom_lie(b in nonzero_rat(), n in 0u32..4) {
        let one = qf(1, 1);
        let zero = qf(0, 1);
        let a = catalog::nilpotent_l(&one, &one, &one, &b, &zero, &one).unwrap();
        prop_assume!(check_multiplicative(&a).passed);
        let t = power_twist(&a, n).unwrap();
        prop_assert!(check_skew(&t).passed && check_hom_jacobi(&t).passed);
        prop_assert_eq!(t.alpha(), &a.alpha().pow(n + 1));
    }
}
