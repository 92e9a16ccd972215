use proptest::prelude::*;
use smallchar::octonion::appendix::{
    check_displays_6, check_displays_7, quadric_and_cell_checks, Source,
};
use smallchar::octonion::*;
use smallchar::poly::{Poly, PolyMat};

fn oct(v: &[i64], p: u32) -> Octonion {
    Octonion::from_ints(v, 0, p)
}

fn scalar(x: &Poly) -> i64 {
    x.constant_term()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn norm_is_multiplicative_over_z(x in prop::collection::vec(-20i64..20, 8), y in prop::collection::vec(-20i64..20, 8)) {
        let (a, b) = (oct(&x, 0), oct(&y, 0));
        prop_assert_eq!(scalar(&norm(&multiply(&a, &b))), scalar(&norm(&a)) * scalar(&norm(&b)));
    }

    #[test]
    fn norm_is_multiplicative_over_f3(x in prop::collection::vec(0i64..3, 8), y in prop::collection::vec(0i64..3, 8)) {
        let (a, b) = (oct(&x, 3), oct(&y, 3));
        prop_assert_eq!(scalar(&norm(&multiply(&a, &b))), (scalar(&norm(&a)) * scalar(&norm(&b))).rem_euclid(3));
    }

    #[test]
    fn nu_is_alternating(x in prop::collection::vec(-5i64..5, 7), z in prop::collection::vec(-5i64..5, 7)) {
        let basis = v7_basis(VBasis::General);
        let to_oct = |c: &[i64]| {
            let mut o = [0i64; 8];
            for (k, b) in basis.iter().enumerate() {
                for i in 0..8 {
                    o[i] += c[k] * b[i];
                }
            }
            oct(&o, 0)
        };
        let (a, c) = (to_oct(&x), to_oct(&z));
        prop_assert!(trilinear_nu(&a, &a, &c).is_zero());
    }
}

#[test]
fn spec_products_and_nu() {
    let b = |i| Octonion::basis(i, 0, 0);
    assert_eq!(multiply(&b(E11), &b(E12)), b(E12));
    assert_eq!(scalar(&trilinear_nu(&b(F12), &b(F22), &b(E12))), 0);
    // The value 1 is a characteristic 2 statement; over ℤ it is −1.
    assert_eq!(scalar(&trilinear_nu(&b(F21), &b(F11), &b(E12))), -1);
    let b2 = |i| Octonion::basis(i, 0, 2);
    assert_eq!(scalar(&trilinear_nu(&b2(F21), &b2(F11), &b2(E12))), 1);
    assert!(norm(&b(E12)).is_zero());
}

#[test]
fn swap_isometry_is_not_an_automorphism() {
    // f12 <-> f21 and f22 <-> f11: an isometry of q outside G2.
    let perm = [6, 5, 2, 3, 4, 1, 0];
    let m: PolyMat = (0..7)
        .map(|i| (0..7).map(|j| Poly::constant(0, 0, (perm[j] == i) as i64)).collect())
        .collect();
    let c = is_octonion_automorphism(&m, VBasis::General).unwrap();
    assert!(c.preserves_norm && c.fixes_e);
    assert!(!c.failed_products.is_empty());
}

#[test]
fn displayed_u_minus_alpha1() {
    let m = root_subgroup_7(&[-1, 0], 1, 0, 0).unwrap();
    let l = |k: u32, c: i64| Poly::monomial(1, 0, vec![k], c);
    assert_eq!(m[3][0], l(1, 1));
    assert_eq!(m[4][1], l(1, 1));
    assert_eq!(m[5][2], l(1, -1));
    assert_eq!(m[6][0], l(2, 1));
    assert_eq!(m[6][3], l(1, 2));
    let z = m.iter().map(|r| r.iter().map(|x| x.eval(&[0])).collect::<Vec<_>>()).collect::<Vec<_>>();
    assert_eq!(z, smallchar::modp::identity(7));
    let w = printed_root_subgroup_6(&[-2, -1], 1, 0).unwrap();
    assert_eq!(w[3][2], Poly::monomial(1, 2, vec![2], 1));
}

#[test]
fn quotient_intertwines_families() {
    for g in G2_ROOTS {
        let m7 = root_subgroup_7_any(&g, 1, 0, 2).unwrap();
        assert_eq!(quotient_to_w(&m7), root_subgroup_6(&g, 1, 0).unwrap());
    }
}

#[test]
fn corrected_sets_pass_and_printed_failures_are_pinned() {
    for p in [0, 2] {
        assert!(check_displays_7(Source::Corrected, p).unwrap().iter().all(|c| c.ok()));
    }
    assert!(check_displays_6(Source::Corrected).unwrap().iter().all(|c| c.ok()));
    let failing = |v: Vec<appendix::DisplayCheck>| -> Vec<String> {
        v.into_iter().filter(|c| !c.ok()).map(|c| c.label).collect()
    };
    assert_eq!(
        failing(check_displays_7(Source::Printed, 0).unwrap()),
        ["[1,0]", "[2,1]", "[-2,-1]", "[1,1]", "[-1,-1]"]
    );
    assert_eq!(failing(check_displays_7(Source::Printed, 2).unwrap()), ["[2,1]"]);
    assert_eq!(failing(check_displays_6(Source::Printed).unwrap()), ["[0,1]", "[0,-1]", "[-3,-2]"]);
}

#[test]
fn torus_weights() {
    let t = torus_matrix(2, 3, 7).unwrap();
    // f22 sits in slot 5 with weight α1+α2.
    assert_eq!(t[5][5], 6);
    assert_eq!(t[3][3], 1);
    assert!(torus_matrix(0, 1, 7).is_err());
}

#[test]
fn quadric_report() {
    let r = quadric_and_cell_checks(2).unwrap();
    assert!(r.ok(), "{}", r.witness);
}
