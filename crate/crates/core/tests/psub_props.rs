use std::collections::BTreeSet;

use proptest::prelude::*;
use smallchar::chevalley::Chevalley;
use smallchar::psub::*;

#[test]
fn brute_force_agrees_on_b2_and_g2() {
    for label in ["B2", "G2"] {
        let ch = Chevalley::of(label);
        for p in [2, 3] {
            for a in 0..2 {
                let low = lie_maximal_parabolic(&ch, a, p);
                let fast = intermediate_p_subalgebras(&ch, &low, DEFAULT_CAP).unwrap();
                let slow = intermediate_p_subalgebras_brute(&ch, &low).unwrap();
                assert_eq!(fast, slow, "{label} p={p} a{}", a + 1);
            }
        }
    }
}

#[test]
fn removing_a_short_root_breaks_the_ideal() {
    for (label, p) in [("B2", 2), ("B3", 2), ("C3", 2), ("F4", 2), ("G2", 3)] {
        let ch = Chevalley::of(label);
        let n = n_ideal(&ch, p).unwrap();
        assert!(is_p_ideal(&ch, &n).unwrap(), "{label}");
        for &g in n.roots() {
            assert!(!is_p_ideal(&ch, &n.without_root(g)).unwrap(), "{label} minus {}", ch.rs().root(g));
        }
    }
}

#[test]
fn cap_is_enforced() {
    let ch = Chevalley::of("G2");
    let low = lie_maximal_parabolic(&ch, 0, 2);
    assert!(matches!(intermediate_p_subalgebras(&ch, &low, 3), Err(smallchar::Error::Resource(_))));
}

fn subset(mask: u64, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_a_closure_operator(a in any::<u64>(), b in any::<u64>(), label in prop::sample::select(vec!["B2", "G2", "C3", "A3"]), p in prop::sample::select(vec![2u32, 3])) {
        let ch = Chevalley::of(label);
        let nr = ch.rs().num_roots();
        let levi = BTreeSet::from([0usize]);
        let base = lie_parabolic(&ch, &levi, p);
        let small = base.with_roots(subset(a, nr));
        let big = small.with_roots(subset(b, nr));
        let cs = p_closure_with(&ch, &small, Some(&levi));
        let cb = p_closure_with(&ch, &big, Some(&levi));
        prop_assert!(small.is_subspace_of(&cs));
        prop_assert!(cs.is_subspace_of(&cb));
        prop_assert_eq!(p_closure_with(&ch, &cs, Some(&levi)), cs.clone());
        prop_assert!(is_p_subalgebra(&ch, &cs).unwrap());
        prop_assert!(is_ad_stable(&ch, &cs, &levi));
    }
}
