use smallchar::matrixmodels::{
    is_member, root_space_matrix, so_kernel_check, verify_chevalley_match,
    verify_chevalley_match_with, Classical,
};
use smallchar::rootsys;

#[test]
fn b3_c3_agree_in_every_characteristic() {
    for kind in [Classical::B, Classical::C] {
        for p in [0, 2, 3, 5] {
            let r = verify_chevalley_match(3, p, kind).unwrap();
            assert!(r.ok(), "{kind:?} p={p}: {}", r.witness);
        }
    }
    let r = verify_chevalley_match(3, 0, Classical::B).unwrap();
    let s: Vec<i64> = r.witness["scalings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["s"].as_i64().unwrap())
        .collect();
    assert!(s.iter().all(|x| x.abs() == 1));
}

#[test]
fn every_two_entry_sign_flip_is_detected() {
    for (kind, label) in [(Classical::B, "B3"), (Classical::C, "C3")] {
        let rs = rootsys::rs(label);
        for g in 0..rs.num_roots() {
            let eps = rs.to_epsilon(rs.root(g)).unwrap();
            let m = root_space_matrix(kind, 3, &eps).unwrap();
            let nonzero = m.entries.iter().flatten().filter(|x| **x != 0).count();
            let r = verify_chevalley_match_with(3, 0, kind, Some(g)).unwrap();
            // A matrix with a single nonzero entry only changes by a scalar.
            assert_eq!(r.ok(), nonzero == 1, "{label} root {eps:?}");
        }
    }
}

#[test]
fn literal_symmetric_block_is_not_orthogonal_over_z() {
    // (E_12 + E_21)Ω in the upper-right block satisfies B = B^♯, not B = −B^♯.
    let mut m = vec![vec![0i64; 7]; 7];
    m[0][4 + 1] = 1;
    m[1][4 + 2] = 1;
    assert!(!is_member(Classical::B, 3, &m, 0));
    assert!(is_member(Classical::B, 3, &m, 2));
}

#[test]
fn so_kernel_n2_n3() {
    for n in [2, 3] {
        let r = so_kernel_check(n, 2).unwrap();
        assert!(r.ok(), "{}", r.witness);
        assert_eq!(r.witness["lie_kernel_dim"], 2 * n);
    }
    assert!(so_kernel_check(3, 3).is_err());
}
