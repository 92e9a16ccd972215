//! Intermediate p-subalgebras over every maximal parabolic up to rank 4.

use smallchar::chevalley::Chevalley;
use smallchar::psub::{intermediate_p_subalgebras, lie_maximal_parabolic, plus_short, DEFAULT_CAP};
use smallchar::rootsys::{all_types, Family};

#[test]
fn sweep_rank_at_most_4() {
    let mut bad = vec![];
    for t in all_types(4) {
        let ch = Chevalley::new(smallchar::rootsys::RootSystem::new(t), smallchar::chevalley::Form::SimplyConnected).unwrap();
        for p in [2u32, 3] {
            for a in 0..t.rank() {
                let low = lie_maximal_parabolic(&ch, a, p);
                let got = intermediate_p_subalgebras(&ch, &low, DEFAULT_CAP).unwrap();
                let dims: Vec<usize> = got.iter().map(|s| s.dim()).collect();
                let ok = if t.family() == Family::G && p == 2 && a == 0 {
                    dims == vec![10, 11]
                } else if t.edge_hypothesis(p) && !(t.family() == Family::G && p == 2) {
                    got == vec![plus_short(&ch, &low)]
                } else {
                    got.is_empty()
                };
                if !ok {
                    bad.push(format!("{t} p={p} a{}: dims {dims:?}", a + 1));
                }
            }
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}
