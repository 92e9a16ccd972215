//! T-stable restricted subalgebras of `Lie G`: closures, enumeration of the
//! p-subalgebras between `Lie P` and `Lie G`, the ideal 𝔫 of short root spaces
//! and simplicity checks.
//!
//! A T-stable subspace is a set of full root spaces plus an F_p-subspace of the
//! toral part. Group stability is tested through the divided powers
//! `(ad X_β)ⁿ/n!`, one n at a time, which is the same as asking for
//! `exp(λ ad X_β)`-stability with λ an indeterminate.

mod f4;

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde_json::{json, Value};

use crate::chevalley::{Chevalley, LieElement};
use crate::error::{Error, Result};
use crate::modp::{self, Subspace};

pub use f4::f4_orbit_partition_check;

/// Default bound on closure computations during enumeration.
pub const DEFAULT_CAP: u64 = 1 << 24;

/// Span of full root spaces `𝔤_γ (γ ∈ roots)` plus a toral subspace, over F_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TSubspace {
    roots: BTreeSet<usize>,
    toral: Subspace,
}

impl TSubspace {
    pub fn new(roots: BTreeSet<usize>, toral: Subspace) -> Self {
        TSubspace { roots, toral }
    }

    pub fn zero(ch: &Chevalley, p: u32) -> Self {
        TSubspace { roots: BTreeSet::new(), toral: Subspace::zero(ch.rs().rank(), p) }
    }

    pub fn lie_g(ch: &Chevalley, p: u32) -> Self {
        TSubspace {
            roots: (0..ch.rs().num_roots()).collect(),
            toral: Subspace::full(ch.rs().rank(), p),
        }
    }

    pub fn lie_t(ch: &Chevalley, p: u32) -> Self {
        TSubspace { roots: BTreeSet::new(), toral: Subspace::full(ch.rs().rank(), p) }
    }

    pub fn lie_b(ch: &Chevalley, p: u32) -> Self {
        lie_parabolic(ch, &BTreeSet::new(), p)
    }

    pub fn roots(&self) -> &BTreeSet<usize> {
        &self.roots
    }

    pub fn toral(&self) -> &Subspace {
        &self.toral
    }

    pub fn p(&self) -> u32 {
        self.toral.modulus()
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.toral.rank()
    }

    pub fn has_root(&self, g: usize) -> bool {
        self.roots.contains(&g)
    }

    pub fn is_subspace_of(&self, o: &TSubspace) -> bool {
        self.roots.is_subset(&o.roots) && self.toral.is_subspace_of(&o.toral)
    }

    /// Adds root spaces (by index).
    pub fn with_roots(&self, extra: impl IntoIterator<Item = usize>) -> Self {
        let mut s = self.clone();
        s.roots.extend(extra);
        s
    }

    pub fn with_root_coeffs(&self, ch: &Chevalley, coeffs: &[&[i32]]) -> Result<Self> {
        let mut s = self.clone();
        for c in coeffs {
            let g = ch.rs().index_of(c).ok_or_else(|| Error::NotARoot(c.to_vec()))?;
            s.roots.insert(g);
        }
        Ok(s)
    }

    pub fn without_root(&self, g: usize) -> Self {
        let mut s = self.clone();
        s.roots.remove(&g);
        s
    }

    /// Basis vectors as Lie elements.
    pub fn basis(&self, ch: &Chevalley) -> Vec<LieElement> {
        let p = self.p();
        let mut out: Vec<LieElement> = self.roots.iter().map(|&g| ch.x(g, p)).collect();
        out.extend(self.toral.basis().iter().map(|h| ch.toral(h, p)));
        out
    }

    pub fn to_json(&self, ch: &Chevalley) -> Value {
        json!({
            "dim": self.dim(),
            "roots": self.roots.iter().map(|&g| ch.rs().root(g).to_string()).collect::<Vec<_>>(),
            "toral": self.toral.basis(),
        })
    }

    fn sort_key(&self) -> (usize, Vec<usize>, Vec<Vec<i64>>) {
        (self.dim(), self.roots.iter().copied().collect(), self.toral.basis().to_vec())
    }
}

/// `Lie P_I`: Lie T, every positive root space and the negative root spaces
/// supported in `levi`.
pub fn lie_parabolic(ch: &Chevalley, levi: &BTreeSet<usize>, p: u32) -> TSubspace {
    let rs = ch.rs();
    let roots = (0..rs.num_roots()).filter(|&g| rs.is_positive(g) || rs.supported_in(g, levi)).collect();
    TSubspace { roots, toral: Subspace::full(rs.rank(), p) }
}

/// `Lie P^α` for the maximal parabolic omitting simple root `alpha`.
pub fn lie_maximal_parabolic(ch: &Chevalley, alpha: usize, p: u32) -> TSubspace {
    let levi = (0..ch.rs().rank()).filter(|&i| i != alpha).collect();
    lie_parabolic(ch, &levi, p)
}

/// `𝔤_<` added to a subspace.
pub fn plus_short(ch: &Chevalley, s: &TSubspace) -> TSubspace {
    s.with_roots(ch.rs().short_set())
}

/// Roots β whose root groups lie in `P_J`: Φ⁺ and the negative roots supported in J.
pub fn parabolic_roots(ch: &Chevalley, levi: &BTreeSet<usize>) -> Vec<usize> {
    let rs = ch.rs();
    (0..rs.num_roots()).filter(|&g| rs.is_positive(g) || rs.supported_in(g, levi)).collect()
}

/// The simple roots whose negatives lie in `s`.
pub fn levi_of(ch: &Chevalley, s: &TSubspace) -> BTreeSet<usize> {
    let rs = ch.rs();
    (0..rs.rank()).filter(|&i| s.has_root(rs.neg(i))).collect()
}

enum Weight {
    Root(usize),
    Toral(Vec<i64>),
}

/// Which operations a closure is taken under.
struct Ops {
    brackets: bool,
    ideal: bool,
    group: Vec<usize>,
}

/// Precomputed divided-power actions `(ad X_β)ⁿ/n! · X_a` over ℤ.
struct Engine<'a> {
    ch: &'a Chevalley,
    p: u32,
    dp: Vec<Vec<Vec<(Weight, i64)>>>,
}

impl<'a> Engine<'a> {
    fn new(ch: &'a Chevalley, p: u32, betas: &[usize]) -> Self {
        let nr = ch.rs().num_roots();
        let mut dp: Vec<Vec<Vec<(Weight, i64)>>> = (0..nr).map(|_| vec![]).collect();
        for &b in betas {
            dp[b] = (0..nr).map(|a| Self::chain(ch, b, a)).collect();
        }
        Engine { ch, p, dp }
    }

    fn chain(ch: &Chevalley, b: usize, a: usize) -> Vec<(Weight, i64)> {
        let nr = ch.rs().num_roots();
        let xb = ch.x(b, 0);
        let mut v = ch.x(a, 0);
        let mut out = vec![];
        for n in 1..=3i64 {
            v = ch.bracket(&xb, &v);
            if v.is_zero() {
                break;
            }
            let fact = [1, 1, 2, 6][n as usize];
            let roots: Vec<(usize, i64)> = v.terms().filter(|&(i, _)| i < nr).collect();
            if let Some(&(i, c)) = roots.first() {
                assert_eq!(c % fact, 0, "divided power not integral");
                out.push((Weight::Root(i), c / fact));
            } else {
                let h: Vec<i64> = v.coeffs[nr..].iter().map(|&c| {
                    assert_eq!(c % fact, 0, "divided power not integral");
                    c / fact
                }).collect();
                out.push((Weight::Toral(h), 1));
            }
        }
        out
    }

    fn nonzero(&self, x: i64) -> bool {
        modp::reduce(x, self.p) != 0
    }

    fn close(&self, seed: &TSubspace, ops: &Ops) -> TSubspace {
        let rs = self.ch.rs();
        let nr = rs.num_roots();
        let mut s = seed.clone();
        loop {
            let mut changed = false;
            let add_root = |s: &mut TSubspace, g: usize, changed: &mut bool| {
                if s.roots.insert(g) {
                    *changed = true;
                }
            };
            // brackets of root vectors, either inside s or against all of g
            let partners: Vec<usize> =
                if ops.ideal { (0..nr).collect() } else if ops.brackets { s.roots.iter().copied().collect() } else { vec![] };
            let current: Vec<usize> = s.roots.iter().copied().collect();
            for &a in &partners {
                for &b in &current {
                    if b == rs.neg(a) {
                        if s.toral.insert(self.ch.coroot(a)) {
                            changed = true;
                        }
                    } else if let Some(c) = rs.sum(a, b) {
                        if self.nonzero(self.ch.n(a, b) as i64) {
                            add_root(&mut s, c, &mut changed);
                        }
                    }
                }
            }
            if ops.ideal {
                let tor = s.toral.basis().to_vec();
                for a in 0..nr {
                    if tor.iter().any(|h| self.nonzero(self.ch.eigen_of(a, h))) {
                        add_root(&mut s, a, &mut changed);
                    }
                }
            }
            for &b in &ops.group {
                let current: Vec<usize> = s.roots.iter().copied().collect();
                for a in current {
                    for (w, c) in &self.dp[b][a] {
                        if !self.nonzero(*c) {
                            continue;
                        }
                        match w {
                            Weight::Root(g) => add_root(&mut s, *g, &mut changed),
                            Weight::Toral(h) => {
                                if s.toral.insert(h) {
                                    changed = true;
                                }
                            }
                        }
                    }
                }
                let tor = s.toral.basis().to_vec();
                if tor.iter().any(|h| self.nonzero(self.ch.eigen_of(b, h))) {
                    add_root(&mut s, b, &mut changed);
                }
            }
            if !changed {
                return s;
            }
        }
    }

    /// Whether `s` is stable under every operation without computing the closure.
    fn is_closed(&self, s: &TSubspace, ops: &Ops) -> bool {
        self.close(s, ops) == *s
    }
}

fn check_p(ch: &Chevalley, p: u32) -> Result<()> {
    if p != 2 && p != 3 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    let _ = ch;
    Ok(())
}

/// Bracket closure of the basis plus closure of each basis vector under the
/// p-th power map.
pub fn is_p_subalgebra(ch: &Chevalley, s: &TSubspace) -> Result<bool> {
    let p = s.p();
    check_p(ch, p)?;
    let e = Engine::new(ch, p, &[]);
    if !e.is_closed(s, &Ops { brackets: true, ideal: false, group: vec![] }) {
        return Ok(false);
    }
    for v in s.basis(ch) {
        if !contains_element(ch, s, &ch.p_power(&v)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A p-subalgebra with `[Lie G, S] ⊆ S`.
pub fn is_p_ideal(ch: &Chevalley, s: &TSubspace) -> Result<bool> {
    if !is_p_subalgebra(ch, s)? {
        return Ok(false);
    }
    let e = Engine::new(ch, s.p(), &[]);
    Ok(e.is_closed(s, &Ops { brackets: true, ideal: true, group: vec![] }))
}

/// Membership of an arbitrary element in a T-stable subspace.
pub fn contains_element(ch: &Chevalley, s: &TSubspace, x: &LieElement) -> bool {
    let nr = ch.rs().num_roots();
    x.terms().all(|(i, _)| i >= nr || s.has_root(i)) && s.toral.contains(&x.coeffs[nr..])
}

/// Stability under `Ad(P_J)`, i.e. under T and the root groups of `P_J`.
pub fn is_ad_stable(ch: &Chevalley, s: &TSubspace, levi: &BTreeSet<usize>) -> bool {
    let group = parabolic_roots(ch, levi);
    let e = Engine::new(ch, s.p(), &group);
    e.is_closed(s, &Ops { brackets: false, ideal: false, group })
}

/// Smallest T-stable p-subalgebra containing `seed` that is also stable under
/// `Ad(P_J)` when `levi = Some(J)`.
pub fn p_closure_with(ch: &Chevalley, seed: &TSubspace, levi: Option<&BTreeSet<usize>>) -> TSubspace {
    let group = levi.map(|j| parabolic_roots(ch, j)).unwrap_or_default();
    let e = Engine::new(ch, seed.p(), &group);
    e.close(seed, &Ops { brackets: true, ideal: false, group })
}

/// `p_closure_with` where J is read off the seed: if the seed contains
/// `Lie P_J` for `J = {i : −α_i ∈ seed}` the closure is taken `Ad(P_J)`-stable,
/// and otherwise it is the plain subalgebra closure.
pub fn p_closure(ch: &Chevalley, seed: &TSubspace) -> TSubspace {
    match seed_levi(ch, seed) {
        Some(j) => p_closure_with(ch, seed, Some(&j)),
        None => p_closure_with(ch, seed, None),
    }
}

fn seed_levi(ch: &Chevalley, seed: &TSubspace) -> Option<BTreeSet<usize>> {
    let j = levi_of(ch, seed);
    if lie_parabolic(ch, &j, seed.p()).is_subspace_of(seed) {
        return Some(j);
    }
    let b = BTreeSet::new();
    lie_parabolic(ch, &b, seed.p()).is_subspace_of(seed).then_some(b)
}

fn canonical(mut v: Vec<TSubspace>) -> Vec<TSubspace> {
    v.sort_by_key(|s| s.sort_key());
    v
}

fn require_lower(ch: &Chevalley, lower: &TSubspace) -> Result<BTreeSet<usize>> {
    let p = lower.p();
    check_p(ch, p)?;
    if !TSubspace::lie_b(ch, p).is_subspace_of(lower) {
        return Err(Error::Precondition("lower subspace must contain Lie B".into()));
    }
    let j = levi_of(ch, lower);
    if !is_ad_stable(ch, lower, &j) || !is_p_subalgebra(ch, lower)? {
        return Err(Error::Precondition("lower subspace must be an Ad(P_J)-stable p-subalgebra".into()));
    }
    Ok(j)
}

/// All `Ad(P_J)`-stable T-stable p-subalgebras strictly between `lower` and
/// `Lie G`, where `P_J` is the parabolic with `Lie P_J = lower`'s reduced part.
/// Search: breadth-first over closures of one-root extensions, which reaches
/// every such subalgebra since each is a union of such closures.
pub fn intermediate_p_subalgebras(ch: &Chevalley, lower: &TSubspace, cap: u64) -> Result<Vec<TSubspace>> {
    let j = require_lower(ch, lower)?;
    let group = parabolic_roots(ch, &j);
    let e = Engine::new(ch, lower.p(), &group);
    let ops = Ops { brackets: true, ideal: false, group };
    let full = TSubspace::lie_g(ch, lower.p());
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut queue = VecDeque::from([lower.clone()]);
    let mut found = vec![];
    let mut work = 0u64;
    while let Some(c) = queue.pop_front() {
        for r in 0..ch.rs().num_roots() {
            if c.has_root(r) {
                continue;
            }
            work += 1;
            if work > cap {
                return Err(Error::Resource(format!("enumeration exceeded {cap} closure computations")));
            }
            let s = e.close(&c.with_roots([r]), &ops);
            if s == full || !seen.insert(s.roots.clone()) {
                continue;
            }
            found.push(s.clone());
            queue.push_back(s);
        }
    }
    Ok(canonical(found))
}

/// Unpruned oracle: tests every root set between `lower` and `Lie G`.
pub fn intermediate_p_subalgebras_brute(ch: &Chevalley, lower: &TSubspace) -> Result<Vec<TSubspace>> {
    let j = require_lower(ch, lower)?;
    let missing: Vec<usize> = (0..ch.rs().num_roots()).filter(|g| !lower.has_root(*g)).collect();
    if missing.len() > 24 {
        return Err(Error::Resource(format!("2^{} subsets", missing.len())));
    }
    let mut out = vec![];
    for mask in 1u64..(1u64 << missing.len()) - 1 {
        let s = lower.with_roots(missing.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &g)| g));
        if is_p_subalgebra(ch, &s)? && is_ad_stable(ch, &s, &j) {
            out.push(s);
        }
    }
    Ok(canonical(out))
}

/// `𝔫`: the short root spaces plus the span of the short coroots, in the
/// toral coordinates of `ch`'s form.
pub fn n_ideal(ch: &Chevalley, p: u32) -> Result<TSubspace> {
    let rs = ch.rs();
    let t = rs.simple_type();
    if !t.edge_hypothesis(p) {
        return Err(Error::Precondition(format!("no such ideal: {t} at p = {p} fails the edge hypothesis")));
    }
    let short = rs.short_set();
    let toral = Subspace::spanned(rs.rank(), p, &short.iter().map(|&g| ch.coroot(g).to_vec()).collect::<Vec<_>>());
    Ok(TSubspace { roots: short, toral })
}

/// Toral vectors commuting with all of `Lie G`.
pub fn toral_center(ch: &Chevalley, p: u32) -> Subspace {
    let rs = ch.rs();
    let m: Vec<Vec<i64>> = (0..rs.num_roots()).map(|a| (0..rs.rank()).map(|k| ch.eigen(a, k)).collect()).collect();
    Subspace::spanned(rs.rank(), p, &modp::nullspace(&m, rs.rank(), p))
}

/// No proper nonzero T-stable ideal and trivial center. A T-stable ideal not
/// inside the center contains some `X_γ`, so it suffices to generate the
/// ideal of each root vector.
pub fn is_simple_restricted(ch: &Chevalley, p: u32) -> Result<bool> {
    check_p(ch, p)?;
    if toral_center(ch, p).rank() > 0 {
        return Ok(false);
    }
    let e = Engine::new(ch, p, &[]);
    let ops = Ops { brackets: true, ideal: true, group: vec![] };
    let full = TSubspace::lie_g(ch, p);
    for g in 0..ch.rs().num_roots() {
        let seed = TSubspace::zero(ch, p).with_roots([g]);
        if e.close(&seed, &ops) != full {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximum rank accepted by [`minimal_g_submodule_check`].
pub const SUBMODULE_RANK_CAP: usize = 4;

/// Every G-submodule of `Lie G` not inside the center contains `𝔫`.
///
/// A T-stable G-submodule not inside the center contains a root vector or a
/// non-central toral vector, so it is enough to check the G-submodule
/// generated by each `X_γ` and by each non-central toral vector over F_p.
pub fn minimal_g_submodule_check(ch: &Chevalley, p: u32) -> Result<bool> {
    let rs = ch.rs();
    if rs.rank() > SUBMODULE_RANK_CAP {
        return Err(Error::Resource(format!("rank {} exceeds cap {SUBMODULE_RANK_CAP}", rs.rank())));
    }
    let n = n_ideal(ch, p)?;
    let group: Vec<usize> = (0..rs.num_roots()).collect();
    let e = Engine::new(ch, p, &group);
    let ops = Ops { brackets: false, ideal: false, group };
    for g in 0..rs.num_roots() {
        let m = e.close(&TSubspace::zero(ch, p).with_roots([g]), &ops);
        if !n.is_subspace_of(&m) {
            return Ok(false);
        }
    }
    let center = toral_center(ch, p);
    for h in Subspace::full(rs.rank(), p).elements() {
        if center.contains(&h) {
            continue;
        }
        let seed = TSubspace { roots: BTreeSet::new(), toral: Subspace::spanned(rs.rank(), p, &[h]) };
        if !n.is_subspace_of(&e.close(&seed, &ops)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::Form;
    use crate::rootsys::rs;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn parabolic_dims() {
        let g2 = Chevalley::of("G2");
        assert_eq!(lie_parabolic(&g2, &set(&[1]), 2).dim(), 9);
        assert_eq!(lie_parabolic(&g2, &set(&[0, 1]), 2).dim(), 14);
        let c3 = Chevalley::of("C3");
        let p = lie_parabolic(&c3, &set(&[0, 1]), 2);
        let excluded: Vec<usize> = (0..18).filter(|g| !p.has_root(*g)).collect();
        assert_eq!(excluded.len(), 6);
        assert!(excluded.iter().all(|&g| !c3.rs().is_positive(g) && c3.rs().root(g).0[2] != 0));
    }

    #[test]
    fn g2_h_and_l() {
        let ch = Chevalley::of("G2");
        let low = lie_maximal_parabolic(&ch, 0, 2);
        let h = low.with_root_coeffs(&ch, &[&[-2, -1]]).unwrap();
        let l = low.with_root_coeffs(&ch, &[&[-1, 0], &[-1, -1]]).unwrap();
        assert!(is_p_subalgebra(&ch, &h).unwrap() && is_p_subalgebra(&ch, &l).unwrap());
        assert!(!is_p_ideal(&ch, &h).unwrap() && !is_p_ideal(&ch, &l).unwrap());
        assert_eq!(p_closure(&ch, &low.with_root_coeffs(&ch, &[&[-1, 0]]).unwrap()), l);
        let found = intermediate_p_subalgebras(&ch, &low, DEFAULT_CAP).unwrap();
        assert_eq!(found, vec![h, l]);
    }

    #[test]
    fn c3_examples() {
        let ch = Chevalley::of("C3");
        let low = lie_maximal_parabolic(&ch, 2, 2);
        assert_eq!(intermediate_p_subalgebras(&ch, &low, DEFAULT_CAP).unwrap(), vec![plus_short(&ch, &low)]);
        let low3 = lie_maximal_parabolic(&ch, 2, 3);
        assert!(intermediate_p_subalgebras(&ch, &low3, DEFAULT_CAP).unwrap().is_empty());
        // −2ε1 in ε-coordinates
        let r = ch.rs().from_epsilon(&[-2, 0, 0]).unwrap();
        let seed = low.with_roots([ch.rs().index_of_root(&r).unwrap()]);
        assert_eq!(p_closure(&ch, &seed), TSubspace::lie_g(&ch, 2));
    }

    #[test]
    fn type_a_has_nothing() {
        let ch = Chevalley::of("A3");
        for p in [2, 3] {
            let low = lie_maximal_parabolic(&ch, 1, p);
            assert!(intermediate_p_subalgebras(&ch, &low, DEFAULT_CAP).unwrap().is_empty());
        }
    }

    #[test]
    fn n_ideal_examples() {
        let f4 = Chevalley::of("F4");
        let n = n_ideal(&f4, 2).unwrap();
        assert_eq!(n.roots().len(), 24);
        assert_eq!(n.toral(), &Subspace::spanned(4, 2, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]));
        let b2 = Chevalley::of("B2");
        let n = n_ideal(&b2, 2).unwrap();
        assert_eq!(n.dim(), 5);
        assert!(is_p_ideal(&b2, &n).unwrap());
        let g2 = Chevalley::of("G2");
        let n = n_ideal(&g2, 3).unwrap();
        let want: BTreeSet<usize> =
            [[1, 0], [1, 1], [2, 1], [-1, 0], [-1, -1], [-2, -1]].iter().map(|c| g2.rs().index_of(c).unwrap()).collect();
        assert_eq!(n.roots(), &want);
        assert!(n_ideal(&Chevalley::of("A3"), 2).is_err());
        assert!(n_ideal(&g2, 2).is_err());
    }

    #[test]
    fn so_form_short_roots_are_ideal() {
        let ch = Chevalley::new(rs("B3"), Form::Adjoint).unwrap();
        let s = TSubspace::new(ch.rs().short_set(), Subspace::zero(3, 2));
        assert!(is_p_ideal(&ch, &s).unwrap());
    }

    #[test]
    fn simplicity() {
        assert!(is_simple_restricted(&Chevalley::of("G2"), 2).unwrap());
        assert!(is_simple_restricted(&Chevalley::of("C3"), 3).unwrap());
        assert!(!is_simple_restricted(&Chevalley::of("B2"), 2).unwrap());
    }

    #[test]
    fn submodules() {
        assert!(minimal_g_submodule_check(&Chevalley::of("B2"), 2).unwrap());
        assert!(minimal_g_submodule_check(&Chevalley::of("G2"), 3).unwrap());
        assert!(matches!(minimal_g_submodule_check(&Chevalley::of("A2"), 2), Err(Error::Precondition(_))));
    }
}
