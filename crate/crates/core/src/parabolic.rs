//! φ-functions of parabolic subgroup schemes.
//!
//! A parabolic P containing B is determined by `φ: Φ⁺ → ℕ ∪ {∞}` with
//! `U_{−γ} ∩ P = u_{−γ}(α_{p^φ(γ)})`. Intersections are pointwise minima.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chevalley::Chevalley;
use crate::error::{Error, Result};
use crate::isogeny::KernelKind;
use crate::psub::TSubspace;
use crate::rootsys::{Family, RootSystem, SimpleType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PhiValue {
    Fin(u32),
    Inf,
}

impl PhiValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            PhiValue::Fin(m) => Some(m),
            PhiValue::Inf => None,
        }
    }
}

impl fmt::Display for PhiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiValue::Fin(m) => write!(f, "{m}"),
            PhiValue::Inf => write!(f, "inf"),
        }
    }
}

impl Serialize for PhiValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PhiValue::Fin(m) => s.serialize_u32(*m),
            PhiValue::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for PhiValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u32),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(m) => Ok(PhiValue::Fin(m)),
            Raw::S(s) if s == "inf" => Ok(PhiValue::Inf),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad φ value {s:?}"))),
        }
    }
}

/// Values on the positive roots, in root-system order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiFunction {
    ty: SimpleType,
    p: u32,
    values: Vec<PhiValue>,
}

#[derive(Serialize, Deserialize)]
struct PhiEntry {
    root: Vec<i32>,
    value: PhiValue,
}

#[derive(Serialize, Deserialize)]
struct PhiDoc {
    #[serde(rename = "type")]
    ty: SimpleType,
    p: u32,
    values: Vec<PhiEntry>,
}

impl PhiFunction {
    pub fn new(rs: &RootSystem, p: u32, values: Vec<PhiValue>) -> Result<Self> {
        if values.len() != rs.num_positive() {
            return Err(Error::Precondition(format!("need {} values, got {}", rs.num_positive(), values.len())));
        }
        Ok(PhiFunction { ty: rs.simple_type(), p, values })
    }

    pub fn constant(rs: &RootSystem, p: u32, v: PhiValue) -> Self {
        PhiFunction { ty: rs.simple_type(), p, values: vec![v; rs.num_positive()] }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn values(&self) -> &[PhiValue] {
        &self.values
    }

    pub fn get(&self, g: usize) -> PhiValue {
        self.values[g]
    }

    pub fn at(&self, rs: &RootSystem, coeffs: &[i32]) -> Result<PhiValue> {
        let g = rs.index_of(coeffs).filter(|&g| rs.is_positive(g)).ok_or_else(|| Error::NotARoot(coeffs.to_vec()))?;
        Ok(self.values[g])
    }

    /// Simple roots where φ is ∞: the Levi of the reduced part.
    pub fn levi(&self) -> BTreeSet<usize> {
        (0..self.ty.rank()).filter(|&i| self.values[i] == PhiValue::Inf).collect()
    }

    pub fn to_json(&self, rs: &RootSystem) -> String {
        let doc = PhiDoc {
            ty: self.ty,
            p: self.p,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(g, &value)| PhiEntry { root: rs.root(g).0.clone(), value })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    /// Parses `{"type", "p", "values": [{"root", "value"}]}`; every positive
    /// root must appear exactly once.
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: PhiDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.p < 2 {
            return Err(Error::Parse(format!("bad characteristic {}", doc.p)));
        }
        let rs = RootSystem::new(doc.ty);
        let mut values = vec![None; rs.num_positive()];
        for e in doc.values {
            let g = rs
                .index_of(&e.root)
                .filter(|&g| rs.is_positive(g))
                .ok_or_else(|| Error::Parse(format!("{:?} is not a positive root", e.root)))?;
            if values[g].replace(e.value).is_some() {
                return Err(Error::Parse(format!("duplicate root {:?}", e.root)));
            }
        }
        let values = values.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| Error::Parse("missing roots".into()))?;
        Ok(PhiFunction { ty: doc.ty, p: doc.p, values })
    }
}

/// `φ(γ) = min{f(α) : α ∈ Supp γ}`.
pub fn phi_from_simple(rs: &RootSystem, p: u32, f: &[PhiValue]) -> Result<PhiFunction> {
    if f.len() != rs.rank() {
        return Err(Error::Precondition("one value per simple root".into()));
    }
    let values = rs
        .positive_roots()
        .iter()
        .map(|r| r.0.iter().zip(f).filter(|(&c, _)| c != 0).map(|(_, &v)| v).min().expect("nonzero root"))
        .collect();
    PhiFunction::new(rs, p, values)
}

/// φ of `K · P^α ∩ ⋂_{β ∈ extra} P^β` for `K` a Frobenius kernel or `N_r`.
pub fn phi_of_fattened(rs: &RootSystem, p: u32, kernel: KernelKind, alpha: usize, extra: &BTreeSet<usize>) -> Result<PhiFunction> {
    let t = rs.simple_type();
    if alpha >= t.rank() || extra.iter().any(|&b| b >= t.rank() || b == alpha) {
        return Err(Error::Precondition("simple roots out of range".into()));
    }
    if matches!(kernel, KernelKind::N(_)) && !t.edge_hypothesis(p) {
        return Err(Error::Precondition(format!("N_r needs the edge hypothesis; {t} at p = {p} fails it")));
    }
    let values = (0..rs.num_positive())
        .map(|g| {
            let c = &rs.root(g).0;
            if extra.iter().any(|&b| c[b] != 0) {
                PhiValue::Fin(0)
            } else if c[alpha] == 0 {
                PhiValue::Inf
            } else {
                match kernel {
                    KernelKind::Frobenius(m) => PhiValue::Fin(m),
                    KernelKind::N(r) if rs.is_short(g) => PhiValue::Fin(r + 1),
                    KernelKind::N(r) => PhiValue::Fin(r),
                }
            }
        })
        .collect();
    PhiFunction::new(rs, p, values)
}

/// Pointwise minimum (the intersection of parabolics).
pub fn intersect(a: &PhiFunction, b: &PhiFunction) -> Result<PhiFunction> {
    if a.ty != b.ty || a.p != b.p {
        return Err(Error::Precondition("φ-functions of different groups".into()));
    }
    Ok(PhiFunction { ty: a.ty, p: a.p, values: a.values.iter().zip(&b.values).map(|(x, y)| *x.min(y)).collect() })
}

/// The assignment on simple roots if φ is a min over supports, i.e. the
/// parabolic is an intersection of Frobenius-fattened maximal parabolics.
pub fn is_wenzel_type(rs: &RootSystem, phi: &PhiFunction) -> Option<Vec<PhiValue>> {
    let f: Vec<PhiValue> = phi.values[..rs.rank()].to_vec();
    let back = phi_from_simple(rs, phi.p, &f).ok()?;
    (back.values == phi.values).then_some(f)
}

/// φ of the pull-back of `N_r P^α ∩ P^β` along `π: Ḡ → G`, on the roots of Ḡ:
/// `Ḡ_{r+1} P^ᾱ ∩ N_Ḡ P^β̄`.
pub fn pullback_phi(rs: &RootSystem, p: u32, r: u32, alpha: usize, beta: usize) -> Result<(RootSystem, PhiFunction)> {
    let t = rs.simple_type();
    let dual = RootSystem::new(t.dual());
    let (a, b) = (t.dual_index(alpha), t.dual_index(beta));
    let none = BTreeSet::new();
    let f = phi_of_fattened(&dual, p, KernelKind::Frobenius(r + 1), a, &none)?;
    let n = phi_of_fattened(&dual, p, KernelKind::N(0), b, &none)?;
    let phi = intersect(&f, &n)?;
    Ok((dual, phi))
}

/// A short and a long positive root with α in the support and β not.
pub fn rank2_witness(rs: &RootSystem, alpha: usize, beta: usize) -> Option<(usize, usize)> {
    let locus = |g: &usize| rs.root(*g).0[alpha] != 0 && rs.root(*g).0[beta] == 0;
    let short = (0..rs.num_positive()).filter(locus).find(|&g| rs.is_short(g))?;
    let long = (0..rs.num_positive()).filter(locus).find(|&g| rs.is_long(g))?;
    Some((short, long))
}

/// Pairs `(α, β)` for which `N_r P^α ∩ P^β` and its pull-back along the very
/// special isogeny are both not of Wenzel type.
pub fn rank2_nonwenzel_pairs(rs: &RootSystem, p: u32) -> Result<Vec<(usize, usize)>> {
    let t = rs.simple_type();
    if !t.edge_hypothesis(p) {
        return Err(Error::Precondition(format!("{t} at p = {p} fails the edge hypothesis")));
    }
    let mut out = vec![];
    for a in 0..t.rank() {
        for b in (0..t.rank()).filter(|&b| b != a) {
            if rank2_witness(rs, a, b).is_none() {
                continue;
            }
            // the pull-back is never of Wenzel type: the highest root and the
            // highest short root both have full support
            let (dual, pb) = pullback_phi(rs, p, 0, a, b)?;
            if is_wenzel_type(&dual, &pb).is_some() {
                return Err(Error::Inconsistency(format!("pull-back for ({a}, {b}) is of Wenzel type")));
            }
            out.push((a, b));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Rank1Class {
    Reduced,
    Frobenius { m: u32 },
    VerySpecialN { m: u32 },
    /// Only for G2 at p = 2 over `P^{α1}`; carries the values on the α1-locus.
    Exotic { values: Vec<PhiValue> },
}

impl fmt::Display for Rank1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank1Class::Reduced => write!(f, "reduced"),
            Rank1Class::Frobenius { m } => write!(f, "frobenius {m}"),
            Rank1Class::VerySpecialN { m } => write!(f, "very_special_N {m}"),
            Rank1Class::Exotic { .. } => write!(f, "exotic"),
        }
    }
}

/// Matches φ (with maximal reduced part `P^α`) against `G_m P^α` and `N_m P^α`.
pub fn classify_rank1(rs: &RootSystem, phi: &PhiFunction) -> Result<Rank1Class> {
    let t = rs.simple_type();
    let p = phi.p;
    let open: Vec<usize> = (0..t.rank()).filter(|&i| phi.values[i] != PhiValue::Inf).collect();
    let [alpha] = open[..] else {
        return Err(Error::Precondition(format!("reduced part is not maximal ({} simple roots with finite φ)", open.len())));
    };
    let mut short = BTreeSet::new();
    let mut long = BTreeSet::new();
    let mut locus_values = vec![];
    for g in 0..rs.num_positive() {
        let v = phi.values[g];
        if rs.root(g).0[alpha] == 0 {
            if v != PhiValue::Inf {
                return Err(Error::Precondition(format!("φ is finite off the α-locus at {}", rs.root(g))));
            }
            continue;
        }
        let m = v.finite().ok_or_else(|| Error::Precondition(format!("φ is ∞ at {}", rs.root(g))))?;
        locus_values.push(v);
        if rs.is_short(g) { short.insert(m) } else { long.insert(m) };
    }
    let all: BTreeSet<u32> = short.union(&long).copied().collect();
    if all.len() == 1 {
        let m = *all.first().expect("value");
        return Ok(if m == 0 { Rank1Class::Reduced } else { Rank1Class::Frobenius { m } });
    }
    if t.edge_hypothesis(p) && short.len() == 1 && long.len() == 1 {
        let (s, l) = (*short.first().expect("s"), *long.first().expect("l"));
        if s == l + 1 {
            return Ok(Rank1Class::VerySpecialN { m: l });
        }
    }
    if t.family() == Family::G && p == 2 && alpha == 0 {
        return Ok(Rank1Class::Exotic { values: locus_values });
    }
    Err(Error::Inconsistency(format!("φ on {t} at p = {p} matches no kernel shape over P^α{}", alpha + 1)))
}

/// `|U_P^−| = Π p^φ(γ)` over the finite values: the degree of `G/P_red → G/P`.
pub fn quotient_degree(phi: &PhiFunction) -> Result<u128> {
    if phi.values.iter().all(|v| *v == PhiValue::Inf) {
        return Err(Error::Precondition("φ is ∞ everywhere".into()));
    }
    let mut d: u128 = 1;
    for v in &phi.values {
        if let PhiValue::Fin(m) = v {
            let f = (phi.p as u128).checked_pow(*m).ok_or_else(|| Error::Resource("degree overflow".into()))?;
            d = d.checked_mul(f).ok_or_else(|| Error::Resource("degree overflow".into()))?;
        }
    }
    Ok(d)
}

/// φ of the parabolic `P = K · P_red` where K has height one and
/// `Lie P = s`: ∞ on the Levi, 1 where `𝔤_{−γ} ⊆ s`, 0 elsewhere.
pub fn phi_of_height_one(ch: &Chevalley, levi: &BTreeSet<usize>, s: &TSubspace) -> Result<PhiFunction> {
    let rs = ch.rs();
    let values = (0..rs.num_positive())
        .map(|g| {
            if rs.supported_in(g, levi) {
                PhiValue::Inf
            } else if s.has_root(rs.neg(g)) {
                PhiValue::Fin(1)
            } else {
                PhiValue::Fin(0)
            }
        })
        .collect();
    PhiFunction::new(rs, s.p(), values)
}

/// The kernel shapes `reduced ⊂ N_0 ⊂ F_1 ⊂ N_1 ⊂ F_2 ⊂ …` up to `F_top`
/// (N terms only under the edge hypothesis).
fn kernel_chain(t: SimpleType, p: u32, top: u32) -> Vec<KernelKind> {
    let mut out = vec![KernelKind::Frobenius(0)];
    for m in 0..top {
        if t.edge_hypothesis(p) {
            out.push(KernelKind::N(m));
        }
        out.push(KernelKind::Frobenius(m + 1));
    }
    out
}

fn class_of(k: KernelKind) -> Rank1Class {
    match k {
        KernelKind::Frobenius(0) => Rank1Class::Reduced,
        KernelKind::Frobenius(m) => Rank1Class::Frobenius { m },
        KernelKind::N(m) => Rank1Class::VerySpecialN { m },
    }
}

/// The parabolic `Q_α ⊇ P` with reduced part `P^α`: the smallest kernel
/// shape whose φ dominates `φ_P` on the α-locus.
///
/// Only valid when `φ_P` is reduced or of the form `φ_{K·P^a ∩ ⋂ P^b}`.
pub fn contraction_target(rs: &RootSystem, phi: &PhiFunction, alpha: usize) -> Result<Rank1Class> {
    let t = rs.simple_type();
    let p = phi.p;
    if alpha >= t.rank() || phi.values[alpha] == PhiValue::Inf {
        return Err(Error::Precondition("α must lie outside the Levi of P".into()));
    }
    let top = phi.values.iter().filter_map(|v| v.finite()).max().unwrap_or(0) + 1;
    let open: BTreeSet<usize> = (0..t.rank()).filter(|&i| phi.values[i] != PhiValue::Inf).collect();
    let reduced = phi.values.iter().all(|v| matches!(v, PhiValue::Inf | PhiValue::Fin(0)));
    let certified = reduced
        || open.iter().any(|&a| {
            let extra: BTreeSet<usize> = open.iter().copied().filter(|&b| b != a).collect();
            kernel_chain(t, p, top)
                .into_iter()
                .any(|k| phi_of_fattened(rs, p, k, a, &extra).map(|f| f == *phi).unwrap_or(false))
        });
    if !certified {
        return Err(Error::Precondition("φ is not of a certified fattened shape".into()));
    }
    let none = BTreeSet::new();
    for k in kernel_chain(t, p, top) {
        let q = phi_of_fattened(rs, p, k, alpha, &none)?;
        let dominates = (0..rs.num_positive()).filter(|&g| rs.root(g).0[alpha] != 0).all(|g| q.values[g] >= phi.values[g]);
        if dominates {
            return Ok(class_of(k));
        }
    }
    Err(Error::Inconsistency("no kernel shape dominates φ".into()))
}

/// Exact integer fifth root.
pub fn fifth_root(x: u128) -> Option<u128> {
    let mut r = (x as f64).powf(0.2).round() as u128;
    while r.checked_pow(5).is_some_and(|v| v > x) {
        r -= 1;
    }
    while (r + 1).checked_pow(5).is_some_and(|v| v <= x) {
        r += 1;
    }
    (r.pow(5) == x).then_some(r)
}

/// Positive m with `c · m⁵ = d`.
pub fn solve_c_m5(c: u128, d: u128) -> Option<u128> {
    if c == 0 || d % c != 0 {
        return None;
    }
    fifth_root(d / c).filter(|&m| m > 0)
}

/// For `n` in `1..=n_max`: the n with `2^n = 2m⁵` solvable, and the n with
/// `2^{n+1} = 2r⁵` solvable.
pub fn degree_congruence_classes(n_max: u32) -> (Vec<u32>, Vec<u32>) {
    let a = (1..=n_max).filter(|&n| solve_c_m5(2, 1u128 << n).is_some()).collect();
    let b = (1..=n_max).filter(|&n| solve_c_m5(2, 1u128 << (n + 1)).is_some()).collect();
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psub::lie_maximal_parabolic;
    use crate::rootsys::rs;
    use PhiValue::{Fin, Inf};

    #[test]
    fn from_simple_basics() {
        let c3 = rs("C3");
        let phi = phi_from_simple(&c3, 2, &[Inf, Fin(2), Inf]).unwrap();
        for g in 0..c3.num_positive() {
            let want = if c3.root(g).0[1] != 0 { Fin(2) } else { Inf };
            assert_eq!(phi.get(g), want);
        }
        assert!(phi_from_simple(&c3, 2, &[Inf; 3]).unwrap().values().iter().all(|v| *v == Inf));
        assert!(phi_from_simple(&c3, 2, &[Fin(0); 3]).unwrap().values().iter().all(|v| *v == Fin(0)));
    }

    #[test]
    fn fattened_f4_row() {
        let f4 = rs("F4");
        let phi = phi_of_fattened(&f4, 2, KernelKind::N(0), 1, &BTreeSet::from([0])).unwrap();
        assert_eq!(phi.at(&f4, &[0, 1, 1, 0]).unwrap(), Fin(1));
        assert_eq!(phi.at(&f4, &[0, 1, 0, 0]).unwrap(), Fin(0));
        for g in 0..f4.num_positive() {
            if f4.root(g).0[0] != 0 {
                assert_eq!(phi.get(g), Fin(0));
            }
        }
        assert!(phi_of_fattened(&rs("A3"), 2, KernelKind::N(0), 0, &BTreeSet::new()).is_err());
    }

    #[test]
    fn intersections_match_simple() {
        let c3 = rs("C3");
        let none = BTreeSet::new();
        let a = phi_of_fattened(&c3, 2, KernelKind::Frobenius(1), 0, &none).unwrap();
        let b = phi_of_fattened(&c3, 2, KernelKind::Frobenius(3), 2, &none).unwrap();
        assert_eq!(intersect(&a, &b).unwrap(), phi_from_simple(&c3, 2, &[Fin(1), Inf, Fin(3)]).unwrap());
        assert_eq!(intersect(&a, &a).unwrap(), a);
    }

    #[test]
    fn non_wenzel_examples() {
        let c3 = rs("C3");
        let n0 = phi_of_fattened(&c3, 2, KernelKind::N(0), 2, &BTreeSet::new()).unwrap();
        assert_eq!(is_wenzel_type(&c3, &n0), None);
        let f = [Fin(1), Inf, Fin(0)];
        assert_eq!(is_wenzel_type(&c3, &phi_from_simple(&c3, 2, &f).unwrap()), Some(f.to_vec()));
    }

    #[test]
    fn pairs() {
        let f4 = rs("F4");
        assert_eq!(rank2_nonwenzel_pairs(&f4, 2).unwrap(), vec![(0, 3), (1, 0), (1, 3), (2, 0), (2, 3), (3, 0)]);
        assert!(rank2_nonwenzel_pairs(&rs("G2"), 3).unwrap().is_empty());
        let b4 = rs("B4");
        let mut want: Vec<(usize, usize)> = vec![];
        for j in 0..4 {
            for i in 0..j {
                if j < 3 || i < 2 {
                    want.push((j, i));
                }
            }
        }
        want.sort();
        assert_eq!(rank2_nonwenzel_pairs(&b4, 2).unwrap(), want);
    }

    #[test]
    fn rank1_and_degrees() {
        let g2 = Chevalley::of("G2");
        let r = g2.rs();
        let low = lie_maximal_parabolic(&g2, 0, 2);
        let levi = BTreeSet::from([1]);
        let l = low.with_root_coeffs(&g2, &[&[-1, 0], &[-1, -1]]).unwrap();
        let h = low.with_root_coeffs(&g2, &[&[-2, -1]]).unwrap();
        let phi_l = phi_of_height_one(&g2, &levi, &l).unwrap();
        let phi_h = phi_of_height_one(&g2, &levi, &h).unwrap();
        assert_eq!(quotient_degree(&phi_l).unwrap(), 4);
        assert_eq!(quotient_degree(&phi_h).unwrap(), 2);
        assert!(matches!(classify_rank1(r, &phi_l).unwrap(), Rank1Class::Exotic { .. }));
        assert_eq!(is_wenzel_type(r, &phi_h), None);
        let b3 = rs("B3");
        let n1 = phi_of_fattened(&b3, 2, KernelKind::N(1), 1, &BTreeSet::new()).unwrap();
        assert_eq!(classify_rank1(&b3, &n1).unwrap(), Rank1Class::VerySpecialN { m: 1 });
        let reduced = phi_of_fattened(&b3, 2, KernelKind::Frobenius(0), 1, &BTreeSet::new()).unwrap();
        assert_eq!(quotient_degree(&reduced).unwrap(), 1);
        assert_eq!(classify_rank1(&b3, &reduced).unwrap(), Rank1Class::Reduced);
        // an N-shaped φ on A3 contradicts the classification
        let a3 = rs("A3");
        let mut v = phi_of_fattened(&a3, 2, KernelKind::Frobenius(1), 1, &BTreeSet::new()).unwrap().values().to_vec();
        v[1] = Fin(2);
        let bad = PhiFunction::new(&a3, 2, v).unwrap();
        assert!(matches!(classify_rank1(&a3, &bad), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn contraction() {
        let c3 = rs("C3");
        let p = phi_of_fattened(&c3, 2, KernelKind::N(0), 2, &BTreeSet::from([0])).unwrap();
        assert_eq!(contraction_target(&c3, &p, 2).unwrap(), Rank1Class::VerySpecialN { m: 0 });
        assert_eq!(contraction_target(&c3, &p, 0).unwrap(), Rank1Class::Reduced);
        let g = phi_of_fattened(&c3, 2, KernelKind::Frobenius(2), 1, &BTreeSet::from([0])).unwrap();
        assert_eq!(contraction_target(&c3, &g, 1).unwrap(), Rank1Class::Frobenius { m: 2 });
        // with β = α3 every long root of the α2-locus is cut to 0, so N_1 already dominates
        let g = phi_of_fattened(&c3, 2, KernelKind::Frobenius(2), 1, &BTreeSet::from([2])).unwrap();
        assert_eq!(contraction_target(&c3, &g, 1).unwrap(), Rank1Class::VerySpecialN { m: 1 });
    }

    #[test]
    fn json_round_trip() {
        let f4 = rs("F4");
        let phi = phi_of_fattened(&f4, 2, KernelKind::N(1), 2, &BTreeSet::from([0])).unwrap();
        assert_eq!(PhiFunction::from_json(&phi.to_json(&f4)).unwrap(), phi);
        assert!(PhiFunction::from_json(r#"{"type":"G2","p":2,"values":[]}"#).is_err());
    }

    #[test]
    fn diophantine() {
        assert_eq!(solve_c_m5(2, 4), None);
        assert_eq!(solve_c_m5(2, 8), None);
        assert_eq!(solve_c_m5(2, 64), Some(2));
        let (a, b) = degree_congruence_classes(60);
        assert!(a.iter().all(|n| n % 5 == 1) && a.len() == 12);
        assert!(b.iter().all(|n| n % 5 == 0) && b.len() == 12);
    }
}
