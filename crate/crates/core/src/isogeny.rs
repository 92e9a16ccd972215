//! Isogenies of root data, seen through their root bijection and q-values.
//!
//! An isogeny `f: G → G′` induces a bijection `γ ↦ γ′` of roots with
//! `f*(γ′) = q(γ)·γ` for powers q(γ) of p. Factorization peels off the very
//! special isogeny π (if q differs on the two length classes), then Frobenius
//! twists while p divides every q, leaving a central isogeny with q ≡ 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, SimpleType};

#[derive(Clone, Debug)]
pub struct IsogenyDatum {
    source: RootSystem,
    target: RootSystem,
    bijection: Vec<usize>,
    q: Vec<u64>,
    p: u32,
    pub central_kernel_note: Option<String>,
}

impl PartialEq for IsogenyDatum {
    fn eq(&self, o: &Self) -> bool {
        self.source.simple_type() == o.source.simple_type()
            && self.target.simple_type() == o.target.simple_type()
            && self.bijection == o.bijection
            && self.q == o.q
            && self.p == o.p
    }
}

fn is_power_of(q: u64, p: u32) -> Option<u32> {
    let mut q = q;
    let mut k = 0;
    while q > 1 {
        if q % p as u64 != 0 {
            return None;
        }
        q /= p as u64;
        k += 1;
    }
    (q == 1).then_some(k)
}

impl IsogenyDatum {
    /// Builds and validates a datum. `bijection[i]` is the target index of
    /// source root `i`; `q[i]` its multiplier.
    pub fn new(source: RootSystem, target: RootSystem, bijection: Vec<usize>, q: Vec<u64>, p: u32) -> Result<Self> {
        let d = IsogenyDatum { source, target, bijection, q, p, central_kernel_note: None };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDatum(m));
        let (s, t) = (&self.source, &self.target);
        let n = s.num_roots();
        if t.num_roots() != n || t.rank() != s.rank() || self.bijection.len() != n || self.q.len() != n {
            return bad("source and target sizes differ".into());
        }
        let mut seen = vec![false; n];
        for &b in &self.bijection {
            if b >= n || std::mem::replace(&mut seen[b], true) {
                return bad("root map is not a bijection".into());
            }
        }
        for &q in &self.q {
            if q == 0 || is_power_of(q, self.p).is_none() {
                return bad(format!("q = {q} is not a power of {}", self.p));
            }
        }
        for class in [s.short_set(), s.long_set()] {
            let vals: Vec<u64> = class.iter().map(|&g| self.q[g]).collect();
            if vals.windows(2).any(|w| w[0] != w[1]) {
                return bad("q is not constant on a length class".into());
            }
            let images: Vec<bool> = class.iter().map(|&g| t.is_short(self.bijection[g])).collect();
            if images.windows(2).any(|w| w[0] != w[1]) {
                return bad("root map does not send orbits to orbits".into());
            }
        }
        // f*(γ′) = q(γ)γ must be linear in γ′: fix it on the target simple roots.
        let r = s.rank();
        let inv = self.inverse_bijection();
        let images: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let g = inv[i];
                s.root(g).0.iter().map(|&c| c as i64 * self.q[g] as i64).collect()
            })
            .collect();
        for g in 0..n {
            let tc = &t.root(self.bijection[g]).0;
            let lin: Vec<i64> =
                (0..r).map(|k| (0..r).map(|i| tc[i] as i64 * images[i][k]).sum()).collect();
            let want: Vec<i64> = s.root(g).0.iter().map(|&c| c as i64 * self.q[g] as i64).collect();
            if lin != want {
                return bad(format!("f*(γ′) ≠ q(γ)γ at γ = {}", s.root(g)));
            }
        }
        Ok(())
    }

    fn inverse_bijection(&self) -> Vec<usize> {
        let mut inv = vec![0; self.bijection.len()];
        for (i, &b) in self.bijection.iter().enumerate() {
            inv[b] = i;
        }
        inv
    }

    pub fn source(&self) -> &RootSystem {
        &self.source
    }

    pub fn target(&self) -> &RootSystem {
        &self.target
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn bijection(&self) -> &[usize] {
        &self.bijection
    }

    pub fn q(&self, g: usize) -> u64 {
        self.q[g]
    }

    pub fn q_values(&self) -> &[u64] {
        &self.q
    }

    /// `q_<`, or `None` on simply-laced systems.
    pub fn q_short(&self) -> Option<u64> {
        self.source.short_set().first().map(|&g| self.q[g])
    }

    pub fn q_long(&self) -> u64 {
        self.q[*self.source.long_set().first().expect("long root")]
    }

    fn max_q(&self) -> u64 {
        *self.q.iter().max().expect("roots")
    }
}

/// Identity bijection with `q ≡ p^m`.
pub fn frobenius(rs: &RootSystem, p: u32, m: u32) -> IsogenyDatum {
    let n = rs.num_roots();
    IsogenyDatum::new(rs.clone(), rs.clone(), (0..n).collect(), vec![(p as u64).pow(m); n], p)
        .expect("Frobenius datum")
}

pub fn identity(rs: &RootSystem, p: u32) -> IsogenyDatum {
    frobenius(rs, p, 0)
}

/// The quotient by `N_G`: roots go to coroots in the dual system, `q_< = p`,
/// `q_> = 1`.
pub fn very_special(rs: &RootSystem, p: u32) -> Result<IsogenyDatum> {
    let t = rs.simple_type();
    if !t.edge_hypothesis(p) {
        return Err(Error::Precondition(format!("{t} at p = {p} has no very special isogeny")));
    }
    let dual = RootSystem::new(t.dual());
    let n = rs.num_roots();
    let mut bij = Vec::with_capacity(n);
    for g in 0..n {
        let c = rs.coroot_coeffs(g);
        let mut d = vec![0; rs.rank()];
        for (i, &x) in c.iter().enumerate() {
            d[t.dual_index(i)] = x;
        }
        bij.push(dual.index_of(&d).ok_or_else(|| Error::Inconsistency(format!("coroot {d:?} not in dual")))?);
    }
    let q = (0..n).map(|g| if rs.is_short(g) { p as u64 } else { 1 }).collect();
    IsogenyDatum::new(rs.clone(), dual, bij, q, p)
}

/// Simple-root permutations preserving the Cartan matrix.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for p in perms(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
    let c = rs.cartan();
    let r = rs.rank();
    if r > 8 {
        return vec![(0..r).collect()];
    }
    let mut out: Vec<Vec<usize>> = perms(r)
        .into_iter()
        .filter(|s| (0..r).all(|i| (0..r).all(|j| c[s[i]][s[j]] == c[i][j])))
        .collect();
    out.sort();
    out
}

/// Central datum (q ≡ 1) from a diagram automorphism.
pub fn automorphism(rs: &RootSystem, p: u32, perm: &[usize]) -> Result<IsogenyDatum> {
    let n = rs.num_roots();
    let mut bij = Vec::with_capacity(n);
    for g in 0..n {
        let mut d = vec![0; rs.rank()];
        for (i, &c) in rs.root(g).0.iter().enumerate() {
            d[perm[i]] = c;
        }
        bij.push(rs.index_of(&d).ok_or_else(|| Error::InvalidDatum("not a diagram automorphism".into()))?);
    }
    let mut d = IsogenyDatum::new(rs.clone(), rs.clone(), bij, vec![1; n], p)?;
    d.central_kernel_note = Some(format!("diagram automorphism {perm:?}"));
    Ok(d)
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(f: &IsogenyDatum, g: &IsogenyDatum) -> Result<IsogenyDatum> {
    if f.target.simple_type() != g.source.simple_type() || f.p != g.p {
        return Err(Error::Precondition("isogenies are not composable".into()));
    }
    let bij = f.bijection.iter().map(|&b| g.bijection[b]).collect();
    let q = f.bijection.iter().enumerate().map(|(i, &b)| f.q[i] * g.q[b]).collect();
    let mut d = IsogenyDatum::new(f.source.clone(), g.target.clone(), bij, q, f.p)?;
    d.central_kernel_note = match (&f.central_kernel_note, &g.central_kernel_note) {
        (Some(a), Some(b)) => Some(format!("{a}; {b}")),
        (a, b) => a.clone().or(b.clone()),
    };
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelKind {
    Frobenius(u32),
    N(u32),
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelKind::Frobenius(m) => write!(f, "frobenius {m}"),
            KernelKind::N(m) => write!(f, "N_{m}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub pi: bool,
    pub m: u32,
    /// The central isogeny left over, with q ≡ 1.
    pub residue: IsogenyDatum,
    /// Maximum q after each step; strictly decreasing.
    pub certificate: Vec<u64>,
    source_type: SimpleType,
}

impl Factorization {
    pub fn kernel_kind(&self) -> KernelKind {
        if self.pi {
            KernelKind::N(self.m)
        } else {
            KernelKind::Frobenius(self.m)
        }
    }

    /// Reassembles `ρ ∘ F^m ∘ π`.
    pub fn rebuild(&self) -> Result<IsogenyDatum> {
        let p = self.residue.p;
        let src = RootSystem::new(self.source_type);
        let mut d = if self.pi { very_special(&src, p)? } else { identity(&src, p) };
        d = compose(&d, &frobenius(&d.target.clone(), p, self.m))?;
        compose(&d, &self.residue)
    }

    pub fn pipeline(&self) -> String {
        let mut s = format!("G[{}]", self.source_type);
        let mut cur = "G".to_string();
        if self.pi {
            s += &format!(" --π--> Ḡ[{}]", self.source_type.dual());
            cur = "Ḡ".into();
        }
        if self.m > 0 {
            s += &format!(" --F^{}--> {cur}^({})", self.m, self.m);
        }
        s += &format!(" --central--> G′[{}]", self.residue.target.simple_type());
        s
    }
}

/// The `(π, m)` part of a factorization as a function of `(q_<, q_>)` alone.
/// `q_short = None` on simply-laced systems.
pub fn factor_q_pattern(t: SimpleType, p: u32, q_short: Option<u64>, q_long: u64) -> Result<(bool, u32)> {
    let pw = |q: u64| is_power_of(q, p).ok_or_else(|| Error::InvalidDatum(format!("{q} is not a power of {p}")));
    let ml = pw(q_long)?;
    let Some(qs) = q_short.filter(|&qs| qs != q_long) else {
        return Ok((false, ml));
    };
    let ms = pw(qs)?;
    if ms == 0 {
        return Err(Error::InvalidDatum(format!("q_< = 1 forces q_> = 1, got q_> = {q_long}")));
    }
    if ms != ml + 1 || !t.edge_hypothesis(p) {
        return Err(Error::InvalidDatum(format!("q_< = {qs}, q_> = {q_long} admits no factorization")));
    }
    Ok((true, ml))
}

/// Unique factorization `f = ρ ∘ F^m ∘ π^ε` with ρ central.
pub fn factorize(f: &IsogenyDatum) -> Result<Factorization> {
    let p = f.p;
    let (pi, m_expected) = factor_q_pattern(f.source.simple_type(), p, f.q_short(), f.q_long())?;
    let mut cur = f.clone();
    let mut certificate = vec![cur.max_q()];
    if pi {
        let v = very_special(&f.source, p)?;
        let vinv = v.inverse_bijection();
        let n = f.source.num_roots();
        let bij = (0..n).map(|t| f.bijection[vinv[t]]).collect();
        let q = (0..n).map(|t| f.q[vinv[t]] / v.q[vinv[t]]).collect();
        let mut next = IsogenyDatum::new(v.target.clone(), f.target.clone(), bij, q, p)?;
        next.central_kernel_note = f.central_kernel_note.clone();
        cur = next;
        certificate.push(cur.max_q());
    }
    let mut m = 0;
    while cur.q.iter().all(|&q| q % p as u64 == 0) {
        cur.q.iter_mut().for_each(|q| *q /= p as u64);
        m += 1;
        certificate.push(cur.max_q());
    }
    if cur.q.iter().any(|&q| q != 1) || m != m_expected {
        return Err(Error::Inconsistency("factorization did not reach a central isogeny".into()));
    }
    debug_assert!(certificate.windows(2).all(|w| w[1] < w[0]));
    Ok(Factorization { pi, m, residue: cur, certificate, source_type: f.source.simple_type() })
}

pub fn kernel_kind(f: &IsogenyDatum) -> Result<KernelKind> {
    Ok(factorize(f)?.kernel_kind())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::rs;

    #[test]
    fn so_to_sp() {
        let b3 = rs("B3");
        let v = very_special(&b3, 2).unwrap();
        assert_eq!(v.target().simple_type().to_string(), "C3");
        assert_eq!(v.q_short(), Some(2));
        assert_eq!(v.q_long(), 1);
        let f = factorize(&v).unwrap();
        assert!(f.pi);
        assert_eq!(f.m, 0);
        assert_eq!(f.kernel_kind(), KernelKind::N(0));
        assert_eq!(f.rebuild().unwrap(), v);
        assert_eq!(f.pipeline(), "G[B3] --π--> Ḡ[C3] --central--> G′[C3]");
    }

    #[test]
    fn self_dual_and_frobenius() {
        for (l, p) in [("F4", 2), ("G2", 3), ("B2", 2), ("C4", 2)] {
            let r = rs(l);
            let v = very_special(&r, p).unwrap();
            assert_eq!(v.target().simple_type(), r.simple_type().dual());
            for g in 0..r.num_roots() {
                assert_ne!(r.is_short(g), v.target().is_short(v.bijection()[g]));
            }
            let w = very_special(v.target(), p).unwrap();
            assert_eq!(compose(&v, &w).unwrap(), frobenius(&r, p, 1), "{l}");
        }
        let a2 = rs("A2");
        assert_eq!(compose(&frobenius(&a2, 3, 1), &frobenius(&a2, 3, 1)).unwrap(), frobenius(&a2, 3, 2));
        assert_eq!(kernel_kind(&frobenius(&a2, 3, 4)).unwrap(), KernelKind::Frobenius(4));
    }

    #[test]
    fn n1_and_pm() {
        let c3 = rs("C3");
        let f = compose(&frobenius(&c3, 2, 1), &very_special(&c3, 2).unwrap()).unwrap();
        assert_eq!((f.q_short(), f.q_long()), (Some(4), 2));
        let fz = factorize(&f).unwrap();
        assert_eq!((fz.pi, fz.m), (true, 1));
        assert_eq!(fz.kernel_kind(), KernelKind::N(1));
        assert_eq!(fz.certificate, vec![4, 2, 1]);
    }

    #[test]
    fn invalid_patterns() {
        let b2 = rs("B2");
        let n = b2.num_roots();
        let q: Vec<u64> = (0..n).map(|g| if b2.is_short(g) { 1 } else { 2 }).collect();
        // q_< = 1, q_> = 2 is not even linear on roots, so it fails validation
        assert!(IsogenyDatum::new(b2.clone(), b2.clone(), (0..n).collect(), q, 2).is_err());
        let t = b2.simple_type();
        assert!(matches!(factor_q_pattern(t, 2, Some(1), 2), Err(Error::InvalidDatum(_))));
        assert!(matches!(factor_q_pattern(t, 2, Some(8), 2), Err(Error::InvalidDatum(_))));
        assert!(matches!(factor_q_pattern(t, 3, Some(3), 1), Err(Error::InvalidDatum(_))));
        assert_eq!(factor_q_pattern(t, 2, Some(4), 2).unwrap(), (true, 1));
        assert_eq!(factor_q_pattern(t, 2, Some(8), 8).unwrap(), (false, 3));
        assert!(very_special(&rs("A3"), 2).is_err());
        assert!(very_special(&rs("G2"), 2).is_err());
    }

    #[test]
    fn automorphisms() {
        assert_eq!(diagram_automorphisms(&rs("A3")).len(), 2);
        assert_eq!(diagram_automorphisms(&rs("D4")).len(), 6);
        assert_eq!(diagram_automorphisms(&rs("F4")).len(), 1);
        let d4 = rs("D4");
        for perm in diagram_automorphisms(&d4) {
            let a = automorphism(&d4, 2, &perm).unwrap();
            assert!(!factorize(&a).unwrap().pi);
        }
    }
}
