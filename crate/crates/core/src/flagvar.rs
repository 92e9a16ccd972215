//! Minimal coset representatives `W^I`, Bruhat cell dimensions and the
//! numerology of flag varieties `G/P_I`.
//!
//! Cosets `wW_I` are enumerated as the W-orbit of `λ = Σ_{j∉I} ϖ_j`, in
//! fundamental-weight coordinates; no Weyl group element is ever stored as a
//! matrix.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parabolic::{PhiFunction, PhiValue};
use crate::rootsys::{Family, RootSystem, SimpleType};

pub const DEFAULT_COSET_CAP: usize = 1_000_000;

/// A minimal-length representative of `wW_I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetRep {
    /// `w = s_{word[k-1]} ⋯ s_{word[0]}`.
    pub word: Vec<usize>,
    /// `wλ` in fundamental-weight coordinates.
    pub weight: Vec<i64>,
    /// `Φ_w^I`: positive γ with `w⁻¹γ` negative and outside `Φ_I` (root indices).
    pub phi_w_i: Vec<usize>,
    /// `Φ_{w,I}`: positive γ with `w⁻¹γ ∈ Φ_I⁻`; empty for minimal representatives.
    pub phi_w_levi: Vec<usize>,
    /// `w(α_i)` for `i ∈ I`; all positive for a minimal representative.
    pub w_of_levi: Vec<usize>,
}

impl CosetRep {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn cell_dim(&self) -> usize {
        self.phi_w_i.len()
    }
}

/// `w⁻¹γ` for `w = s_{word[k-1]} ⋯ s_{word[0]}`.
pub fn apply_inverse(rs: &RootSystem, word: &[usize], g: usize) -> usize {
    word.iter().rev().fold(g, |x, &i| rs.reflect_idx(i, x))
}

/// `wγ`.
pub fn apply(rs: &RootSystem, word: &[usize], g: usize) -> usize {
    word.iter().fold(g, |x, &i| rs.reflect_idx(i, x))
}

fn simple_in_weights(rs: &RootSystem, i: usize) -> Vec<i64> {
    (0..rs.rank()).map(|j| rs.cartan()[j][i] as i64).collect()
}

fn reflect_weight(rs: &RootSystem, i: usize, mu: &[i64]) -> Vec<i64> {
    let a = simple_in_weights(rs, i);
    mu.iter().zip(&a).map(|(m, x)| m - mu[i] * x).collect()
}

pub fn levi_roots(rs: &RootSystem, levi: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..rs.num_roots()).filter(|&g| rs.supported_in(g, levi)).collect()
}

fn build_rep(rs: &RootSystem, levi: &BTreeSet<usize>, word: Vec<usize>, weight: Vec<i64>) -> CosetRep {
    let phi_i = levi_roots(rs, levi);
    let mut phi_w_i = vec![];
    let mut phi_w_levi = vec![];
    for g in 0..rs.num_positive() {
        let x = apply_inverse(rs, &word, g);
        if rs.is_positive(x) {
            continue;
        }
        if phi_i.contains(&x) {
            phi_w_levi.push(g);
        } else {
            phi_w_i.push(g);
        }
    }
    let w_of_levi = levi.iter().map(|&i| apply(rs, &word, i)).collect();
    CosetRep { word, weight, phi_w_i, phi_w_levi, w_of_levi }
}

/// One minimal representative per coset of `W/W_I`, ordered by length.
pub fn minimal_reps(rs: &RootSystem, levi: &BTreeSet<usize>, cap: usize) -> Result<Vec<CosetRep>> {
    let n = rs.rank();
    let lambda: Vec<i64> = (0..n).map(|j| (!levi.contains(&j)) as i64).collect();
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::from([(lambda.clone(), 0)]);
    let mut order = vec![(vec![], lambda.clone())];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let (word, mu) = order[k].clone();
        for i in 0..n {
            if mu[i] <= 0 {
                continue;
            }
            let nu = reflect_weight(rs, i, &mu);
            if seen.contains_key(&nu) {
                continue;
            }
            if order.len() >= cap {
                return Err(Error::Resource(format!("more than {cap} cosets")));
            }
            let mut w = word.clone();
            w.push(i);
            seen.insert(nu.clone(), order.len());
            queue.push_back(order.len());
            order.push((w, nu));
        }
    }
    Ok(order.into_iter().map(|(w, mu)| build_rep(rs, levi, w, mu)).collect())
}

/// `dim G/P_I = |Φ⁺| − |Φ⁺_I|`.
pub fn dim_flag(rs: &RootSystem, levi: &BTreeSet<usize>) -> usize {
    rs.num_positive() - (0..rs.num_positive()).filter(|&g| rs.supported_in(g, levi)).count()
}

/// A reduced word for the longest element of `W_J`, found by walking
/// `ρ_J` down to `−ρ_J` (only `J`-coordinates matter).
pub fn longest_word(rs: &RootSystem, j: &BTreeSet<usize>) -> Vec<usize> {
    let mut mu: Vec<i64> = (0..rs.rank()).map(|i| j.contains(&i) as i64).collect();
    let mut word = vec![];
    while let Some(&i) = j.iter().find(|&&i| mu[i] > 0) {
        mu = reflect_weight(rs, i, &mu);
        word.push(i);
    }
    word
}

/// Codimension-one cells: for α ∉ I, the representative of `w_0 s_α W_I`
/// and its length.
pub fn codim_one_reps(rs: &RootSystem, levi: &BTreeSet<usize>, cap: usize) -> Result<Vec<(usize, CosetRep)>> {
    let reps = minimal_reps(rs, levi, cap)?;
    let all: BTreeSet<usize> = (0..rs.rank()).collect();
    let w0 = longest_word(rs, &all);
    let lambda: Vec<i64> = (0..rs.rank()).map(|j| (!levi.contains(&j)) as i64).collect();
    let mut out = vec![];
    for a in (0..rs.rank()).filter(|a| !levi.contains(a)) {
        // w_0 s_α w_{0,I} λ = w_0 s_α λ
        let mut mu = reflect_weight(rs, a, &lambda);
        for &i in &w0 {
            mu = reflect_weight(rs, i, &mu);
        }
        let rep = reps.iter().find(|r| r.weight == mu).ok_or_else(|| Error::Inconsistency("missing coset".into()))?;
        out.push((a, rep.clone()));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PicardBasis {
    pub divisors: Vec<String>,
    pub curves: Vec<String>,
    /// `D_α · C_β = ⟨ϖ_α, β∨⟩`.
    pub pairing: Vec<Vec<i64>>,
    /// `(α, length of the codimension-one representative)`.
    pub codim_one: Vec<(usize, usize)>,
    pub top_length: usize,
}

pub fn picard_basis(rs: &RootSystem, levi: &BTreeSet<usize>, cap: usize) -> Result<PicardBasis> {
    let outside: Vec<usize> = (0..rs.rank()).filter(|a| !levi.contains(a)).collect();
    let top = dim_flag(rs, levi);
    let codim = codim_one_reps(rs, levi, cap)?;
    for (a, r) in &codim {
        if r.length() + 1 != top {
            return Err(Error::Inconsistency(format!("codimension-one cell for α{} has length {}", a + 1, r.length())));
        }
    }
    // ϖ_α in weight coordinates is the unit vector; pairing with β∨ reads coordinate β.
    let pairing = outside
        .iter()
        .map(|&a| outside.iter().map(|&b| (0..rs.rank()).map(|k| ((k == a) as i64) * ((k == b) as i64)).sum()).collect())
        .collect();
    Ok(PicardBasis {
        divisors: outside.iter().map(|a| format!("D_a{}", a + 1)).collect(),
        curves: outside.iter().map(|a| format!("C_a{}", a + 1)).collect(),
        pairing,
        codim_one: codim.iter().map(|(a, r)| (*a, r.length())).collect(),
        top_length: top,
    })
}

/// Frobenius exponents `p^{n_i}` of `G/P_red → G/P` on the cell of `w`, with
/// `n_i = φ(−w⁻¹γ_i)` for `γ_i ∈ Φ_w^I`; sorted descending.
pub fn cell_frobenius_profile(rs: &RootSystem, phi: &PhiFunction, w: &CosetRep) -> Result<Vec<u64>> {
    let mut out = vec![];
    for &g in &w.phi_w_i {
        let x = rs.neg(apply_inverse(rs, &w.word, g));
        match phi.get(x) {
            PhiValue::Fin(m) => out.push((phi.p() as u64).pow(m)),
            PhiValue::Inf => return Err(Error::Precondition("φ is ∞ on a cell direction; reduced part differs from I".into())),
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `Σ_{w ∈ W^I} t^{l(w)}` as a coefficient list.
pub fn poincare_polynomial(reps: &[CosetRep]) -> Vec<u64> {
    let top = reps.iter().map(|r| r.cell_dim()).max().unwrap_or(0);
    let mut c = vec![0; top + 1];
    for r in reps {
        c[r.cell_dim()] += 1;
    }
    c
}

/// Irreducible components of the Dynkin subdiagram on `levi`, labelled by type.
pub fn levi_components(rs: &RootSystem, levi: &BTreeSet<usize>) -> Vec<(String, BTreeSet<usize>)> {
    let c = rs.cartan();
    let mut left = levi.clone();
    let mut out = vec![];
    while let Some(&s) = left.first() {
        let mut comp = BTreeSet::from([s]);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in levi {
                if c[x][y] != 0 && !comp.contains(&y) && x != y {
                    comp.insert(y);
                    stack.push(y);
                }
            }
        }
        left.retain(|x| !comp.contains(x));
        out.push((component_label(rs, &comp), comp));
    }
    out
}

fn component_label(rs: &RootSystem, comp: &BTreeSet<usize>) -> String {
    let k = comp.len();
    let npos = (0..rs.num_positive()).filter(|&g| rs.supported_in(g, comp)).count();
    let lens: Vec<i32> = comp.iter().map(|&i| rs.simple_sq_len(i)).collect();
    let simply_laced = lens.iter().all(|&l| l == lens[0]);
    let letter = if simply_laced {
        if npos == k * (k + 1) / 2 {
            "A"
        } else if npos == k * (k - 1) {
            "D"
        } else {
            "E"
        }
    } else if npos == 6 && k == 2 && rs.simple_type().family() == Family::G {
        "G"
    } else if k == 4 && npos == 24 {
        "F"
    } else if k == 2 {
        if rs.simple_type().family() == Family::C { "C" } else { "B" }
    } else {
        let short = lens.iter().filter(|&&l| l == *lens.iter().min().expect("len")).count();
        if short == 1 { "B" } else { "C" }
    };
    format!("{letter}{k}")
}

pub fn levi_label(rs: &RootSystem, levi: &BTreeSet<usize>) -> String {
    let parts: Vec<String> = levi_components(rs, levi).into_iter().map(|(l, _)| l).collect();
    if parts.is_empty() { "T".into() } else { parts.join("×") }
}

/// Bourbaki index of the chain numbering used in the E-type tables,
/// which runs along the long arm and lists the branch node last.
pub fn chain_to_bourbaki(rank: usize) -> Vec<usize> {
    let mut v: Vec<usize> = vec![0];
    v.extend(2..rank);
    v.push(1);
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct FlagRow {
    pub alpha: usize,
    pub levi: String,
    pub levi_positive: usize,
    pub dim: usize,
}

/// For each simple root (chain numbering for E types, Bourbaki otherwise):
/// Levi type, `|Φ⁺(L^α)|` and `dim G/P^α`.
pub fn maximal_flag_table(rs: &RootSystem) -> Vec<FlagRow> {
    let n = rs.rank();
    let order: Vec<usize> = if rs.simple_type().family() == Family::E { chain_to_bourbaki(n) } else { (0..n).collect() };
    order
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let levi: BTreeSet<usize> = (0..n).filter(|&i| i != a).collect();
            let d = dim_flag(rs, &levi);
            FlagRow { alpha: k, levi: levi_label(rs, &levi), levi_positive: rs.num_positive() - d, dim: d }
        })
        .collect()
}

pub fn table_markdown(rs: &RootSystem) -> String {
    let rows = maximal_flag_table(rs);
    let t = rs.simple_type();
    let mut s = format!("| {t} |");
    for r in &rows {
        s += &format!(" α{} |", r.alpha + 1);
    }
    s += "\n|---|";
    s += &"---|".repeat(rows.len());
    s += "\n| L^α |";
    for r in &rows {
        s += &format!(" {} |", r.levi);
    }
    s += "\n| \\|Φ⁺(L^α)\\| |";
    for r in &rows {
        s += &format!(" {} |", r.levi_positive);
    }
    s += "\n| dim(G/P^α) |";
    for r in &rows {
        s += &format!(" {} |", r.dim);
    }
    s + "\n"
}

/// Types swept by [`rank1_dim5_classification`]. Since `dim G/P^α` is at
/// least the rank (the roots joining α to each simple root along the diagram
/// all contain α), ranks above 5 cannot give 5; the bounds below leave margin.
pub fn dim5_sweep_types() -> Vec<SimpleType> {
    let mut out = vec![];
    for (f, lo, hi) in [
        (Family::A, 1, 8),
        (Family::B, 2, 8),
        (Family::C, 2, 8),
        (Family::D, 4, 8),
        (Family::E, 6, 8),
        (Family::F, 4, 4),
        (Family::G, 2, 2),
    ] {
        for n in lo..=hi {
            out.push(SimpleType::new(f, n).expect("valid type"));
        }
    }
    out
}

/// All `(type, α)` with `dim G/P^α = 5`.
pub fn rank1_dim5_classification() -> Vec<(SimpleType, usize)> {
    let mut out = vec![];
    for t in dim5_sweep_types() {
        let rs = RootSystem::new(t);
        for a in 0..t.rank() {
            let levi = (0..t.rank()).filter(|&i| i != a).collect();
            if dim_flag(&rs, &levi) == 5 {
                out.push((t, a));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::rs;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn g2_cosets() {
        let g = rs("G2");
        let reps = minimal_reps(&g, &set(&[1]), DEFAULT_COSET_CAP).unwrap();
        assert_eq!(reps.len(), 6);
        let dims: Vec<usize> = reps.iter().map(|r| r.cell_dim()).collect();
        assert_eq!(dims, vec![0, 1, 2, 3, 4, 5]);
        for r in &reps {
            assert_eq!(r.length(), r.cell_dim());
            assert!(r.phi_w_levi.is_empty());
            assert!(r.w_of_levi.iter().all(|&x| g.is_positive(x)));
        }
        assert_eq!(minimal_reps(&g, &set(&[0, 1]), 10).unwrap().len(), 1);
        assert_eq!(minimal_reps(&rs("A3"), &set(&[0, 2]), 10).unwrap().len(), 6);
    }

    #[test]
    fn dims_and_tables() {
        let e6 = rs("E6");
        // chain α2 is Bourbaki α3
        assert_eq!(dim_flag(&e6, &set(&[0, 1, 3, 4, 5])), 25);
        assert_eq!(dim_flag(&e6, &set(&[0, 2, 3, 4, 5])), 21);
        let e8 = rs("E8");
        let rows = maximal_flag_table(&e8);
        assert_eq!(rows[6].dim, 57);
        assert_eq!(rows[6].levi, "E7");
        assert_eq!(dim_flag(&e8, &(0..8).collect()), 0);
        let f4: Vec<usize> = maximal_flag_table(&rs("F4")).iter().map(|r| r.dim).collect();
        assert_eq!(f4, vec![15, 20, 20, 15]);
    }

    #[test]
    fn picard() {
        let g = rs("G2");
        let pb = picard_basis(&g, &BTreeSet::new(), DEFAULT_COSET_CAP).unwrap();
        assert_eq!(pb.pairing, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(pb.codim_one, vec![(0, 5), (1, 5)]);
        assert_eq!(longest_word(&g, &set(&[0, 1])).len(), 6);
    }

    #[test]
    fn labels() {
        let b4 = rs("B4");
        assert_eq!(levi_label(&b4, &set(&[1, 2, 3])), "B3");
        let c4 = rs("C4");
        assert_eq!(levi_label(&c4, &set(&[0, 2, 3])), "A1×C2");
        assert_eq!(component_label(&c4, &set(&[1, 2, 3])), "C3");
        assert_eq!(levi_label(&rs("D5"), &set(&[1, 2, 3, 4])), "D4");
    }
}
