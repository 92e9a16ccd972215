//! Chevalley bases over ℤ and their reductions mod p.
//!
//! Basis order: `X_γ` for every root in root-system order, then the toral basis.
//! For the simply connected form the toral basis is the simple coroots
//! `H_i = α_i∨`; for the adjoint form it is the fundamental coweights.
//!
//! Signs follow the extraspecial-pair method: for each positive non-simple ξ the
//! pair `(α, ξ − α)` with α earliest in the root order gets `N = +(r + 1)`; every
//! other constant is forced by the four-root identity and the relations
//! `N(a,b)/|c|² = N(b,c)/|a|² = N(c,a)/|b|²` (a + b + c = 0), `N(−a,−b) = −N(a,b)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modp::{self, Mat};
use crate::rootsys::{Root, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    SimplyConnected,
    Adjoint,
}

/// Structure constants `N(γ, δ)` over ℤ, indexed by root indices.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    n: Vec<Vec<i32>>,
}

impl StructureConstants {
    pub fn get(&self, a: usize, b: usize) -> i32 {
        self.n[a][b]
    }
}

/// Computes the structure constants and checks them against the root strings.
pub fn compute_structure_constants(rs: &RootSystem) -> Result<StructureConstants> {
    let nr = rs.num_roots();
    let np = rs.num_positive();
    let mut pos = vec![vec![0i32; np]; np];

    let len = |i: usize| rs.sq_len(i);
    // N for arbitrary roots whose positive pairs of lower height are known.
    fn get(rs: &RootSystem, pos: &[Vec<i32>], a: usize, b: usize) -> i32 {
        let np = rs.num_positive();
        let Some(s) = rs.sum(a, b) else { return 0 };
        let pa = rs.is_positive(a);
        let pb = rs.is_positive(b);
        if pa && pb {
            return pos[a][b];
        }
        if !pa && !pb {
            return -pos[a - np][b - np];
        }
        let c = rs.neg(s);
        let (lc, la, lb) = (rs.sq_len(c), rs.sq_len(a), rs.sq_len(b));
        let (num, den) = match (pa, rs.is_positive(c)) {
            (true, true) => (lc * get(rs, pos, c, a), lb),
            (true, false) => (-lc * get(rs, pos, rs.neg(b), rs.neg(c)), la),
            (false, true) => (lc * get(rs, pos, b, c), la),
            (false, false) => (-lc * get(rs, pos, rs.neg(c), rs.neg(a)), lb),
        };
        assert_eq!(num % den, 0, "non-integral structure constant");
        num / den
    }

    for xi in 0..np {
        if rs.root(xi).height() < 2 {
            continue;
        }
        let pairs: Vec<(usize, usize)> = (0..np)
            .filter_map(|z| {
                let e = rs.index_of_root(&rs.root(xi).add(&rs.root(z).neg()))?;
                (rs.is_positive(e) && z < e).then_some((z, e))
            })
            .collect();
        let (alpha, beta) = pairs[0];
        let (r, _) = rs.root_string(rs.root(beta), rs.root(alpha))?;
        let nab = r as i32 + 1;
        pos[alpha][beta] = nab;
        pos[beta][alpha] = -nab;
        for &(z, e) in &pairs[1..] {
            let mut num = 0i64;
            let mut den = 1i64;
            let mut add = |n1: i32, n2: i32, l: i32| {
                // num/den += n1 n2 / l
                num = num * l as i64 + (n1 * n2) as i64 * den;
                den *= l as i64;
            };
            let ma = rs.neg(alpha);
            let mb = rs.neg(beta);
            if let Some(d) = rs.sum(e, ma) {
                add(get(rs, &pos, e, ma), get(rs, &pos, z, mb), len(d));
            }
            if let Some(d) = rs.sum(z, ma) {
                add(get(rs, &pos, ma, z), get(rs, &pos, e, mb), len(d));
            }
            let num = num * len(xi) as i64;
            let den = den * nab as i64;
            if num % den != 0 {
                return Err(Error::Inconsistency(format!(
                    "non-integral constant for {} + {}",
                    rs.root(z),
                    rs.root(e)
                )));
            }
            let v = (num / den) as i32;
            pos[z][e] = v;
            pos[e][z] = -v;
        }
    }

    let mut n = vec![vec![0i32; nr]; nr];
    for a in 0..nr {
        for b in 0..nr {
            n[a][b] = get(rs, &pos, a, b);
        }
    }
    let sc = StructureConstants { n };
    for a in 0..nr {
        for b in 0..nr {
            let v = sc.n[a][b];
            if rs.sum(a, b).is_some() {
                let (r, _) = rs.root_string(rs.root(b), rs.root(a))?;
                if v.unsigned_abs() != r + 1 || sc.n[b][a] != -v {
                    return Err(Error::Inconsistency(format!(
                        "N({}, {}) = {v}, expected ±{}",
                        rs.root(a),
                        rs.root(b),
                        r + 1
                    )));
                }
            } else if v != 0 {
                return Err(Error::Inconsistency("nonzero constant off the root sums".into()));
            }
        }
    }
    Ok(sc)
}

/// Element of the Lie algebra with dense coefficients in the Chevalley basis.
/// Coefficients are reduced mod p when `p > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    pub p: u32,
    pub coeffs: Vec<i64>,
}

impl LieElement {
    pub fn zero(dim: usize, p: u32) -> Self {
        LieElement { p, coeffs: vec![0; dim] }
    }

    pub fn basis(dim: usize, i: usize, p: u32) -> Self {
        let mut e = Self::zero(dim, p);
        e.coeffs[i] = 1;
        e
    }

    pub fn from_coeffs(coeffs: Vec<i64>, p: u32) -> Self {
        let coeffs = coeffs.into_iter().map(|x| modp::reduce(x, p)).collect();
        LieElement { p, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &LieElement) -> LieElement {
        assert_eq!(self.p, o.p, "characteristics differ");
        let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| modp::reduce(a + b, self.p)).collect();
        LieElement { p: self.p, coeffs: c }
    }

    pub fn scale(&self, k: i64) -> LieElement {
        let c = self.coeffs.iter().map(|a| modp::reduce(a * k, self.p)).collect();
        LieElement { p: self.p, coeffs: c }
    }

    pub fn sub(&self, o: &LieElement) -> LieElement {
        self.add(&o.scale(-1))
    }

    /// Nonzero coefficients as `(basis index, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c))
    }
}

/// A Chevalley basis of one form of a simple Lie algebra.
#[derive(Clone, Debug)]
pub struct Chevalley {
    rs: RootSystem,
    form: Form,
    sc: StructureConstants,
    eig: Vec<Vec<i64>>,
    hvec: Vec<Vec<i64>>,
}

impl Chevalley {
    pub fn new(rs: RootSystem, form: Form) -> Result<Self> {
        let sc = compute_structure_constants(&rs)?;
        let n = rs.rank();
        let eig = (0..rs.num_roots())
            .map(|a| {
                (0..n)
                    .map(|k| match form {
                        Form::SimplyConnected => rs.pairing_idx(a, k) as i64,
                        Form::Adjoint => rs.root(a).0[k] as i64,
                    })
                    .collect()
            })
            .collect();
        let hvec = (0..rs.num_roots())
            .map(|a| {
                let c = rs.coroot_coeffs(a);
                match form {
                    Form::SimplyConnected => c.iter().map(|&x| x as i64).collect(),
                    Form::Adjoint => (0..n)
                        .map(|j| (0..n).map(|i| c[i] * rs.cartan()[i][j]).sum::<i32>() as i64)
                        .collect(),
                }
            })
            .collect();
        Ok(Chevalley { rs, form, sc, eig, hvec })
    }

    pub fn of(label: &str) -> Self {
        Self::new(crate::rootsys::rs(label), Form::SimplyConnected).expect("valid Chevalley system")
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn n(&self, a: usize, b: usize) -> i32 {
        self.sc.n[a][b]
    }

    pub fn dim(&self) -> usize {
        self.rs.num_roots() + self.rs.rank()
    }

    pub fn toral_index(&self, k: usize) -> usize {
        self.rs.num_roots() + k
    }

    /// Eigenvalue of the toral basis vector `k` on `X_a`.
    pub fn eigen(&self, a: usize, k: usize) -> i64 {
        self.eig[a][k]
    }

    /// Eigenvalue of a toral vector (form coordinates) on `X_a`.
    pub fn eigen_of(&self, a: usize, h: &[i64]) -> i64 {
        self.eig[a].iter().zip(h).map(|(x, y)| x * y).sum()
    }

    /// `[X_a, X_{−a}]` in toral coordinates.
    pub fn coroot(&self, a: usize) -> &[i64] {
        &self.hvec[a]
    }

    pub fn x(&self, a: usize, p: u32) -> LieElement {
        LieElement::basis(self.dim(), a, p)
    }

    pub fn x_root(&self, coeffs: &[i32], p: u32) -> LieElement {
        let a = self.rs.index_of(coeffs).expect("root");
        self.x(a, p)
    }

    pub fn h(&self, k: usize, p: u32) -> LieElement {
        LieElement::basis(self.dim(), self.toral_index(k), p)
    }

    pub fn toral(&self, h: &[i64], p: u32) -> LieElement {
        let mut e = LieElement::zero(self.dim(), p);
        for (k, &c) in h.iter().enumerate() {
            e.coeffs[self.toral_index(k)] = modp::reduce(c, p);
        }
        e
    }

    /// Bracket of two basis vectors as sparse terms over ℤ.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        let nr = self.rs.num_roots();
        match (i < nr, j < nr) {
            (true, true) => {
                if j == self.rs.neg(i) {
                    self.hvec[i]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| (nr + k, c))
                        .collect()
                } else if let Some(s) = self.rs.sum(i, j) {
                    vec![(s, self.sc.n[i][j] as i64)]
                } else {
                    vec![]
                }
            }
            (true, false) => {
                let e = self.eig[i][j - nr];
                if e == 0 { vec![] } else { vec![(i, -e)] }
            }
            (false, true) => {
                let e = self.eig[j][i - nr];
                if e == 0 { vec![] } else { vec![(j, e)] }
            }
            (false, false) => vec![],
        }
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        assert_eq!(x.p, y.p, "characteristics differ");
        let mut out = vec![0i64; self.dim()];
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                for (k, c) in self.basis_bracket(i, j) {
                    out[k] += a * b * c;
                }
            }
        }
        LieElement::from_coeffs(out, x.p)
    }

    /// Matrix of `ad x`: entry `(i, j)` is the coefficient of basis `i` in `[x, e_j]`.
    pub fn ad_matrix(&self, x: &LieElement) -> Mat {
        let d = self.dim();
        let mut m = modp::zeros(d, d);
        for j in 0..d {
            let y = self.bracket(x, &LieElement::basis(d, j, x.p));
            for (i, c) in y.terms() {
                m[i][j] = c;
            }
        }
        m
    }

    /// Restricted p-th power for p ∈ {2, 3} via Jacobson's formula, with
    /// `X_γ^[p] = 0` and `H^[p] = H` on the toral basis.
    pub fn p_power(&self, x: &LieElement) -> Result<LieElement> {
        let p = x.p;
        if p != 2 && p != 3 {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        let d = self.dim();
        let nr = self.rs.num_roots();
        let mut acc = LieElement::zero(d, p);
        let mut acc_pow = LieElement::zero(d, p);
        for (i, c) in x.terms() {
            let t = LieElement::basis(d, i, p).scale(c);
            let t_pow = if i < nr { LieElement::zero(d, p) } else { t.clone() };
            let corr = if p == 2 {
                self.bracket(&acc, &t)
            } else {
                let yx = self.bracket(&t, &acc);
                let xy = self.bracket(&acc, &t);
                self.bracket(&t, &yx).add(&self.bracket(&acc, &xy))
            };
            acc_pow = acc_pow.add(&t_pow).add(&corr);
            acc = acc.add(&t);
        }
        Ok(acc_pow)
    }

    /// Divided powers `(ad X_γ)^n / n!` over ℤ for n = 0..=3; higher powers vanish.
    pub fn divided_powers(&self, g: usize) -> [Mat; 4] {
        let ad = self.ad_matrix(&self.x(g, 0));
        let ad2 = modp::mul(&ad, &ad, 0);
        let ad3 = modp::mul(&ad2, &ad, 0);
        let ad4 = modp::mul(&ad3, &ad, 0);
        assert!(ad4.iter().flatten().all(|&v| v == 0), "(ad X)^4 != 0");
        let div = |m: &Mat, k: i64| -> Mat {
            m.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| {
                            assert_eq!(v % k, 0, "divided power not integral");
                            v / k
                        })
                        .collect()
                })
                .collect()
        };
        [modp::identity(self.dim()), ad, div(&ad2, 2), div(&ad3, 6)]
    }

    /// `exp(λ ad X_γ)` reduced mod p.
    pub fn exp_ad_root(&self, g: usize, lambda: i64, p: u32) -> Mat {
        let dp = self.divided_powers(g);
        let d = self.dim();
        let mut m = modp::zeros(d, d);
        let mut lp = 1i64;
        for dn in &dp {
            for i in 0..d {
                for j in 0..d {
                    m[i][j] += lp * dn[i][j];
                }
            }
            lp *= lambda;
        }
        modp::reduce_mat(&m, p)
    }

    /// The coefficients `[D_0, D_1, D_2, D_3]` of `exp(λ ad X_γ) = Σ λⁿ Dₙ` mod p.
    pub fn exp_ad_root_poly(&self, g: usize, p: u32) -> Vec<Mat> {
        self.divided_powers(g).iter().map(|m| modp::reduce_mat(m, p)).collect()
    }

    pub fn apply(&self, m: &Mat, x: &LieElement) -> LieElement {
        LieElement::from_coeffs(modp::mat_vec(m, &x.coeffs, x.p), x.p)
    }

    pub fn basis_label(&self, i: usize) -> String {
        let nr = self.rs.num_roots();
        if i < nr {
            format!("X[{}]", self.rs.root(i))
        } else {
            format!("H{}", i - nr + 1)
        }
    }

    pub fn format(&self, x: &LieElement) -> String {
        let parts: Vec<String> = x
            .terms()
            .map(|(i, c)| if c == 1 { self.basis_label(i) } else { format!("{c}*{}", self.basis_label(i)) })
            .collect();
        if parts.is_empty() { "0".into() } else { parts.join(" + ") }
    }

    /// Structure constants as CSV with columns `gamma,delta,N`; roots are
    /// space-separated coefficient lists. Only nonzero constants are written.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(vec![]);
        w.write_record(["gamma", "delta", "N"]).expect("csv");
        let fmt = |r: &Root| r.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        for a in 0..self.rs.num_roots() {
            for b in 0..self.rs.num_roots() {
                let v = self.sc.n[a][b];
                if v != 0 {
                    w.write_record([fmt(self.rs.root(a)), fmt(self.rs.root(b)), v.to_string()]).expect("csv");
                }
            }
        }
        String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
    }
}

/// One row of a structure-constant table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScRow {
    pub gamma: Vec<i32>,
    pub delta: Vec<i32>,
    pub n: i32,
}

/// Parses the CSV produced by [`Chevalley::to_csv`].
pub fn parse_structure_csv(s: &str) -> Result<Vec<ScRow>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(s.as_bytes());
    let headers = rdr.headers().map_err(|e| Error::Parse(e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["gamma", "delta", "N"] {
        return Err(Error::Parse("expected header gamma,delta,N".into()));
    }
    let parse_root = |f: &str| -> Result<Vec<i32>> {
        let v: std::result::Result<Vec<i32>, _> = f.split_whitespace().map(str::parse).collect();
        let v = v.map_err(|e| Error::Parse(format!("bad root {f:?}: {e}")))?;
        if v.is_empty() {
            return Err(Error::Parse("empty root".into()));
        }
        Ok(v)
    };
    let mut out = vec![];
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        if rec.len() != 3 {
            return Err(Error::Parse("expected three fields".into()));
        }
        let gamma = parse_root(&rec[0])?;
        let delta = parse_root(&rec[1])?;
        if gamma.len() != delta.len() {
            return Err(Error::Parse("roots of different rank".into()));
        }
        let n = rec[2].trim().parse().map_err(|e| Error::Parse(format!("bad N: {e}")))?;
        out.push(ScRow { gamma, delta, n });
    }
    Ok(out)
}

/// Checks an imported table against the constants of `ch`: same entries, same signs.
pub fn table_matches(ch: &Chevalley, rows: &[ScRow]) -> Result<()> {
    let rs = ch.rs();
    let mut count = 0;
    for r in rows {
        let a = rs.index_of(&r.gamma).ok_or_else(|| Error::NotARoot(r.gamma.clone()))?;
        let b = rs.index_of(&r.delta).ok_or_else(|| Error::NotARoot(r.delta.clone()))?;
        if ch.n(a, b) != r.n {
            return Err(Error::Inconsistency(format!("N({:?},{:?}) = {} != {}", r.gamma, r.delta, r.n, ch.n(a, b))));
        }
        count += 1;
    }
    let expected = (0..rs.num_roots())
        .flat_map(|a| (0..rs.num_roots()).map(move |b| (a, b)))
        .filter(|&(a, b)| ch.n(a, b) != 0)
        .count();
    if count != expected {
        return Err(Error::Inconsistency(format!("{count} rows, expected {expected}")));
    }
    Ok(())
}

/// Jacobi identity over ℤ on all basis triples; returns the first failing triple.
pub fn jacobi_violation(ch: &Chevalley) -> Option<(usize, usize, usize)> {
    let d = ch.dim();
    let e = |i| LieElement::basis(d, i, 0);
    for i in 0..d {
        for j in i + 1..d {
            let ij = ch.bracket(&e(i), &e(j));
            for k in j + 1..d {
                let a = ch.bracket(&ij, &e(k));
                let b = ch.bracket(&ch.bracket(&e(j), &e(k)), &e(i));
                let c = ch.bracket(&ch.bracket(&e(k), &e(i)), &e(j));
                if !a.add(&b).add(&c).is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (mod {})", self.coeffs, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_small() {
        for l in ["A2", "B2", "G2", "C3"] {
            for form in [Form::SimplyConnected, Form::Adjoint] {
                let ch = Chevalley::new(crate::rootsys::rs(l), form).unwrap();
                assert_eq!(jacobi_violation(&ch), None, "{l} {form:?}");
            }
        }
    }

    #[test]
    fn g2_constants() {
        let ch = Chevalley::of("G2");
        let rs = ch.rs();
        let a = rs.index_of(&[-1, 0]).unwrap();
        let b = rs.index_of(&[-2, -1]).unwrap();
        assert_eq!(ch.n(a, b).abs(), 3);
        let c = rs.index_of(&[-1, -1]).unwrap();
        let x = ch.bracket(&ch.x(c, 2), &ch.x(a, 2));
        assert!(x.is_zero());
    }

    #[test]
    fn csv_round_trip() {
        let ch = Chevalley::of("B3");
        let rows = parse_structure_csv(&ch.to_csv()).unwrap();
        table_matches(&ch, &rows).unwrap();
        assert!(parse_structure_csv("gamma,delta,N\n1 x,0 1,2\n").is_err());
    }

    #[test]
    fn p_power_rejects_p5() {
        let ch = Chevalley::of("A2");
        assert_eq!(ch.p_power(&ch.x(0, 5)), Err(Error::UnsupportedCharacteristic(5)));
    }
}
