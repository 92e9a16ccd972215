//! Split octonions and the G2 root subgroups acting on them.
//!
//! An octonion is a pair `(u, v)` of 2×2 matrices; coordinates are taken in the
//! order `e11, e12, e21, e22, f11, f12, f21, f22` and carry polynomial
//! coefficients, so that identities in a parameter λ are checked
//! coefficient-wise instead of by evaluation.
//!
//! G2 acts on `V = e^⊥` (dimension 7) with ordered basis
//! `f12, f11, e12, h, e21, f22, f21`, where `h = e11 − e22` in general and
//! `h = e` in characteristic 2; in characteristic 2 it also acts on
//! `W = V/ke` with basis `f12, f11, e12, e21, f22, f21`.

pub mod appendix;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::modp::{self, Mat};
use crate::poly::{poly_identity, poly_mat_mul, Poly, PolyMat};

pub const LABELS: [&str; 8] = ["e11", "e12", "e21", "e22", "f11", "f12", "f21", "f22"];
pub const E11: usize = 0;
pub const E12: usize = 1;
pub const E21: usize = 2;
pub const E22: usize = 3;
pub const F11: usize = 4;
pub const F12: usize = 5;
pub const F21: usize = 6;
pub const F22: usize = 7;

// Rows and columns of the printed product table come in this order.
const TABLE_ORDER: [&str; 8] = ["e11", "e21", "e12", "e22", "f11", "f21", "f12", "f22"];
const TABLE: [[&str; 8]; 8] = [
    ["e11", "0", "e12", "0", "f11", "f21", "0", "0"],
    ["e21", "0", "e22", "0", "0", "0", "f11", "f21"],
    ["0", "e11", "0", "e12", "f12", "f22", "0", "0"],
    ["0", "e21", "0", "e22", "0", "0", "f12", "f22"],
    ["0", "0", "-f12", "f11", "0", "-e21", "0", "e11"],
    ["0", "0", "-f22", "f21", "e21", "0", "-e11", "0"],
    ["f12", "-f11", "0", "0", "0", "-e22", "0", "e12"],
    ["f22", "-f21", "0", "0", "e22", "0", "-e12", "0"],
];

pub fn label_index(s: &str) -> Option<usize> {
    LABELS.iter().position(|&l| l == s)
}

type Table = [[Option<(i64, usize)>; 8]; 8];

fn table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = [[None; 8]; 8];
        for (r, row) in TABLE.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let i = label_index(TABLE_ORDER[r]).expect("label");
                let j = label_index(TABLE_ORDER[c]).expect("label");
                t[i][j] = match *cell {
                    "0" => None,
                    s => {
                        let (sign, name) = s.strip_prefix('-').map_or((1, s), |n| (-1, n));
                        Some((sign, label_index(name).expect("label")))
                    }
                };
            }
        }
        t
    })
}

/// Product of two basis vectors as `(sign, index)`.
pub fn basis_product(i: usize, j: usize) -> Option<(i64, usize)> {
    table()[i][j]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonion {
    pub c: Vec<Poly>,
}

impl Octonion {
    pub fn zero(nv: usize, p: u32) -> Self {
        Octonion { c: vec![Poly::zero(nv, p); 8] }
    }

    pub fn basis(i: usize, nv: usize, p: u32) -> Self {
        let mut o = Self::zero(nv, p);
        o.c[i] = Poly::one(nv, p);
        o
    }

    pub fn from_ints(v: &[i64], nv: usize, p: u32) -> Self {
        Octonion { c: v.iter().map(|&x| Poly::constant(nv, p, x)).collect() }
    }

    pub fn unit(nv: usize, p: u32) -> Self {
        Self::from_ints(&[1, 0, 0, 1, 0, 0, 0, 0], nv, p)
    }

    pub fn add(&self, o: &Octonion) -> Octonion {
        Octonion { c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Octonion) -> Octonion {
        Octonion { c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: &Poly) -> Octonion {
        Octonion { c: self.c.iter().map(|a| a * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Poly::is_zero)
    }

    pub fn nvars(&self) -> usize {
        self.c[0].nvars()
    }

    pub fn modulus(&self) -> u32 {
        self.c[0].modulus()
    }
}

pub fn multiply(x: &Octonion, y: &Octonion) -> Octonion {
    let mut out = Octonion::zero(x.nvars(), x.modulus());
    for (i, a) in x.c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.c.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            if let Some((s, k)) = basis_product(i, j) {
                out.c[k] = &out.c[k] + &(a * b).scale(s);
            }
        }
    }
    out
}

/// `q(u, v) = det u − det v`.
pub fn norm(x: &Octonion) -> Poly {
    let c = &x.c;
    let du = &(&c[E11] * &c[E22]) - &(&c[E12] * &c[E21]);
    let dv = &(&c[F11] * &c[F22]) - &(&c[F12] * &c[F21]);
    &du - &dv
}

pub fn bilinear(x: &Octonion, y: &Octonion) -> Poly {
    &(&norm(&x.add(y)) - &norm(x)) - &norm(y)
}

/// `ν(x, y, z) = ⟨xy, z⟩`, alternating on `V`.
pub fn trilinear_nu(x: &Octonion, y: &Octonion, z: &Octonion) -> Poly {
    bilinear(&multiply(x, y), z)
}

/// Which vector sits in slot 3 of the 7-dimensional basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VBasis {
    /// `h = e11 − e22`, valid in every characteristic.
    General,
    /// `e = e11 + e22`, the characteristic 2 basis.
    Char2,
}

/// The ordered basis of `V` as octonion coordinate vectors.
pub fn v7_basis(kind: VBasis) -> [[i64; 8]; 7] {
    let unit = |i: usize| {
        let mut v = [0; 8];
        v[i] = 1;
        v
    };
    let mid = match kind {
        VBasis::General => [1, 0, 0, -1, 0, 0, 0, 0],
        VBasis::Char2 => [1, 0, 0, 1, 0, 0, 0, 0],
    };
    [unit(F12), unit(F11), unit(E12), mid, unit(E21), unit(F22), unit(F21)]
}

/// Positions of `W = V/ke` inside the 7-dimensional basis.
pub const W6_FROM_V7: [usize; 6] = [0, 1, 2, 4, 5, 6];

/// Torus weights of the 7 basis vectors in simple-root coordinates.
pub const V7_WEIGHTS: [[i32; 2]; 7] = [[1, 0], [-1, -1], [2, 1], [0, 0], [-2, -1], [1, 1], [-1, 0]];

pub fn w6_weights() -> Vec<[i32; 2]> {
    W6_FROM_V7.iter().map(|&i| V7_WEIGHTS[i]).collect()
}

/// `diag(a, a⁻¹b⁻¹, a²b, 1, a⁻²b⁻¹, ab, a⁻¹)` over F_p.
pub fn torus_matrix(a: i64, b: i64, p: u32) -> Result<Mat> {
    if p < 2 || modp::reduce(a, p) == 0 || modp::reduce(b, p) == 0 {
        return Err(Error::Precondition("torus entries must be units of F_p".into()));
    }
    let pw = |x: i64, k: i32| -> i64 {
        let base = if k < 0 { modp::inv(x, p) } else { modp::reduce(x, p) };
        (0..k.unsigned_abs()).fold(1, |acc, _| modp::reduce(acc * base, p))
    };
    let mut m = modp::zeros(7, 7);
    for (k, w) in V7_WEIGHTS.iter().enumerate() {
        m[k][k] = modp::reduce(pw(a, w[0]) * pw(b, w[1]), p);
    }
    Ok(m)
}

// (row, column, coefficient, power of λ)
type Entry = (usize, usize, i64, u32);

// The dim-7 families exactly as printed. Five of them are not automorphisms
// over ℤ; see `U7` for the corrected ones.
const U7_PRINTED: [([i32; 2], &[Entry]); 10] = [
    ([1, 0], &[(0, 3, 2, 1), (0, 6, 1, 2), (1, 4, -1, 1), (2, 5, 1, 1), (3, 6, 1, 1)]),
    ([-1, 0], &[(3, 0, 1, 1), (4, 1, 1, 1), (5, 2, -1, 1), (6, 0, 1, 2), (6, 3, 2, 1)]),
    ([0, 1], &[(5, 0, 1, 1), (6, 1, 1, 1)]),
    ([0, -1], &[(0, 5, 1, 1), (1, 6, 1, 1)]),
    ([2, 1], &[(0, 1, 1, 1), (2, 3, 2, 1), (2, 4, -1, 2), (5, 6, 1, 1)]),
    ([-2, -1], &[(1, 0, 1, 1), (3, 2, 1, 1), (4, 2, -1, 2), (4, 3, 2, 1), (6, 5, 1, 1)]),
    ([1, 1], &[(2, 0, 1, 1), (3, 1, -1, 1), (5, 1, 1, 2), (5, 3, 2, 1), (6, 4, 1, 1)]),
    ([-1, -1], &[(0, 2, 1, 1), (1, 3, 2, 1), (1, 5, 1, 2), (3, 5, -1, 1), (4, 6, 1, 1)]),
    ([-3, -2], &[(1, 2, 1, 1), (4, 5, -1, 1)]),
    ([3, 2], &[(2, 1, -1, 1), (5, 4, 1, 1)]),
];

// Corrected families: exponentials of the weight-γ derivations, scaled to
// agree with the printed ones wherever those are right.
const U7: [([i32; 2], &[Entry]); 10] = [
    ([1, 0], &[(0, 3, 2, 1), (0, 6, 1, 2), (1, 4, 1, 1), (2, 5, -1, 1), (3, 6, 1, 1)]),
    ([-1, 0], &[(3, 0, 1, 1), (4, 1, 1, 1), (5, 2, -1, 1), (6, 0, 1, 2), (6, 3, 2, 1)]),
    ([0, 1], &[(5, 0, 1, 1), (6, 1, 1, 1)]),
    ([0, -1], &[(0, 5, 1, 1), (1, 6, 1, 1)]),
    ([2, 1], &[(0, 1, 1, 1), (2, 3, 2, 1), (2, 4, -1, 2), (3, 4, -1, 1), (5, 6, 1, 1)]),
    ([-2, -1], &[(1, 0, 1, 1), (3, 2, 1, 1), (4, 2, -1, 2), (4, 3, -2, 1), (6, 5, 1, 1)]),
    ([1, 1], &[(2, 0, 1, 1), (3, 1, -1, 1), (5, 1, -1, 2), (5, 3, 2, 1), (6, 4, 1, 1)]),
    ([-1, -1], &[(0, 2, 1, 1), (1, 3, -2, 1), (1, 5, -1, 2), (3, 5, 1, 1), (4, 6, 1, 1)]),
    ([-3, -2], &[(1, 2, 1, 1), (4, 5, -1, 1)]),
    ([3, 2], &[(2, 1, -1, 1), (5, 4, 1, 1)]),
];

// The characteristic 2 displays on W, exactly as printed (labels included).
const U6_PRINTED: [([i32; 2], &[Entry]); 10] = [
    ([1, 0], &[(0, 5, 1, 2), (1, 3, 1, 1), (2, 4, 1, 1)]),
    ([-1, 0], &[(3, 1, 1, 1), (4, 2, 1, 1), (5, 0, 1, 2)]),
    ([0, 1], &[(0, 4, 1, 1), (1, 5, 1, 1)]),
    ([0, -1], &[(4, 0, 1, 1), (5, 1, 1, 1)]),
    ([2, 1], &[(0, 1, 1, 1), (2, 3, 1, 2), (4, 5, 1, 1)]),
    ([-2, -1], &[(1, 0, 1, 1), (3, 2, 1, 2), (5, 4, 1, 1)]),
    ([1, 1], &[(2, 0, 1, 1), (4, 1, 1, 2), (5, 3, 1, 1)]),
    ([-1, -1], &[(0, 2, 1, 1), (1, 4, 1, 2), (3, 5, 1, 1)]),
    ([3, 2], &[(2, 1, 1, 1), (4, 3, 1, 1)]),
    ([-3, -2], &[(1, 2, 1, 1)]),
];

/// Every root of G2 in simple-root coordinates, positive ones first.
pub const G2_ROOTS: [[i32; 2]; 12] = [
    [1, 0],
    [0, 1],
    [1, 1],
    [2, 1],
    [3, 1],
    [3, 2],
    [-1, 0],
    [0, -1],
    [-1, -1],
    [-2, -1],
    [-3, -1],
    [-3, -2],
];

fn from_entries(size: usize, entries: &[Entry], nv: usize, var: usize, p: u32) -> PolyMat {
    let mut m = poly_identity(size, nv, p);
    for &(r, c, k, e) in entries {
        let mut exps = vec![0; nv];
        exps[var] = e;
        m[r][c] = &m[r][c] + &Poly::monomial(nv, p, exps, k);
    }
    m
}

fn lookup(table: &[([i32; 2], &'static [Entry])], gamma: &[i32]) -> Option<&'static [Entry]> {
    table.iter().find(|(g, _)| g.as_slice() == gamma).map(|(_, e)| *e)
}

/// The dim-7 family exactly as printed, for comparison.
pub fn printed_root_subgroup_7(gamma: &[i32], nv: usize, var: usize, p: u32) -> Result<PolyMat> {
    lookup(&U7_PRINTED, gamma)
        .map(|e| from_entries(7, e, nv, var, p))
        .ok_or_else(|| Error::NotImplemented(format!("no printed dim-7 matrix for {gamma:?}")))
}

/// Roots with a printed family, in display order.
pub fn printed_roots() -> Vec<[i32; 2]> {
    U7_PRINTED.iter().map(|(g, _)| *g).collect()
}

/// The root subgroup `u_γ(λ)` on `V` with `λ` = variable `var`.
pub fn root_subgroup_7(gamma: &[i32], nv: usize, var: usize, p: u32) -> Result<PolyMat> {
    match lookup(&U7, gamma) {
        Some(e) => Ok(from_entries(7, e, nv, var, p)),
        None if is_g2_root(gamma) => Err(Error::NotImplemented(format!(
            "u_{gamma:?} is not printed; use derive_missing_root_subgroup"
        ))),
        None => Err(Error::NotARoot(gamma.to_vec())),
    }
}

/// The printed dim-6 matrix carrying the label `γ`, verbatim.
pub fn printed_root_subgroup_6(gamma: &[i32], nv: usize, var: usize) -> Result<PolyMat> {
    lookup(&U6_PRINTED, gamma)
        .map(|e| from_entries(6, e, nv, var, 2))
        .ok_or_else(|| Error::NotImplemented(format!("no printed dim-6 matrix for {gamma:?}")))
}

pub fn is_g2_root(gamma: &[i32]) -> bool {
    G2_ROOTS.iter().any(|g| g.as_slice() == gamma)
}

fn const_mat(m: &Mat, nv: usize, p: u32) -> PolyMat {
    m.iter().map(|r| r.iter().map(|&x| Poly::constant(nv, p, x)).collect()).collect()
}

fn eval_mat(m: &PolyMat, vals: &[i64]) -> Mat {
    m.iter().map(|r| r.iter().map(|x| x.eval(vals)).collect()).collect()
}

/// `n = u_{α2}(1) u_{−α2}(−1) u_{α2}(1)` over ℤ and its inverse.
fn weyl_rep_alpha2() -> (Mat, Mat) {
    let at = |g: [i32; 2], t: i64| eval_mat(&root_subgroup_7(&g, 1, 0, 0).expect("printed"), &[t]);
    let n = modp::mul(&modp::mul(&at([0, 1], 1), &at([0, -1], -1), 0), &at([0, 1], 1), 0);
    let ninv = modp::mul(&modp::mul(&at([0, 1], -1), &at([0, -1], 1), 0), &at([0, 1], -1), 0);
    (n, ninv)
}

/// `u_{±(3α1+α2)}(λ) := n u_{±(3α1+2α2)}(λ) n⁻¹` with `n` representing `s_{α2}`,
/// which sends `3α1+2α2` to `3α1+α2`.
pub fn derive_missing_root_subgroup(gamma: &[i32], nv: usize, var: usize, p: u32) -> Result<PolyMat> {
    let src = match gamma {
        [3, 1] => [3, 2],
        [-3, -1] => [-3, -2],
        _ => return Err(Error::Precondition(format!("{gamma:?} is not ±(3α1+α2)"))),
    };
    let (n, ninv) = weyl_rep_alpha2();
    let u = root_subgroup_7(&src, nv, var, 0)?;
    let out = poly_mat_mul(&poly_mat_mul(&const_mat(&n, nv, 0), &u), &const_mat(&ninv, nv, 0));
    Ok(out.iter().map(|r| r.iter().map(|x| x.reduce_mod(p)).collect()).collect())
}

/// Printed family when available, derived otherwise.
pub fn root_subgroup_7_any(gamma: &[i32], nv: usize, var: usize, p: u32) -> Result<PolyMat> {
    match root_subgroup_7(gamma, nv, var, p) {
        Err(Error::NotImplemented(_)) => derive_missing_root_subgroup(gamma, nv, var, p),
        r => r,
    }
}

/// Drops row and column 3, the line `ke`.
pub fn quotient_to_w(m7: &PolyMat) -> PolyMat {
    W6_FROM_V7.iter().map(|&i| W6_FROM_V7.iter().map(|&j| m7[i][j].clone()).collect()).collect()
}

/// The characteristic 2 root subgroup on `W`, induced from the 7-dimensional one.
pub fn root_subgroup_6(gamma: &[i32], nv: usize, var: usize) -> Result<PolyMat> {
    let m7 = root_subgroup_7_any(gamma, nv, var, 2)?;
    if (0..7).any(|i| i != 3 && !m7[i][3].is_zero()) {
        return Err(Error::Inconsistency("the line ke is not stable".into()));
    }
    Ok(quotient_to_w(&m7))
}

/// The torus character of a one-parameter family: every term `λ^k` at `(r, c)`
/// must have weight `wt(r) − wt(c) = kγ`, and the diagonal must be 1.
pub fn family_weight(m: &PolyMat, weights: &[[i32; 2]], var: usize) -> Option<[i32; 2]> {
    let mut found: Option<[i32; 2]> = None;
    for (r, row) in m.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            for (e, _) in x.terms() {
                let k = e[var] as i32;
                if k == 0 {
                    if r != c || e.iter().any(|&d| d != 0) {
                        return None;
                    }
                    continue;
                }
                let d = [weights[r][0] - weights[c][0], weights[r][1] - weights[c][1]];
                if d[0] % k != 0 || d[1] % k != 0 {
                    return None;
                }
                let g = [d[0] / k, d[1] / k];
                match found {
                    None => found = Some(g),
                    Some(f) if f == g => {}
                    Some(_) => return None,
                }
            }
        }
        if row[r].constant_term() != 1 {
            return None;
        }
    }
    found
}

/// `u(λ)u(μ) = u(λ+μ)` for a family built by `f(nv, var)`.
pub fn homomorphism_check(f: impl Fn(usize, usize) -> Result<PolyMat>) -> Result<bool> {
    let a = f(2, 0)?;
    let b = f(2, 1)?;
    let p = a[0][0].modulus();
    let sum = &Poly::var(2, p, 0) + &Poly::var(2, p, 1);
    let c: PolyMat = a.iter().map(|r| r.iter().map(|x| x.substitute(0, &sum)).collect()).collect();
    Ok(poly_mat_mul(&a, &b) == c)
}

fn vec_oct(v: &[i64; 8], nv: usize, p: u32) -> Octonion {
    Octonion::from_ints(v, nv, p)
}

/// Coordinates of `w ∈ V` in the 7-dimensional basis.
fn v_coords(w: &Octonion, kind: VBasis) -> Option<Vec<Poly>> {
    let mid_ok = match kind {
        VBasis::General => (&w.c[E11] + &w.c[E22]).is_zero(),
        VBasis::Char2 => (&w.c[E11] - &w.c[E22]).is_zero(),
    };
    mid_ok.then(|| vec![
        w.c[F12].clone(),
        w.c[F11].clone(),
        w.c[E12].clone(),
        w.c[E11].clone(),
        w.c[E21].clone(),
        w.c[F22].clone(),
        w.c[F21].clone(),
    ])
}

fn apply_v(m7: &PolyMat, coords: &[Poly], kind: VBasis) -> Octonion {
    let nv = coords[0].nvars();
    let p = coords[0].modulus();
    let basis = v7_basis(kind);
    let mut out = Octonion::zero(nv, p);
    for (j, cj) in coords.iter().enumerate() {
        if cj.is_zero() {
            continue;
        }
        for (i, b) in basis.iter().enumerate() {
            if !m7[i][j].is_zero() {
                out = out.add(&vec_oct(b, nv, p).scale(&(&m7[i][j] * cj)));
            }
        }
    }
    out
}

fn max_degree(m: &PolyMat) -> u32 {
    m.iter().flatten().filter_map(Poly::total_degree).max().unwrap_or(0)
}

fn monomials(nv: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nv {
        let mut next = vec![];
        for e in &out {
            let used: u32 = e.iter().sum();
            for k in 0..=(d - used) {
                let mut f = e.clone();
                f.push(k);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

/// Images of the eight octonion basis vectors under the extension of `m7`
/// fixing `e`.
///
/// Over ℤ and odd `p` this uses `e11 = (e + h)/2`; in characteristic 2, where
/// `e ∈ V`, the image `e11 + v` is found by solving the linear conditions
/// `(e11 + v)·m(x) = m(e11·x)` for the basis vectors `x ≠ e`.
pub fn extend_to_octonions(m7: &PolyMat, kind: VBasis) -> Result<Vec<Octonion>> {
    let nv = m7[0][0].nvars();
    let p = m7[0][0].modulus();
    let basis = v7_basis(kind);
    let col = |j: usize| -> Octonion {
        let mut coords = vec![Poly::zero(nv, p); 7];
        coords[j] = Poly::one(nv, p);
        apply_v(m7, &coords, kind)
    };
    let e = Octonion::unit(nv, p);
    let mut img: Vec<Option<Octonion>> = vec![None; 8];
    for (j, b) in basis.iter().enumerate() {
        if let Some(k) = b.iter().position(|&x| x == 1).filter(|_| b.iter().filter(|&&x| x != 0).count() == 1) {
            img[k] = Some(col(j));
        }
    }
    match (kind, p) {
        (VBasis::Char2, 2) => {
            let e11 = solve_e11_char2(m7)?;
            img[E22] = Some(e.sub(&e11));
            img[E11] = Some(e11);
        }
        (VBasis::General, p) if p != 2 => {
            let mh = col(3);
            let twice = e.add(&mh);
            let half = |o: &Octonion| -> Result<Octonion> {
                if p == 0 {
                    let mut c = vec![];
                    for x in &o.c {
                        let mut y = Poly::zero(nv, 0);
                        for (ex, k) in x.terms() {
                            if k % 2 != 0 {
                                return Err(Error::Inconsistency("extension to the octonions is not integral".into()));
                            }
                            y = &y + &Poly::monomial(nv, 0, ex.clone(), k / 2);
                        }
                        c.push(y);
                    }
                    Ok(Octonion { c })
                } else {
                    Ok(o.scale(&Poly::constant(nv, p, modp::inv(2, p))))
                }
            };
            let e11 = half(&twice)?;
            img[E22] = Some(e.sub(&e11));
            img[E11] = Some(e11);
        }
        _ => return Err(Error::Precondition(format!("basis {kind:?} does not fit characteristic {p}"))),
    }
    img.into_iter().map(|o| o.ok_or_else(|| Error::Inconsistency("missing image".into()))).collect()
}

fn solve_e11_char2(m7: &PolyMat) -> Result<Octonion> {
    let nv = m7[0][0].nvars();
    let p = 2;
    let kind = VBasis::Char2;
    let basis = v7_basis(kind);
    let d = max_degree(m7);
    let monos = monomials(nv, d);
    let e11 = Octonion::basis(E11, nv, p);
    let unknowns: Vec<(usize, Vec<u32>)> =
        (0..7).flat_map(|k| monos.iter().map(move |m| (k, m.clone()))).collect();
    // Rows keyed by (octonion coordinate, monomial).
    let mut rows: BTreeMap<(usize, Vec<u32>), (Vec<i64>, i64)> = BTreeMap::new();
    let mut eq = 0;
    for (j, bj) in basis.iter().enumerate() {
        if j == 3 {
            continue;
        }
        let x = vec_oct(bj, nv, p);
        let mut cj = vec![Poly::zero(nv, p); 7];
        cj[j] = Poly::one(nv, p);
        let nx = apply_v(m7, &cj, kind);
        let prod = multiply(&e11, &x);
        let coords = v_coords(&prod, kind).ok_or_else(|| Error::Inconsistency("e11·x left V".into()))?;
        let rhs = apply_v(m7, &coords, kind).sub(&multiply(&e11, &nx));
        let tag = |c: usize, m: &Vec<u32>| (c + 8 * eq, m.clone());
        for (u, (k, mono)) in unknowns.iter().enumerate() {
            let term = multiply(&vec_oct(&basis[*k], nv, p).scale(&Poly::monomial(nv, p, mono.clone(), 1)), &nx);
            for (c, poly) in term.c.iter().enumerate() {
                for (ex, coef) in poly.terms() {
                    let row = rows.entry(tag(c, ex)).or_insert_with(|| (vec![0; unknowns.len()], 0));
                    row.0[u] = modp::reduce(row.0[u] + coef, p);
                }
            }
        }
        for (c, poly) in rhs.c.iter().enumerate() {
            for (ex, coef) in poly.terms() {
                let row = rows.entry(tag(c, ex)).or_insert_with(|| (vec![0; unknowns.len()], 0));
                row.1 = modp::reduce(row.1 + coef, p);
            }
        }
        eq += 1;
    }
    let a: Mat = rows.values().map(|r| r.0.clone()).collect();
    let b: Vec<i64> = rows.values().map(|r| r.1).collect();
    let sol = modp::solve(&a, &b, unknowns.len(), p)
        .ok_or_else(|| Error::Inconsistency("no octonion extension in characteristic 2".into()))?;
    let mut v = Octonion::zero(nv, p);
    for (u, (k, mono)) in unknowns.iter().enumerate() {
        if sol[u] != 0 {
            v = v.add(&vec_oct(&basis[*k], nv, p).scale(&Poly::monomial(nv, p, mono.clone(), sol[u])));
        }
    }
    Ok(e11.add(&v))
}

/// Outcome of the symbolic automorphism test.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AutCheck {
    pub fixes_e: bool,
    pub preserves_norm: bool,
    pub failed_products: Vec<(String, String)>,
}

impl AutCheck {
    pub fn ok(&self) -> bool {
        self.fixes_e && self.preserves_norm && self.failed_products.is_empty()
    }
}

fn image_of(img: &[Octonion], x: &Octonion) -> Octonion {
    let mut out = Octonion::zero(x.nvars(), x.modulus());
    for (i, c) in x.c.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&img[i].scale(c));
        }
    }
    out
}

/// Checks that the 8-dimensional images define an automorphism: multiplicative
/// on all 64 basis pairs and an isometry of the norm.
pub fn check_octonion_images(img: &[Octonion]) -> AutCheck {
    let nv = img[0].nvars();
    let p = img[0].modulus();
    let e = Octonion::unit(nv, p);
    let fixes_e = image_of(img, &e) == e;
    let b = |i: usize| Octonion::basis(i, nv, p);
    let mut preserves_norm = true;
    for i in 0..8 {
        preserves_norm &= norm(&img[i]) == norm(&b(i));
        for j in i + 1..8 {
            preserves_norm &= bilinear(&img[i], &img[j]) == bilinear(&b(i), &b(j));
        }
    }
    let mut failed = vec![];
    for i in 0..8 {
        for j in 0..8 {
            let lhs = image_of(img, &multiply(&b(i), &b(j)));
            let rhs = multiply(&img[i], &img[j]);
            if lhs != rhs {
                failed.push((LABELS[i].to_string(), LABELS[j].to_string()));
            }
        }
    }
    AutCheck { fixes_e, preserves_norm, failed_products: failed }
}

/// Extends a 7×7 matrix on `V` to the octonions and runs the automorphism
/// test, symbolically in the parameters.
pub fn is_octonion_automorphism(m7: &PolyMat, kind: VBasis) -> Result<AutCheck> {
    let img = extend_to_octonions(m7, kind)?;
    Ok(check_octonion_images(&img))
}

/// Lifts a characteristic 2 matrix on `W` to `V` fixing `e`; the row of `e`
/// is forced by the norm: `r_j² = q(m·b_j)`.
pub fn lift_w6(m6: &PolyMat) -> Result<PolyMat> {
    let nv = m6[0][0].nvars();
    let p = 2;
    let basis = v7_basis(VBasis::Char2);
    let mut m7 = poly_identity(7, nv, p);
    for (a, &i) in W6_FROM_V7.iter().enumerate() {
        for (b, &j) in W6_FROM_V7.iter().enumerate() {
            m7[i][j] = m6[a][b].reduce_mod(p);
        }
    }
    for &j in &W6_FROM_V7 {
        let mut w = Octonion::zero(nv, p);
        for &i in &W6_FROM_V7 {
            w = w.add(&vec_oct(&basis[i], nv, p).scale(&m7[i][j]));
        }
        let qv = norm(&w);
        let mut root = Poly::zero(nv, p);
        for (e, c) in qv.terms() {
            if e.iter().any(|k| k % 2 != 0) {
                return Err(Error::Inconsistency("norm defect is not a square".into()));
            }
            root = &root + &Poly::monomial(nv, p, e.iter().map(|k| k / 2).collect(), c);
        }
        m7[3][j] = root;
    }
    Ok(m7)
}

/// The alternating form induced on `W` in characteristic 2 is preserved.
pub fn preserves_w_form(m6: &PolyMat) -> bool {
    let nv = m6[0][0].nvars();
    let p = 2;
    let basis = v7_basis(VBasis::Char2);
    let vec_of = |j: usize| -> Octonion {
        let mut w = Octonion::zero(nv, p);
        for (a, &i) in W6_FROM_V7.iter().enumerate() {
            w = w.add(&vec_oct(&basis[i], nv, p).scale(&m6[a][j].reduce_mod(p)));
        }
        w
    };
    let b = |j: usize| vec_oct(&basis[W6_FROM_V7[j]], nv, p);
    (0..6).all(|i| (0..6).all(|j| bilinear(&vec_of(i), &vec_of(j)) == bilinear(&b(i), &b(j))))
}

/// Full characteristic 2 test of a matrix on `W`: symplectic, and its lift
/// to `V` extends to an octonion automorphism.
pub fn is_w6_automorphism(m6: &PolyMat) -> Result<AutCheck> {
    let sym = preserves_w_form(m6);
    let mut c = is_octonion_automorphism(&lift_w6(m6)?, VBasis::Char2)?;
    c.preserves_norm &= sym;
    Ok(c)
}

/// `θ1(A) = diag(A, A^{(1)} det A⁻¹, A)` and `θ2(B) = diag(det B⁻¹, B, B, det B)`
/// on `W`, for 2×2 blocks with unit determinant given as polynomials.
pub fn theta_embedding(which: u8, a: &[[Poly; 2]; 2]) -> Result<PolyMat> {
    let nv = a[0][0].nvars();
    let p = 2;
    let a: Vec<Vec<Poly>> = a.iter().map(|r| r.iter().map(|x| x.reduce_mod(p)).collect()).collect();
    let det = &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0]);
    if det != Poly::one(nv, p) {
        return Err(Error::Precondition("θ needs det = 1 over the polynomial ring".into()));
    }
    let mut m = poly_identity(6, nv, p);
    let mut put = |r0: usize, blk: &Vec<Vec<Poly>>| {
        for i in 0..2 {
            for j in 0..2 {
                m[r0 + i][r0 + j] = blk[i][j].clone();
            }
        }
    };
    match which {
        1 => {
            let frob: Vec<Vec<Poly>> = a.iter().map(|r| r.iter().map(|x| x.pow(2)).collect()).collect();
            put(0, &a);
            put(2, &frob);
            put(4, &a);
        }
        2 => {
            put(1, &a);
            put(3, &a);
        }
        _ => return Err(Error::Precondition("θ index must be 1 or 2".into())),
    }
    Ok(m)
}

/// Diagonal exponents (in `a`) of `θ1(diag(a, a⁻¹))`.
pub fn theta1_torus_exponents() -> [i32; 6] {
    // A = diag(a, a⁻¹), A^{(1)} = diag(a², a⁻²), det A = 1.
    [1, -1, 2, -2, 1, -1]
}

/// Dimension over F_q of the derivations of the octonions of torus weight γ
/// that kill `e`, computed in characteristic `q` (odd).
pub fn derivation_space_dim(gamma: [i32; 2], q: u32) -> Result<usize> {
    if q % 2 == 0 {
        return Err(Error::Precondition("derivation count needs odd characteristic".into()));
    }
    let units: Vec<(usize, usize)> = (0..7)
        .flat_map(|r| (0..7).map(move |c| (r, c)))
        .filter(|&(r, c)| {
            [V7_WEIGHTS[r][0] - V7_WEIGHTS[c][0], V7_WEIGHTS[r][1] - V7_WEIGHTS[c][1]] == gamma
        })
        .collect();
    let mut cols = vec![];
    for &(r, c) in &units {
        let mut d = modp::zeros(7, 7);
        d[r][c] = 1;
        // D(xy) − D(x)y − xD(y) over the eight basis vectors, via the
        // extension D(e) = 0, D(e11) = D(h)/2.
        let img = derivation_images(&d, q);
        let mut defect = vec![];
        for i in 0..8 {
            for j in 0..8 {
                let bi = Octonion::basis(i, 0, q);
                let bj = Octonion::basis(j, 0, q);
                let lhs = image_of(&img, &multiply(&bi, &bj));
                let rhs = multiply(&img[i], &bj).add(&multiply(&bi, &img[j]));
                defect.extend(lhs.sub(&rhs).c.iter().map(|x| x.constant_term()));
            }
        }
        cols.push(defect);
    }
    let rank = modp::rank(&cols, q);
    Ok(units.len() - rank)
}

fn derivation_images(d: &Mat, q: u32) -> Vec<Octonion> {
    let m: PolyMat = const_mat(d, 0, q);
    let basis = v7_basis(VBasis::General);
    let col = |j: usize| -> Octonion {
        let mut coords = vec![Poly::zero(0, q); 7];
        coords[j] = Poly::one(0, q);
        apply_v(&m, &coords, VBasis::General)
    };
    let mut img = vec![Octonion::zero(0, q); 8];
    for (j, b) in basis.iter().enumerate() {
        if j != 3 {
            let k = b.iter().position(|&x| x == 1).expect("unit vector");
            img[k] = col(j);
        }
    }
    let half = Poly::constant(0, q, modp::inv(2, q));
    img[E11] = col(3).scale(&half);
    img[E22] = col(3).scale(&half.scale(-1));
    img
}

/// The composition law `q(xy) = q(x)q(y)` as a polynomial identity in the 16
/// coordinates of `x` and `y`.
pub fn composition_identity(p: u32) -> bool {
    let nv = 16;
    let x = Octonion { c: (0..8).map(|i| Poly::var(nv, p, i)).collect() };
    let y = Octonion { c: (0..8).map(|i| Poly::var(nv, p, 8 + i)).collect() };
    norm(&multiply(&x, &y)) == &norm(&x) * &norm(&y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(i: usize) -> Octonion {
        Octonion::basis(i, 0, 0)
    }

    #[test]
    fn table_examples() {
        assert_eq!(multiply(&b(E11), &b(E12)), b(E12));
        assert_eq!(multiply(&b(F11), &b(F21)), b(E21).scale(&Poly::constant(0, 0, -1)));
        let e = Octonion::unit(0, 0);
        for i in 0..8 {
            assert_eq!(multiply(&e, &b(i)), b(i));
            assert_eq!(multiply(&b(i), &e), b(i));
        }
        assert_eq!(norm(&e).constant_term(), 1);
        assert!(norm(&b(E12)).is_zero());
    }

    #[test]
    fn composition_law() {
        assert!(composition_identity(0));
    }

    #[test]
    fn families_are_automorphisms_over_z() {
        for (g, _) in U7.iter() {
            let m = root_subgroup_7(g, 1, 0, 0).unwrap();
            let c = is_octonion_automorphism(&m, VBasis::General).unwrap();
            assert!(c.ok(), "{g:?}: {c:?}");
            assert_eq!(family_weight(&m, &V7_WEIGHTS, 0), Some(*g));
        }
    }

    #[test]
    fn printed_errors_over_z() {
        let bad: Vec<[i32; 2]> = printed_roots()
            .into_iter()
            .filter(|g| {
                let m = printed_root_subgroup_7(g, 1, 0, 0).unwrap();
                !is_octonion_automorphism(&m, VBasis::General).unwrap().ok()
            })
            .collect();
        assert_eq!(bad, vec![[1, 0], [2, 1], [-2, -1], [1, 1], [-1, -1]]);
        // Only the missing entry survives reduction mod 2.
        for g in printed_roots() {
            let a = printed_root_subgroup_7(&g, 1, 0, 2).unwrap();
            let b = root_subgroup_7(&g, 1, 0, 2).unwrap();
            assert_eq!(a == b, g != [2, 1], "{g:?}");
        }
    }

    #[test]
    fn derived_family() {
        for g in [[3, 1], [-3, -1]] {
            let m = derive_missing_root_subgroup(&g, 1, 0, 0).unwrap();
            assert_eq!(family_weight(&m, &V7_WEIGHTS, 0), Some(g));
            assert!(is_octonion_automorphism(&m, VBasis::General).unwrap().ok());
            assert!(homomorphism_check(|nv, v| derive_missing_root_subgroup(&g, nv, v, 0)).unwrap());
        }
        assert!(matches!(root_subgroup_7(&[3, 1], 1, 0, 0), Err(Error::NotImplemented(_))));
    }

    #[test]
    fn char2_extension() {
        for g in G2_ROOTS {
            let m = root_subgroup_7_any(&g, 1, 0, 2).unwrap();
            let c = is_octonion_automorphism(&m, VBasis::Char2).unwrap();
            assert!(c.ok(), "{g:?}: {c:?}");
        }
    }

    #[test]
    fn torus() {
        let t = torus_matrix(2, 3, 5).unwrap();
        let m = const_mat(&t, 0, 5);
        assert!(is_octonion_automorphism(&m, VBasis::General).unwrap().ok());
        assert_eq!(torus_matrix(1, 1, 7).unwrap(), modp::identity(7));
    }
}
