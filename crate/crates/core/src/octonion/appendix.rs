//! Characteristic 2 computations on top of the octonion model: the displayed
//! matrices checked one by one, Lie stabilizers of the three base points, and
//! the quadric and open cell equations.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::*;
use crate::chevalley::Chevalley;
use crate::psub::{is_p_subalgebra, lie_maximal_parabolic, TSubspace};
use crate::report::Report;

/// Which set of matrices to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Entries and labels as printed.
    Printed,
    /// After fixing the misprints.
    Corrected,
}

/// Outcome of the checks on one displayed family.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DisplayCheck {
    pub label: String,
    pub dim: usize,
    pub modulus: u32,
    pub expected_weight: Option<[i32; 2]>,
    pub weight: Option<[i32; 2]>,
    pub homomorphism: bool,
    pub automorphism: bool,
    pub failed_products: usize,
}

impl DisplayCheck {
    pub fn ok(&self) -> bool {
        self.homomorphism && self.automorphism && self.weight == self.expected_weight
    }

    pub fn to_report(&self) -> Report {
        let id = format!("g2-appendix-u{}-dim{}-p{}", self.label, self.dim, self.modulus);
        Report::new(id, self.ok(), serde_json::to_value(self).expect("serializable"))
    }
}

pub fn root_label(g: [i32; 2]) -> String {
    format!("[{},{}]", g[0], g[1])
}

fn family_7(src: Source, g: [i32; 2], nv: usize, var: usize, p: u32) -> Result<PolyMat> {
    match src {
        Source::Printed => printed_root_subgroup_7(&g, nv, var, p),
        Source::Corrected => root_subgroup_7_any(&g, nv, var, p),
    }
}

/// Checks every displayed dim-7 family over ℤ (`p = 0`) or F_2.
pub fn check_displays_7(src: Source, p: u32) -> Result<Vec<DisplayCheck>> {
    let kind = match p {
        0 => VBasis::General,
        2 => VBasis::Char2,
        _ => return Err(Error::UnsupportedCharacteristic(p)),
    };
    let mut out = vec![];
    for g in printed_roots() {
        let m = family_7(src, g, 1, 0, p)?;
        let aut = match is_octonion_automorphism(&m, kind) {
            Ok(c) => c,
            Err(Error::Inconsistency(_)) => {
                AutCheck { fixes_e: false, preserves_norm: false, failed_products: vec![("-".into(), "-".into())] }
            }
            Err(e) => return Err(e),
        };
        out.push(DisplayCheck {
            label: root_label(g),
            dim: 7,
            modulus: p,
            expected_weight: Some(g),
            weight: family_weight(&m, &V7_WEIGHTS, 0),
            homomorphism: homomorphism_check(|nv, v| family_7(src, g, nv, v, p))?,
            automorphism: aut.ok(),
            failed_products: aut.failed_products.len(),
        });
    }
    Ok(out)
}

/// The upper unipotent `[[1, λ], [0, 1]]` as a polynomial block.
fn unipotent_block(nv: usize, var: usize) -> [[Poly; 2]; 2] {
    [[Poly::one(nv, 2), Poly::var(nv, 2, var)], [Poly::zero(nv, 2), Poly::one(nv, 2)]]
}

fn w_family(src: Source, label: &str, nv: usize, var: usize) -> Result<PolyMat> {
    match label {
        "theta1" => theta_embedding(1, &unipotent_block(nv, var)),
        "theta2" => theta_embedding(2, &unipotent_block(nv, var)),
        _ => {
            let g = parse_root_label(label)?;
            match src {
                Source::Printed => printed_root_subgroup_6(&g, nv, var),
                Source::Corrected => root_subgroup_6(&g, nv, var),
            }
        }
    }
}

fn parse_root_label(s: &str) -> Result<[i32; 2]> {
    let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']'));
    let parts: Vec<i32> = inner
        .ok_or_else(|| Error::Parse(format!("bad root label {s:?}")))?
        .split(',')
        .map(|t| t.trim().parse::<i32>().map_err(|e| Error::Parse(e.to_string())))
        .collect::<Result<_>>()?;
    match parts.as_slice() {
        [a, b] => Ok([*a, *b]),
        _ => Err(Error::Parse(format!("bad root label {s:?}"))),
    }
}

/// The ten dim-6 root subgroups plus the upper unipotents of `θ1`, `θ2`
/// (expected weights `2α1+α2` and `−3α1−2α2`), all over F_2[λ].
pub fn check_displays_6(src: Source) -> Result<Vec<DisplayCheck>> {
    let mut labels: Vec<(String, [i32; 2])> = printed_roots().into_iter().map(|g| (root_label(g), g)).collect();
    labels.push(("theta1".into(), [2, 1]));
    labels.push(("theta2".into(), [-3, -2]));
    let ww = w6_weights();
    let mut out = vec![];
    for (label, g) in labels {
        let m = w_family(src, &label, 1, 0)?;
        let aut = match is_w6_automorphism(&m) {
            Ok(c) => c,
            Err(Error::Inconsistency(_)) => {
                AutCheck { fixes_e: false, preserves_norm: false, failed_products: vec![("-".into(), "-".into())] }
            }
            Err(e) => return Err(e),
        };
        let homomorphism = homomorphism_check(|nv, v| w_family(src, &label, nv, v))?;
        out.push(DisplayCheck {
            label,
            dim: 6,
            modulus: 2,
            expected_weight: Some(g),
            weight: family_weight(&m, &ww, 0),
            homomorphism,
            automorphism: aut.ok(),
            failed_products: aut.failed_products.len(),
        });
    }
    Ok(out)
}

/// A one-parameter subgroup scheme `U_{−γ} ∩ Stab` of `G_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Height {
    /// The identity only.
    Trivial,
    /// The kernel of the `k`-th Frobenius, `α_{p^k}`.
    Frobenius(u32),
    /// All of `U_{−γ}`.
    Whole,
}

/// The three base points of the stabilizer lemmas, plus the quotient variant
/// of the third one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Config {
    /// `[e12]` in `P(V)`.
    V7Line,
    /// `[e12]` in `P(W)`.
    W6Line,
    /// `[f12 ∧ f22 ∧ e12]` in `P(Λ³V)`.
    Lambda3V,
    /// The image of the same 3-vector in `P(Λ³W)`.
    Lambda3W,
}

impl Config {
    pub const ALL: [Config; 4] = [Config::V7Line, Config::W6Line, Config::Lambda3V, Config::Lambda3W];

    pub fn name(self) -> &'static str {
        match self {
            Config::V7Line => "V7",
            Config::W6Line => "W6",
            Config::Lambda3V => "L3V",
            Config::Lambda3W => "L3W",
        }
    }

    /// Coordinate subspace (indices) whose stabilizer is computed.
    pub fn support(self) -> &'static [usize] {
        match self {
            Config::V7Line => &[2],
            Config::W6Line => &[2],
            Config::Lambda3V => &[0, 2, 5],
            Config::Lambda3W => &[0, 2, 4],
        }
    }

    fn on_w(self) -> bool {
        matches!(self, Config::W6Line | Config::Lambda3W)
    }
}

#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub config: Config,
    pub lie: TSubspace,
    /// `U_{−γ} ∩ Stab` for each positive root `γ`, keyed by `γ`.
    pub heights: BTreeMap<[i32; 2], Height>,
}

fn lambda_linear(m: &PolyMat) -> Mat {
    m.iter().map(|r| r.iter().map(|x| x.coeff(&[1])).collect()).collect()
}

/// Univariate polynomial over F_p as a dense coefficient list.
fn dense(x: &Poly, p: u32) -> Vec<i64> {
    let mut v = vec![];
    for (e, c) in x.terms() {
        let k = e[0] as usize;
        if v.len() <= k {
            v.resize(k + 1, 0);
        }
        v[k] = modp::reduce(c, p);
    }
    v
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_gcd(mut a: Vec<i64>, mut b: Vec<i64>, p: u32) -> Vec<i64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lead = modp::inv(*b.last().expect("nonzero"), p);
        while a.len() >= b.len() {
            let f = modp::reduce(*a.last().expect("nonzero") * lead, p);
            let shift = a.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                a[shift + i] = modp::reduce(a[shift + i] - f * c, p);
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Height of `{λ : m(λ) preserves the coordinate subspace S}` in characteristic 2.
fn subgroup_height(m: &PolyMat, s: &[usize]) -> Result<Height> {
    let n = m.len();
    let mut g: Vec<i64> = vec![];
    for i in (0..n).filter(|i| !s.contains(i)) {
        for &j in s {
            g = poly_gcd(g, dense(&m[i][j], 2), 2);
        }
    }
    if g.is_empty() {
        return Ok(Height::Whole);
    }
    // A subgroup scheme of G_a through 0 is cut out by λ^{2^k} here.
    let deg = g.len() - 1;
    if g[..deg].iter().any(|&c| c != 0) || !deg.is_power_of_two() {
        return Err(Error::Inconsistency(format!("stabilizer ideal {g:?} is not a Frobenius kernel")));
    }
    Ok(if deg == 1 { Height::Trivial } else { Height::Frobenius(deg.trailing_zeros()) })
}

fn family_on(config: Config, g: [i32; 2]) -> Result<PolyMat> {
    if config.on_w() {
        root_subgroup_6(&g, 1, 0)
    } else {
        root_subgroup_7_any(&g, 1, 0, 2)
    }
}

/// The Lie stabilizer of a base point inside `Lie G2` over F_2, in the
/// abstract Chevalley basis of `G2` (α1 short).
///
/// Root spaces act through the λ-linear parts of the root subgroups; the torus
/// acts diagonally on weight vectors and so stabilizes every coordinate
/// subspace.
pub fn stabilizer_lie(config: Config) -> Result<Stabilizer> {
    let ch = Chevalley::of("G2");
    let s = config.support();
    let mut roots = vec![];
    let mut heights = BTreeMap::new();
    for g in G2_ROOTS {
        let m = family_on(config, g)?;
        let l = lambda_linear(&m);
        let stable = (0..l.len()).filter(|i| !s.contains(i)).all(|i| s.iter().all(|&j| l[i][j] == 0));
        if stable {
            roots.push(ch.rs().index_of(&g).ok_or_else(|| Error::NotARoot(g.to_vec()))?);
        }
        if g[0] < 0 || g[1] < 0 {
            heights.insert([-g[0], -g[1]], subgroup_height(&m, s)?);
        }
    }
    let lie = TSubspace::lie_t(&ch, 2).with_roots(roots);
    Ok(Stabilizer { config, lie, heights })
}

/// `Lie P^{α1}`, `𝔥` and `𝔩` for G2 over F_2.
pub fn expected_stabilizers() -> Result<[TSubspace; 3]> {
    let ch = Chevalley::of("G2");
    let p = lie_maximal_parabolic(&ch, 0, 2);
    let h = p.with_root_coeffs(&ch, &[&[-2, -1]])?;
    let l = p.with_root_coeffs(&ch, &[&[-1, 0], &[-1, -1]])?;
    Ok([p, h, l])
}

pub fn expected_for(config: Config) -> Result<TSubspace> {
    let [p, h, l] = expected_stabilizers()?;
    Ok(match config {
        Config::V7Line => p,
        Config::W6Line => h,
        Config::Lambda3V | Config::Lambda3W => l,
    })
}

pub fn stabilizer_report(config: Config) -> Result<Report> {
    let ch = Chevalley::of("G2");
    let st = stabilizer_lie(config)?;
    let expected = expected_for(config)?;
    let psub = is_p_subalgebra(&ch, &st.lie)?;
    let heights: BTreeMap<String, Height> =
        st.heights.iter().filter(|(_, h)| **h != Height::Whole).map(|(g, h)| (root_label(*g), *h)).collect();
    let ok = st.lie == expected && psub;
    Ok(Report::new(
        format!("stabilizer-{}", config.name()),
        ok,
        json!({
            "dim": st.lie.dim(),
            "expected_dim": expected.dim(),
            "equals_expected": st.lie == expected,
            "p_subalgebra": psub,
            "stabilizer": st.lie.to_json(&ch),
            "heights_of_negative_roots": heights,
        }),
    ))
}

/// Basis orders of `V` used in the open cell computation.
pub const CELL_BASIS: [&str; 7] = ["f12", "f22", "e12", "e", "e21", "f11", "f21"];
/// The order stated next to the printed ν expansion.
pub const NU_STATED_BASIS: [&str; 7] = ["f12", "f22", "e12", "e", "f21", "f11", "e21"];

fn named_vector(name: &str) -> [i64; 8] {
    let mut v = [0; 8];
    match name {
        "e" => {
            v[E11] = 1;
            v[E22] = 1;
        }
        "h" => {
            v[E11] = 1;
            v[E22] = -1;
        }
        _ => v[label_index(name).expect("basis label")] = 1,
    }
    v
}

/// The octonion with coordinates `coords` in the named basis.
pub fn combine(basis: &[&str], coords: &[Poly]) -> Octonion {
    let nv = coords[0].nvars();
    let p = coords[0].modulus();
    let mut o = Octonion::zero(nv, p);
    for (name, c) in basis.iter().zip(coords) {
        o = o.add(&Octonion::from_ints(&named_vector(name), nv, p).scale(c));
    }
    o
}

// (a, b, c) index triples of the printed 30-term expansion of ν, in print order.
const NU_PRINTED: [(usize, usize, usize); 30] = [
    (0, 1, 4), (0, 4, 1), (1, 0, 4), (1, 4, 0), (4, 0, 1), (4, 1, 0),
    (0, 3, 6), (0, 6, 3), (3, 0, 6), (3, 0, 6), (6, 0, 3), (6, 3, 0),
    (1, 3, 5), (1, 5, 3), (3, 1, 5), (3, 5, 1), (5, 1, 3), (5, 3, 1),
    (2, 3, 4), (2, 4, 3), (3, 2, 4), (3, 4, 2), (4, 2, 3), (4, 3, 2),
    (2, 5, 6), (2, 6, 5), (5, 2, 6), (5, 6, 2), (6, 2, 5), (6, 5, 2),
];

/// The 30-term expansion, with the repeated `a3 b0 c6` read as `a3 b6 c0`
/// when `corrected`.
pub fn nu_expansion(corrected: bool) -> Poly {
    let nv = 21;
    let mut out = Poly::zero(nv, 2);
    for (k, &(i, j, l)) in NU_PRINTED.iter().enumerate() {
        let (i, j, l) = if corrected && k == 9 { (3, 6, 0) } else { (i, j, l) };
        let mut e = vec![0; nv];
        e[i] = 1;
        e[7 + j] = 1;
        e[14 + l] = 1;
        out = &out + &Poly::monomial(nv, 2, e, 1);
    }
    out
}

/// `ν(x, y, z)` over F_2 with `x = Σ a_i v_i` etc. in the given basis order.
pub fn nu_generic(basis: &[&str]) -> Poly {
    let nv = 21;
    let vars = |off: usize| -> Vec<Poly> { (0..7).map(|i| Poly::var(nv, 2, off + i)).collect() };
    let x = combine(basis, &vars(0));
    let y = combine(basis, &vars(7));
    let z = combine(basis, &vars(14));
    trilinear_nu(&x, &y, &z)
}

fn quadratic_form_in(basis: &[&str], p: u32) -> Poly {
    let xs: Vec<Poly> = (0..7).map(|i| Poly::var(7, p, i)).collect();
    norm(&combine(basis, &xs))
}

/// The 7×7 family `U` of the open cell with free entries
/// `a3..a6, b3..b6, c3..c6, h4..h6` (15 variables, in that order).
pub fn cell_unipotent_general() -> PolyMat {
    let nv = 15;
    let v = |i: usize| Poly::var(nv, 2, i);
    let mut m = poly_identity(7, nv, 2);
    for col in 0..3 {
        for row in 3..7 {
            m[row][col] = v(col * 4 + row - 3);
        }
    }
    for row in 4..7 {
        m[row][3] = v(12 + row - 4);
    }
    m
}

pub const CELL_VAR_NAMES: [&str; 15] =
    ["a3", "a4", "a5", "a6", "b3", "b4", "b5", "b6", "c3", "c4", "c5", "c6", "h4", "h5", "h6"];

/// Conditions for the general cell family to preserve `q`: the nonzero
/// coefficients of `q(Ux) − q(x)` as polynomials in the 15 entries.
pub fn cell_isometry_conditions() -> Vec<Poly> {
    let u = cell_unipotent_general();
    let nv = 22;
    let lift = |x: &Poly| -> Poly {
        let mut out = Poly::zero(nv, 2);
        for (e, c) in x.terms() {
            let mut f = e.clone();
            f.extend([0; 7]);
            out = &out + &Poly::monomial(nv, 2, f, c);
        }
        out
    };
    let xs: Vec<Poly> = (0..7).map(|i| Poly::var(nv, 2, 15 + i)).collect();
    let ux: Vec<Poly> = (0..7)
        .map(|r| (0..7).fold(Poly::zero(nv, 2), |acc, c| &acc + &(&lift(&u[r][c]) * &xs[c])))
        .collect();
    let diff = &norm(&combine(&CELL_BASIS, &ux)) - &norm(&combine(&CELL_BASIS, &xs));
    let xvars: Vec<usize> = (15..22).collect();
    diff.coefficients_in(&xvars)
        .into_values()
        .map(|c| {
            let mut out = Poly::zero(15, 2);
            for (e, k) in c.terms() {
                out = &out + &Poly::monomial(15, 2, e[..15].to_vec(), k);
            }
            out
        })
        .collect()
}

/// The printed list of conditions, as polynomials in the 15 entries.
pub fn cell_expected_conditions() -> Vec<Poly> {
    let v = |i: usize| Poly::var(15, 2, i);
    vec![
        &v(3) + &v(0).pow(2),
        &v(6) + &v(4).pow(2),
        &v(9) + &v(8).pow(2),
        &v(7) + &v(2),
        &v(11) + &v(1),
        &v(10) + &v(5),
        v(12),
        v(13),
        v(14),
    ]
}

/// The reduced cell family `C(λ1..λ6)`: its first three columns.
pub fn cell_columns() -> [Vec<Poly>; 3] {
    let nv = 6;
    let l = |i: usize| Poly::var(nv, 2, i - 1);
    let one = Poly::one(nv, 2);
    let z = Poly::zero(nv, 2);
    [
        vec![one.clone(), z.clone(), z.clone(), l(1), l(4), l(6), l(1).pow(2)],
        vec![z.clone(), one.clone(), z.clone(), l(2), l(5), l(2).pow(2), l(6)],
        vec![z.clone(), z, one, l(3), l(3).pow(2), l(5), l(4)],
    ]
}

/// `ν` on the 3-plane spanned by the columns of `C`.
pub fn cell_nu() -> Poly {
    let [c0, c1, c2] = cell_columns();
    trilinear_nu(&combine(&CELL_BASIS, &c0), &combine(&CELL_BASIS, &c1), &combine(&CELL_BASIS, &c2))
}

/// `(λ3 + λ6 + λ1λ2)²`.
pub fn cell_nu_expected() -> Poly {
    let l = |i: usize| Poly::var(6, 2, i - 1);
    (&(&l(3) + &l(6)) + &(&l(1) * &l(2))).pow(2)
}

/// The `B`-orbit through `[e12]`: `Π_{γ>0} u_{−γ}(λ_γ) · e12` over F_2[λ1..λ6].
pub fn orbit_point() -> Result<Vec<Poly>> {
    let nv = 6;
    let pos = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];
    let mut v: Vec<Poly> = (0..7).map(|i| if i == 2 { Poly::one(nv, 2) } else { Poly::zero(nv, 2) }).collect();
    for (k, g) in pos.iter().enumerate() {
        let m = root_subgroup_7_any(&[-g[0], -g[1]], nv, k, 2)?;
        v = crate::poly::poly_mat_vec(&m, &v);
    }
    Ok(v)
}

/// Quadric and open cell identities in characteristic 2.
pub fn quadric_and_cell_checks(p: u32) -> Result<Report> {
    if p != 2 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    let x = |i: usize| Poly::var(7, 2, i);
    let v7c2 = ["f12", "f11", "e12", "e", "e21", "f22", "f21"];
    let quadric = &(&(&x(3).pow(2) + &(&x(2) * &x(4))) + &(&x(1) * &x(5))) + &(&x(0) * &x(6));
    let a = quadratic_form_in(&v7c2, 2) == quadric;
    let xz = |i: usize| Poly::var(7, 0, i);
    let general = &(&(&(&xz(0) * &xz(6)) - &xz(3).pow(2)) - &(&xz(2) * &xz(4))) - &(&xz(1) * &xz(5));
    let a_int = quadratic_form_in(&["f12", "f11", "e12", "h", "e21", "f22", "f21"], 0) == general;

    let pt = orbit_point()?;
    let b = norm(&combine(&v7c2, &pt)).is_zero();

    let mut got = cell_isometry_conditions();
    let mut want = cell_expected_conditions();
    got.sort_by_key(|p| p.to_string());
    want.sort_by_key(|p| p.to_string());
    let c_conditions = got == want;
    let nu = cell_nu();
    let c_nu = nu == cell_nu_expected();
    let at_zero = nu.eval(&[0; 6]) == 0;
    // λ = (1,1,0,0,0,0): λ3 + λ6 + λ1λ2 = 1.
    let off_point = nu.eval(&[1, 1, 0, 0, 0, 0]) == 1;

    let names = ["l1", "l2", "l3", "l4", "l5", "l6"];
    Ok(Report::new(
        "quadric",
        a && a_int && b && c_conditions && c_nu && at_zero && off_point,
        json!({
            "quadric_char2": a,
            "quadric_general": a_int,
            "orbit_on_quadric": b,
            "cell_conditions_match": c_conditions,
            "cell_conditions": got.iter().map(|p| p.display_with(&CELL_VAR_NAMES)).collect::<Vec<_>>(),
            "cell_nu": nu.display_with(&names),
            "cell_nu_is_square": c_nu,
            "base_point_on_hyperplane": at_zero,
            "off_point_value_one": off_point,
        }),
    ))
}

/// Which basis order the printed ν expansion matches, with and without the
/// duplicated-term repair.
pub fn nu_expansion_report() -> Report {
    let cell = nu_generic(&CELL_BASIS);
    let stated = nu_generic(&NU_STATED_BASIS);
    let fixed = nu_expansion(true);
    let printed = nu_expansion(false);
    let w = json!({
        "printed_matches_cell_basis": printed == cell,
        "corrected_matches_cell_basis": fixed == cell,
        "corrected_matches_stated_basis": fixed == stated,
        "terms": cell.num_terms(),
    });
    Report::new("nu-expansion", fixed == cell, w)
}

fn theta_report() -> Result<Report> {
    let t1 = theta_embedding(1, &unipotent_block(1, 0))?;
    let t2 = theta_embedding(2, &unipotent_block(1, 0))?;
    let matches1 = t1 == root_subgroup_6(&[2, 1], 1, 0)?;
    let matches2 = t2 == root_subgroup_6(&[-3, -2], 1, 0)?;
    // Weyl element [[0,1],[1,0]] has determinant 1 in characteristic 2.
    let w: [[Poly; 2]; 2] = [[Poly::zero(0, 2), Poly::one(0, 2)], [Poly::one(0, 2), Poly::zero(0, 2)]];
    let weyl_ok = is_w6_automorphism(&theta_embedding(1, &w)?)?.ok() && is_w6_automorphism(&theta_embedding(2, &w)?)?.ok();
    let ww = w6_weights();
    let torus_ok = theta1_torus_exponents().iter().zip(&ww).all(|(e, w)| *e == w[0]);
    Ok(Report::new(
        "g2-appendix-theta",
        matches1 && matches2 && weyl_ok && torus_ok,
        json!({
            "theta1_upper_is_u[2,1]": matches1,
            "theta2_upper_is_u[-3,-2]": matches2,
            "weyl_elements_are_automorphisms": weyl_ok,
            "theta1_torus_matches": torus_ok,
        }),
    ))
}

fn composition_report() -> Report {
    let z = composition_identity(0);
    Report::new("g2-appendix-composition", z, json!({ "q(xy)=q(x)q(y) over Z": z }))
}

fn summary(src: Source, checks: &[DisplayCheck]) -> Value {
    let bad: Vec<&str> = checks.iter().filter(|c| !c.ok()).map(|c| c.label.as_str()).collect();
    json!({ "source": format!("{src:?}"), "checked": checks.len(), "failing": bad })
}

/// Every report behind `verify g2-appendix`: one per displayed matrix (as
/// printed, over ℤ and F_2), the corrected sets, and one per stabilizer.
pub fn appendix_reports() -> Result<Vec<Report>> {
    let mut out = vec![composition_report(), nu_expansion_report()];
    for p in [0, 2] {
        out.extend(check_displays_7(Source::Printed, p)?.iter().map(DisplayCheck::to_report));
    }
    out.extend(check_displays_6(Source::Printed)?.iter().map(DisplayCheck::to_report));
    for (dim, checks) in [
        (7, [check_displays_7(Source::Corrected, 0)?, check_displays_7(Source::Corrected, 2)?].concat()),
        (6, check_displays_6(Source::Corrected)?),
    ] {
        let ok = checks.iter().all(DisplayCheck::ok);
        out.push(Report::new(format!("g2-appendix-corrected-dim{dim}"), ok, summary(Source::Corrected, &checks)));
    }
    let derived: Vec<Value> = [[3, 1], [-3, -1]]
        .iter()
        .map(|g| {
            let m = root_subgroup_7_any(g, 1, 0, 0)?;
            Ok(json!({
                "root": root_label(*g),
                "weight_ok": family_weight(&m, &V7_WEIGHTS, 0) == Some(*g),
                "automorphism": is_octonion_automorphism(&m, VBasis::General)?.ok(),
                "homomorphism": homomorphism_check(|nv, v| root_subgroup_7_any(g, nv, v, 0))?,
                "derivations_of_this_weight": derivation_space_dim(*g, 10007)?,
            }))
        })
        .collect::<Result<_>>()?;
    let dok = derived.iter().all(|d| {
        d["weight_ok"] == true && d["automorphism"] == true && d["homomorphism"] == true && d["derivations_of_this_weight"] == 1
    });
    out.push(Report::new("g2-appendix-derived-[3,1]", dok, Value::Array(derived)));
    out.push(theta_report()?);
    for c in Config::ALL {
        out.push(stabilizer_report(c)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stabilizers() {
        let dims: Vec<usize> = Config::ALL.iter().map(|&c| stabilizer_lie(c).unwrap().lie.dim()).collect();
        assert_eq!(dims, vec![9, 10, 9, 11]);
        let w = stabilizer_lie(Config::W6Line).unwrap();
        assert_eq!(w.heights[&[2, 1]], Height::Frobenius(1));
        let v = stabilizer_lie(Config::V7Line).unwrap();
        assert_eq!(v.heights[&[1, 0]], Height::Trivial);
        assert_eq!(v.heights[&[2, 1]], Height::Trivial);
        let l = stabilizer_lie(Config::Lambda3W).unwrap();
        assert_eq!(l.heights[&[1, 0]], Height::Frobenius(1));
        assert_eq!(l.heights[&[1, 1]], Height::Frobenius(1));
        assert_eq!(l.lie, expected_for(Config::Lambda3W).unwrap());
    }

    #[test]
    fn quadric_and_nu() {
        assert!(quadric_and_cell_checks(2).unwrap().ok());
        assert!(matches!(quadric_and_cell_checks(3), Err(Error::UnsupportedCharacteristic(3))));
        let r = nu_expansion_report();
        assert!(r.ok());
        assert_eq!(r.witness["printed_matches_cell_basis"], false);
        assert_eq!(r.witness["corrected_matches_stated_basis"], false);
    }

    #[test]
    fn gcd_heights() {
        let m: PolyMat = vec![
            vec![Poly::one(1, 2), Poly::zero(1, 2)],
            vec![Poly::monomial(1, 2, vec![4], 1), Poly::one(1, 2)],
        ];
        assert_eq!(subgroup_height(&m, &[0]).unwrap(), Height::Frobenius(2));
        assert_eq!(subgroup_height(&m, &[1]).unwrap(), Height::Whole);
        assert_eq!(poly_gcd(vec![0, 1, 1], vec![1, 1], 2), vec![1, 1]);
    }
}
