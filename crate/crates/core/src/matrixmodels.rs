//! Explicit matrix models of 𝔰𝔭_{2n} and 𝔰𝔬_{2n+1}.
//!
//! 𝔰𝔭_{2n} preserves `b(x,y) = Σ x_i y_{2n+1−i} − x_{2n+1−i} y_i`, 𝔰𝔬_{2n+1} the
//! quadratic form `Q(x) = x_n² + Σ_{i<n} x_i x_{2n−i}` (0-based coordinates).
//! The torus is `diag(t_1,…,t_n,[1,]t_n⁻¹,…,t_1⁻¹)`, so each basis vector has
//! an ε-weight and a matrix unit `E_{rc}` has weight `wt(r) − wt(c)`.
//!
//! The `−2` entries of the short root spaces of type B are kept literally, so
//! the same matrices reduce correctly to characteristic 2.

use serde_json::json;

use crate::chevalley::{Chevalley, Form};
use crate::error::{Error, Result};
use crate::modp::{self, Mat};
use crate::poly::Poly;
use crate::report::Report;
use crate::rootsys::{self, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classical {
    /// 𝔰𝔬_{2n+1}
    B,
    /// 𝔰𝔭_{2n}
    C,
}

impl Classical {
    pub fn size(self, n: usize) -> usize {
        match self {
            Classical::B => 2 * n + 1,
            Classical::C => 2 * n,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Classical::B => 'B',
            Classical::C => 'C',
        }
    }

    /// Chevalley form realized by the matrix group: SO_{2n+1} is adjoint,
    /// Sp_{2n} simply connected.
    pub fn form(self) -> Form {
        match self {
            Classical::B => Form::Adjoint,
            Classical::C => Form::SimplyConnected,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixLieElement {
    pub kind: Classical,
    pub n: usize,
    pub p: u32,
    pub entries: Mat,
}

impl MatrixLieElement {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn reduce(&self, p: u32) -> MatrixLieElement {
        MatrixLieElement { p, entries: modp::reduce_mat(&self.entries, p), ..self.clone() }
    }

    pub fn bracket(&self, o: &MatrixLieElement) -> MatrixLieElement {
        MatrixLieElement { entries: commutator(&self.entries, &o.entries, self.p), ..self.clone() }
    }

    pub fn is_member(&self) -> bool {
        is_member(self.kind, self.n, &self.entries, self.p)
    }
}

/// `X^♯ = Ω ᵗX Ω`, i.e. `(X^♯)_{ij} = X_{n−1−j, n−1−i}`.
pub fn sharp(x: &Mat) -> Mat {
    let n = x.len();
    (0..n).map(|i| (0..n).map(|j| x[n - 1 - j][n - 1 - i]).collect()).collect()
}

pub fn commutator(a: &Mat, b: &Mat, p: u32) -> Mat {
    let ab = modp::mul(a, b, p);
    let ba = modp::mul(b, a, p);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| modp::reduce(x - y, p)).collect())
        .collect()
}

/// ε-weight of each standard basis vector.
pub fn weights(kind: Classical, n: usize) -> Vec<Vec<i32>> {
    let size = kind.size(n);
    (0..size)
        .map(|k| {
            let mut w = vec![0; n];
            if k < n {
                w[k] = 1;
            } else if k >= size - n {
                w[size - 1 - k] = -1;
            }
            w
        })
        .collect()
}

fn block(m: &Mat, r0: usize, c0: usize, n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| m[r0 + i][c0 + j]).collect()).collect()
}

fn eq_mod(a: &Mat, b: &Mat, p: u32) -> bool {
    modp::reduce_mat(a, p) == modp::reduce_mat(b, p)
}

fn neg(a: &Mat) -> Mat {
    a.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

/// The defining linear conditions of the Lie algebra, over ℤ or F_p.
pub fn is_member(kind: Classical, n: usize, m: &Mat, p: u32) -> bool {
    if m.len() != kind.size(n) || m.iter().any(|r| r.len() != m.len()) {
        return false;
    }
    match kind {
        Classical::C => {
            let a = block(m, 0, 0, n);
            let b = block(m, 0, n, n);
            let c = block(m, n, 0, n);
            let d = block(m, n, n, n);
            eq_mod(&d, &neg(&sharp(&a)), p) && eq_mod(&b, &sharp(&b), p) && eq_mod(&c, &sharp(&c), p)
        }
        Classical::B => {
            let lo = n + 1;
            let a = block(m, 0, 0, n);
            let b = block(m, 0, lo, n);
            let c = block(m, lo, 0, n);
            let d = block(m, lo, lo, n);
            let r = |x: i64| modp::reduce(x, p);
            // Middle column against middle row: u = −2Ω w, u' = −2Ω v.
            let mid_ok = (0..n).all(|i| {
                r(m[i][n] + 2 * m[n][lo + n - 1 - i]) == 0 && r(m[lo + i][n] + 2 * m[n][n - 1 - i]) == 0
            });
            let anti_ok = (0..n).all(|i| r(b[n - 1 - i][i]) == 0 && r(c[n - 1 - i][i]) == 0);
            r(m[n][n]) == 0
                && mid_ok
                && anti_ok
                && eq_mod(&d, &neg(&sharp(&a)), p)
                && eq_mod(&b, &neg(&sharp(&b)), p)
                && eq_mod(&c, &neg(&sharp(&c)), p)
        }
    }
}

/// Parses an ε-vector into `(i, si, Some((j, sj)))` with `i < j`, or a single
/// coordinate `(i, si, None)` where `si` is the coefficient.
fn eps_shape(eps: &[i32]) -> Option<(usize, i32, Option<(usize, i32)>)> {
    let nz: Vec<(usize, i32)> = eps.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
    match nz.as_slice() {
        [(i, c)] => Some((*i, *c, None)),
        [(i, a), (j, b)] if a.abs() == 1 && b.abs() == 1 => Some((*i, *a, Some((*j, *b)))),
        _ => None,
    }
}

fn check_eps(kind: Classical, n: usize, eps: &[i32]) -> Result<()> {
    if eps.len() != n {
        return Err(Error::Precondition(format!("ε-vector must have length {n}")));
    }
    let label = format!("{}{}", kind.letter(), n);
    let sys = rootsys::RootSystem::new(label.parse().map_err(|_| Error::InvalidType(label.clone()))?);
    sys.from_epsilon(eps).map(|_| ())
}

/// Root space of `γ` (ε-coordinates) in 𝔰𝔭_{2n}.
pub fn root_space_matrix_c(n: usize, eps: &[i32]) -> Result<MatrixLieElement> {
    check_eps(Classical::C, n, eps)?;
    let mut m = modp::zeros(2 * n, 2 * n);
    let o = |k: usize| n - 1 - k;
    match eps_shape(eps).ok_or_else(|| Error::NotARoot(eps.to_vec()))? {
        (i, 2, None) => m[i][n + o(i)] = 1,
        (i, -2, None) => m[n + o(i)][i] = 1,
        (i, 1, Some((j, 1))) => {
            m[i][n + o(j)] = 1;
            m[j][n + o(i)] = 1;
        }
        (i, -1, Some((j, -1))) => {
            m[n + o(i)][j] = 1;
            m[n + o(j)][i] = 1;
        }
        (i, si, Some((j, _))) => {
            // ε_a − ε_b: E_ab and −E_ab^♯.
            let (a, b) = if si > 0 { (i, j) } else { (j, i) };
            m[a][b] = 1;
            m[n + o(b)][n + o(a)] = -1;
        }
        _ => return Err(Error::NotARoot(eps.to_vec())),
    }
    Ok(MatrixLieElement { kind: Classical::C, n, p: 0, entries: m })
}

/// Root space of `γ` (ε-coordinates) in 𝔰𝔬_{2n+1}.
///
/// For `±(ε_i + ε_j)` the off-diagonal block is `(E_ij − E_ji)Ω` (resp.
/// `Ω(E_ij − E_ji)`), which satisfies `B = −B^♯` over ℤ; modulo 2 the sign
/// is invisible.
pub fn root_space_matrix_b(n: usize, eps: &[i32]) -> Result<MatrixLieElement> {
    check_eps(Classical::B, n, eps)?;
    let size = 2 * n + 1;
    let lo = n + 1;
    let mut m = modp::zeros(size, size);
    let o = |k: usize| n - 1 - k;
    match eps_shape(eps).ok_or_else(|| Error::NotARoot(eps.to_vec()))? {
        (i, -1, None) => {
            m[n][i] = 1;
            m[lo + o(i)][n] = -2;
        }
        (i, 1, None) => {
            m[i][n] = -2;
            m[n][lo + o(i)] = 1;
        }
        (i, 1, Some((j, 1))) => {
            m[i][lo + o(j)] = 1;
            m[j][lo + o(i)] = -1;
        }
        (i, -1, Some((j, -1))) => {
            m[lo + o(i)][j] = 1;
            m[lo + o(j)][i] = -1;
        }
        (i, si, Some((j, _))) => {
            let (a, b) = if si > 0 { (i, j) } else { (j, i) };
            m[a][b] = 1;
            m[lo + o(b)][lo + o(a)] = -1;
        }
        _ => return Err(Error::NotARoot(eps.to_vec())),
    }
    Ok(MatrixLieElement { kind: Classical::B, n, p: 0, entries: m })
}

pub fn root_space_matrix(kind: Classical, n: usize, eps: &[i32]) -> Result<MatrixLieElement> {
    match kind {
        Classical::B => root_space_matrix_b(n, eps),
        Classical::C => root_space_matrix_c(n, eps),
    }
}

/// The common torus character of every nonzero entry, read off as the
/// exponent vector of the Laurent monomial `t^{wt(r) − wt(c)}`.
pub fn torus_character(kind: Classical, n: usize, m: &Mat) -> Option<Vec<i32>> {
    let w = weights(kind, n);
    let mut found: Option<Vec<i32>> = None;
    for (r, row) in m.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let ch: Vec<i32> = w[r].iter().zip(&w[c]).map(|(a, b)| a - b).collect();
            match &found {
                None => found = Some(ch),
                Some(f) if *f == ch => {}
                Some(_) => return None,
            }
        }
    }
    found
}

/// Diagonal matrix of a cocharacter given in ε-coordinates.
pub fn cocharacter_matrix(kind: Classical, n: usize, co: &[i64]) -> Mat {
    let w = weights(kind, n);
    let size = kind.size(n);
    let mut m = modp::zeros(size, size);
    for k in 0..size {
        m[k][k] = w[k].iter().zip(co).map(|(&a, &b)| a as i64 * b).sum();
    }
    m
}

/// Toral basis of the Chevalley form in ε-coordinates: simple coroots for
/// Sp, fundamental coweights `ε_1 + … + ε_k` for SO.
pub fn toral_basis_eps(kind: Classical, n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|k| {
            let mut v = vec![0; n];
            match kind {
                Classical::B => v.iter_mut().take(k + 1).for_each(|x| *x = 1),
                Classical::C => {
                    v[k] = 1;
                    if k + 1 < n {
                        v[k + 1] = -1;
                    }
                }
            }
            v
        })
        .collect()
}

fn chevalley_for(kind: Classical, n: usize) -> Result<Chevalley> {
    if !(2..=5).contains(&n) {
        return Err(Error::Precondition(format!("matrix models need 2 ≤ n ≤ 5, got {n}")));
    }
    let label = format!("{}{}", kind.letter(), n);
    Chevalley::new(rootsys::rs(&label), kind.form())
}

/// Per-root scalings `s_γ` with `X_γ ↦ s_γ M_γ`, derived over ℤ along
/// height chains. `None` when the matrices are not proportional as needed.
fn derive_scalings(ch: &Chevalley, mats: &[Mat], tor: &[Mat]) -> std::result::Result<Vec<i64>, String> {
    let rs = ch.rs();
    let np = rs.num_positive();
    let n = rs.rank();
    let mut s = vec![0i64; rs.num_roots()];
    let ratio = |a: &Mat, b: &Mat| -> Option<i64> {
        // a = c·b for an integer c?
        let mut c: Option<i64> = None;
        for (ra, rb) in a.iter().zip(b) {
            for (&x, &y) in ra.iter().zip(rb) {
                match (x, y) {
                    (0, 0) => {}
                    (_, 0) | (0, _) => return None,
                    (x, y) => {
                        if x % y != 0 {
                            return None;
                        }
                        match c {
                            None => c = Some(x / y),
                            Some(k) if k == x / y => {}
                            _ => return None,
                        }
                    }
                }
            }
        }
        c
    };
    for i in 0..n {
        s[i] = 1;
    }
    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by_key(|&g| rs.root(g).height());
    for &g in &order {
        if g < n {
            continue;
        }
        let (i, b) = (0..n)
            .find_map(|i| {
                let b = rs.index_of_root(&Root(
                    rs.root(g).0.iter().zip(&rs.root(i).0).map(|(x, y)| x - y).collect(),
                ))?;
                (ch.n(i, b) != 0).then_some((i, b))
            })
            .ok_or_else(|| format!("no chain for root {}", rs.root(g)))?;
        let br = commutator(&mats[i], &mats[b], 0);
        let c = ratio(&br, &mats[g]).ok_or_else(|| format!("[M_{}, M_{}] not proportional to M_{}", rs.root(i), rs.root(b), rs.root(g)))?;
        let num = s[i] * s[b] * c;
        let den = ch.n(i, b) as i64;
        if num % den != 0 {
            return Err(format!("scaling for {} is not integral", rs.root(g)));
        }
        s[g] = num / den;
    }
    for g in 0..np {
        let ng = rs.neg(g);
        let br = commutator(&mats[g], &mats[ng], 0);
        let target = tor.iter().zip(ch.coroot(g)).fold(modp::zeros(br.len(), br.len()), |acc, (t, &c)| {
            acc.iter().zip(t).map(|(r, q)| r.iter().zip(q).map(|(x, y)| x + c * y).collect()).collect()
        });
        // s_g · s_{−g} · br = target
        let d = ratio(&target, &br).ok_or_else(|| format!("[M_γ, M_−γ] is not the coroot for γ = {}", rs.root(g)))?;
        if d % s[g] != 0 {
            return Err(format!("scaling for −{} is not integral", rs.root(g)));
        }
        s[ng] = d / s[g];
    }
    Ok(s)
}

/// Compares matrix brackets with the abstract structure constants; with
/// `tamper = Some(γ)` the sign of one entry of `M_γ` is flipped first.
pub fn verify_chevalley_match_with(
    n: usize,
    p: u32,
    kind: Classical,
    tamper: Option<usize>,
) -> Result<Report> {
    let ch = chevalley_for(kind, n)?;
    let rs = ch.rs();
    let nr = rs.num_roots();
    let mut mats = vec![];
    for g in 0..nr {
        let eps = rs.to_epsilon(rs.root(g))?;
        mats.push(root_space_matrix(kind, n, &eps)?.entries);
    }
    if let Some(g) = tamper {
        if g >= nr {
            return Err(Error::Precondition(format!("no root with index {g}")));
        }
        let cell = mats[g].iter_mut().flatten().find(|x| **x != 0).expect("nonzero root matrix");
        *cell = -*cell;
    }
    let tor: Vec<Mat> = toral_basis_eps(kind, n).iter().map(|c| cocharacter_matrix(kind, n, c)).collect();
    let id = format!("matrix-vs-chevalley-{}{}-p{}", kind.letter(), n, p);
    let scal = match derive_scalings(&ch, &mats, &tor) {
        Ok(s) => s,
        Err(e) => return Ok(Report::new(id, false, json!({"stage": "scalings", "error": e}))),
    };
    let phi = |i: usize| -> Mat {
        if i < nr {
            mats[i].iter().map(|r| r.iter().map(|x| x * scal[i]).collect()).collect()
        } else {
            tor[i - nr].clone()
        }
    };
    let images: Vec<Mat> = (0..ch.dim()).map(|i| modp::reduce_mat(&phi(i), p)).collect();
    let mut mismatches = vec![];
    let mut members = true;
    for m in &images {
        members &= is_member(kind, n, m, p);
    }
    for i in 0..ch.dim() {
        for j in 0..ch.dim() {
            let lhs = commutator(&images[i], &images[j], p);
            let size = lhs.len();
            let mut rhs = modp::zeros(size, size);
            for (k, c) in ch.basis_bracket(i, j) {
                for r in 0..size {
                    for q in 0..size {
                        rhs[r][q] += c * images[k][r][q];
                    }
                }
            }
            if !eq_mod(&lhs, &rhs, p) && mismatches.len() < 5 {
                mismatches.push(json!([ch.basis_label(i), ch.basis_label(j)]));
            }
        }
    }
    let ok = mismatches.is_empty() && members;
    let scalings: Vec<_> = (0..nr).map(|g| json!({"root": rs.root(g).0, "s": scal[g]})).collect();
    Ok(Report::new(
        id,
        ok,
        json!({"pairs_checked": ch.dim() * ch.dim(), "members": members, "mismatches": mismatches, "scalings": scalings}),
    ))
}

pub fn verify_chevalley_match(n: usize, p: u32, kind: Classical) -> Result<Report> {
    verify_chevalley_match_with(n, p, kind, None)
}

/// Kernel of SO_{2n+1} → Sp_{2n} in characteristic 2.
///
/// (a) For the arrow-shaped matrix with column `a` and row `b` through the
/// middle, the x-coefficients of `Q(Ax) − Q(x)` generate the same ideal as
/// `{a_i (i≠n), a_n² − 1, b_j²}`; with `a_n = 1` the identity holds exactly
/// once `b_j² = 0`. (b) The Lie algebra `⊕ k E_{n,j}` of the kernel equals
/// the span of the short root spaces.
pub fn so_kernel_check(n: usize, p: u32) -> Result<Report> {
    if p != 2 {
        return Err(Error::Precondition(format!("the SO→Sp kernel check needs p = 2, got {p}")));
    }
    if !(2..=5).contains(&n) {
        return Err(Error::Precondition(format!("so_kernel_check needs 2 ≤ n ≤ 5, got {n}")));
    }
    let size = 2 * n + 1;
    // Variables: x_0..x_{2n}, a_0..a_{2n}, b_j for j ≠ n (slot index j, j−1).
    let nv = 3 * size - 1;
    let xv = |k: usize| k;
    let av = |k: usize| size + k;
    let bv = |j: usize| 2 * size + if j < n { j } else { j - 1 };
    let var = |i: usize| Poly::var(nv, p, i);
    let zero = Poly::zero(nv, p);
    let one = Poly::one(nv, p);
    let q = |y: &[Poly]| -> Poly {
        let mut acc = &y[n] * &y[n];
        for i in 0..n {
            acc = &acc + &(&y[i] * &y[2 * n - i]);
        }
        acc
    };
    let mut a_mat = vec![vec![zero.clone(); size]; size];
    for i in 0..size {
        if i != n {
            a_mat[i][i] = one.clone();
            a_mat[i][n] = var(av(i));
            a_mat[n][i] = var(bv(i));
        }
    }
    a_mat[n][n] = var(av(n));
    let x: Vec<Poly> = (0..size).map(|k| var(xv(k))).collect();
    let ax = crate::poly::poly_mat_vec(&a_mat, &x);
    let diff = &q(&ax) - &q(&x);
    let xs: Vec<usize> = (0..size).map(xv).collect();
    let conditions: Vec<Poly> = diff.coefficients_in(&xs).into_values().collect();

    let b_vars: Vec<usize> = (0..size).filter(|&j| j != n).map(bv).collect();
    // Normal form modulo {a_i (i≠n), a_n² − 1, b_j²}, a Gröbner basis since the
    // leading monomials are pairwise coprime.
    let normal_form = |f: &Poly| -> Poly {
        let mut g = f.clone();
        for i in (0..size).filter(|&i| i != n) {
            g = g.substitute(av(i), &zero);
        }
        let mut out = Poly::zero(nv, p);
        for (e, c) in g.terms() {
            if b_vars.iter().any(|&v| e[v] >= 2) {
                continue;
            }
            let mut e = e.clone();
            e[av(n)] %= 2;
            out = &out + &Poly::monomial(nv, p, e, c);
        }
        out
    };
    let forward = conditions.iter().all(|c| normal_form(c).is_zero());
    // Reverse inclusion: each generator is a condition, or a condition minus
    // multiples of the linear ones.
    let mut backward = true;
    for i in (0..size).filter(|&i| i != n) {
        backward &= conditions.contains(&var(av(i)));
    }
    for &v in &b_vars {
        backward &= conditions.contains(&var(v).pow(2));
    }
    let mut xn2 = vec![0u32; nv];
    xn2[xv(n)] = 2;
    let cn = diff.coefficients_in(&xs);
    let key: Vec<u32> = xs.iter().map(|&k| xn2[k]).collect();
    let mut cn = cn.get(&key).cloned().unwrap_or_else(|| zero.clone());
    for i in (0..size).filter(|&i| i != n) {
        cn = cn.substitute(av(i), &zero);
    }
    let an2_minus_1 = &var(av(n)).pow(2) - &one;
    backward &= cn == an2_minus_1;

    // With the conditions imposed the matrix is the identity off row n, so
    // det A = a_n; det = 1 forces a_n = 1 and Q(Ax) = Q(x) mod b².
    let mut kernel = a_mat.clone();
    for row in kernel.iter_mut() {
        for e in row.iter_mut() {
            for i in (0..size).filter(|&i| i != n) {
                *e = e.substitute(av(i), &zero);
            }
            *e = e.substitute(av(n), &one);
        }
    }
    let off_rows_identity = (0..size).filter(|&i| i != n).all(|i| {
        (0..size).all(|j| kernel[i][j] == if i == j { one.clone() } else { zero.clone() })
    });
    let kx = crate::poly::poly_mat_vec(&kernel, &x);
    let exact = (&q(&kx) - &q(&x)).square_zero(&b_vars).is_zero();

    // (b) Lie algebra comparison inside 𝔤𝔩_{2n+1} over F_2.
    let flat = |m: &Mat| -> Vec<i64> { m.iter().flatten().copied().collect() };
    let lie_kernel: Vec<Vec<i64>> = (0..size)
        .filter(|&j| j != n)
        .map(|j| {
            let mut m = modp::zeros(size, size);
            m[n][j] = 1;
            flat(&m)
        })
        .collect();
    let ch = chevalley_for(Classical::B, n)?;
    let rs = ch.rs();
    let mut short = vec![];
    let mut members = true;
    for g in 0..rs.num_roots() {
        if rs.is_short(g) {
            let m = root_space_matrix_b(n, &rs.to_epsilon(rs.root(g))?)?.reduce(p);
            members &= m.is_member();
            short.push(flat(&m.entries));
        }
    }
    let dim = size * size;
    let k_span = modp::Subspace::spanned(dim, p, &lie_kernel);
    let s_span = modp::Subspace::spanned(dim, p, &short);
    let lie_equal = k_span == s_span;
    let kernel_members = lie_kernel.iter().all(|v| {
        let m: Mat = v.chunks(size).map(|r| r.to_vec()).collect();
        is_member(Classical::B, n, &m, p)
    });
    let abstract_dim = crate::psub::n_ideal(&ch, p)?.dim();

    let ok = forward
        && backward
        && off_rows_identity
        && exact
        && lie_equal
        && members
        && kernel_members
        && k_span.rank() == 2 * n
        && abstract_dim == 2 * n;
    Ok(Report::new(
        format!("so-kernel-n{n}"),
        ok,
        json!({
            "n": n,
            "conditions": conditions.len(),
            "ideal_forward": forward,
            "ideal_backward": backward,
            "kernel_shape": off_rows_identity,
            "identity_mod_b_squared": exact,
            "lie_kernel_dim": k_span.rank(),
            "short_span_dim": s_span.rank(),
            "lie_kernel_equals_short": lie_equal,
            "abstract_n_ideal_dim": abstract_dim,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sharp_is_an_antiinvolution() {
        let a: Mat = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
        let b: Mat = vec![vec![0, 1, 0], vec![2, 0, 1], vec![1, 1, 1]];
        assert_eq!(sharp(&sharp(&a)), a);
        assert_eq!(sharp(&modp::mul(&a, &b, 0)), modp::mul(&sharp(&b), &sharp(&a), 0));
        assert_eq!(sharp(&modp::identity(4)), modp::identity(4));
        let mut e = modp::zeros(3, 3);
        e[0][1] = 1;
        assert_eq!(sharp(&e)[1][2], 1);
    }

    #[test]
    fn root_spaces_have_their_character() {
        for (kind, n) in [(Classical::B, 2), (Classical::B, 3), (Classical::C, 2), (Classical::C, 3), (Classical::C, 4)] {
            let label = format!("{}{}", kind.letter(), n);
            let rs = rootsys::rs(&label);
            for g in 0..rs.num_roots() {
                let eps = rs.to_epsilon(rs.root(g)).unwrap();
                let m = root_space_matrix(kind, n, &eps).unwrap();
                assert!(m.is_member(), "{label} {eps:?}");
                let ch: Vec<i32> = torus_character(kind, n, &m.entries).unwrap();
                assert_eq!(ch, eps);
            }
        }
    }

    #[test]
    fn paper_shapes() {
        let m = root_space_matrix_c(3, &[0, 2, 0]).unwrap();
        assert_eq!(m.entries[1][3 + 1], 1);
        let m = root_space_matrix_b(3, &[-1, 0, 0]).unwrap();
        assert_eq!(m.entries[3][0], 1);
        assert_eq!(m.entries[6][3], -2);
        assert!(root_space_matrix_b(3, &[1, 1, 1]).is_err());
    }

    #[test]
    fn chevalley_agreement() {
        assert!(verify_chevalley_match(2, 0, Classical::C).unwrap().ok());
        assert!(verify_chevalley_match(2, 2, Classical::B).unwrap().ok());
        assert!(!verify_chevalley_match_with(2, 0, Classical::C, Some(0)).unwrap().ok());
    }

    #[test]
    fn kernel_small() {
        let r = so_kernel_check(2, 2).unwrap();
        assert!(r.ok(), "{}", r.witness);
        assert_eq!(r.witness["lie_kernel_dim"], 4);
        assert!(so_kernel_check(2, 3).is_err());
    }
}
