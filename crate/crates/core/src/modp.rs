//! Integer and F_p linear algebra on dense `i64` matrices. `p = 0` means ℤ.

pub type Mat = Vec<Vec<i64>>;

pub fn reduce(x: i64, p: u32) -> i64 {
    if p == 0 {
        x
    } else {
        x.rem_euclid(p as i64)
    }
}

pub fn inv(x: i64, p: u32) -> i64 {
    let p = p as i64;
    let x = x.rem_euclid(p);
    assert!(x != 0, "inverse of zero mod {p}");
    let (mut a, mut b, mut u, mut v) = (x, p, 1i64, 0i64);
    while b != 0 {
        let t = a / b;
        (a, b) = (b, a - t * b);
        (u, v) = (v, u - t * v);
    }
    u.rem_euclid(p)
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![0; c]; r]
}

pub fn mul(a: &Mat, b: &Mat, p: u32) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = zeros(n, m);
    for i in 0..n {
        for (k, &x) in a[i].iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * b[k][j];
            }
        }
        for v in out[i].iter_mut() {
            *v = reduce(*v, p);
        }
    }
    out
}

pub fn mat_vec(a: &Mat, v: &[i64], p: u32) -> Vec<i64> {
    a.iter().map(|row| reduce(row.iter().zip(v).map(|(x, y)| x * y).sum(), p)).collect()
}

pub fn reduce_mat(a: &Mat, p: u32) -> Mat {
    a.iter().map(|r| r.iter().map(|&x| reduce(x, p)).collect()).collect()
}

/// A subspace of F_p^n kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    p: u32,
    dim: usize,
    rows: Vec<Vec<i64>>,
}

impl Subspace {
    pub fn zero(dim: usize, p: u32) -> Self {
        assert!(p > 1, "Subspace needs a prime modulus");
        Subspace { p, dim, rows: vec![] }
    }

    pub fn full(dim: usize, p: u32) -> Self {
        let mut s = Subspace::zero(dim, p);
        for i in 0..dim {
            let mut v = vec![0; dim];
            v[i] = 1;
            s.insert(&v);
        }
        s
    }

    pub fn spanned(dim: usize, p: u32, vecs: &[Vec<i64>]) -> Self {
        let mut s = Subspace::zero(dim, p);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pivot(row: &[i64]) -> usize {
        row.iter().position(|&x| x != 0).expect("nonzero row")
    }

    /// Residue of `v` after elimination against the basis.
    pub fn residue(&self, v: &[i64]) -> Vec<i64> {
        let mut w: Vec<i64> = v.iter().map(|&x| reduce(x, self.p)).collect();
        for r in &self.rows {
            let c = Self::pivot(r);
            let f = w[c];
            if f != 0 {
                for (a, b) in w.iter_mut().zip(r) {
                    *a = reduce(*a - f * b, self.p);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.residue(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let mut w = self.residue(v);
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let k = inv(w[c], self.p);
        for x in w.iter_mut() {
            *x = reduce(*x * k, self.p);
        }
        for r in self.rows.iter_mut() {
            let f = r[c];
            if f != 0 {
                for (a, b) in r.iter_mut().zip(&w) {
                    *a = reduce(*a - f * b, self.p);
                }
            }
        }
        self.rows.push(w);
        self.rows.sort_by_key(|r| Self::pivot(r));
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Every vector of the subspace (only for small `p^rank`).
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.dim]];
        for r in &self.rows {
            let mut next = vec![];
            for v in &out {
                for c in 0..self.p as i64 {
                    next.push(v.iter().zip(r).map(|(a, b)| reduce(a + c * b, self.p)).collect());
                }
            }
            out = next;
        }
        out
    }
}

/// Rank of a matrix over F_p.
pub fn rank(a: &Mat, p: u32) -> usize {
    let n = a.first().map_or(0, |r| r.len());
    Subspace::spanned(n, p, a).rank()
}

/// Basis of `{x : A x = 0}` over F_p.
pub fn nullspace(a: &Mat, n: usize, p: u32) -> Vec<Vec<i64>> {
    let s = Subspace::spanned(n, p, a);
    let pivots: Vec<usize> = s.rows.iter().map(|r| Subspace::pivot(r)).collect();
    let mut out = vec![];
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; n];
        v[free] = 1;
        for (r, &c) in s.rows.iter().zip(&pivots) {
            v[c] = reduce(-r[free], p);
        }
        out.push(v);
    }
    out
}

/// One solution of `A x = b` over F_p, if any.
pub fn solve(a: &Mat, b: &[i64], n: usize, p: u32) -> Option<Vec<i64>> {
    // Row-reduce the augmented matrix [A | b].
    let mut rows: Vec<Vec<i64>> = a
        .iter()
        .zip(b)
        .map(|(r, &x)| r.iter().chain(std::iter::once(&x)).map(|&v| reduce(v, p)).collect())
        .collect();
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..n {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let f = inv(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = reduce(*v * f, p);
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let g = rows[k][c];
                let pivot_row = rows[r].clone();
                for (v, w) in rows[k].iter_mut().zip(&pivot_row) {
                    *v = reduce(*v - g * w, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[n] != 0) {
        return None;
    }
    let mut x = vec![0; n];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = rows[k][n];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7] {
            for x in 1..p as i64 {
                assert_eq!(reduce(x * inv(x, p), p), 1);
            }
        }
    }

    #[test]
    fn subspace_ops() {
        let mut s = Subspace::zero(3, 2);
        assert!(s.insert(&[1, 1, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 0, 1]));
        assert!(s.contains(&[1, 0, 1]));
        assert!(!s.contains(&[1, 0, 0]));
        assert_eq!(s.elements().len(), 4);
        let ns = nullspace(&vec![vec![1, 1, 0], vec![0, 1, 1]], 3, 2);
        assert_eq!(ns, vec![vec![1, 1, 1]]);
        let x = solve(&vec![vec![1, 1, 0], vec![0, 1, 1]], &[1, 0], 3, 2).unwrap();
        assert_eq!((x[0] + x[1]) % 2, 1);
        assert!(solve(&vec![vec![1, 1], vec![1, 1]], &[0, 1], 2, 2).is_none());
    }
}
