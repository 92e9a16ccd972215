//! Sparse multivariate polynomials over ℤ (`p = 0`) or F_p.
//!
//! Every polynomial carries its number of variables; operations assume both
//! sides agree on it.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::modp::reduce;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    p: u32,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Poly {
    pub fn zero(nvars: usize, p: u32) -> Self {
        Poly { nvars, p, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, p: u32, c: i64) -> Self {
        let mut out = Self::zero(nvars, p);
        out.add_term(vec![0; nvars], c);
        out
    }

    pub fn one(nvars: usize, p: u32) -> Self {
        Self::constant(nvars, p, 1)
    }

    pub fn var(nvars: usize, p: u32, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut out = Self::zero(nvars, p);
        out.add_term(e, 1);
        out
    }

    pub fn monomial(nvars: usize, p: u32, exps: Vec<u32>, c: i64) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut out = Self::zero(nvars, p);
        out.add_term(exps, c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant term.
    pub fn constant_term(&self) -> i64 {
        self.terms.get(&vec![0; self.nvars]).copied().unwrap_or(0)
    }

    /// Coefficient of one monomial.
    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: i64) {
        let c = reduce(c, self.p);
        if c == 0 {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                let v = reduce(*o.get() + c, self.p);
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scale(&self, k: i64) -> Poly {
        let mut out = Poly::zero(self.nvars, self.p);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars, self.p);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Reduction of the coefficients modulo `p`.
    pub fn reduce_mod(&self, p: u32) -> Poly {
        let mut out = Poly::zero(self.nvars, p);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Substitutes `var i := value` everywhere.
    pub fn substitute(&self, i: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars, self.p);
        let mut powers: Vec<Poly> = vec![Poly::one(self.nvars, self.p)];
        for (e, &c) in &self.terms {
            while powers.len() <= e[i] as usize {
                let next = powers.last().expect("nonempty") * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let term = Poly::monomial(self.nvars, self.p, rest, c);
            out = &out + &(&term * &powers[e[i] as usize]);
        }
        out
    }

    /// Evaluates at integer values of every variable.
    pub fn eval(&self, vals: &[i64]) -> i64 {
        let mut acc = 0i64;
        for (e, &c) in &self.terms {
            let mut t = c;
            for (v, &k) in vals.iter().zip(e) {
                for _ in 0..k {
                    t = reduce(t * v, self.p);
                }
            }
            acc = reduce(acc + t, self.p);
        }
        acc
    }

    /// Drops every monomial in which one of `vars` occurs with exponent ≥ 2,
    /// i.e. the image in the ring where those variables square to zero.
    pub fn square_zero(&self, vars: &[usize]) -> Poly {
        let mut out = Poly::zero(self.nvars, self.p);
        for (e, &c) in &self.terms {
            if vars.iter().all(|&v| e[v] < 2) {
                out.add_term(e.clone(), c);
            }
        }
        out
    }

    /// Splits along the monomials in `vars`: returns, for each monomial in
    /// those variables, its coefficient as a polynomial in the others.
    pub fn coefficients_in(&self, vars: &[usize]) -> BTreeMap<Vec<u32>, Poly> {
        let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        for (e, &c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&v| e[v]).collect();
            let mut rest = e.clone();
            for &v in vars {
                rest[v] = 0;
            }
            out.entry(key).or_insert_with(|| Poly::zero(self.nvars, self.p)).add_term(rest, c);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Formats with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = vec![];
        for (e, &c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = names.get(i).map(|s| s.to_string()).unwrap_or(format!("x{i}"));
                    if k == 1 { name } else { format!("{name}^{k}") }
                })
                .collect();
            let body = mono.join("*");
            parts.push(match (c, body.is_empty()) {
                (c, true) => c.to_string(),
                (1, false) => body,
                (-1, false) => format!("-{body}"),
                (c, false) => format!("{c}*{body}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, &c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &o.scale(-1)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars, self.p);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Square matrix with polynomial entries.
pub type PolyMat = Vec<Vec<Poly>>;

pub fn poly_identity(n: usize, nvars: usize, p: u32) -> PolyMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Poly::one(nvars, p) } else { Poly::zero(nvars, p) })
                .collect()
        })
        .collect()
}

pub fn poly_mat_mul(a: &PolyMat, b: &PolyMat) -> PolyMat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let zero = a[0][0].clone().scale(0);
    let mut out = vec![vec![zero.clone(); m]; n];
    for i in 0..n {
        for (k, x) in a[i].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(x * &b[k][j]);
                }
            }
        }
    }
    out
}

pub fn poly_mat_vec(a: &PolyMat, v: &[Poly]) -> Vec<Poly> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(v[0].scale(0), |acc, (x, y)| &acc + &(x * y))
        })
        .collect()
}

/// Substitutes in every entry.
pub fn poly_mat_substitute(a: &PolyMat, i: usize, value: &Poly) -> PolyMat {
    a.iter().map(|r| r.iter().map(|x| x.substitute(i, value)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_in_char_two() {
        let x = Poly::var(2, 2, 0);
        let y = Poly::var(2, 2, 1);
        let s = &x + &y;
        assert_eq!(s.pow(2), &x.pow(2) + &y.pow(2));
        let z = Poly::var(2, 0, 0);
        let w = Poly::var(2, 0, 1);
        let t = (&z + &w).pow(2);
        assert_eq!(t.coeff(&[1, 1]), 2);
    }

    #[test]
    fn substitution_and_split() {
        let x = Poly::var(2, 0, 0);
        let y = Poly::var(2, 0, 1);
        let f = &(&x * &y) + &x.pow(2);
        let g = f.substitute(0, &(&y + &Poly::one(2, 0)));
        assert_eq!(g.eval(&[0, 3]), 12 + 16);
        let parts = f.coefficients_in(&[1]);
        assert_eq!(parts[&vec![1]], x);
        assert_eq!(f.square_zero(&[0]), &x * &y);
    }
}
