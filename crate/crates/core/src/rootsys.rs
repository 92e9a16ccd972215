//! Root systems of the simple types in Bourbaki numbering.
//!
//! Roots are integer vectors over the simple roots. The inner product is scaled
//! so that every root has even squared length: short roots have length 2, long
//! roots 4 (B, C, F) or 6 (G), and simply-laced roots 2.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A Dynkin type such as `F4`. Only valid (family, rank) pairs can be built.
/// D_n requires n >= 4 so that D3 = A3 has a single name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Largest edge multiplicity of the Dynkin diagram.
    pub fn edge_multiplicity(&self) -> u32 {
        match self.family {
            Family::B | Family::C | Family::F => 2,
            Family::G => 3,
            _ => 1,
        }
    }

    /// The diagram has an edge of multiplicity exactly `p`.
    pub fn edge_hypothesis(&self, p: u32) -> bool {
        !self.is_simply_laced() && self.edge_multiplicity() == p
    }

    /// Type of the dual root system.
    pub fn dual(&self) -> SimpleType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        SimpleType { family, rank: self.rank }
    }

    /// Index map from simple coroots of this type to simple roots of the dual.
    pub fn dual_index(&self, i: usize) -> usize {
        match self.family {
            Family::F => 3 - i,
            Family::G => 1 - i,
            _ => i,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let c = chars.next().ok_or_else(|| Error::Parse("empty type label".into()))?;
        let family =
            Family::from_letter(c).ok_or_else(|| Error::Parse(format!("unknown family in {s:?}")))?;
        let digits = chars.as_str();
        if digits.is_empty() || digits.len() > 3 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad rank in {s:?}")));
        }
        let rank: usize = digits.parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        SimpleType::new(family, rank)
    }
}

impl TryFrom<String> for SimpleType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SimpleType> for String {
    fn from(t: SimpleType) -> String {
        t.to_string()
    }
}

/// Coefficients of a root over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i32) -> Root {
        Root(self.0.iter().map(|c| k * c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LengthClass {
    Short,
    Long,
}

/// A full root system. Positive roots come first, sorted by height and then by
/// descending coefficient vector; the negatives follow in the same order, so
/// `neg(i) = i ± num_positive()` and the simple root `α_{i+1}` has index `i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: SimpleType,
    cartan: Vec<Vec<i32>>,
    gram: Vec<Vec<i32>>,
    roots: Vec<Root>,
    npos: usize,
    index: HashMap<Root, usize>,
    sq_len: Vec<i32>,
}

fn diagram(t: SimpleType) -> (Vec<i32>, Vec<(usize, usize)>) {
    let n = t.rank();
    let chain: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    match t.family() {
        Family::A => (vec![2; n], chain),
        Family::B => {
            let mut l = vec![4; n];
            l[n - 1] = 2;
            (l, chain)
        }
        Family::C => {
            let mut l = vec![2; n];
            l[n - 1] = 4;
            (l, chain)
        }
        Family::D => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            (vec![2; n], e)
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            (vec![2; n], e)
        }
        Family::F => (vec![4, 4, 2, 2], chain),
        Family::G => (vec![2, 6], chain),
    }
}

/// Builds the root system of a simple type.
pub fn build_root_system(t: SimpleType) -> RootSystem {
    RootSystem::new(t)
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Self {
        let n = t.rank();
        let (len, edges) = diagram(t);
        let mut gram = vec![vec![0i32; n]; n];
        for i in 0..n {
            gram[i][i] = len[i];
        }
        for &(i, j) in &edges {
            let v = -len[i].max(len[j]) / 2;
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let cartan: Vec<Vec<i32>> =
            (0..n).map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect()).collect();

        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            seen.insert(v.clone());
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let k: i32 = (0..n).map(|j| cartan[i][j] * v[j]).sum();
                let mut w = v.clone();
                w[i] -= k;
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut pos: Vec<Root> =
            seen.into_iter().filter(|v| v.iter().all(|&c| c >= 0)).map(Root).collect();
        pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(Root::neg));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut rs = RootSystem { ty: t, cartan, gram, roots, npos, index, sq_len: vec![] };
        rs.sq_len = rs.roots.iter().map(|r| rs.inner(&r.0, &r.0)).collect();
        rs
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// `cartan()[i][j] = ⟨α_j, α_i∨⟩`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i32>] {
        &self.gram
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.npos]
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn index_of(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(&Root(coeffs.to_vec())).copied()
    }

    pub fn index_of_root(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    fn require(&self, r: &Root) -> Result<usize> {
        self.index_of_root(r).ok_or_else(|| Error::NotARoot(r.0.clone()))
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn neg(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    /// Index of `roots[i] + roots[j]` when that is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of_root(&self.roots[i].add(&self.roots[j]))
    }

    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn sq_len(&self, i: usize) -> i32 {
        self.sq_len[i]
    }

    pub fn simple_sq_len(&self, i: usize) -> i32 {
        self.gram[i][i]
    }

    pub fn length_class(&self, i: usize) -> LengthClass {
        if self.is_short(i) {
            LengthClass::Short
        } else {
            LengthClass::Long
        }
    }

    /// Short roots exist only in the non-simply-laced types; in the simply-laced
    /// case every root is classed as long.
    pub fn is_short(&self, i: usize) -> bool {
        !self.ty.is_simply_laced() && self.sq_len[i] == 2
    }

    pub fn is_long(&self, i: usize) -> bool {
        !self.is_short(i)
    }

    pub fn short_set(&self) -> BTreeSet<usize> {
        (0..self.num_roots()).filter(|&i| self.is_short(i)).collect()
    }

    pub fn long_set(&self) -> BTreeSet<usize> {
        (0..self.num_roots()).filter(|&i| self.is_long(i)).collect()
    }

    /// `⟨γ, α_i∨⟩`.
    pub fn pairing(&self, gamma: &[i32], i: usize) -> i32 {
        self.cartan[i].iter().zip(gamma).map(|(a, b)| a * b).sum()
    }

    pub fn pairing_idx(&self, g: usize, i: usize) -> i32 {
        self.pairing(&self.roots[g].0, i)
    }

    pub fn support(&self, gamma: &Root) -> Result<BTreeSet<usize>> {
        self.require(gamma)?;
        Ok(support_of(gamma))
    }

    pub fn reflect(&self, i: usize, gamma: &Root) -> Result<Root> {
        self.require(gamma)?;
        if i >= self.rank() {
            return Err(Error::Precondition(format!("simple index {i} out of range")));
        }
        Ok(self.reflect_vec(i, gamma))
    }

    pub(crate) fn reflect_vec(&self, i: usize, gamma: &Root) -> Root {
        let mut v = gamma.0.clone();
        v[i] -= self.pairing(&gamma.0, i);
        Root(v)
    }

    pub fn reflect_idx(&self, i: usize, g: usize) -> usize {
        self.index[&self.reflect_vec(i, &self.roots[g])]
    }

    /// `(r, q)` with `γ − rδ, …, γ + qδ` the δ-string through γ.
    pub fn root_string(&self, gamma: &Root, delta: &Root) -> Result<(u32, u32)> {
        self.require(gamma)?;
        self.require(delta)?;
        if gamma == delta || *gamma == delta.neg() {
            return Err(Error::Precondition("root string needs δ ≠ ±γ".into()));
        }
        let mut r = 0;
        while self.index_of_root(&gamma.add(&delta.scale(-(r as i32 + 1)))).is_some() {
            r += 1;
        }
        let mut q = 0;
        while self.index_of_root(&gamma.add(&delta.scale(q as i32 + 1))).is_some() {
            q += 1;
        }
        Ok((r, q))
    }

    /// Orbit of γ under the subgroup generated by the given simple reflections,
    /// in root-system order.
    pub fn weyl_orbit(&self, gens: &BTreeSet<usize>, gamma: &Root) -> Result<Vec<Root>> {
        let g = self.require(gamma)?;
        let idx = self.orbit_indices(gens, g);
        Ok(idx.into_iter().map(|i| self.roots[i].clone()).collect())
    }

    pub fn orbit_indices(&self, gens: &BTreeSet<usize>, g: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([g]);
        let mut queue = VecDeque::from([g]);
        while let Some(x) = queue.pop_front() {
            for &i in gens {
                let y = self.reflect_idx(i, x);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn highest_root(&self) -> Root {
        self.roots[self.npos - 1].clone()
    }

    pub fn highest_short_root(&self) -> Result<Root> {
        if self.ty.is_simply_laced() {
            return Err(Error::Precondition(format!("{} has no short roots", self.ty)));
        }
        let i = (0..self.npos).rev().find(|&i| self.is_short(i)).expect("short root");
        Ok(self.roots[i].clone())
    }

    /// Coefficients of the coroot γ∨ over the simple coroots.
    pub fn coroot_coeffs(&self, g: usize) -> Vec<i32> {
        let l = self.sq_len[g];
        self.roots[g]
            .0
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let num = c * self.gram[i][i];
                debug_assert_eq!(num % l, 0);
                num / l
            })
            .collect()
    }

    /// Roots with every simple root of the support inside `set`.
    pub fn supported_in(&self, g: usize, set: &BTreeSet<usize>) -> bool {
        self.roots[g].0.iter().enumerate().all(|(i, &c)| c == 0 || set.contains(&i))
    }

    /// Root from ε-coordinates (types B and C only).
    pub fn from_epsilon(&self, eps: &[i32]) -> Result<Root> {
        let n = self.rank();
        if eps.len() != n {
            return Err(Error::Precondition("ε-vector has wrong length".into()));
        }
        let mut c = vec![0; n];
        let mut acc = 0;
        for k in 0..n {
            acc += eps[k];
            c[k] = acc;
        }
        match self.ty.family() {
            Family::B => {}
            Family::C => {
                if acc % 2 != 0 {
                    return Err(Error::NotARoot(eps.to_vec()));
                }
                c[n - 1] = acc / 2;
            }
            _ => return Err(Error::Precondition("ε-coordinates only for B and C".into())),
        }
        let r = Root(c);
        self.require(&r)?;
        Ok(r)
    }

    pub fn to_epsilon(&self, r: &Root) -> Result<Vec<i32>> {
        self.require(r)?;
        let n = self.rank();
        let c = &r.0;
        let mut e = vec![0; n];
        e[0] = c[0];
        for k in 1..n {
            e[k] = c[k] - c[k - 1];
        }
        match self.ty.family() {
            Family::B => {}
            Family::C => e[n - 1] = 2 * c[n - 1] - if n > 1 { c[n - 2] } else { 0 },
            _ => return Err(Error::Precondition("ε-coordinates only for B and C".into())),
        }
        Ok(e)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RootSystemJson::from(self)).expect("serializable")
    }

    /// Parses the JSON form and checks it against the system rebuilt from the type.
    pub fn from_json(s: &str) -> Result<RootSystem> {
        let j: RootSystemJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let rs = RootSystem::new(j.ty);
        let expect = RootSystemJson::from(&rs);
        let as_set = |v: &[Vec<i32>]| v.iter().cloned().collect::<BTreeSet<_>>();
        if as_set(&j.positive_roots) != as_set(&expect.positive_roots)
            || as_set(&j.short) != as_set(&expect.short)
        {
            return Err(Error::Parse(format!("root data does not match type {}", j.ty)));
        }
        Ok(rs)
    }
}

pub fn support_of(r: &Root) -> BTreeSet<usize> {
    r.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
}

#[derive(Serialize, Deserialize)]
struct RootSystemJson {
    #[serde(rename = "type")]
    ty: SimpleType,
    positive_roots: Vec<Vec<i32>>,
    short: Vec<Vec<i32>>,
}

impl From<&RootSystem> for RootSystemJson {
    fn from(rs: &RootSystem) -> Self {
        RootSystemJson {
            ty: rs.ty,
            positive_roots: rs.positive_roots().iter().map(|r| r.0.clone()).collect(),
            short: (0..rs.npos).filter(|&i| rs.is_short(i)).map(|i| rs.roots[i].0.clone()).collect(),
        }
    }
}

/// All valid types of rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = vec![];
    for fam in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for n in 1..=max_rank {
            if let Ok(t) = SimpleType::new(fam, n) {
                out.push(t);
            }
        }
    }
    out
}

/// Shorthand used throughout the tests and the CLI.
pub fn rs(label: &str) -> RootSystem {
    RootSystem::new(label.parse().expect("valid type label"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for (l, n) in [("B3", 9), ("C4", 16), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6), ("A4", 10)] {
            assert_eq!(rs(l).num_positive(), n, "{l}");
        }
        let f4 = rs("F4");
        assert_eq!((0..24).filter(|&i| f4.is_short(i)).count(), 12);
    }

    #[test]
    fn g2_positive_roots() {
        let g = rs("G2");
        let got: BTreeSet<Vec<i32>> = g.positive_roots().iter().map(|r| r.0.clone()).collect();
        let want: BTreeSet<Vec<i32>> =
            [[1, 0], [1, 1], [2, 1], [3, 1], [0, 1], [3, 2]].iter().map(|v| v.to_vec()).collect();
        assert_eq!(got, want);
        assert_eq!(g.pairing(&[0, 1], 0), -3);
        assert_eq!(g.highest_root().0, vec![3, 2]);
        assert_eq!(g.highest_short_root().unwrap().0, vec![2, 1]);
    }

    #[test]
    fn simple_roots_first() {
        for t in all_types(8) {
            let r = RootSystem::new(t);
            for i in 0..t.rank() {
                let mut v = vec![0; t.rank()];
                v[i] = 1;
                assert_eq!(r.root(i).0, v);
            }
        }
    }

    #[test]
    fn f4_reflections() {
        let f = rs("F4");
        assert_eq!(f.reflect(3, &Root(vec![1, 1, 1, 0])).unwrap().0, vec![1, 1, 1, 1]);
        assert_eq!(f.reflect(1, &Root(vec![1, 0, 0, 0])).unwrap().0, vec![1, 1, 0, 0]);
        assert_eq!(f.pairing(&[0, 0, 0, 1], 2), -1);
        assert_eq!(f.pairing(&[0, 0, 1, 0], 3), -1);
        assert_eq!(f.highest_root().0, vec![2, 3, 4, 2]);
        assert_eq!(f.highest_short_root().unwrap().0, vec![1, 2, 3, 2]);
    }

    #[test]
    fn strings() {
        let g = rs("G2");
        assert_eq!(g.root_string(&Root(vec![-2, -1]), &Root(vec![-1, 0])).unwrap(), (2, 1));
        let c = rs("C3");
        let a = c.from_epsilon(&[1, -1, 0]).unwrap();
        let b = c.from_epsilon(&[-2, 0, 0]).unwrap();
        assert_eq!(c.root_string(&a, &b).unwrap(), (0, 1));
    }

    #[test]
    fn epsilon_round_trip() {
        for l in ["B2", "B3", "B4", "C2", "C3", "C4"] {
            let r = rs(l);
            for root in r.roots() {
                let e = r.to_epsilon(root).unwrap();
                assert_eq!(&r.from_epsilon(&e).unwrap(), root);
            }
        }
        let b = rs("B4");
        let e1 = b.from_epsilon(&[1, 0, 0, 0]).unwrap();
        assert_eq!(b.support(&e1).unwrap().len(), 4);
    }

    #[test]
    fn type_labels() {
        assert!("D3".parse::<SimpleType>().is_err());
        assert!("E9".parse::<SimpleType>().is_err());
        assert!("".parse::<SimpleType>().is_err());
        assert_eq!("f4".parse::<SimpleType>().unwrap().to_string(), "F4");
    }

    #[test]
    fn json_round_trip() {
        let f = rs("F4");
        let back = RootSystem::from_json(&f.to_json()).unwrap();
        assert_eq!(back.simple_type(), f.simple_type());
        assert!(RootSystem::from_json(r#"{"type":"G2","positive_roots":[[1,0]],"short":[]}"#).is_err());
    }
}
