use std::fmt;

use num_bigint::BigInt;

use super::RootError;
use crate::arith::lcm;
use crate::cyclo::{real, CycElem};

/// A vector in coordinates over the simple basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVec(pub Vec<CycElem>);

impl RootVec {
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![CycElem::zero(); n];
        v[i] = CycElem::one();
        RootVec(v)
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RootVec(v.iter().map(|&x| CycElem::from_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[CycElem] {
        &self.0
    }

    pub fn neg(&self) -> Self {
        RootVec(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, c: &CycElem) -> Self {
        RootVec(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(CycElem::is_algebraic_integer)
    }

    /// Exact identity key: coordinates written at a common modulus.
    pub fn key(&self, modulus: u64) -> Vec<BigInt> {
        let mut out = Vec::new();
        for c in &self.0 {
            let l = c.lift(modulus);
            out.push(l.denominator().clone());
            out.extend(l.numerators().iter().cloned());
        }
        out
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", c.canonicalize())?;
        }
        f.write_str("]")
    }
}

/// A symmetric matrix of real cyclotomic numbers.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    n: usize,
    entries: Vec<CycElem>,
    modulus: u64,
}

/// Entries compare as field elements, whatever modulus they are stored at.
impl PartialEq for GramMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for GramMatrix {}

impl GramMatrix {
    /// Checks shape, symmetry and realness. Rational entries are stored at
    /// modulus 1.
    pub fn new(rows: Vec<Vec<CycElem>>) -> Result<Self, RootError> {
        let n = rows.len();
        if n == 0 {
            return Err(RootError::InvalidGram("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(RootError::InvalidGram(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for c in row {
                let c = match c.to_rational() {
                    Some(q) => CycElem::from_rational(&q),
                    None => c,
                };
                entries.push(c);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let e = &entries[i * n + j];
                if !e.is_real() {
                    return Err(RootError::InvalidGram(format!("entry ({i},{j}) is not real")));
                }
                if j > i && *e != entries[j * n + i] {
                    return Err(RootError::InvalidGram(format!("not symmetric at ({i},{j})")));
                }
            }
        }
        let modulus = entries.iter().fold(1, |m, e| lcm(m, e.modulus()));
        Ok(GramMatrix {
            n,
            entries,
            modulus,
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, RootError> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| CycElem::from_int(x)).collect())
                .collect(),
        )
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[GramMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut rows = vec![vec![CycElem::zero(); n]; n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    rows[off + i][off + j] = b.entry(i, j).clone();
                }
            }
            off += b.n;
        }
        Self::new(rows).expect("blocks are valid")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycElem {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<CycElem>> {
        self.entries.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    /// The lcm of the entry moduli; all roots live in this cyclotomic field.
    pub fn ambient_modulus(&self) -> u64 {
        self.modulus
    }

    /// `G v`.
    pub fn apply(&self, v: &RootVec) -> Vec<CycElem> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| !self.entry(i, j).is_zero() && !v.0[j].is_zero())
                    .fold(CycElem::zero(), |acc, j| &acc + &(self.entry(i, j) * &v.0[j]))
            })
            .collect()
    }

    /// `xᵀ G y`.
    pub fn pair(&self, x: &RootVec, y: &RootVec) -> CycElem {
        dot(&x.0, &self.apply(y))
    }

    /// The principal submatrix on `idx`.
    pub fn restrict(&self, idx: &[usize]) -> Self {
        Self::new(
            idx.iter()
                .map(|&i| idx.iter().map(|&j| self.entry(i, j).clone()).collect())
                .collect(),
        )
        .expect("principal submatrix of a valid Gram matrix")
    }

    /// Leading principal minors `det(G[..k, ..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<CycElem> {
        let n = self.n;
        let mut a = self.rows();
        let mut minors = Vec::with_capacity(n);
        let mut det = CycElem::one();
        for k in 0..n {
            let pivot = a[k][k].clone();
            det = &det * &pivot;
            minors.push(det.clone());
            if pivot.is_zero() {
                // Later minors are not determined by this elimination.
                for j in k + 1..n {
                    let sub = self.restrict(&(0..=j).collect::<Vec<_>>());
                    minors.push(determinant(&sub.rows()));
                }
                return minors;
            }
            let inv = pivot.invert().expect("nonzero pivot");
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] * &inv;
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        minors
    }

    /// All leading principal minors are positive under every real embedding.
    pub fn is_totally_positive_definite(&self) -> bool {
        self.leading_minors()
            .iter()
            .all(|m| real::is_totally_positive(m).unwrap_or(false))
    }
}

fn dot(x: &[CycElem], y: &[CycElem]) -> CycElem {
    x.iter()
        .zip(y)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(CycElem::zero(), |acc, (a, b)| &acc + &(a * b))
}

/// Determinant by elimination with row pivoting.
pub(crate) fn determinant(rows: &[Vec<CycElem>]) -> CycElem {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut det = CycElem::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return CycElem::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det = &det * &a[k][k];
        let inv = a[k][k].invert().expect("nonzero pivot");
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    det
}

/// Solves `M x = b` for square invertible `M`; `None` if singular.
pub(crate) fn solve(m: &[Vec<CycElem>], b: &[CycElem]) -> Option<Vec<CycElem>> {
    let n = m.len();
    let mut a: Vec<Vec<CycElem>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        let inv = a[k][k].invert().ok()?;
        for j in k..=n {
            a[k][j] = &a[k][j] * &inv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in k..=n {
                let t = &f * &a[k][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Orthogonal decomposition: connected components of the graph of nonzero
/// off-diagonal entries, each with its Gram block. Components are ordered by
/// their smallest index.
pub fn decompose(g: &GramMatrix) -> Vec<(Vec<usize>, GramMatrix)> {
    let n = g.size();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for w in 0..n {
                if !seen[w] && !g.entry(v, w).is_zero() {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let block = g.restrict(&comp);
        out.push((comp, block));
    }
    out
}
