use std::collections::HashMap;

use num_bigint::BigInt;

use super::{CoxeterType, GramMatrix, RootError, RootVec};
use crate::cyclo::CycElem;

/// A duplicate-free collection of roots, ordered by their exact keys.
#[derive(Clone, Debug)]
pub struct RootSet {
    modulus: u64,
    roots: Vec<RootVec>,
    index: HashMap<Vec<BigInt>, usize>,
}

impl RootSet {
    pub fn new(modulus: u64) -> Self {
        RootSet {
            modulus,
            roots: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Builds a set from arbitrary vectors, dropping duplicates.
    pub fn from_vecs<I: IntoIterator<Item = RootVec>>(modulus: u64, it: I) -> Self {
        let mut s = Self::new(modulus);
        for v in it {
            s.insert(v);
        }
        s.sort();
        s
    }

    /// Inserts `v`; returns whether it was new.
    pub fn insert(&mut self, v: RootVec) -> bool {
        let key = v.key(self.modulus);
        if self.index.contains_key(&key) {
            return false;
        }
        self.index.insert(key, self.roots.len());
        self.roots.push(v);
        true
    }

    pub fn contains(&self, v: &RootVec) -> bool {
        self.index.contains_key(&v.key(self.modulus))
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RootVec> {
        self.roots.iter()
    }

    pub fn into_vec(self) -> Vec<RootVec> {
        self.roots
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn sort(&mut self) {
        let m = self.modulus;
        let mut keyed: Vec<(Vec<BigInt>, RootVec)> =
            self.roots.drain(..).map(|r| (r.key(m), r)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        self.index.clear();
        for (i, (k, r)) in keyed.into_iter().enumerate() {
            self.index.insert(k, i);
            self.roots.push(r);
        }
    }
}

impl PartialEq for RootSet {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && other.iter().all(|r| self.contains(r))
    }
}

impl<'a> IntoIterator for &'a RootSet {
    type Item = &'a RootVec;
    type IntoIter = std::slice::Iter<'a, RootVec>;
    fn into_iter(self) -> Self::IntoIter {
        self.roots.iter()
    }
}

/// `s_r(v) = v - (r·v) r`, for a root `r` with `r·r = 2`.
pub fn reflect(r: &RootVec, v: &RootVec, g: &GramMatrix) -> RootVec {
    let c = g.pair(r, v);
    if c.is_zero() {
        return v.clone();
    }
    RootVec(v.0.iter().zip(&r.0).map(|(x, y)| x - &(&c * y)).collect())
}

/// The orbit of the simple roots under the reflection group.
///
/// Simple reflections generate the Weyl group, and `W·Δ` is closed under
/// every reflection `s_r` with `r ∈ W·Δ`, so applying simple reflections
/// suffices. A simple reflection changes a single coordinate:
/// `s_i(v) = v - (Gv)_i e_i`.
pub fn enumerate_roots(g: &GramMatrix, cap: usize) -> Result<RootSet, RootError> {
    let n = g.size();
    let mut set = RootSet::new(g.ambient_modulus());
    let mut queue = 0;
    for i in 0..n {
        set.insert(RootVec::unit(n, i));
    }
    while queue < set.len() {
        let v = set.roots[queue].clone();
        queue += 1;
        let gv = g.apply(&v);
        for (i, c) in gv.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut w = v.clone();
            w.0[i] = &w.0[i] - c;
            if set.insert(w) && set.len() > cap {
                return Err(RootError::CapExceeded { cap });
            }
        }
    }
    set.sort();
    Ok(set)
}

/// Root sets of types `A_n`, `B_n`, `D_n` written out directly.
///
/// For `D_n` the consecutive range `α_{n-1} + α_n` is excluded: those two
/// simple roots are orthogonal, so their sum has norm 4.
pub fn expected_roots_classical(t: CoxeterType) -> Result<RootSet, RootError> {
    let t = t.normalized()?;
    let n = t.rank();
    let mut out = Vec::new();
    let mut push = |coeffs: Vec<CycElem>| {
        let v = RootVec(coeffs);
        out.push(v.neg());
        out.push(v);
    };
    let int_range = |lo: usize, hi: usize| -> Vec<CycElem> {
        (0..n)
            .map(|i| CycElem::from_int((lo <= i && i < hi) as i64))
            .collect()
    };
    let modulus;
    match t {
        CoxeterType::A(_) => {
            modulus = 1;
            for i in 0..n {
                for j in i + 1..=n {
                    push(int_range(i, j));
                }
            }
        }
        CoxeterType::B(_) => {
            modulus = 8;
            let s2 = CycElem::zeta_plus(8);
            // α_i + … + α_{j-1}, 1 ≤ i < j ≤ n
            for i in 0..n {
                for j in i + 1..n {
                    push(int_range(i, j));
                }
            }
            // √2 α_k + … + √2 α_{n-1} + α_n
            for k in 0..n {
                let mut c = vec![CycElem::zero(); n];
                for x in c.iter_mut().take(n - 1).skip(k) {
                    *x = s2.clone();
                }
                c[n - 1] = CycElem::one();
                push(c);
            }
            // α_i + … + α_{j-1} + 2α_j + … + 2α_{n-1} + √2 α_n
            for i in 0..n {
                for j in i + 1..n {
                    let mut c = vec![CycElem::zero(); n];
                    for (idx, x) in c.iter_mut().enumerate().take(n - 1).skip(i) {
                        *x = CycElem::from_int(if idx < j { 1 } else { 2 });
                    }
                    c[n - 1] = s2.clone();
                    push(c);
                }
            }
        }
        CoxeterType::D(_) => {
            modulus = 1;
            for i in 0..n {
                for j in i + 1..=n {
                    if (i, j) != (n - 2, n) {
                        push(int_range(i, j));
                    }
                }
            }
            // α_k + … + α_{l-1} + 2α_l + … + 2α_{n-2} + α_{n-1} + α_n
            for k in 0..n - 2 {
                for l in k + 1..n - 2 {
                    let mut c = vec![CycElem::zero(); n];
                    for (idx, x) in c.iter_mut().enumerate().take(n - 2).skip(k) {
                        *x = CycElem::from_int(if idx < l { 1 } else { 2 });
                    }
                    c[n - 2] = CycElem::one();
                    c[n - 1] = CycElem::one();
                    push(c);
                }
            }
            // α_m + … + α_{n-2} + α_n
            for m in 0..n - 2 {
                let mut c = int_range(m, n - 2);
                c[n - 1] = CycElem::one();
                push(c);
            }
        }
        other => return Err(RootError::InadmissibleType(format!("{other} is not classical"))),
    }
    Ok(RootSet::from_vecs(modulus, out))
}
