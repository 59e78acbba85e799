//! The divisibility graph `Q_K` and the classification it drives.
//!
//! `Q_K = {n > 1 : ζ_2n^+ ∈ K}` with an edge `x → y` whenever `y/x` is prime.
//! Rank-2 root lattices correspond to the prime-power vertices together with
//! the components that contain a non-prime-power; each class is determined by
//! the order of the group of roots of unity it generates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::arith::{divisors, euler_phi, is_prime, is_prime_power, lcm, lcm_all};
use crate::cyclo::CycElem;
use crate::field::FieldDescriptor;
use crate::rootsys::{CoxeterType, GramMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QGraphError {
    #[error("{0} is not a vertex of Q_K")]
    NotInQK(u64),
    #[error("coordinate of {0} is not integral in K (internal error)")]
    IntegralityViolation(String),
    #[error("the first field is not a subfield of the second")]
    NotSubfield,
    #[error("I2({0}) needs m >= 3")]
    InvalidLabel(u64),
    #[error("rank bound {0} must be at least 3")]
    InvalidRange(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGraph {
    vertices: Vec<u64>,
    edges: Vec<(u64, u64)>,
    components: Vec<Vec<u64>>,
}

impl QGraph {
    /// Builds the graph on a vertex set (edges and components are derived).
    pub fn from_vertices(mut vertices: Vec<u64>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges = Vec::new();
        for &x in &vertices {
            for &y in &vertices {
                if y > x && y % x == 0 && is_prime(y / x) {
                    edges.push((x, y));
                }
            }
        }
        edges.sort_unstable();
        // Union-find over vertex indices.
        let idx: BTreeMap<u64, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..vertices.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for &(x, y) in &edges {
            let (a, b) = (find(&mut parent, idx[&x]), find(&mut parent, idx[&y]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(v);
        }
        let mut components: Vec<Vec<u64>> = groups.into_values().collect();
        components.sort();
        QGraph {
            vertices,
            edges,
            components,
        }
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u64, u64)] {
        &self.edges
    }

    /// Components, each ascending, ordered by smallest member.
    pub fn components(&self) -> &[Vec<u64>] {
        &self.components
    }

    pub fn contains(&self, n: u64) -> bool {
        self.vertices.binary_search(&n).is_ok()
    }

    pub fn is_prime_power(&self, n: u64) -> bool {
        self.contains(n) && is_prime_power(n)
    }

    pub fn component_of(&self, n: u64) -> Option<&[u64]> {
        self.components
            .iter()
            .find(|c| c.binary_search(&n).is_ok())
            .map(Vec::as_slice)
    }

    /// `n` is maximal for `⪯` (reachability), i.e. no other vertex is a
    /// multiple of `n`.
    pub fn is_maximal(&self, n: u64) -> bool {
        self.contains(n) && !self.vertices.iter().any(|&y| y != n && y % n == 0)
    }
}

/// `Q_K`. Candidates are `2`, `3` and the `n` whose conductor (`n` for odd `n`,
/// `2n` for even `n`) divides `M`; anything else cannot lie in `K`.
pub fn compute_qk(f: &FieldDescriptor) -> QGraph {
    let m = f.modulus();
    let mut cand: BTreeSet<u64> = [2, 3].into_iter().collect();
    for d in divisors(m) {
        if d >= 2 && d % 2 == 1 {
            cand.insert(d);
        }
        if d % 2 == 0 && d >= 4 {
            cand.insert(d / 2);
        }
    }
    let vertices = cand
        .into_iter()
        .filter(|&n| f.contains_zeta_plus(n).expect("candidates are at least 2"))
        .collect();
    QGraph::from_vertices(vertices)
}

/// `Q_K` by scanning every `n ≤ 4d²` with `φ(2n) ≤ 2d`. Slow; kept as a
/// reference for [`compute_qk`].
pub fn compute_qk_scan(f: &FieldDescriptor) -> QGraph {
    let d = f.degree();
    let vertices = (2..=4 * d * d)
        .filter(|&n| euler_phi(2 * n) <= 2 * d)
        .filter(|&n| f.contains_zeta_plus(n).expect("n >= 2"))
        .collect();
    QGraph::from_vertices(vertices)
}

/// `(𝒫_K, ℛ_K)`: prime-power vertices, and components containing a
/// non-prime-power.
pub fn partition_classes(g: &QGraph) -> (Vec<u64>, Vec<Vec<u64>>) {
    let p = g
        .vertices()
        .iter()
        .copied()
        .filter(|&n| is_prime_power(n))
        .collect();
    let r = g
        .components()
        .iter()
        .filter(|c| c.iter().any(|&n| !is_prime_power(n)))
        .cloned()
        .collect();
    (p, r)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    PrimePower(u64),
    Component(Vec<u64>),
}

/// One isomorphism class of rank-2 root lattices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankTwoClass {
    pub kind: ClassKind,
    pub mu_order: u64,
}

impl RankTwoClass {
    pub fn prime_power(q: u64) -> Self {
        RankTwoClass {
            mu_order: 2 * q,
            kind: ClassKind::PrimePower(q),
        }
    }

    pub fn component(c: Vec<u64>) -> Self {
        RankTwoClass {
            mu_order: mu_order(&c),
            kind: ClassKind::Component(c),
        }
    }

    pub fn members(&self) -> Vec<u64> {
        match &self.kind {
            ClassKind::PrimePower(q) => vec![*q],
            ClassKind::Component(c) => c.clone(),
        }
    }

    /// `"A1xA1"` for `|μ| = 4`, otherwise `"I2(m)"` with `m = |μ|/2`.
    pub fn label(&self) -> String {
        if self.mu_order == 4 {
            "A1xA1".into()
        } else {
            format!("I2({})", self.mu_order / 2)
        }
    }

    /// `A2` for `I2(3)`, `B2` for `I2(4)`.
    pub fn alias(&self) -> Option<&'static str> {
        match self.mu_order {
            6 => Some("A2"),
            8 => Some("B2"),
            _ => None,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.mu_order != 4
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ClassKind::PrimePower(_) => "prime_power",
            ClassKind::Component(_) => "component",
        }
    }
}

impl fmt::Display for RankTwoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())?;
        if let Some(a) = self.alias() {
            write!(f, "={a}")?;
        }
        Ok(())
    }
}

/// `|μ(S)| = lcm{2n : n ∈ S}`.
pub fn mu_order(members: &[u64]) -> u64 {
    lcm_all(members.iter().map(|n| 2 * n))
}

fn classes_of(g: &QGraph) -> Vec<RankTwoClass> {
    let (p, r) = partition_classes(g);
    let mut out: Vec<RankTwoClass> = p
        .into_iter()
        .map(RankTwoClass::prime_power)
        .chain(r.into_iter().map(RankTwoClass::component))
        .collect();
    out.sort_by(|a, b| a.mu_order.cmp(&b.mu_order).then_with(|| a.kind.cmp(&b.kind)));
    out
}

/// All rank-2 classes over `K`, ascending by `|μ|`.
pub fn classify_rank2(f: &FieldDescriptor) -> Vec<RankTwoClass> {
    classes_of(&compute_qk(f))
}

/// Whether an irreducible rank-2 root lattice of type `I2(m)` exists: `m` is
/// in `Q_K` and is a prime power or maximal.
pub fn irreducible_i2_exists(f: &FieldDescriptor, m: u64) -> Result<bool, QGraphError> {
    if m < 3 {
        return Err(QGraphError::InvalidLabel(m));
    }
    let g = compute_qk(f);
    Ok(g.contains(m) && (is_prime_power(m) || g.is_maximal(m)))
}

/// Which field element decides existence of a type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Always,
    /// `√2 ∈ K`, i.e. `4 ∈ Q_K`.
    Sqrt2,
    /// `(1+√5)/2 ∈ K`, i.e. `5 ∈ Q_K`.
    Golden,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Witness::Always => "always",
            Witness::Sqrt2 => "4 in Q_K",
            Witness::Golden => "5 in Q_K",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceEntry {
    pub ty: CoxeterType,
    pub exists: bool,
    pub witness: Witness,
}

/// Existence of irreducible root lattices of rank at least 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceTable {
    pub n_max: usize,
    pub entries: Vec<ExistenceEntry>,
}

impl ExistenceTable {
    pub fn exists(&self, t: CoxeterType) -> Option<bool> {
        self.entries.iter().find(|e| e.ty == t).map(|e| e.exists)
    }

    /// Per-family summary keyed `A, B, D, E6, E7, E8, F4, H3, H4`.
    pub fn families(&self) -> Vec<(&'static str, bool)> {
        let any = |pred: &dyn Fn(&CoxeterType) -> bool| {
            self.entries.iter().any(|e| pred(&e.ty) && e.exists)
        };
        vec![
            ("A", any(&|t| matches!(t, CoxeterType::A(_)))),
            ("B", any(&|t| matches!(t, CoxeterType::B(_)))),
            ("D", any(&|t| matches!(t, CoxeterType::D(_)))),
            ("E6", any(&|t| *t == CoxeterType::E(6))),
            ("E7", any(&|t| *t == CoxeterType::E(7))),
            ("E8", any(&|t| *t == CoxeterType::E(8))),
            ("F4", any(&|t| *t == CoxeterType::F4)),
            ("H3", any(&|t| *t == CoxeterType::H(3))),
            ("H4", any(&|t| *t == CoxeterType::H(4))),
        ]
    }
}

/// `A_n, D_n, E_n` always exist; `B_n, F_4` need `√2 ∈ K`; `H_3, H_4` need
/// `√5 ∈ K`.
pub fn classify_rank_ge3(f: &FieldDescriptor, n_max: usize) -> Result<ExistenceTable, QGraphError> {
    if n_max < 3 {
        return Err(QGraphError::InvalidRange(n_max));
    }
    let sqrt2 = f.contains_zeta_plus(4).expect("4 >= 2");
    let golden = f.contains_zeta_plus(5).expect("5 >= 2");
    let mut entries = Vec::new();
    let mut add = |ty, witness| {
        let exists = match witness {
            Witness::Always => true,
            Witness::Sqrt2 => sqrt2,
            Witness::Golden => golden,
        };
        entries.push(ExistenceEntry { ty, exists, witness });
    };
    for n in 3..=n_max {
        add(CoxeterType::A(n), Witness::Always);
    }
    for n in 3..=n_max {
        add(CoxeterType::B(n), Witness::Sqrt2);
    }
    for n in 4..=n_max {
        add(CoxeterType::D(n), Witness::Always);
    }
    for n in 6..=8 {
        add(CoxeterType::E(n), Witness::Always);
    }
    add(CoxeterType::F4, Witness::Sqrt2);
    add(CoxeterType::H(3), Witness::Golden);
    add(CoxeterType::H(4), Witness::Golden);
    Ok(ExistenceTable { n_max, entries })
}

/// The Gram matrix of the basis `{1, ζ_2n}` of `O[ζ_2n]` under
/// `⟨x, y⟩ = x σ(y) + σ(x) y`.
pub fn rank2_gram(n: u64) -> GramMatrix {
    assert!(n >= 2, "rank2_gram needs n >= 2");
    let two = CycElem::from_int(2);
    let z = CycElem::zeta_plus(2 * n);
    GramMatrix::new(vec![vec![two.clone(), z.clone()], vec![z, two]])
        .expect("a real symmetric 2x2 matrix")
}

/// The roots of `O[ζ_2n]` written as `(a, b)` with `x = a + b ζ_2n`,
/// `a, b ∈ O_K`.
///
/// The roots are the group `μ_2m'`, where `m' = n` for a prime power and the
/// lcm of the component of `n` otherwise. Coordinates live in `Q(ζ_L)` with
/// `L = lcm(2m', 2n, M)`; `σ` is complex conjugation, which generates
/// `Gal(K(ζ_2n)/K)` because `K` is totally real.
pub fn rank2_roots(f: &FieldDescriptor, n: u64) -> Result<Vec<(CycElem, CycElem)>, QGraphError> {
    let g = compute_qk(f);
    if !g.contains(n) {
        return Err(QGraphError::NotInQK(n));
    }
    let m_prime = if is_prime_power(n) {
        n
    } else {
        lcm_all(g.component_of(n).expect("vertex has a component").iter().copied())
    };
    let l = lcm(lcm(2 * m_prime, 2 * n), f.modulus());
    let zeta = CycElem::zeta(2 * n);
    let inv = (&zeta - &zeta.conj())
        .invert()
        .expect("ζ - ζ̄ is nonzero for n >= 2")
        .lift(l);
    let zeta = zeta.lift(l);
    let mut out = Vec::with_capacity(2 * m_prime as usize);
    for j in 0..2 * m_prime {
        let x = CycElem::zeta_pow(2 * m_prime, j as i64).lift(l);
        let b = &(&x - &x.conj()) * &inv;
        let a = &x - &(&b * &zeta);
        for c in [&a, &b] {
            if !c.is_algebraic_integer() || !f.contains_element(c) {
                return Err(QGraphError::IntegralityViolation(format!("zeta_{}^{j}", 2 * m_prime)));
            }
        }
        out.push((a, b));
    }
    Ok(out)
}

/// The scalar-extension map on rank-2 classes from `K1` to `K2 ⊇ K1`.
pub fn extend_classes(
    f1: &FieldDescriptor,
    f2: &FieldDescriptor,
) -> Result<Vec<(RankTwoClass, RankTwoClass)>, QGraphError> {
    if !f1.subfield_of(f2) {
        return Err(QGraphError::NotSubfield);
    }
    let g2 = compute_qk(f2);
    Ok(classify_rank2(f1)
        .into_iter()
        .map(|c| {
            let image = match &c.kind {
                ClassKind::PrimePower(q) => RankTwoClass::prime_power(*q),
                ClassKind::Component(members) => RankTwoClass::component(
                    g2.component_of(members[0])
                        .expect("Q_K1 is contained in Q_K2")
                        .to_vec(),
                ),
            };
            (c, image)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn labels(f: &FieldDescriptor) -> Vec<String> {
        classify_rank2(f)
            .into_iter()
            .filter(RankTwoClass::is_irreducible)
            .map(|c| c.label())
            .collect()
    }

    #[test]
    fn rationals() {
        let q = FieldDescriptor::rationals();
        let g = compute_qk(&q);
        assert_eq!(g.vertices(), &[2, 3]);
        assert!(g.edges().is_empty());
        assert_eq!(g.components(), &[vec![2], vec![3]]);
        let (p, r) = partition_classes(&g);
        assert_eq!(p, vec![2, 3]);
        assert!(r.is_empty());
        let all: Vec<String> = classify_rank2(&q).iter().map(|c| c.to_string()).collect();
        assert_eq!(all, vec!["A1xA1", "I2(3)=A2"]);
    }

    #[test]
    fn first_example() {
        let f = make_field([14, 15]).unwrap();
        let g = compute_qk(&f);
        assert_eq!(g.vertices(), &[2, 3, 5, 7, 14, 15]);
        assert_eq!(g.edges(), &[(2, 14), (3, 15), (5, 15), (7, 14)]);
        let (p, r) = partition_classes(&g);
        assert_eq!(p, vec![2, 3, 5, 7]);
        assert_eq!(r, vec![vec![2, 7, 14], vec![3, 5, 15]]);
        assert_eq!(labels(&f), vec!["I2(3)", "I2(5)", "I2(7)", "I2(14)", "I2(15)"]);
        assert!(irreducible_i2_exists(&f, 14).unwrap());
        assert!(irreducible_i2_exists(&f, 7).unwrap());
        assert!(!irreducible_i2_exists(&f, 4).unwrap());
    }

    #[test]
    fn second_example() {
        let f = make_field([210]).unwrap();
        let g = compute_qk(&f);
        assert_eq!(
            g.vertices(),
            &[2, 3, 5, 6, 7, 10, 14, 15, 21, 30, 35, 42, 70, 105, 210]
        );
        assert_eq!(g.components().len(), 1);
        assert_eq!(labels(&f), vec!["I2(3)", "I2(5)", "I2(7)", "I2(210)"]);
        assert!(!irreducible_i2_exists(&f, 14).unwrap());
        assert!(irreducible_i2_exists(&f, 210).unwrap());
        assert_eq!(irreducible_i2_exists(&f, 2), Err(QGraphError::InvalidLabel(2)));
    }

    #[test]
    fn mu_orders() {
        assert_eq!(mu_order(&[7]), 14);
        assert_eq!(mu_order(&[2, 7, 14]), 28);
        assert_eq!(mu_order(&[3, 5, 15]), 30);
    }

    #[test]
    fn fast_qk_matches_scan() {
        for gens in [vec![], vec![4], vec![5], vec![6], vec![14, 15], vec![12, 9], vec![20]] {
            let f = make_field(gens).unwrap();
            assert_eq!(compute_qk(&f), compute_qk_scan(&f), "{f}");
        }
    }

    #[test]
    fn existence() {
        let t = classify_rank_ge3(&FieldDescriptor::rationals(), 5).unwrap();
        assert_eq!(t.exists(CoxeterType::A(4)), Some(true));
        assert_eq!(t.exists(CoxeterType::B(3)), Some(false));
        assert_eq!(t.exists(CoxeterType::H(3)), Some(false));
        assert_eq!(t.exists(CoxeterType::B(6)), None);
        let t = classify_rank_ge3(&make_field([4]).unwrap(), 4).unwrap();
        assert_eq!(t.exists(CoxeterType::F4), Some(true));
        assert_eq!(t.exists(CoxeterType::H(4)), Some(false));
        let t = classify_rank_ge3(&make_field([14, 15]).unwrap(), 4).unwrap();
        assert_eq!(t.exists(CoxeterType::H(4)), Some(true));
        assert_eq!(t.exists(CoxeterType::B(4)), Some(false));
        assert!(classify_rank_ge3(&make_field([4]).unwrap(), 2).is_err());
    }

    #[test]
    fn grams() {
        assert_eq!(rank2_gram(2), GramMatrix::from_ints(&[&[2, 0], &[0, 2]]).unwrap());
        assert_eq!(rank2_gram(3), GramMatrix::from_ints(&[&[2, 1], &[1, 2]]).unwrap());
        assert_eq!(*rank2_gram(5).entry(0, 1), CycElem::zeta_plus(10));
    }

    #[test]
    fn hexagonal_roots() {
        let roots = rank2_roots(&FieldDescriptor::rationals(), 3).unwrap();
        let mut got: Vec<(i64, i64)> = roots
            .iter()
            .map(|(a, b)| {
                let a = a.to_rational().unwrap().to_integer();
                let b = b.to_rational().unwrap().to_integer();
                (a.try_into().unwrap(), b.try_into().unwrap())
            })
            .collect();
        got.sort_unstable();
        assert_eq!(got, vec![(-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0)]);
        assert_eq!(
            rank2_roots(&FieldDescriptor::rationals(), 4),
            Err(QGraphError::NotInQK(4))
        );
    }

    #[test]
    fn extension() {
        let f1 = make_field([14, 15]).unwrap();
        let f2 = make_field([210]).unwrap();
        let map: Vec<(String, String)> = extend_classes(&f1, &f2)
            .unwrap()
            .into_iter()
            .map(|(a, b)| (a.label(), b.label()))
            .collect();
        for (a, b) in [("I2(14)", "I2(210)"), ("I2(15)", "I2(210)"), ("I2(7)", "I2(7)"), ("A1xA1", "A1xA1")] {
            assert!(map.contains(&(a.to_string(), b.to_string())), "{a}");
        }
        assert_eq!(extend_classes(&f2, &f1), Err(QGraphError::NotSubfield));
    }
}
