use std::fmt;

use super::{pair_label, CoxeterType, GramMatrix, RootError, RootVec};

/// A Coxeter–Dynkin diagram: edges `(i, j, m)` with `i < j` and `m ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramGraph {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl DiagramGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, u64)>) -> Result<Self, RootError> {
        let mut norm = Vec::with_capacity(edges.len());
        for (i, j, m) in edges {
            if i == j || i >= n || j >= n || m < 3 {
                return Err(RootError::UnrecognizedDiagram(format!("bad edge ({i},{j},{m})")));
            }
            norm.push((i.min(j), i.max(j), m));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(RootError::UnrecognizedDiagram("repeated edge".into()));
        }
        Ok(DiagramGraph { n, edges: norm })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.edges.iter().filter_map(move |&(i, j, m)| {
            if i == v {
                Some((j, m))
            } else if j == v {
                Some((i, m))
            } else {
                None
            }
        })
    }

    fn label(&self, a: usize, b: usize) -> Option<u64> {
        let (i, j) = (a.min(b), a.max(b));
        self.edges
            .iter()
            .find(|&&(x, y, _)| (x, y) == (i, j))
            .map(|e| e.2)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for (w, _) in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Labelled-graph isomorphism by backtracking.
    pub fn is_isomorphic(&self, other: &DiagramGraph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let sig = |d: &DiagramGraph, v: usize| {
            let mut l: Vec<u64> = d.neighbours(v).map(|x| x.1).collect();
            l.sort_unstable();
            l
        };
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        fn go(
            a: &DiagramGraph,
            b: &DiagramGraph,
            v: usize,
            map: &mut [usize],
            used: &mut [bool],
            sig: &dyn Fn(&DiagramGraph, usize) -> Vec<u64>,
        ) -> bool {
            if v == a.n {
                return true;
            }
            for w in 0..b.n {
                if used[w] || sig(a, v) != sig(b, w) {
                    continue;
                }
                let consistent = (0..v).all(|u| a.label(u, v) == b.label(map[u], w));
                if !consistent {
                    continue;
                }
                map[v] = w;
                used[w] = true;
                if go(a, b, v + 1, map, used, sig) {
                    return true;
                }
                used[w] = false;
            }
            false
        }
        go(self, other, 0, &mut map, &mut used, &sig)
    }
}

impl fmt::Display for DiagramGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices", self.n)?;
        for &(i, j, m) in &self.edges {
            if m == 3 {
                write!(f, ", {}-{}", i + 1, j + 1)?;
            } else {
                write!(f, ", {}-{}({m})", i + 1, j + 1)?;
            }
        }
        Ok(())
    }
}

/// The diagram of a fundamental system: an edge for each pair with
/// `m(α, β) ≥ 3`.
pub fn diagram_of(delta: &[RootVec], g: &GramMatrix) -> Result<DiagramGraph, RootError> {
    let mut edges = Vec::new();
    for i in 0..delta.len() {
        for j in i + 1..delta.len() {
            let m = pair_label(&delta[i], &delta[j], g)?;
            if m >= 3 {
                edges.push((i, j, m));
            }
        }
    }
    DiagramGraph::new(delta.len(), edges)
}

/// Matches every connected component against the catalogue.
pub fn recognize_type(d: &DiagramGraph) -> Result<Vec<CoxeterType>, RootError> {
    d.components()
        .into_iter()
        .map(|c| recognize_component(d, &c))
        .collect()
}

fn recognize_component(d: &DiagramGraph, comp: &[usize]) -> Result<CoxeterType, RootError> {
    let n = comp.len();
    let unrecognized = || {
        RootError::UnrecognizedDiagram(format!(
            "component {:?}",
            comp.iter().map(|v| v + 1).collect::<Vec<_>>()
        ))
    };
    let edges: Vec<(usize, usize, u64)> = d
        .edges
        .iter()
        .copied()
        .filter(|e| comp.contains(&e.0))
        .collect();
    if edges.len() + 1 != n {
        return Err(unrecognized()); // not a tree
    }
    if n == 1 {
        return Ok(CoxeterType::A(1));
    }
    if n == 2 {
        return CoxeterType::I2(edges[0].2).normalized();
    }
    let degree = |v: usize| d.neighbours(v).count();
    let heavy: Vec<&(usize, usize, u64)> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();

    if branch.is_empty() {
        // A path; walk it from one end.
        let start = *comp.iter().find(|&&v| degree(v) == 1).ok_or_else(unrecognized)?;
        let mut order = vec![start];
        let mut labels = Vec::new();
        while order.len() < n {
            let last = *order.last().unwrap();
            let prev = order.len().checked_sub(2).map(|i| order[i]);
            let (next, m) = d
                .neighbours(last)
                .find(|&(w, _)| Some(w) != prev)
                .ok_or_else(unrecognized)?;
            order.push(next);
            labels.push(m);
        }
        match heavy.len() {
            0 => return Ok(CoxeterType::A(n)),
            1 => {
                let pos = labels.iter().position(|&m| m > 3).unwrap();
                let at_end = pos == 0 || pos == labels.len() - 1;
                let m = labels[pos];
                return match (m, at_end, n) {
                    (4, true, _) => Ok(CoxeterType::B(n)),
                    (4, false, 4) => Ok(CoxeterType::F4),
                    (5, true, 3 | 4) => Ok(CoxeterType::H(n)),
                    _ => Err(unrecognized()),
                };
            }
            _ => return Err(unrecognized()),
        }
    }
    if branch.len() != 1 || !heavy.is_empty() || degree(branch[0]) != 3 {
        return Err(unrecognized());
    }
    let b = branch[0];
    let mut arms: Vec<usize> = d
        .neighbours(b)
        .map(|(w, _)| {
            let (mut prev, mut cur, mut len) = (b, w, 1);
            loop {
                let next = d.neighbours(cur).map(|x| x.0).find(|&x| x != prev);
                match next {
                    Some(x) => {
                        prev = cur;
                        cur = x;
                        len += 1;
                    }
                    None => return len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, k] => Ok(CoxeterType::D(k + 3)),
        [1, 2, 2] => Ok(CoxeterType::E(6)),
        [1, 2, 3] => Ok(CoxeterType::E(7)),
        [1, 2, 4] => Ok(CoxeterType::E(8)),
        _ => Err(unrecognized()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CoxeterType> {
        let mut v = vec![];
        v.extend((1..=8).map(CoxeterType::A));
        v.extend((2..=6).map(CoxeterType::B));
        v.extend((4..=7).map(CoxeterType::D));
        v.extend((6..=8).map(CoxeterType::E));
        v.extend([CoxeterType::F4, CoxeterType::H(3), CoxeterType::H(4)]);
        v.extend((5..=12).map(CoxeterType::I2));
        v
    }

    #[test]
    fn catalogue_diagrams_are_recognized() {
        for t in all_types() {
            assert_eq!(recognize_type(&t.diagram()).unwrap(), vec![t], "{t}");
        }
    }

    #[test]
    fn relabelled_diagrams_are_recognized() {
        // E8 with its vertices reversed.
        let e8 = CoxeterType::E(8).diagram();
        let rev: Vec<_> = e8.edges().iter().map(|&(i, j, m)| (7 - i, 7 - j, m)).collect();
        let d = DiagramGraph::new(8, rev).unwrap();
        assert_eq!(recognize_type(&d).unwrap(), vec![CoxeterType::E(8)]);
        assert!(d.is_isomorphic(&e8));
        assert!(!d.is_isomorphic(&CoxeterType::D(8).diagram()));
    }

    #[test]
    fn disconnected_and_foreign() {
        let d = DiagramGraph::new(2, vec![]).unwrap();
        assert_eq!(recognize_type(&d).unwrap(), vec![CoxeterType::A(1), CoxeterType::A(1)]);
        let d = DiagramGraph::new(4, vec![(0, 1, 3), (1, 2, 3)]).unwrap();
        assert_eq!(recognize_type(&d).unwrap(), vec![CoxeterType::A(3), CoxeterType::A(1)]);
        let cycle = DiagramGraph::new(3, vec![(0, 1, 3), (1, 2, 3), (0, 2, 3)]).unwrap();
        assert!(recognize_type(&cycle).is_err());
        let two_fours = DiagramGraph::new(3, vec![(0, 1, 4), (1, 2, 4)]).unwrap();
        assert!(recognize_type(&two_fours).is_err());
        let h5 = DiagramGraph::new(5, vec![(0, 1, 5), (1, 2, 3), (2, 3, 3), (3, 4, 3)]).unwrap();
        assert!(recognize_type(&h5).is_err());
        let e9 = DiagramGraph::new(9, (0..7).map(|i| (i, i + 1, 3)).chain([(2, 8, 3)]).collect()).unwrap();
        assert!(recognize_type(&e9).is_err());
        assert!(DiagramGraph::new(2, vec![(0, 1, 2)]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(CoxeterType::F4.diagram().to_string(), "4 vertices, 1-2, 2-3(4), 3-4");
    }
}
