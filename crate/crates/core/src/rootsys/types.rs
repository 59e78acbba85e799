use std::fmt;
use std::str::FromStr;

use super::{DiagramGraph, GramMatrix, RootError};
use crate::cyclo::CycElem;

/// An irreducible finite Coxeter type.
///
/// `I2(3)` and `I2(4)` are normalized to `A2` and `B2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u64),
}

impl CoxeterType {
    /// Validates the rank and applies the rank-2 aliases.
    pub fn normalized(self) -> Result<Self, RootError> {
        use CoxeterType::*;
        let ok = match self {
            A(n) => n >= 1,
            B(n) => n >= 2,
            D(n) => n >= 4,
            E(n) => (6..=8).contains(&n),
            F4 => true,
            H(n) => n == 3 || n == 4,
            I2(m) => m >= 3,
        };
        if !ok {
            return Err(RootError::InadmissibleType(self.to_string()));
        }
        Ok(match self {
            I2(3) => A(2),
            I2(4) => B(2),
            t => t,
        })
    }

    pub fn rank(&self) -> usize {
        use CoxeterType::*;
        match *self {
            A(n) | B(n) | D(n) | E(n) | H(n) => n,
            F4 => 4,
            I2(_) => 2,
        }
    }

    /// `|Φ|` for a root lattice of this type.
    pub fn root_count(&self) -> usize {
        use CoxeterType::*;
        match *self {
            A(n) => n * (n + 1),
            B(n) => 2 * n * n,
            D(n) => 2 * n * (n - 1),
            E(6) => 72,
            E(7) => 126,
            E(8) => 240,
            E(_) => unreachable!("inadmissible E type"),
            F4 => 48,
            H(3) => 30,
            H(4) => 120,
            H(_) => unreachable!("inadmissible H type"),
            I2(m) => 2 * m as usize,
        }
    }

    /// The catalogue diagram. Numbering:
    /// `A`: path; `B`: path with the last edge labelled 4; `D`: path
    /// `1..n-1` plus the edge `(n-2, n)`; `E_n`: path `1..n-1` with `n`
    /// attached to 3; `F4`: `1-2=3-4` with the middle edge labelled 4;
    /// `H`: path with the first edge labelled 5. Indices here are 0-based.
    pub fn diagram(&self) -> DiagramGraph {
        use CoxeterType::*;
        let path = |n: usize| -> Vec<(usize, usize, u64)> { (1..n).map(|i| (i - 1, i, 3)).collect() };
        let (n, edges) = match *self {
            A(n) => (n, path(n)),
            B(n) => {
                let mut e = path(n);
                e.last_mut().expect("B_n has an edge").2 = 4;
                (n, e)
            }
            D(n) => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1, 3));
                (n, e)
            }
            E(n) => {
                let mut e = path(n - 1);
                e.push((2, n - 1, 3));
                (n, e)
            }
            F4 => (4, vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
            H(n) => {
                let mut e = path(n);
                e[0].2 = 5;
                (n, e)
            }
            I2(m) => (2, vec![(0, 1, m)]),
        };
        DiagramGraph::new(n, edges).expect("catalogue diagrams are well formed")
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoxeterType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E(n) => write!(f, "E{n}"),
            F4 => f.write_str("F4"),
            H(n) => write!(f, "H{n}"),
            I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = RootError;

    /// Accepts `A3`, `A_3`, `e8`, `F4`, `H3`, `I2(7)`, `I2_7`, `G2`.
    fn from_str(s: &str) -> Result<Self, RootError> {
        let bad = || RootError::InadmissibleType(s.to_string());
        let t = s.trim().to_ascii_uppercase().replace('_', "");
        if t == "G2" {
            return CoxeterType::I2(6).normalized();
        }
        if let Some(rest) = t.strip_prefix("I2") {
            let m = rest.trim_start_matches('(').trim_end_matches(')');
            return CoxeterType::I2(m.parse().map_err(|_| bad())?).normalized();
        }
        let mut chars = t.chars();
        let family = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ty = match family {
            'A' => CoxeterType::A(n),
            'B' => CoxeterType::B(n),
            'D' => CoxeterType::D(n),
            'E' => CoxeterType::E(n),
            'F' if n == 4 => CoxeterType::F4,
            'H' => CoxeterType::H(n),
            _ => return Err(bad()),
        };
        ty.normalized()
    }
}

/// `-ζ_2m^+ = -2cos(π/m)`, the Gram entry for an edge labelled `m`.
pub(crate) fn edge_entry(m: u64) -> CycElem {
    -CycElem::zeta_plus(2 * m)
}

/// The simple-root Gram matrix: `2` on the diagonal, `-2cos(π/m_ij)` off it.
pub fn gram_of_type(t: CoxeterType) -> Result<GramMatrix, RootError> {
    let t = t.normalized()?;
    let d = t.diagram();
    let n = d.size();
    let mut rows = vec![vec![CycElem::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = CycElem::from_int(2);
    }
    for &(i, j, m) in d.edges() {
        let e = edge_entry(m);
        rows[i][j] = e.clone();
        rows[j][i] = e;
    }
    GramMatrix::new(rows)
}
