use std::collections::BTreeSet;
use std::fmt;

use super::{GramMatrix, RootVec};
use crate::cyclo::{kronecker_classify, CycElem, KroneckerClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    /// Distinct values `2cos(kπ/m)` taken by pairings of distinct roots,
    /// as `(k, m)`.
    pub pairing_classes: BTreeSet<(u64, u64)>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Checks that `G` is a totally positive definite Gram matrix with diagonal
/// 2, that each root has norm 2 and integral coordinates, and that every
/// pairing of two roots is of the form `2cos(rπ)`.
pub fn validate_root_lattice(g: &GramMatrix, roots: &[RootVec]) -> ValidationReport {
    let two = CycElem::from_int(2);
    let mut checks = Vec::new();

    let bad_diag: Vec<usize> = (0..g.size()).filter(|&i| *g.entry(i, i) != two).collect();
    checks.push(Check {
        name: "diagonal",
        passed: bad_diag.is_empty(),
        detail: if bad_diag.is_empty() {
            "all diagonal entries equal 2".into()
        } else {
            format!("entries {:?} differ from 2", bad_diag.iter().map(|i| i + 1).collect::<Vec<_>>())
        },
    });

    let tpd = g.is_totally_positive_definite();
    checks.push(Check {
        name: "totally positive definite",
        passed: tpd,
        detail: if tpd {
            "every leading minor is totally positive".into()
        } else {
            "some leading minor is not totally positive".into()
        },
    });

    let dims_ok = roots.iter().all(|r| r.dim() == g.size());
    let mut bad_norm = 0;
    let mut bad_int = 0;
    if dims_ok {
        for r in roots {
            if g.pair(r, r) != two {
                bad_norm += 1;
            }
            if !r.is_integral() {
                bad_int += 1;
            }
        }
    }
    checks.push(Check {
        name: "roots",
        passed: dims_ok && bad_norm == 0 && bad_int == 0,
        detail: if !dims_ok {
            "dimension mismatch".into()
        } else {
            format!(
                "{} roots, {bad_norm} with norm != 2, {bad_int} non-integral",
                roots.len()
            )
        },
    });

    let mut classes = BTreeSet::new();
    let mut bad_pairs = 0;
    if dims_ok {
        let applied: Vec<Vec<CycElem>> = roots.iter().map(|r| g.apply(r)).collect();
        for (i, r) in roots.iter().enumerate() {
            for gs in applied.iter().skip(i + 1) {
                let v = r
                    .0
                    .iter()
                    .zip(gs)
                    .fold(CycElem::zero(), |acc, (x, y)| &acc + &(x * y));
                match kronecker_classify(&v) {
                    Ok(KroneckerClass::TwoCos { k, m, .. }) => {
                        classes.insert((k, m));
                    }
                    _ => bad_pairs += 1,
                }
            }
        }
    }
    checks.push(Check {
        name: "pairings",
        passed: dims_ok && bad_pairs == 0,
        detail: format!(
            "{bad_pairs} pairings not of the form 2cos(r*pi); {} distinct values",
            classes.len()
        ),
    });

    ValidationReport {
        checks,
        pairing_classes: classes,
    }
}
