use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::gram::solve;
use super::{GramMatrix, RootError, RootVec};
use crate::cyclo::{kronecker_classify, real, CycElem};

/// `t(v) = Σ t_i v_i`: the functional is given in the basis dual to the
/// simple-root coordinates.
fn evaluate(t: &[BigRational], v: &RootVec) -> CycElem {
    t.iter()
        .zip(&v.0)
        .filter(|(ti, c)| !ti.is_zero() && !c.is_zero())
        .fold(CycElem::zero(), |acc, (ti, c)| &acc + &c.scale(ti))
}

fn check_dim(t: &[BigRational], roots: &[RootVec]) -> Result<(), RootError> {
    if let Some(r) = roots.first() {
        if r.dim() != t.len() {
            return Err(RootError::DimensionMismatch {
                expected: r.dim(),
                got: t.len(),
            });
        }
    }
    Ok(())
}

fn signed_values(t: &[BigRational], roots: &[RootVec]) -> Result<Vec<(CycElem, i32)>, RootError> {
    check_dim(t, roots)?;
    roots
        .iter()
        .map(|r| {
            let v = evaluate(t, r);
            let s = real::sign(&v).expect("roots have real coordinates");
            if s == 0 {
                Err(RootError::NonGenericFunctional { root: r.to_string() })
            } else {
                Ok((v, s))
            }
        })
        .collect()
}

/// Splits the roots by the sign of `t`; input order is preserved.
pub fn positive_system(
    roots: &[RootVec],
    t: &[BigRational],
) -> Result<(Vec<RootVec>, Vec<RootVec>), RootError> {
    let vals = signed_values(t, roots)?;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (r, (_, s)) in roots.iter().zip(vals) {
        if s > 0 {
            plus.push(r.clone());
        } else {
            minus.push(r.clone());
        }
    }
    Ok((plus, minus))
}

/// The deterministic generic functional: `t_i = b^{n-1-i}` with `b = |Φ| + 1`,
/// shifted by `j·(i+1)` for `j = 1, 2, …` until no root is annihilated.
pub fn default_functional(roots: &[RootVec], n: usize) -> Vec<BigRational> {
    let base = BigInt::from(roots.len() as u64 + 1);
    let start: Vec<BigInt> = (0..n).map(|i| base.pow((n - 1 - i) as u32)).collect();
    for j in 0u64.. {
        let t: Vec<BigRational> = start
            .iter()
            .enumerate()
            .map(|(i, s)| BigRational::from_integer(s + BigInt::from(j * (i as u64 + 1))))
            .collect();
        if roots.iter().all(|r| !evaluate(&t, r).is_zero()) {
            return t;
        }
    }
    unreachable!()
}

/// The simple system of the positive roots of `t`: roots `α > 0` whose
/// reflection permutes the other positive roots. The result is checked
/// against the definition: it is a basis and every root is a one-signed
/// combination with coefficients in `O_{≥1} ∪ {0}`.
pub fn fundamental_system(
    roots: &[RootVec],
    g: &GramMatrix,
    t: &[BigRational],
) -> Result<Vec<RootVec>, RootError> {
    let n = g.size();
    let vals = signed_values(t, roots)?;
    let plus: Vec<(&RootVec, &CycElem)> = roots
        .iter()
        .zip(&vals)
        .filter(|(_, (_, s))| *s > 0)
        .map(|(r, (v, _))| (r, v))
        .collect();
    let gplus: Vec<Vec<CycElem>> = plus.iter().map(|(r, _)| g.apply(r)).collect();
    let mut delta = Vec::new();
    for (a, (alpha, ta)) in plus.iter().enumerate() {
        let simple = plus.iter().enumerate().all(|(b, (_, tb))| {
            if a == b {
                return true;
            }
            let c = alpha
                .0
                .iter()
                .zip(&gplus[b])
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(CycElem::zero(), |acc, (x, y)| &acc + &(x * y));
            if c.is_zero() {
                return true;
            }
            // t(s_α β) = t(β) - (α·β) t(α)
            let image = *tb - &(&c * *ta);
            real::sign(&image).expect("real") > 0
        });
        if simple {
            delta.push((*alpha).clone());
        }
    }
    verify(&delta, roots, n)?;
    Ok(delta)
}

fn verify(delta: &[RootVec], roots: &[RootVec], n: usize) -> Result<(), RootError> {
    if delta.len() != n {
        return Err(RootError::VerificationFailure(format!(
            "found {} simple roots, expected {n}",
            delta.len()
        )));
    }
    // Columns of B are the simple roots; B⁻¹ is built column by column.
    let b: Vec<Vec<CycElem>> = (0..n)
        .map(|i| delta.iter().map(|d| d.0[i].clone()).collect())
        .collect();
    let mut inv_cols = Vec::with_capacity(n);
    for i in 0..n {
        let col = solve(&b, &RootVec::unit(n, i).0)
            .ok_or_else(|| RootError::VerificationFailure("simple roots are dependent".into()))?;
        inv_cols.push(col);
    }
    let one = CycElem::one();
    for r in roots {
        let coeffs: Vec<CycElem> = (0..n)
            .map(|row| {
                (0..n)
                    .filter(|&k| !r.0[k].is_zero())
                    .fold(CycElem::zero(), |acc, k| &acc + &(&inv_cols[k][row] * &r.0[k]))
            })
            .collect();
        let mut signs = Vec::new();
        for c in &coeffs {
            if !c.is_algebraic_integer() {
                return Err(RootError::VerificationFailure(format!(
                    "root {r} has non-integral coefficient {c}"
                )));
            }
            signs.push(real::sign(c).expect("real"));
        }
        let pos = signs.iter().any(|&s| s > 0);
        let neg = signs.iter().any(|&s| s < 0);
        if pos && neg {
            return Err(RootError::VerificationFailure(format!("root {r} has mixed signs")));
        }
        for c in &coeffs {
            if c.is_zero() {
                continue;
            }
            let c = if neg { -c } else { c.clone() };
            if real::sign(&(&c - &one)).expect("real") < 0 {
                return Err(RootError::VerificationFailure(format!(
                    "root {r} has a coefficient below 1"
                )));
            }
        }
    }
    Ok(())
}

/// The `m` with `α·β = -2cos(π/m)`; `m = 2` means orthogonal.
pub fn pair_label(alpha: &RootVec, beta: &RootVec, g: &GramMatrix) -> Result<u64, RootError> {
    let v = g.pair(alpha, beta);
    let bad = || RootError::InvalidRootPair(v.canonicalize().to_string());
    let class = kronecker_classify(&v).map_err(|_| bad())?;
    class.neg_two_cos_pi_over().ok_or_else(bad)
}

/// Rational functional from small integers; convenience for callers.
pub fn functional_from_ints(t: &[i64]) -> Vec<BigRational> {
    t.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{enumerate_roots, gram_of_type, CoxeterType};

    fn a2() -> (GramMatrix, Vec<RootVec>) {
        let g = gram_of_type(CoxeterType::A(2)).unwrap();
        let r = enumerate_roots(&g, 100).unwrap().into_vec();
        (g, r)
    }

    #[test]
    fn a2_positive_system() {
        let (_, roots) = a2();
        let (plus, minus) = positive_system(&roots, &functional_from_ints(&[2, 1])).unwrap();
        assert_eq!(plus.len(), 3);
        for v in [[1, 0], [0, 1], [1, 1]] {
            assert!(plus.contains(&RootVec::from_ints(&v)));
        }
        for p in &plus {
            assert!(minus.contains(&p.neg()));
        }
    }

    #[test]
    fn zero_functional_is_rejected() {
        let (_, roots) = a2();
        assert!(matches!(
            positive_system(&roots, &functional_from_ints(&[0, 0])),
            Err(RootError::NonGenericFunctional { .. })
        ));
        assert!(matches!(
            positive_system(&roots, &functional_from_ints(&[1])),
            Err(RootError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn a2_fundamental_systems() {
        let (g, roots) = a2();
        let d = fundamental_system(&roots, &g, &functional_from_ints(&[2, 1])).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.contains(&RootVec::from_ints(&[1, 0])));
        assert!(d.contains(&RootVec::from_ints(&[0, 1])));
        // t = (1, -2): positive roots e1, -e2, -e1-e2; simple ones e1, -e1-e2.
        let d = fundamental_system(&roots, &g, &functional_from_ints(&[1, -2])).unwrap();
        assert!(d.contains(&RootVec::from_ints(&[1, 0])));
        assert!(d.contains(&RootVec::from_ints(&[-1, -1])));
        assert_eq!(pair_label(&d[0], &d[1], &g).unwrap(), 3);
    }

    #[test]
    fn i2_5() {
        let g = gram_of_type(CoxeterType::I2(5)).unwrap();
        let roots = enumerate_roots(&g, 100).unwrap().into_vec();
        assert_eq!(roots.len(), 10);
        let t = functional_from_ints(&[3, 1]);
        let (plus, _) = positive_system(&roots, &t).unwrap();
        assert_eq!(plus.len(), 5);
        let d = fundamental_system(&roots, &g, &t).unwrap();
        assert_eq!(pair_label(&d[0], &d[1], &g).unwrap(), 5);
        assert_eq!(g.pair(&d[0], &d[1]), -CycElem::zeta_plus(10));
    }

    #[test]
    fn labels() {
        let g = gram_of_type(CoxeterType::B(3)).unwrap();
        let e = |i| RootVec::unit(3, i);
        assert_eq!(pair_label(&e(0), &e(1), &g).unwrap(), 3);
        assert_eq!(pair_label(&e(1), &e(2), &g).unwrap(), 4);
        assert_eq!(pair_label(&e(0), &e(2), &g).unwrap(), 2);
        let g = gram_of_type(CoxeterType::H(3)).unwrap();
        assert_eq!(pair_label(&RootVec::unit(3, 0), &RootVec::unit(3, 1), &g).unwrap(), 5);
        // α·α = 2 = -2cos(π/m) has no solution.
        assert!(pair_label(&RootVec::unit(3, 0), &RootVec::unit(3, 0), &g).is_err());
    }

    #[test]
    fn default_functional_is_generic() {
        for t in [CoxeterType::H(3), CoxeterType::B(3), CoxeterType::D(4)] {
            let g = gram_of_type(t).unwrap();
            let roots = enumerate_roots(&g, 1000).unwrap().into_vec();
            let f = default_functional(&roots, g.size());
            let d = fundamental_system(&roots, &g, &f).unwrap();
            assert_eq!(d.len(), g.size());
        }
    }
}
