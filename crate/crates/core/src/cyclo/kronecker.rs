//! Algebraic integers all of whose conjugates are small.

use std::fmt;

use super::real::{approx_f64, conjugate_sign};
use super::{CycElem, CycloError};
use crate::arith::{euler_phi, gcd, units_mod};

/// Bounds accepted by [`conjugate_bound_leq`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    One,
    Sqrt2,
    Two,
}

impl Bound {
    fn squared(self) -> i64 {
        match self {
            Bound::One => 1,
            Bound::Sqrt2 => 2,
            Bound::Two => 4,
        }
    }
}

/// Members of `{0, ±1, ±√2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SmallValue {
    Zero,
    One,
    MinusOne,
    Sqrt2,
    MinusSqrt2,
}

impl fmt::Display for SmallValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmallValue::Zero => "0",
            SmallValue::One => "1",
            SmallValue::MinusOne => "-1",
            SmallValue::Sqrt2 => "sqrt2",
            SmallValue::MinusSqrt2 => "-sqrt2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KroneckerClass {
    /// A root of unity of the given order.
    RootOfUnity(u64),
    /// `2cos(kπ/m)` with `0 ≤ k ≤ m`, `gcd(k, m) = 1`; `small` is set when the
    /// value also lies in `{0, ±1, ±√2}`.
    TwoCos {
        k: u64,
        m: u64,
        small: Option<SmallValue>,
    },
    None,
}

impl KroneckerClass {
    /// `m` such that the value is `-2cos(π/m)`, if it has that shape.
    pub fn neg_two_cos_pi_over(&self) -> Option<u64> {
        match *self {
            KroneckerClass::TwoCos { k, m, .. } if m >= 2 && k + 1 == m => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for KroneckerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KroneckerClass::RootOfUnity(n) => write!(f, "RootOfUnity({n})"),
            KroneckerClass::TwoCos { k, m, small } => {
                write!(f, "TwoCos({k},{m})")?;
                if let Some(v) = small {
                    write!(f, "/SmallSet({v})")?;
                }
                Ok(())
            }
            KroneckerClass::None => f.write_str("None"),
        }
    }
}

/// Whether every conjugate of the real element `a` has absolute value at
/// most `bound`, decided by exact signs of `bound² - σ_u(a)²`.
pub fn conjugate_bound_leq(a: &CycElem, bound: Bound) -> Result<bool, CycloError> {
    if !a.is_real() {
        return Err(CycloError::NotReal);
    }
    let slack = CycElem::from_int(bound.squared()) - a.square();
    let n = slack.modulus();
    Ok(units_mod(n)
        .into_iter()
        .filter(|&u| 2 * u <= n.max(2))
        .all(|u| conjugate_sign(&slack, u) >= 0))
}

fn small_value(a: &CycElem) -> Option<SmallValue> {
    if a.is_zero() {
        return Some(SmallValue::Zero);
    }
    if *a == CycElem::one() {
        return Some(SmallValue::One);
    }
    if *a == CycElem::from_int(-1) {
        return Some(SmallValue::MinusOne);
    }
    let s = CycElem::zeta_plus(8);
    if *a == s {
        return Some(SmallValue::Sqrt2);
    }
    if *a == -&s {
        return Some(SmallValue::MinusSqrt2);
    }
    None
}

/// Classifies an algebraic integer by the shape of its conjugates.
///
/// Real elements are tested for `2cos(kπ/m)` first, so `1 = 2cos(π/3)` is
/// reported as `TwoCos(1,3)`, not as a root of unity. `±2` is `TwoCos(0,1)`
/// and `TwoCos(1,1)`.
pub fn kronecker_classify(a: &CycElem) -> Result<KroneckerClass, CycloError> {
    if !a.is_algebraic_integer() {
        return Err(CycloError::NotAlgebraicInteger);
    }
    if !a.is_real() {
        return Ok(match a.root_of_unity_order() {
            Some(n) => KroneckerClass::RootOfUnity(n),
            None => KroneckerClass::None,
        });
    }
    if !conjugate_bound_leq(a, Bound::Two)? {
        return Ok(KroneckerClass::None);
    }
    let small = small_value(a);
    if let Some(q) = a.to_rational() {
        let k = match q.to_integer().try_into().unwrap_or(i64::MAX) {
            2 => (0, 1),
            1 => (1, 3),
            0 => (1, 2),
            -1 => (2, 3),
            -2 => (1, 1),
            _ => return Ok(KroneckerClass::None),
        };
        return Ok(KroneckerClass::TwoCos {
            k: k.0,
            m: k.1,
            small,
        });
    }
    // a = 2cos(kπ/m) generates Q(ζ_2m)^+, whose degree φ(2m)/2 is at most φ(N).
    let limit = 2 * euler_phi(a.modulus());
    let x = (approx_f64(a)? / 2.0).clamp(-1.0, 1.0).acos() / std::f64::consts::PI;
    let mut m = 2u64;
    loop {
        // φ(2m) ≥ sqrt(m), so nothing beyond limit² qualifies.
        if m > limit * limit + 2 {
            return Ok(KroneckerClass::None);
        }
        if euler_phi(2 * m) <= limit {
            let mx = m as f64 * x;
            let k = mx.round();
            if (mx - k).abs() < 1e-2 && k >= 0.0 && k <= m as f64 {
                let k = k as u64;
                if gcd(k, m) == 1 {
                    let cand = CycElem::zeta_pow(2 * m, k as i64)
                        + CycElem::zeta_pow(2 * m, -(k as i64));
                    if (a - &cand).is_zero() {
                        return Ok(KroneckerClass::TwoCos { k, m, small });
                    }
                }
            }
        }
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cos(k: u64, m: u64) -> KroneckerClass {
        KroneckerClass::TwoCos { k, m, small: None }
    }

    #[test]
    fn bounds() {
        assert!(conjugate_bound_leq(&CycElem::one(), Bound::One).unwrap());
        assert!(!conjugate_bound_leq(&CycElem::from_int(3), Bound::Two).unwrap());
        assert!(conjugate_bound_leq(&CycElem::zeta_plus(10), Bound::Two).unwrap());
        assert!(!conjugate_bound_leq(&CycElem::zeta_plus(10), Bound::Sqrt2).unwrap());
        assert!(conjugate_bound_leq(&CycElem::zeta_plus(8), Bound::Sqrt2).unwrap());
        assert_eq!(
            conjugate_bound_leq(&CycElem::zeta(5), Bound::Two),
            Err(CycloError::NotReal)
        );
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(
            kronecker_classify(&CycElem::zeta(7)).unwrap(),
            KroneckerClass::RootOfUnity(7)
        );
        assert_eq!(
            kronecker_classify(&-CycElem::zeta(7)).unwrap(),
            KroneckerClass::RootOfUnity(14)
        );
        assert_eq!(
            kronecker_classify(&CycElem::zeta(4)).unwrap(),
            KroneckerClass::RootOfUnity(4)
        );
        // 1 + ζ_7 is not real and has a conjugate of modulus > 1.
        assert_eq!(
            kronecker_classify(&(CycElem::one() + CycElem::zeta(7))).unwrap(),
            KroneckerClass::None
        );
    }

    #[test]
    fn sqrt2_carries_small_flag() {
        let c = kronecker_classify(&CycElem::zeta_plus(8)).unwrap();
        assert_eq!(
            c,
            KroneckerClass::TwoCos {
                k: 1,
                m: 4,
                small: Some(SmallValue::Sqrt2)
            }
        );
        assert_eq!(c.to_string(), "TwoCos(1,4)/SmallSet(sqrt2)");
        assert_eq!(
            kronecker_classify(&-CycElem::zeta_plus(8)).unwrap().to_string(),
            "TwoCos(3,4)/SmallSet(-sqrt2)"
        );
    }

    #[test]
    fn integers() {
        assert_eq!(kronecker_classify(&CycElem::from_int(3)).unwrap(), KroneckerClass::None);
        assert_eq!(kronecker_classify(&CycElem::from_int(-5)).unwrap(), KroneckerClass::None);
        assert_eq!(kronecker_classify(&CycElem::from_int(2)).unwrap(), two_cos(0, 1));
        assert_eq!(kronecker_classify(&CycElem::from_int(-2)).unwrap(), two_cos(1, 1));
        assert_eq!(
            kronecker_classify(&CycElem::one()).unwrap().to_string(),
            "TwoCos(1,3)/SmallSet(1)"
        );
        assert_eq!(
            kronecker_classify(&CycElem::zero()).unwrap().to_string(),
            "TwoCos(1,2)/SmallSet(0)"
        );
    }

    #[test]
    fn rejects_non_integers() {
        assert_eq!(
            kronecker_classify(&CycElem::from_ratio(1, 2)),
            Err(CycloError::NotAlgebraicInteger)
        );
    }

    #[test]
    fn two_cos_family() {
        for m in 2..=24u64 {
            let got = kronecker_classify(&CycElem::zeta_plus(2 * m)).unwrap();
            assert!(
                matches!(got, KroneckerClass::TwoCos { k: 1, m: mm, .. } if mm == m),
                "m = {m}: {got}"
            );
        }
        let c = kronecker_classify(&(CycElem::zeta_pow(14, 3) + CycElem::zeta_pow(14, -3))).unwrap();
        assert_eq!(c, two_cos(3, 7));
        let neg = kronecker_classify(&-CycElem::zeta_plus(10)).unwrap();
        assert_eq!(neg.neg_two_cos_pi_over(), Some(5));
    }

    #[test]
    fn golden_ratio_plus_one_is_none() {
        let g = CycElem::zeta_plus(10) + CycElem::one();
        assert_eq!(kronecker_classify(&g).unwrap(), KroneckerClass::None);
    }

    #[test]
    fn real_non_cosine_within_bound_is_none() {
        // √2 - 1 has conjugate -√2 - 1 of absolute value > 2.
        let x = CycElem::zeta_plus(8) - CycElem::one();
        assert_eq!(kronecker_classify(&x).unwrap(), KroneckerClass::None);
        assert!(!CycElem::zeta_plus(8).is_zero());
    }
}
