//! Polynomials attached to cyclotomic elements. Coefficients are listed
//! low degree first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CycElem;

/// `q_k` with `q_0 = 1`, `q_1 = t`, `q_{k+1} = t q_k - q_{k-1}`.
pub fn chebyshev_q(k: usize) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    if k == 0 {
        return prev;
    }
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..k {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `c_k = sin(kπ/m) / sin(π/m) = q_{k-1}(ζ_2m^+)`.
pub fn cyclotomic_unit_c(m: u64, k: u64) -> CycElem {
    assert!(m >= 2 && k >= 1, "cyclotomic_unit_c needs m >= 2, k >= 1");
    let x = CycElem::zeta_plus(2 * m);
    chebyshev_q(k as usize - 1)
        .iter()
        .rev()
        .fold(CycElem::zero(), |acc, c| &(&acc * &x) + &CycElem::from_bigint(c.clone()))
}

/// Monic minimal polynomial over `Q`: the product of `t - σ(a)` over the
/// distinct conjugates of `a`.
pub fn minimal_polynomial(a: &CycElem) -> Vec<BigRational> {
    let mut poly = vec![CycElem::one()];
    for c in a.galois_orbit() {
        let mut next = vec![CycElem::zero(); poly.len() + 1];
        for (i, p) in poly.iter().enumerate() {
            next[i + 1] = &next[i + 1] + p;
            next[i] = &next[i] - &(p * &c);
        }
        poly = next;
    }
    poly.into_iter()
        .map(|c| c.to_rational().expect("symmetric functions of an orbit are rational"))
        .collect()
}

/// Renders a polynomial in `t`, highest degree first.
pub fn format_poly<T>(coeffs: &[T]) -> String
where
    T: Clone + Into<BigRational>,
{
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate().rev() {
        let c: BigRational = c.clone().into();
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = deg == 0 || !mag.is_one();
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        match deg {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{deg}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn chebyshev_values() {
        assert_eq!(chebyshev_q(0), ints(&[1]));
        assert_eq!(chebyshev_q(1), ints(&[0, 1]));
        assert_eq!(chebyshev_q(2), ints(&[-1, 0, 1]));
        assert_eq!(chebyshev_q(3), ints(&[0, -2, 0, 1]));
        assert_eq!(format_poly(&chebyshev_q(3)), "t^3 - 2t");
    }

    #[test]
    fn unit_examples() {
        assert_eq!(cyclotomic_unit_c(5, 1), CycElem::one());
        let c = cyclotomic_unit_c(4, 2);
        assert_eq!(c, CycElem::zeta_plus(8));
        assert_eq!(c.conjugate_product(), BigRational::from_integer((-2).into()));
        let c = cyclotomic_unit_c(5, 2);
        assert_eq!(c, CycElem::zeta_plus(10));
        assert_eq!(c.conjugate_product(), BigRational::from_integer((-1).into()));
    }

    #[test]
    fn units_match_sine_ratio() {
        for m in 2..=12u64 {
            for k in 1..2 * m {
                let c = cyclotomic_unit_c(m, k);
                assert!(c.is_algebraic_integer());
                let f = (k as f64 * std::f64::consts::PI / m as f64).sin()
                    / (std::f64::consts::PI / m as f64).sin();
                let got = crate::cyclo::real::approx_f64(&c).unwrap();
                assert!((got - f).abs() < 1e-9, "m={m} k={k}");
                if gcd(m, k) == 1 {
                    assert!(c.conjugate_product().abs().is_one());
                }
            }
        }
    }

    #[test]
    fn minimal_polynomials() {
        let g = minimal_polynomial(&CycElem::zeta_plus(10));
        assert_eq!(format_poly(&g), "t^2 - t - 1");
        assert_eq!(format_poly(&minimal_polynomial(&CycElem::one())), "t - 1");
        assert_eq!(format_poly(&minimal_polynomial(&CycElem::zeta(4))), "t^2 + 1");
        assert_eq!(minimal_polynomial(&CycElem::zeta(7)).len(), 7);
    }
}
