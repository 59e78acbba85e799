//! Certified real enclosures under the embedding `ζ_N ↦ exp(2πi/N)`.
//!
//! Everything is computed on fixed-point integers scaled by `2^p` with
//! explicit lower and upper bounds (floor for lower, ceiling for upper), so
//! every enclosure is rigorous. Precision doubles on each refinement.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::{CycElem, CycloError};
use crate::arith::units_mod;

/// `mant · 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub mant: BigInt,
    pub exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }
    }

    pub fn to_rational(&self) -> BigRational {
        let two = BigInt::from(2);
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant * two.pow(self.exp as u32))
        } else {
            BigRational::new(self.mant.clone(), two.pow((-self.exp) as u32))
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = (&self.mant >> shift as usize).to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi((self.exp + shift) as i32)
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.17e}", self.to_f64())
    }
}

/// A closed interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl RealInterval {
    /// `hi - lo` as an exact rational.
    pub fn width(&self) -> BigRational {
        self.hi.to_rational() - self.lo.to_rational()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo.to_rational() <= x && x <= &self.hi.to_rational()
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo.to_f64() <= x && x <= self.hi.to_f64()
    }

    pub fn midpoint_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    /// `Some(sign)` if the interval excludes zero.
    pub fn strict_sign(&self) -> Option<i32> {
        if self.lo.signum() > 0 {
            Some(1)
        } else if self.hi.signum() < 0 {
            Some(-1)
        } else {
            None
        }
    }
}

/// Fixed-point bounds `[lo, hi] · 2^-p`.
#[derive(Clone, Debug)]
struct Bounds {
    lo: BigInt,
    hi: BigInt,
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

static PI_CACHE: Lazy<Mutex<HashMap<u32, Arc<Bounds>>>> = Lazy::new(Default::default);
/// `cos(2πj/N)` bounds for all `j`, keyed by `(N, precision)`.
type CosTables = HashMap<(u64, u32), Arc<Vec<Bounds>>>;
static COS_CACHE: Lazy<Mutex<CosTables>> = Lazy::new(Default::default);

/// Bounds on `arctan(1/k) · 2^p`; returns the truncated sum and an error
/// allowance in ulps.
fn arctan_inv(k: u64, p: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << p as usize;
    let k2 = BigInt::from(k * k);
    let mut power = &one / BigInt::from(k); // floor(2^p / k^{2j+1})
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut j = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power = &power / &k2;
        j += 1;
        terms += 1;
    }
    // Each term is off by < 2 ulps from flooring twice, plus the tail (< 1).
    (sum, BigInt::from(2 * terms + 1))
}

fn pi_bounds(p: u32) -> Arc<Bounds> {
    if let Some(b) = PI_CACHE.lock().unwrap().get(&p) {
        return b.clone();
    }
    let guard = 16u32;
    let q = p + guard;
    let (a5, e5) = arctan_inv(5, q);
    let (a239, e239) = arctan_inv(239, q);
    let mid: BigInt = a5 * 16u32 - a239 * 4u32;
    let err: BigInt = e5 * 16u32 + e239 * 4u32;
    let lo = (&mid - &err) >> guard as usize;
    let up: BigInt = -(&mid + &err);
    let hi = -(up >> guard as usize);
    let b = Arc::new(Bounds { lo, hi });
    PI_CACHE.lock().unwrap().insert(p, b.clone());
    b
}

/// Bounds on `cos(π j / n) · 2^p` for `0 ≤ j/n ≤ 1/2`.
fn cos_pi_fraction(j: u64, n: u64, p: u32, pi: &Bounds) -> Bounds {
    let one = BigInt::one() << p as usize;
    if j == 0 {
        return Bounds {
            lo: one.clone(),
            hi: one,
        };
    }
    let jn = BigInt::from(j);
    let nn = BigInt::from(n);
    // x = π j / n ∈ [0, π/2]
    let x_lo = (&pi.lo * &jn).div_floor(&nn);
    let x_hi = ceil_div(&(&pi.hi * &jn), &nn);
    let sq_lo = (&x_lo * &x_lo) >> p as usize;
    let sq_hi = ceil_div(&(&x_hi * &x_hi), &one);
    let mut t_lo = one.clone();
    let mut t_hi = one.clone();
    let mut lo = one.clone();
    let mut hi = one.clone();
    let mut k = 1u64;
    loop {
        let d = BigInt::from((2 * k - 1) * (2 * k));
        t_lo = ((&t_lo * &sq_lo) >> p as usize) / &d;
        t_hi = ceil_div(&ceil_div(&(&t_hi * &sq_hi), &one), &d);
        if k % 2 == 1 {
            lo -= &t_hi;
            hi -= &t_lo;
        } else {
            lo += &t_lo;
            hi += &t_hi;
        }
        if t_hi <= BigInt::one() && k >= 2 {
            // Alternating tail bounded by the last term.
            lo -= 1;
            hi += 1;
            break;
        }
        k += 1;
    }
    Bounds { lo, hi }
}

/// Bounds on `cos(2π r / n) · 2^p` for every `r ∈ [0, n)`.
fn cos_table(n: u64, p: u32) -> Arc<Vec<Bounds>> {
    if let Some(t) = COS_CACHE.lock().unwrap().get(&(n, p)) {
        return t.clone();
    }
    let pi = pi_bounds(p);
    let table: Vec<Bounds> = (0..n)
        .map(|r| {
            let r = r.min(n - r);
            // cos(2πr/n) with 2r/n ∈ [0, 1]; fold into [0, 1/2].
            let (j, neg) = if 4 * r <= n {
                (2 * r, false)
            } else {
                (n - 2 * r, true)
            };
            let b = cos_pi_fraction(j, n, p, &pi);
            if neg {
                Bounds { lo: -b.hi, hi: -b.lo }
            } else {
                b
            }
        })
        .collect();
    let table = Arc::new(table);
    COS_CACHE.lock().unwrap().insert((n, p), table.clone());
    table
}

/// Fixed-point bounds on `Re σ_u(a) · 2^p`.
fn eval_conj_bounds(a: &CycElem, u: u64, p: u32) -> Bounds {
    let n = a.modulus();
    let den = a.denominator();
    if a.is_rational() {
        let v = &a.numerators()[0] << p as usize;
        return Bounds {
            lo: v.div_floor(den),
            hi: ceil_div(&v, den),
        };
    }
    let table = cos_table(n, p);
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for (i, c) in a.numerators().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let b = &table[((i as u64) * u % n) as usize];
        if c.is_positive() {
            lo += c * &b.lo;
            hi += c * &b.hi;
        } else {
            lo += c * &b.hi;
            hi += c * &b.lo;
        }
    }
    Bounds {
        lo: lo.div_floor(den),
        hi: ceil_div(&hi, den),
    }
}

fn magnitude_bits(a: &CycElem) -> u32 {
    let s: BigInt = a.numerators().iter().map(|c| c.abs()).sum();
    s.bits() as u32 + 2
}

/// Enclosure of `σ_u(a)` of width at most `2^-bits`, for a real `a`.
pub(crate) fn enclose_conjugate(a: &CycElem, u: u64, bits: u32) -> RealInterval {
    let mut p = bits + magnitude_bits(a) + 8;
    loop {
        let b = eval_conj_bounds(a, u, p);
        let width = &b.hi - &b.lo;
        if width <= BigInt::one() << ((p - bits) as usize) {
            let exp = -(p as i64);
            return RealInterval {
                lo: Dyadic::new(b.lo, exp),
                hi: Dyadic::new(b.hi, exp),
            };
        }
        p *= 2;
    }
}

/// Certified enclosure of a real element, width at most `2^-bits`.
pub fn eval_real(a: &CycElem, bits: u32) -> Result<RealInterval, CycloError> {
    if !a.is_real() {
        return Err(CycloError::NotReal);
    }
    Ok(enclose_conjugate(a, 1, bits))
}

/// Exact sign of `σ_u(a)` for a real `a`. Zero only via the exact test.
pub(crate) fn conjugate_sign(a: &CycElem, u: u64) -> i32 {
    if a.is_zero() {
        return 0;
    }
    if let Some(q) = a.to_rational() {
        return if q.is_positive() { 1 } else { -1 };
    }
    let mut p = 64u32;
    loop {
        let b = eval_conj_bounds(a, u, p);
        if b.lo.is_positive() {
            return 1;
        }
        if b.hi.is_negative() {
            return -1;
        }
        p *= 2;
    }
}

/// Exact sign of a real element under the fixed embedding.
pub fn sign(a: &CycElem) -> Result<i32, CycloError> {
    if !a.is_real() {
        return Err(CycloError::NotReal);
    }
    Ok(conjugate_sign(a, 1))
}

/// Total order on real elements.
pub fn compare(a: &CycElem, b: &CycElem) -> Result<Ordering, CycloError> {
    Ok(sign(&(a - b))?.cmp(&0))
}

/// Whether `σ_u(a) > 0` for every real embedding.
pub fn is_totally_positive(a: &CycElem) -> Result<bool, CycloError> {
    if !a.is_real() {
        return Err(CycloError::NotReal);
    }
    let n = a.modulus();
    Ok(units_mod(n)
        .into_iter()
        .filter(|&u| 2 * u <= n.max(2))
        .all(|u| conjugate_sign(a, u) > 0))
}

/// Signs of `σ_u(a)` for one representative `u` of each `±` pair of units.
pub fn conjugate_signs(a: &CycElem) -> Result<Vec<i32>, CycloError> {
    if !a.is_real() {
        return Err(CycloError::NotReal);
    }
    let n = a.modulus();
    Ok(units_mod(n)
        .into_iter()
        .filter(|&u| 2 * u <= n.max(2))
        .map(|u| conjugate_sign(a, u))
        .collect())
}

/// A double-precision approximation of a real element.
pub fn approx_f64(a: &CycElem) -> Result<f64, CycloError> {
    Ok(eval_real(a, 60)?.midpoint_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn pi_enclosure() {
        let b = pi_bounds(200);
        let scale = 2f64.powi(200);
        let lo = b.lo.to_f64().unwrap() / scale;
        let hi = b.hi.to_f64().unwrap() / scale;
        assert!(lo <= std::f64::consts::PI && std::f64::consts::PI <= hi);
        assert!(&b.hi - &b.lo < BigInt::from(64));
    }

    #[test]
    fn one_encloses_one() {
        let iv = eval_real(&CycElem::one(), 10).unwrap();
        assert!(iv.contains(&rat(1, 1)));
        assert!(iv.width() <= rat(1, 1024));
    }

    #[test]
    fn golden_ratio_and_sqrt2() {
        let g = eval_real(&CycElem::zeta_plus(10), 64).unwrap();
        assert!(g.contains_f64(1.618_033_988_749_895));
        assert!(g.width() <= BigRational::new(1.into(), BigInt::one() << 64usize));
        // 1.6180339887498948482045868 bracketed by rationals
        assert!(g.lo.to_rational() > rat(16180339887, 10_000_000_000));
        assert!(g.hi.to_rational() < rat(16180339888, 10_000_000_000));
        let s = eval_real(&CycElem::zeta_plus(8), 64).unwrap();
        assert!(s.lo.to_rational() > rat(14142135623, 10_000_000_000));
        assert!(s.hi.to_rational() < rat(14142135624, 10_000_000_000));
    }

    #[test]
    fn rejects_non_real() {
        assert_eq!(eval_real(&CycElem::zeta(8), 10), Err(CycloError::NotReal));
        assert_eq!(sign(&CycElem::zeta(3)), Err(CycloError::NotReal));
    }

    #[test]
    fn signs() {
        assert_eq!(sign(&CycElem::zero()).unwrap(), 0);
        let g = CycElem::zeta_plus(10);
        assert_eq!(sign(&(&g - &CycElem::one())).unwrap(), 1);
        let s2 = CycElem::zeta_plus(8);
        assert_eq!(sign(&(&s2 - &CycElem::from_int(2))).unwrap(), -1);
        // ζ_5 + ζ_5^4 = (√5 - 1)/2 > 0, ζ_5^2 + ζ_5^3 < 0
        assert_eq!(sign(&CycElem::zeta_plus(5)).unwrap(), 1);
        assert_eq!(sign(&(CycElem::zeta_pow(5, 2) + CycElem::zeta_pow(5, 3))).unwrap(), -1);
    }

    #[test]
    fn every_cos_value_matches_floats() {
        for n in [7u64, 12, 30, 60, 105] {
            for k in 0..n {
                let x = CycElem::zeta_pow(n, k as i64) + CycElem::zeta_pow(n, -(k as i64));
                let iv = eval_real(&x, 40).unwrap();
                let f = 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
                assert!((iv.midpoint_f64() - f).abs() < 1e-9, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn conjugate_signs_of_sqrt2() {
        let s2 = CycElem::zeta_plus(8);
        assert_eq!(conjugate_signs(&s2).unwrap(), vec![1, -1]);
        assert!(!is_totally_positive(&s2).unwrap());
        assert!(is_totally_positive(&(&s2 + &CycElem::from_int(2))).unwrap());
    }
}
