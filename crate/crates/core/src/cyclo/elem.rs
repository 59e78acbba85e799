use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::context::{ctx, CycloCtx};
use super::CycloError;
use crate::arith::{self, gcd, lcm};

/// An element of the cyclotomic field `Q(ζ_N)`.
///
/// Stored as integer numerators over a common positive denominator, in the
/// power basis `1, ζ_N, …, ζ_N^{φ(N)-1}` reduced modulo the `N`-th
/// cyclotomic polynomial. The numerators and denominator share no common
/// factor, so for a fixed modulus the representation is unique.
///
/// Elements at different moduli are combined by lifting both to the lcm
/// modulus; nothing ever moves an element to a smaller modulus except
/// [`canonicalize`](Self::canonicalize).
///
/// The ring of integers of `Q(ζ_N)` is `Z[ζ_N]`, so an element is an
/// algebraic integer exactly when all its power-basis coordinates are
/// integers, i.e. when the denominator is 1.
#[derive(Clone, Debug)]
pub struct CycElem {
    modulus: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

fn to_i64s(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64()).collect()
}

fn to_bigs(v: Vec<i128>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

impl CycElem {
    fn build(modulus: u64, raw: Vec<BigInt>, den: BigInt) -> Self {
        let c = ctx(modulus);
        let num = match to_i64s(&raw) {
            Some(small) if raw.len() <= 4 * c.modulus as usize + 8 => {
                match c.reduce_small(small.into_iter().map(i128::from).collect()) {
                    Some(r) => to_bigs(r),
                    None => c.reduce_big(raw),
                }
            }
            _ => c.reduce_big(raw),
        };
        Self::normalized(modulus, num, den)
    }

    fn normalized(modulus: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|x| *x = -std::mem::take(x));
        }
        if num.iter().all(Zero::is_zero) {
            return CycElem {
                modulus,
                num,
                den: BigInt::one(),
            };
        }
        if !den.is_one() {
            let mut g = den.clone();
            for x in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(x);
            }
            if !g.is_one() {
                num.iter_mut().for_each(|x| *x = &*x / &g);
                den /= &g;
            }
        }
        CycElem { modulus, num, den }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        CycElem {
            modulus: 1,
            num: vec![v],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::normalized(1, vec![q.numer().clone()], q.denom().clone())
    }

    /// `p / q` as a rational element. Panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::normalized(1, vec![BigInt::from(p)], BigInt::from(q))
    }

    /// Builds `Σ coeffs[i] ζ_N^i` for any number of coefficients; the result
    /// is reduced.
    pub fn from_coeffs(modulus: u64, coeffs: &[BigRational]) -> Self {
        assert!(modulus >= 1);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let raw = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::build(modulus, raw, den)
    }

    /// Integer combination `Σ coeffs[i] ζ_N^i`.
    pub fn from_int_coeffs(modulus: u64, coeffs: &[i64]) -> Self {
        let raw = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::build(modulus, raw, BigInt::one())
    }

    /// The primitive root of unity `ζ_N = exp(2πi/N)`.
    pub fn zeta(n: u64) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let e = arith::rem_euclid(k, n) as usize;
        let mut raw = vec![BigInt::zero(); e + 1];
        raw[e] = BigInt::one();
        Self::build(n, raw, BigInt::one())
    }

    /// `ζ_m + ζ_m^{-1} = 2cos(2π/m)`. For `m ∈ {1, 2}` the value is the
    /// rational `±2` at modulus 1.
    pub fn zeta_plus(m: u64) -> Self {
        assert!(m >= 1, "zeta_plus needs m >= 1");
        match m {
            1 => Self::from_int(2),
            2 => Self::from_int(-2),
            _ => {
                let mut raw = vec![BigInt::zero(); m as usize];
                raw[1] += 1;
                raw[m as usize - 1] += 1;
                Self::build(m, raw, BigInt::one())
            }
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Power-basis coordinates as exact rationals.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Re-expresses the element in `Q(ζ_L)`; `L` must be a multiple of the
    /// current modulus.
    pub fn lift(&self, target: u64) -> Self {
        assert!(
            target % self.modulus == 0,
            "cannot lift modulus {} to {}",
            self.modulus,
            target
        );
        if target == self.modulus {
            return self.clone();
        }
        let step = (target / self.modulus) as usize;
        let len = (self.num.len() - 1) * step + 1;
        let mut raw = vec![BigInt::zero(); len];
        for (i, c) in self.num.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Self::build(target, raw, self.den.clone())
    }

    fn aligned(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Self, u64) {
        let m = lcm(self.modulus, other.modulus);
        let a = if m == self.modulus {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.lift(m))
        };
        let b = if m == other.modulus {
            other.clone()
        } else {
            other.lift(m)
        };
        (a, b, m)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let (a, b, m) = self.aligned(other);
        let den = a.den.lcm(&b.den);
        let fa = &den / &a.den;
        let fb = &den / &b.den;
        let num = a
            .num
            .iter()
            .zip(b.num.iter())
            .map(|(x, y)| {
                let l = x * &fa;
                let r = y * &fb;
                if negate {
                    l - r
                } else {
                    l + r
                }
            })
            .collect();
        Self::normalized(m, num, den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_rational() || other.is_rational() {
            let (r, e) = if self.is_rational() {
                (self, other)
            } else {
                (other, self)
            };
            let num = e.num.iter().map(|x| x * &r.num[0]).collect();
            return Self::normalized(e.modulus, num, &e.den * &r.den);
        }
        let (a, b, m) = self.aligned(other);
        let c = ctx(m);
        let num = mul_coeffs(&c, &a.num, &b.num);
        Self::normalized(m, num, &a.den * &b.den)
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, q: &BigRational) -> Self {
        let num = self.num.iter().map(|x| x * q.numer()).collect();
        Self::normalized(self.modulus, num, &self.den * q.denom())
    }

    pub fn mul_int(&self, k: i64) -> Self {
        let num = self.num.iter().map(|x| x * k).collect();
        Self::normalized(self.modulus, num, self.den.clone())
    }

    pub fn square(&self) -> Self {
        self.mul_impl(self)
    }

    /// The automorphism `σ_u : ζ_N ↦ ζ_N^u`.
    pub fn galois(&self, u: i64) -> Result<Self, CycloError> {
        let n = self.modulus;
        let ur = arith::rem_euclid(u, n);
        if gcd(ur, n) != 1 && n > 1 {
            return Err(CycloError::NotCoprime { u, modulus: n });
        }
        Ok(self.galois_unchecked(ur))
    }

    /// `σ_u` for `u` already known to be a unit mod `N`, given in `[0, N)`.
    pub(crate) fn galois_unchecked(&self, u: u64) -> Self {
        let n = self.modulus;
        if n <= 2 || u % n == 1 || self.is_rational() {
            return self.clone();
        }
        let mut raw = vec![BigInt::zero(); n as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                raw[(i as u64 * u % n) as usize] = c.clone();
            }
        }
        Self::build(n, raw, self.den.clone())
    }

    /// Complex conjugation `σ_{-1}`.
    pub fn conj(&self) -> Self {
        self.galois_unchecked(self.modulus.saturating_sub(1).max(1))
    }

    pub fn is_real(&self) -> bool {
        self.is_rational() || self.conj() == *self
    }

    /// Galois conjugates `σ_u(a)` for every unit `u` mod `N`, in increasing
    /// order of `u` (with repetition when `a` lies in a subfield).
    pub fn conjugates(&self) -> Vec<Self> {
        arith::units_mod(self.modulus)
            .into_iter()
            .map(|u| self.galois_unchecked(u))
            .collect()
    }

    /// The distinct conjugates of `a` over `Q`.
    pub fn galois_orbit(&self) -> Vec<Self> {
        let mut orbit: Vec<Self> = Vec::new();
        for c in self.conjugates() {
            if !orbit.iter().any(|o| o.num == c.num && o.den == c.den) {
                orbit.push(c);
            }
        }
        orbit
    }

    /// `N_{Q(a)/Q}(a)`, the product of the distinct conjugates.
    pub fn conjugate_product(&self) -> BigRational {
        let prod = self
            .galois_orbit()
            .iter()
            .fold(Self::one(), |acc, c| &acc * c);
        prod.to_rational()
            .expect("product of a full Galois orbit is rational")
    }

    pub fn invert(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(&q.recip()));
        }
        // a * ∏_{u ≠ 1} σ_u(a) = N(a) ∈ Q.
        let others = arith::units_mod(self.modulus)
            .into_iter()
            .filter(|&u| u != 1)
            .fold(Self::one(), |acc, u| &acc * &self.galois_unchecked(u));
        let norm = (self * &others)
            .to_rational()
            .expect("field norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, CycloError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.square();
            }
        }
        Ok(acc)
    }

    /// If `a = ±ζ_N^j`, the multiplicative order of `a`.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if !self.is_algebraic_integer() || self.is_zero() {
            return None;
        }
        let n = self.modulus;
        let l = lcm(2, n);
        // All roots of unity in Q(ζ_N) are ±ζ_N^j.
        let nonzero = self.num.iter().filter(|x| !x.is_zero()).count();
        if nonzero == 1 {
            let (i, c) = self
                .num
                .iter()
                .enumerate()
                .find(|(_, c)| !c.is_zero())
                .unwrap();
            if c.abs().is_one() {
                return Some(order_of(i as u64, n, c.is_negative(), l));
            }
        }
        let phi = self.num.len() as u64;
        for j in phi..n {
            let z = Self::zeta_pow(n, j as i64);
            if z.num == self.num {
                return Some(order_of(j, n, false, l));
            }
            if z.num.iter().zip(&self.num).all(|(x, y)| *x == -y) {
                return Some(order_of(j, n, true, l));
            }
        }
        None
    }

    /// Whether `a` lies in `Q(ζ_d)` for a divisor `d` of the modulus: it must
    /// be fixed by every `σ_u` with `u ≡ 1 (mod d)`.
    pub fn lies_in(&self, d: u64) -> bool {
        let n = self.modulus;
        if n % d != 0 {
            return false;
        }
        arith::units_mod(n)
            .into_iter()
            .filter(|u| u % d == 1 % d)
            .all(|u| self.galois_unchecked(u) == *self)
    }

    /// The same value expressed at modulus `d`, if it lies in `Q(ζ_d)`.
    pub fn restrict(&self, d: u64) -> Option<Self> {
        if d == self.modulus {
            return Some(self.clone());
        }
        if !self.lies_in(d) {
            return None;
        }
        let phi_d = arith::euler_phi(d) as usize;
        // Columns: lifted basis vectors ζ_d^j; solve for the coordinates.
        let cols: Vec<Vec<BigRational>> = (0..phi_d)
            .map(|j| Self::zeta_pow(d, j as i64).lift(self.modulus).coeffs())
            .collect();
        let rhs = self.coeffs();
        let sol = solve_overdetermined(&cols, &rhs)?;
        let out = Self::from_coeffs(d, &sol);
        debug_assert!(out == *self);
        Some(out)
    }

    /// Moves the element to the smallest modulus whose field contains it.
    pub fn canonicalize(&self) -> Self {
        if self.is_rational() {
            return Self::from_rational(&self.to_rational().unwrap());
        }
        for d in arith::divisors(self.modulus) {
            if d == self.modulus {
                break;
            }
            if d % 4 == 2 {
                continue;
            }
            if let Some(r) = self.restrict(d) {
                return r;
            }
        }
        self.clone()
    }

    /// A key that identifies the element among elements of the same modulus.
    pub fn structural_key(&self) -> (u64, &[BigInt], &BigInt) {
        (self.modulus, &self.num, &self.den)
    }
}

fn order_of(j: u64, n: u64, negated: bool, l: u64) -> u64 {
    // ±ζ_N^j written as ζ_L^e with L = lcm(2, N).
    let mut e = j * (l / n);
    if negated {
        e += l / 2;
    }
    let e = e % l;
    l / gcd(e, l)
}

fn mul_coeffs(c: &CycloCtx, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len() + b.len() - 1;
    if let (Some(a64), Some(b64)) = (to_i64s(a), to_i64s(b)) {
        let mut acc = vec![0i128; len];
        let mut ok = true;
        'outer: for (i, &x) in a64.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b64.iter().enumerate() {
                match acc[i + j].checked_add(x as i128 * y as i128) {
                    Some(v) => acc[i + j] = v,
                    None => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            if let Some(r) = c.reduce_small(acc) {
                return to_bigs(r);
            }
        }
    }
    let mut acc = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
    c.reduce_big(acc)
}

/// Solves `Σ x_j cols[j] = rhs` exactly, or `None` if inconsistent.
fn solve_overdetermined(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = rhs.len();
    let ncols = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for k in col..=ncols {
                    let t = &m[r][k] * &f;
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][ncols].clone();
    }
    Some(x)
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            return self.den == other.den && self.num == other.num;
        }
        if self.is_rational() && other.is_rational() {
            return self.num[0] == other.num[0] && self.den == other.den;
        }
        let (a, b, _) = self.aligned(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycElem {}

impl fmt::Display for CycElem {
    /// `a0 + a1*z(N) + a2*z(N)^2 + …` with rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, q) in self.coeffs().into_iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => None,
                1 => Some(format!("z({})", self.modulus)),
                _ => Some(format!("z({})^{}", self.modulus, i)),
            };
            match mono {
                None => write!(f, "{}", mag)?,
                Some(m) if mag.is_one() => write!(f, "{}", m)?,
                Some(m) => write!(f, "{}*{}", mag, m)?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CycElem> for &CycElem {
            type Output = CycElem;
            fn $m(self, rhs: &CycElem) -> CycElem {
                $body(self, rhs)
            }
        }
        impl $tr<CycElem> for CycElem {
            type Output = CycElem;
            fn $m(self, rhs: CycElem) -> CycElem {
                $body(&self, &rhs)
            }
        }
        impl $tr<&CycElem> for CycElem {
            type Output = CycElem;
            fn $m(self, rhs: &CycElem) -> CycElem {
                $body(&self, rhs)
            }
        }
        impl $tr<CycElem> for &CycElem {
            type Output = CycElem;
            fn $m(self, rhs: CycElem) -> CycElem {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &CycElem, b: &CycElem| a.add_impl(b, false));
binop!(Sub, sub, |a: &CycElem, b: &CycElem| a.add_impl(b, true));
binop!(Mul, mul, |a: &CycElem, b: &CycElem| a.mul_impl(b));

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            modulus: self.modulus,
            num: self.num.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

impl From<i64> for CycElem {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn zeta_plus_small_values() {
        assert_eq!(CycElem::zeta_plus(6), CycElem::one());
        assert_eq!(CycElem::zeta_plus(4), CycElem::zero());
        assert_eq!(CycElem::zeta_plus(3), CycElem::from_int(-1));
        assert_eq!(CycElem::zeta_plus(1).modulus(), 1);
        assert_eq!(CycElem::zeta_plus(2), CycElem::from_int(-2));
        assert!(CycElem::zeta_plus(10).is_real());
    }

    #[test]
    fn basic_identities() {
        let i = CycElem::zeta(4);
        assert_eq!(&i * &i, CycElem::from_int(-1));
        let g = CycElem::zeta_plus(10);
        assert_eq!(&(&g * &g) - &g, CycElem::one());
        assert_eq!(&g + &CycElem::zero(), g);
    }

    #[test]
    fn golden_ratio_is_one_plus_sqrt5_over_two() {
        // √5 = 2ζ_5 + 2ζ_5^4 + 1.
        let sqrt5 = CycElem::from_int_coeffs(5, &[1, 2, 0, 0, 2]);
        assert_eq!(&sqrt5 * &sqrt5, CycElem::from_int(5));
        let phi = (&CycElem::one() + &sqrt5).scale(&q(1, 2));
        assert_eq!(phi, CycElem::zeta_plus(10));
    }

    #[test]
    fn inverses() {
        assert_eq!(CycElem::one().invert().unwrap(), CycElem::one());
        let z8 = CycElem::zeta(8);
        assert_eq!(z8.invert().unwrap(), CycElem::zeta_pow(8, 7));
        let g = CycElem::zeta_plus(10);
        assert_eq!(g.invert().unwrap(), &g - &CycElem::one());
        assert_eq!(
            CycElem::zero().invert().unwrap_err(),
            CycloError::DivisionByZero
        );
        let x = CycElem::from_coeffs(12, &[q(1, 3), q(-2, 5), q(7, 1), q(0, 1)]);
        assert_eq!(&x * &x.invert().unwrap(), CycElem::one());
    }

    #[test]
    fn galois_examples() {
        let z5 = CycElem::zeta(5);
        assert_eq!(z5.galois(2).unwrap(), CycElem::zeta_pow(5, 2));
        let g = CycElem::zeta_plus(10);
        assert_eq!(g.galois(-1).unwrap(), g);
        let s2 = CycElem::zeta_plus(8);
        assert_eq!(s2.galois(3).unwrap(), -&s2);
        assert_eq!(
            s2.galois(2).unwrap_err(),
            CycloError::NotCoprime { u: 2, modulus: 8 }
        );
        assert_eq!(g.galois(1).unwrap(), g);
    }

    #[test]
    fn galois_composes() {
        let x = CycElem::from_int_coeffs(15, &[3, -1, 4, 1, -5, 9, 2, -6]);
        for u in [2i64, 4, 7, 11, 13, 14] {
            for v in [2i64, 7, 8] {
                let lhs = x.galois(u).unwrap().galois(v).unwrap();
                let rhs = x.galois(u * v % 15).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn realness() {
        assert!(!CycElem::zeta(8).is_real());
        assert!((CycElem::zeta(8) + CycElem::zeta_pow(8, -1)).is_real());
        assert!(CycElem::from_ratio(3, 2).is_real());
    }

    #[test]
    fn integrality() {
        assert!(CycElem::zeta_plus(10).is_algebraic_integer());
        assert!(!CycElem::from_ratio(1, 2).is_algebraic_integer());
        let x = (CycElem::zeta(5) + CycElem::zeta_pow(5, 4)).scale(&q(1, 3));
        assert!(!x.is_algebraic_integer());
        // ζ_5 + ζ_5^4 = -1 - ζ_5^2 - ζ_5^3 in the power basis.
        assert_eq!(x.coeffs()[0], q(-1, 3));
    }

    #[test]
    fn lifting_across_moduli() {
        let s2 = CycElem::zeta_plus(8);
        let lifted = s2.lift(24);
        assert_eq!(lifted.modulus(), 24);
        assert_eq!(lifted, s2);
        assert_eq!(lifted.restrict(8).unwrap().structural_key(), s2.structural_key());
        // ζ_3 = ζ_12^4 after lifting.
        assert_eq!(CycElem::zeta(3), CycElem::zeta_pow(12, 4));
        let sum = CycElem::zeta(3) + CycElem::zeta(4);
        assert_eq!(sum.modulus(), 12);
    }

    #[test]
    fn canonicalize_finds_conductor() {
        let s3 = CycElem::zeta_plus(12); // √3, conductor 12
        assert_eq!(s3.canonicalize().modulus(), 12);
        let g = CycElem::zeta_plus(10).lift(60);
        let c = g.canonicalize();
        assert_eq!(c.modulus(), 5);
        assert_eq!(c, g);
        assert_eq!(CycElem::zeta_plus(6).lift(30).canonicalize().modulus(), 1);
    }

    #[test]
    fn root_of_unity_orders() {
        assert_eq!(CycElem::zeta(7).root_of_unity_order(), Some(7));
        assert_eq!(CycElem::from_int(-1).root_of_unity_order(), Some(2));
        assert_eq!(CycElem::one().root_of_unity_order(), Some(1));
        assert_eq!((-CycElem::zeta(5)).root_of_unity_order(), Some(10));
        assert_eq!(CycElem::zeta_pow(12, 10).root_of_unity_order(), Some(6));
        assert_eq!(CycElem::zeta_plus(8).root_of_unity_order(), None);
        for k in 0..30 {
            let z = CycElem::zeta_pow(30, k);
            let ord = z.root_of_unity_order().unwrap();
            assert_eq!(ord, 30 / gcd(k as u64, 30));
            assert_eq!(z.pow(ord as i64).unwrap(), CycElem::one());
        }
    }

    #[test]
    fn display_renders_power_basis() {
        assert_eq!(CycElem::zeta_plus(8).to_string(), "z(8) - z(8)^3");
        assert_eq!(CycElem::from_ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(CycElem::zero().to_string(), "0");
        let x = CycElem::from_coeffs(5, &[q(1, 2), q(0, 1), q(-2, 3)]);
        assert_eq!(x.to_string(), "1/2 - 2/3*z(5)^2");
    }

    #[test]
    fn conjugate_products() {
        assert_eq!(CycElem::zeta_plus(8).conjugate_product(), q(-2, 1));
        assert_eq!(CycElem::zeta_plus(10).conjugate_product(), q(-1, 1));
        assert_eq!(CycElem::from_int(7).conjugate_product(), q(7, 1));
    }
}
