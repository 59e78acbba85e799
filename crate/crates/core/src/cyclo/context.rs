//! Per-modulus data: the cyclotomic polynomial and reduction modulo it.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::arith::{divisors, euler_phi, mobius};

/// Reduction data for `Q(ζ_N)`.
#[derive(Debug)]
pub(crate) struct CycloCtx {
    pub modulus: u64,
    pub phi: usize,
    /// Nonzero `(degree, coefficient)` terms of `Φ_N` below the leading one.
    pub tail: Vec<(usize, i64)>,
}

static CACHE: Lazy<RwLock<HashMap<u64, Arc<CycloCtx>>>> = Lazy::new(Default::default);

pub(crate) fn ctx(modulus: u64) -> Arc<CycloCtx> {
    assert!(modulus >= 1, "cyclotomic modulus must be positive");
    if let Some(c) = CACHE.read().unwrap().get(&modulus) {
        return c.clone();
    }
    let built = Arc::new(CycloCtx::new(modulus));
    CACHE
        .write()
        .unwrap()
        .entry(modulus)
        .or_insert(built)
        .clone()
}

/// `Φ_n` as integer coefficients, low degree first, via the Möbius product
/// `Φ_n = ∏_{d | n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut num: Vec<BigInt> = vec![BigInt::from(1)];
    let mut dens = Vec::new();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = mul_binomial(&num, d as usize),
            -1 => dens.push(d as usize),
            _ => {}
        }
    }
    for d in dens {
        num = div_binomial(&num, d);
    }
    num
}

fn mul_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // p * (x^d - 1)
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn div_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // exact division by (x^d - 1): q_i = q_{i+d}... solved from the top.
    let n = p.len() - 1;
    let qdeg = n - d;
    let mut q = vec![BigInt::zero(); qdeg + 1];
    let mut r: Vec<BigInt> = p.to_vec();
    for i in (0..=qdeg).rev() {
        let c = r[i + d].clone();
        r[i + d] -= &c;
        r[i] += &c;
        q[i] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact binomial division");
    q
}

impl CycloCtx {
    fn new(modulus: u64) -> Self {
        let poly: Vec<i64> = cyclotomic_polynomial(modulus)
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficient exceeds i64"))
            .collect();
        let phi = euler_phi(modulus) as usize;
        debug_assert_eq!(poly.len(), phi + 1);
        let tail = poly[..phi]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        CycloCtx {
            modulus,
            phi,
            tail,
        }
    }

    /// Fold exponents modulo `N` and divide by `Φ_N`; returns the `phi`
    /// canonical coordinates.
    pub fn reduce_big(&self, mut c: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.modulus as usize;
        if c.len() > n {
            let extra = c.split_off(n);
            for (i, v) in extra.into_iter().enumerate() {
                c[i % n] += v;
            }
        }
        for k in (self.phi..c.len()).rev() {
            if c[k].is_zero() {
                continue;
            }
            let top = std::mem::take(&mut c[k]);
            let shift = k - self.phi;
            for &(j, coef) in &self.tail {
                c[shift + j] -= &top * coef;
            }
        }
        c.truncate(self.phi);
        c.resize(self.phi, BigInt::zero());
        c
    }

    /// Same as [`reduce_big`](Self::reduce_big) in `i128`; `None` on overflow.
    pub fn reduce_small(&self, mut c: Vec<i128>) -> Option<Vec<i128>> {
        let n = self.modulus as usize;
        if c.len() > n {
            let extra = c.split_off(n);
            for (i, v) in extra.into_iter().enumerate() {
                c[i % n] = c[i % n].checked_add(v)?;
            }
        }
        for k in (self.phi..c.len()).rev() {
            let top = c[k];
            if top == 0 {
                continue;
            }
            c[k] = 0;
            let shift = k - self.phi;
            for &(j, coef) in &self.tail {
                let t = top.checked_mul(coef as i128)?;
                c[shift + j] = c[shift + j].checked_sub(t)?;
            }
        }
        c.truncate(self.phi);
        c.resize(self.phi, 0);
        Some(c)
    }
}
