//! Totally real abelian fields `K = Q(ζ_2n^+ : n ∈ gens)`.
//!
//! `K` sits inside `Q(ζ_M)` with `M = lcm(2n)`, as the fixed field of
//! `H = {a mod M : a ≡ ±1 (mod 2n) for every generator n}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{euler_phi, is_plus_minus_one, lcm, lcm_all, units_mod};
use crate::cyclo::CycElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("invalid generator {0}: generators must be at least 2")]
    InvalidGenerator(u64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "FieldJson", into = "FieldJson")]
pub struct FieldDescriptor {
    gens: Vec<u64>,
    modulus: u64,
    h: Vec<u64>,
    degree: u64,
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    gens: Vec<u64>,
}

impl TryFrom<FieldJson> for FieldDescriptor {
    type Error = FieldError;
    fn try_from(j: FieldJson) -> Result<Self, FieldError> {
        make_field(j.gens)
    }
}

impl From<FieldDescriptor> for FieldJson {
    fn from(f: FieldDescriptor) -> Self {
        FieldJson { gens: f.gens }
    }
}

/// Builds the descriptor of `Q(ζ_2n^+ : n ∈ gens)`. Duplicates are ignored.
pub fn make_field<I: IntoIterator<Item = u64>>(gens: I) -> Result<FieldDescriptor, FieldError> {
    let gens: BTreeSet<u64> = gens.into_iter().collect();
    if let Some(&bad) = gens.iter().find(|&&n| n < 2) {
        return Err(FieldError::InvalidGenerator(bad));
    }
    let gens: Vec<u64> = gens.into_iter().collect();
    let modulus = lcm_all(gens.iter().map(|n| 2 * n));
    let h: Vec<u64> = units_mod(modulus)
        .into_iter()
        .filter(|&a| gens.iter().all(|&n| is_plus_minus_one(a, 2 * n)))
        .collect();
    let degree = euler_phi(modulus) / h.len() as u64;
    Ok(FieldDescriptor {
        gens,
        modulus,
        h,
        degree,
    })
}

impl FieldDescriptor {
    /// The rational field.
    pub fn rationals() -> Self {
        make_field([]).expect("empty generator set is valid")
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    /// `M`, the lcm of `2n` over the generators.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residues of `H` in `[0, M)`, ascending.
    pub fn h_group(&self) -> &[u64] {
        &self.h
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Whether `ζ_2n^+ ∈ K`.
    ///
    /// `Q(ζ_2n^+)` is the real subfield of `Q(ζ_N)` with `N = n` for odd `n`
    /// and `N = 2n` otherwise; for `N > 4` its conductor is `N`. It lies in
    /// `K` iff `N | M` and `H` fixes it, i.e. `H ⊆ {±1 mod N}`.
    pub fn contains_zeta_plus(&self, n: u64) -> Result<bool, FieldError> {
        if n < 2 {
            return Err(FieldError::InvalidGenerator(n));
        }
        let cond = if n % 2 == 1 { n } else { 2 * n };
        if cond <= 4 {
            return Ok(true);
        }
        if self.modulus % cond != 0 {
            return Ok(false);
        }
        Ok(self.h.iter().all(|&a| is_plus_minus_one(a, cond)))
    }

    /// Whether `a ∈ K`: `a` must be fixed by every `σ_u` with `u mod M ∈ H`.
    pub fn contains_element(&self, a: &CycElem) -> bool {
        if a.is_rational() {
            return true;
        }
        let l = lcm(self.modulus, a.modulus());
        let a = a.lift(l);
        let m = self.modulus;
        units_mod(l)
            .into_iter()
            .filter(|&u| u % l != 1 % l && self.h.binary_search(&(u % m)).is_ok())
            .all(|u| a.galois_unchecked(u) == a)
    }

    /// Whether `self ⊆ other`.
    pub fn subfield_of(&self, other: &FieldDescriptor) -> bool {
        self.gens
            .iter()
            .all(|&n| other.contains_zeta_plus(n).unwrap_or(false))
    }

    /// The compositum `K1 K2`.
    pub fn compositum(&self, other: &FieldDescriptor) -> FieldDescriptor {
        make_field(self.gens.iter().chain(&other.gens).copied()).expect("generators already valid")
    }
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.subfield_of(other) && other.subfield_of(self)
    }
}

impl Eq for FieldDescriptor {}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("Q");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|n| format!("zeta_{}^+", 2 * n))
            .collect();
        write!(f, "Q({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force membership: every unit of `lcm(M, 2n)` reducing into `H`
    /// must be `±1 mod 2n`.
    fn contains_brute(f: &FieldDescriptor, n: u64) -> bool {
        let l = lcm(f.modulus(), 2 * n);
        units_mod(l)
            .into_iter()
            .filter(|&a| f.gens().iter().all(|&g| is_plus_minus_one(a, 2 * g)))
            .all(|a| is_plus_minus_one(a, 2 * n))
    }

    #[test]
    fn degrees() {
        assert_eq!(FieldDescriptor::rationals().degree(), 1);
        assert_eq!(make_field([14, 15]).unwrap().degree(), 24);
        let f = make_field([210]).unwrap();
        assert_eq!(f.degree(), 48);
        assert_eq!(f.h_group(), &[1, 419]);
        assert_eq!(make_field([2, 3]).unwrap().degree(), 1);
        assert_eq!(make_field([4]).unwrap().degree(), 2);
        assert_eq!(make_field([5]).unwrap().degree(), 2);
    }

    #[test]
    fn invalid_generators() {
        assert_eq!(make_field([1]).unwrap_err(), FieldError::InvalidGenerator(1));
        assert_eq!(make_field([3, 0]).unwrap_err(), FieldError::InvalidGenerator(0));
        assert!(FieldDescriptor::rationals().contains_zeta_plus(1).is_err());
    }

    #[test]
    fn h_is_a_subgroup_with_minus_one() {
        for gens in [vec![14, 15], vec![210], vec![4], vec![6, 10, 9], vec![12]] {
            let f = make_field(gens).unwrap();
            let m = f.modulus();
            let h = f.h_group();
            assert!(h.contains(&(m - 1)));
            for &a in h {
                for &b in h {
                    assert!(h.binary_search(&(a * b % m)).is_ok());
                }
            }
            assert_eq!(f.degree() * h.len() as u64, euler_phi(m));
        }
    }

    #[test]
    fn membership_examples() {
        let q = FieldDescriptor::rationals();
        assert!(q.contains_zeta_plus(3).unwrap());
        assert!(q.contains_zeta_plus(2).unwrap());
        assert!(!q.contains_zeta_plus(4).unwrap());
        let f = make_field([14, 15]).unwrap();
        assert!(f.contains_zeta_plus(5).unwrap());
        assert!(!f.contains_zeta_plus(4).unwrap());
        for &g in f.gens() {
            assert!(f.contains_zeta_plus(g).unwrap());
        }
    }

    #[test]
    fn membership_matches_brute_force() {
        for gens in [vec![], vec![14, 15], vec![210], vec![4], vec![9, 10], vec![12, 35], vec![6]] {
            let f = make_field(gens).unwrap();
            for n in 2..=220 {
                assert_eq!(f.contains_zeta_plus(n).unwrap(), contains_brute(&f, n), "{f} n={n}");
            }
        }
    }

    #[test]
    fn element_membership() {
        let q = FieldDescriptor::rationals();
        assert!(q.contains_element(&CycElem::from_ratio(7, 3)));
        assert!(!q.contains_element(&CycElem::zeta_plus(8)));
        let f = make_field([14, 15]).unwrap();
        assert!(f.contains_element(&CycElem::zeta_plus(10)));
        assert!(!f.contains_element(&CycElem::zeta(5)));
        for n in 2..=60 {
            assert_eq!(
                f.contains_element(&CycElem::zeta_plus(2 * n)),
                f.contains_zeta_plus(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn subfields_and_equality() {
        let q = FieldDescriptor::rationals();
        let a = make_field([14, 15]).unwrap();
        let b = make_field([210]).unwrap();
        assert!(q.subfield_of(&a));
        assert!(a.subfield_of(&b));
        assert!(!b.subfield_of(&a));
        assert_eq!(make_field([2, 3]).unwrap(), q);
        assert_eq!(make_field([7, 14, 2]).unwrap(), make_field([14]).unwrap());
        assert_eq!(a.compositum(&b), b);
    }

    #[test]
    fn json_round_trip() {
        let f = make_field([15, 14, 14]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"gens":[14,15]}"#);
        let g: FieldDescriptor = serde_json::from_str(&s).unwrap();
        assert_eq!(g.degree(), 24);
        assert!(serde_json::from_str::<FieldDescriptor>(r#"{"gens":[1]}"#).is_err());
    }
}
