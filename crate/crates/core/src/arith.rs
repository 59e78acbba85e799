//! Elementary number theory on machine integers.

pub use num_integer::{gcd, lcm};

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// ascending order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius function.
pub fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `p^k` with `p` prime and `k >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    n > 1 && factorize(n).len() == 1
}

pub fn is_prime(n: u64) -> bool {
    n > 1 && factorize(n) == [(n, 1)]
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Residues in `[0, n)` coprime to `n`, ascending. For `n = 1` this is `[0]`.
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&a| gcd(a, n) == 1).collect()
}

/// `a mod n` for signed `a`, in `[0, n)`.
pub fn rem_euclid(a: i64, n: u64) -> u64 {
    a.rem_euclid(n as i64) as u64
}

/// `a ≡ ±1 (mod n)`.
pub fn is_plus_minus_one(a: u64, n: u64) -> bool {
    let r = a % n;
    r == 1 % n || (r + 1) % n == 0
}

pub fn lcm_all<I: IntoIterator<Item = u64>>(it: I) -> u64 {
    it.into_iter().fold(1, lcm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_small() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e, "phi({})", i + 1);
        }
        assert_eq!(euler_phi(420), 96);
    }

    #[test]
    fn phi_matches_unit_count() {
        for n in 1..300u64 {
            assert_eq!(euler_phi(n) as usize, units_mod(n).len(), "n = {n}");
        }
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..30).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(
            pp,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
        );
    }

    #[test]
    fn divisors_of_420() {
        let d = divisors(420);
        assert_eq!(d.len(), 24);
        assert!(d.iter().all(|x| 420 % x == 0));
        assert!(d.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn mobius_values() {
        let got: Vec<i32> = (1..=10).map(mobius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn plus_minus_one() {
        assert!(is_plus_minus_one(419, 28));
        assert!(is_plus_minus_one(29, 28));
        assert!(!is_plus_minus_one(3, 28));
        assert!(is_plus_minus_one(5, 1));
    }
}
