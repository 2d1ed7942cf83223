//! Elementary number theory and small Galois fields.

mod field;

pub use field::{gf_element_of_order, gf_make, supported_extensions, GaloisField};

use num_integer::Integer;

use crate::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> Vec<u64> {
        self.0.iter().map(|&(p, _)| p).collect()
    }

    /// Exponent of `p`, zero when `p` does not divide.
    pub fn valuation(&self, p: u64) -> u32 {
        self.0
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_prime_power(&self) -> bool {
        self.0.len() == 1
    }
}

/// Trial division. Intended for `n ≤ 10^9`.
pub fn factorize(mut n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Factorization(out)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).pairs() == [(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .pairs()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// `p^v_p(n)`, the `p`-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Least `r ≥ 1` with `a^r ≡ 1 (mod m)`.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64> {
    assert!(m >= 2, "modulus must be at least 2");
    let a = a % m;
    if a.gcd(&m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    // The order divides φ(m); test its divisors in increasing order.
    let phi = euler_phi(m);
    let mut divisors: Vec<u64> = (1..=phi).take_while(|d| d * d <= phi).filter(|d| phi % d == 0).collect();
    let large: Vec<u64> = divisors.iter().rev().map(|d| phi / d).collect();
    divisors.extend(large);
    divisors.dedup();
    Ok(divisors
        .into_iter()
        .find(|&d| mod_pow(a, d, m) == 1)
        .expect("a^phi(m) = 1 for coprime a"))
}
