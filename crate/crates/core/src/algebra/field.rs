use super::is_prime;
use crate::{Error, Result};

/// Pinned defining polynomials, lowest coefficient first, leading 1 omitted.
const DEFINING_POLYNOMIALS: &[(u64, u32, &[u32])] = &[
    (2, 2, &[1, 1]),                   // x^2 + x + 1
    (2, 3, &[1, 1, 0]),                // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0]),             // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0]),          // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 0, 0, 0]),       // x^6 + x + 1
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),    // x^7 + x + 1
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]), // x^8 + x^4 + x^3 + x^2 + 1
    (3, 2, &[1, 0]),                   // x^2 + 1
    (3, 3, &[1, 2, 0]),                // x^3 + 2x + 1
    (3, 4, &[2, 0, 0, 2]),             // x^4 + 2x^3 + 2
    (3, 5, &[1, 2, 0, 0, 0]),          // x^5 + 2x + 1
    (5, 2, &[1, 1]),                   // x^2 + x + 1
    (5, 3, &[3, 3, 0]),                // x^3 + 3x + 3
    (7, 2, &[1, 0]),                   // x^2 + 1
    (7, 3, &[4, 0, 6]),                // x^3 + 6x^2 + 4
    (11, 2, &[2, 7]),                  // x^2 + 7x + 2
    (13, 2, &[2, 12]),                 // x^2 + 12x + 2
];

/// GF(p^k) with elements encoded as integers `Σ c_i p^i` in `0..p^k`, where
/// `c_i` is the coefficient of `x^i` in the reduced polynomial.
///
/// Multiplication goes through discrete log tables built from the smallest
/// primitive element.
#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
    size: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub fn gf_make(p: u64, k: u32) -> Result<GaloisField> {
    if !is_prime(p) || k == 0 {
        return Err(Error::UnsupportedField { p, k });
    }
    let modulus: Vec<u32> = if k == 1 {
        // x - 0 keeps the reduction code uniform: x ≡ 0 never triggers for
        // degree-0 elements.
        vec![0, 1]
    } else {
        let tail = DEFINING_POLYNOMIALS
            .iter()
            .find(|&&(q, d, _)| q == p && d == k)
            .map(|&(_, _, c)| c)
            .ok_or(Error::UnsupportedField { p, k })?;
        let mut m = tail.to_vec();
        m.push(1);
        m
    };
    let size = p.checked_pow(k).filter(|&s| s <= 10_000).ok_or(Error::UnsupportedField { p, k })?;
    GaloisField::build(p as u32, k, modulus, size as u32)
}

impl GaloisField {
    fn build(p: u32, k: u32, modulus: Vec<u32>, size: u32) -> Result<Self> {
        let mut field = GaloisField {
            p,
            k,
            modulus,
            size,
            exp: Vec::new(),
            log: Vec::new(),
        };
        if size == 2 {
            field.exp = vec![1];
            field.log = vec![0, 0];
            return Ok(field);
        }
        let units = size - 1;
        for g in 2..size {
            let mut powers = Vec::with_capacity(units as usize);
            let mut x = 1;
            loop {
                powers.push(x);
                x = field.mul_slow(x, g);
                if x == 1 || powers.len() > units as usize {
                    break;
                }
            }
            if powers.len() == units as usize {
                let mut log = vec![0; size as usize];
                for (i, &v) in powers.iter().enumerate() {
                    log[v as usize] = i as u32;
                }
                field.exp = powers;
                field.log = log;
                return Ok(field);
            }
        }
        // Only reachable with a reducible defining polynomial.
        Err(Error::UnsupportedField {
            p: p as u64,
            k,
        })
    }

    fn digits(&self, a: u32) -> Vec<u32> {
        let mut a = a;
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, k) = (self.p, self.k as usize);
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u32; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c != 0 {
                for (i, &m) in self.modulus.iter().enumerate().take(k) {
                    let idx = deg - k + i;
                    prod[idx] = (prod[idx] + (p - c) * m % p) % p;
                }
                prod[deg] = 0;
            }
        }
        self.encode(&prod[..k])
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Monic defining polynomial, lowest coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Embedding of the integer `n` into the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let digits: Vec<u32> = self.digits(a).into_iter().map(|d| (self.p - d) % self.p).collect();
        self.encode(&digits)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let units = self.size - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % units;
        self.exp[e as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let units = (self.size - 1) as u64;
        let l = self.log[a as usize] as u64 * (e % units) % units;
        self.exp[l as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let units = self.size - 1;
        Some(self.exp[((units - self.log[a as usize]) % units) as usize])
    }

    /// Multiplicative order of a non-zero element.
    pub fn element_order(&self, a: u32) -> u64 {
        assert_ne!(a, 0, "zero has no multiplicative order");
        let units = (self.size - 1) as u64;
        units / num_integer::gcd(self.log[a as usize] as u64, units)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size
    }
}

/// Smallest element (in encoding order) of exact multiplicative order `d`.
pub fn gf_element_of_order(field: &GaloisField, d: u64) -> Result<u32> {
    let units = (field.size - 1) as u64;
    if d == 0 || units % d != 0 {
        return Err(Error::NoSuchOrder {
            d,
            size: field.size as u64,
        });
    }
    Ok((1..field.size)
        .find(|&a| field.element_order(a) == d)
        .expect("cyclic unit group has elements of every order dividing its size"))
}

/// Every supported `(p, k)` with `k > 1`.
pub fn supported_extensions() -> impl Iterator<Item = (u64, u32)> {
    DEFINING_POLYNOMIALS.iter().map(|&(p, k, _)| (p, k))
}
