//! Deterministic constructors for the group families used throughout.
//!
//! Semidirect products are realized on explicit carriers (vectors over a
//! prime field or elements of GF(p^r), paired with an exponent of the acting
//! cyclic group). Multipliers are pinned to the smallest valid choice so that
//! element indexing is reproducible.

use std::path::{Path, PathBuf};

use num_integer::Integer;

use crate::algebra::{factorize, gf_element_of_order, gf_make, is_prime, mod_pow, multiplicative_order, GaloisField};
use crate::group::{close_from_generators, close_from_rule, parse_generator_file, FiniteGroup, Perm};
use crate::{Error, Result, DEFAULT_CLOSURE_CAP};

/// Fields over which `sl2`/`psl2` are built.
pub const SL2_FIELDS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

/// A buildable group description. Products nest; `File` reads a generator
/// file at build time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(u64),
    ElementaryAbelian { p: u64, k: u32 },
    /// Dihedral group of the given order.
    Dihedral(u64),
    /// Generalized quaternion group of the given order.
    Quaternion(u64),
    Symmetric(u32),
    Alternating(u32),
    Heisenberg(u64),
    ModularP3(u64),
    /// The class P(n, p); `q = None` is the elementary abelian member.
    PGroup { n: u32, p: u64, q: Option<u64> },
    Schmidt { p: u64, q: u64, beta: u32 },
    /// `copies` summands of GF(p^r), the first acted on by λ, the others by λ^twist.
    FrobeniusSum { p: u64, q: u64, copies: u32, twist: u64 },
    Sl2(u64),
    Psl2(u64),
    Product(Box<Recipe>, Box<Recipe>),
    File(PathBuf),
}

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}

fn require_prime(p: u64, what: &str) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(out_of_range(format!("{what} = {p} is not prime")))
    }
}

fn schmidt_field(p: u64, q: u64) -> Result<(u32, GaloisField)> {
    require_prime(p, "p")?;
    require_prime(q, "q")?;
    if p == q {
        return Err(out_of_range("p and q must be distinct"));
    }
    let r = multiplicative_order(p, q)? as u32;
    Ok((r, gf_make(p, r)?))
}

impl Recipe {
    /// Checks family preconditions without building anything.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Recipe::Cyclic(n) if n == 0 => Err(out_of_range("cyclic order must be positive")),
            Recipe::Cyclic(_) => Ok(()),
            Recipe::ElementaryAbelian { p, k } => {
                require_prime(p, "p")?;
                if k == 0 {
                    return Err(out_of_range("rank must be positive"));
                }
                Ok(())
            }
            Recipe::Dihedral(n) if n < 2 || n % 2 == 1 => {
                Err(out_of_range(format!("dihedral order {n} must be even and at least 2")))
            }
            Recipe::Dihedral(_) => Ok(()),
            Recipe::Quaternion(n) if n < 8 || !n.is_power_of_two() => {
                Err(out_of_range(format!("quaternion order {n} must be a power of 2, at least 8")))
            }
            Recipe::Quaternion(_) => Ok(()),
            Recipe::Symmetric(n) | Recipe::Alternating(n) if !(1..=7).contains(&n) => {
                Err(out_of_range(format!("degree {n} outside 1..=7")))
            }
            Recipe::Symmetric(_) | Recipe::Alternating(_) => Ok(()),
            Recipe::Heisenberg(p) => {
                require_prime(p, "p")?;
                if p == 2 {
                    return Err(out_of_range("heisenberg requires an odd prime"));
                }
                Ok(())
            }
            Recipe::ModularP3(p) => require_prime(p, "p"),
            Recipe::PGroup { n, p, q } => {
                if n < 2 {
                    return Err(out_of_range("P(n, p) requires n >= 2"));
                }
                require_prime(p, "p")?;
                if let Some(q) = q {
                    require_prime(q, "q")?;
                    if q == p || (p - 1) % q != 0 {
                        return Err(Error::BadPowerAutomorphism { p, q });
                    }
                }
                Ok(())
            }
            Recipe::Schmidt { p, q, beta } => {
                if beta == 0 {
                    return Err(out_of_range("beta must be positive"));
                }
                schmidt_field(p, q).map(|_| ())
            }
            Recipe::FrobeniusSum { p, q, copies, twist } => {
                if copies == 0 {
                    return Err(out_of_range("copies must be positive"));
                }
                schmidt_field(p, q)?;
                if twist == 0 || twist >= q || twist.gcd(&q) != 1 {
                    return Err(out_of_range(format!("twist {twist} must lie in 1..{q}")));
                }
                Ok(())
            }
            Recipe::Sl2(q) | Recipe::Psl2(q) => {
                if SL2_FIELDS.contains(&q) {
                    Ok(())
                } else {
                    let f = factorize(q);
                    let (p, k) = f.pairs().first().copied().unwrap_or((q, 1));
                    Err(Error::UnsupportedField { p, k })
                }
            }
            Recipe::Product(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            Recipe::File(_) => Ok(()),
        }
    }

    /// The order the recipe builds, when known without building (and
    /// representable in a `u64`).
    pub fn expected_order(&self) -> Option<u64> {
        let factorial = |n: u32| (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k));
        match *self {
            Recipe::Cyclic(n) | Recipe::Dihedral(n) | Recipe::Quaternion(n) => Some(n),
            Recipe::ElementaryAbelian { p, k } => p.checked_pow(k),
            Recipe::Symmetric(n) => factorial(n),
            Recipe::Alternating(n) => factorial(n).map(|f| (f / 2).max(1)),
            Recipe::Heisenberg(p) | Recipe::ModularP3(p) => p.checked_pow(3),
            Recipe::PGroup { n, p, q } => match q {
                None => p.checked_pow(n),
                Some(q) => p.checked_pow(n.checked_sub(1)?)?.checked_mul(q),
            },
            Recipe::Schmidt { p, q, beta } => {
                let r = multiplicative_order(p, q).ok()? as u32;
                p.checked_pow(r)?.checked_mul(q.checked_pow(beta)?)
            }
            Recipe::FrobeniusSum { p, q, copies, .. } => {
                let r = multiplicative_order(p, q).ok()? as u32;
                p.checked_pow(r.checked_mul(copies)?)?.checked_mul(q)
            }
            Recipe::Sl2(q) => q.checked_mul(q.checked_mul(q)?.checked_sub(1)?),
            Recipe::Psl2(q) => Some(Recipe::Sl2(q).expected_order()? / (q.checked_sub(1)?).gcd(&2)),
            Recipe::Product(ref a, ref b) => a.expected_order()?.checked_mul(b.expected_order()?),
            Recipe::File(_) => None,
        }
    }

    fn reads_files(&self) -> bool {
        match self {
            Recipe::File(_) => true,
            Recipe::Product(a, b) => a.reads_files() || b.reads_files(),
            _ => false,
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(DEFAULT_CLOSURE_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        self.validate()?;
        let too_big = match self.expected_order() {
            Some(order) => order > cap as u64,
            None => !self.reads_files(),
        };
        if too_big {
            return Err(Error::ClosureCapExceeded { cap });
        }
        match *self {
            Recipe::Cyclic(n) => build_cyclic(n, cap),
            Recipe::ElementaryAbelian { p, k } => build_elementary_abelian(p, k, cap),
            Recipe::Dihedral(n) => build_dihedral(n, cap),
            Recipe::Quaternion(n) => build_quaternion(n, cap),
            Recipe::Symmetric(n) => build_symmetric(n, cap),
            Recipe::Alternating(n) => build_alternating(n, cap),
            Recipe::Heisenberg(p) => build_heisenberg(p, cap),
            Recipe::ModularP3(p) => build_modular_p3(p, cap),
            Recipe::PGroup { n, p, q } => match q {
                None => build_elementary_abelian(p, n, cap),
                Some(q) => build_p_group(n, p, q, cap),
            },
            Recipe::Schmidt { p, q, beta } => build_schmidt(p, q, beta, cap),
            Recipe::FrobeniusSum { p, q, copies, twist } => build_frobenius_sum(p, q, copies, twist, cap),
            Recipe::Sl2(q) => build_sl2(q, cap),
            Recipe::Psl2(q) => {
                let sl = build_sl2(q, cap)?;
                sl.quotient(&sl.center())
            }
            Recipe::Product(ref a, ref b) => {
                let g1 = a.build_with_cap(cap)?;
                let g2 = b.build_with_cap(cap)?;
                build_direct_product(&g1, &g2, cap)
            }
            Recipe::File(ref path) => build_from_file(path, cap),
        }
    }
}

pub fn cyclic(n: u64) -> Result<FiniteGroup> {
    Recipe::Cyclic(n).build()
}

pub fn elementary_abelian(p: u64, k: u32) -> Result<FiniteGroup> {
    Recipe::ElementaryAbelian { p, k }.build()
}

/// Dihedral group of order `order` (so `dihedral(10)` is D_10).
pub fn dihedral(order: u64) -> Result<FiniteGroup> {
    Recipe::Dihedral(order).build()
}

pub fn quaternion(order: u64) -> Result<FiniteGroup> {
    Recipe::Quaternion(order).build()
}

pub fn symmetric(n: u32) -> Result<FiniteGroup> {
    Recipe::Symmetric(n).build()
}

pub fn alternating(n: u32) -> Result<FiniteGroup> {
    Recipe::Alternating(n).build()
}

/// Upper unitriangular 3×3 matrices over Z/p: order p³, exponent p.
pub fn heisenberg(p: u64) -> Result<FiniteGroup> {
    Recipe::Heisenberg(p).build()
}

/// `C_{p²} ⋊ C_p` with `x ↦ x^{1+p}`. For `p = 2` the action is inversion
/// and the result is D_8.
pub fn modular_p3(p: u64) -> Result<FiniteGroup> {
    Recipe::ModularP3(p).build()
}

pub fn p_group_p(n: u32, p: u64, q: Option<u64>) -> Result<FiniteGroup> {
    Recipe::PGroup { n, p, q }.build()
}

/// `GF(p^r) ⋊ C_{q^beta}` with `r = ord_q(p)`, the generator acting as
/// multiplication by the smallest field element of order `q`.
pub fn schmidt_abelian(p: u64, q: u64, beta: u32) -> Result<FiniteGroup> {
    Recipe::Schmidt { p, q, beta }.build()
}

pub fn frobenius_sum(p: u64, q: u64, copies: u32, twist: u64) -> Result<FiniteGroup> {
    Recipe::FrobeniusSum { p, q, copies, twist }.build()
}

pub fn sl2(q: u64) -> Result<FiniteGroup> {
    Recipe::Sl2(q).build()
}

pub fn psl2(q: u64) -> Result<FiniteGroup> {
    Recipe::Psl2(q).build()
}

pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup> {
    build_direct_product(g1, g2, DEFAULT_CLOSURE_CAP)
}

pub fn from_file(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    build_from_file(path.as_ref(), DEFAULT_CLOSURE_CAP)
}

pub fn from_generator_text(text: &str, cap: usize) -> Result<FiniteGroup> {
    let (degree, perms) = parse_generator_file(text)?;
    close_from_generators(degree, &perms, cap)
}

fn build_from_file(path: &Path, cap: usize) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_generator_text(&text, cap)
}

fn build_cyclic(n: u64, cap: usize) -> Result<FiniteGroup> {
    Ok(close_from_rule(0u64, move |a: &u64, b: &u64| (a + b) % n, &[1 % n], cap)?.group)
}

fn build_elementary_abelian(p: u64, k: u32, cap: usize) -> Result<FiniteGroup> {
    let p = p as u32;
    let seeds: Vec<Vec<u32>> = (0..k as usize)
        .map(|i| (0..k as usize).map(|j| u32::from(i == j)).collect())
        .collect();
    let add = move |a: &Vec<u32>, b: &Vec<u32>| a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
    Ok(close_from_rule(vec![0u32; k as usize], add, &seeds, cap)?.group)
}

fn build_direct_product(g1: &FiniteGroup, g2: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let mut seeds: Vec<(usize, usize)> = g1.generators().iter().map(|&g| (g, 0)).collect();
    seeds.extend(g2.generators().iter().map(|&h| (0, h)));
    let (a, b) = (g1.clone(), g2.clone());
    let mul = move |x: &(usize, usize), y: &(usize, usize)| (a.mul(x.0, y.0), b.mul(x.1, y.1));
    Ok(close_from_rule((0usize, 0usize), mul, &seeds, cap)?.group)
}

fn build_dihedral(order: u64, cap: usize) -> Result<FiniteGroup> {
    let m = order / 2;
    // (a, s) = r^a s^s with s r = r^-1 s
    let mul = move |x: &(u64, u8), y: &(u64, u8)| {
        let b = if x.1 == 0 { y.0 } else { (m - y.0) % m };
        ((x.0 + b) % m, x.1 ^ y.1)
    };
    Ok(close_from_rule((0u64, 0u8), mul, &[(1 % m, 0), (0, 1)], cap)?.group)
}

fn build_quaternion(order: u64, cap: usize) -> Result<FiniteGroup> {
    let m = order / 2;
    let half = m / 2;
    // (a, b) = x^a y^b with x^m = 1, y^2 = x^(m/2), y x y^-1 = x^-1
    let mul = move |u: &(u64, u8), v: &(u64, u8)| match (u.1, v.1) {
        (0, _) => ((u.0 + v.0) % m, v.1),
        (_, 0) => ((u.0 + m - v.0) % m, 1),
        _ => ((u.0 + m - v.0 + half) % m, 0),
    };
    Ok(close_from_rule((0u64, 0u8), mul, &[(1, 0), (0, 1)], cap)?.group)
}

fn cycle(degree: usize, points: &[u32]) -> Perm {
    Perm::from_cycles(degree, &[points]).expect("valid cycle")
}

fn build_symmetric(n: u32, cap: usize) -> Result<FiniteGroup> {
    let d = n as usize;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(d, &[1, 2]));
        gens.push(cycle(d, &(1..=n).collect::<Vec<_>>()));
    }
    close_from_generators(d, &gens, cap)
}

fn build_alternating(n: u32, cap: usize) -> Result<FiniteGroup> {
    let d = n as usize;
    let gens: Vec<Perm> = (3..=n).map(|k| cycle(d, &[1, 2, k])).collect();
    close_from_generators(d, &gens, cap)
}

fn build_heisenberg(p: u64, cap: usize) -> Result<FiniteGroup> {
    // (a, b, c) = [[1, a, c], [0, 1, b], [0, 0, 1]]
    let mul = move |x: &(u64, u64, u64), y: &(u64, u64, u64)| {
        ((x.0 + y.0) % p, (x.1 + y.1) % p, (x.2 + y.2 + x.0 * y.1) % p)
    };
    Ok(close_from_rule((0, 0, 0), mul, &[(1, 0, 0), (0, 1, 0)], cap)?.group)
}

fn build_modular_p3(p: u64, cap: usize) -> Result<FiniteGroup> {
    let m = p * p;
    let powers: Vec<u64> = (0..p).map(|t| mod_pow(1 + p, t, m)).collect();
    let mul = move |x: &(u64, u64), y: &(u64, u64)| ((x.0 + powers[x.1 as usize] * y.0) % m, (x.1 + y.1) % p);
    Ok(close_from_rule((0, 0), mul, &[(1, 0), (0, 1)], cap)?.group)
}

/// Smallest integer in `2..p` of multiplicative order `q` modulo `p`.
pub fn power_multiplier(p: u64, q: u64) -> Result<u64> {
    (2..p)
        .find(|&m| multiplicative_order(m, p).ok() == Some(q))
        .ok_or(Error::BadPowerAutomorphism { p, q })
}

fn build_p_group(n: u32, p: u64, q: u64, cap: usize) -> Result<FiniteGroup> {
    let m = power_multiplier(p, q)?;
    let dim = (n - 1) as usize;
    let powers: Vec<u64> = (0..q).map(|t| mod_pow(m, t, p)).collect();
    let mul = move |x: &(Vec<u64>, u64), y: &(Vec<u64>, u64)| {
        let scale = powers[x.1 as usize];
        let v = x.0.iter().zip(&y.0).map(|(a, b)| (a + scale * b) % p).collect();
        (v, (x.1 + y.1) % q)
    };
    let mut seeds: Vec<(Vec<u64>, u64)> = (0..dim)
        .map(|i| ((0..dim).map(|j| u64::from(i == j)).collect(), 0))
        .collect();
    seeds.push((vec![0; dim], 1));
    Ok(close_from_rule((vec![0u64; dim], 0), mul, &seeds, cap)?.group)
}

fn build_schmidt(p: u64, q: u64, beta: u32, cap: usize) -> Result<FiniteGroup> {
    let (_, field) = schmidt_field(p, q)?;
    let lambda = gf_element_of_order(&field, q)?;
    let top = q.pow(beta);
    let scalars: Vec<u32> = (0..q).map(|t| field.pow(lambda, t)).collect();
    let mul = move |x: &(u32, u64), y: &(u32, u64)| {
        let w = field.mul(scalars[(x.1 % q) as usize], y.0);
        (field.add(x.0, w), (x.1 + y.1) % top)
    };
    Ok(close_from_rule((0u32, 0u64), mul, &[(1, 0), (0, 1)], cap)?.group)
}

fn build_frobenius_sum(p: u64, q: u64, copies: u32, twist: u64, cap: usize) -> Result<FiniteGroup> {
    let (_, field) = schmidt_field(p, q)?;
    let lambda = gf_element_of_order(&field, q)?;
    let c = copies as usize;
    // scalars[i][t]: action of the t-th power of the generator on summand i
    let scalars: Vec<Vec<u32>> = (0..c)
        .map(|i| {
            let mu = if i == 0 { lambda } else { field.pow(lambda, twist) };
            (0..q).map(|t| field.pow(mu, t)).collect()
        })
        .collect();
    let mul = move |x: &(Vec<u32>, u64), y: &(Vec<u32>, u64)| {
        let v = (0..c)
            .map(|i| field.add(x.0[i], field.mul(scalars[i][x.1 as usize], y.0[i])))
            .collect();
        (v, (x.1 + y.1) % q)
    };
    let mut seeds: Vec<(Vec<u32>, u64)> = (0..c)
        .map(|i| ((0..c).map(|j| u32::from(i == j)).collect(), 0))
        .collect();
    seeds.push((vec![0; c], 1));
    Ok(close_from_rule((vec![0u32; c], 0), mul, &seeds, cap)?.group)
}

fn build_sl2(q: u64, cap: usize) -> Result<FiniteGroup> {
    let (p, k) = factorize(q).pairs()[0];
    let field = gf_make(p, k)?;
    let one = 1;
    let minus_one = field.neg(1);
    let mut seeds = vec![[one, one, 0, one], [0, one, minus_one, 0]];
    if k > 1 {
        // the polynomial x, encoded as p; needed to leave the prime subfield
        seeds.push([one, p as u32, 0, one]);
    }
    let mul = move |a: &[u32; 4], b: &[u32; 4]| {
        let f = &field;
        [
            f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])),
            f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
            f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])),
            f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])),
        ]
    };
    Ok(close_from_rule([one, 0, 0, one], mul, &seeds, cap)?.group)
}

#[cfg(test)]
mod tests;
