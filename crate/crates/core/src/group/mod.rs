//! Fully enumerated finite groups.
//!
//! Every group is built by breadth-first closure from a list of generators:
//! the identity gets index 0 and new elements are appended as the frontier
//! is expanded, each element multiplied on the right by the generators in
//! their listed order. All later determinism (witness choice, "smallest"
//! elements) rests on this indexing.

mod mask;
mod perm;
mod structure;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

pub use mask::SubgroupMask;
pub use perm::{parse_generator_file, Perm};

use crate::{Error, Result};

/// Groups up to this order get a precomputed Cayley table.
pub const TABLE_LIMIT: usize = 4096;

type MulRule = Arc<dyn Fn(usize, usize) -> usize + Send + Sync>;

#[derive(Clone)]
enum Multiplication {
    Table(Arc<[u32]>),
    Rule(MulRule),
}

/// A finite group on the element indices `0..n`, identity at 0.
#[derive(Clone)]
pub struct FiniteGroup {
    n: usize,
    mul: Multiplication,
    inverse: Arc<[u32]>,
    orders: Arc<[u32]>,
    generators: Vec<usize>,
}

/// Result of a closure: the group and the carrier value of every index.
pub struct Closure<T> {
    pub group: FiniteGroup,
    pub elements: Vec<T>,
}

/// Closes `seeds` under `mul` starting from `identity`.
pub fn close_from_rule<T, F>(identity: T, mul: F, seeds: &[T], cap: usize) -> Result<Closure<T>>
where
    T: Clone + Eq + Hash + Send + Sync + 'static,
    F: Fn(&T, &T) -> T + Send + Sync + 'static,
{
    let mut gens: Vec<T> = Vec::new();
    for s in seeds {
        if *s != identity && !gens.contains(s) {
            gens.push(s.clone());
        }
    }
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, u32> = HashMap::from([(identity, 0)]);
    let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
    let mut right: Vec<u32> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for (slot, g) in gens.iter().enumerate() {
            let prod = mul(&elements[i], g);
            let idx = match index.get(&prod) {
                Some(&j) => j,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    let j = elements.len() as u32;
                    index.insert(prod.clone(), j);
                    elements.push(prod);
                    parent.push((i as u32, slot as u32));
                    j
                }
            };
            right.push(idx);
        }
        i += 1;
    }
    let n = elements.len();
    let generators: Vec<usize> = gens.iter().map(|g| index[g] as usize).collect();
    let mul = if n <= TABLE_LIMIT {
        // Row x: x * e_j = (x * e_parent(j)) * gen(j).
        let width = gens.len();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let row = &mut table[x * n..(x + 1) * n];
            row[0] = x as u32;
            for j in 1..n {
                let (par, slot) = parent[j];
                row[j] = right[row[par as usize] as usize * width + slot as usize];
            }
        }
        Multiplication::Table(table.into())
    } else {
        let elems = elements.clone();
        Multiplication::Rule(Arc::new(move |a, b| index[&mul(&elems[a], &elems[b])] as usize))
    };
    Ok(Closure {
        group: FiniteGroup::assemble(n, mul, generators),
        elements,
    })
}

/// Closes permutations of `{1..degree}` under composition.
pub fn close_from_generators(degree: usize, generators: &[Perm], cap: usize) -> Result<FiniteGroup> {
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::ParameterOutOfRange(format!(
            "permutation of degree {} in a group of degree {degree}",
            bad.degree()
        )));
    }
    Ok(close_from_rule(Perm::identity(degree), |a: &Perm, b: &Perm| a.compose(b), generators, cap)?.group)
}

impl FiniteGroup {
    fn assemble(n: usize, mul: Multiplication, generators: Vec<usize>) -> Self {
        let mut g = FiniteGroup {
            n,
            mul,
            inverse: Arc::from(Vec::new()),
            orders: Arc::from(Vec::new()),
            generators,
        };
        let mut inverse = vec![0u32; n];
        let mut orders = vec![0u32; n];
        for x in 0..n {
            let mut prev = 0;
            let mut y = x;
            let mut k = 1;
            while y != 0 {
                prev = y;
                y = g.mul(y, x);
                k += 1;
            }
            // y ran through x, x^2, .., x^k = e; prev = x^(k-1) = x⁻¹.
            orders[x] = k;
            inverse[x] = prev as u32;
        }
        g.inverse = inverse.into();
        g.orders = orders.into();
        g
    }

    pub fn trivial() -> Self {
        FiniteGroup::assemble(1, Multiplication::Table(Arc::from(vec![0u32])), Vec::new())
    }

    /// Group order `|G|`.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul {
            Multiplication::Table(t) => t[a * self.n + b] as usize,
            Multiplication::Rule(f) => f(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    pub fn element_orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.orders.iter().map(|&o| o as u64)
    }

    pub fn has_table(&self) -> bool {
        matches!(self.mul, Multiplication::Table(_))
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.element_order(a);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// Checks associativity on every triple. Cubic; meant for small groups.
    pub fn check_associativity_exhaustive(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                let ab = self.mul(a, b);
                (0..self.n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// Checks associativity on `samples` pseudo-random triples.
    pub fn check_associativity_sampled(&self, samples: usize, seed: u64) -> bool {
        let mut state = seed | 1;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % self.n as u64) as usize
        };
        (0..samples).all(|_| {
            let (a, b, c) = (next(), next(), next());
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.n)
            .field("generators", &self.generators)
            .field("table", &self.has_table())
            .finish()
    }
}

#[cfg(test)]
mod tests;
