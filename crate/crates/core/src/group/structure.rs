use num_integer::Integer;

use super::{close_from_rule, FiniteGroup, SubgroupMask};
use crate::algebra::{factorize, p_part};
use crate::{Error, Result};

fn is_power_of(mut m: u64, p: u64) -> bool {
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

impl FiniteGroup {
    /// `⟨base ∪ gens⟩` by coset enumeration. `base` must be a subgroup and
    /// `gens` must contain a generating set of `base` (or `base` trivial).
    pub fn join(&self, base: &SubgroupMask, gens: &[usize]) -> SubgroupMask {
        self.join_listed(base, &base.to_vec(), gens)
    }

    /// [`join`](Self::join) with the members of `base` already listed.
    pub fn join_listed(&self, base: &SubgroupMask, base_elems: &[usize], gens: &[usize]) -> SubgroupMask {
        let mut out = base.clone();
        let mut reps = vec![0usize];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            i += 1;
            for &s in gens {
                let t = self.mul(r, s);
                if !out.contains(t) {
                    for &h in base_elems {
                        out.insert(self.mul(h, t));
                    }
                    reps.push(t);
                }
            }
        }
        out
    }

    pub fn generated_subgroup(&self, seeds: &[usize]) -> SubgroupMask {
        self.join(&SubgroupMask::trivial(self.n), seeds)
    }

    pub fn cyclic_subgroup(&self, x: usize) -> SubgroupMask {
        let mut m = SubgroupMask::trivial(self.n);
        let mut y = x;
        while m.insert(y) {
            y = self.mul(y, x);
        }
        m
    }

    /// Greedy generating set: members of `s` in index order that are not
    /// yet in the span of the previously chosen ones.
    pub fn mask_generators(&self, s: &SubgroupMask) -> Vec<usize> {
        let mut span = SubgroupMask::trivial(self.n);
        let mut gens = Vec::new();
        for x in s.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = self.join(&span, &gens);
            }
        }
        gens
    }

    /// True iff `s` is closed under multiplication (and so a subgroup).
    pub fn is_subgroup(&self, s: &SubgroupMask) -> bool {
        s.ambient_len() == self.n && s.contains(0) && self.generated_subgroup(&self.mask_generators(s)) == *s
    }

    pub fn is_normal(&self, s: &SubgroupMask) -> bool {
        self.generators
            .iter()
            .all(|&g| s.iter().all(|x| s.contains(self.conjugate(x, g))))
    }

    pub fn normalizer(&self, s: &SubgroupMask) -> SubgroupMask {
        let gens = self.mask_generators(s);
        SubgroupMask::from_indices(
            self.n,
            self.elements()
                .filter(|&g| gens.iter().all(|&x| s.contains(self.conjugate(x, g)))),
        )
    }

    /// `g⁻¹ S g`.
    pub fn conjugate_mask(&self, s: &SubgroupMask, g: usize) -> SubgroupMask {
        SubgroupMask::from_indices(self.n, s.iter().map(|x| self.conjugate(x, g)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.element_orders().fold(1, |acc, o| acc.lcm(&o))
    }

    /// Ascending primes dividing `|G|`.
    pub fn pi(&self) -> Vec<u64> {
        factorize(self.n as u64).primes()
    }

    pub fn center(&self) -> SubgroupMask {
        SubgroupMask::from_indices(
            self.n,
            self.elements()
                .filter(|&z| self.generators.iter().all(|&g| self.mul(z, g) == self.mul(g, z))),
        )
    }

    /// Smallest subgroup containing `seeds` that is normalized by `ambient_gens`.
    pub fn normal_closure(&self, ambient_gens: &[usize], seeds: &[usize]) -> SubgroupMask {
        let mut gens: Vec<usize> = seeds.iter().copied().filter(|&x| x != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut k = self.generated_subgroup(&gens);
        loop {
            let mut grew = false;
            for &g in ambient_gens {
                for x in k.to_vec() {
                    let y = self.conjugate(x, g);
                    if !k.contains(y) {
                        gens.push(y);
                        k = self.join(&k, &gens);
                        grew = true;
                    }
                }
            }
            if !grew {
                return k;
            }
        }
    }

    /// Commutator subgroup of the subgroup `s`.
    pub fn derived_of(&self, s: &SubgroupMask) -> SubgroupMask {
        let gens = self.mask_generators(s);
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&gens, &comms)
    }

    pub fn derived_subgroup(&self) -> SubgroupMask {
        self.derived_of(&SubgroupMask::full(self.n))
    }

    /// Derived series from `G`, ending at its first repeated term.
    pub fn derived_series(&self) -> Vec<SubgroupMask> {
        let mut series = vec![SubgroupMask::full(self.n)];
        loop {
            let next = self.derived_of(series.last().unwrap());
            if next == *series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    /// A Sylow `p`-subgroup, grown from the first element of order `p` by
    /// repeatedly adjoining the first `p`-element normalizing but outside
    /// the current `p`-subgroup.
    pub fn sylow(&self, p: u64) -> Result<SubgroupMask> {
        let target = p_part(self.n as u64, p) as usize;
        if target == 1 || p < 2 {
            return Err(Error::PrimeDoesNotDivide { p, order: self.n });
        }
        let x = self
            .elements()
            .find(|&x| self.element_order(x) == p)
            .expect("Cauchy: an element of order p exists");
        let mut gens = vec![x];
        let mut sub = self.generated_subgroup(&gens);
        while sub.order() < target {
            let y = self
                .elements()
                .find(|&y| {
                    !sub.contains(y)
                        && is_power_of(self.element_order(y), p)
                        && gens.iter().all(|&g| sub.contains(self.conjugate(g, y)))
                })
                .expect("a proper p-subgroup is properly contained in its normalizer's p-part");
            gens.push(y);
            sub = self.join(&sub, &gens);
        }
        Ok(sub)
    }

    /// Number of Sylow `p`-subgroups, `[G : N_G(P)]`.
    pub fn count_sylow(&self, p: u64) -> Result<usize> {
        let s = self.sylow(p)?;
        Ok(self.n / self.normalizer(&s).order())
    }

    /// Nilpotent iff every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        self.pi()
            .into_iter()
            .all(|p| self.is_normal(&self.sylow(p).expect("p divides |G|")))
    }

    /// Nilpotency of a subgroup: for each prime, the `p`-elements of `s`
    /// number exactly `|s|_p` (i.e. the Sylow subgroup is unique).
    pub fn mask_is_nilpotent(&self, s: &SubgroupMask) -> bool {
        let order = s.order() as u64;
        factorize(order).pairs().iter().all(|&(p, e)| {
            let count = s.iter().filter(|&x| is_power_of(self.element_order(x), p)).count();
            count as u64 == p.pow(e)
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders().any(|o| o == self.n as u64)
    }

    /// Elementary abelian `p`-group; the trivial group counts (rank 0).
    pub fn is_elementary_abelian(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let f = factorize(self.n as u64);
        if !f.is_prime_power() || !self.is_abelian() {
            return false;
        }
        let p = f.pairs()[0].0;
        self.element_orders().all(|o| o == 1 || o == p)
    }

    /// Conjugacy classes in order of their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for x in self.elements() {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            let mut class = vec![x];
            let mut i = 0;
            while i < class.len() {
                let y = class[i];
                i += 1;
                for &g in &self.generators {
                    let z = self.conjugate(y, g);
                    if !seen[z] {
                        seen[z] = true;
                        class.push(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// `G/N` on left cosets, re-indexed by closure from the images of the
    /// generators of `G`.
    pub fn quotient(&self, normal: &SubgroupMask) -> Result<FiniteGroup> {
        if !self.is_subgroup(normal) {
            return Err(Error::NotClosed);
        }
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let mut coset = vec![u32::MAX; self.n];
        let mut reps = Vec::new();
        let members = normal.to_vec();
        for x in self.elements() {
            if coset[x] == u32::MAX {
                let id = reps.len() as u32;
                for &m in &members {
                    coset[self.mul(x, m)] = id;
                }
                reps.push(x);
            }
        }
        let images: Vec<u32> = self.generators.iter().map(|&g| coset[g]).collect();
        let g = self.clone();
        let closure = close_from_rule(
            0u32,
            move |&a: &u32, &b: &u32| coset[g.mul(reps[a as usize], reps[b as usize])],
            &images,
            usize::MAX,
        )?;
        Ok(closure.group)
    }

    /// Standalone copy of the subgroup `s`, with the ambient index of each
    /// new element.
    pub fn subgroup_embedding(&self, s: &SubgroupMask) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(s) {
            return Err(Error::NotClosed);
        }
        let gens = self.mask_generators(s);
        let g = self.clone();
        let closure = close_from_rule(0usize, move |&a: &usize, &b: &usize| g.mul(a, b), &gens, usize::MAX)?;
        Ok((closure.group, closure.elements))
    }

    pub fn subgroup_as_group(&self, s: &SubgroupMask) -> Result<FiniteGroup> {
        Ok(self.subgroup_embedding(s)?.0)
    }

    /// `Φ(S) = S' S^p` for a `p`-subgroup `s`.
    pub fn p_group_frattini(&self, s: &SubgroupMask, p: u64) -> SubgroupMask {
        let derived = self.derived_of(s);
        let mut seeds = self.mask_generators(&derived);
        for x in s.iter() {
            let y = self.pow(x, p);
            if y != 0 && !seeds.contains(&y) {
                seeds.push(y);
            }
        }
        self.generated_subgroup(&seeds)
    }
}
