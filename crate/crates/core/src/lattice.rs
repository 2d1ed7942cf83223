//! Subgroup lattice enumeration by cyclic extension.
//!
//! Every subgroup is generated by its cyclic subgroups of prime-power order,
//! so starting from the trivial subgroup and the cyclic subgroups `⟨x⟩`, and
//! repeatedly joining each known subgroup with each such cyclic subgroup it
//! does not contain, reaches every subgroup. The same joins tell which
//! subgroups are maximal: `H` is non-maximal iff some join `⟨H, Z⟩` is proper.

use std::collections::{HashMap, VecDeque};
use std::ops::ControlFlow;

use crate::group::{FiniteGroup, SubgroupMask};
use crate::{Error, Result, DEFAULT_BUDGET};

#[derive(Debug, Clone, Copy)]
pub struct LatticeOptions {
    /// Maximum number of subgroups before giving up.
    pub budget: usize,
    /// Only extend one subgroup per conjugacy class, inserting the whole
    /// class at once. Produces the same lattice.
    pub conjugacy_classes: bool,
}

impl Default for LatticeOptions {
    fn default() -> Self {
        LatticeOptions {
            budget: DEFAULT_BUDGET,
            conjugacy_classes: false,
        }
    }
}

impl LatticeOptions {
    pub fn with_budget(budget: usize) -> Self {
        LatticeOptions {
            budget,
            ..Default::default()
        }
    }
}

/// Every subgroup of a group, in canonical order (by order, then by sorted
/// member list).
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<SubgroupMask>,
    generators: Vec<Vec<usize>>,
    maximal: Vec<bool>,
    budget_used: usize,
}

impl SubgroupLattice {
    pub fn subgroups(&self) -> &[SubgroupMask] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// A generating set of the `i`-th subgroup.
    pub fn generators(&self, i: usize) -> &[usize] {
        &self.generators[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn budget_used(&self) -> usize {
        self.budget_used
    }

    /// Enumeration never returns partial lattices.
    pub fn is_complete(&self) -> bool {
        true
    }

    pub fn position(&self, s: &SubgroupMask) -> Option<usize> {
        self.subgroups
            .binary_search_by(|probe| probe.canonical_cmp(s))
            .ok()
    }
}

/// Outcome of an enumeration with a visitor.
#[derive(Debug)]
pub enum Enumeration {
    Complete(SubgroupLattice),
    /// The visitor stopped the enumeration at this subgroup.
    Stopped(SubgroupMask),
}

pub fn enumerate_subgroups(g: &FiniteGroup, budget: usize) -> Result<SubgroupLattice> {
    match enumerate_with(g, LatticeOptions::with_budget(budget), |_| ControlFlow::Continue(()))? {
        Enumeration::Complete(l) => Ok(l),
        Enumeration::Stopped(_) => unreachable!("visitor never stops"),
    }
}

struct Builder<'a, F> {
    g: &'a FiniteGroup,
    opts: LatticeOptions,
    visit: F,
    masks: Vec<SubgroupMask>,
    gens: Vec<Vec<usize>>,
    rep: Vec<usize>,
    non_maximal: Vec<bool>,
    index: HashMap<SubgroupMask, usize>,
    worklist: VecDeque<usize>,
}

impl<F: FnMut(&SubgroupMask) -> ControlFlow<()>> Builder<'_, F> {
    /// Inserts `mask` (and, in conjugacy mode, its conjugates). Returns
    /// `Ok(Break)` when the visitor stops.
    fn insert(&mut self, mask: SubgroupMask, gens: Vec<usize>) -> Result<ControlFlow<SubgroupMask>> {
        if self.index.contains_key(&mask) {
            return Ok(ControlFlow::Continue(()));
        }
        let rep = self.masks.len();
        let mut class = vec![(mask, gens)];
        let mut i = 0;
        while i < class.len() {
            let (m, gs) = class[i].clone();
            i += 1;
            if self.index.contains_key(&m) {
                continue;
            }
            if self.masks.len() >= self.opts.budget {
                return Err(Error::BudgetExceeded {
                    reached: self.masks.len() + 1,
                });
            }
            if let ControlFlow::Break(()) = (self.visit)(&m) {
                return Ok(ControlFlow::Break(m));
            }
            let idx = self.masks.len();
            self.index.insert(m.clone(), idx);
            self.masks.push(m.clone());
            self.gens.push(gs.clone());
            self.rep.push(rep);
            self.non_maximal.push(false);
            if !self.opts.conjugacy_classes {
                break;
            }
            for &t in self.g.generators() {
                let conj = self.g.conjugate_mask(&m, t);
                if !self.index.contains_key(&conj) {
                    let conj_gens = gs.iter().map(|&x| self.g.conjugate(x, t)).collect();
                    class.push((conj, conj_gens));
                }
            }
        }
        self.worklist.push_back(rep);
        Ok(ControlFlow::Continue(()))
    }
}

/// Enumerates all subgroups, calling `visit` on each as it is discovered.
pub fn enumerate_with<F>(g: &FiniteGroup, opts: LatticeOptions, visit: F) -> Result<Enumeration>
where
    F: FnMut(&SubgroupMask) -> ControlFlow<()>,
{
    let n = g.order();
    let mut b = Builder {
        g,
        opts,
        visit,
        masks: Vec::new(),
        gens: Vec::new(),
        rep: Vec::new(),
        non_maximal: Vec::new(),
        index: HashMap::new(),
        worklist: VecDeque::new(),
    };

    macro_rules! try_insert {
        ($mask:expr, $gens:expr) => {
            if let ControlFlow::Break(m) = b.insert($mask, $gens)? {
                return Ok(Enumeration::Stopped(m));
            }
        };
    }

    try_insert!(SubgroupMask::trivial(n), Vec::new());

    // Cyclic seeds; those of prime-power order are the extension set.
    let mut zuppos: Vec<usize> = Vec::new();
    let mut seen_cyclic: HashMap<SubgroupMask, ()> = HashMap::new();
    for x in 1..n {
        let c = g.cyclic_subgroup(x);
        if seen_cyclic.insert(c.clone(), ()).is_some() {
            continue;
        }
        if crate::algebra::factorize(g.element_order(x)).is_prime_power() {
            zuppos.push(x);
        }
        try_insert!(c, vec![x]);
    }

    while let Some(h) = b.worklist.pop_front() {
        let base = b.masks[h].clone();
        let base_elems = base.to_vec();
        let mut gens = b.gens[h].clone();
        gens.push(0);
        let last = gens.len() - 1;
        for &z in &zuppos {
            if base.contains(z) {
                continue;
            }
            gens[last] = z;
            let k = g.join_listed(&base, &base_elems, &gens);
            if k.is_proper() {
                b.non_maximal[h] = true;
            }
            if !b.index.contains_key(&k) {
                try_insert!(k, gens.clone());
            }
        }
    }

    let mut order: Vec<usize> = (0..b.masks.len()).collect();
    order.sort_by(|&i, &j| b.masks[i].canonical_cmp(&b.masks[j]));
    let budget_used = b.masks.len();
    let maximal = order
        .iter()
        .map(|&i| b.masks[i].is_proper() && !b.non_maximal[b.rep[i]])
        .collect();
    let generators = order.iter().map(|&i| std::mem::take(&mut b.gens[i])).collect();
    let subgroups = order.iter().map(|&i| b.masks[i].clone()).collect();
    Ok(Enumeration::Complete(SubgroupLattice {
        subgroups,
        generators,
        maximal,
        budget_used,
    }))
}

/// Proper subgroups contained in no other proper subgroup, in lattice order.
pub fn maximal_subgroups(_g: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<SubgroupMask> {
    (0..lattice.len())
        .filter(|&i| lattice.is_maximal(i))
        .map(|i| lattice.subgroups[i].clone())
        .collect()
}

/// Intersection of all maximal subgroups; trivial when there are none.
pub fn frattini(g: &FiniteGroup, lattice: &SubgroupLattice) -> SubgroupMask {
    maximal_subgroups(g, lattice)
        .into_iter()
        .reduce(|a, b| a.intersection(&b))
        .unwrap_or_else(|| SubgroupMask::trivial(g.order()))
}

/// Independent maximality check: `⟨H, x⟩ = G` for every `x ∉ H`.
pub fn verify_maximality(g: &FiniteGroup, h: &SubgroupMask) -> bool {
    if !h.is_proper() {
        return false;
    }
    let mut gens = g.mask_generators(h);
    gens.push(0);
    let last = gens.len() - 1;
    let elems = h.to_vec();
    g.elements().filter(|&x| !h.contains(x)).all(|x| {
        gens[last] = x;
        g.join_listed(h, &elems, &gens).is_full()
    })
}
