//! Constructed witnesses for theorem-path `false` verdicts.

use crate::group::{FiniteGroup, SubgroupMask};

/// A subgroup of index `p` in the `p`-subgroup `s`, containing `keep` when
/// `keep ∉ Φ(s)` and `s` is not cyclic. Built from a basis of `s` modulo
/// `Φ(s)` with the last basis element dropped.
pub(super) fn index_p_subgroup(g: &FiniteGroup, s: &SubgroupMask, p: u64, keep: Option<usize>) -> SubgroupMask {
    let phi = g.p_group_frattini(s, p);
    let phi_gens = g.mask_generators(&phi);
    let mut basis: Vec<usize> = Vec::new();
    let mut span = phi.clone();
    let candidates = keep.into_iter().chain(s.iter());
    for x in candidates {
        if !span.contains(x) {
            basis.push(x);
            let seeds: Vec<usize> = phi_gens.iter().chain(&basis).copied().collect();
            span = g.join(&phi, &seeds);
        }
    }
    basis.pop();
    let seeds: Vec<usize> = phi_gens.iter().chain(&basis).copied().collect();
    g.join(&phi, &seeds)
}

/// `H K` where `H` is the normal Hall `p₁'`-subgroup and `K` has index `p₁`
/// in a Sylow `p₁`-subgroup: a subgroup of index `p₁`.
pub(super) fn hall_witness(g: &FiniteGroup) -> Option<SubgroupMask> {
    let p1 = *g.pi().first()?;
    let hall = SubgroupMask::from_indices(g.order(), g.elements().filter(|&x| g.element_order(x) % p1 != 0));
    if !g.is_subgroup(&hall) {
        return None;
    }
    let sylow = g.sylow(p1).ok()?;
    let k = index_p_subgroup(g, &sylow, p1, None);
    let mut seeds = g.mask_generators(&hall);
    seeds.extend(g.mask_generators(&k));
    Some(g.join(&hall, &seeds))
}

/// For a `p`-group: a maximal subgroup containing an element of maximal
/// order.
pub(super) fn p_group_witness(g: &FiniteGroup) -> Option<SubgroupMask> {
    let p = *g.pi().first()?;
    let top = g.elements().max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))?;
    Some(index_p_subgroup(g, &SubgroupMask::full(g.order()), p, Some(top)))
}
