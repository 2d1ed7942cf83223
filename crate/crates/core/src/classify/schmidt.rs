//! Schmidt groups: non-nilpotent, every proper subgroup nilpotent.
//! Such a group is `P ⋊ Q` with `P` the normal Sylow `p`-subgroup and
//! `Q = ⟨x⟩` a cyclic Sylow `q`-subgroup.

use super::{theorem_witness, BpsiVerdict, Method, TheoremOutcome};
use crate::algebra::{factorize, multiplicative_order, p_part};
use crate::group::{FiniteGroup, SubgroupMask};
use crate::lattice::{enumerate_subgroups, SubgroupLattice};
use crate::psi::{ineq_1, ineq_2, psi_of_mask};
use crate::{Error, PsiWord, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchmidtDecomposition {
    /// The normal Sylow `p`-subgroup `P`.
    pub kernel: SubgroupMask,
    /// Generator `x` of the chosen Sylow `q`-subgroup.
    pub complement_generator: usize,
    pub p: u64,
    pub q: u64,
    /// `|P| = p^α`.
    pub alpha: u32,
    /// `|Q| = q^β`.
    pub beta: u32,
    /// Multiplicative order of `p` modulo `q`.
    pub r: u32,
    pub kernel_abelian: bool,
    /// `P` elementary abelian, or `Z(P) = P' = Φ(P)` with that subgroup
    /// elementary abelian.
    pub kernel_special: bool,
    /// Number of Sylow `q`-subgroups.
    pub n_q: usize,
}

pub fn is_schmidt(g: &FiniteGroup, budget: usize) -> Result<bool> {
    if g.is_nilpotent() || !super::schmidt_screen(g) {
        return Ok(false);
    }
    Ok(is_schmidt_in(g, &enumerate_subgroups(g, budget)?))
}

/// Schmidt test against a complete lattice: `G` non-nilpotent and every
/// maximal subgroup nilpotent.
pub fn is_schmidt_in(g: &FiniteGroup, lattice: &SubgroupLattice) -> bool {
    !g.is_nilpotent()
        && (0..lattice.len())
            .filter(|&i| lattice.is_maximal(i))
            .all(|i| g.mask_is_nilpotent(&lattice.subgroups()[i]))
}

pub fn schmidt_decompose(g: &FiniteGroup, budget: usize) -> Result<SchmidtDecomposition> {
    if !is_schmidt(g, budget)? {
        return Err(Error::NotSchmidt);
    }
    decompose_unchecked(g)
}

pub fn schmidt_decompose_in(g: &FiniteGroup, lattice: &SubgroupLattice) -> Result<SchmidtDecomposition> {
    if !is_schmidt_in(g, lattice) {
        return Err(Error::NotSchmidt);
    }
    decompose_unchecked(g)
}

fn elementary_abelian_mask(g: &FiniteGroup, s: &SubgroupMask, p: u64) -> bool {
    let gens = g.mask_generators(s);
    gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
        && s.iter().all(|x| g.element_order(x) <= p)
}

fn decompose_unchecked(g: &FiniteGroup) -> Result<SchmidtDecomposition> {
    let n = g.order() as u64;
    let f = factorize(n);
    let pi = f.primes();
    if pi.len() != 2 {
        return Err(Error::NotSchmidt);
    }
    let (p, kernel) = pi
        .iter()
        .map(|&p| (p, g.sylow(p).expect("p divides |G|")))
        .find(|(_, s)| g.is_normal(s))
        .ok_or(Error::NotSchmidt)?;
    let q = *pi.iter().find(|&&x| x != p).expect("two primes");
    let q_part = p_part(n, q);
    let x = g
        .elements()
        .find(|&x| g.element_order(x) == q_part)
        .ok_or(Error::NotSchmidt)?;
    let alpha = f.valuation(p);
    let beta = f.valuation(q);
    let r = multiplicative_order(p, q)? as u32;

    let kgens = g.mask_generators(&kernel);
    let kernel_abelian = kgens.iter().all(|&a| kgens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    let kernel_special = if kernel_abelian {
        elementary_abelian_mask(g, &kernel, p)
    } else {
        let center = SubgroupMask::from_indices(
            g.order(),
            kernel.iter().filter(|&z| kgens.iter().all(|&k| g.mul(z, k) == g.mul(k, z))),
        );
        let derived = g.derived_of(&kernel);
        let phi = g.p_group_frattini(&kernel, p);
        center == derived && derived == phi && elementary_abelian_mask(g, &center, p)
    };
    Ok(SchmidtDecomposition {
        kernel,
        complement_generator: x,
        p,
        q,
        alpha,
        beta,
        r,
        kernel_abelian,
        kernel_special,
        n_q: g.count_sylow(q)?,
    })
}

/// Schmidt classification: `β ≥ 2` or `p > q` rules B_ψ out; otherwise an
/// abelian kernel suffices, and for a non-abelian kernel the size
/// inequalities (plus the kernel ψ bound when `p = 2`) are sufficient.
/// Failing those, the outcome is `Unknown`.
pub fn thm_2_7_classify(d: &SchmidtDecomposition, g: &FiniteGroup) -> TheoremOutcome {
    let decided = |is_bpsi, method, witness| {
        TheoremOutcome::Decided(BpsiVerdict::decided(g, is_bpsi, method, witness))
    };
    if d.beta >= 2 {
        let xq = g.pow(d.complement_generator, d.q);
        let mut seeds = g.mask_generators(&d.kernel);
        seeds.push(xq);
        let h = g.join(&d.kernel, &seeds);
        let w = (h.is_proper() && psi_of_mask(g, &h) >= g.order() as u64).then_some(h);
        return decided(false, Method::Thm2_7Necessity, w);
    }
    if d.p > d.q {
        return decided(false, Method::Thm2_7Necessity, theorem_witness(g));
    }
    if d.kernel_abelian {
        return decided(true, Method::Thm2_7I, None);
    }
    if d.r > d.alpha || !d.kernel_special {
        return TheoremOutcome::Unknown;
    }
    let first = ineq_1::<PsiWord>(d.p, d.q, d.r, d.alpha);
    if d.p != 2 && first {
        return decided(true, Method::Thm2_7II, None);
    }
    if d.p == 2 && first && ineq_2::<PsiWord>(psi_of_mask(g, &d.kernel) as PsiWord, d.alpha, d.q) {
        return decided(true, Method::Thm2_7III, None);
    }
    TheoremOutcome::Unknown
}
