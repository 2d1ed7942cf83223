//! Deciding the B_ψ property: `ψ(H) < |G|` for every proper subgroup `H`.
//!
//! [`bpsi_bruteforce`] walks the subgroup lattice. The structural deciders
//! cover abelian groups, nilpotent groups, groups with a normal Hall
//! subgroup for all but the smallest prime, P-groups and Schmidt groups;
//! [`bpsi_auto`] dispatches between them and falls back to brute force.

mod schmidt;
mod witness;

use std::fmt;
use std::ops::ControlFlow;

pub use schmidt::{is_schmidt, is_schmidt_in, schmidt_decompose, schmidt_decompose_in, thm_2_7_classify, SchmidtDecomposition};

use crate::algebra::{factorize, p_part};
use crate::group::{FiniteGroup, SubgroupMask};
use crate::lattice::{enumerate_subgroups, enumerate_with, Enumeration, LatticeOptions, SubgroupLattice};
use crate::psi::psi_of_mask;
use crate::{Error, Result};

/// Which argument decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    /// Abelian classification: `C_{p²}` or elementary abelian.
    Thm1_2,
    /// `p`-groups: `C_{p²}` or exponent `p`.
    Prop2_2,
    /// Normal Hall subgroup for all primes but the smallest.
    Prop2_4,
    /// Nilpotent classification.
    Thm2_5,
    /// P-groups: elementary abelian only.
    Cor2_6,
    /// Schmidt groups with `β ≥ 2` or `p > q`.
    Thm2_7Necessity,
    Thm2_7I,
    Thm2_7II,
    Thm2_7III,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Thm1_2 => "thm_1_2",
            Method::Prop2_2 => "prop_2_2",
            Method::Prop2_4 => "prop_2_4",
            Method::Thm2_5 => "thm_2_5",
            Method::Cor2_6 => "cor_2_6",
            Method::Thm2_7Necessity => "thm_2_7_necessity",
            Method::Thm2_7I => "thm_2_7_i",
            Method::Thm2_7II => "thm_2_7_ii",
            Method::Thm2_7III => "thm_2_7_iii",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A subgroup backing a verdict, with its order and ψ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub subgroup: SubgroupMask,
    pub order: usize,
    pub psi: u64,
}

impl Witness {
    pub fn new(g: &FiniteGroup, subgroup: SubgroupMask) -> Self {
        Witness {
            order: subgroup.order(),
            psi: psi_of_mask(g, &subgroup),
            subgroup,
        }
    }
}

/// Verdict record. For `false`, the witness (when present) is a proper
/// subgroup with `ψ ≥ |G|`; for a brute-force `true`, it is the maximal
/// subgroup of largest ψ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpsiVerdict {
    pub order: usize,
    pub is_bpsi: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl BpsiVerdict {
    fn decided(g: &FiniteGroup, is_bpsi: bool, method: Method, witness: Option<SubgroupMask>) -> Self {
        BpsiVerdict {
            order: g.order(),
            is_bpsi,
            method,
            witness: witness.map(|w| Witness::new(g, w)),
        }
    }
}

/// Result of a theorem-only decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremOutcome {
    Decided(BpsiVerdict),
    /// No applicable theorem settles the question.
    Unknown,
}

impl TheoremOutcome {
    pub fn verdict(&self) -> Option<&BpsiVerdict> {
        match self {
            TheoremOutcome::Decided(v) => Some(v),
            TheoremOutcome::Unknown => None,
        }
    }
}

pub fn bpsi_bruteforce(g: &FiniteGroup, budget: usize) -> Result<BpsiVerdict> {
    bpsi_bruteforce_with(g, LatticeOptions::with_budget(budget))
}

/// Brute force: stops at the first proper subgroup with `ψ ≥ |G|`; otherwise
/// enumerates the whole lattice and reports the maximal subgroup of largest ψ.
pub fn bpsi_bruteforce_with(g: &FiniteGroup, opts: LatticeOptions) -> Result<BpsiVerdict> {
    let n = g.order() as u64;
    let outcome = enumerate_with(g, opts, |m| {
        if m.is_proper() && psi_of_mask(g, m) >= n {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(match outcome {
        Enumeration::Stopped(m) => BpsiVerdict::decided(g, false, Method::Brute, Some(m)),
        Enumeration::Complete(l) => verdict_from_lattice(g, &l),
    })
}

/// Brute-force verdict from a complete lattice. The witness is the first
/// violating subgroup in lattice order, or the first maximal subgroup of
/// largest ψ.
pub fn verdict_from_lattice(g: &FiniteGroup, lattice: &SubgroupLattice) -> BpsiVerdict {
    let n = g.order() as u64;
    let subs = lattice.subgroups();
    if let Some(bad) = subs.iter().find(|m| m.is_proper() && psi_of_mask(g, m) >= n) {
        return BpsiVerdict::decided(g, false, Method::Brute, Some(bad.clone()));
    }
    let mut best: Option<(u64, usize)> = None;
    for i in (0..lattice.len()).filter(|&i| lattice.is_maximal(i)) {
        let psi = psi_of_mask(g, &subs[i]);
        if best.is_none_or(|(b, _)| psi > b) {
            best = Some((psi, i));
        }
    }
    BpsiVerdict::decided(g, true, Method::Brute, best.map(|(_, i)| subs[i].clone()))
}

/// Elements whose order is coprime to the smallest prime `p₁`; the normal
/// Hall `p₁'`-subgroup when it exists.
fn p1_complement_set(g: &FiniteGroup, p1: u64) -> SubgroupMask {
    SubgroupMask::from_indices(g.order(), g.elements().filter(|&x| g.element_order(x) % p1 != 0))
}

/// Fires (returns true, meaning "not B_ψ") iff `G` has a normal Hall
/// subgroup for all primes of `|G|` except the smallest.
pub fn prop_2_4_criterion(g: &FiniteGroup) -> Result<bool> {
    let pi = g.pi();
    if pi.len() < 2 {
        return Err(Error::NotApplicable(format!(
            "|pi(G)| = {} < 2",
            pi.len()
        )));
    }
    let p1 = pi[0];
    let s = p1_complement_set(g, p1);
    let hall_order = g.order() as u64 / p_part(g.order() as u64, p1);
    Ok(s.order() as u64 == hall_order && g.is_subgroup(&s))
}

fn is_cyclic_of_prime_square(g: &FiniteGroup) -> bool {
    let f = factorize(g.order() as u64);
    f.pairs().len() == 1 && f.pairs()[0].1 == 2 && g.is_cyclic()
}

/// Witness for a non-B_ψ verdict decided by a theorem, following the
/// subgroup the corresponding proof exhibits.
fn theorem_witness(g: &FiniteGroup) -> Option<SubgroupMask> {
    let w = if g.pi().len() >= 2 {
        witness::hall_witness(g)
    } else {
        witness::p_group_witness(g)
    }?;
    (psi_of_mask(g, &w) >= g.order() as u64 && w.is_proper()).then_some(w)
}

/// Abelian groups are B_ψ iff cyclic of order `p²` or elementary abelian.
pub fn thm_1_2_classify(g: &FiniteGroup) -> Result<BpsiVerdict> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let is_bpsi = is_cyclic_of_prime_square(g) || g.is_elementary_abelian();
    let witness = if is_bpsi { None } else { theorem_witness(g) };
    Ok(BpsiVerdict::decided(g, is_bpsi, Method::Thm1_2, witness))
}

/// Nilpotent groups are B_ψ iff cyclic of order `p²` or a `p`-group of
/// exponent `p`.
pub fn thm_2_5_classify(g: &FiniteGroup) -> Result<BpsiVerdict> {
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let pi = g.pi();
    let is_bpsi = g.order() == 1
        || is_cyclic_of_prime_square(g)
        || (pi.len() == 1 && g.exponent() == pi[0]);
    let method = if pi.len() <= 1 { Method::Prop2_2 } else { Method::Thm2_5 };
    let witness = if is_bpsi { None } else { theorem_witness(g) };
    Ok(BpsiVerdict::decided(g, is_bpsi, method, witness))
}

/// Whether every non-trivial subgroup of the `p`-group `G` is B_ψ, each
/// decided by brute force on a standalone copy.
pub fn cor_2_3_hereditary(g: &FiniteGroup, budget: usize) -> Result<bool> {
    if g.pi().len() > 1 {
        return Err(Error::NotApplicable("not a p-group".into()));
    }
    let lattice = enumerate_subgroups(g, budget)?;
    for s in lattice.subgroups().iter().filter(|s| s.order() > 1) {
        let h = g.subgroup_as_group(s)?;
        if !bpsi_bruteforce(&h, budget)?.is_bpsi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shape of a recognized member of the class P(n, p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PGroupShape {
    pub n: u32,
    pub p: u64,
    /// Order of the acting group; `None` for the elementary abelian member.
    pub q: Option<u64>,
    /// Power `m` by which the complement generator acts.
    pub multiplier: Option<u64>,
}

/// Structural recognition of P-groups: elementary abelian of rank ≥ 2, or
/// a normal elementary abelian Sylow `p`-subgroup of order `p^{n−1}`
/// complemented by a group of prime order `q ≠ p` acting as a non-trivial
/// power automorphism.
pub fn recognize_p_group(g: &FiniteGroup) -> Option<PGroupShape> {
    let f = factorize(g.order() as u64);
    if g.is_elementary_abelian() {
        let &(p, k) = f.pairs().first()?;
        return (k >= 2).then_some(PGroupShape {
            n: k,
            p,
            q: None,
            multiplier: None,
        });
    }
    if f.pairs().len() != 2 {
        return None;
    }
    for (i, &(q, e)) in f.pairs().iter().enumerate() {
        if e != 1 {
            continue;
        }
        let (p, k) = f.pairs()[1 - i];
        let kernel = g.sylow(p).ok()?;
        if !g.is_normal(&kernel) {
            continue;
        }
        let gens = g.mask_generators(&kernel);
        let abelian = gens
            .iter()
            .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
        if !abelian || kernel.iter().any(|h| g.element_order(h) > p) {
            continue;
        }
        let x = g.elements().find(|&x| g.element_order(x) == q)?;
        let h0 = gens[0];
        let image = g.conjugate(h0, x);
        let Some(m) = (0..p).find(|&m| g.pow(h0, m) == image) else {
            continue;
        };
        if m == 1 || !kernel.iter().all(|h| g.conjugate(h, x) == g.pow(h, m)) {
            continue;
        }
        return Some(PGroupShape {
            n: k + 1,
            p,
            q: Some(q),
            multiplier: Some(m),
        });
    }
    None
}

/// P-groups are B_ψ iff elementary abelian.
pub fn cor_2_6_classify(g: &FiniteGroup) -> Result<BpsiVerdict> {
    let shape = recognize_p_group(g).ok_or(Error::NotPGroup)?;
    let is_bpsi = shape.q.is_none();
    let witness = if is_bpsi { None } else { theorem_witness(g) };
    Ok(BpsiVerdict::decided(g, is_bpsi, Method::Cor2_6, witness))
}

/// Cheap necessary conditions for a Schmidt group: two primes, one Sylow
/// subgroup normal, the other cyclic.
fn schmidt_screen(g: &FiniteGroup) -> bool {
    let pi = g.pi();
    if pi.len() != 2 {
        return false;
    }
    let sylows: Vec<SubgroupMask> = pi.iter().map(|&p| g.sylow(p).expect("p divides |G|")).collect();
    (0..2).any(|i| {
        let cyclic_other = sylows[1 - i]
            .iter()
            .any(|x| g.element_order(x) as usize == sylows[1 - i].order());
        g.is_normal(&sylows[i]) && cyclic_other
    })
}

fn theorem_dispatch(g: &FiniteGroup, budget: usize) -> Result<(TheoremOutcome, Option<SubgroupLattice>)> {
    if g.is_abelian() {
        return Ok((TheoremOutcome::Decided(thm_1_2_classify(g)?), None));
    }
    if g.is_nilpotent() {
        return Ok((TheoremOutcome::Decided(thm_2_5_classify(g)?), None));
    }
    if prop_2_4_criterion(g)? {
        let v = BpsiVerdict::decided(g, false, Method::Prop2_4, theorem_witness(g));
        return Ok((TheoremOutcome::Decided(v), None));
    }
    if recognize_p_group(g).is_some() {
        return Ok((TheoremOutcome::Decided(cor_2_6_classify(g)?), None));
    }
    if schmidt_screen(g) {
        let lattice = enumerate_subgroups(g, budget)?;
        if is_schmidt_in(g, &lattice) {
            let d = schmidt_decompose_in(g, &lattice)?;
            return Ok((thm_2_7_classify(&d, g), Some(lattice)));
        }
        return Ok((TheoremOutcome::Unknown, Some(lattice)));
    }
    Ok((TheoremOutcome::Unknown, None))
}

/// Theorem paths only; `Unknown` when none applies or a sufficient
/// condition fails.
pub fn bpsi_theorem(g: &FiniteGroup, budget: usize) -> Result<TheoremOutcome> {
    Ok(theorem_dispatch(g, budget)?.0)
}

/// Dispatch: abelian, nilpotent, normal Hall criterion, P-group, Schmidt,
/// then brute force.
pub fn bpsi_auto(g: &FiniteGroup, budget: usize) -> Result<BpsiVerdict> {
    match theorem_dispatch(g, budget)? {
        (TheoremOutcome::Decided(v), _) => Ok(v),
        (TheoremOutcome::Unknown, Some(lattice)) => Ok(verdict_from_lattice(g, &lattice)),
        (TheoremOutcome::Unknown, None) => bpsi_bruteforce(g, budget),
    }
}

/// Re-checks a witness from scratch: closed, proper, `ψ ≥ |G|` for false
/// verdicts; closed, maximal, `ψ < |G|` for brute-force true verdicts.
pub fn witness_is_valid(g: &FiniteGroup, v: &BpsiVerdict) -> bool {
    let Some(w) = &v.witness else {
        return true;
    };
    let psi = psi_of_mask(g, &w.subgroup);
    let closed = g.is_subgroup(&w.subgroup);
    if psi != w.psi || w.order != w.subgroup.order() || !closed {
        return false;
    }
    if v.is_bpsi {
        psi < g.order() as u64 && crate::lattice::verify_maximality(g, &w.subgroup)
    } else {
        psi >= g.order() as u64 && w.subgroup.is_proper()
    }
}
