//! The sum of element orders ψ(G) = Σ o(x), computed three independent
//! ways, plus the closed formulas and inequalities built on it.
//!
//! Everything here is exact. Formula functions are generic over
//! [`ExactInt`]; use [`Psi`](crate::Psi) when values may exceed 128 bits.

use std::collections::HashSet;
use std::fmt;

use num_traits::pow;

use crate::algebra::{euler_phi, factorize};
use crate::group::{FiniteGroup, SubgroupMask};
use crate::ExactInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiMethod {
    Direct,
    Classes,
    CyclicSubgroups,
    Formula,
}

impl fmt::Display for PsiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PsiMethod::Direct => "direct",
            PsiMethod::Classes => "classes",
            PsiMethod::CyclicSubgroups => "cyclic_subgroups",
            PsiMethod::Formula => "formula",
        })
    }
}

/// A ψ value tagged with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiValue<T> {
    pub value: T,
    pub method: PsiMethod,
}

fn big<T: ExactInt>(x: u64) -> T {
    T::from(x)
}

/// Sum of the cached element orders.
pub fn psi_direct<T: ExactInt>(g: &FiniteGroup) -> PsiValue<T> {
    PsiValue {
        value: big(g.element_orders().sum()),
        method: PsiMethod::Direct,
    }
}

/// `Σ |class| · o(representative)` over conjugacy classes.
pub fn psi_via_classes<T: ExactInt>(g: &FiniteGroup) -> PsiValue<T> {
    let value = g
        .conjugacy_classes()
        .iter()
        .fold(T::zero(), |acc, class| acc + big::<T>(class.len() as u64 * g.element_order(class[0])));
    PsiValue {
        value,
        method: PsiMethod::Classes,
    }
}

/// `Σ φ(|C|) · |C|` over the distinct cyclic subgroups `C`.
pub fn psi_via_cyclic_subgroups<T: ExactInt>(g: &FiniteGroup) -> PsiValue<T> {
    let mut seen: HashSet<SubgroupMask> = HashSet::new();
    let mut value = T::zero();
    for x in g.elements() {
        let c = g.cyclic_subgroup(x);
        let size = c.order() as u64;
        if seen.insert(c) {
            value = value + big::<T>(euler_phi(size) * size);
        }
    }
    PsiValue {
        value,
        method: PsiMethod::CyclicSubgroups,
    }
}

/// ψ of a subgroup of `g`, summing ambient element orders.
pub fn psi_of_mask(g: &FiniteGroup, s: &SubgroupMask) -> u64 {
    s.iter().map(|x| g.element_order(x)).sum()
}

/// `ψ(C_{p^n}) = (p^{2n+1} + 1) / (p + 1)`.
pub fn psi_cyclic_prime_power<T: ExactInt>(p: u64, n: u32) -> T {
    let p = big::<T>(p);
    (pow(p.clone(), 2 * n as usize + 1) + T::one()) / (p + T::one())
}

/// ψ(C_n), multiplicative over the prime-power parts of `n`.
pub fn psi_cyclic<T: ExactInt>(n: u64) -> T {
    factorize(n)
        .pairs()
        .iter()
        .fold(T::one(), |acc, &(p, e)| acc * psi_cyclic_prime_power::<T>(p, e))
}

/// `ψ(C_p^a) = p^{a+1} − p + 1`.
pub fn psi_elementary_abelian<T: ExactInt>(p: u64, a: u32) -> T {
    let pb = big::<T>(p);
    pow(pb.clone(), a as usize + 1) - pb + T::one()
}

/// `ψ(C_p^a) · ψ(C_q^{b−1}) > p^a q^b`, evaluated as
/// `(p^{a+1} − p + 1)(q^b − q + 1) > p^a q^b`.
pub fn lemma_2_1_iii<T: ExactInt>(p: u64, q: u64, a: u32, b: u32) -> bool {
    assert!(p != q && a >= 1 && b >= 2, "requires p != q, a >= 1, b >= 2");
    let lhs = psi_elementary_abelian::<T>(p, a) * psi_elementary_abelian::<T>(q, b - 1);
    let rhs = pow(big::<T>(p), a as usize) * pow(big::<T>(q), b as usize);
    lhs > rhs
}

/// `(p^{α−r+1} − p + 1)(q² − q + 1) < p^α q`.
pub fn ineq_1<T: ExactInt>(p: u64, q: u64, r: u32, alpha: u32) -> bool {
    assert!(r <= alpha, "requires r <= alpha");
    let lhs = psi_elementary_abelian::<T>(p, alpha - r) * psi_elementary_abelian::<T>(q, 1);
    let rhs = pow(big::<T>(p), alpha as usize) * big::<T>(q);
    lhs < rhs
}

/// `ψ(P) < 2^α q`.
pub fn ineq_2<T: ExactInt>(psi_kernel: T, alpha: u32, q: u64) -> bool {
    psi_kernel < pow(big::<T>(2), alpha as usize) * big::<T>(q)
}

/// Bounds `(2^{α+1} − 1, 1 + 2(2^{α−r} − 1) + 4(2^α − 2^{α−r}))` on ψ of a
/// special 2-group of order `2^α` with Frattini subgroup of order `2^{α−r}`.
/// The lower bound is strict, the upper one attainable.
pub fn special2_bounds<T: ExactInt>(alpha: u32, r: u32) -> (T, T) {
    assert!(1 <= r && r <= alpha, "requires 1 <= r <= alpha");
    let two = big::<T>(2);
    let lower = pow(two.clone(), alpha as usize + 1) - T::one();
    let frattini = pow(two.clone(), (alpha - r) as usize);
    let whole = pow(two.clone(), alpha as usize);
    let upper = T::one() + two * (frattini.clone() - T::one()) + big::<T>(4) * (whole - frattini);
    (lower, upper)
}

#[cfg(test)]
mod tests;
