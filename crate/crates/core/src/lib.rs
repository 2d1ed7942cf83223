//! Finite group engine for the sum-of-element-orders invariant ψ.
//!
//! Groups are fully enumerated: every element gets an index, multiplication
//! is a table lookup (or a rule call for large groups), and element orders
//! are cached. On top of that the crate enumerates subgroup lattices and
//! decides whether `ψ(H) < |G|` holds for every proper subgroup `H`, both by
//! brute force and by the structural shortcuts known for abelian, nilpotent,
//! P-groups and Schmidt groups.
//!
//! Exact integer formulas are generic over [`ExactInt`]; [`Psi`] is the
//! arbitrary-precision default and [`PsiWord`] a fixed-width alternative.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod families;
pub mod group;
pub mod lattice;
pub mod psi;
pub mod shell;

#[cfg(test)]
mod testkit;

use std::fmt::{Debug, Display};

use num_traits::Num;

pub use error::{Error, Result};
pub use group::{FiniteGroup, SubgroupMask};

/// Exact non-negative integers usable for ψ values and inequality checks.
pub trait ExactInt: Num + Clone + Ord + Debug + Display + From<u64> {}
impl<T: Num + Clone + Ord + Debug + Display + From<u64>> ExactInt for T {}

/// Arbitrary-precision ψ values. Used wherever overflow is possible.
pub type Psi = num_bigint::BigUint;

/// Fixed-width ψ values; enough for every group the engine can enumerate.
pub type PsiWord = u128;

/// Default closure cap for group construction.
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

/// Default subgroup budget for lattice enumeration.
pub const DEFAULT_BUDGET: usize = 2_000_000;
