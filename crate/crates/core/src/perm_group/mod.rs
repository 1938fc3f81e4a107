//! Finite groups realized as permutation groups on `0..degree`.

mod group;
mod permutation;

pub use group::{extend_between, Element, FiniteGroup, GroupIsomorphism, DEFAULT_ELEMENT_BOUND};
pub use permutation::Permutation;
