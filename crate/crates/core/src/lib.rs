//! Edge-biregular maps on surfaces, represented by a finite group with four
//! involutory generators `(r0, r2, ρ0, ρ2)`.

pub mod cli;
pub mod constructions;
pub mod ebr;
pub mod error;
pub mod enumerate;
pub mod export;
pub mod families;
pub mod flag_maps;
pub mod perm_group;
pub mod presentation;

pub use constructions::{regular_catalog, RegularMap};
pub use ebr::{are_isomorphic, BoundaryReport, DegeneracyClass, EdgeBiregularMap, MapInvariants, Slot};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use flag_maps::{ebr_to_flagmap, EdgeColour, EdgeColouring, FlagMap};
pub use perm_group::{Element, FiniteGroup, Permutation};
pub use presentation::GroupPresentation;
