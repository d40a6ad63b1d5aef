//! Finite bounded posets with antitone involution: cones, Dedekind-MacNeille
//! completions, orthomodularity and residuation checks.

#![allow(clippy::needless_range_loop)]

pub mod bitset;
pub mod checks;
pub mod closure;
pub mod constructors;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod format;
pub mod lattice;
pub mod poset;
pub mod report;
pub mod residuation;
pub mod suite;

pub use bitset::ElementSet;
pub use closure::{closure, complete, complete_with_cap, DmLattice, DEFAULT_MAX_CLOSED_SETS};
pub use error::{Error, Result};
pub use lattice::FiniteLattice;
pub use poset::{FinitePoset, RelationMode};
pub use report::{CheckReport, RunReport};
pub use residuation::{OperatorKind, OperatorPair, ResiduatedOps};
