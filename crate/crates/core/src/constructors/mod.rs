//! Posets built from higher-level descriptions.

pub mod canon;
pub mod generate;
pub mod greechie;
pub mod hsum;

pub use canon::{canonical_code, isomorphic};
pub use generate::Constraint;
pub use greechie::{GreechieDiagram, GreechieValidation};
pub use hsum::{
    horizontal_sum, horizontal_sum_with_origin, induced_subposet, HorizontalSum, Origin,
};
