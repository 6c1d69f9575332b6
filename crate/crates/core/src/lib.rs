//! Numerical semigroups with an emphasis on leap statistics and the
//! κ-sparse hierarchy.
//!
//! A [`NumericalSemigroup`] is stored by its gaps. On top of that the crate
//! provides:
//!
//! * [`leaps`]: leaps between consecutive gaps and their size profile;
//! * [`ideals`]: relative ideals, the colon `(E − F)` and three Arf tests;
//! * [`kappa`]: κ-sparse and pure κ-sparse tests and the sparseness index;
//! * [`enumerate`]: the semigroup tree, pruned walks and census tables;
//! * [`verify`]: exhaustive checks of the structural results over a census.

mod bits;
pub mod classify;
pub mod enumerate;
mod error;
pub mod ideals;
pub mod io;
pub mod kappa;
pub mod leaps;
mod semigroup;
pub mod verify;

pub use classify::{Classification, ClassificationReport};
pub use enumerate::{CensusRow, Emit, EnumerationRequest, Mode, DEFAULT_GENUS_CAP};
pub use error::{Result, SemigroupError};
pub use ideals::RelativeIdeal;
pub use kappa::SparsenessReport;
pub use leaps::{Leap, LeapProfile};
pub use semigroup::{NumericalSemigroup, DEFAULT_CONDUCTOR_CAP};
