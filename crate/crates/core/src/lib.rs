//! Exact q-series engine for Capparelli-type identities.
//!
//! The crate evaluates both sides of the finite polynomial identities, the
//! truncated series identities, Bailey-lemma hierarchies, recurrences and
//! partition theorems of a family of Capparelli identities, and compares them
//! coefficient by coefficient.

pub mod bailey;
pub mod bounds;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod qcombinat;
pub mod recurrences;
pub mod series;

pub use error::{QError, Result};
pub use series::QSeries;
