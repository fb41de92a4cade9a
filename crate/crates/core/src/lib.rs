//! Normal categories built from finite sets: partitions, subsets and the
//! principal right ideals of the singular transformation semigroup, with
//! the functors that identify them and exhaustive checkers for each claim.

pub mod category;
pub mod dual;
pub mod error;
pub mod green;
pub mod iso;
pub mod partition;
pub mod partition_category;
pub mod powerset;
pub mod report;
pub mod right_ideal;
pub mod subset;
pub mod suites;
pub mod transformation;

pub use error::{Error, Result};
