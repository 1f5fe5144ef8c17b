//! Root systems, gradings of simple Lie algebras, ideals in the graded
//! pieces, minimal coset representatives and the associated hyperplane
//! arrangements.

pub mod arrangement;
pub mod bits;
pub mod error;
pub mod grading;
pub mod ideals;
pub mod poly;
pub mod report;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use bits::Mask;
pub use error::{Error, Result};
pub use grading::{Grading, GradingSpec};
pub use rootsys::{CartanType, Family, Root, RootSystem};
