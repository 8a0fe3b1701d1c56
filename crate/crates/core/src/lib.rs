//! Exact computation of plethysm coefficients and ramified branching
//! coefficients, together with the partition and ramified partition diagram
//! algebras and a small Schur–Weyl verification harness.
//!
//! Everything is exact: integers are arbitrary precision and linear algebra
//! is over the rationals.

pub mod coefficients;
pub mod diagram;
pub mod error;
pub mod partition;
pub mod perm;
pub mod schur_weyl;
pub mod series;
pub mod setpart;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use diagram::{PartitionDiagram, PropIndex, RamifiedDiagram};
pub use partition::{MarkedPartition, PaddedPartition, Partition, ZeroExtendedPartition};
pub use perm::Permutation;
pub use setpart::{LineSetPartition, SetPartition};
pub use symfunc::{PowerSumPoly, SchurPoly};
