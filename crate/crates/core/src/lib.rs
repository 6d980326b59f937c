//! Combinatorics of partitions on the abacus, signed Young module labels,
//! and the classification of simple Specht modules in odd characteristic.
//!
//! The crate works entirely at the level of labels: partitions, β-sets,
//! p-adic expansions, Mullineux images, JM-partitions and the Φ map, the
//! sign-twist on signed labels, vertex/complexity invariants, Rouquier
//! chains, and the signed Young Rule multiplicity calculus. Every value is
//! immutable and every operation is a pure function.

pub mod abacus;
pub mod error;
pub mod jm;
pub mod labels;
pub mod mullineux;
pub mod padic;
pub mod partition;
pub mod prime;
pub mod specht;
pub mod tableaux;

pub use error::{Error, Result};
pub use partition::{Composition, Partition, PartitionPair};
pub use prime::OddPrime;
