//! Numerical semigroups with small embedding dimension: Apéry sets,
//! pseudo-Frobenius numbers, RF-matrices, the almost symmetric classification
//! and enumeration by generator bound.

pub mod analysis;
pub mod census;
pub mod construct;
pub mod rf;
pub mod semigroup;
pub mod structure;
pub mod verify;

pub use semigroup::{GeneratorList, NumericalSemigroup, SemigroupError};
