//! Symplectic algebra of n-qubit Pauli operators and GF(2) linear algebra over generator sets.
//!
//! Paulis are stored as packed `x`/`z` bit vectors plus an exact phase `i^k`. A stabilizer group
//! is described by a [`GeneratorSet`]; its [`CheckMatrix`] uses the `(x-block | z-block)`
//! convention.

mod distance;
pub mod gf2;
mod group;
mod string;

use thiserror::Error;

pub use distance::{distance, for_each_error, DistanceBound, DistanceReport};
pub use gf2::{BitMatrix, BitVec};
pub use group::{gf2_rank, solve_commutation, CheckMatrix, GeneratorSet, GroupBasis, Membership, StandardForm};
pub use string::{Pauli, PauliString, Phase};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error("cannot parse Pauli: {0}")]
    Parse(String),
    #[error("invalid stabilizer set: {0}")]
    InvalidStabilizer(String),
}

/// `true` iff `p` and `q` commute.
pub fn commutes(p: &PauliString, q: &PauliString) -> Result<bool, PauliError> {
    p.commutes_with(q)
}

/// Exact product `p · q`.
pub fn multiply(p: &PauliString, q: &PauliString) -> Result<PauliString, PauliError> {
    p.multiply(q)
}

/// Membership of `p` in the group generated by `g`, ignoring a ±1 sign.
pub fn in_group(p: &PauliString, g: &GeneratorSet) -> Result<bool, PauliError> {
    g.in_group(p)
}
