//! Normalized Hochschild chains `A ⊗ T(sĀ)` of a graded open Frobenius algebra `A`,
//! with the chain-level coproduct, products, brackets and their homotopies.
//!
//! Everything is exact and generic over [`exactlinalg::Field`]. Identities are checked
//! word by word on a finite window of the complex; see [`checks`].

pub mod bv;
pub mod checks;
pub mod cochain;
mod comb;
pub mod fixtures;
pub mod frobenius;
pub mod hochschild;
pub mod relative;
pub mod report;
pub mod schema;
pub mod sign;

pub use comb::LinComb;
pub use frobenius::{derive_open_from_closed, AlgebraData, ClosedData, FrobeniusAlgebra, Level, ValidationReport};
pub use hochschild::{Chain, Complex, Tensor, Truncation, Word};
pub use report::{IdentityReport, Status as CheckStatus};

use thiserror::Error;

pub type QAlgebra = FrobeniusAlgebra<exactlinalg::Q>;
pub type QChain = Chain<exactlinalg::Q>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed algebra: {0}")]
    Structure(String),
    #[error("{table}: index {index} out of range")]
    Index { table: String, index: usize },
    #[error("{table}: entry {entry} has the wrong degree")]
    Degree { table: String, entry: String },
    #[error("degenerate pairing: {0}")]
    DegeneratePairing(String),
    #[error("pairing not invariant at {0:?}")]
    PairingNotInvariant(Vec<String>),
    #[error("pairing not graded symmetric at {0:?}")]
    PairingNotSymmetric(Vec<String>),
    #[error("pairing not compatible with the differential at {0:?}")]
    PairingDifferential(Vec<String>),
    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("truncation overflow: {word} is outside the window (max length {max_length})")]
    TruncationOverflow { word: String, max_length: usize },
    #[error("algebra is not graded commutative: {0:?}")]
    NotCommutative(Vec<String>),
    #[error("algebra has no pairing")]
    NoPairing,
    #[error("expected {expected} inputs, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("unknown operation {0:?}")]
    UnknownOperation(String),
}
