//! Exact scalars (rationals and prime fields) and sparse linear algebra over them.

mod elim;
mod field;
mod sparse;

pub use elim::{homology_dims, rank, rank_kernel, solve, Solution};
pub use field::{is_prime, Field, Fp, Q};
pub use sparse::{SparseMatrix, SparseVec};

use thiserror::Error;

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F101 = Fp<101>;
pub type F65521 = Fp<65521>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("composite of consecutive differentials is nonzero")]
    NotAComplex,
}
