//! Exact integer linear algebra: dense matrices over an arbitrary integer
//! scalar, Smith normal form with transforms, saturated kernel bases,
//! cokernel invariant factors, and exact signatures of symmetric matrices.
//!
//! Everything here is generic over [`Scalar`]; the rest of the crate pins
//! the scalar to arbitrary-precision integers through the aliases at the
//! crate root.

mod matrix;
mod signature;
mod snf;
mod solve;

pub use matrix::Matrix;
pub use signature::{signature_symmetric, Inertia};
pub use snf::{smith_normal_form, SmithDecomposition};
pub use solve::{cokernel_invariants, kernel_basis};

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

/// Integer scalar the exact kernels are written against.
///
/// `i64` and `i128` qualify for small experiments; `num_bigint::BigInt`
/// is what the topology layers use, since Smith-normal-form pivots grow
/// without bound.
pub trait Scalar:
    Integer + Signed + Clone + From<i64> + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + From<i64> + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// Errors from the exact linear-algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}
