//! Linear algebra over the two-element field.

mod bitvec;
pub mod io;
mod matrix;
mod subspace;

use thiserror::Error;

pub use bitvec::BitVec;
pub use matrix::F2Matrix;
pub use subspace::{image, kernel_basis, quotient_dim, solve, EchelonBasis, F2Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F2Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("subspace is not contained in the ambient subspace")]
    ContainmentError,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Rank of `m` over F₂.
pub fn rank(m: &F2Matrix) -> usize {
    m.rank()
}
