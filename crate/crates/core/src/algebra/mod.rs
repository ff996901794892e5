//! Finite fields, projective linear groups and cyclic group algebras.

mod fq;
pub mod gf2m;
mod group_algebra;
mod groups;

use thiserror::Error;

pub use fq::{is_prime, legendre, pow_mod, Fq};
pub use gf2m::{Gf2m, Poly};
pub use group_algebra::{GroupAlgebraElem, GroupAlgebraMatrix};
pub use groups::{FiniteGroup, GroupKind, ProjMat2, Subgroup, PROJECTIVE_Q_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not an odd prime")]
    InvalidModulus(u64),
    #[error("q = {q} exceeds the enumeration cap {cap}")]
    CapExceeded { q: u32, cap: u32 },
    #[error("singular matrix")]
    Singular,
    #[error("operation requires PGL(2,q)")]
    NotPgl,
    #[error("group algebra orders differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("no primitive polynomial tabulated for m = {0}")]
    UnsupportedFieldDegree(u32),
    #[error("polynomial 0x{0:x} is not primitive")]
    NotPrimitive(u32),
}
