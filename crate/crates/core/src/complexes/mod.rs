//! Chain complexes, double complexes and their homology over F₂.
//!
//! Differentials lower degree by one. Cohomology is taken through
//! transposes. Tensor cells use the lexicographic basis (left factor index
//! major), and the total complex lists the blocks of Tot_n by p descending,
//! so Tot_1 of a complex supported in {0,1}² is E_{1,0} ⊕ E_{0,1}.

mod builders;
mod chain;
mod double;
mod homology;
mod kunneth;

use thiserror::Error;

pub use builders::{cycle_graph_complex, cycle_incidence, random_complex, random_matrix, random_two_by_two, torus_complex};
pub use chain::{ChainComplex, ComplexDescriptor};
pub use double::{tensor_complex, total_complex, DoubleComplex};
pub use homology::HomologyBasis;
pub use kunneth::{homology_2x2_via_pages, verify_kunneth, KunnethReport};

use crate::f2la::F2Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("∂∘∂ ≠ 0 at degree {degree}")]
    NotAComplex { degree: i32 },
    #[error("square at ({p},{q}) does not commute")]
    NonCommuting { p: i32, q: i32 },
    #[error("degree {0} outside the complex")]
    DegreeOutOfRange(i32),
    #[error("cycle graph needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("Künneth violated in degree {degree}: total {total}, expected {expected}")]
    KunnethViolation { degree: i32, total: usize, expected: usize },
    #[error("double complex is not supported on {{0,1}}²")]
    NotTwoByTwo,
    #[error(transparent)]
    F2(#[from] F2Error),
}
