//! Fiber-bundle complexes, balanced products of complexes with cyclic
//! actions, lifted products over F₂[Z_ℓ], and the balanced product of a
//! Tanner code with a circle together with its horizontal/vertical homology
//! split.

mod action;
mod balanced;
mod bundle;
mod circle;
mod instances;
mod lifted;

use thiserror::Error;

pub use action::CellAction;
pub use balanced::{balanced_product, balanced_tensor_dim, verify_balanced_kunneth, BalancedKunnethReport, BalancedProductComplex, OrbitBasis};
pub use bundle::{
    fiber_bundle_complex, trivial_connection, verify_bundle_kunneth, BundleConnection, BundleKunnethReport, FiberAuto,
    FiberBundleComplex,
};
pub use circle::{circle_balanced_product, CircleProduct, EquivalenceReport, HomologySplit};
pub use instances::{cyclic_cayley_instance, lps_circle_instance, toy_circle_instance};
pub use lifted::{cycle_element, group_algebra_identity, group_algebra_kron, lifted_product};

use crate::algebra::AlgebraError;
use crate::complexes::ComplexError;
use crate::f2la::F2Error;
use crate::graphs::GraphError;
use crate::tanner::TannerError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProductError {
    #[error("φ({b1}, {b0}) is not an automorphism of the fiber")]
    NotAutomorphism { b1: usize, b0: usize },
    #[error("connection missing or misplaced at incidence ({b1}, {b0})")]
    IncidenceMissing { b1: usize, b0: usize },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("group action does not commute with ∂ in degree {degree}")]
    ActionNotChainMap { degree: i32 },
    #[error("invalid action: {0}")]
    ActionInvalid(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group order {0} is even")]
    EvenOrder(usize),
    #[error("expected a 1-complex in degrees 0 and 1")]
    NotOneComplex,
    #[error("split found {horizontal} horizontal and {vertical} vertical classes out of {total}")]
    SplitIncomplete { horizontal: usize, vertical: usize, total: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    F2(#[from] F2Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tanner(#[from] TannerError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
