//! CSS and subsystem codes read off chain complexes, their distances, the
//! lifted-product distance bounds and code bundles on disk.
//!
//! Qubits sit on one degree i of a complex; H_Z^T = ∂_{i+1} and H_X = ∂_i.
//! Z-type logicals are homology classes, X-type logicals cohomology classes.

mod bounds;
mod bundle;
mod css;
mod distance;
mod subsystem;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bounds::{pk_bounds, BoundReport, BoundStats};
pub use bundle::{read_bundle, write_bundle, BundleParams, CodeBundle};
pub use css::{css_from_complex, ldpc_check, CssCode, LdpcReport};
pub use distance::{
    css_distance, dressed_distance, exact_css_distance, min_weight_logical, sample_upper, Distance, DistanceSearch, Enumeration,
    SearchOptions,
};
pub use subsystem::{subsystem_from_split, SubsystemCssCode};

use crate::complexes::ComplexError;
use crate::f2la::F2Error;
use crate::products::ProductError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PauliType {
    X,
    Z,
}

#[derive(Debug, Error)]
pub enum QuantumError {
    #[error("degree {0} outside the complex")]
    DegreeOutOfRange(i32),
    #[error("stabilizers do not commute: H_X·H_Zᵀ ≠ 0")]
    NonCommuting,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("code encodes no logical qubits")]
    NoLogicals,
    #[error("distance search exceeded its budget; every weight ≤ {exhausted_weight} was ruled out")]
    TooLarge { exhausted_weight: usize, upper: Option<usize> },
    #[error("parameter outside the domain: {0}")]
    DomainError(String),
    #[error("bundle is inconsistent: {0}")]
    BundleInvalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    F2(#[from] F2Error),
    #[error(transparent)]
    Product(#[from] ProductError),
}
