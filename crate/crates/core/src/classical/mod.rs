//! Classical binary linear codes used as local codes: Hamming, BCH and Goppa
//! codes, random codes with good dual distance, exact distances.

mod code;
mod distance;
mod goppa;
mod gv;
mod recipe;

use thiserror::Error;

pub use code::{binary_entropy, dual_code, full_space, hamming_7_4, repetition_code, LinearCode};
pub use distance::{exact_distance, min_dependent_columns, min_weight_in_span, DISTANCE_OP_CAP};
pub use goppa::{bch_code, goppa_code, moreno_moreno_bound, non_roots};
pub use gv::{gv_plus_search, GvParams, GvResult, GvTrial};
pub use recipe::CodeRecipe;

use crate::algebra::AlgebraError;
use crate::f2la::F2Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("enumeration needs {work} steps, over the cap {cap}")]
    TooLarge { work: u64, cap: u64 },
    #[error("locator {0} is a root of the Goppa polynomial")]
    LocatorRoot(u16),
    #[error("locator {0} listed twice")]
    DuplicateLocator(u16),
    #[error("no supported F_2^m has a primitive root of unity of order {0}")]
    IncompatibleLength(usize),
    #[error("no acceptable code in {trials} trials")]
    SearchExhausted { trials: usize },
    #[error("parameter outside the domain: {0}")]
    DomainError(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    F2(#[from] F2Error),
}
