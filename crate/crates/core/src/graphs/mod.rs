//! Regular labeled graphs: Cayley and LPS graphs, free cyclic actions and
//! their quotients with connections, coset graphs, spectra and the expansion
//! lemmas.
//!
//! Every graph carries a per-vertex labeling Λ_v of its incident edges by
//! [0, s). Edges carry a fixed orientation; quotients orient each base edge
//! from the lower to the higher orbit index and lift that orientation.

mod cayley;
mod coset;
mod expansion;
mod labeled;
mod quotient;
mod spectrum;

use thiserror::Error;

pub use cayley::{cayley_graph, lps_graph, lps_generators, lps_root_of_minus_one, lps_quadruples, LpsGraph};
pub use coset::{coset_graph, klein_quartic_generators, klein_quartic_graph};
pub use expansion::{
    alon_chung_alpha, brute_force_expansion_check, lemma1_bound, lemma2_beta, lemma3_beta, ExpansionLemma, ExpansionReport,
};
pub use labeled::{complete_graph, cycle_graph, petersen_graph, LabeledGraph};
pub use quotient::{check_quotient_condition, quotient_graph, reconstruct_cover, Connection, GroupAction, Quotient, QuotientCheck};
pub use spectrum::{adjacency_spectrum, second_eigenvalue, DENSE_EIGEN_MAX};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("generating set is not closed under inverses")]
    NotSymmetric,
    #[error("p = {p}, q = {q} are not distinct odd primes with q > 2√p")]
    InvalidPrimes { p: u64, q: u64 },
    #[error("expected {expected} generators, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("generator {0:?} is an involution")]
    InvolutiveGenerator([u32; 4]),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("action is not free: {0}")]
    NotFree(String),
    #[error("labeling is not invariant under the action: {0}")]
    NotInvariant(String),
    #[error("quotient condition violated: edge joins {v} and its translate by h^{k}")]
    QuotientConditionViolated { v: usize, k: usize },
    #[error("coset incidence is degenerate: {0}")]
    IncidenceDegenerate(String),
    #[error("parameter outside the domain: {0}")]
    DomainError(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
