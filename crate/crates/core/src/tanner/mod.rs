//! Tanner codes C(X, L, Λ): edges of a labeled s-regular graph carry bits,
//! and each vertex imposes the checks of a length-s local code L on its
//! edges, read in label order.
//!
//! The degree-0 space is C_0(X) ⊗ F₂^{s−k_L}: each vertex gets the
//! s − k_L independent rows of the local check matrix, so row v·(s−k_L) + j
//! of ∂ is check j at vertex v.

mod labeling;
mod theorems;

use serde::Serialize;
use thiserror::Error;

pub use labeling::{search_labeling, LabelingSearch};
pub use theorems::{
    check_expansion_theorem7, check_expansion_theorem8, measured_beta, tabulate_theorem7, theorem7_beta, theorem8_beta,
    TheoremReport,
};

use crate::classical::{dual_code, exact_distance, ClassicalError, LinearCode};
use crate::complexes::ChainComplex;
use crate::f2la::{BitVec, F2Matrix};
use crate::graphs::{second_eigenvalue, GraphError, LabeledGraph};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TannerError {
    #[error("graph degree {degree} differs from local block length {length}")]
    DegreeMismatch { degree: usize, length: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Classical(#[from] ClassicalError),
}

#[derive(Clone, Debug)]
pub struct TannerComplex {
    graph: LabeledGraph,
    local: LinearCode,
    local_check: F2Matrix,
    complex: ChainComplex,
    labeling: String,
}

/// ∂e = v ⊗ H_L·e_{Λ_v(e)} + w ⊗ H_L·e_{Λ_w(e)} with reduced local checks.
pub fn build_tanner(x: &LabeledGraph, local: &LinearCode) -> Result<TannerComplex, TannerError> {
    build_tanner_labeled(x, local, "graph labels")
}

/// As [`build_tanner`], recording where the labeling came from.
pub fn build_tanner_labeled(x: &LabeledGraph, local: &LinearCode, labeling: &str) -> Result<TannerComplex, TannerError> {
    if x.degree() != local.n() {
        return Err(TannerError::DegreeMismatch { degree: x.degree(), length: local.n() });
    }
    let h = local.reduced_check();
    let r = h.rows();
    let mut d = F2Matrix::zeros(x.num_vertices() * r, x.num_edges());
    for e in 0..x.num_edges() {
        for v in x.endpoints(e) {
            let lab = x.label_at(e, v);
            for j in 0..r {
                if h.get(j, lab) {
                    d.toggle(v * r + j, e);
                }
            }
        }
    }
    Ok(TannerComplex {
        graph: x.clone(),
        local: local.clone(),
        local_check: h,
        complex: ChainComplex::one_complex(d),
        labeling: labeling.to_string(),
    })
}

impl TannerComplex {
    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn local(&self) -> &LinearCode {
        &self.local
    }

    /// Reduced local parity check, (s − k_L) × s.
    pub fn local_check(&self) -> &F2Matrix {
        &self.local_check
    }

    /// Checks per vertex, s − k_L.
    pub fn checks_per_vertex(&self) -> usize {
        self.local_check.rows()
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn labeling(&self) -> &str {
        &self.labeling
    }

    /// The differential C_1 → C_0 ⊗ L_0.
    pub fn boundary(&self) -> F2Matrix {
        self.complex.diff(1)
    }

    /// The Tanner code ker ∂.
    pub fn code(&self) -> LinearCode {
        LinearCode::from_check(self.boundary())
    }

    /// Bits of `x` on the edges at `v`, ordered by Λ_v.
    pub fn local_view(&self, x: &BitVec, v: usize) -> BitVec {
        BitVec::from_bits(&self.graph.incident(v).iter().map(|&e| x.get(e) as u8).collect::<Vec<_>>())
    }

    /// (2k_L/s − 1)|X¹|.
    pub fn rate_bound(&self) -> f64 {
        (2.0 * self.local.k() as f64 / self.graph.degree() as f64 - 1.0) * self.graph.num_edges() as f64
    }

    pub fn report(&self, with_distance: bool) -> Result<TannerReport, TannerError> {
        let lambda2 = second_eigenvalue(&self.graph)?;
        let code = self.code();
        let d_l = exact_distance(&self.local)?;
        let d_dual = exact_distance(&dual_code(&self.local))?;
        let d = if with_distance { exact_distance(&code)? } else { None };
        Ok(TannerReport {
            n: code.n(),
            k: code.k(),
            d,
            vertices: self.graph.num_vertices(),
            degree: self.graph.degree(),
            lambda2,
            local_k: self.local.k(),
            local_d: d_l,
            local_dual_d: d_dual,
            rate_bound: self.rate_bound(),
            sipser_spielman_bound: d_l.map(|dl| sipser_spielman_bound(self.graph.degree(), lambda2, dl, self.graph.num_edges())),
            labeling: self.labeling.clone(),
        })
    }
}

/// (d_L − λ₂) d_L / ((s − λ₂) s) · |X¹|; not clamped.
pub fn sipser_spielman_bound(s: usize, lambda2: f64, d_local: usize, edges: usize) -> f64 {
    let (s, d) = (s as f64, d_local as f64);
    (d - lambda2) * d / ((s - lambda2) * s) * edges as f64
}

#[derive(Clone, Debug, Serialize)]
pub struct TannerReport {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub vertices: usize,
    pub degree: usize,
    pub lambda2: f64,
    pub local_k: usize,
    pub local_d: Option<usize>,
    pub local_dual_d: Option<usize>,
    pub rate_bound: f64,
    pub sipser_spielman_bound: Option<f64>,
    pub labeling: String,
}
