use serde::{Deserialize, Serialize};

use super::QuantumError;
use crate::products::CircleProduct;

/// Sizes of the instance the bounds are evaluated on.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundStats {
    /// Degree s of X.
    pub s: usize,
    pub ell: usize,
    /// |X¹| and |X⁰| of the cover X.
    pub edges: usize,
    pub vertices: usize,
    pub k_local: usize,
    /// Rows of the local check matrix; δ has |X⁰|·r columns.
    pub checks_per_vertex: usize,
}

/// Lower bounds on [[N, K, D_X, D_Z]] of the horizontal subsystem code, from
/// (α_ho, β_ho)-expansion of ∂ and (α_co, β_co)-expansion of δ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub alpha_ho: f64,
    pub beta_ho: f64,
    pub alpha_co: f64,
    pub beta_co: f64,
    pub stats: BoundStats,
    /// |X¹| + s|X⁰| = 3|X¹|, counting s checks per vertex.
    pub n_unreduced: usize,
    /// (2k_L/s − 1)|X¹|/ℓ.
    pub k_lower: f64,
    /// |X¹| min{α_ho/2, α_ho β_ho/4}.
    pub dz_lower: f64,
    /// ℓ min{α_ho/(4s), α_ho β_ho/(4s)}: classes with no horizontal part.
    pub dz_vertical: f64,
    /// min{α_co|X¹|, α_co|X¹|/2, ℓα_co/(4s), ℓα_co β_co/(4s)} as printed.
    pub dx_lower_printed: f64,
    /// min of the two cohomological cases, with the first scaled by the
    /// number of columns of δ: |X⁰|r min{α_co/2, α_co β_co/4} and
    /// ℓ min{α_co/(4s), α_co β_co/(4s)}.
    pub dx_lower: f64,
}

impl BoundStats {
    pub fn of(cp: &CircleProduct) -> Self {
        let t = cp.tanner();
        let x = t.graph();
        Self {
            s: x.degree(),
            ell: cp.ell(),
            edges: x.num_edges(),
            vertices: x.num_vertices(),
            k_local: t.local().k(),
            checks_per_vertex: t.checks_per_vertex(),
        }
    }
}

fn nonneg(name: &str, x: f64) -> Result<(), QuantumError> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(QuantumError::DomainError(format!("{name} = {x} must be a nonnegative number")))
    }
}

pub fn pk_bounds(stats: BoundStats, alpha_ho: f64, beta_ho: f64, alpha_co: f64, beta_co: f64) -> Result<BoundReport, QuantumError> {
    for (name, x) in [("α_ho", alpha_ho), ("β_ho", beta_ho), ("α_co", alpha_co), ("β_co", beta_co)] {
        nonneg(name, x)?;
    }
    if stats.s == 0 || stats.ell == 0 || stats.edges == 0 || stats.vertices == 0 {
        return Err(QuantumError::DomainError(format!("s, ℓ, |X¹|, |X⁰| must be positive: {stats:?}")));
    }
    let s = stats.s as f64;
    let ell = stats.ell as f64;
    let x1 = stats.edges as f64;
    let x0 = stats.vertices as f64;
    let case2 = |a: f64, b: f64| ell * (a / (4.0 * s)).min(a * b / (4.0 * s));
    let dx_case1 = x0 * stats.checks_per_vertex as f64 * (alpha_co / 2.0).min(alpha_co * beta_co / 4.0);
    let dx_printed = [alpha_co * x1, alpha_co * x1 / 2.0, ell * alpha_co / (4.0 * s), ell * alpha_co * beta_co / (4.0 * s)]
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    Ok(BoundReport {
        alpha_ho,
        beta_ho,
        alpha_co,
        beta_co,
        stats,
        n_unreduced: stats.edges + stats.s * stats.vertices,
        k_lower: (2.0 * stats.k_local as f64 / s - 1.0) * x1 / ell,
        dz_lower: x1 * (alpha_ho / 2.0).min(alpha_ho * beta_ho / 4.0),
        dz_vertical: case2(alpha_ho, beta_ho),
        dx_lower_printed: dx_printed,
        dx_lower: dx_case1.min(case2(alpha_co, beta_co)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stats() -> BoundStats {
        BoundStats { s: 6, ell: 13, edges: 6552, vertices: 2184, k_local: 4, checks_per_vertex: 2 }
    }

    #[test]
    fn zero_expansion_gives_zero() {
        let r = pk_bounds(stats(), 0.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!((r.dz_lower, r.dx_lower, r.dx_lower_printed), (0.0, 0.0, 0.0));
        assert_eq!(r.n_unreduced, 3 * 6552);
    }

    #[test]
    fn large_beta_selects_alpha_half() {
        let r = pk_bounds(stats(), 0.01, 2.5, 0.01, 2.5).unwrap();
        assert!((r.dz_lower - 6552.0 * 0.005).abs() < 1e-9);
        assert!((r.dx_lower - (4368.0 * 0.005f64).min(13.0 * 0.01 / 24.0)).abs() < 1e-12);
        let r = pk_bounds(stats(), 0.01, 1.0, 0.01, 1.0).unwrap();
        assert!((r.dz_lower - 6552.0 * 0.0025).abs() < 1e-9);
    }

    #[test]
    fn printed_dx_first_term_never_binds() {
        for (a, b) in [(0.01, 0.1), (0.2, 3.0), (1e-5, 0.5)] {
            let r = pk_bounds(stats(), a, b, a, b).unwrap();
            let without_first = [a * 6552.0 / 2.0, 13.0 * a / 24.0, 13.0 * a * b / 24.0].into_iter().fold(f64::INFINITY, f64::min);
            assert_eq!(r.dx_lower_printed, without_first);
            assert!(r.dx_lower <= 13.0 * a / 24.0 + 1e-12);
        }
    }

    #[test]
    fn rate_bound() {
        let r = pk_bounds(stats(), 0.0, 0.0, 0.0, 0.0).unwrap();
        assert!((r.k_lower - (8.0 / 6.0 - 1.0) * 6552.0 / 13.0).abs() < 1e-9);
    }

    #[test]
    fn domain_errors() {
        assert!(pk_bounds(stats(), -0.1, 0.0, 0.0, 0.0).is_err());
        assert!(pk_bounds(stats(), f64::NAN, 0.0, 0.0, 0.0).is_err());
        assert!(pk_bounds(BoundStats { ell: 0, ..stats() }, 0.0, 0.0, 0.0, 0.0).is_err());
    }
}
