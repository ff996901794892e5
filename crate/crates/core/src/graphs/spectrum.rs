use nalgebra::{DMatrix, DVector};

use super::{GraphError, LabeledGraph};
use crate::par;

/// Graphs up to this many vertices use the dense symmetric eigensolver;
/// larger ones use Lanczos.
pub const DENSE_EIGEN_MAX: usize = 4000;

const LANCZOS_MAX_STEPS: usize = 400;
const LANCZOS_RESIDUAL_TOL: f64 = 1e-9;

fn adjacency(x: &LabeledGraph) -> DMatrix<f64> {
    let n = x.num_vertices();
    let mut a = DMatrix::zeros(n, n);
    for e in 0..x.num_edges() {
        let [u, v] = x.endpoints(e);
        a[(u, v)] += 1.0;
        a[(v, u)] += 1.0;
    }
    a
}

/// All adjacency eigenvalues, descending (dense solver).
pub fn adjacency_spectrum(x: &LabeledGraph) -> Vec<f64> {
    let mut ev: Vec<f64> = adjacency(x).symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Second largest adjacency eigenvalue λ₂ of a connected regular graph.
pub fn second_eigenvalue(x: &LabeledGraph) -> Result<f64, GraphError> {
    if x.num_vertices() < 2 {
        return Err(GraphError::Invalid("λ₂ needs at least two vertices".into()));
    }
    if !x.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if x.num_vertices() <= DENSE_EIGEN_MAX {
        Ok(adjacency_spectrum(x)[1])
    } else {
        Ok(lanczos_second(x))
    }
}

fn apply(x: &LabeledGraph, v: &DVector<f64>) -> DVector<f64> {
    let out = par::map_range(0..x.num_vertices(), |u| x.neighbors(u).map(|w| v[w]).sum::<f64>());
    DVector::from_vec(out)
}

/// Largest eigenvalue of A on the orthogonal complement of the all-ones
/// vector: Lanczos with full reorthogonalization and a deterministic start.
pub(crate) fn lanczos_second(x: &LabeledGraph) -> f64 {
    let n = x.num_vertices();
    let ones = DVector::from_element(n, 1.0 / (n as f64).sqrt());
    let deflate = |v: &mut DVector<f64>| {
        let c = v.dot(&ones);
        v.axpy(-c, &ones, 1.0);
    };
    let mut q = DVector::from_fn(n, |i, _| ((i as f64 + 1.0) * 0.618_033_988_75).fract() - 0.5);
    deflate(&mut q);
    q /= q.norm();
    let mut basis: Vec<DVector<f64>> = vec![q];
    let (mut alpha, mut beta) = (Vec::new(), Vec::new());
    let mut best = f64::NEG_INFINITY;
    for step in 0..LANCZOS_MAX_STEPS.min(n - 1) {
        let qk = &basis[step];
        let mut w = apply(x, qk);
        deflate(&mut w);
        let a = w.dot(qk);
        alpha.push(a);
        for _ in 0..2 {
            for b in &basis {
                let c = w.dot(b);
                w.axpy(-c, b, 1.0);
            }
        }
        let bnorm = w.norm();
        let m = alpha.len();
        let last = bnorm < 1e-12 || step + 1 == LANCZOS_MAX_STEPS.min(n - 1);
        if m % 10 != 0 && !last {
            beta.push(bnorm);
            basis.push(w / bnorm);
            continue;
        }
        let t = DMatrix::from_fn(m, m, |i, j| {
            if i == j {
                alpha[i]
            } else if i + 1 == j || j + 1 == i {
                beta[i.min(j)]
            } else {
                0.0
            }
        });
        let eig = t.symmetric_eigen();
        let (top, idx) = eig
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i))
            .fold((f64::NEG_INFINITY, 0), |acc, p| if p.0 > acc.0 { p } else { acc });
        best = top;
        let residual = bnorm * eig.eigenvectors[(m - 1, idx)].abs();
        if residual < LANCZOS_RESIDUAL_TOL || last {
            break;
        }
        beta.push(bnorm);
        basis.push(w / bnorm);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::super::{complete_graph, cycle_graph, lps_graph, petersen_graph};
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn known_spectra() {
        for n in 3..8 {
            assert!((second_eigenvalue(&complete_graph(n)).unwrap() + 1.0).abs() < 1e-9);
        }
        for ell in 3..12 {
            let l2 = second_eigenvalue(&cycle_graph(ell).unwrap()).unwrap();
            assert!((l2 - 2.0 * (2.0 * PI / ell as f64).cos()).abs() < 1e-9, "ℓ = {ell}");
        }
        assert!((second_eigenvalue(&petersen_graph()).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn lanczos_matches_dense() {
        for g in [petersen_graph(), cycle_graph(31).unwrap(), lps_graph(5, 7).unwrap().graph] {
            let dense = adjacency_spectrum(&g)[1];
            assert!((lanczos_second(&g) - dense).abs() < 1e-6, "{dense}");
        }
    }

    #[test]
    fn disconnected_rejected() {
        let two = LabeledGraph::from_edges_in_order(6, 2, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(second_eigenvalue(&two), Err(GraphError::Disconnected));
    }
}
