use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::TannerComplex;
use crate::classical::{dual_code, exact_distance};
use crate::f2la::{BitVec, F2Matrix};
use crate::graphs::{lemma2_beta, second_eigenvalue, GraphError};
use crate::par;

const THEOREM_TOL: f64 = 1e-9;

/// (β′, β″, β′β″) for chains of weight ≤ α|X¹|.
pub fn theorem7_beta(s: usize, lambda2: f64, d_local: usize, alpha: f64) -> Result<(f64, f64, f64), GraphError> {
    let sf = s as f64;
    let b1 = lemma2_beta(sf, lambda2, alpha)?;
    let dl = d_local as f64;
    let b2 = ((dl - lambda2) - 4.0 * alpha / sf * (sf - lambda2)) / dl;
    Ok((b1, b2, b1 * b2))
}

/// β for cochains of weight ≤ α|X⁰|(s − k_L).
pub fn theorem8_beta(s: usize, lambda2: f64, k_local: usize, d_dual: usize, alpha: f64) -> Result<f64, GraphError> {
    if alpha <= 0.0 || k_local >= s || d_dual == 0 {
        return Err(GraphError::DomainError(format!("α = {alpha}, k_L = {k_local}, d⊥ = {d_dual}")));
    }
    let (sf, r, dd) = (s as f64, (s - k_local) as f64, d_dual as f64);
    Ok(((dd - lambda2) - alpha * r * (sf - lambda2)) / (r * dd))
}

/// Theorem-7 β along `alphas` (ascending); errors if β ever increases.
pub fn tabulate_theorem7(s: usize, lambda2: f64, d_local: usize, alphas: &[f64]) -> Result<Vec<(f64, f64)>, GraphError> {
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(alphas.len());
    for &a in alphas {
        let (_, _, b) = theorem7_beta(s, lambda2, d_local, a)?;
        if let Some(&(pa, pb)) = out.last() {
            if a < pa || b > pb + THEOREM_TOL {
                return Err(GraphError::DomainError(format!("β not decreasing between α = {pa} and α = {a}")));
            }
        }
        out.push((a, b));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: u8,
    pub alpha: f64,
    pub lambda2: f64,
    pub beta: f64,
    /// β′ and β″ (chain expansion only).
    pub beta_factors: Option<(f64, f64)>,
    /// Largest weight allowed by α.
    pub max_weight: usize,
    /// All vectors up to this weight were enumerated.
    pub exhaustive_weight: usize,
    pub exhaustive_checked: u64,
    pub sampled: u64,
    pub violations: u64,
    /// min |Mx| / |x| over everything checked.
    pub worst_ratio: f64,
    pub worst_support: Vec<usize>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

struct Scan {
    checked: u64,
    violations: u64,
    worst: f64,
    support: Vec<usize>,
}

impl Scan {
    fn new() -> Self {
        Self { checked: 0, violations: 0, worst: f64::INFINITY, support: Vec::new() }
    }

    fn record(&mut self, image_weight: usize, support: &[usize], beta: f64) {
        self.checked += 1;
        let w = support.len() as f64;
        if (image_weight as f64) < beta * w - THEOREM_TOL {
            self.violations += 1;
        }
        let ratio = image_weight as f64 / w;
        if ratio < self.worst {
            self.worst = ratio;
            self.support = support.to_vec();
        }
    }

    fn merge(mut self, o: Scan) -> Scan {
        self.checked += o.checked;
        self.violations += o.violations;
        if o.worst < self.worst {
            self.worst = o.worst;
            self.support = o.support;
        }
        self
    }
}

fn rec(cols: &[BitVec], acc: &mut BitVec, stack: &mut Vec<usize>, max: usize, beta: f64, scan: &mut Scan) {
    scan.record(acc.weight(), stack, beta);
    if stack.len() == max {
        return;
    }
    for j in stack.last().unwrap() + 1..cols.len() {
        acc.xor_assign(&cols[j]);
        stack.push(j);
        rec(cols, acc, stack, max, beta, scan);
        stack.pop();
        acc.xor_assign(&cols[j]);
    }
}

/// Tests |Mx| ≥ β|x| on every x with 1 ≤ |x| ≤ exhaustive, and on
/// `samples` random x with exhaustive < |x| ≤ max_weight.
fn scan_matrix(m: &F2Matrix, max_weight: usize, cap: usize, samples: u64, seed: u64, beta: f64) -> (Scan, usize, u64) {
    let n = m.cols();
    let cols: Vec<BitVec> = (0..n).map(|j| m.column(j)).collect();
    let exhaustive = max_weight.min(cap).min(n);
    let mut scan = Scan::new();
    if exhaustive > 0 {
        let parts = par::map_range(0..n, |first| {
            let mut s = Scan::new();
            let mut acc = cols[first].clone();
            rec(&cols, &mut acc, &mut vec![first], exhaustive, beta, &mut s);
            s
        });
        scan = parts.into_iter().fold(scan, Scan::merge);
    }
    let mut sampled = 0;
    if max_weight.min(n) > exhaustive {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let w = rng.gen_range(exhaustive + 1..=max_weight.min(n));
            let mut support: Vec<usize> = sample(&mut rng, n, w).into_vec();
            support.sort_unstable();
            let mut acc = BitVec::zeros(m.rows());
            for &j in &support {
                acc.xor_assign(&cols[j]);
            }
            scan.record(acc.weight(), &support, beta);
            sampled += 1;
        }
    }
    (scan, exhaustive, sampled)
}

fn floor_tol(x: f64) -> usize {
    (x + THEOREM_TOL).floor().max(0.0) as usize
}

/// Checks |∂x| ≥ β′β″|x| for |x| ≤ α|X¹|.
pub fn check_expansion_theorem7(
    t: &TannerComplex,
    alpha: f64,
    exhaustive_cap: usize,
    samples: u64,
    seed: u64,
) -> Result<TheoremReport, GraphError> {
    let x = t.graph();
    let lambda2 = second_eigenvalue(x)?;
    let d_local = exact_distance(t.local()).map_err(|e| GraphError::Invalid(e.to_string()))?.unwrap_or(x.degree() + 1);
    let (b1, b2, beta) = theorem7_beta(x.degree(), lambda2, d_local, alpha)?;
    let max_weight = floor_tol(alpha * x.num_edges() as f64);
    let (scan, exhaustive, sampled) = scan_matrix(&t.boundary(), max_weight, exhaustive_cap, samples, seed, beta);
    Ok(TheoremReport {
        theorem: 7,
        alpha,
        lambda2,
        beta,
        beta_factors: Some((b1, b2)),
        max_weight,
        exhaustive_weight: exhaustive,
        exhaustive_checked: scan.checked - sampled,
        sampled,
        violations: scan.violations,
        worst_ratio: scan.worst,
        worst_support: scan.support,
    })
}

/// The largest β for which `m` is (α, β)-expanding, i.e. min |mx|/|x| over
/// 1 ≤ |x| ≤ ⌊α·cols⌋; `None` when that range exceeds `exhaustive_cap` or is
/// empty.
pub fn measured_beta(m: &F2Matrix, alpha: f64, exhaustive_cap: usize) -> Option<f64> {
    let max_weight = floor_tol(alpha * m.cols() as f64);
    if max_weight == 0 || max_weight > exhaustive_cap {
        return None;
    }
    let (scan, _, _) = scan_matrix(m, max_weight, exhaustive_cap, 0, 0, 0.0);
    Some(scan.worst)
}

/// Checks |δy| ≥ β|y| for |y| ≤ α|X⁰|(s − k_L), δ = ∂ᵀ.
pub fn check_expansion_theorem8(
    t: &TannerComplex,
    alpha: f64,
    exhaustive_cap: usize,
    samples: u64,
    seed: u64,
) -> Result<TheoremReport, GraphError> {
    let x = t.graph();
    let lambda2 = second_eigenvalue(x)?;
    let d_dual = exact_distance(&dual_code(t.local())).map_err(|e| GraphError::Invalid(e.to_string()))?.unwrap_or(0);
    let beta = theorem8_beta(x.degree(), lambda2, t.local().k(), d_dual, alpha)?;
    let max_weight = floor_tol(alpha * (x.num_vertices() * t.checks_per_vertex()) as f64);
    let (scan, exhaustive, sampled) = scan_matrix(&t.boundary().transpose(), max_weight, exhaustive_cap, samples, seed, beta);
    Ok(TheoremReport {
        theorem: 8,
        alpha,
        lambda2,
        beta,
        beta_factors: None,
        max_weight,
        exhaustive_weight: exhaustive,
        exhaustive_checked: scan.checked - sampled,
        sampled,
        violations: scan.violations,
        worst_ratio: scan.worst,
        worst_support: scan.support,
    })
}

#[cfg(test)]
mod tests {
    use super::super::build_tanner;
    use super::*;
    use crate::classical::{hamming_7_4, repetition_code};
    use crate::graphs::{complete_graph, cycle_graph, klein_quartic_graph};

    #[test]
    fn beta_is_decreasing() {
        let alphas: Vec<f64> = (1..50).map(|i| i as f64 / 50.0).collect();
        let tab = tabulate_theorem7(7, 2.5, 3, &alphas).unwrap();
        assert_eq!(tab.len(), alphas.len());
        assert!(tabulate_theorem7(7, 2.5, 3, &[0.5, 0.1]).is_err());
    }

    #[test]
    fn single_edge_and_single_check() {
        let (_, x) = klein_quartic_graph().unwrap();
        let t = build_tanner(&x, &hamming_7_4()).unwrap();
        let d = t.boundary();
        let h = t.local_check();
        for e in 0..x.num_edges() {
            let [a, b] = x.endpoints(e);
            let expected = h.column(x.label_at(e, a)).weight() + h.column(x.label_at(e, b)).weight();
            assert_eq!(d.column(e).weight(), expected);
        }
        // δ(v ⊗ c) = H_Lᵀc placed on the edges at v
        let dt = d.transpose();
        let dual_d = exact_distance(&dual_code(&hamming_7_4())).unwrap().unwrap();
        for row in 0..dt.cols() {
            assert!(dt.column(row).weight() >= dual_d);
        }
    }

    #[test]
    fn theorems_hold_on_small_instances() {
        let t = build_tanner(&complete_graph(4), &repetition_code(3)).unwrap();
        for alpha in [0.2, 0.5] {
            assert!(check_expansion_theorem7(&t, alpha, 6, 200, 1).unwrap().holds());
        }
        let t = build_tanner(&cycle_graph(7).unwrap(), &repetition_code(2)).unwrap();
        let r = check_expansion_theorem8(&t, 0.4, 3, 100, 2).unwrap();
        assert!(r.holds());
        assert_eq!(r.max_weight, 2);
    }
}
