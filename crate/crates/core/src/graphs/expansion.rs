use serde::Serialize;

use super::{second_eigenvalue, GraphError, LabeledGraph};
use crate::par;

/// Slack allowed when comparing a counted quantity with a real bound.
pub const EXPANSION_TOL: f64 = 1e-9;

fn domain(ok: bool, msg: impl FnOnce() -> String) -> Result<(), GraphError> {
    if ok {
        Ok(())
    } else {
        Err(GraphError::DomainError(msg()))
    }
}

fn check_graph_params(s: f64, lambda2: f64) -> Result<(), GraphError> {
    domain(s > 0.0 && lambda2.is_finite() && lambda2 <= s, || format!("need 0 < s and λ₂ ≤ s, got s = {s}, λ₂ = {lambda2}"))
}

/// Lower bound (1−α)(s−λ₂) on |δS|/|S| for |S| ≤ α|X⁰|.
pub fn lemma1_bound(s: f64, lambda2: f64, alpha: f64) -> Result<f64, GraphError> {
    check_graph_params(s, lambda2)?;
    domain((0.0..=1.0).contains(&alpha), || format!("α = {alpha} outside [0,1]"))?;
    Ok((1.0 - alpha) * (s - lambda2))
}

/// α = γ² + (λ₂/s)γ(1−γ): the induced subgraph on γ|X⁰| vertices has at
/// most α|X¹| edges.
pub fn alon_chung_alpha(s: f64, lambda2: f64, gamma: f64) -> Result<f64, GraphError> {
    check_graph_params(s, lambda2)?;
    domain((0.0..=1.0).contains(&gamma), || format!("γ = {gamma} outside [0,1]"))?;
    Ok(gamma * gamma + lambda2 / s * gamma * (1.0 - gamma))
}

/// β = (√(λ₂² + 4s(s−λ₂)α) − λ₂) / (s(s−λ₂)α): edge sets of size ≤ α|X¹|
/// touch at least β|E| vertices.
pub fn lemma2_beta(s: f64, lambda2: f64, alpha: f64) -> Result<f64, GraphError> {
    check_graph_params(s, lambda2)?;
    domain(lambda2 < s, || "λ₂ = s".into())?;
    domain(alpha > 0.0 && alpha <= 1.0, || format!("α = {alpha} outside (0,1]"))?;
    let k = s * (s - lambda2) * alpha;
    Ok(((lambda2 * lambda2 + 4.0 * k).sqrt() - lambda2) / k)
}

/// β = ((b−λ₂) − α(s−λ₂)) / b: at least β|S| vertices of S have at least
/// s−b edges leaving S.
pub fn lemma3_beta(s: f64, lambda2: f64, alpha: f64, b: f64) -> Result<f64, GraphError> {
    check_graph_params(s, lambda2)?;
    domain((0.0..=1.0).contains(&alpha), || format!("α = {alpha} outside [0,1]"))?;
    domain(b > 0.0 && b <= s, || format!("b = {b} outside (0,s]"))?;
    Ok(((b - lambda2) - alpha * (s - lambda2)) / b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExpansionLemma {
    /// Vertex expansion |δS| vs (1−α)(s−λ₂)|S|.
    Lemma1,
    /// Edge-to-vertex expansion |Γ(E)| vs β|E|.
    Lemma2,
    /// Vertices with many boundary edges, for every integer b in [1, s].
    Lemma3,
    /// Induced edges on S vs α(γ)|X¹|.
    AlonChung,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionReport {
    pub lemma: ExpansionLemma,
    pub lambda2: f64,
    pub subsets_checked: u64,
    pub violations: u64,
    /// Smallest observed (lhs − bound); nonnegative when the lemma holds.
    pub tightest_slack: f64,
    pub tightest_subset: Vec<usize>,
}

impl ExpansionReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone)]
struct Acc {
    checked: u64,
    violations: u64,
    slack: f64,
    subset: Vec<usize>,
}

impl Acc {
    fn new() -> Self {
        Self { checked: 0, violations: 0, slack: f64::INFINITY, subset: Vec::new() }
    }

    fn record(&mut self, slack: f64, subset: &[usize]) {
        self.checked += 1;
        if slack < -EXPANSION_TOL {
            self.violations += 1;
        }
        if slack < self.slack {
            self.slack = slack;
            self.subset = subset.to_vec();
        }
    }

    fn merge(mut self, o: Acc) -> Acc {
        self.checked += o.checked;
        self.violations += o.violations;
        if o.slack < self.slack {
            self.slack = o.slack;
            self.subset = o.subset;
        }
        self
    }
}

/// Calls `f` on every subset of {first} ∪ T, T ⊆ (first, n), |T| < max.
fn subsets_from(first: usize, n: usize, max: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(cur: &mut Vec<usize>, next: usize, n: usize, max: usize, f: &mut dyn FnMut(&[usize])) {
        f(cur);
        if cur.len() == max {
            return;
        }
        for j in next..n {
            cur.push(j);
            rec(cur, j + 1, n, max, f);
            cur.pop();
        }
    }
    rec(&mut vec![first], first + 1, n, max, f);
}

/// Evaluates one lemma on every nonempty subset of size ≤ `max_subset`
/// (vertex subsets, or edge subsets for the edge-expansion lemma). Each subset is tested
/// against the strongest instance of the lemma it falls under, i.e.
/// α = |S|/|X⁰| (or |E|/|X¹|); every bound is monotone in α.
pub fn brute_force_expansion_check(
    x: &LabeledGraph,
    lemma: ExpansionLemma,
    max_subset: usize,
) -> Result<ExpansionReport, GraphError> {
    let lambda2 = second_eigenvalue(x)?;
    let s = x.degree() as f64;
    let n = x.num_vertices();
    let m = x.num_edges();
    let universe = if lemma == ExpansionLemma::Lemma2 { m } else { n };
    let max = max_subset.min(universe);
    let accs = par::map_range(0..universe, |first| {
        let mut acc = Acc::new();
        let mut mark = vec![false; universe];
        let mut touched = vec![0u32; n];
        subsets_from(first, universe, max, &mut |sub: &[usize]| {
            for &i in sub {
                mark[i] = true;
            }
            match lemma {
                ExpansionLemma::Lemma2 => {
                    let mut verts = 0usize;
                    for &e in sub {
                        for v in x.endpoints(e) {
                            if touched[v] == 0 {
                                verts += 1;
                            }
                            touched[v] += 1;
                        }
                    }
                    let beta = lemma2_beta(s, lambda2, sub.len() as f64 / m as f64).unwrap();
                    acc.record(verts as f64 - beta * sub.len() as f64, sub);
                    for &e in sub {
                        for v in x.endpoints(e) {
                            touched[v] -= 1;
                        }
                    }
                }
                _ => {
                    let outward: Vec<usize> = sub.iter().map(|&v| x.neighbors(v).filter(|&w| !mark[w]).count()).collect();
                    let boundary: usize = outward.iter().sum();
                    let size = sub.len() as f64;
                    let alpha = size / n as f64;
                    match lemma {
                        ExpansionLemma::Lemma1 => {
                            acc.record(boundary as f64 / size - lemma1_bound(s, lambda2, alpha).unwrap(), sub);
                        }
                        ExpansionLemma::AlonChung => {
                            let inner = (x.degree() * sub.len() - boundary) / 2;
                            let bound = alon_chung_alpha(s, lambda2, alpha).unwrap() * m as f64;
                            acc.record(bound - inner as f64, sub);
                        }
                        ExpansionLemma::Lemma3 => {
                            for b in 1..=x.degree() {
                                let count = outward.iter().filter(|&&o| o + b >= x.degree()).count();
                                let beta = lemma3_beta(s, lambda2, alpha, b as f64).unwrap();
                                acc.record(count as f64 - beta * size, sub);
                            }
                        }
                        ExpansionLemma::Lemma2 => unreachable!(),
                    }
                }
            }
            for &i in sub {
                mark[i] = false;
            }
        });
        acc
    });
    let acc = accs.into_iter().fold(Acc::new(), Acc::merge);
    Ok(ExpansionReport {
        lemma,
        lambda2,
        subsets_checked: acc.checked,
        violations: acc.violations,
        tightest_slack: acc.slack,
        tightest_subset: acc.subset,
    })
}
