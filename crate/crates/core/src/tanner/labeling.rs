use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{build_tanner_labeled, TannerComplex, TannerError};
use crate::classical::{exact_distance, LinearCode};
use crate::graphs::LabeledGraph;

#[derive(Clone, Debug)]
pub struct LabelingSearch {
    pub tanner: TannerComplex,
    pub k: usize,
    pub d: Option<usize>,
    /// Labelings evaluated, including the hit.
    pub trials: u64,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Looks for a labeling of `x` whose Tanner code with `local` has the given
/// dimension and distance. Candidates, in order: the labeling of `x` itself;
/// the global affine maps l ↦ a·l + c mod s with gcd(a, s) = 1; then
/// reversing the cyclic order (l ↦ −l) at a random set of vertices, drawn
/// from `seed`, for up to `max_flip_trials` draws. Each candidate keeps a
/// cyclic order around every vertex, so a cyclic local code stays
/// compatible with the rotation at that vertex.
pub fn search_labeling(
    x: &LabeledGraph,
    local: &LinearCode,
    target_k: usize,
    target_d: usize,
    max_flip_trials: u64,
    seed: u64,
) -> Result<Option<LabelingSearch>, TannerError> {
    let s = x.degree();
    let mut trials = 0u64;
    let mut try_one = |y: LabeledGraph, desc: String| -> Result<Option<LabelingSearch>, TannerError> {
        trials += 1;
        let t = build_tanner_labeled(&y, local, &desc)?;
        let code = t.code();
        if code.k() != target_k {
            return Ok(None);
        }
        let d = exact_distance(&code)?;
        if d != Some(target_d) {
            return Ok(None);
        }
        Ok(Some(LabelingSearch { tanner: t, k: target_k, d, trials }))
    };
    if let Some(hit) = try_one(x.clone(), "canonical".into())? {
        return Ok(Some(hit));
    }
    for a in (1..s).filter(|&a| gcd(a, s) == 1) {
        for c in 0..s {
            if (a, c) == (1, 0) {
                continue;
            }
            let y = x.relabeled(|_, l| (a * l + c) % s)?;
            if let Some(hit) = try_one(y, format!("affine l -> {a}l + {c} mod {s}"))? {
                return Ok(Some(hit));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..max_flip_trials {
        let flip: Vec<bool> = (0..x.num_vertices()).map(|_| rng.gen()).collect();
        let y = x.relabeled(|v, l| if flip[v] { (s - l) % s } else { l })?;
        let at: Vec<usize> = (0..flip.len()).filter(|&v| flip[v]).collect();
        let desc = format!("reversed at vertices {at:?} (seed {seed}, draw {trial})");
        if let Some(hit) = try_one(y, desc)? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::repetition_code;
    use crate::graphs::cycle_graph;

    #[test]
    fn canonical_hit_costs_one_trial() {
        let x = cycle_graph(6).unwrap();
        let hit = search_labeling(&x, &repetition_code(2), 1, 6, 10, 0).unwrap().unwrap();
        assert_eq!((hit.trials, hit.tanner.labeling()), (1, "canonical"));
    }

    #[test]
    fn unreachable_target() {
        let x = cycle_graph(6).unwrap();
        assert!(search_labeling(&x, &repetition_code(2), 2, 6, 5, 0).unwrap().is_none());
    }
}
