use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::distance::{min_weight_in_span, DISTANCE_OP_CAP};
use super::{binary_entropy, dual_code, ClassicalError, LinearCode};
use crate::f2la::{rank, F2Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GvParams {
    pub s: usize,
    pub delta: f64,
    /// Required k/s; the dimension is max(⌊s/2⌋ + 1, ⌈rate_floor·s⌉).
    pub rate_floor: f64,
    pub seed: u64,
    pub max_trials: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GvTrial {
    pub trial: usize,
    pub full_rank: bool,
    pub distance: Option<usize>,
    pub dual_distance: Option<usize>,
    pub accepted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GvResult {
    #[serde(skip)]
    pub code: LinearCode,
    pub k: usize,
    pub distance: usize,
    pub dual_distance: usize,
    /// ⌈δs⌉, the target for both distances.
    pub target: usize,
    /// 2 / (1/2 − H₂(δ)), the length above which existence is guaranteed.
    pub theorem_threshold: f64,
    pub trials: Vec<GvTrial>,
}

impl GvParams {
    pub fn dimension(&self) -> usize {
        (self.s / 2 + 1).max((self.rate_floor * self.s as f64).ceil() as usize)
    }
}

/// Samples random k × s generator matrices until one has full rank and both
/// d and d⊥ at least ⌈δs⌉. Every trial is logged.
pub fn gv_plus_search(p: &GvParams) -> Result<GvResult, ClassicalError> {
    if !(p.delta > 0.0 && p.delta < 0.11) {
        return Err(ClassicalError::DomainError(format!("δ = {} outside (0, 0.11)", p.delta)));
    }
    let k = p.dimension();
    if k > p.s {
        return Err(ClassicalError::DomainError(format!("rate floor {} forces k > s", p.rate_floor)));
    }
    let work = 1u64.checked_shl(k as u32).unwrap_or(u64::MAX);
    if work > DISTANCE_OP_CAP {
        return Err(ClassicalError::TooLarge { work, cap: DISTANCE_OP_CAP });
    }
    let target = (p.delta * p.s as f64).ceil() as usize;
    let theorem_threshold = 2.0 / (0.5 - binary_entropy(p.delta));
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut trials = Vec::new();
    for trial in 0..p.max_trials {
        let mut g = F2Matrix::zeros(k, p.s);
        for i in 0..k {
            for j in 0..p.s {
                if rng.gen_bool(0.5) {
                    g.set(i, j, true);
                }
            }
        }
        let mut log = GvTrial { trial, full_rank: rank(&g) == k, distance: None, dual_distance: None, accepted: false };
        if log.full_rank {
            let code = LinearCode::from_generator(g);
            let rows = |c: &LinearCode| (0..c.k()).map(|i| c.generator().row(i)).collect::<Vec<_>>();
            let d = min_weight_in_span(&rows(&code), p.s).map_or(0, |x| x.0);
            log.distance = Some(d);
            if d >= target {
                let dual = dual_code(&code);
                let dd = min_weight_in_span(&rows(&dual), p.s).map_or(p.s + 1, |x| x.0);
                log.dual_distance = Some(dd);
                log.accepted = dd >= target;
                if log.accepted {
                    trials.push(log);
                    return Ok(GvResult { code, k, distance: d, dual_distance: dd, target, theorem_threshold, trials });
                }
            }
        }
        trials.push(log);
    }
    Err(ClassicalError::SearchExhausted { trials: p.max_trials })
}

#[cfg(test)]
mod tests {
    use super::super::exact_distance;
    use super::*;

    #[test]
    fn search_meets_targets() {
        for s in [20usize, 24, 30] {
            let p = GvParams { s, delta: 0.1, rate_floor: 0.0, seed: 5, max_trials: 200 };
            let r = gv_plus_search(&p).unwrap();
            assert!(r.k > s / 2);
            assert_eq!(r.code.k(), r.k);
            assert_eq!(exact_distance(&r.code).unwrap(), Some(r.distance));
            assert_eq!(exact_distance(&dual_code(&r.code)).unwrap(), Some(r.dual_distance));
            assert!(r.distance >= r.target && r.dual_distance >= r.target);
            assert!(r.trials.last().unwrap().accepted);
            assert!((r.theorem_threshold - 64.5).abs() < 0.5);
        }
    }

    #[test]
    fn seeded_and_reproducible() {
        let p = GvParams { s: 16, delta: 0.1, rate_floor: 0.55, seed: 9, max_trials: 100 };
        let a = gv_plus_search(&p).unwrap();
        let b = gv_plus_search(&p).unwrap();
        assert_eq!(a.code, b.code);
        assert_eq!(a.trials, b.trials);
        assert_eq!(a.k, 9);
    }

    #[test]
    fn rejects_bad_parameters() {
        let p = GvParams { s: 20, delta: 0.2, rate_floor: 0.0, seed: 0, max_trials: 1 };
        assert!(matches!(gv_plus_search(&p), Err(ClassicalError::DomainError(_))));
        let p = GvParams { s: 20, delta: 0.1, rate_floor: 0.0, seed: 0, max_trials: 0 };
        assert_eq!(gv_plus_search(&p).unwrap_err(), ClassicalError::SearchExhausted { trials: 0 });
    }
}
