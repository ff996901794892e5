use super::{ClassicalError, LinearCode};
use crate::f2la::BitVec;
use crate::par;

/// Enumeration cap (number of vectors visited) for exact distances.
pub const DISTANCE_OP_CAP: u64 = 1 << 28;

/// Minimum nonzero weight in the span of `vectors` (which should be
/// independent for the count to be 2^k), with a witness. Gray-code
/// enumeration, split over the top bits for parallel workers.
pub fn min_weight_in_span(vectors: &[BitVec], n: usize) -> Option<(usize, BitVec)> {
    let k = vectors.len();
    if k == 0 {
        return None;
    }
    let split = k.min(8);
    let low = k - split;
    let blocks = par::map_range(0..1usize << split, |b| {
        let mut cur = BitVec::zeros(n);
        for j in 0..split {
            if (b >> j) & 1 == 1 {
                cur.xor_assign(&vectors[low + j]);
            }
        }
        let mut best: Option<(usize, BitVec)> = None;
        let consider = |v: &BitVec, best: &mut Option<(usize, BitVec)>| {
            let w = v.weight();
            if w > 0 && best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                *best = Some((w, v.clone()));
            }
        };
        consider(&cur, &mut best);
        for i in 1u64..1u64 << low {
            cur.xor_assign(&vectors[i.trailing_zeros() as usize]);
            consider(&cur, &mut best);
        }
        best
    });
    blocks.into_iter().flatten().fold(None, |acc: Option<(usize, BitVec)>, x| match acc {
        Some(a) if a.0 <= x.0 => Some(a),
        _ => Some(x),
    })
}

/// Smallest w such that some w columns of `check` sum to zero, searching
/// w = 1, 2, … up to `max_weight`; returns the support.
pub fn min_dependent_columns(check: &crate::f2la::F2Matrix, max_weight: usize, cap: u64) -> Result<Option<Vec<usize>>, ClassicalError> {
    let n = check.cols();
    let cols: Vec<BitVec> = (0..n).map(|j| check.column(j)).collect();
    let mut spent = 0u64;
    for w in 1..=max_weight.min(n) {
        spent = spent.saturating_add(binomial(n as u64, w as u64));
        if spent > cap {
            return Err(ClassicalError::TooLarge { work: spent, cap });
        }
        let found = par::find_first(0..n, |first| {
            let mut acc = cols[first].clone();
            let mut stack = vec![first];
            search(&cols, &mut acc, &mut stack, w, n)
        });
        if let Some((_, support)) = found {
            return Ok(Some(support));
        }
    }
    Ok(None)
}

fn search(cols: &[BitVec], acc: &mut BitVec, stack: &mut Vec<usize>, w: usize, n: usize) -> Option<Vec<usize>> {
    if stack.len() == w {
        return acc.is_zero().then(|| stack.clone());
    }
    for j in stack.last().unwrap() + 1..n {
        acc.xor_assign(&cols[j]);
        stack.push(j);
        if let Some(s) = search(cols, acc, stack, w, n) {
            return Some(s);
        }
        stack.pop();
        acc.xor_assign(&cols[j]);
    }
    None
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Exact minimum distance; `None` for the zero code. Enumerates the 2^k
/// codewords when that fits under the cap, otherwise searches for the
/// smallest dependent set of check columns.
pub fn exact_distance(c: &LinearCode) -> Result<Option<usize>, ClassicalError> {
    if c.k() == 0 {
        return Ok(None);
    }
    if c.k() < 63 && (1u64 << c.k()) <= DISTANCE_OP_CAP {
        let rows: Vec<BitVec> = (0..c.k()).map(|i| c.generator().row(i)).collect();
        return Ok(min_weight_in_span(&rows, c.n()).map(|(w, _)| w));
    }
    let support = min_dependent_columns(c.check(), c.n() - c.k() + 1, DISTANCE_OP_CAP)?;
    Ok(Some(support.expect("Singleton bound guarantees a dependency").len()))
}

#[cfg(test)]
mod tests {
    use super::super::{dual_code, hamming_7_4, repetition_code};
    use super::*;
    use crate::f2la::F2Matrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute(c: &LinearCode) -> Option<usize> {
        (1u64..1 << c.n())
            .map(|m| BitVec::from_support(c.n(), (0..c.n()).filter(|i| (m >> i) & 1 == 1)))
            .filter(|v| c.is_codeword(v))
            .map(|v| v.weight())
            .min()
    }

    #[test]
    fn matches_brute_force_and_sphere_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(4..13);
            let r = rng.gen_range(1..n);
            let h = crate::complexes::random_matrix(&mut rng, r, n, 0.4);
            let c = LinearCode::from_check(h.clone());
            let d = exact_distance(&c).unwrap();
            assert_eq!(d, brute(&c));
            if c.k() > 0 {
                let sphere = min_dependent_columns(&h, n, DISTANCE_OP_CAP).unwrap().map(|s| s.len());
                assert_eq!(sphere, d);
            }
        }
    }

    #[test]
    fn sequential_matches_parallel() {
        let c = LinearCode::from_check(F2Matrix::from_rows(&[[1u8, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1]]));
        let rows: Vec<BitVec> = (0..c.k()).map(|i| c.generator().row(i)).collect();
        let par_res = min_weight_in_span(&rows, c.n());
        crate::par::set_sequential(true);
        let seq_res = min_weight_in_span(&rows, c.n());
        crate::par::set_sequential(false);
        assert_eq!(par_res, seq_res);
    }

    #[test]
    fn known_distances() {
        assert_eq!(exact_distance(&repetition_code(9)).unwrap(), Some(9));
        assert_eq!(exact_distance(&hamming_7_4()).unwrap(), Some(3));
        assert_eq!(exact_distance(&dual_code(&hamming_7_4())).unwrap(), Some(4));
        assert_eq!(binomial(84, 3), 95284);
    }
}
