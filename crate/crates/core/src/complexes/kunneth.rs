use serde::Serialize;

use super::chain::ChainComplex;
use super::double::{tensor_complex, DoubleComplex};
use super::homology::HomologyBasis;
use super::ComplexError;
use crate::f2la::{F2Matrix, F2Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KunnethReport {
    pub degree: i32,
    /// dim H_n(C ⊗ D), computed on the total complex.
    pub total: usize,
    /// Σ_{p+q=n} dim H_p(C) · dim H_q(D).
    pub product_sum: usize,
}

impl KunnethReport {
    pub fn holds(&self) -> bool {
        self.total == self.product_sum
    }
}

/// Compares both sides of the Künneth formula in degree `n`.
pub fn verify_kunneth(c: &ChainComplex, d: &ChainComplex, n: i32) -> Result<KunnethReport, ComplexError> {
    let t = tensor_complex(c, d);
    let total = if t.in_range(n) { t.homology_dim(n)? } else { 0 };
    let product_sum = c
        .degrees()
        .filter(|&p| d.in_range(n - p))
        .map(|p| c.homology_dim(p).unwrap() * d.homology_dim(n - p).unwrap())
        .sum();
    let report = KunnethReport { degree: n, total, product_sum };
    if report.holds() {
        Ok(report)
    } else {
        Err(ComplexError::KunnethViolation { degree: n, total, expected: product_sum })
    }
}

/// Vertical homology first, then homology of the induced horizontal maps;
/// returns Σ_{p+q=n} dim E²_{p,q}.
pub fn homology_2x2_via_pages(e: &DoubleComplex, n: i32) -> Result<usize, ComplexError> {
    if !e.is_two_by_two() {
        return Err(ComplexError::NotTwoByTwo);
    }
    let mut total = 0;
    for q in 0..=1 {
        // H_q of the columns p = 1 and p = 0
        let col = |p: i32| HomologyBasis::new(q, &e.vdiff(p, q), &e.vdiff(p, q + 1));
        let (h1, h0) = (col(1), col(0));
        // rank of the induced map H_q(E_{1,•}) → H_q(E_{0,•}) modulo boundaries
        let rank_star = if h1.dim() == 0 || h0.ambient_dim() == 0 {
            0
        } else {
            let hd = e.hdiff(1, q);
            let images: Vec<_> = h1.representatives().iter().map(|r| hd.mul_vec(r).unwrap()).collect();
            let b = h0.boundary_space().basis().clone();
            let with_images = b.vstack(&F2Matrix::from_bitvecs(&images, h0.ambient_dim())).unwrap();
            F2Subspace::span_of_rows(&with_images).dim() - b.rows()
        };
        let e2_1q = h1.dim() - rank_star;
        let e2_0q = h0.dim() - rank_star;
        if 1 + q == n {
            total += e2_1q;
        }
        if q == n {
            total += e2_0q;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::super::builders::{cycle_graph_complex, random_complex, random_two_by_two};
    use super::super::double::total_complex;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn torus_kunneth_and_pages() {
        let c = cycle_graph_complex(3).unwrap();
        let r = verify_kunneth(&c, &c, 1).unwrap();
        assert_eq!((r.total, r.product_sum), (2, 2));
        let e = DoubleComplex::tensor(&c, &c);
        assert_eq!(homology_2x2_via_pages(&e, 1).unwrap(), 2);
    }

    #[test]
    fn zero_grid_pages_are_cell_sums() {
        let z = || F2Matrix::zeros(0, 0);
        let e = DoubleComplex::new(
            0,
            0,
            vec![vec![2, 3], vec![4, 1]],
            vec![vec![z(), z()], vec![F2Matrix::zeros(2, 4), F2Matrix::zeros(3, 1)]],
            vec![vec![z(), F2Matrix::zeros(2, 3)], vec![z(), F2Matrix::zeros(4, 1)]],
        )
        .unwrap();
        assert_eq!(homology_2x2_via_pages(&e, 0).unwrap(), 2);
        assert_eq!(homology_2x2_via_pages(&e, 1).unwrap(), 7);
        assert_eq!(homology_2x2_via_pages(&e, 2).unwrap(), 1);
    }

    #[test]
    fn random_pages_match_total() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in 0..60 {
            let dims = [t % 5 + 1, (t / 2) % 5 + 1, (t / 3) % 4 + 1, (t / 5) % 5 + 1];
            let e = random_two_by_two(&mut rng, dims);
            let tot = total_complex(&e);
            for n in 0..=2 {
                assert_eq!(homology_2x2_via_pages(&e, n).unwrap(), tot.homology_dim(n).unwrap(), "trial {t} n={n}");
            }
        }
    }

    #[test]
    fn random_kunneth() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for t in 0..40 {
            let c = random_complex(&mut rng, &[t % 4 + 1, t % 3 + 2, 2]);
            let d = random_complex(&mut rng, &[3, (t % 5) + 1]);
            for n in 0..=3 {
                verify_kunneth(&c, &d, n).unwrap();
            }
        }
    }

    #[test]
    fn pages_reject_large_grids() {
        let c = random_complex(&mut ChaCha8Rng::seed_from_u64(0), &[2, 2, 2]);
        let e = DoubleComplex::tensor(&c, &c);
        assert_eq!(homology_2x2_via_pages(&e, 1), Err(ComplexError::NotTwoByTwo));
    }
}
