use rand::Rng;

use super::chain::ChainComplex;
use super::double::{tensor_complex, DoubleComplex};
use super::ComplexError;
use crate::f2la::{kernel_basis, BitVec, F2Matrix};

/// Cellular complex of the cycle graph: edges σ_i in degree 1, vertices τ_i
/// in degree 0, ∂σ_i = τ_i + τ_{i+1 mod ℓ}. ℓ = 2 is the two-edge multigraph.
pub fn cycle_graph_complex(ell: usize) -> Result<ChainComplex, ComplexError> {
    if ell < 2 {
        return Err(ComplexError::TooSmall(ell));
    }
    Ok(ChainComplex::one_complex(cycle_incidence(ell)))
}

/// Vertex–edge incidence of the ℓ-cycle.
pub fn cycle_incidence(ell: usize) -> F2Matrix {
    let mut d = F2Matrix::zeros(ell, ell);
    for i in 0..ell {
        d.toggle(i, i);
        d.toggle((i + 1) % ell, i);
    }
    d
}

/// C(C_ℓ) ⊗ C(C_ℓ), the toric-code complex.
pub fn torus_complex(ell: usize) -> Result<ChainComplex, ComplexError> {
    let c = cycle_graph_complex(ell)?;
    Ok(tensor_complex(&c, &c))
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, density: f64) -> F2Matrix {
    let mut m = F2Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(density) {
                m.set(i, j, true);
            }
        }
    }
    m
}

/// Random columns drawn from the span of `basis` (zero columns if empty).
fn random_in_span<R: Rng + ?Sized>(rng: &mut R, basis: &[BitVec], len: usize, count: usize) -> F2Matrix {
    let cols: Vec<BitVec> = (0..count)
        .map(|_| {
            let mut v = BitVec::zeros(len);
            for b in basis {
                if rng.gen_bool(0.5) {
                    v.xor_assign(b);
                }
            }
            v
        })
        .collect();
    F2Matrix::from_columns(&cols, len)
}

/// Random complex with `dims.len()` spaces starting in degree 0. Each
/// differential's columns are random elements of the kernel of the one
/// below it.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, dims: &[usize]) -> ChainComplex {
    assert!(!dims.is_empty());
    if dims.len() == 1 {
        return ChainComplex::single(0, dims[0]);
    }
    let mut diffs = vec![random_matrix(rng, dims[0], dims[1], 0.5)];
    for k in 1..dims.len() - 1 {
        let ker = kernel_basis(&diffs[k - 1]).vectors();
        diffs.push(random_in_span(rng, &ker, dims[k], dims[k + 1]));
    }
    ChainComplex::from_diffs(0, diffs).unwrap()
}

/// Random double complex on bidegrees {0,1}², dims (e00, e10, e01, e11).
/// h₀ and v₀ are free; the columns of [v₁; h₁] lie in ker [h₀ | v₀] so the
/// square commutes.
pub fn random_two_by_two<R: Rng + ?Sized>(rng: &mut R, d: [usize; 4]) -> DoubleComplex {
    let [e00, e10, e01, e11] = d;
    let h0 = random_matrix(rng, e00, e10, 0.5);
    let v0 = random_matrix(rng, e00, e01, 0.5);
    let ker = kernel_basis(&h0.hstack(&v0).unwrap()).vectors();
    let stacked = random_in_span(rng, &ker, e10 + e01, e11);
    let v1 = stacked.select_rows(&(0..e10).collect::<Vec<_>>());
    let h1 = stacked.select_rows(&(e10..e10 + e01).collect::<Vec<_>>());
    let z = || F2Matrix::zeros(0, 0);
    DoubleComplex::new(0, 0, vec![vec![e00, e01], vec![e10, e11]], vec![vec![z(), z()], vec![h0, h1]], vec![vec![z(), v0], vec![z(), v1]])
        .expect("construction commutes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cycle_examples() {
        assert!(matches!(cycle_graph_complex(1), Err(ComplexError::TooSmall(1))));
        let c3 = cycle_graph_complex(3).unwrap();
        assert_eq!(c3.diff(1).row_weights(), vec![2, 2, 2]);
        assert_eq!(c3.diff(1), F2Matrix::from_rows(&[[1u8, 0, 1], [1, 1, 0], [0, 1, 1]]));
        let c5 = cycle_graph_complex(5).unwrap();
        assert_eq!(c5.homology_dim(0).unwrap(), 1);
        let c4 = cycle_graph_complex(4).unwrap();
        assert_eq!(kernel_basis(&c4.diff(1)).vectors(), vec![BitVec::ones(4)]);
    }

    #[test]
    fn torus_homology() {
        for ell in 2..=5 {
            let t = torus_complex(ell).unwrap();
            assert_eq!(t.dim(1), 2 * ell * ell);
            assert_eq!(t.homology_dim(1).unwrap(), 2);
            assert_eq!(t.homology_dim(0).unwrap(), 1);
            assert_eq!(t.homology_dim(2).unwrap(), 1);
        }
    }

    #[test]
    fn random_constructions_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let c = random_complex(&mut rng, &[4, 5, 3, 2]);
            assert_eq!(c.dims(), &[4, 5, 3, 2]);
            let _ = random_two_by_two(&mut rng, [3, 4, 2, 5]);
        }
    }
}
