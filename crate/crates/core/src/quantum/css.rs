use serde::{Deserialize, Serialize};

use super::QuantumError;
use crate::complexes::{ChainComplex, HomologyBasis};
use crate::f2la::{kernel_basis, F2Matrix};

/// A CSS code with H_X·H_Zᵀ = 0 and k = n − rank H_X − rank H_Z.
#[derive(Clone, Debug)]
pub struct CssCode {
    hx: F2Matrix,
    hz: F2Matrix,
    k: usize,
    z_logicals: F2Matrix,
    x_logicals: F2Matrix,
}

impl CssCode {
    pub fn new(hx: F2Matrix, hz: F2Matrix) -> Result<Self, QuantumError> {
        if hx.cols() != hz.cols() {
            return Err(QuantumError::ShapeMismatch(format!("H_X has {} columns, H_Z has {}", hx.cols(), hz.cols())));
        }
        if !hx.mul(&hz.transpose())?.is_zero() {
            return Err(QuantumError::NonCommuting);
        }
        let c = ChainComplex::from_diffs(-1, vec![hx.clone(), hz.transpose()])?;
        let z = c.homology_basis(0)?;
        let x = c.cohomology_basis(0)?;
        let k = z.dim();
        debug_assert_eq!(k, hx.cols() - hx.rank() - hz.rank());
        let n = hx.cols();
        Ok(Self {
            z_logicals: F2Matrix::from_bitvecs(&z.representatives(), n),
            x_logicals: F2Matrix::from_bitvecs(&x.representatives(), n),
            hx,
            hz,
            k,
        })
    }

    pub fn n(&self) -> usize {
        self.hx.cols()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn hx(&self) -> &F2Matrix {
        &self.hx
    }

    pub fn hz(&self) -> &F2Matrix {
        &self.hz
    }

    /// Cycle representatives of a basis of H_i (rows).
    pub fn z_logicals(&self) -> &F2Matrix {
        &self.z_logicals
    }

    /// Cocycle representatives of a basis of H^i (rows).
    pub fn x_logicals(&self) -> &F2Matrix {
        &self.x_logicals
    }

    /// The three-term complex C_1 → C_0 → C_{−1} with diffs H_Zᵀ, H_X.
    pub fn complex(&self) -> ChainComplex {
        ChainComplex::from_diffs(-1, vec![self.hx.clone(), self.hz.transpose()]).expect("validated on construction")
    }

    pub fn z_homology(&self) -> HomologyBasis {
        self.complex().homology_basis(0).expect("degree 0 exists")
    }

    pub fn x_cohomology(&self) -> HomologyBasis {
        self.complex().cohomology_basis(0).expect("degree 0 exists")
    }

    /// Number of independent X and Z stabilizers.
    pub fn stabilizer_ranks(&self) -> (usize, usize) {
        (self.hx.rank(), self.hz.rank())
    }

    /// dim ker H_X, used to size distance searches.
    pub fn z_kernel_dim(&self) -> usize {
        kernel_basis(&self.hx).dim()
    }
}

/// Qubits on C_i, H_X = ∂_i, H_Z = ∂_{i+1}ᵀ; missing neighbours give zero maps.
pub fn css_from_complex(c: &ChainComplex, i: i32) -> Result<CssCode, QuantumError> {
    if !c.in_range(i) {
        return Err(QuantumError::DegreeOutOfRange(i));
    }
    CssCode::new(c.diff(i), c.diff(i + 1).transpose())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LdpcReport {
    /// Largest stabilizer weight over H_X and H_Z.
    pub row_max: usize,
    /// Largest number of stabilizers acting on one qubit.
    pub col_max: usize,
}

impl LdpcReport {
    pub fn of(hx: &F2Matrix, hz: &F2Matrix) -> Self {
        let max = |v: Vec<usize>| v.into_iter().max().unwrap_or(0);
        Self {
            row_max: max(hx.row_weights()).max(max(hz.row_weights())),
            col_max: max(hx.col_weights()).max(max(hz.col_weights())),
        }
    }
}

pub fn ldpc_check(q: &CssCode) -> LdpcReport {
    LdpcReport::of(&q.hx, &q.hz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cycle_graph_complex, tensor_complex, torus_complex};

    #[test]
    fn toric_parameters() {
        for ell in 2..=5 {
            let q = css_from_complex(&torus_complex(ell).unwrap(), 1).unwrap();
            assert_eq!((q.n(), q.k()), (2 * ell * ell, 2));
            let (rx, rz) = q.stabilizer_ranks();
            assert_eq!(q.n() - rx - rz, 2);
            assert_eq!(ldpc_check(&q), LdpcReport { row_max: 4, col_max: 2 });
        }
    }

    #[test]
    fn zero_differentials_keep_everything() {
        let c = ChainComplex::new(0, vec![2, 5, 3], vec![F2Matrix::zeros(2, 5), F2Matrix::zeros(5, 3)]).unwrap();
        let q = css_from_complex(&c, 1).unwrap();
        assert_eq!((q.n(), q.k()), (5, 5));
        assert!(matches!(css_from_complex(&c, 3), Err(QuantumError::DegreeOutOfRange(3))));
    }

    #[test]
    fn end_degrees_use_zero_maps() {
        let c = cycle_graph_complex(4).unwrap();
        let q = css_from_complex(&c, 0).unwrap();
        assert_eq!((q.n(), q.k(), q.hx().rows()), (4, 1, 0));
    }

    #[test]
    fn hypergraph_product_of_repetition_checks() {
        // [[13, 1]]: bits ⊗ bits ⊕ checks ⊗ checks sit in degree 0 of A ⊗ A*
        let r = ChainComplex::one_complex(F2Matrix::from_rows(&[[1u8, 1, 0], [0, 1, 1]]));
        let hp = tensor_complex(&r, &r.dual());
        let q = css_from_complex(&hp, 0).unwrap();
        assert_eq!(q.n(), 3 * 3 + 2 * 2);
        assert_eq!(q.k(), hp.homology_dim(0).unwrap());
        assert_eq!(q.k(), 1);
    }

    #[test]
    fn rejects_noncommuting() {
        let hx = F2Matrix::from_rows(&[[1u8, 0]]);
        let hz = F2Matrix::from_rows(&[[1u8, 1]]);
        assert!(matches!(CssCode::new(hx, hz), Err(QuantumError::NonCommuting)));
    }
}
