use super::{CssCode, QuantumError};
use crate::complexes::ChainComplex;
use crate::f2la::{kernel_basis, BitVec, F2Matrix};
use crate::products::HomologySplit;

/// A CSS code with H₁ = H₁^L ⊕ H₁^G; only the logical part stores
/// information.
#[derive(Clone, Debug)]
pub struct SubsystemCssCode {
    base: CssCode,
    logical_z: F2Matrix,
    gauge_z: F2Matrix,
    logical_x: F2Matrix,
}

impl SubsystemCssCode {
    /// Splits H₁ of `base` by the given logical and gauge cycle
    /// representatives. The X side is H^1_L, the cohomology classes
    /// vanishing on every gauge cycle.
    pub fn new(base: CssCode, logical: &[BitVec], gauge: &[BitVec]) -> Result<Self, QuantumError> {
        let n = base.n();
        let hom = base.z_homology();
        if logical.len() + gauge.len() != hom.dim() {
            return Err(QuantumError::ShapeMismatch(format!(
                "{} logical + {} gauge classes for dim H₁ = {}",
                logical.len(),
                gauge.len(),
                hom.dim()
            )));
        }
        let coords: Vec<BitVec> = logical
            .iter()
            .chain(gauge)
            .map(|z| hom.coordinates(z).ok_or_else(|| QuantumError::ShapeMismatch("representative is not a cycle".into())))
            .collect::<Result<_, _>>()?;
        if F2Matrix::from_bitvecs(&coords, hom.dim()).rank() != hom.dim() {
            return Err(QuantumError::ShapeMismatch("logical and gauge classes do not span H₁".into()));
        }
        let cocycles = base.x_logicals();
        let gauge_m = F2Matrix::from_bitvecs(gauge, n);
        // a·cocycles annihilates every gauge cycle
        let pairing = cocycles.mul(&gauge_m.transpose())?;
        let combos = kernel_basis(&pairing.transpose());
        let logical_x = combos.basis().mul(cocycles)?;
        Ok(Self { logical_z: F2Matrix::from_bitvecs(logical, n), gauge_z: gauge_m, logical_x, base })
    }

    pub fn base(&self) -> &CssCode {
        &self.base
    }

    /// Number of logical qubits K.
    pub fn k(&self) -> usize {
        self.logical_z.rows()
    }

    pub fn gauge_count(&self) -> usize {
        self.gauge_z.rows()
    }

    pub fn logical_z(&self) -> &F2Matrix {
        &self.logical_z
    }

    pub fn gauge_z(&self) -> &F2Matrix {
        &self.gauge_z
    }

    /// Cocycle representatives of H^1_L.
    pub fn logical_x(&self) -> &F2Matrix {
        &self.logical_x
    }
}

/// Subsystem code of a complex with H₁^L the horizontal part of the split.
pub fn subsystem_from_split(total: &ChainComplex, split: &HomologySplit) -> Result<SubsystemCssCode, QuantumError> {
    let base = super::css_from_complex(total, 1)?;
    SubsystemCssCode::new(base, split.h_basis(), split.v_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::torus_complex;
    use crate::quantum::{css_from_complex, dressed_distance, exact_css_distance, PauliType, SearchOptions};

    #[test]
    fn toric_with_one_gauge_qubit() {
        let q = css_from_complex(&torus_complex(3).unwrap(), 1).unwrap();
        let reps: Vec<BitVec> = (0..2).map(|i| q.z_logicals().row(i)).collect();
        let s = SubsystemCssCode::new(q.clone(), &reps[..1], &reps[1..]).unwrap();
        assert_eq!((s.k(), s.gauge_count(), s.logical_x().rows()), (1, 1, 1));
        // compatible splitting: H^1_L pairs perfectly with H₁^L
        assert_eq!(s.logical_x().mul(&s.logical_z().transpose()).unwrap().rank(), 1);
        assert!(s.logical_x().mul(&s.gauge_z().transpose()).unwrap().is_zero());
        let opts = SearchOptions::default();
        for p in [PauliType::X, PauliType::Z] {
            let dressed = dressed_distance(&s, p, &opts).unwrap().distance.exact().unwrap();
            assert!(dressed <= exact_css_distance(&q, p, &opts).unwrap().0);
            assert_eq!(dressed, 3);
        }
    }

    #[test]
    fn no_gauge_reduces_to_bare() {
        let q = css_from_complex(&torus_complex(3).unwrap(), 1).unwrap();
        let reps: Vec<BitVec> = (0..2).map(|i| q.z_logicals().row(i)).collect();
        let s = SubsystemCssCode::new(q.clone(), &reps, &[]).unwrap();
        assert_eq!(s.k(), 2);
        let opts = SearchOptions::default();
        assert_eq!(
            dressed_distance(&s, PauliType::Z, &opts).unwrap().distance.exact(),
            Some(exact_css_distance(&q, PauliType::Z, &opts).unwrap().0)
        );
    }

    #[test]
    fn rejects_incomplete_split() {
        let q = css_from_complex(&torus_complex(3).unwrap(), 1).unwrap();
        let r = q.z_logicals().row(0);
        assert!(SubsystemCssCode::new(q.clone(), &[r.clone()], &[]).is_err());
        assert!(SubsystemCssCode::new(q, &[r.clone()], &[r]).is_err());
    }
}
