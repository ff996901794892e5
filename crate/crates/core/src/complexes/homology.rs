use crate::f2la::{image, kernel_basis, BitVec, EchelonBasis, F2Matrix, F2Subspace};

/// Representatives of a basis of ker(out) / im(inc).
///
/// For homology, `out = ∂_i` and `inc = ∂_{i+1}`; for cohomology the
/// transposed maps are passed.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    degree: i32,
    out_map: F2Matrix,
    cycle_reps: F2Subspace,
    boundary_space: F2Subspace,
    reducer: EchelonBasis,
}

impl HomologyBasis {
    pub(crate) fn new(degree: i32, out_map: &F2Matrix, inc_map: &F2Matrix) -> Self {
        let z = kernel_basis(out_map);
        let b = image(inc_map);
        let n = z.ambient_dim();
        let nb = b.dim();
        let mut reducer = EchelonBasis::new(n, nb + z.dim());
        for v in b.vectors() {
            reducer.insert(&v);
        }
        let mut reps = Vec::new();
        let mut probe = reducer.clone();
        for v in z.vectors() {
            if probe.insert(&v) {
                reps.push(v);
            }
        }
        let mut reducer = EchelonBasis::new(n, nb + reps.len());
        for v in b.vectors().iter().chain(&reps) {
            let fresh = reducer.insert(v);
            debug_assert!(fresh);
        }
        Self {
            degree,
            out_map: out_map.clone(),
            cycle_reps: F2Subspace::from_independent_rows(F2Matrix::from_bitvecs(&reps, n)),
            boundary_space: b,
            reducer,
        }
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.cycle_reps.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.boundary_space.ambient_dim()
    }

    /// Cycles whose classes form a basis.
    pub fn cycle_reps(&self) -> &F2Subspace {
        &self.cycle_reps
    }

    pub fn representatives(&self) -> Vec<BitVec> {
        self.cycle_reps.vectors()
    }

    pub fn boundary_space(&self) -> &F2Subspace {
        &self.boundary_space
    }

    pub fn is_cycle(&self, z: &BitVec) -> bool {
        self.out_map.mul_vec(z).map(|v| v.is_zero()).unwrap_or(false)
    }

    pub fn is_boundary(&self, z: &BitVec) -> bool {
        self.boundary_space.contains(z)
    }

    /// Coordinates of the class of `z` in the representative basis, or
    /// `None` if `z` is not a cycle.
    pub fn coordinates(&self, z: &BitVec) -> Option<BitVec> {
        if !self.is_cycle(z) {
            return None;
        }
        let (res, tag) = self.reducer.reduce(z);
        debug_assert!(res.is_zero());
        let nb = self.boundary_space.dim();
        Some(tag.slice(nb, self.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::builders::cycle_graph_complex;
    use super::*;

    #[test]
    fn cycle_graph_h1_is_all_ones() {
        let c = cycle_graph_complex(4).unwrap();
        let h = c.homology_basis(1).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(h.representatives()[0], BitVec::ones(4));
        assert_eq!(h.coordinates(&BitVec::ones(4)).unwrap().to_bits(), vec![1]);
        assert_eq!(h.coordinates(&BitVec::unit(4, 0)), None);
    }

    #[test]
    fn coordinates_ignore_boundaries() {
        let c = cycle_graph_complex(5).unwrap();
        let h = c.homology_basis(0).unwrap();
        let v0 = BitVec::unit(5, 0);
        let v3 = BitVec::unit(5, 3);
        assert_eq!(h.coordinates(&v0).unwrap().to_bits(), vec![1]);
        assert_eq!(h.coordinates(&v3), h.coordinates(&v0));
        assert_eq!(h.coordinates(&v0.xor(&v3)).unwrap().to_bits(), vec![0]);
    }
}
