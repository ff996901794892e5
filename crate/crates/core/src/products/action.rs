use super::ProductError;
use crate::algebra::GroupAlgebraMatrix;
use crate::complexes::{cycle_graph_complex, ChainComplex, HomologyBasis};
use crate::f2la::{BitVec, F2Matrix};
use crate::graphs::GroupAction;
use crate::tanner::TannerComplex;

/// Z_ℓ acting on a chain complex by permuting basis cells.
///
/// `perms[i]` is the generator on C_{min+i}. Whether it is read as a left
/// or a right action is up to the product that consumes it; for a cyclic
/// group the two agree.
#[derive(Clone, Debug)]
pub struct CellAction {
    complex: ChainComplex,
    order: usize,
    perms: Vec<Vec<usize>>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl CellAction {
    pub fn new(complex: ChainComplex, order: usize, perms: Vec<Vec<usize>>) -> Result<Self, ProductError> {
        if order == 0 || perms.len() != complex.dims().len() {
            return Err(ProductError::ActionInvalid(format!("{} permutations for {} degrees", perms.len(), complex.dims().len())));
        }
        for (i, p) in perms.iter().enumerate() {
            let degree = complex.min_degree() + i as i32;
            if p.len() != complex.dims()[i] || !is_permutation(p) {
                return Err(ProductError::ActionInvalid(format!("degree {degree}: not a permutation of the basis")));
            }
            if (0..p.len()).any(|c| (0..order).fold(c, |x, _| p[x]) != c) {
                return Err(ProductError::ActionInvalid(format!("degree {degree}: generator order does not divide {order}")));
            }
        }
        let a = Self { complex, order, perms };
        for degree in a.complex.min_degree() + 1..=a.complex.max_degree() {
            if !a.commutes_at(degree) {
                return Err(ProductError::ActionNotChainMap { degree });
            }
        }
        Ok(a)
    }

    fn commutes_at(&self, degree: i32) -> bool {
        let dt = self.complex.diff(degree).transpose();
        let (src, dst) = (self.perm(degree), self.perm(degree - 1));
        (0..dt.rows()).all(|c| {
            let mut moved: Vec<usize> = dt.row_support(c).into_iter().map(|x| dst[x]).collect();
            moved.sort_unstable();
            moved == dt.row_support(src[c])
        })
    }

    /// Every cell fixed, for any `order`.
    pub fn trivial(complex: ChainComplex, order: usize) -> Self {
        let perms = complex.dims().iter().map(|&d| (0..d).collect()).collect();
        Self { complex, order, perms }
    }

    /// Translation τ_i ↦ τ_{i+1}, σ_i ↦ σ_{i+1} on C(C_ℓ).
    pub fn cycle_rotation(ell: usize) -> Result<Self, ProductError> {
        let c = cycle_graph_complex(ell)?;
        let rot: Vec<usize> = (0..ell).map(|i| (i + 1) % ell).collect();
        Self::new(c, ell, vec![rot.clone(), rot])
    }

    /// The 1-complex R^n → R^m of an m×n matrix over R = F₂[Z_ℓ], lifted,
    /// with the generator shifting position t to t+1 inside every block.
    pub fn from_group_algebra(m: &GroupAlgebraMatrix) -> Result<Self, ProductError> {
        let l = m.ell;
        let shift = |blocks: usize| -> Vec<usize> { (0..blocks * l).map(|i| i / l * l + (i % l + 1) % l).collect() };
        Self::new(ChainComplex::one_complex(m.lift()), l, vec![shift(m.rows), shift(m.cols)])
    }

    /// The action of `act` on C(X, L): edges move with the graph and local
    /// check j at v goes to check j at v·h.
    pub fn tanner(t: &TannerComplex, act: &GroupAction) -> Result<Self, ProductError> {
        if act.graph() != t.graph() {
            return Err(ProductError::ActionInvalid("action is on a different graph".into()));
        }
        let r = t.checks_per_vertex();
        let x = t.graph();
        let edges: Vec<usize> = (0..x.num_edges()).map(|e| act.act_edge(e, 1)).collect();
        let checks: Vec<usize> = (0..x.num_vertices() * r).map(|i| act.act_vertex(i / r, 1) * r + i % r).collect();
        Self::new(t.complex().clone(), act.order(), vec![checks, edges])
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Generator on the basis of C_degree (empty outside the range).
    pub fn perm(&self, degree: i32) -> &[usize] {
        if self.complex.in_range(degree) {
            &self.perms[(degree - self.complex.min_degree()) as usize]
        } else {
            &[]
        }
    }

    /// Image of `cell` under the generator to the power k.
    pub fn act(&self, degree: i32, cell: usize, k: usize) -> usize {
        let p = self.perm(degree);
        (0..k % self.order).fold(cell, |c, _| p[c])
    }

    /// Every orbit on every basis has exactly `order` cells.
    pub fn is_free(&self) -> bool {
        self.complex.degrees().all(|d| {
            let p = self.perm(d);
            (0..p.len()).all(|c| {
                let mut x = p[c];
                let mut len = 1;
                while x != c {
                    x = p[x];
                    len += 1;
                }
                len == self.order
            })
        })
    }

    /// Number of orbits on the basis of C_degree, which is the dimension of
    /// the coinvariants of that permutation module.
    pub fn coinvariants_dim(&self, degree: i32) -> usize {
        let p = self.perm(degree);
        let mut seen = vec![false; p.len()];
        let mut orbits = 0;
        for c in 0..p.len() {
            if seen[c] {
                continue;
            }
            orbits += 1;
            let mut x = c;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
            }
        }
        orbits
    }

    /// Homology basis of H_degree and the generator's matrix on it, column i
    /// being the coordinates of g·z_i.
    pub fn on_homology(&self, degree: i32) -> Result<(HomologyBasis, F2Matrix), ProductError> {
        let hb = self.complex.homology_basis(degree)?;
        let p = self.perm(degree);
        let cols: Vec<BitVec> = hb
            .representatives()
            .iter()
            .map(|z| {
                let moved = BitVec::from_support(z.len(), z.iter_ones().map(|c| p[c]));
                hb.coordinates(&moved).expect("the action maps cycles to cycles")
            })
            .collect();
        let dim = hb.dim();
        Ok((hb, F2Matrix::from_columns(&cols, dim)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupAlgebraElem;

    #[test]
    fn rotation_is_free_and_trivial_on_homology() {
        let a = CellAction::cycle_rotation(5).unwrap();
        assert!(a.is_free());
        for d in 0..=1 {
            let (_, m) = a.on_homology(d).unwrap();
            assert_eq!(m, F2Matrix::identity(1));
        }
        assert_eq!(a.coinvariants_dim(1), 1);
    }

    #[test]
    fn rejects_non_chain_maps() {
        let c = cycle_graph_complex(4).unwrap();
        // rotate vertices but not edges
        let err = CellAction::new(c.clone(), 4, vec![vec![1, 2, 3, 0], vec![0, 1, 2, 3]]).unwrap_err();
        assert_eq!(err, ProductError::ActionNotChainMap { degree: 1 });
        assert!(CellAction::new(c.clone(), 3, vec![vec![1, 2, 3, 0]; 2]).is_err());
        assert!(CellAction::new(c, 4, vec![vec![0, 0, 1, 2]; 2]).is_err());
    }

    #[test]
    fn group_algebra_shift_commutes() {
        let mut m = GroupAlgebraMatrix::zeros(2, 3, 5);
        m.set(0, 0, GroupAlgebraElem::from_exponents(5, &[0, 2]));
        m.set(1, 2, GroupAlgebraElem::from_exponents(5, &[1, 3, 4]));
        m.set(0, 1, GroupAlgebraElem::monomial(5, 4));
        let a = CellAction::from_group_algebra(&m).unwrap();
        assert!(a.is_free());
        assert_eq!(a.coinvariants_dim(1), 3);
    }
}
