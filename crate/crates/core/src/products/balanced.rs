use serde::Serialize;

use super::{CellAction, ProductError};
use crate::complexes::{total_complex, ChainComplex, DoubleComplex};
use crate::f2la::F2Matrix;

/// Basis of C_p ⊗_H D_q: the orbits of basis pairs (c, d) under
/// (c, d) ↦ (c·g, g⁻¹·d).
///
/// Each orbit is represented by its member with the smallest (d, c), and
/// orbits are listed by their representatives in (c, d) order. With a
/// trivial group this is the lexicographic tensor basis; when H acts freely
/// on D with the fixed cell y at index 0 in every orbit, orbit [c ⊗ y] sits
/// at position c.
#[derive(Clone, Debug)]
pub struct OrbitBasis {
    right_dim: usize,
    index: Vec<usize>,
    reps: Vec<(usize, usize)>,
}

impl OrbitBasis {
    fn new(left: &[usize], right: &[usize], order: usize) -> Self {
        let (n, m) = (left.len(), right.len());
        let mut right_inv = vec![0; m];
        for (d, &x) in right.iter().enumerate() {
            right_inv[x] = d;
        }
        let mut raw = vec![usize::MAX; n * m];
        let mut reps = Vec::new();
        for c in 0..n {
            for d in 0..m {
                if raw[c * m + d] != usize::MAX {
                    continue;
                }
                let id = reps.len();
                let (mut x, mut y) = (c, d);
                let mut best = (d, c);
                for _ in 0..order {
                    raw[x * m + y] = id;
                    best = best.min((y, x));
                    x = left[x];
                    y = right_inv[y];
                }
                reps.push((best.1, best.0));
            }
        }
        let mut order_of: Vec<usize> = (0..reps.len()).collect();
        order_of.sort_by_key(|&o| reps[o]);
        let mut rank = vec![0; reps.len()];
        for (pos, &o) in order_of.iter().enumerate() {
            rank[o] = pos;
        }
        Self {
            right_dim: m,
            index: raw.into_iter().map(|o| rank[o]).collect(),
            reps: order_of.into_iter().map(|o| reps[o]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Position of the orbit of (c, d).
    pub fn orbit_of(&self, c: usize, d: usize) -> usize {
        self.index[c * self.right_dim + d]
    }

    pub fn rep(&self, o: usize) -> (usize, usize) {
        self.reps[o]
    }
}

/// C ⊠_H D and its total complex C ⊗_H D. The horizontal differential is
/// ∂^C ⊗ id and the vertical one id ⊗ ∂^D.
#[derive(Clone, Debug)]
pub struct BalancedProductComplex {
    left: CellAction,
    right: CellAction,
    bases: Vec<Vec<OrbitBasis>>,
    double: DoubleComplex,
    total: ChainComplex,
}

pub fn balanced_product(left: &CellAction, right: &CellAction) -> Result<BalancedProductComplex, ProductError> {
    if left.order() != right.order() {
        return Err(ProductError::DimensionMismatch(format!("group orders {} and {}", left.order(), right.order())));
    }
    let (c, d) = (left.complex(), right.complex());
    let bases: Vec<Vec<OrbitBasis>> = c
        .degrees()
        .map(|p| d.degrees().map(|q| OrbitBasis::new(left.perm(p), right.perm(q), left.order())).collect())
        .collect();
    let (p0, q0) = (c.min_degree(), d.min_degree());
    let np = bases.len();
    let nq = bases[0].len();
    let dims: Vec<Vec<usize>> = bases.iter().map(|r| r.iter().map(OrbitBasis::dim).collect()).collect();
    let mut h = vec![vec![F2Matrix::zeros(0, 0); nq]; np];
    let mut v = vec![vec![F2Matrix::zeros(0, 0); nq]; np];
    for i in 0..np {
        let p = p0 + i as i32;
        for j in 0..nq {
            let q = q0 + j as i32;
            let src = &bases[i][j];
            if i > 0 {
                let dc = c.diff(p).transpose();
                let dst = &bases[i - 1][j];
                let mut m = F2Matrix::zeros(dst.dim(), src.dim());
                for o in 0..src.dim() {
                    let (cell, y) = src.rep(o);
                    for t in dc.row_support(cell) {
                        m.toggle(dst.orbit_of(t, y), o);
                    }
                }
                h[i][j] = m;
            }
            if j > 0 {
                let dd = d.diff(q).transpose();
                let dst = &bases[i][j - 1];
                let mut m = F2Matrix::zeros(dst.dim(), src.dim());
                for o in 0..src.dim() {
                    let (x, cell) = src.rep(o);
                    for t in dd.row_support(cell) {
                        m.toggle(dst.orbit_of(x, t), o);
                    }
                }
                v[i][j] = m;
            }
        }
    }
    let double = DoubleComplex::new(p0, q0, dims, h, v)?;
    let total = total_complex(&double);
    Ok(BalancedProductComplex { left: left.clone(), right: right.clone(), bases, double, total })
}

impl BalancedProductComplex {
    pub fn left(&self) -> &CellAction {
        &self.left
    }

    pub fn right(&self) -> &CellAction {
        &self.right
    }

    pub fn double(&self) -> &DoubleComplex {
        &self.double
    }

    pub fn total(&self) -> &ChainComplex {
        &self.total
    }

    pub fn basis(&self, p: i32, q: i32) -> &OrbitBasis {
        let i = (p - self.left.complex().min_degree()) as usize;
        let j = (q - self.right.complex().min_degree()) as usize;
        &self.bases[i][j]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BalancedKunnethReport {
    pub degree: i32,
    pub total: usize,
    /// Σ dim H_p(C) ⊗_H H_q(D), from the induced actions on homology.
    pub expected: usize,
}

impl BalancedKunnethReport {
    pub fn holds(&self) -> bool {
        self.total == self.expected
    }
}

/// dim (V ⊗ W)/⟨vg ⊗ w − v ⊗ gw⟩ for the generator's matrices on V and W.
pub fn balanced_tensor_dim(a: &F2Matrix, b: &F2Matrix) -> usize {
    let (n, m) = (a.rows(), b.rows());
    let rel = a.kron(&F2Matrix::identity(m)).add(&F2Matrix::identity(n).kron(b)).expect("square maps");
    n * m - rel.rank()
}

/// Compares dim H_n(C ⊗_H D) with Σ_{p+q=n} dim H_p(C) ⊗_H H_q(D); the
/// right side never looks at the product complex. Needs |H| odd.
pub fn verify_balanced_kunneth(bp: &BalancedProductComplex, n: i32) -> Result<BalancedKunnethReport, ProductError> {
    let order = bp.left.order();
    if order % 2 == 0 {
        return Err(ProductError::EvenOrder(order));
    }
    let total = if bp.total.in_range(n) { bp.total.homology_dim(n)? } else { 0 };
    let mut expected = 0;
    for p in bp.left.complex().degrees() {
        let q = n - p;
        if !bp.right.complex().in_range(q) {
            continue;
        }
        let (_, a) = bp.left.on_homology(p)?;
        let (_, b) = bp.right.on_homology(q)?;
        expected += balanced_tensor_dim(&a, &b);
    }
    Ok(BalancedKunnethReport { degree: n, total, expected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cycle_graph_complex, tensor_complex};

    fn rotation_by(ell: usize, step: usize, order: usize) -> CellAction {
        let c = cycle_graph_complex(ell).unwrap();
        let rot: Vec<usize> = (0..ell).map(|i| (i + step) % ell).collect();
        CellAction::new(c, order, vec![rot.clone(), rot]).unwrap()
    }

    #[test]
    fn trivial_group_gives_tensor_product() {
        let c = cycle_graph_complex(3).unwrap();
        let d = cycle_graph_complex(4).unwrap();
        let bp = balanced_product(&CellAction::trivial(c.clone(), 1), &CellAction::trivial(d.clone(), 1)).unwrap();
        assert_eq!(bp.total(), &tensor_complex(&c, &d));
    }

    #[test]
    fn free_action_divides_dimensions() {
        let ell = 5;
        let left = rotation_by(3 * ell, 3, ell);
        let right = CellAction::cycle_rotation(ell).unwrap();
        let bp = balanced_product(&left, &right).unwrap();
        assert_eq!(bp.total().dims(), &[3 * ell, 6 * ell, 3 * ell]);
        for n in 0..=2 {
            assert!(verify_balanced_kunneth(&bp, n).unwrap().holds());
        }
        // the circle case puts [c ⊗ y_0] at position c
        let b = bp.basis(1, 0);
        for c in 0..3 * ell {
            assert_eq!(b.orbit_of(c, 0), c);
        }
    }

    #[test]
    fn coinvariants_of_trivial_module() {
        let left = rotation_by(6, 2, 3);
        let w = CellAction::trivial(ChainComplex::single(0, 1), 3);
        let bp = balanced_product(&left, &w).unwrap();
        assert_eq!(bp.total().dims(), &[left.coinvariants_dim(0), left.coinvariants_dim(1)]);
        assert_eq!(bp.total().dims(), &[2, 2]);
    }

    #[test]
    fn even_order_rejected_for_kunneth() {
        let bp = balanced_product(&rotation_by(4, 2, 2), &CellAction::cycle_rotation(2).unwrap()).unwrap();
        assert_eq!(verify_balanced_kunneth(&bp, 1).unwrap_err(), ProductError::EvenOrder(2));
    }
}
