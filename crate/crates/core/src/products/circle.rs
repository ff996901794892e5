use serde::Serialize;

use super::{
    balanced_product, cycle_element, fiber_bundle_complex, lifted_product, BalancedProductComplex, BundleConnection, CellAction,
    FiberAuto, FiberBundleComplex, ProductError,
};
use crate::algebra::{GroupAlgebraElem, GroupAlgebraMatrix};
use crate::complexes::{cycle_graph_complex, ChainComplex, HomologyBasis};
use crate::f2la::{BitVec, EchelonBasis, F2Matrix};
use crate::graphs::{quotient_graph, GroupAction, Quotient};
use crate::tanner::{build_tanner_labeled, TannerComplex};

/// C(X, L) ⊗_{Z_ℓ} C(C_ℓ) for a free Z_ℓ action on X with ℓ odd, together
/// with the quotient Tanner code C(X/H, L) it is built over.
///
/// Degree 1 is [u | v]: u ∈ C_1(X) ⊗_H C_0(C_ℓ) (|X¹| cells, [e ⊗ y_0] at
/// position e) and v ∈ (C_0(X) ⊗ L_0) ⊗_H C_1(C_ℓ).
#[derive(Clone, Debug)]
pub struct CircleProduct {
    tanner: TannerComplex,
    action: GroupAction,
    quotient: Quotient,
    quotient_tanner: TannerComplex,
    product: BalancedProductComplex,
}

pub fn circle_balanced_product(t: &TannerComplex, act: &GroupAction) -> Result<CircleProduct, ProductError> {
    let ell = act.order();
    if ell % 2 == 0 {
        return Err(ProductError::EvenOrder(ell));
    }
    let left = CellAction::tanner(t, act)?;
    if !left.is_free() {
        return Err(ProductError::ActionInvalid("action is not free".into()));
    }
    let quotient = quotient_graph(act)?;
    let quotient_tanner = build_tanner_labeled(&quotient.base, t.local(), &format!("{} (descended)", t.labeling()))?;
    let product = balanced_product(&left, &CellAction::cycle_rotation(ell)?)?;
    Ok(CircleProduct { tanner: t.clone(), action: act.clone(), quotient, quotient_tanner, product })
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    /// Balanced product equals the fiber-bundle complex after aligning
    /// [c ⊗ y_0] with (base cell of c) ⊗ y_k, c = R·h^k.
    pub balanced_equals_bundle: bool,
    /// Fiber-bundle complex equals LP(A, 1 + g^{ℓ−1}) bit for bit.
    pub bundle_equals_lifted: bool,
    pub dims: Vec<usize>,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.balanced_equals_bundle && self.bundle_equals_lifted
    }
}

fn permute(m: &F2Matrix, rows: &[usize], cols: &[usize]) -> F2Matrix {
    let mut out = F2Matrix::zeros(m.rows(), m.cols());
    let mt = m.transpose();
    for j in 0..m.cols() {
        for i in mt.row_support(j) {
            out.set(rows[i], cols[j], true);
        }
    }
    out
}

impl CircleProduct {
    pub fn ell(&self) -> usize {
        self.action.order()
    }

    pub fn tanner(&self) -> &TannerComplex {
        &self.tanner
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn quotient_tanner(&self) -> &TannerComplex {
        &self.quotient_tanner
    }

    pub fn product(&self) -> &BalancedProductComplex {
        &self.product
    }

    pub fn total(&self) -> &ChainComplex {
        self.product.total()
    }

    /// |X¹| + |X⁰|(s − k_L).
    pub fn middle_dim(&self) -> usize {
        self.total().dim(1)
    }

    /// Size of the horizontal block of degree 1.
    pub fn horizontal_dim(&self) -> usize {
        self.tanner.graph().num_edges()
    }

    /// (2k_L/s − 1)|X¹|/ℓ.
    pub fn rate_lower_bound(&self) -> f64 {
        self.tanner.rate_bound() / self.ell() as f64
    }

    /// C(X/H, L) ⊠_φ C(C_ℓ): the head end of each base edge E carries the
    /// rotation by φ(E), the tail end the identity.
    pub fn fiber_bundle(&self) -> Result<FiberBundleComplex, ProductError> {
        let base = self.quotient_tanner.complex();
        let fiber = cycle_graph_complex(self.ell())?;
        let r = self.quotient_tanner.checks_per_vertex();
        let g = &self.quotient.base;
        let id = FiberAuto::identity(&fiber);
        let dt = base.diff(1).transpose();
        let mut conn = BundleConnection::new();
        for e in 0..g.num_edges() {
            let [tail, _] = g.endpoints(e);
            for row in dt.row_support(e) {
                let phi = if row / r == tail { id.clone() } else { FiberAuto::rotation(self.ell(), self.quotient.connection.values[e]) };
                conn.insert((e, row), phi);
            }
        }
        fiber_bundle_complex(base, &fiber, conn)
    }

    /// The quotient Tanner differential over F₂[Z_ℓ]: 1 at the tail end of
    /// each base edge, g^{−φ(E)} at the head end.
    pub fn group_algebra_boundary(&self) -> GroupAlgebraMatrix {
        let l = self.ell();
        let g = &self.quotient.base;
        let h = self.quotient_tanner.local_check();
        let r = h.rows();
        let mut m = GroupAlgebraMatrix::zeros(g.num_vertices() * r, g.num_edges(), l);
        for e in 0..g.num_edges() {
            let [tail, head] = g.endpoints(e);
            let phi = self.quotient.connection.values[e];
            for (v, shift) in [(tail, 0), (head, (l - phi) % l)] {
                let lab = g.label_at(e, v);
                for j in 0..r {
                    if h.get(j, lab) {
                        let cur = m.get(v * r + j, e).clone();
                        m.set(v * r + j, e, &cur + &GroupAlgebraElem::monomial(l, shift));
                    }
                }
            }
        }
        m
    }

    pub fn lifted(&self) -> Result<ChainComplex, ProductError> {
        let mut b = GroupAlgebraMatrix::zeros(1, 1, self.ell());
        b.set(0, 0, cycle_element(self.ell()));
        lifted_product(&self.group_algebra_boundary(), &b)
    }

    /// Position in the fiber-bundle basis of each balanced-product basis
    /// vector, degree by degree (degrees 0, 1, 2).
    pub fn alignment(&self) -> Vec<Vec<usize>> {
        let l = self.ell();
        let x = self.tanner.graph();
        let r = self.tanner.checks_per_vertex();
        let edge: Vec<usize> = (0..x.num_edges())
            .map(|e| {
                let (b, k) = self.quotient.edge_lift(x, e);
                b * l + k
            })
            .collect();
        let check: Vec<usize> = (0..x.num_vertices() * r)
            .map(|i| {
                let (a, k) = self.quotient.vertex_lift[i / r];
                (a * r + i % r) * l + k
            })
            .collect();
        let shifted = |p: &[usize], by: usize| p.iter().map(|&i| i + by).collect::<Vec<_>>();
        let mut deg1 = edge.clone();
        deg1.extend(shifted(&check, edge.len()));
        vec![check, deg1, edge]
    }

    pub fn triple_equivalence(&self) -> Result<EquivalenceReport, ProductError> {
        let fb = self.fiber_bundle()?;
        let lp = self.lifted()?;
        let perm = self.alignment();
        let bp = self.total();
        let balanced_equals_bundle = bp.dims() == fb.total().dims()
            && (1..=2).all(|n| permute(&bp.diff(n), &perm[n as usize - 1], &perm[n as usize]) == fb.total().diff(n));
        Ok(EquivalenceReport {
            balanced_equals_bundle,
            bundle_equals_lifted: fb.total() == &lp,
            dims: bp.dims().to_vec(),
        })
    }

    /// ι: C_1(X/H) → Tot_1, Σ a_E E ↦ (Σ a_E Σ_{e∈E} [e ⊗ y_0], 0).
    pub fn iota(&self, x: &BitVec) -> BitVec {
        let orbit = &self.quotient.edge_orbit;
        BitVec::from_support(self.middle_dim(), (0..orbit.len()).filter(|&e| x.get(orbit[e])))
    }

    /// π: Tot_1 → C_1(X/H), (Σ a_e [e ⊗ y_0], v) ↦ Σ a_e eH.
    pub fn pi(&self, x: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.quotient.base.num_edges());
        for e in x.iter_ones().take_while(|&e| e < self.horizontal_dim()) {
            out.toggle(self.quotient.edge_orbit[e]);
        }
        out
    }

    pub fn homology_split(&self) -> Result<HomologySplit, ProductError> {
        let e = self.product.double();
        HomologySplit::new(self.total(), &e.hdiff(1, 0), &e.vdiff(0, 1))
    }
}

/// H_1 of a 2×2 total complex split into classes with a representative
/// (u, 0) and classes with a representative (0, v).
#[derive(Clone, Debug)]
pub struct HomologySplit {
    homology: HomologyBasis,
    h_basis: Vec<BitVec>,
    v_basis: Vec<BitVec>,
    reducer: EchelonBasis,
    boundaries: usize,
}

impl HomologySplit {
    /// `hdiff`: E_{1,0} → E_{0,0}; `vdiff`: E_{0,1} → E_{0,0}. Degree 1 of
    /// `total` is E_{1,0} ⊕ E_{0,1} in that order.
    pub fn new(total: &ChainComplex, hdiff: &F2Matrix, vdiff: &F2Matrix) -> Result<Self, ProductError> {
        let homology = total.homology_basis(1)?;
        let n = total.dim(1);
        let nh = hdiff.cols();
        let boundary = homology.boundary_space().vectors();
        let cap = boundary.len() + homology.dim();
        let mut reducer = EchelonBasis::new(n, cap);
        for b in &boundary {
            reducer.insert(b);
        }
        let full = boundary.len() + homology.dim();
        let pick = |cands: Vec<BitVec>, reducer: &mut EchelonBasis| {
            let mut out = Vec::new();
            for c in cands {
                if reducer.rank() == full {
                    break;
                }
                if !reducer.is_in_span(&c) {
                    reducer.insert(&c);
                    out.push(c);
                }
            }
            out
        };
        let pad = |v: BitVec, at: usize| BitVec::from_support(n, v.iter_ones().map(|i| i + at));
        let hk: Vec<BitVec> = crate::f2la::kernel_basis(hdiff).vectors().into_iter().map(|u| pad(u, 0)).collect();
        let h_basis = pick(hk, &mut reducer);
        let vk: Vec<BitVec> = crate::f2la::kernel_basis(vdiff).vectors().into_iter().map(|v| pad(v, nh)).collect();
        let v_basis = pick(vk, &mut reducer);
        if h_basis.len() + v_basis.len() != homology.dim() {
            return Err(ProductError::SplitIncomplete { horizontal: h_basis.len(), vertical: v_basis.len(), total: homology.dim() });
        }
        Ok(Self { homology, h_basis, v_basis, reducer, boundaries: boundary.len() })
    }

    pub fn horizontal_dim(&self) -> usize {
        self.h_basis.len()
    }

    pub fn vertical_dim(&self) -> usize {
        self.v_basis.len()
    }

    /// Representatives (u, 0).
    pub fn h_basis(&self) -> &[BitVec] {
        &self.h_basis
    }

    /// Representatives (0, v).
    pub fn v_basis(&self) -> &[BitVec] {
        &self.v_basis
    }

    pub fn homology(&self) -> &HomologyBasis {
        &self.homology
    }

    /// (p^h, p^v) coordinates of the class of a cycle `z`, or None if `z` is
    /// not a cycle.
    pub fn project(&self, z: &BitVec) -> Option<(BitVec, BitVec)> {
        if !self.homology.is_cycle(z) {
            return None;
        }
        let (res, tag) = self.reducer.reduce(z);
        debug_assert!(res.is_zero());
        let (nb, nh) = (self.boundaries, self.h_basis.len());
        Some((tag.slice(nb, nh), tag.slice(nb + nh, self.v_basis.len())))
    }

    /// p^h on the basis of [`Self::homology`]: column i holds the horizontal
    /// coordinates of its i-th class.
    pub fn ph_matrix(&self) -> F2Matrix {
        let cols: Vec<BitVec> = self.homology.representatives().iter().map(|z| self.project(z).unwrap().0).collect();
        F2Matrix::from_columns(&cols, self.horizontal_dim())
    }

    pub fn pv_matrix(&self) -> F2Matrix {
        let cols: Vec<BitVec> = self.homology.representatives().iter().map(|z| self.project(z).unwrap().1).collect();
        F2Matrix::from_columns(&cols, self.vertical_dim())
    }

    /// The class of `z` has a nonzero horizontal part.
    pub fn is_logical(&self, z: &BitVec) -> bool {
        self.project(z).is_some_and(|(h, _)| !h.is_zero())
    }
}
