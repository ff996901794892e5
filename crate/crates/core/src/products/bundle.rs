use std::collections::BTreeMap;

use serde::Serialize;

use super::ProductError;
use crate::complexes::{total_complex, ChainComplex, DoubleComplex};
use crate::f2la::{BitVec, F2Matrix};

/// A chain automorphism of a 1-complex F: `maps[q]` acts on F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberAuto {
    maps: [F2Matrix; 2],
}

fn permutation_matrix(p: &[usize]) -> F2Matrix {
    let mut m = F2Matrix::zeros(p.len(), p.len());
    for (i, &j) in p.iter().enumerate() {
        m.set(j, i, true);
    }
    m
}

impl FiberAuto {
    pub fn new(on_vertices: F2Matrix, on_edges: F2Matrix) -> Self {
        Self { maps: [on_vertices, on_edges] }
    }

    pub fn identity(fiber: &ChainComplex) -> Self {
        Self::new(F2Matrix::identity(fiber.dim(0)), F2Matrix::identity(fiber.dim(1)))
    }

    /// y_t ↦ y_{t+m} on C(C_ℓ), for vertices and edges alike.
    pub fn rotation(ell: usize, m: usize) -> Self {
        let p: Vec<usize> = (0..ell).map(|t| (t + m) % ell).collect();
        let pm = permutation_matrix(&p);
        Self::new(pm.clone(), pm)
    }

    /// τ_t ↦ τ_{−t}, σ_t ↦ σ_{−t−1} on C(C_ℓ).
    pub fn reflection(ell: usize) -> Self {
        let v: Vec<usize> = (0..ell).map(|t| (ell - t) % ell).collect();
        let e: Vec<usize> = (0..ell).map(|t| (2 * ell - t - 1) % ell).collect();
        Self::new(permutation_matrix(&v), permutation_matrix(&e))
    }

    pub fn map(&self, q: usize) -> &F2Matrix {
        &self.maps[q]
    }

    fn is_automorphism_of(&self, fiber: &ChainComplex) -> bool {
        let [a0, a1] = &self.maps;
        let d = fiber.diff(1);
        a0.shape() == (fiber.dim(0), fiber.dim(0))
            && a1.shape() == (fiber.dim(1), fiber.dim(1))
            && a0.rank() == a0.rows()
            && a1.rank() == a1.rows()
            && a0.mul(&d).unwrap() == d.mul(a1).unwrap()
    }

    /// Induces the identity on H_0(F) and H_1(F).
    pub fn trivial_on_homology(&self, fiber: &ChainComplex) -> Result<bool, ProductError> {
        for q in 0..=1 {
            let hb = fiber.homology_basis(q)?;
            for z in hb.representatives() {
                let moved = self.maps[q as usize].mul_vec(&z)?;
                if !hb.is_boundary(&moved.xor(&z)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Connection φ: one fiber automorphism per incidence (b¹, b⁰ ∈ ∂b¹).
pub type BundleConnection = BTreeMap<(usize, usize), FiberAuto>;

/// φ ≡ 1 on every incidence of `base`.
pub fn trivial_connection(base: &ChainComplex, fiber: &ChainComplex) -> BundleConnection {
    let dt = base.diff(1).transpose();
    let id = FiberAuto::identity(fiber);
    (0..dt.rows()).flat_map(|b1| dt.row_support(b1).into_iter().map(move |b0| (b1, b0))).map(|k| (k, id.clone())).collect()
}

/// B ⊠_φ F with ∂_φ(b¹ ⊗ f) = Σ_{b⁰ ∈ ∂b¹} b⁰ ⊗ φ(b¹, b⁰)(f) and vertical
/// map id ⊗ ∂^F. Bases are lexicographic with the base index major.
#[derive(Clone, Debug)]
pub struct FiberBundleComplex {
    base: ChainComplex,
    fiber: ChainComplex,
    connection: BundleConnection,
    double: DoubleComplex,
    total: ChainComplex,
}

fn check_one_complex(c: &ChainComplex) -> Result<(), ProductError> {
    if c.min_degree() == 0 && c.max_degree() == 1 {
        Ok(())
    } else {
        Err(ProductError::NotOneComplex)
    }
}

pub fn fiber_bundle_complex(
    base: &ChainComplex,
    fiber: &ChainComplex,
    connection: BundleConnection,
) -> Result<FiberBundleComplex, ProductError> {
    check_one_complex(base)?;
    check_one_complex(fiber)?;
    let db = base.diff(1);
    let dbt = db.transpose();
    let incidences: Vec<(usize, usize)> =
        (0..dbt.rows()).flat_map(|b1| dbt.row_support(b1).into_iter().map(move |b0| (b1, b0))).collect();
    for &(b1, b0) in &incidences {
        let phi = connection.get(&(b1, b0)).ok_or(ProductError::IncidenceMissing { b1, b0 })?;
        if !phi.is_automorphism_of(fiber) {
            return Err(ProductError::NotAutomorphism { b1, b0 });
        }
    }
    if let Some(&(b1, b0)) = connection.keys().find(|&&(b1, b0)| b1 >= db.cols() || b0 >= db.rows() || !db.get(b0, b1)) {
        return Err(ProductError::IncidenceMissing { b1, b0 });
    }
    let (b, f) = ([base.dim(0), base.dim(1)], [fiber.dim(0), fiber.dim(1)]);
    let dims = vec![vec![b[0] * f[0], b[0] * f[1]], vec![b[1] * f[0], b[1] * f[1]]];
    let mut h = vec![vec![F2Matrix::zeros(0, 0); 2]; 2];
    let mut v = vec![vec![F2Matrix::zeros(0, 0); 2]; 2];
    for q in 0..2 {
        let mut m = F2Matrix::zeros(b[0] * f[q], b[1] * f[q]);
        for &(b1, b0) in &incidences {
            m.xor_block(b0 * f[q], b1 * f[q], connection[&(b1, b0)].map(q));
        }
        h[1][q] = m;
    }
    for p in 0..2 {
        v[p][1] = F2Matrix::identity(b[p]).kron(&fiber.diff(1));
    }
    let double = DoubleComplex::new(0, 0, dims, h, v)?;
    let total = total_complex(&double);
    Ok(FiberBundleComplex { base: base.clone(), fiber: fiber.clone(), connection, double, total })
}

impl FiberBundleComplex {
    pub fn base(&self) -> &ChainComplex {
        &self.base
    }

    pub fn fiber(&self) -> &ChainComplex {
        &self.fiber
    }

    pub fn connection(&self) -> &BundleConnection {
        &self.connection
    }

    pub fn double(&self) -> &DoubleComplex {
        &self.double
    }

    pub fn total(&self) -> &ChainComplex {
        &self.total
    }

    /// π_*: Tot_1 → B_1, b ⊗ f ↦ ε(f) b on B_1 ⊗ F_0 and zero on B_0 ⊗ F_1.
    pub fn projection(&self, augmentation: &BitVec) -> F2Matrix {
        let (b1, f0) = (self.base.dim(1), self.fiber.dim(0));
        let mut m = F2Matrix::zeros(b1, self.total.dim(1));
        for b in 0..b1 {
            for f in augmentation.iter_ones() {
                m.set(b, b * f0 + f, true);
            }
        }
        m
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BundleKunnethReport {
    pub degree: i32,
    pub total: usize,
    pub expected: usize,
    /// π_* is an isomorphism H_1(B ⊗_φ F) → H_1(B); None unless the
    /// degree is 1, an augmentation is given, ε: H_0(F) → F₂ is an
    /// isomorphism and H_0(B) = 0.
    pub projection_iso: Option<bool>,
    /// π^*: H^1(B) → H^1(B ⊗_φ F) is an isomorphism, same conditions.
    pub restriction_iso: Option<bool>,
}

impl BundleKunnethReport {
    pub fn holds(&self) -> bool {
        self.total == self.expected && self.projection_iso != Some(false) && self.restriction_iso != Some(false)
    }
}

/// dim H_n(B ⊗_φ F) against Σ dim H_p(B)·dim H_q(F), after checking that
/// every φ value acts trivially on H_*(F). With an augmentation ε of F,
/// also checks that π_* and π^* are isomorphisms in degree 1.
pub fn verify_bundle_kunneth(
    fb: &FiberBundleComplex,
    n: i32,
    augmentation: Option<&BitVec>,
) -> Result<BundleKunnethReport, ProductError> {
    for (&(b1, b0), phi) in &fb.connection {
        if !phi.trivial_on_homology(&fb.fiber)? {
            return Err(ProductError::HypothesisFailed(format!("φ({b1}, {b0}) acts nontrivially on H(F)")));
        }
    }
    let total = if fb.total.in_range(n) { fb.total.homology_dim(n)? } else { 0 };
    let mut expected = 0;
    for p in 0..=1 {
        if (0..=1).contains(&(n - p)) {
            expected += fb.base.homology_dim(p)? * fb.fiber.homology_dim(n - p)?;
        }
    }
    let mut report = BundleKunnethReport { degree: n, total, expected, projection_iso: None, restriction_iso: None };
    let Some(eps) = augmentation else {
        return Ok(report);
    };
    if eps.len() != fb.fiber.dim(0) || !fb.fiber.diff(1).left_mul_vec(eps)?.is_zero() {
        return Err(ProductError::HypothesisFailed("ε∂^F ≠ 0".into()));
    }
    let h0f = fb.fiber.homology_basis(0)?;
    let eps_iso = h0f.dim() == 1 && h0f.representatives()[0].dot(eps);
    if n != 1 || !eps_iso || fb.base.homology_dim(0)? != 0 {
        return Ok(report);
    }
    let h1b = fb.base.homology_dim(1)?;
    let p = fb.projection(eps);
    let h1 = fb.total.homology_basis(1)?;
    let images: Vec<BitVec> = h1.representatives().iter().map(|z| p.mul_vec(z).unwrap()).collect();
    let image_rank = F2Matrix::from_bitvecs(&images, fb.base.dim(1)).rank();
    report.projection_iso = Some(h1.dim() == h1b && image_rank == h1b);
    // π^* is the transpose of π_*; push cohomology classes of B forward
    let pt = p.transpose();
    let co_b = fb.base.cohomology_basis(1)?;
    let co_t = fb.total.cohomology_basis(1)?;
    let mut coords = Vec::new();
    for y in co_b.representatives() {
        match co_t.coordinates(&pt.mul_vec(&y)?) {
            Some(c) => coords.push(c),
            None => {
                report.restriction_iso = Some(false);
                return Ok(report);
            }
        }
    }
    let r = if coords.is_empty() { 0 } else { F2Matrix::from_bitvecs(&coords, co_t.dim()).rank() };
    report.restriction_iso = Some(co_t.dim() == co_b.dim() && r == co_b.dim());
    Ok(report)
}
