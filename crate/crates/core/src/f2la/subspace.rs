use super::bitvec::BitVec;
use super::matrix::F2Matrix;
use super::F2Error;

/// Subspace of F₂ⁿ held as a list of independent row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Subspace {
    ambient_dim: usize,
    basis: F2Matrix,
}

impl F2Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: F2Matrix::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: F2Matrix::identity(ambient_dim) }
    }

    /// Span of arbitrary (possibly dependent) rows, stored in RREF.
    pub fn span_of_rows(m: &F2Matrix) -> Self {
        let mut r = m.clone();
        let piv = r.rref_in_place();
        let keep: Vec<usize> = (0..piv.len()).collect();
        Self { ambient_dim: m.cols(), basis: r.select_rows(&keep) }
    }

    pub fn span_of(vectors: &[BitVec], ambient_dim: usize) -> Self {
        Self::span_of_rows(&F2Matrix::from_bitvecs(vectors, ambient_dim))
    }

    /// Wraps rows already known to be independent.
    pub(crate) fn from_independent_rows(basis: F2Matrix) -> Self {
        debug_assert_eq!(basis.rank(), basis.rows());
        Self { ambient_dim: basis.cols(), basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Basis vectors as matrix rows.
    pub fn basis(&self) -> &F2Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<BitVec> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let stacked = self.basis.vstack(&F2Matrix::from_bitvecs(std::slice::from_ref(v), self.ambient_dim)).unwrap();
        stacked.rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &F2Subspace) -> bool {
        if other.ambient_dim != self.ambient_dim {
            return false;
        }
        self.basis.vstack(&other.basis).unwrap().rank() == self.dim()
    }

    pub fn sum(&self, other: &F2Subspace) -> Result<F2Subspace, F2Error> {
        Ok(Self::span_of_rows(&self.basis.vstack(&other.basis)?))
    }
}

/// dim Z − dim B, after checking B ⊆ Z.
pub fn quotient_dim(z: &F2Subspace, b: &F2Subspace) -> Result<usize, F2Error> {
    if z.ambient_dim() != b.ambient_dim() {
        return Err(F2Error::DimensionMismatch {
            op: "quotient_dim",
            left: (z.dim(), z.ambient_dim()),
            right: (b.dim(), b.ambient_dim()),
        });
    }
    if !z.contains_subspace(b) {
        return Err(F2Error::ContainmentError);
    }
    Ok(z.dim() - b.dim())
}

/// Basis of {x : Mx = 0}. For each free column f of RREF(M) the basis
/// vector has a one at f and the pivot entries that cancel it; vectors come
/// out ordered by free column.
pub fn kernel_basis(m: &F2Matrix) -> F2Subspace {
    let n = m.cols();
    let mut r = m.clone();
    let pivots = r.rref_in_place();
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut basis = F2Matrix::zeros(free.len(), n);
    // column f of the RREF tells which pivot variables depend on f
    let rt = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose();
    for (k, &f) in free.iter().enumerate() {
        basis.set(k, f, true);
        for i in rt.row(f).iter_ones() {
            basis.set(k, pivots[i], true);
        }
    }
    F2Subspace::from_independent_rows(basis)
}

/// Column space of M as a subspace of F₂^{rows}.
pub fn image(m: &F2Matrix) -> F2Subspace {
    F2Subspace::span_of_rows(&m.transpose())
}

/// Any x with Mx = b, or `None`.
pub fn solve(m: &F2Matrix, b: &BitVec) -> Result<Option<BitVec>, F2Error> {
    if b.len() != m.rows() {
        return Err(F2Error::DimensionMismatch { op: "solve", left: m.shape(), right: (b.len(), 1) });
    }
    let n = m.cols();
    let bm = F2Matrix::from_columns(std::slice::from_ref(b), m.rows());
    let mut aug = m.hstack(&bm)?;
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = BitVec::zeros(n);
    for (i, &c) in pivots.iter().enumerate() {
        if aug.get(i, n) {
            x.set(c, true);
        }
    }
    Ok(Some(x))
}

/// Incremental row reducer: keeps vectors with distinct leading (lowest)
/// bits, each tagged with the combination of inserted vectors it came from.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<(usize, BitVec, BitVec)>,
    inserted: usize,
    tag_cap: usize,
}

impl EchelonBasis {
    /// `tag_cap` bounds how many insertions are tracked in tags.
    pub fn new(dim: usize, tag_cap: usize) -> Self {
        Self { dim, rows: Vec::new(), inserted: 0, tag_cap }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the basis; returns the residue and the tag of the
    /// combination that was subtracted.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut v = v.clone();
        let mut tag = BitVec::zeros(self.tag_cap);
        for (p, row, t) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
                tag.xor_assign(t);
            }
        }
        (v, tag)
    }

    pub fn is_in_span(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v`; returns `true` if it was independent. Dependent inputs
    /// still consume a tag slot.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.dim);
        let idx = self.inserted;
        self.inserted += 1;
        let (r, mut tag) = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        if idx < self.tag_cap {
            tag.toggle(idx);
        }
        // keep later rows free of the new pivot so reduce() stays one pass
        for (_, row, t) in self.rows.iter_mut() {
            if row.get(p) {
                row.xor_assign(&r);
                t.xor_assign(&tag);
            }
        }
        let pos = self.rows.partition_point(|(q, _, _)| *q < p);
        self.rows.insert(pos, (p, r, tag));
        true
    }

    pub fn vectors(&self) -> Vec<BitVec> {
        self.rows.iter().map(|(_, r, _)| r.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = F2Matrix::from_fn(6, 11, |i, j| (i * 3 + j * j) % 4 == 1);
        let k = kernel_basis(&m);
        assert_eq!(k.dim() + m.rank(), 11);
        for v in k.vectors() {
            assert!(m.mul_vec(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn quotient_requires_containment() {
        let z = F2Subspace::span_of(&[BitVec::from_bits(&[1, 0, 0])], 3);
        let b = F2Subspace::span_of(&[BitVec::from_bits(&[0, 1, 0])], 3);
        assert_eq!(quotient_dim(&z, &b), Err(F2Error::ContainmentError));
        assert_eq!(quotient_dim(&z, &F2Subspace::zero(3)), Ok(1));
    }

    #[test]
    fn echelon_tags_reconstruct_vectors() {
        let inputs: Vec<BitVec> = (0..8u32)
            .map(|i| BitVec::from_bools(&(0..10).map(|j| (i * 7 + j * 5) % 3 == 0).collect::<Vec<_>>()))
            .collect();
        let mut e = EchelonBasis::new(10, inputs.len());
        for v in &inputs {
            e.insert(v);
        }
        for (p, row, tag) in &e.rows {
            assert!(row.get(*p));
            let mut acc = BitVec::zeros(10);
            for i in tag.iter_ones() {
                acc.xor_assign(&inputs[i]);
            }
            assert_eq!(&acc, row);
        }
    }
}
