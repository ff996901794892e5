use super::chain::ChainComplex;
use super::ComplexError;
use crate::f2la::F2Matrix;

/// Double complex E_{p,q} on a rectangle of bidegrees.
///
/// `hdiff(p,q)`: E_{p,q} → E_{p−1,q}, `vdiff(p,q)`: E_{p,q} → E_{p,q−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleComplex {
    p0: i32,
    q0: i32,
    dims: Vec<Vec<usize>>,
    h: Vec<Vec<F2Matrix>>,
    v: Vec<Vec<F2Matrix>>,
}

impl DoubleComplex {
    /// `dims[i][j]` is dim E_{p0+i, q0+j}. `h[i][j]` is the horizontal map out
    /// of that cell (ignored, and may be empty-shaped, for i = 0); likewise
    /// `v[i][j]` for j = 0.
    pub fn new(
        p0: i32,
        q0: i32,
        dims: Vec<Vec<usize>>,
        h: Vec<Vec<F2Matrix>>,
        v: Vec<Vec<F2Matrix>>,
    ) -> Result<Self, ComplexError> {
        let np = dims.len();
        let nq = dims.first().map_or(0, Vec::len);
        if np == 0 || nq == 0 || dims.iter().any(|r| r.len() != nq) {
            return Err(ComplexError::ShapeMismatch("ragged double complex grid".into()));
        }
        let mut e = Self { p0, q0, dims, h, v };
        // normalise boundary maps to zero maps
        for j in 0..nq {
            e.h[0][j] = F2Matrix::zeros(0, e.dims[0][j]);
        }
        for i in 0..np {
            e.v[i][0] = F2Matrix::zeros(0, e.dims[i][0]);
        }
        for i in 0..np {
            for j in 0..nq {
                if i > 0 && e.h[i][j].shape() != (e.dims[i - 1][j], e.dims[i][j]) {
                    return Err(ComplexError::ShapeMismatch(format!("hdiff at ({i},{j})")));
                }
                if j > 0 && e.v[i][j].shape() != (e.dims[i][j - 1], e.dims[i][j]) {
                    return Err(ComplexError::ShapeMismatch(format!("vdiff at ({i},{j})")));
                }
            }
        }
        for i in 0..np {
            for j in 0..nq {
                let (p, q) = (p0 + i as i32, q0 + j as i32);
                if i > 1 && !e.h[i - 1][j].mul(&e.h[i][j]).unwrap().is_zero() {
                    return Err(ComplexError::NotAComplex { degree: p });
                }
                if j > 1 && !e.v[i][j - 1].mul(&e.v[i][j]).unwrap().is_zero() {
                    return Err(ComplexError::NotAComplex { degree: q });
                }
                if i > 0 && j > 0 {
                    let hv = e.h[i][j - 1].mul(&e.v[i][j]).unwrap();
                    let vh = e.v[i - 1][j].mul(&e.h[i][j]).unwrap();
                    if hv != vh {
                        return Err(ComplexError::NonCommuting { p, q });
                    }
                }
            }
        }
        Ok(e)
    }

    /// C ⊠ D: E_{p,q} = C_p ⊗ D_q, hdiff = ∂^C ⊗ id, vdiff = id ⊗ ∂^D, basis
    /// lexicographic with the C index major.
    pub fn tensor(c: &ChainComplex, d: &ChainComplex) -> Self {
        let (p0, q0) = (c.min_degree(), d.min_degree());
        let np = c.dims().len();
        let nq = d.dims().len();
        let dims: Vec<Vec<usize>> = (0..np).map(|i| (0..nq).map(|j| c.dims()[i] * d.dims()[j]).collect()).collect();
        let mut h = vec![vec![F2Matrix::zeros(0, 0); nq]; np];
        let mut v = vec![vec![F2Matrix::zeros(0, 0); nq]; np];
        for i in 0..np {
            let p = p0 + i as i32;
            for j in 0..nq {
                let q = q0 + j as i32;
                if i > 0 {
                    h[i][j] = c.diff(p).kron(&F2Matrix::identity(d.dim(q)));
                }
                if j > 0 {
                    v[i][j] = F2Matrix::identity(c.dim(p)).kron(&d.diff(q));
                }
            }
        }
        Self::new(p0, q0, dims, h, v).expect("tensor product of complexes is a double complex")
    }

    pub fn p_range(&self) -> std::ops::RangeInclusive<i32> {
        self.p0..=self.p0 + self.dims.len() as i32 - 1
    }

    pub fn q_range(&self) -> std::ops::RangeInclusive<i32> {
        self.q0..=self.q0 + self.dims[0].len() as i32 - 1
    }

    fn idx(&self, p: i32, q: i32) -> Option<(usize, usize)> {
        (self.p_range().contains(&p) && self.q_range().contains(&q)).then(|| ((p - self.p0) as usize, (q - self.q0) as usize))
    }

    pub fn dim(&self, p: i32, q: i32) -> usize {
        self.idx(p, q).map_or(0, |(i, j)| self.dims[i][j])
    }

    /// E_{p,q} → E_{p−1,q}.
    pub fn hdiff(&self, p: i32, q: i32) -> F2Matrix {
        match self.idx(p, q) {
            Some((i, j)) if i > 0 => self.h[i][j].clone(),
            _ => F2Matrix::zeros(self.dim(p - 1, q), self.dim(p, q)),
        }
    }

    /// E_{p,q} → E_{p,q−1}.
    pub fn vdiff(&self, p: i32, q: i32) -> F2Matrix {
        match self.idx(p, q) {
            Some((i, j)) if j > 0 => self.v[i][j].clone(),
            _ => F2Matrix::zeros(self.dim(p, q - 1), self.dim(p, q)),
        }
    }

    /// Cells (p, q) with p + q = n, ordered by p descending; this is the
    /// block order of Tot_n.
    pub fn antidiagonal(&self, n: i32) -> Vec<(i32, i32)> {
        self.p_range().rev().map(|p| (p, n - p)).filter(|&(p, q)| self.idx(p, q).is_some()).collect()
    }

    /// Offset of block (p, q) inside Tot_{p+q}.
    pub fn block_offset(&self, p: i32, q: i32) -> usize {
        self.antidiagonal(p + q).iter().take_while(|&&(pp, _)| pp != p).map(|&(pp, qq)| self.dim(pp, qq)).sum()
    }

    pub fn is_two_by_two(&self) -> bool {
        self.p_range().all(|p| (0..=1).contains(&p) || self.q_range().all(|q| self.dim(p, q) == 0))
            && self.q_range().all(|q| (0..=1).contains(&q) || self.p_range().all(|p| self.dim(p, q) == 0))
    }
}

/// Tot(E)_n = ⊕_{p+q=n} E_{p,q} with ∂ = ∂^h + ∂^v; blocks ordered by p
/// descending.
pub fn total_complex(e: &DoubleComplex) -> ChainComplex {
    let nmin = e.p0 + e.q0;
    let nmax = *e.p_range().end() + *e.q_range().end();
    let dims: Vec<usize> = (nmin..=nmax).map(|n| e.antidiagonal(n).iter().map(|&(p, q)| e.dim(p, q)).sum()).collect();
    let mut diffs = Vec::new();
    for n in nmin + 1..=nmax {
        let rows = dims[(n - 1 - nmin) as usize];
        let cols = dims[(n - nmin) as usize];
        let mut d = F2Matrix::zeros(rows, cols);
        for (p, q) in e.antidiagonal(n) {
            let c0 = e.block_offset(p, q);
            if e.dim(p - 1, q) > 0 {
                d.xor_block(e.block_offset(p - 1, q), c0, &e.hdiff(p, q));
            }
            if e.dim(p, q - 1) > 0 {
                d.xor_block(e.block_offset(p, q - 1), c0, &e.vdiff(p, q));
            }
        }
        diffs.push(d);
    }
    ChainComplex::new(nmin, dims, diffs).expect("total complex of a double complex squares to zero")
}

/// C ⊗ D = Tot(C ⊠ D).
pub fn tensor_complex(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    total_complex(&DoubleComplex::tensor(c, d))
}

#[cfg(test)]
mod tests {
    use super::super::builders::cycle_graph_complex;
    use super::*;

    #[test]
    fn tensor_with_point_is_identity() {
        let c = cycle_graph_complex(5).unwrap();
        let pt = ChainComplex::single(0, 1);
        let t = tensor_complex(&c, &pt);
        assert_eq!(t, c);
    }

    #[test]
    fn toric_dimensions() {
        let c = cycle_graph_complex(3).unwrap();
        let t = tensor_complex(&c, &c);
        assert_eq!(t.dims(), &[9, 18, 9]);
        assert_eq!(t.homology_dim(1).unwrap(), 2);
    }

    #[test]
    fn rejects_non_commuting_square() {
        let one = F2Matrix::identity(1);
        let z = F2Matrix::zeros(0, 0);
        let dims = vec![vec![1, 1], vec![1, 1]];
        let h = vec![vec![z.clone(), z.clone()], vec![one.clone(), F2Matrix::zeros(1, 1)]];
        let v = vec![vec![z.clone(), one.clone()], vec![z.clone(), one.clone()]];
        assert!(matches!(DoubleComplex::new(0, 0, dims, h, v), Err(ComplexError::NonCommuting { p: 1, q: 1 })));
    }
}
