use std::fmt;
use std::ops::{Add, Mul};

use super::AlgebraError;
use crate::f2la::{BitVec, F2Matrix};

/// Element Σ a_k g^k of the group algebra F₂[Z_ℓ].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElem {
    ell: usize,
    coeffs: BitVec,
}

impl GroupAlgebraElem {
    pub fn zero(ell: usize) -> Self {
        Self { ell, coeffs: BitVec::zeros(ell) }
    }

    pub fn one(ell: usize) -> Self {
        Self::monomial(ell, 0)
    }

    /// g^k.
    pub fn monomial(ell: usize, k: usize) -> Self {
        Self { ell, coeffs: BitVec::unit(ell, k % ell) }
    }

    /// Σ g^k over the given exponents (taken mod ℓ; repeats cancel).
    pub fn from_exponents(ell: usize, exps: &[usize]) -> Self {
        Self { ell, coeffs: BitVec::from_support(ell, exps.iter().map(|k| k % ell)) }
    }

    pub fn from_coeffs(coeffs: BitVec) -> Self {
        Self { ell: coeffs.len(), coeffs }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn coeffs(&self) -> &BitVec {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.weight()
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, AlgebraError> {
        if self.ell != o.ell {
            return Err(AlgebraError::DimensionMismatch(self.ell, o.ell));
        }
        Ok(Self { ell: self.ell, coeffs: self.coeffs.xor(&o.coeffs) })
    }

    /// Cyclic convolution mod 2.
    pub fn try_mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        if self.ell != o.ell {
            return Err(AlgebraError::DimensionMismatch(self.ell, o.ell));
        }
        let mut out = BitVec::zeros(self.ell);
        for a in self.coeffs.iter_ones() {
            for b in o.coeffs.iter_ones() {
                out.toggle((a + b) % self.ell);
            }
        }
        Ok(Self { ell: self.ell, coeffs: out })
    }

    /// Image under g ↦ g⁻¹.
    pub fn antipode(&self) -> Self {
        Self::from_exponents(self.ell, &self.coeffs.iter_ones().map(|k| (self.ell - k) % self.ell).collect::<Vec<_>>())
    }

    /// ℓ×ℓ circulant with `M[i][j] = a_{(j−i) mod ℓ}`: row i is g^i·x in the
    /// monomial basis, so the first row is the coefficient vector.
    pub fn circulant_lift(&self) -> F2Matrix {
        let l = self.ell;
        let mut m = F2Matrix::zeros(l, l);
        for i in 0..l {
            for k in self.coeffs.iter_ones() {
                m.set(i, (i + k) % l, true);
            }
        }
        m
    }
}

impl Add for &GroupAlgebraElem {
    type Output = GroupAlgebraElem;
    fn add(self, o: &GroupAlgebraElem) -> GroupAlgebraElem {
        self.try_add(o).expect("group algebra orders differ")
    }
}

impl Mul for &GroupAlgebraElem {
    type Output = GroupAlgebraElem;
    fn mul(self, o: &GroupAlgebraElem) -> GroupAlgebraElem {
        self.try_mul(o).expect("group algebra orders differ")
    }
}

impl fmt::Debug for GroupAlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter_ones()
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// Matrix over F₂[Z_ℓ], entries row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraMatrix {
    pub rows: usize,
    pub cols: usize,
    pub ell: usize,
    pub entries: Vec<GroupAlgebraElem>,
}

impl GroupAlgebraMatrix {
    pub fn zeros(rows: usize, cols: usize, ell: usize) -> Self {
        Self { rows, cols, ell, entries: vec![GroupAlgebraElem::zero(ell); rows * cols] }
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupAlgebraElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: GroupAlgebraElem) {
        assert_eq!(x.ell, self.ell);
        self.entries[i * self.cols + j] = x;
    }

    /// Binary (rows·ℓ)×(cols·ℓ) matrix with every entry circulant-lifted.
    pub fn lift(&self) -> F2Matrix {
        let l = self.ell;
        let mut m = F2Matrix::zeros(self.rows * l, self.cols * l);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() {
                    m.xor_block(i * l, j * l, &e.circulant_lift());
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let one_g = GroupAlgebraElem::from_exponents(5, &[0, 1]);
        assert_eq!(&one_g * &one_g, GroupAlgebraElem::from_exponents(5, &[0, 2]));
        let x = GroupAlgebraElem::from_exponents(5, &[1, 3, 4]);
        assert_eq!(&x * &GroupAlgebraElem::one(5), x);
        assert_eq!(
            &GroupAlgebraElem::monomial(7, 4) * &GroupAlgebraElem::monomial(7, 5),
            GroupAlgebraElem::monomial(7, 2)
        );
        assert!(GroupAlgebraElem::one(3).try_mul(&GroupAlgebraElem::one(4)).is_err());
    }

    #[test]
    fn lift_examples() {
        assert_eq!(GroupAlgebraElem::one(4).circulant_lift(), F2Matrix::identity(4));
        let lift = GroupAlgebraElem::from_exponents(3, &[0, 1]).circulant_lift();
        assert_eq!(lift.row(0).to_bits(), vec![1, 1, 0]);
        assert_eq!(lift, F2Matrix::from_rows(&[[1u8, 1, 0], [0, 1, 1], [1, 0, 1]]));
        let shift = GroupAlgebraElem::monomial(4, 1).circulant_lift();
        assert_eq!(shift.row_weights(), vec![1; 4]);
        assert_eq!(shift.col_weights(), vec![1; 4]);
    }

    #[test]
    fn lift_is_ring_homomorphism_exhaustive() {
        for ell in 1..=7usize {
            let all: Vec<GroupAlgebraElem> = (0u32..(1 << ell))
                .map(|mask| GroupAlgebraElem::from_exponents(ell, &(0..ell).filter(|k| mask >> k & 1 == 1).collect::<Vec<_>>()))
                .collect();
            for x in all.iter() {
                let lx = x.circulant_lift();
                for y in all.iter() {
                    let ly = y.circulant_lift();
                    assert_eq!((x * y).circulant_lift(), lx.mul(&ly).unwrap());
                    assert_eq!((x + y).circulant_lift(), lx.add(&ly).unwrap());
                }
            }
        }
    }
}
