use serde::{Deserialize, Serialize};

use super::homology::HomologyBasis;
use super::ComplexError;
use crate::f2la::{io, kernel_basis, F2Matrix};

/// Chain complex over F₂ supported on degrees `min_degree ..= max_degree`.
///
/// `diffs[k]` is ∂ from degree `min_degree + k + 1` to `min_degree + k`.
/// Differentials out of the range are zero maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    min_degree: i32,
    dims: Vec<usize>,
    diffs: Vec<F2Matrix>,
}

impl ChainComplex {
    pub fn new(min_degree: i32, dims: Vec<usize>, diffs: Vec<F2Matrix>) -> Result<Self, ComplexError> {
        if dims.is_empty() || diffs.len() + 1 != dims.len() {
            return Err(ComplexError::ShapeMismatch(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.shape() != (dims[k], dims[k + 1]) {
                return Err(ComplexError::ShapeMismatch(format!(
                    "∂_{} is {:?}, expected {:?}",
                    min_degree + k as i32 + 1,
                    d.shape(),
                    (dims[k], dims[k + 1])
                )));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k - 1].mul(&diffs[k]).unwrap().is_zero() {
                return Err(ComplexError::NotAComplex { degree: min_degree + k as i32 + 1 });
            }
        }
        Ok(Self { min_degree, dims, diffs })
    }

    /// Complex `C_{min+len} → … → C_min` from its differentials, listed from
    /// lowest target degree up.
    pub fn from_diffs(min_degree: i32, diffs: Vec<F2Matrix>) -> Result<Self, ComplexError> {
        if diffs.is_empty() {
            return Err(ComplexError::ShapeMismatch("no differentials".into()));
        }
        let mut dims: Vec<usize> = diffs.iter().map(|d| d.rows()).collect();
        dims.push(diffs.last().unwrap().cols());
        Self::new(min_degree, dims, diffs)
    }

    /// The 1-complex `C_1 → C_0` with differential `d`.
    pub fn one_complex(d: F2Matrix) -> Self {
        Self::from_diffs(0, vec![d]).expect("a single map is always a complex")
    }

    /// A single space in degree `degree`.
    pub fn single(degree: i32, dim: usize) -> Self {
        Self { min_degree: degree, dims: vec![dim], diffs: Vec::new() }
    }

    pub fn min_degree(&self) -> i32 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i32 {
        self.min_degree + self.dims.len() as i32 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.min_degree..=self.max_degree()
    }

    pub fn in_range(&self, i: i32) -> bool {
        self.degrees().contains(&i)
    }

    /// dim C_i (zero outside the range).
    pub fn dim(&self, i: i32) -> usize {
        if self.in_range(i) {
            self.dims[(i - self.min_degree) as usize]
        } else {
            0
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// ∂_i : C_i → C_{i−1}, a zero map when one side is outside the range.
    pub fn diff(&self, i: i32) -> F2Matrix {
        match self.diff_ref(i) {
            Some(d) => d.clone(),
            None => F2Matrix::zeros(self.dim(i - 1), self.dim(i)),
        }
    }

    pub fn diff_ref(&self, i: i32) -> Option<&F2Matrix> {
        let k = i - self.min_degree - 1;
        (k >= 0 && (k as usize) < self.diffs.len()).then(|| &self.diffs[k as usize])
    }

    fn check_degree(&self, i: i32) -> Result<(), ComplexError> {
        if self.in_range(i) {
            Ok(())
        } else {
            Err(ComplexError::DegreeOutOfRange(i))
        }
    }

    fn rank_of(&self, i: i32) -> usize {
        self.diff_ref(i).map_or(0, |d| d.rank())
    }

    /// dim ker ∂_i − rank ∂_{i+1}.
    pub fn homology_dim(&self, i: i32) -> Result<usize, ComplexError> {
        self.check_degree(i)?;
        Ok(self.dim(i) - self.rank_of(i) - self.rank_of(i + 1))
    }

    /// dim ker δ^i − rank δ^{i−1}, with δ^i = ∂_{i+1}ᵀ computed by explicit
    /// transposition.
    pub fn cohomology_dim(&self, i: i32) -> Result<usize, ComplexError> {
        self.check_degree(i)?;
        let delta_i = self.diff(i + 1).transpose();
        let delta_prev = self.diff(i).transpose();
        let ker = kernel_basis(&delta_i).dim();
        Ok(ker - delta_prev.rank())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|i| if i.rem_euclid(2) == 0 { self.dim(i) as i64 } else { -(self.dim(i) as i64) }).sum()
    }

    pub fn homology_euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|i| {
                let h = self.homology_dim(i).unwrap() as i64;
                if i.rem_euclid(2) == 0 {
                    h
                } else {
                    -h
                }
            })
            .sum()
    }

    pub fn homology_basis(&self, i: i32) -> Result<HomologyBasis, ComplexError> {
        self.check_degree(i)?;
        Ok(HomologyBasis::new(i, &self.diff(i), &self.diff(i + 1)))
    }

    /// Basis of H^i, i.e. cocycles of δ^i = ∂_{i+1}ᵀ modulo im δ^{i−1}.
    pub fn cohomology_basis(&self, i: i32) -> Result<HomologyBasis, ComplexError> {
        self.check_degree(i)?;
        Ok(HomologyBasis::new(i, &self.diff(i + 1).transpose(), &self.diff(i).transpose()))
    }

    /// The cochain complex as a chain complex: C^i sits in degree −i and
    /// δ^i = ∂_{i+1}ᵀ lowers that degree by one.
    pub fn dual(&self) -> ChainComplex {
        let min = -self.max_degree();
        let dims: Vec<usize> = self.dims.iter().rev().copied().collect();
        let diffs = (0..self.diffs.len()).map(|k| self.diff(-min - k as i32).transpose()).collect();
        ChainComplex::new(min, dims, diffs).expect("dual of a complex is a complex")
    }

    pub fn to_descriptor(&self) -> ComplexDescriptor {
        ComplexDescriptor {
            min_degree: self.min_degree,
            dims: self.dims.clone(),
            diffs: self.diffs.iter().map(io::to_alist).collect(),
        }
    }

    pub fn from_descriptor(d: &ComplexDescriptor) -> Result<Self, ComplexError> {
        let diffs = d.diffs.iter().map(|s| io::from_alist(s)).collect::<Result<Vec<_>, _>>()?;
        Self::new(d.min_degree, d.dims.clone(), diffs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_descriptor()).unwrap()
    }

    pub fn from_json(s: &str) -> Result<Self, ComplexError> {
        let d: ComplexDescriptor = serde_json::from_str(s).map_err(|e| ComplexError::ShapeMismatch(format!("json: {e}")))?;
        Self::from_descriptor(&d)
    }
}

/// Serialized form: degree range, dimensions and alist-encoded differentials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDescriptor {
    pub min_degree: i32,
    pub dims: Vec<usize>,
    pub diffs: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_complex() {
        let d1 = F2Matrix::from_rows(&[[1u8, 1]]);
        let d2 = F2Matrix::from_rows(&[[1u8], [0]]);
        assert!(matches!(ChainComplex::from_diffs(0, vec![d1, d2]), Err(ComplexError::NotAComplex { degree: 2 })));
    }

    #[test]
    fn zero_differentials_give_full_homology() {
        let c = ChainComplex::new(0, vec![3, 4, 2], vec![F2Matrix::zeros(3, 4), F2Matrix::zeros(4, 2)]).unwrap();
        for (i, &d) in [3usize, 4, 2].iter().enumerate() {
            assert_eq!(c.homology_dim(i as i32).unwrap(), d);
            assert_eq!(c.cohomology_dim(i as i32).unwrap(), d);
        }
        assert_eq!(c.homology_dim(3), Err(ComplexError::DegreeOutOfRange(3)));
    }

    #[test]
    fn json_round_trip_and_dual() {
        let d = F2Matrix::from_rows(&[[1u8, 0, 1], [1, 1, 0]]);
        let c = ChainComplex::one_complex(d.clone());
        assert_eq!(ChainComplex::from_json(&c.to_json()).unwrap(), c);
        let dual = c.dual();
        assert_eq!(dual.degrees(), -1..=0);
        assert_eq!(dual.diff(0), d.transpose());
        assert_eq!(dual.homology_dim(0).unwrap(), c.cohomology_dim(0).unwrap());
        assert_eq!(dual.homology_dim(-1).unwrap(), c.cohomology_dim(1).unwrap());
    }
}
