use std::fmt;

use super::distance;
use super::ClassicalError;
use crate::f2la::{kernel_basis, rank, BitVec, F2Matrix, F2Subspace};

/// Binary linear [n, k, d] code, stored with both a parity-check matrix
/// (rows may be redundant) and a generator matrix (rows independent).
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    check: F2Matrix,
    gen: F2Matrix,
    distance: Option<Option<usize>>,
    cyclic: bool,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.distance {
            Some(Some(d)) => write!(f, "[{}, {}, {}]", self.n, self.k(), d),
            _ => write!(f, "[{}, {}]", self.n, self.k()),
        }
    }
}

impl LinearCode {
    /// Code ker H.
    pub fn from_check(check: F2Matrix) -> Self {
        let gen = kernel_basis(&check).basis().clone();
        Self { n: check.cols(), check, gen, distance: None, cyclic: false }
    }

    /// Row space of G; rows need not be independent.
    pub fn from_generator(gen: F2Matrix) -> Self {
        let n = gen.cols();
        let gen = F2Subspace::span_of_rows(&gen).basis().clone();
        let check = kernel_basis(&gen).basis().clone();
        Self { n, check, gen, distance: None, cyclic: false }
    }

    pub(crate) fn mark_cyclic(mut self) -> Self {
        self.cyclic = true;
        self
    }

    /// Computes and stores the exact distance.
    pub fn with_distance(mut self) -> Result<Self, ClassicalError> {
        self.distance = Some(distance::exact_distance(&self)?);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn check(&self) -> &F2Matrix {
        &self.check
    }

    pub fn generator(&self) -> &F2Matrix {
        &self.gen
    }

    /// Parity checks with redundant rows removed (n − k rows).
    pub fn reduced_check(&self) -> F2Matrix {
        F2Subspace::span_of_rows(&self.check).basis().clone()
    }

    /// Stored exact distance; inner `None` for the zero code.
    pub fn distance(&self) -> Option<Option<usize>> {
        self.distance
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn is_codeword(&self, v: &BitVec) -> bool {
        self.check.mul_vec(v).unwrap().is_zero()
    }

    pub fn encode(&self, msg: &BitVec) -> BitVec {
        self.gen.left_mul_vec(msg).unwrap()
    }

    /// G·Hᵀ = 0, k = n − rank H = rank G, and d ≤ n − k + 1 when known.
    pub fn validate(&self) -> Result<(), String> {
        if !self.gen.mul(&self.check.transpose()).map_err(|e| e.to_string())?.is_zero() {
            return Err("G·Hᵀ ≠ 0".into());
        }
        if self.k() != self.n - rank(&self.check) || rank(&self.gen) != self.k() {
            return Err("dimension mismatch between G and H".into());
        }
        if let Some(Some(d)) = self.distance {
            if d + self.k() > self.n + 1 {
                return Err(format!("d = {d} violates the Singleton bound"));
            }
        }
        Ok(())
    }

    /// The cyclic shift c_i ↦ c_{i+1 mod n} preserves the code.
    pub fn is_shift_invariant(&self) -> bool {
        (0..self.k()).all(|r| {
            let row = self.gen.row(r);
            let shifted = BitVec::from_support(self.n, row.support().into_iter().map(|i| (i + 1) % self.n));
            self.is_codeword(&shifted)
        })
    }
}

/// Dual code: generator and check swap roles.
pub fn dual_code(c: &LinearCode) -> LinearCode {
    let gen = c.reduced_check();
    LinearCode { n: c.n, check: c.gen.clone(), gen, distance: None, cyclic: c.cyclic }
}

/// [7,4,3] Hamming code with generator polynomial 1 + x + x³; the check rows
/// are the three cyclic shifts of the reciprocal check polynomial
/// 1 + x² + x³ + x⁴.
pub fn hamming_7_4() -> LinearCode {
    let h = F2Matrix::from_rows(&[[1u8, 0, 1, 1, 1, 0, 0], [0, 1, 0, 1, 1, 1, 0], [0, 0, 1, 0, 1, 1, 1]]);
    let mut c = LinearCode::from_check(h).mark_cyclic();
    c.distance = Some(Some(3));
    c
}

pub fn repetition_code(n: usize) -> LinearCode {
    LinearCode::from_generator(F2Matrix::from_bitvecs(&[BitVec::ones(n)], n)).mark_cyclic()
}

/// F₂ⁿ with no checks.
pub fn full_space(n: usize) -> LinearCode {
    LinearCode::from_check(F2Matrix::zeros(0, n)).mark_cyclic()
}

/// Binary entropy H₂(δ) = −δ log₂ δ − (1−δ) log₂(1−δ).
pub fn binary_entropy(delta: f64) -> f64 {
    if delta <= 0.0 || delta >= 1.0 {
        return 0.0;
    }
    -delta * delta.log2() - (1.0 - delta) * (1.0 - delta).log2()
}
