use std::fmt;

use super::bitvec::{words_for, BitVec, WORD_BITS};
use super::F2Error;
use crate::par;

/// Rows × words above which elimination fans out over the worker pool.
const PARALLEL_ELIMINATION_WORDS: usize = 1 << 16;

/// Dense row-major bit-packed matrix over GF(2).
///
/// Matrices act on column vectors: `M·x` has length `rows` for `x` of length
/// `cols`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from nested `0`/`1` rows; every row must have the same length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, &b) in r.iter().enumerate() {
                if b != 0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_bitvecs(rows: &[BitVec], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(columns: &[BitVec], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in c.iter_ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds from per-row lists of column indices; repeated indices cancel.
    pub fn from_row_supports(rows: usize, cols: usize, supports: &[Vec<usize>]) -> Self {
        assert_eq!(supports.len(), rows);
        let mut m = Self::zeros(rows, cols);
        for (i, s) in supports.iter().enumerate() {
            for &j in s {
                m.toggle(i, j);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub(crate) fn data(&self) -> &[u64] {
        &self.data
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<u64>) -> Self {
        let stride = words_for(cols);
        assert_eq!(data.len(), rows * stride);
        let mut m = Self { rows, cols, stride, data };
        m.mask_tails();
        m
    }

    fn mask_tails(&mut self) {
        let rem = self.cols % WORD_BITS;
        if rem == 0 || self.stride == 0 {
            return;
        }
        let mask = (1u64 << rem) - 1;
        for i in 0..self.rows {
            self.data[i * self.stride + self.stride - 1] &= mask;
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        let mask = 1u64 << (j % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        self.data[i * self.stride + j / WORD_BITS] ^= 1u64 << (j % WORD_BITS);
    }

    #[inline]
    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn column(&self, j: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn row_support(&self, i: usize) -> Vec<usize> {
        self.row(i).support()
    }

    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            self.row_words_mut(dst).fill(0);
            return;
        }
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        for (d, x) in b.iter_mut().zip(a) {
            *d ^= *x;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for k in 0..s {
            self.data.swap(a * s + k, b * s + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| self.row_words(i).iter().map(|w| w.count_ones() as usize).sum())
            .collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for i in 0..self.rows {
            for j in self.row(i).iter_ones() {
                w[j] += 1;
            }
        }
        w
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for (wi, &w) in self.row_words(i).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    t.data[j * t.stride + i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
                }
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix, F2Error> {
        if self.cols != other.rows {
            return Err(F2Error::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let stride = other.stride;
        let rows = par::map_range(0..self.rows, |i| {
            let mut acc = vec![0u64; stride];
            for (wi, &w) in self.row_words(i).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let k = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    for (a, b) in acc.iter_mut().zip(other.row_words(k)) {
                        *a ^= *b;
                    }
                }
            }
            acc
        });
        Ok(F2Matrix::from_raw(self.rows, other.cols, rows.concat()))
    }

    /// `M·x`.
    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec, F2Error> {
        if x.len() != self.cols {
            return Err(F2Error::DimensionMismatch {
                op: "mul_vec",
                left: self.shape(),
                right: (x.len(), 1),
            });
        }
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            let parity: u32 = self.row_words(i).iter().zip(x.words()).map(|(a, b)| (a & b).count_ones()).sum();
            if parity & 1 == 1 {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// `xᵀ·M` as a vector of length `cols`.
    pub fn left_mul_vec(&self, x: &BitVec) -> Result<BitVec, F2Error> {
        if x.len() != self.rows {
            return Err(F2Error::DimensionMismatch {
                op: "left_mul_vec",
                left: (1, x.len()),
                right: self.shape(),
            });
        }
        let mut acc = vec![0u64; self.stride];
        for i in x.iter_ones() {
            for (a, b) in acc.iter_mut().zip(self.row_words(i)) {
                *a ^= *b;
            }
        }
        Ok(BitVec::from_words(self.cols, acc))
    }

    pub fn add(&self, other: &F2Matrix) -> Result<F2Matrix, F2Error> {
        if self.shape() != other.shape() {
            return Err(F2Error::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        Ok(F2Matrix::from_raw(self.rows, self.cols, data))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &F2Matrix) -> Result<F2Matrix, F2Error> {
        if self.rows != other.rows {
            return Err(F2Error::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut m = F2Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            m.row_words_mut(i)[..self.stride].copy_from_slice(self.row_words(i));
            for j in other.row(i).iter_ones() {
                m.set(i, self.cols + j, true);
            }
        }
        Ok(m)
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &F2Matrix) -> Result<F2Matrix, F2Error> {
        if self.cols != other.cols {
            return Err(F2Error::DimensionMismatch {
                op: "vstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(F2Matrix::from_raw(self.rows + other.rows, self.cols, data))
    }

    /// Kronecker product with lexicographic indexing: entry `((i,k),(j,l))`
    /// is `self[i][j] · other[k][l]`, `self` index major.
    pub fn kron(&self, other: &F2Matrix) -> F2Matrix {
        let (r2, c2) = other.shape();
        let mut m = F2Matrix::zeros(self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in self.row(i).iter_ones() {
                for k in 0..r2 {
                    for l in other.row(k).iter_ones() {
                        m.set(i * r2 + k, j * c2 + l, true);
                    }
                }
            }
        }
        m
    }

    /// Writes `block` with its top-left corner at `(r0, c0)` (XOR into place).
    pub fn xor_block(&mut self, r0: usize, c0: usize, block: &F2Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        for i in 0..block.rows {
            for j in block.row(i).iter_ones() {
                self.toggle(r0 + i, c0 + j);
            }
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> F2Matrix {
        let mut m = F2Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                if self.get(i, j) {
                    m.set(i, jj, true);
                }
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> F2Matrix {
        let mut m = F2Matrix::zeros(rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            m.row_words_mut(ii).copy_from_slice(self.row_words(i));
        }
        m
    }

    /// Columns `[start, start+len)`.
    pub fn column_range(&self, start: usize, len: usize) -> F2Matrix {
        let cols: Vec<usize> = (start..start + len).collect();
        self.select_columns(&cols)
    }

    /// `P_out · self · P_inᵀ` for permutations given as index maps: entry
    /// `(i, j)` moves to `(row_map[i], col_map[j])`.
    pub fn permute(&self, row_map: &[usize], col_map: &[usize]) -> F2Matrix {
        assert_eq!(row_map.len(), self.rows);
        assert_eq!(col_map.len(), self.cols);
        let mut m = F2Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in self.row(i).iter_ones() {
                m.set(row_map[i], col_map[j], true);
            }
        }
        m
    }

    /// Gaussian elimination in place to reduced row echelon form. Pivot
    /// columns are chosen left to right (lowest index first). Returns the
    /// pivot column of each leading row; rows past the rank end up zero.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        self.eliminate(true)
    }

    /// Row echelon form (zeros below pivots only). Cheaper than RREF.
    pub(crate) fn echelon_in_place(&mut self) -> Vec<usize> {
        self.eliminate(false)
    }

    fn eliminate(&mut self, reduce_above: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        let stride = self.stride;
        let parallel = self.rows * stride >= PARALLEL_ELIMINATION_WORDS && par::is_parallel();
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let wi = c / WORD_BITS;
            let mask = 1u64 << (c % WORD_BITS);
            let Some(p) = (r..self.rows).find(|&i| self.data[i * stride + wi] & mask != 0) else {
                continue;
            };
            self.swap_rows(p, r);
            let pivot: Vec<u64> = self.data[r * stride + wi..(r + 1) * stride].to_vec();
            let start = if reduce_above { 0 } else { r + 1 };
            let pr = r;
            let body = |i: usize, row: &mut [u64]| {
                if i != pr && i >= start && row[wi] & mask != 0 {
                    for (d, s) in row[wi..].iter_mut().zip(&pivot) {
                        *d ^= *s;
                    }
                }
            };
            if parallel {
                par::for_each_chunk_mut(&mut self.data, stride, body);
            } else {
                for (i, row) in self.data.chunks_mut(stride).enumerate().skip(start) {
                    body(i, row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate the smaller orientation
        if self.rows > self.cols * 2 {
            return self.transpose().echelon_in_place().len();
        }
        self.clone().echelon_in_place().len()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows.min(64) {
            write!(f, "  ")?;
            for j in 0..self.cols.min(128) {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_round_trip_multiword() {
        let m = F2Matrix::from_fn(70, 130, |i, j| (i * 7 + j * 3) % 5 == 0);
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().get(129, 3), m.get(3, 129));
    }

    #[test]
    fn kron_indexing() {
        let a = F2Matrix::from_rows(&[[1u8, 1]]);
        let b = F2Matrix::identity(2);
        let k = a.kron(&b);
        assert_eq!(k, F2Matrix::from_rows(&[[1u8, 0, 1, 0], [0, 1, 0, 1]]));
    }

    #[test]
    fn mul_matches_definition() {
        let a = F2Matrix::from_fn(5, 9, |i, j| (i + 2 * j) % 3 == 0);
        let b = F2Matrix::from_fn(9, 4, |i, j| (i * j + 1) % 2 == 0);
        let c = a.mul(&b).unwrap();
        for i in 0..5 {
            for j in 0..4 {
                let want = (0..9).filter(|&k| a.get(i, k) && b.get(k, j)).count() % 2 == 1;
                assert_eq!(c.get(i, j), want);
            }
        }
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn rref_pivots_lowest_column_first() {
        let mut m = F2Matrix::from_rows(&[[0u8, 1, 1], [0, 1, 0], [0, 0, 1]]);
        let piv = m.rref_in_place();
        assert_eq!(piv, vec![1, 2]);
        assert_eq!(m, F2Matrix::from_rows(&[[0u8, 1, 0], [0, 0, 1], [0, 0, 0]]));
    }
}
