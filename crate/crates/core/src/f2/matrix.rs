use std::fmt;

use super::bitvec::{words_for, BitVec};
use super::subspace::SubspaceBasis;

/// Dense row-major matrix over the two-element field.
///
/// A matrix with `rows` rows and `cols` columns is the linear map
/// `F^cols -> F^rows`, `x -> M x`. Boundary operators are stored this way:
/// column `c` is the boundary of the `c`-th source simplex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks `rows` (each of length `cols`) into a matrix.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            assert_eq!(v.len(), cols, "row {r} has the wrong length");
            m.row_words_mut(r).copy_from_slice(v.words());
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.len(), rows, "column {c} has the wrong length");
            for r in v.ones() {
                m.set(r, c, true);
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
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.data[r * self.stride + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / 64];
        let mask = 1u64 << (c % 64);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / 64] ^= 1u64 << (c % 64);
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn column(&self, c: usize) -> BitVec {
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&r| self.get(r, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|w| *w == 0)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in BitVec::from_words(self.cols, self.row_words(r).to_vec()).ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `M x`.
    pub fn apply(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols, "vector length does not match columns");
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row_words(r)
                .iter()
                .zip(x.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>();
            if parity % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            let row = BitVec::from_words(self.cols, self.row_words(r).to_vec());
            for k in row.ones() {
                let (src_start, dst_start) = (k * rhs.stride, r * out.stride);
                for w in 0..out.stride {
                    out.data[dst_start + w] ^= rhs.data[src_start + w];
                }
            }
        }
        out
    }

    /// Brings the matrix to reduced row-echelon form in place, pivoting on the
    /// smallest available column. Returns the pivot column of each nonzero row;
    /// nonzero rows end up first.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let (wi, mask) = (col / 64, 1u64 << (col % 64));
            let Some(found) =
                (next..self.rows).find(|&r| self.data[r * self.stride + wi] & mask != 0)
            else {
                continue;
            };
            if found != next {
                for w in 0..self.stride {
                    self.data
                        .swap(found * self.stride + w, next * self.stride + w);
                }
            }
            let pivot_row: Vec<u64> = self.row_words(next).to_vec();
            for r in 0..self.rows {
                if r != next && self.data[r * self.stride + wi] & mask != 0 {
                    for (a, b) in self.row_words_mut(r).iter_mut().zip(&pivot_row) {
                        *a ^= *b;
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        // Eliminate along whichever side is shorter.
        if self.rows <= self.cols {
            self.clone().rref_in_place().len()
        } else {
            self.transpose().rref_in_place().len()
        }
    }

    /// Basis of `{x : M x = 0}` in reduced row-echelon form.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let mut reduced = self.clone();
        let pivots = reduced.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<BitVec> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut x = BitVec::zeros(self.cols);
                x.set(free, true);
                for (row, &p) in pivots.iter().enumerate() {
                    if reduced.get(row, free) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect();
        SubspaceBasis::from_vectors(self.cols, vectors)
    }

    /// Basis of the column space (a subspace of `F^rows`).
    pub fn image_basis(&self) -> SubspaceBasis {
        let t = self.transpose();
        let rows: Vec<BitVec> = (0..t.rows).map(|r| t.row(r)).collect();
        SubspaceBasis::from_vectors(self.rows, rows)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
