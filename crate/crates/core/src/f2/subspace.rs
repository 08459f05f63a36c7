use super::bitvec::BitVec;
use super::matrix::BitMatrix;

/// A subspace of `F^n`, stored as its unique reduced row-echelon basis.
///
/// Pivots are strictly increasing and every basis vector vanishes on the
/// pivots of the others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Span of `vectors`, echelonized with smallest-column pivoting.
    pub fn from_vectors<I: IntoIterator<Item = BitVec>>(ambient_dim: usize, vectors: I) -> Self {
        let rows: Vec<BitVec> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Self::zero(ambient_dim);
        }
        let mut m = BitMatrix::from_rows(ambient_dim, &rows);
        let pivots = m.rref_in_place();
        let vectors = (0..pivots.len()).map(|r| m.row(r)).collect();
        SubspaceBasis {
            ambient_dim,
            vectors,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[BitVec] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result vanishes on every pivot.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.clone();
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(b);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }
}
