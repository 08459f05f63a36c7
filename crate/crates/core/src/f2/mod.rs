//! Linear algebra over the two-element field.

mod bitvec;
mod homology;
mod matrix;
mod subspace;

pub use bitvec::BitVec;
pub(crate) use homology::homology_unchecked;
pub use homology::{augmentation_matrix, homology_at, homology_rank, HomologyWithBasis};
pub use matrix::BitMatrix;
pub use subspace::SubspaceBasis;
