use super::bitvec::BitVec;
use super::matrix::BitMatrix;
use super::subspace::SubspaceBasis;
use crate::error::{Error, Result};

/// Homology of `C_{n+1} -> C_n -> C_{n-1}` at `C_n`, with chosen representatives.
///
/// Representatives are the cycle-basis vectors whose pivots are not pivots of
/// the boundary basis. Since both bases are reduced, a cycle reduced against
/// the boundaries is exactly the sum of the representatives whose pivot it hits.
#[derive(Clone, Debug)]
pub struct HomologyWithBasis {
    rank: usize,
    representatives: Vec<BitVec>,
    rep_pivots: Vec<usize>,
    boundary_basis: SubspaceBasis,
    cycle_basis: SubspaceBasis,
}

impl HomologyWithBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn representatives(&self) -> &[BitVec] {
        &self.representatives
    }

    pub fn boundary_basis(&self) -> &SubspaceBasis {
        &self.boundary_basis
    }

    pub fn cycle_basis(&self) -> &SubspaceBasis {
        &self.cycle_basis
    }

    /// Dimension of the chain group the classes live in.
    pub fn chain_dim(&self) -> usize {
        self.cycle_basis.ambient_dim()
    }

    /// Coordinates of the class of `z` in the representative basis.
    pub fn class_coordinates(&self, z: &BitVec) -> Result<BitVec> {
        if z.len() != self.chain_dim() {
            return Err(Error::ShapeMismatch(format!(
                "chain of length {} against chain group of dimension {}",
                z.len(),
                self.chain_dim()
            )));
        }
        let reduced = self.boundary_basis.reduce(z);
        let mut coords = BitVec::zeros(self.rank);
        let mut rebuilt = BitVec::zeros(z.len());
        for (c, (&p, rep)) in self
            .rep_pivots
            .iter()
            .zip(&self.representatives)
            .enumerate()
        {
            if reduced.get(p) {
                coords.set(c, true);
                rebuilt.xor_assign(rep);
            }
        }
        if rebuilt != reduced {
            return Err(Error::NotACycle);
        }
        Ok(coords)
    }
}

/// Homology at the middle of `boundary_in: C_{n+1} -> C_n` and
/// `boundary_out: C_n -> C_{n-1}`.
pub fn homology_at(boundary_in: &BitMatrix, boundary_out: &BitMatrix) -> Result<HomologyWithBasis> {
    if boundary_in.rows() != boundary_out.cols() {
        return Err(Error::ShapeMismatch(format!(
            "incoming map lands in dimension {}, outgoing map starts from {}",
            boundary_in.rows(),
            boundary_out.cols()
        )));
    }
    if !boundary_out.mul(boundary_in).is_zero() {
        return Err(Error::NonzeroComposition);
    }
    Ok(homology_unchecked(boundary_in, boundary_out))
}

/// As [`homology_at`] but trusts that the composition vanishes.
pub(crate) fn homology_unchecked(
    boundary_in: &BitMatrix,
    boundary_out: &BitMatrix,
) -> HomologyWithBasis {
    let cycle_basis = boundary_out.kernel_basis();
    let boundary_basis = boundary_in.image_basis();
    let mut is_boundary_pivot = vec![false; cycle_basis.ambient_dim()];
    for &p in boundary_basis.pivots() {
        is_boundary_pivot[p] = true;
    }
    let (rep_pivots, representatives): (Vec<usize>, Vec<BitVec>) = cycle_basis
        .pivots()
        .iter()
        .zip(cycle_basis.vectors())
        .filter(|(p, _)| !is_boundary_pivot[**p])
        .map(|(p, v)| (*p, v.clone()))
        .unzip();
    debug_assert_eq!(
        representatives.len(),
        cycle_basis.dim() - boundary_basis.dim()
    );
    HomologyWithBasis {
        rank: representatives.len(),
        representatives,
        rep_pivots,
        boundary_basis,
        cycle_basis,
    }
}

/// Rank of homology without building representatives.
pub fn homology_rank(boundary_in: &BitMatrix, boundary_out: &BitMatrix) -> usize {
    boundary_in.rows() - boundary_out.rank() - boundary_in.rank()
}

/// The augmentation `C_0 -> F`, sending every vertex to the extra generator.
pub fn augmentation_matrix(vertices: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(1, vertices);
    for c in 0..vertices {
        m.set(0, c, true);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    // Triangle boundary: vertices 0,1,2; edges 01,02,12.
    fn triangle_d1() -> BitMatrix {
        BitMatrix::from_columns(
            3,
            &[
                BitVec::from_indices(3, [0, 1]),
                BitVec::from_indices(3, [0, 2]),
                BitVec::from_indices(3, [1, 2]),
            ],
        )
    }

    #[test]
    fn loop_has_one_cycle() {
        let h = homology_at(&BitMatrix::zeros(3, 0), &triangle_d1()).unwrap();
        assert_eq!(h.rank(), 1);
        let rep = &h.representatives()[0];
        assert_eq!(
            h.class_coordinates(rep).unwrap(),
            BitVec::from_indices(1, [0])
        );
    }

    #[test]
    fn filled_triangle_is_acyclic_in_degree_one() {
        let d2 = BitMatrix::from_columns(3, &[BitVec::from_indices(3, [0, 1, 2])]);
        let h = homology_at(&d2, &triangle_d1()).unwrap();
        assert_eq!(h.rank(), 0);
        let z = BitVec::from_indices(3, [0, 1, 2]);
        assert_eq!(h.class_coordinates(&z).unwrap(), BitVec::zeros(0));
    }

    #[test]
    fn non_cycle_is_rejected() {
        let h = homology_at(&BitMatrix::zeros(3, 0), &triangle_d1()).unwrap();
        assert_eq!(
            h.class_coordinates(&BitVec::from_indices(3, [0])),
            Err(Error::NotACycle)
        );
    }

    #[test]
    fn broken_differential_is_reported() {
        let d = BitMatrix::identity(2);
        assert_eq!(homology_at(&d, &d).unwrap_err(), Error::NonzeroComposition);
    }

    #[test]
    fn reduced_vertex_homology() {
        // Two points: reduced H_0 has rank 1.
        let aug = augmentation_matrix(2);
        let h = homology_at(&BitMatrix::zeros(2, 0), &aug).unwrap();
        assert_eq!(h.rank(), 1);
    }
}
