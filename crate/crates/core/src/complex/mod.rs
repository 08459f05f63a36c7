//! Finite abstract simplicial complexes on at most 64 vertices.

mod families;
mod format;
mod simplex;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

pub use families::{
    bundled_suite, figure_eight, figure_five_left, rp2_min, standard_complex, torus_min, Family,
};
pub use format::{parse_facet_list, write_facet_list};
pub(crate) use simplex::mask_iter;
pub use simplex::{Simplex, VertexId, MAX_VERTICES};

use crate::error::{Error, Result};
use crate::f2::{augmentation_matrix, homology_rank, BitMatrix};

/// A face-closed set of simplices over the vertex universe `[0, m)`.
///
/// Complexes built by [`SimplicialComplex::from_facets`] contain every vertex
/// of the universe. Subcomplexes (links, closed stars, black subcomplexes)
/// keep the ambient universe and may miss vertices or be void.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertex_count: usize,
    by_dim: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.by_dim == other.by_dim
    }
}

impl Eq for SimplicialComplex {}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertex_count", &self.vertex_count)
            .field("facets", &self.facets())
            .finish()
    }
}

impl SimplicialComplex {
    /// Face closure of `facets` together with every singleton of `[0, m)`.
    pub fn from_facets<F, I>(m: usize, facets: F) -> Result<Self>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = VertexId>,
    {
        check_universe(m)?;
        let mut generators = Vec::new();
        for facet in facets {
            let mut mask = 0u64;
            for v in facet {
                if v >= m {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        count: m,
                    });
                }
                mask |= 1 << v;
            }
            generators.push(Simplex::from_mask(mask).ok_or(Error::EmptyFacet)?);
        }
        generators.extend((0..m).map(Simplex::vertex));
        Ok(Self::closure(m, generators))
    }

    /// The complex with no simplices over a universe of `m` vertices.
    pub fn void(m: usize) -> Self {
        SimplicialComplex {
            vertex_count: m,
            by_dim: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Face closure of arbitrary generating simplices; no vertex is forced in.
    pub(crate) fn closure<I: IntoIterator<Item = Simplex>>(m: usize, generators: I) -> Self {
        let mut seen: HashSet<Simplex> = HashSet::new();
        let mut stack: Vec<Simplex> = generators.into_iter().collect();
        while let Some(s) = stack.pop() {
            if seen.insert(s) {
                stack.extend(s.facets().map(|(_, f)| f).filter(|f| !seen.contains(f)));
            }
        }
        Self::from_closed_set(m, seen)
    }

    /// Wraps a set the caller guarantees is face-closed.
    pub(crate) fn from_closed_set<I: IntoIterator<Item = Simplex>>(m: usize, simplices: I) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for s in simplices {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, Vec::new);
            }
            by_dim[d].push(s);
        }
        let mut index = HashMap::new();
        for layer in &mut by_dim {
            layer.sort_unstable();
            layer.dedup();
            for (i, s) in layer.iter().enumerate() {
                index.insert(*s, i);
            }
        }
        SimplicialComplex {
            vertex_count: m,
            by_dim,
            index,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// Top dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// Number of nonempty dimension layers (`dim + 1`, or 0 when void).
    pub fn layers(&self) -> usize {
        self.by_dim.len()
    }

    /// Simplices of dimension `d`, ascending by mask.
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.by_dim.get(d).map_or(&[], Vec::as_slice)
    }

    /// All simplices in (dimension, mask) order.
    pub fn iter(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.by_dim.iter().flatten().copied()
    }

    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_void()
    }

    pub fn contains(&self, s: Simplex) -> bool {
        self.index.contains_key(&s)
    }

    /// Position of `s` inside its dimension layer.
    pub fn index_of(&self, s: Simplex) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// Mask of the vertices present as 0-simplices.
    pub fn vertex_mask(&self) -> u64 {
        self.simplices(0).iter().fold(0, |acc, s| acc | s.mask())
    }

    /// Maximal simplices in (dimension, mask) order.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut cofaced: HashSet<Simplex> = HashSet::new();
        for s in self.iter() {
            for (_, f) in s.facets() {
                cofaced.insert(f);
            }
        }
        self.iter().filter(|s| !cofaced.contains(s)).collect()
    }

    /// Neighbour mask of `v` in the 1-skeleton.
    pub fn neighbours(&self, v: VertexId) -> u64 {
        self.simplices(1)
            .iter()
            .filter(|e| e.contains(v))
            .fold(0, |acc, e| acc | (e.mask() & !(1 << v)))
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            })
        }
    }

    /// Simplices containing `v`.
    pub fn star(&self, v: VertexId) -> Result<Vec<Simplex>> {
        self.check_vertex(v)?;
        Ok(self.iter().filter(|s| s.contains(v)).collect())
    }

    pub fn closed_star(&self, v: VertexId) -> Result<SimplicialComplex> {
        Ok(Self::closure(self.vertex_count, self.star(v)?))
    }

    pub fn link(&self, v: VertexId) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        Ok(self.link_of(Simplex::vertex(v)))
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`; void when `σ` is a facet or absent.
    pub fn link_of(&self, sigma: Simplex) -> SimplicialComplex {
        let simplices = self
            .iter()
            .filter(|t| t.mask() & sigma.mask() == 0 && self.contains(t.union(sigma)));
        Self::from_closed_set(self.vertex_count, simplices.collect::<Vec<_>>())
    }

    /// Simplices whose vertices all lie in `mask`.
    pub fn full_subcomplex(&self, mask: u64) -> SimplicialComplex {
        let simplices: Vec<Simplex> = self.iter().filter(|s| s.mask() & !mask == 0).collect();
        Self::from_closed_set(self.vertex_count, simplices)
    }

    /// Simplices avoiding `v`, with the vertices above `v` shifted down by one.
    pub fn delete_star(&self, v: VertexId) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let kept: Vec<Simplex> = self
            .iter()
            .filter(|s| !s.contains(v))
            .map(|s| Simplex::from_mask(squeeze(s.mask(), v)).expect("nonempty"))
            .collect();
        if kept.is_empty() {
            return Err(Error::EmptyResult);
        }
        Ok(Self::from_closed_set(self.vertex_count - 1, kept))
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<SimplicialComplex> {
        check_permutation(perm, self.vertex_count)?;
        let simplices: Vec<Simplex> = self
            .iter()
            .map(|s| {
                let mask = s.vertices().fold(0u64, |acc, v| acc | (1 << perm[v]));
                Simplex::from_mask(mask).expect("nonempty")
            })
            .collect();
        Ok(Self::from_closed_set(self.vertex_count, simplices))
    }

    /// Barycentric subdivision. New vertex `n` is the `n`-th simplex in
    /// (dimension, lexicographic vertex list) order; simplices are chains.
    pub fn barycentric_subdivision(&self) -> Result<SimplicialComplex> {
        let mut order: Vec<Simplex> = self.iter().collect();
        order.sort_by(|a, b| {
            a.dim()
                .cmp(&b.dim())
                .then_with(|| a.vertices().cmp(b.vertices()))
        });
        check_universe(order.len())?;
        let position: HashMap<Simplex, usize> =
            order.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        // Chains are grown by prepending a codimension-one face to the minimum.
        let mut chains: Vec<(Simplex, u64)> =
            order.iter().map(|s| (*s, 1u64 << position[s])).collect();
        let mut all: Vec<Simplex> = Vec::new();
        while let Some((bottom, mask)) = chains.pop() {
            all.push(Simplex::from_mask(mask).expect("nonempty"));
            for (_, f) in bottom.facets() {
                chains.push((f, mask | (1 << position[&f])));
            }
        }
        // Chains may skip dimensions; close under faces to add them.
        Ok(Self::closure(order.len(), all))
    }

    /// Join with a new apex `m`.
    pub fn cone(&self) -> Result<SimplicialComplex> {
        let m = self.vertex_count;
        check_universe(m + 1)?;
        let apex = Simplex::vertex(m);
        let mut simplices: Vec<Simplex> = self.iter().collect();
        simplices.extend(self.iter().map(|s| s.union(apex)));
        simplices.push(apex);
        Ok(Self::from_closed_set(m + 1, simplices))
    }

    /// Join with two new apexes `m` and `m + 1`.
    pub fn suspension(&self) -> Result<SimplicialComplex> {
        let m = self.vertex_count;
        check_universe(m + 2)?;
        let (north, south) = (Simplex::vertex(m), Simplex::vertex(m + 1));
        let mut simplices: Vec<Simplex> = self.iter().collect();
        for apex in [north, south] {
            simplices.extend(self.iter().map(|s| s.union(apex)));
            simplices.push(apex);
        }
        Ok(Self::from_closed_set(m + 2, simplices))
    }

    /// BFS distances in the 1-skeleton from `v`; `None` for unreachable vertices.
    fn distances(&self, v: VertexId) -> Vec<Option<usize>> {
        let adj: Vec<u64> = (0..self.vertex_count).map(|u| self.neighbours(u)).collect();
        let mut dist = vec![None; self.vertex_count];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for w in mask_iter(adj[u]) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True when every universe vertex is present and the 1-skeleton is connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0
            && self.vertex_mask().count_ones() as usize == self.vertex_count
            && self.distances(0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.vertex_count)
            .flat_map(|v| self.distances(v))
            .map(|d| d.expect("connected"))
            .max()
            .unwrap_or(0))
    }

    /// Matrix of `∂_d : C_d -> C_{d-1}` (rows are `(d-1)`-simplices).
    pub fn boundary_matrix(&self, d: usize) -> BitMatrix {
        if d == 0 {
            return BitMatrix::zeros(0, self.simplices(0).len());
        }
        let (src, dst) = (self.simplices(d), self.simplices(d - 1));
        let mut m = BitMatrix::zeros(dst.len(), src.len());
        for (c, s) in src.iter().enumerate() {
            for (_, f) in s.facets() {
                m.set(self.index[&f], c, true);
            }
        }
        m
    }

    /// Betti numbers over the two-element field, indexed by dimension.
    pub fn betti(&self) -> Vec<usize> {
        let n = self.layers();
        let ranks: Vec<usize> = (0..=n).map(|d| self.boundary_matrix(d).rank()).collect();
        (0..n)
            .map(|d| self.simplices(d).len() - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0))
            .collect()
    }

    /// Nonzero reduced Betti numbers keyed by degree; the void complex has
    /// rank one in degree `-1`.
    pub fn reduced_betti(&self) -> BTreeMap<isize, usize> {
        let mut out = BTreeMap::new();
        if self.is_void() {
            out.insert(-1, 1);
            return out;
        }
        for d in 0..self.layers() {
            let out_map = if d == 0 {
                augmentation_matrix(self.simplices(0).len())
            } else {
                self.boundary_matrix(d)
            };
            let in_map = if d + 1 < self.layers() {
                self.boundary_matrix(d + 1)
            } else {
                BitMatrix::zeros(self.simplices(d).len(), 0)
            };
            let r = homology_rank(&in_map, &out_map);
            if r > 0 {
                out.insert(d as isize, r);
            }
        }
        out
    }

    pub fn euler(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(d, layer)| {
                if d % 2 == 0 {
                    layer.len() as i64
                } else {
                    -(layer.len() as i64)
                }
            })
            .sum()
    }

    pub fn face_poset(&self) -> FacePoset {
        let edges = self
            .iter()
            .flat_map(|s| s.facets().map(move |(_, f)| (s, f)))
            .collect();
        FacePoset { edges }
    }
}

/// Hasse diagram of the face order, edges pointing from a simplex to its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePoset {
    pub edges: Vec<(Simplex, Simplex)>,
}

pub(crate) fn check_universe(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::NoVertices)
    } else if m > MAX_VERTICES {
        Err(Error::TooManyVertices { count: m })
    } else {
        Ok(())
    }
}

pub(crate) fn check_permutation(perm: &[usize], m: usize) -> Result<()> {
    if perm.len() != m {
        return Err(Error::InvalidParameter(format!(
            "permutation of length {} for {m} vertices",
            perm.len()
        )));
    }
    let mut seen = 0u64;
    for &p in perm {
        if p >= m || (seen >> p) & 1 == 1 {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        seen |= 1 << p;
    }
    Ok(())
}

/// Removes bit `v` from `mask`, shifting the higher bits down.
fn squeeze(mask: u64, v: usize) -> u64 {
    let low = mask & ((1u64 << v) - 1);
    let high = if v >= 63 { 0 } else { (mask >> (v + 1)) << v };
    low | high
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_graph(m: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets(m, (0..m).map(|i| vec![i, (i + 1) % m])).unwrap()
    }

    #[test]
    fn triangle_counts() {
        let t = SimplicialComplex::from_facets(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(t.len(), 7);
        let e = SimplicialComplex::from_facets(2, [vec![0, 1]]).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(loop_graph(4).len(), 8);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            SimplicialComplex::from_facets(0, Vec::<Vec<usize>>::new()).unwrap_err(),
            Error::NoVertices
        );
        assert_eq!(
            SimplicialComplex::from_facets(65, Vec::<Vec<usize>>::new()).unwrap_err(),
            Error::TooManyVertices { count: 65 }
        );
        assert!(matches!(
            SimplicialComplex::from_facets(2, [vec![0, 2]]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn link_of_cycle_vertex_is_two_points() {
        let l = loop_graph(4).link(0).unwrap();
        assert_eq!(l.simplices(0), &[Simplex::vertex(1), Simplex::vertex(3)]);
        assert_eq!(l.layers(), 1);
    }

    #[test]
    fn closed_star_of_simplex_vertex_is_everything() {
        let t = SimplicialComplex::from_facets(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(t.closed_star(0).unwrap(), t);
    }

    #[test]
    fn delete_star_examples() {
        let t = SimplicialComplex::from_facets(3, [vec![0, 1, 2]]).unwrap();
        let e = SimplicialComplex::from_facets(2, [vec![0, 1]]).unwrap();
        assert_eq!(t.delete_star(0).unwrap(), e);
        let path = SimplicialComplex::from_facets(4, [vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(loop_graph(5).delete_star(0).unwrap(), path);
    }

    #[test]
    fn subdivision_counts() {
        let e = SimplicialComplex::from_facets(2, [vec![0, 1]]).unwrap();
        assert_eq!(e.barycentric_subdivision().unwrap().f_vector(), vec![3, 2]);
        let t = SimplicialComplex::from_facets(3, [vec![0, 1, 2]]).unwrap();
        let sd = t.barycentric_subdivision().unwrap();
        assert_eq!(sd.f_vector(), vec![7, 12, 6]);
        assert_eq!(sd.euler(), 1);
    }

    #[test]
    fn cone_and_suspension() {
        let c3 = loop_graph(3);
        let cone = c3.cone().unwrap();
        assert_eq!(cone.f_vector(), vec![4, 6, 3]);
        assert_eq!(cone.euler(), 1);
        let susp = c3.suspension().unwrap();
        assert_eq!(susp.f_vector(), vec![5, 9, 6]);
        assert_eq!(susp.betti(), vec![1, 0, 1]);
    }

    #[test]
    fn diameters() {
        assert_eq!(loop_graph(6).diameter().unwrap(), 3);
        let path = SimplicialComplex::from_facets(5, (0..4).map(|i| vec![i, i + 1])).unwrap();
        assert_eq!(path.diameter().unwrap(), 4);
        let two = SimplicialComplex::from_facets(2, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(two.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn reduced_betti_of_void_and_sphere() {
        let void = SimplicialComplex::void(3);
        assert_eq!(void.reduced_betti(), BTreeMap::from([(-1, 1)]));
        assert_eq!(loop_graph(5).reduced_betti(), BTreeMap::from([(1, 1)]));
    }
}
