//! Simple graphs and the graph-specific invariants built on coloured homology.

mod canonical;
mod enumerate;
mod graph6;
mod homology;
mod plane;
mod theta;

use std::collections::VecDeque;

use crate::complex::{SimplicialComplex, VertexId, MAX_VERTICES};
use crate::error::{Error, Result};

pub use canonical::{canonical_code, canonical_form, CANONICAL_MAX_VERTICES};
pub use enumerate::{connected_graphs, trees};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_corpus};
pub use homology::{
    graph_uber_component, h0_graph, h1_0, h1_1, h2_graph, matching_complex,
    matching_complex_of_edges, GradedRanks,
};
pub use plane::{
    dual_graph, parse_plane_graph, tait_colouring, tait_graph, theorem42_verify, PlaneGraph,
    TaitGraph, Theorem42Report,
};
pub use theta::{
    delta_lower_bounds, dissimilarity, dissimilarity_up_to, graph_horizontal_ranks, spacious_trees,
    theta, vertex_cover_bijection_check, Dissimilarity, LowerBounds, SpaciousTrees, ThetaLevel,
    ThetaTuple,
};

/// Undirected graph without loops or parallel edges, stored as adjacency masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { count: n });
        }
        Ok(SimpleGraph { adj: vec![0; n] })
    }

    pub fn from_edges<I: IntoIterator<Item = (VertexId, VertexId)>>(
        n: usize,
        edges: I,
    ) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            let count = n;
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    count,
                });
            }
            if u == v {
                return Err(Error::NotSimple(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::NotSimple(format!("repeated edge {u}-{v}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// The 1-skeleton of a complex of dimension at most one.
    pub fn from_complex(x: &SimplicialComplex) -> Result<Self> {
        if x.dim().is_some_and(|d| d > 1) {
            return Err(Error::InvalidParameter(
                "a graph is a complex of dimension at most 1".into(),
            ));
        }
        let edges = x.simplices(1).iter().map(|e| {
            let mut vs = e.vertices();
            (vs.next().expect("edge"), vs.next().expect("edge"))
        });
        Self::from_edges(x.vertex_count(), edges.collect::<Vec<_>>())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &a)| {
            crate::complex::mask_iter(a & !((2u64 << u).wrapping_sub(1)))
                .map(move |v| (u, v))
                .filter(move |&(u, v)| u < v)
        })
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: VertexId) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn all_mask(&self) -> u64 {
        low_mask(self.vertex_count())
    }

    /// Connected components of the subgraph induced on `mask`, as vertex masks
    /// ordered by their lowest vertex.
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components_within(self.all_mask()).len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// Number of edges of the subgraph induced on `mask`.
    pub fn induced_edge_count(&self, mask: u64) -> usize {
        crate::complex::mask_iter(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in crate::complex::mask_iter(self.adj[u]) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_vertex_cover(&self, mask: u64) -> bool {
        self.edges().all(|(u, v)| (mask >> u | mask >> v) & 1 == 1)
    }

    /// Size of a smallest vertex cover, by exhaustive search.
    pub fn vertex_cover_number(&self) -> usize {
        let n = self.vertex_count();
        (0..=n)
            .find(|&j| {
                crate::coloured::Colouring::level(n, j)
                    .any(|c| self.is_vertex_cover(c.black_mask()))
            })
            .unwrap_or(n)
    }

    /// Graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        crate::complex::check_permutation(perm, self.vertex_count())?;
        Self::from_edges(
            self.vertex_count(),
            self.edges().map(|(u, v)| (perm[u], perm[v])),
        )
    }

    /// Complex of vertices and edges; the graph must be connected.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        graph_as_complex(self)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(edges: usize) -> Result<Self> {
        Self::from_edges(edges + 1, (0..edges).map(|i| (i, i + 1)))
    }

    /// Triangular prism: two triangles joined by a perfect matching.
    pub fn prism() -> Self {
        Self::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .expect("valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |w| (u, w))))
    }

    /// Cycle on `2n` vertices with a chord from vertex 0 to its antipode.
    pub fn cycle_with_diameter(n: usize) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = (0..2 * n).map(|i| (i, (i + 1) % (2 * n))).collect();
        edges.push((0, n));
        Self::from_edges(2 * n, edges)
    }

    /// Cycle on `2n` vertices with a chord from vertex 0 to a neighbour of its antipode.
    pub fn cycle_with_offset_chord(n: usize) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = (0..2 * n).map(|i| (i, (i + 1) % (2 * n))).collect();
        edges.push((0, n + 1));
        Self::from_edges(2 * n, edges)
    }

    /// Triangle `2-3-4` with pendant vertices `0` at `3` and `1` at `4`: three
    /// maximal spacious trees, of three, three and four vertices.
    pub fn spacious_example() -> Self {
        Self::from_edges(5, [(0, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).expect("valid")
    }
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn graph_as_complex(g: &SimpleGraph) -> Result<SimplicialComplex> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    SimplicialComplex::from_facets(g.vertex_count(), g.edges().map(|(u, v)| [u, v]))
}
