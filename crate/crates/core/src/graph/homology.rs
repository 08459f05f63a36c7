//! The single-bidegree überhomologies of graphs, and matching complexes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::SimpleGraph;
use crate::coloured::{Bigrading, Colouring};
use crate::complex::{Simplex, SimplicialComplex, VertexId, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::f2::BitMatrix;
use crate::uber::{uber_homology_with, UberOptions};

/// Nonzero ranks indexed by cube degree.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct GradedRanks(BTreeMap<usize, usize>);

impl GradedRanks {
    pub fn get(&self, j: usize) -> usize {
        self.0.get(&j).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(j, r)| (*j, *r))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(usize, usize)> for GradedRanks {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        GradedRanks(iter.into_iter().filter(|(_, r)| *r > 0).collect())
    }
}

impl<const N: usize> From<[(usize, usize); N]> for GradedRanks {
    fn from(entries: [(usize, usize); N]) -> Self {
        entries.into_iter().collect()
    }
}

impl fmt::Display for GradedRanks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(j, r)| format!("F^{r}_({j})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_cap(g: &SimpleGraph, cap: usize) -> Result<()> {
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            vertices: g.vertex_count(),
            cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Components of every black subgraph at one cube level, with positions.
struct ComponentLevel {
    /// `(colouring bits, component masks, first basis index)` in
    /// `Colouring::level` order.
    summands: Vec<(u64, Vec<u64>, usize)>,
    position: HashMap<u64, usize>,
    total: usize,
}

impl ComponentLevel {
    fn new(g: &SimpleGraph, j: usize) -> Self {
        let mut summands = Vec::new();
        let mut position = HashMap::new();
        let mut total = 0;
        for eps in Colouring::level(g.vertex_count(), j) {
            let comps = g.components_within(eps.black_mask());
            position.insert(eps.bits(), summands.len());
            let len = comps.len();
            summands.push((eps.bits(), comps, total));
            total += len;
        }
        ComponentLevel {
            summands,
            position,
            total,
        }
    }
}

/// `ℍ⁰(G)`: homology of the cube whose level `j` is spanned by the components
/// of the black subgraphs with `j` black vertices, with maps induced by inclusion.
pub fn h0_graph(g: &SimpleGraph, cap: usize) -> Result<GradedRanks> {
    check_cap(g, cap)?;
    let m = g.vertex_count();
    let mut out = Vec::new();
    let mut cur = ComponentLevel::new(g, 0);
    let mut incoming = 0;
    for j in 0..=m {
        let outgoing = if j < m {
            let next = ComponentLevel::new(g, j + 1);
            let mut d = BitMatrix::zeros(next.total, cur.total);
            let mut col = 0;
            for (bits, comps, _) in &cur.summands {
                for &c in comps {
                    for v in crate::complex::mask_iter(!bits & g.all_mask()) {
                        let (_, tcomps, base) = &next.summands[next.position[&(bits | 1 << v)]];
                        let row = tcomps.iter().position(|&t| t & c == c).expect("inclusion");
                        d.flip(base + row, col);
                    }
                    col += 1;
                }
            }
            let rank = d.rank();
            out.push((j, cur.total - rank - incoming));
            cur = next;
            rank
        } else {
            out.push((j, cur.total - incoming));
            0
        };
        incoming = outgoing;
    }
    Ok(out.into_iter().collect())
}

/// Überhomology of `G` at one bidegree, by cube degree.
pub fn graph_uber_component(g: &SimpleGraph, b: Bigrading, cap: usize) -> Result<GradedRanks> {
    check_cap(g, cap)?;
    let x = super::graph_as_complex(g)?;
    let opts = UberOptions {
        cap,
        bigradings: Some(vec![b]),
    };
    Ok(uber_homology_with(&x, &opts)?
        .at_bigrading(b)
        .into_iter()
        .collect())
}

/// `ℍ¹₀(G)`: bidegree `(0, 1)`.
pub fn h1_0(g: &SimpleGraph, cap: usize) -> Result<GradedRanks> {
    graph_uber_component(g, Bigrading::new(0, 1), cap)
}

/// `ℍ¹₁(G)`: bidegree `(1, 1)`.
pub fn h1_1(g: &SimpleGraph, cap: usize) -> Result<GradedRanks> {
    graph_uber_component(g, Bigrading::new(1, 1), cap)
}

/// `ℍ²(G)`: bidegree `(1, 2)`.
pub fn h2_graph(g: &SimpleGraph, cap: usize) -> Result<GradedRanks> {
    graph_uber_component(g, Bigrading::new(1, 2), cap)
}

/// Matching complex of a multigraph given as an edge list: vertex `e` is edge
/// `e`, and a set of edges spans a simplex when no two share an endpoint.
pub fn matching_complex_of_edges(edges: &[(VertexId, VertexId)]) -> Result<SimplicialComplex> {
    if edges.is_empty() {
        return Err(Error::InvalidParameter(
            "a matching complex needs at least one edge".into(),
        ));
    }
    if edges.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices { count: edges.len() });
    }
    if let Some(&(u, _)) = edges.iter().find(|(u, v)| u == v) {
        return Err(Error::NotSimple(format!("loop at vertex {u}")));
    }
    let span = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let mut used = vec![false; span];
    let mut simplices = Vec::new();
    extend_matchings(edges, 0, 0, &mut used, &mut simplices);
    Ok(SimplicialComplex::from_closed_set(edges.len(), simplices))
}

fn extend_matchings(
    edges: &[(VertexId, VertexId)],
    from: usize,
    mask: u64,
    used: &mut [bool],
    out: &mut Vec<Simplex>,
) {
    for e in from..edges.len() {
        let (u, v) = edges[e];
        if used[u] || used[v] {
            continue;
        }
        let next = mask | 1 << e;
        out.push(Simplex::from_mask(next).expect("nonempty"));
        used[u] = true;
        used[v] = true;
        extend_matchings(edges, e + 1, next, used, out);
        used[u] = false;
        used[v] = false;
    }
}

/// Matching complex of a simple graph; vertex `e` is the `e`-th edge in
/// [`SimpleGraph::edges`] order.
pub fn matching_complex(g: &SimpleGraph) -> Result<SimplicialComplex> {
    matching_complex_of_edges(&g.edges().collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_CAP;

    #[test]
    fn complete_graphs_and_short_path() {
        for m in 3..=5 {
            let k = SimpleGraph::complete(m).unwrap();
            assert_eq!(
                h0_graph(&k, DEFAULT_CAP).unwrap(),
                GradedRanks::from([(1, 1)])
            );
        }
        assert!(h0_graph(&SimpleGraph::path(2).unwrap(), DEFAULT_CAP)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn component_route_matches_cube_at_origin() {
        for g in [
            SimpleGraph::cycle(5).unwrap(),
            SimpleGraph::prism(),
            SimpleGraph::path(3).unwrap(),
        ] {
            assert_eq!(
                h0_graph(&g, DEFAULT_CAP).unwrap(),
                graph_uber_component(&g, Bigrading::new(0, 0), DEFAULT_CAP).unwrap()
            );
        }
    }

    #[test]
    fn small_matching_complexes() {
        let tri = matching_complex(&SimpleGraph::complete(3).unwrap()).unwrap();
        assert_eq!(tri.f_vector(), vec![3]);
        let p3 = matching_complex(&SimpleGraph::path(3).unwrap()).unwrap();
        assert_eq!(p3.f_vector(), vec![3, 1]);
        let k4 = matching_complex(&SimpleGraph::complete(4).unwrap()).unwrap();
        assert_eq!(k4.f_vector(), vec![6, 3]);
        assert_eq!(k4.betti(), vec![3, 0]);
        assert!(matching_complex_of_edges(&[]).is_err());
    }
}
