//! Face-poset matchings induced by colourings.
//!
//! `I(X, ε)` has an edge `σ -> σ \ b` for every black vertex `b` of a simplex
//! `σ` of positive dimension: exactly the nonzero components of `∂_h`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::coloured::{BigradedRanks, Bigrading, Colouring};
use crate::complex::{mask_iter, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// A face-poset edge `(σ, τ)` with `τ` a facet of `σ`.
pub type PosetEdge = (Simplex, Simplex);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    /// Ordered by `(dim σ, σ, τ)`.
    pub edges: Vec<PosetEdge>,
}

pub fn induced_subgraph(x: &SimplicialComplex, eps: Colouring) -> Result<InducedSubgraph> {
    eps.check_against(x)?;
    let mut edges = Vec::new();
    for s in x.iter().filter(|s| s.dim() > 0) {
        let mut out: Vec<PosetEdge> = eps
            .black_vertices()
            .filter_map(|b| s.remove(b).map(|t| (s, t)))
            .collect();
        out.sort_unstable_by_key(|e| e.1);
        edges.extend(out);
    }
    Ok(InducedSubgraph { edges })
}

/// Vertex mask of the closed star of `v`: `v` and its neighbours.
fn closed_star_mask(x: &SimplicialComplex, v: VertexId) -> u64 {
    x.neighbours(v) | (1 << v)
}

/// Nonzero colouring whose black vertices have pairwise disjoint closed stars.
///
/// Two closed stars share a simplex exactly when they share a vertex, so the
/// test runs on vertex masks.
pub fn is_dalmatian(x: &SimplicialComplex, eps: Colouring) -> Result<bool> {
    eps.check_against(x)?;
    if eps.black_count() == 0 {
        return Ok(false);
    }
    let mut covered = 0u64;
    for b in eps.black_vertices() {
        let star = closed_star_mask(x, b);
        if star & covered != 0 {
            return Ok(false);
        }
        covered |= star;
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseReport {
    /// Edges are face-poset edges with pairwise disjoint endpoints.
    pub is_matching: bool,
    /// No directed cycle once matched edges are reversed; false unless a matching.
    pub is_acyclic: bool,
    /// Unmatched simplices in (dimension, mask) order; empty unless a matching.
    pub critical_cells: Vec<Simplex>,
}

impl MorseReport {
    pub fn is_morse(&self) -> bool {
        self.is_matching && self.is_acyclic
    }

    /// Critical-cell counts indexed by dimension.
    pub fn critical_profile(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for s in &self.critical_cells {
            if out.len() <= s.dim() {
                out.resize(s.dim() + 1, 0);
            }
            out[s.dim()] += 1;
        }
        out
    }
}

/// Checks an arbitrary edge set for being an acyclic matching on `x`.
pub fn verify_matching(x: &SimplicialComplex, edges: &[PosetEdge]) -> MorseReport {
    let not_morse = MorseReport {
        is_matching: false,
        is_acyclic: false,
        critical_cells: Vec::new(),
    };
    let mut partner: HashMap<Simplex, Simplex> = HashMap::new();
    for &(s, t) in edges {
        let is_poset_edge =
            x.contains(s) && x.contains(t) && t.is_face_of(s) && s.len() == t.len() + 1;
        if !is_poset_edge || partner.contains_key(&s) || partner.contains_key(&t) {
            return not_morse;
        }
        partner.insert(s, t);
        partner.insert(t, s);
    }
    let is_acyclic = (1..x.layers()).all(|n| layer_pair_acyclic(x, n, &partner));
    let critical_cells = if is_acyclic {
        x.iter().filter(|s| !partner.contains_key(s)).collect()
    } else {
        Vec::new()
    };
    MorseReport {
        is_matching: true,
        is_acyclic,
        critical_cells,
    }
}

/// Kahn's algorithm on dimensions `n` and `n - 1`, with unmatched edges
/// pointing down and matched edges pointing up.
fn layer_pair_acyclic(
    x: &SimplicialComplex,
    n: usize,
    partner: &HashMap<Simplex, Simplex>,
) -> bool {
    let upper = x.simplices(n);
    let lower = x.simplices(n - 1);
    let id = |s: Simplex| -> usize {
        if s.dim() == n {
            x.index_of(s).expect("present")
        } else {
            upper.len() + x.index_of(s).expect("present")
        }
    };
    let total = upper.len() + lower.len();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut indegree = vec![0usize; total];
    for &s in upper {
        for (_, t) in s.facets() {
            let matched = partner.get(&s) == Some(&t);
            let (from, to) = if matched {
                (id(t), id(s))
            } else {
                (id(s), id(t))
            };
            out[from].push(to);
            indegree[to] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..total).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for &w in &out[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    seen == total
}

pub fn verify_morse(x: &SimplicialComplex, eps: Colouring) -> Result<MorseReport> {
    Ok(verify_matching(x, &induced_subgraph(x, eps)?.edges))
}

/// Splits `I(X, ε)` by the black vertex each edge removes.
pub fn elementary_decomposition(
    x: &SimplicialComplex,
    eps: Colouring,
) -> Result<BTreeMap<VertexId, Vec<PosetEdge>>> {
    let mut parts: BTreeMap<VertexId, Vec<PosetEdge>> = BTreeMap::new();
    for (s, t) in induced_subgraph(x, eps)?.edges {
        let dropped = (s.mask() & !t.mask()).trailing_zeros() as usize;
        parts.entry(dropped).or_default().push((s, t));
    }
    Ok(parts)
}

/// Generators of `H^h(X, ε)` for a dalmatian colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DalmatianGenerators {
    /// One generator in bidegree `(0, 0)` per black vertex.
    pub black_vertices: Vec<Simplex>,
    /// One generator in bidegree `(dim σ, dim σ + 1)` per simplex outside
    /// every black closed star.
    pub free_simplices: Vec<Simplex>,
}

impl DalmatianGenerators {
    pub fn ranks(&self) -> BigradedRanks {
        let mut r = BigradedRanks::new();
        r.add(Bigrading::new(0, 0), self.black_vertices.len());
        for s in &self.free_simplices {
            r.add(Bigrading::new(s.dim(), s.dim() + 1), 1);
        }
        r
    }
}

pub fn dalmatian_closed_form(x: &SimplicialComplex, eps: Colouring) -> Result<DalmatianGenerators> {
    if !is_dalmatian(x, eps)? {
        return Err(Error::NotDalmatian);
    }
    let black = eps.black_mask();
    // A simplex lies in the closed star of b iff it is joinable with b.
    let in_some_star =
        |s: Simplex| mask_iter(black).any(|b| x.contains(s.union(Simplex::vertex(b))));
    Ok(DalmatianGenerators {
        black_vertices: eps.black_vertices().map(Simplex::vertex).collect(),
        free_simplices: x.iter().filter(|s| !in_some_star(*s)).collect(),
    })
}

/// Stacks the matchings of a sequence of dalmatian colourings, each stage
/// acting on the simplices left unmatched by the earlier ones.
pub fn iterated_dalmatian(x: &SimplicialComplex, sequence: &[Colouring]) -> Result<MorseReport> {
    let mut remaining: HashSet<Simplex> = x.iter().collect();
    let mut covered = 0u64;
    let mut matching: Vec<PosetEdge> = Vec::new();
    for (stage, &eps) in sequence.iter().enumerate() {
        let fail = |reason: &str| Error::IteratedPrecondition {
            stage,
            reason: reason.to_string(),
        };
        eps.check_against(x)?;
        if !is_dalmatian(x, eps)? {
            return Err(fail("colouring is not dalmatian"));
        }
        if eps.black_mask() & covered != 0 {
            return Err(fail("a black vertex lies in an earlier closed star"));
        }
        let mut stage_pairs = Vec::new();
        for s in x.iter() {
            if !remaining.contains(&s) {
                continue;
            }
            for b in mask_iter(s.mask() & eps.black_mask()) {
                if let Some(t) = s.remove(b) {
                    if remaining.contains(&t) {
                        stage_pairs.push((s, t));
                    }
                }
            }
        }
        for &(s, t) in &stage_pairs {
            remaining.remove(&s);
            remaining.remove(&t);
        }
        matching.extend(stage_pairs);
        covered |= eps
            .black_vertices()
            .fold(0, |acc, b| acc | closed_star_mask(x, b));
    }
    let all = if x.vertex_count() >= 64 {
        u64::MAX
    } else {
        (1u64 << x.vertex_count()) - 1
    };
    if covered != all {
        return Err(Error::IteratedPrecondition {
            stage: sequence.len(),
            reason: "closed stars do not cover every vertex".into(),
        });
    }
    Ok(verify_matching(x, &matching))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloured::horizontal_homology;
    use crate::complex::{figure_eight, figure_five_left, Family};

    fn col(s: &str) -> Colouring {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_triangle_subgraph() {
        let x = Family::Simplex(2).build().unwrap();
        let i = induced_subgraph(&x, col("010")).unwrap();
        assert_eq!(i.edges.len(), 3);
        assert!(induced_subgraph(&x, col("000")).unwrap().edges.is_empty());
    }

    #[test]
    fn dalmatian_basics() {
        let l6 = Family::Loop(6).build().unwrap();
        assert!(is_dalmatian(&l6, col("100100")).unwrap());
        assert!(!is_dalmatian(&l6, col("110000")).unwrap());
        assert!(!is_dalmatian(&l6, col("101000")).unwrap());
        assert!(!is_dalmatian(&l6, col("000000")).unwrap());
    }

    #[test]
    fn simplex_with_one_black_vertex_leaves_it_critical() {
        let x = Family::Simplex(3).build().unwrap();
        let r = verify_morse(&x, col("1000")).unwrap();
        assert!(r.is_morse());
        assert_eq!(r.critical_cells, vec![Simplex::vertex(0)]);
    }

    #[test]
    fn two_black_neighbours_are_not_a_matching() {
        let x = Family::Simplex(1).build().unwrap();
        let r = verify_morse(&x, col("11")).unwrap();
        assert!(!r.is_matching);
    }

    #[test]
    fn cyclic_matching_is_detected() {
        // A gradient loop around the boundary of a triangle.
        let x = Family::Boundary(2).build().unwrap();
        let e = |a, b| Simplex::new([a, b]).unwrap();
        let v = Simplex::vertex;
        let edges = [(e(0, 1), v(0)), (e(1, 2), v(1)), (e(0, 2), v(2))];
        let r = verify_matching(&x, &edges);
        assert!(r.is_matching);
        assert!(!r.is_acyclic);
    }

    #[test]
    fn figure_five_critical_cells() {
        let (x, b) = figure_five_left();
        let eps = Colouring::elementary(4, b).unwrap();
        let r = verify_morse(&x, eps).unwrap();
        assert!(r.is_morse());
        assert_eq!(
            r.critical_cells,
            vec![Simplex::vertex(1), Simplex::new([2, 3]).unwrap()]
        );
        let closed = dalmatian_closed_form(&x, eps).unwrap();
        assert_eq!(closed.ranks(), horizontal_homology(&x, eps).unwrap());
    }

    #[test]
    fn figure_eight_iterated() {
        let (x, stages) = figure_eight();
        let seq: Vec<Colouring> = stages
            .iter()
            .map(|&m| Colouring::new(m, 6).unwrap())
            .collect();
        let r = iterated_dalmatian(&x, &seq).unwrap();
        assert!(r.is_morse());
        let s = |v: &[usize]| Simplex::new(v.iter().copied()).unwrap();
        assert_eq!(
            r.critical_cells,
            vec![
                s(&[1]),
                s(&[3]),
                s(&[2, 3]),
                s(&[0, 4]),
                s(&[3, 5]),
                s(&[2, 3, 5])
            ]
        );
        assert!(matches!(
            iterated_dalmatian(&x, &seq[..1]),
            Err(Error::IteratedPrecondition { stage: 1, .. })
        ));
        let clash = [seq[0], Colouring::elementary(6, 2).unwrap()];
        assert!(matches!(
            iterated_dalmatian(&x, &clash),
            Err(Error::IteratedPrecondition { stage: 1, .. })
        ));
    }

    #[test]
    fn decomposition_of_all_black_simplex() {
        let x = Family::Simplex(3).build().unwrap();
        let parts = elementary_decomposition(&x, col("1111")).unwrap();
        assert_eq!(parts.len(), 4);
        // Each vertex lies in 7 simplices of positive dimension.
        assert!(parts.values().all(|p| p.len() == 7));
    }
}
