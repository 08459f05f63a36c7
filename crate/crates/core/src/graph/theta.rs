//! Θ invariants, the dissimilarity Δ, and the structures Θ detects.

use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use super::{graph_as_complex, SimpleGraph};
use crate::coloured::{horizontal_homology, BigradedRanks, Bigrading, Colouring};
use crate::complex::{mask_iter, SimplicialComplex};
use crate::error::{Error, Result};

/// Horizontal homology of a coloured graph read off its black subgraph:
/// `(0,0)` components and `(1,0)` cycles of the black subgraph, `(0,1)` white
/// vertices with no black neighbour, `(1,1)` the excess black degree of white
/// vertices, `(1,2)` white-white edges.
pub fn graph_horizontal_ranks(g: &SimpleGraph, eps: Colouring) -> Result<BigradedRanks> {
    if eps.len() != g.vertex_count() {
        return Err(Error::ColouringLength {
            colouring: eps.len(),
            vertices: g.vertex_count(),
        });
    }
    let black = eps.black_mask();
    let white = eps.white_mask();
    let components = g.components_within(black).len();
    let black_edges = g.induced_edge_count(black);
    let mut r = BigradedRanks::new();
    r.add(Bigrading::new(0, 0), components);
    r.add(
        Bigrading::new(1, 0),
        black_edges + components - black.count_ones() as usize,
    );
    let mut lonely = 0;
    let mut excess = 0;
    for w in mask_iter(white) {
        let d = (g.neighbours(w) & black).count_ones() as usize;
        if d == 0 {
            lonely += 1;
        } else {
            excess += d - 1;
        }
    }
    r.add(Bigrading::new(0, 1), lonely);
    r.add(Bigrading::new(1, 1), excess);
    r.add(Bigrading::new(1, 2), g.induced_edge_count(white));
    Ok(r)
}

/// `(j, i, k, r)`: a rank-`r` group in bidegree `(i, k)` at a colouring with `j` black vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ThetaTuple {
    pub j: usize,
    pub i: usize,
    pub k: usize,
    pub r: usize,
}

impl fmt::Display for ThetaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.j, self.i, self.k, self.r)
    }
}

/// `Θ(G, j)`: for every colouring with `j` black vertices, its nonzero
/// horizontal ranks. Each colouring's tuples are sorted in decreasing order and
/// the per-colouring lists are kept as a sorted multiset, so the level does not
/// depend on vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ThetaLevel {
    j: usize,
    groups: Vec<Vec<ThetaTuple>>,
}

impl ThetaLevel {
    fn new(j: usize, ranks: impl IntoIterator<Item = BigradedRanks>) -> Self {
        let mut groups: Vec<Vec<ThetaTuple>> = ranks
            .into_iter()
            .map(|r| {
                let mut g: Vec<ThetaTuple> = r
                    .iter()
                    .map(|(b, r)| ThetaTuple {
                        j,
                        i: b.i,
                        k: b.k,
                        r,
                    })
                    .collect();
                g.sort_unstable_by(|a, b| b.cmp(a));
                g
            })
            .collect();
        groups.sort_unstable_by(|a, b| b.cmp(a));
        ThetaLevel { j, groups }
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn groups(&self) -> &[Vec<ThetaTuple>] {
        &self.groups
    }

    /// One tuple per bidegree, ranks summed over all colourings, decreasing.
    pub fn aggregated(&self) -> Vec<ThetaTuple> {
        let mut sums: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        for t in self.groups.iter().flatten() {
            *sums.entry((t.i, t.k)).or_default() += t.r;
        }
        sums.into_iter()
            .rev()
            .map(|((i, k), r)| ThetaTuple { j: self.j, i, k, r })
            .collect()
    }
}

impl fmt::Display for ThetaLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.aggregated().iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn theta(g: &SimpleGraph, j: usize) -> Result<ThetaLevel> {
    let m = g.vertex_count();
    if j > m {
        return Err(Error::InvalidParameter(format!(
            "level {j} exceeds {m} vertices"
        )));
    }
    let x = graph_as_complex(g)?;
    theta_with(g, &x, j)
}

fn theta_with(g: &SimpleGraph, x: &SimplicialComplex, j: usize) -> Result<ThetaLevel> {
    let colourings: Vec<Colouring> = Colouring::level(g.vertex_count(), j).collect();
    // Levels 0 and 1 are determined by edge and degree counts.
    let ranks = colourings
        .par_iter()
        .map(|&eps| {
            if j <= 1 {
                graph_horizontal_ranks(g, eps)
            } else {
                horizontal_homology(x, eps)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ThetaLevel::new(j, ranks))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dissimilarity {
    /// `1 - j/m` for the first level `j` where Θ differs; zero with no level
    /// when every level agrees.
    Finite {
        value: Ratio<usize>,
        first_differing_level: Option<usize>,
    },
    /// The graphs have different vertex counts.
    Infinite,
}

impl Dissimilarity {
    pub fn value(&self) -> Option<Ratio<usize>> {
        match self {
            Dissimilarity::Finite { value, .. } => Some(*value),
            Dissimilarity::Infinite => None,
        }
    }

    pub fn first_differing_level(&self) -> Option<usize> {
        match self {
            Dissimilarity::Finite {
                first_differing_level,
                ..
            } => *first_differing_level,
            Dissimilarity::Infinite => None,
        }
    }

    /// True when no level of Θ tells the graphs apart.
    pub fn is_theta_equivalent(&self) -> bool {
        matches!(
            self,
            Dissimilarity::Finite {
                first_differing_level: None,
                ..
            }
        )
    }
}

impl fmt::Display for Dissimilarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dissimilarity::Finite { value, .. } => write!(f, "{value}"),
            Dissimilarity::Infinite => write!(f, "inf"),
        }
    }
}

/// Compares Θ level by level and stops at the first difference.
pub fn dissimilarity(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Dissimilarity> {
    dissimilarity_up_to(g1, g2, usize::MAX)
}

/// As [`dissimilarity`], but gives up after level `max_level` and reports the
/// pair as undetected.
pub fn dissimilarity_up_to(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    max_level: usize,
) -> Result<Dissimilarity> {
    let m = g1.vertex_count();
    if m != g2.vertex_count() {
        return Ok(Dissimilarity::Infinite);
    }
    let (x1, x2) = (graph_as_complex(g1)?, graph_as_complex(g2)?);
    for j in 0..=m.min(max_level) {
        if theta_with(g1, &x1, j)? != theta_with(g2, &x2, j)? {
            return Ok(Dissimilarity::Finite {
                value: Ratio::new(m - j, m),
                first_differing_level: Some(j),
            });
        }
    }
    Ok(Dissimilarity::Finite {
        value: Ratio::from_integer(0),
        first_differing_level: None,
    })
}

/// Lower bounds on Δ from degree sequences, girth and vertex cover number.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct LowerBounds {
    pub degree_sequence: Option<Ratio<usize>>,
    pub girth: Option<Ratio<usize>>,
    pub vertex_cover: Option<Ratio<usize>>,
}

impl LowerBounds {
    pub fn best(&self) -> Option<Ratio<usize>> {
        [self.degree_sequence, self.girth, self.vertex_cover]
            .into_iter()
            .flatten()
            .max()
    }
}

pub fn delta_lower_bounds(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<LowerBounds> {
    let m = g1.vertex_count();
    if m != g2.vertex_count() || m == 0 {
        return Err(Error::InvalidParameter(
            "bounds need equal, nonzero vertex counts".into(),
        ));
    }
    let frac = |num: usize| Ratio::new(num, m);
    let degree_sequence = (g1.degree_sequence() != g2.degree_sequence()).then(|| frac(m - 1));
    let girth = match (g1.girth(), g2.girth()) {
        (a, b) if a == b => None,
        // A forest has infinite girth.
        (Some(a), Some(b)) => Some(frac(m - a.min(b))),
        (Some(a), None) | (None, Some(a)) => Some(frac(m - a)),
        (None, None) => None,
    };
    let (c1, c2) = (g1.vertex_cover_number(), g2.vertex_cover_number());
    let vertex_cover = (c1 != c2).then(|| frac(m - c1.min(c2)));
    Ok(LowerBounds {
        degree_sequence,
        girth,
        vertex_cover,
    })
}

/// Checks that the colourings with no horizontal homology in weight 2 are
/// exactly those whose black vertices cover every edge.
pub fn vertex_cover_bijection_check(g: &SimpleGraph) -> Result<bool> {
    let m = g.vertex_count();
    if m > 16 {
        return Err(Error::InvalidParameter(
            "vertex-cover check is limited to 16 vertices".into(),
        ));
    }
    let x = graph_as_complex(g)?;
    let all: Vec<Colouring> = Colouring::all(m).collect();
    let results = all
        .par_iter()
        .map(|&eps| {
            let r = horizontal_homology(&x, eps)?;
            let weight_two_vanishes = r.iter().all(|(b, _)| b.k != 2);
            Ok(weight_two_vanishes == g.is_vertex_cover(eps.black_mask()))
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(results.into_iter().all(|ok| ok))
}

/// Colourings whose black subgraph is a tree, found two ways.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpaciousTrees {
    /// Colourings with `H^h_0(k=0) = F` and `H^h_1(k=0) = 0`.
    pub from_homology: Vec<Colouring>,
    /// Vertex sets inducing a tree, found by direct enumeration.
    pub from_trees: Vec<Colouring>,
}

impl SpaciousTrees {
    pub fn bijection_holds(&self) -> bool {
        self.from_homology == self.from_trees
    }

    /// Trees not contained in a larger spacious tree.
    pub fn maximal(&self) -> Vec<Colouring> {
        let masks: Vec<u64> = self.from_homology.iter().map(|c| c.black_mask()).collect();
        self.from_homology
            .iter()
            .copied()
            .filter(|c| {
                let s = c.black_mask();
                !masks.iter().any(|&t| t != s && t & s == s)
            })
            .collect()
    }
}

pub fn spacious_trees(g: &SimpleGraph) -> Result<SpaciousTrees> {
    let m = g.vertex_count();
    if m > 16 {
        return Err(Error::InvalidParameter(
            "spacious-tree search is limited to 16 vertices".into(),
        ));
    }
    let x = graph_as_complex(g)?;
    let all: Vec<Colouring> = Colouring::all(m).collect();
    let flags = all
        .par_iter()
        .map(|&eps| {
            let r = horizontal_homology(&x, eps)?;
            Ok(r.get(0, 0) == 1 && r.get(1, 0) == 0)
        })
        .collect::<Result<Vec<bool>>>()?;
    let from_homology = all
        .iter()
        .zip(flags)
        .filter(|(_, f)| *f)
        .map(|(c, _)| *c)
        .collect();
    let from_trees = all
        .iter()
        .copied()
        .filter(|c| {
            let s = c.black_mask();
            s != 0
                && g.components_within(s).len() == 1
                && g.induced_edge_count(s) + 1 == s.count_ones() as usize
        })
        .collect();
    Ok(SpaciousTrees {
        from_homology,
        from_trees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(a: usize, b: usize) -> Ratio<usize> {
        Ratio::new(a, b)
    }

    #[test]
    fn closed_form_matches_engine() {
        for g in [
            SimpleGraph::prism(),
            SimpleGraph::complete(4).unwrap(),
            SimpleGraph::cycle(5).unwrap(),
            SimpleGraph::path(4).unwrap(),
        ] {
            let x = graph_as_complex(&g).unwrap();
            for eps in Colouring::all(g.vertex_count()) {
                assert_eq!(
                    graph_horizontal_ranks(&g, eps).unwrap(),
                    horizontal_homology(&x, eps).unwrap()
                );
            }
        }
    }

    #[test]
    fn level_zero_counts_vertices_and_edges() {
        let g = SimpleGraph::cycle(5).unwrap();
        let t = theta(&g, 0).unwrap();
        assert_eq!(
            t.aggregated(),
            vec![
                ThetaTuple {
                    j: 0,
                    i: 1,
                    k: 2,
                    r: 5
                },
                ThetaTuple {
                    j: 0,
                    i: 0,
                    k: 1,
                    r: 5
                }
            ]
        );
    }

    #[test]
    fn dissimilarity_basics() {
        let k4 = SimpleGraph::complete(4).unwrap();
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_eq!(dissimilarity(&k4, &k4).unwrap().value(), Some(ratio(0, 1)));
        assert!(dissimilarity(&k4, &k4).unwrap().is_theta_equivalent());
        assert_eq!(dissimilarity(&k4, &c4).unwrap().value(), Some(ratio(1, 1)));
        assert_eq!(
            dissimilarity(&k4, &SimpleGraph::cycle(5).unwrap()).unwrap(),
            Dissimilarity::Infinite
        );
    }

    #[test]
    fn lower_bound_examples() {
        let prism = SimpleGraph::prism();
        let k33 = SimpleGraph::complete_bipartite(3, 3).unwrap();
        let b = delta_lower_bounds(&prism, &k33).unwrap();
        assert_eq!(b.degree_sequence, None);
        assert_eq!(b.girth, Some(ratio(3, 6)));
        let c5 = SimpleGraph::cycle(5).unwrap();
        let star = SimpleGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap();
        let b = delta_lower_bounds(&c5, &star).unwrap();
        assert_eq!(b.degree_sequence, Some(ratio(4, 5)));
        assert_eq!(b.vertex_cover, Some(ratio(3, 5)));
    }

    #[test]
    fn vertex_covers_and_trees() {
        assert!(vertex_cover_bijection_check(&SimpleGraph::complete(3).unwrap()).unwrap());
        assert!(vertex_cover_bijection_check(&SimpleGraph::path(2).unwrap()).unwrap());
        let k3 = spacious_trees(&SimpleGraph::complete(3).unwrap()).unwrap();
        assert!(k3.bijection_holds());
        // Three single vertices and three edges.
        assert_eq!(k3.from_homology.len(), 6);
        let t = SimpleGraph::path(3).unwrap();
        let s = spacious_trees(&t).unwrap();
        assert!(s.from_homology.contains(&Colouring::all_black(4)));
        assert_eq!(s.maximal(), vec![Colouring::all_black(4)]);
    }
}
