use std::fmt;
use std::str::FromStr;

use super::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Named complexes with fixed vertex orderings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// The full `n`-simplex on `n + 1` vertices.
    Simplex(usize),
    /// The boundary of the `n`-simplex on `n + 1` vertices.
    Boundary(usize),
    /// Cycle graph `0 - 1 - ... - (m-1) - 0`.
    Loop(usize),
    /// Path with `n` edges on `n + 1` vertices.
    Path(usize),
    /// Grid graph; vertex `r * cols + c`.
    Grid(usize, usize),
    /// 1-skeleton of the `n`-cube; vertices are bit strings.
    Cube(usize),
    Complete(usize),
    /// Sides `0..m` and `m..m + n`.
    CompleteBipartite(usize, usize),
    /// Seven-vertex torus.
    TorusMin,
    /// Six-vertex real projective plane.
    Rp2Min,
}

impl Family {
    pub fn build(self) -> Result<SimplicialComplex> {
        match self {
            Family::Simplex(n) => SimplicialComplex::from_facets(n + 1, [0..=n]),
            Family::Boundary(n) => {
                if n == 0 {
                    return Err(Error::InvalidParameter(
                        "boundary of a point is empty".into(),
                    ));
                }
                let facets = (0..=n).map(|skip| (0..=n).filter(move |&v| v != skip));
                SimplicialComplex::from_facets(n + 1, facets)
            }
            Family::Loop(m) => {
                if m < 3 {
                    return Err(Error::InvalidParameter(
                        "a loop needs at least 3 vertices".into(),
                    ));
                }
                SimplicialComplex::from_facets(m, (0..m).map(|i| [i, (i + 1) % m]))
            }
            Family::Path(n) => SimplicialComplex::from_facets(n + 1, (0..n).map(|i| [i, i + 1])),
            Family::Grid(rows, cols) => {
                let mut edges = Vec::new();
                for r in 0..rows {
                    for c in 0..cols {
                        let v = r * cols + c;
                        if c + 1 < cols {
                            edges.push([v, v + 1]);
                        }
                        if r + 1 < rows {
                            edges.push([v, v + cols]);
                        }
                    }
                }
                SimplicialComplex::from_facets(rows * cols, edges)
            }
            Family::Cube(n) => {
                if n > 6 {
                    return Err(Error::TooManyVertices {
                        count: 1 << n.min(20),
                    });
                }
                let m = 1usize << n;
                let edges = (0..m).flat_map(|v| {
                    (0..n)
                        .filter(move |b| v & (1 << b) == 0)
                        .map(move |b| [v, v | (1 << b)])
                });
                SimplicialComplex::from_facets(m, edges)
            }
            Family::Complete(m) => {
                let edges = (0..m).flat_map(|a| (a + 1..m).map(move |b| [a, b]));
                SimplicialComplex::from_facets(m, edges)
            }
            Family::CompleteBipartite(a, b) => {
                let edges = (0..a).flat_map(|u| (a..a + b).map(move |w| [u, w]));
                SimplicialComplex::from_facets(a + b, edges)
            }
            Family::TorusMin => Ok(torus_min()),
            Family::Rp2Min => Ok(rp2_min()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Simplex(n) => write!(f, "simplex:{n}"),
            Family::Boundary(n) => write!(f, "boundary:{n}"),
            Family::Loop(m) => write!(f, "loop:{m}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Grid(r, c) => write!(f, "grid:{r}:{c}"),
            Family::Cube(n) => write!(f, "cube:{n}"),
            Family::Complete(m) => write!(f, "complete:{m}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            Family::TorusMin => write!(f, "torus_min"),
            Family::Rp2Min => write!(f, "rp2_min"),
        }
    }
}

/// Parses `name[:p1[:p2]]`, the same shape `Display` produces.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let params = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("`{p}` is not a count")))
            })
            .collect::<Result<Vec<_>>>()?;
        family_from_parts(name, &params)
    }
}

fn family_from_parts(name: &str, params: &[usize]) -> Result<Family> {
    let arity = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "`{name}` takes {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let family = match name {
        "simplex" => Family::Simplex(params.first().copied().unwrap_or_default()),
        "boundary" => Family::Boundary(params.first().copied().unwrap_or_default()),
        "loop" => Family::Loop(params.first().copied().unwrap_or_default()),
        "path" => Family::Path(params.first().copied().unwrap_or_default()),
        "cube" => Family::Cube(params.first().copied().unwrap_or_default()),
        "complete" => Family::Complete(params.first().copied().unwrap_or_default()),
        "grid" => {
            arity(2)?;
            Family::Grid(params[0], params[1])
        }
        "complete_bipartite" => {
            arity(2)?;
            Family::CompleteBipartite(params[0], params[1])
        }
        "torus_min" => {
            arity(0)?;
            Family::TorusMin
        }
        "rp2_min" => {
            arity(0)?;
            Family::Rp2Min
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    if !matches!(
        name,
        "grid" | "complete_bipartite" | "torus_min" | "rp2_min"
    ) {
        arity(1)?;
    }
    Ok(family)
}

/// Builds a named complex from a family name and its integer parameters.
pub fn standard_complex(name: &str, params: &[usize]) -> Result<SimplicialComplex> {
    family_from_parts(name, params)?.build()
}

/// Vertex-transitive torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus_min() -> SimplicialComplex {
    let facets =
        (0..7).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]);
    SimplicialComplex::from_facets(7, facets).expect("valid")
}

/// Six-vertex projective plane (the hemi-icosahedron).
pub fn rp2_min() -> SimplicialComplex {
    const ONE_BASED: [[usize; 3]; 10] = [
        [1, 2, 4],
        [1, 2, 6],
        [1, 3, 5],
        [1, 3, 6],
        [1, 4, 5],
        [2, 3, 4],
        [2, 3, 5],
        [2, 5, 6],
        [3, 4, 6],
        [4, 5, 6],
    ];
    SimplicialComplex::from_facets(6, ONE_BASED.iter().map(|t| t.map(|v| v - 1))).expect("valid")
}

/// Two triangles glued along an edge plus an edge closing a loop, with the
/// black vertex that leaves exactly one critical vertex and one critical edge.
pub fn figure_five_left() -> (SimplicialComplex, VertexId) {
    let x = SimplicialComplex::from_facets(4, [vec![0, 1, 2], vec![0, 1, 3], vec![2, 3]])
        .expect("valid");
    (x, 1)
}

/// A complex with two triangles and a loop, together with a two-stage
/// sequence of black vertex sets (as masks) for the iterated matching.
pub fn figure_eight() -> (SimplicialComplex, Vec<u64>) {
    let x = SimplicialComplex::from_facets(
        6,
        [
            vec![1, 2, 5],
            vec![0, 1],
            vec![1, 4],
            vec![0, 4],
            vec![2, 3, 5],
        ],
    )
    .expect("valid");
    (x, vec![1 << 1, 1 << 3])
}

/// Connected complexes on at most six vertices used for exhaustive sweeps.
pub fn bundled_suite() -> Vec<(String, SimplicialComplex)> {
    let mut suite: Vec<(String, SimplicialComplex)> = [
        Family::Simplex(1),
        Family::Simplex(2),
        Family::Simplex(3),
        Family::Simplex(4),
        Family::Boundary(2),
        Family::Boundary(3),
        Family::Boundary(4),
        Family::Loop(4),
        Family::Loop(5),
        Family::Loop(6),
        Family::Path(3),
        Family::Complete(4),
        Family::CompleteBipartite(2, 3),
        Family::Rp2Min,
    ]
    .into_iter()
    .map(|f| (f.to_string(), f.build().expect("bundled family builds")))
    .collect();
    let l4 = Family::Loop(4).build().expect("valid");
    suite.push(("cone(loop:4)".into(), l4.cone().expect("fits")));
    let l3 = Family::Loop(3).build().expect("valid");
    suite.push(("suspension(loop:3)".into(), l3.suspension().expect("fits")));
    suite.push(("figure_five_left".into(), figure_five_left().0));
    suite.push(("figure_eight".into(), figure_eight().0));
    suite
}
