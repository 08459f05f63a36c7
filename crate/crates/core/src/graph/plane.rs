//! Plane graphs as rotation systems, their duals, and overlaid Tait graphs.
//!
//! Edge `e` has darts `2e` (from `edges[e].0`) and `2e + 1` (from `edges[e].1`).
//! Faces are the orbits of `d -> succ_{head(d)}(rev(d))`.

use std::collections::HashMap;

use super::homology::matching_complex_of_edges;
use crate::coloured::{horizontal_homology, BigradedRanks, Bigrading, Colouring};
use crate::complex::VertexId;
use crate::error::{Error, Result};

/// A connected multigraph embedded in the sphere. Loops and parallel edges are
/// allowed so that duals stay in the same type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
}

fn tail(edges: &[(VertexId, VertexId)], d: usize) -> VertexId {
    let (u, v) = edges[d / 2];
    if d.is_multiple_of(2) {
        u
    } else {
        v
    }
}

impl PlaneGraph {
    /// Validates that every dart appears once, at its tail, and that the
    /// embedding is connected and spherical.
    pub fn new(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if rotation.len() != vertex_count || vertex_count == 0 {
            return Err(Error::InvalidParameter(
                "one rotation per vertex is required".into(),
            ));
        }
        let darts = 2 * edges.len();
        let mut slot: Vec<Option<(VertexId, usize)>> = vec![None; darts];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts || tail(&edges, d) != v || slot[d].is_some() {
                    return Err(Error::InvalidParameter(format!(
                        "dart {d} misplaced at vertex {v}"
                    )));
                }
                slot[d] = Some((v, i));
            }
        }
        if slot.iter().any(Option::is_none) {
            return Err(Error::InvalidParameter(
                "a dart is missing from the rotation".into(),
            ));
        }
        let next = |d: usize| {
            let r = d ^ 1;
            let (v, i) = slot[r].expect("checked");
            let rot = &rotation[v];
            rot[(i + 1) % rot.len()]
        };
        let mut face_of = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = faces.len();
                orbit.push(d);
                d = next(d);
            }
            faces.push(orbit);
        }
        // A lone vertex has one face and no darts.
        if edges.is_empty() {
            faces.push(Vec::new());
        }
        let connected = {
            let mut seen = vec![false; vertex_count];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &d in &rotation[v] {
                    let w = tail(&edges, d ^ 1);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        if !connected {
            return Err(Error::Disconnected);
        }
        let euler = vertex_count as i64 - edges.len() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NotSpherical { euler });
        }
        Ok(PlaneGraph {
            vertex_count,
            edges,
            rotation,
            faces,
            face_of,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Faces as cyclic dart sequences.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// The face to the side of dart `d` traced by the face permutation.
    pub fn face_of_dart(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn rotation(&self, v: VertexId) -> &[usize] {
        &self.rotation[v]
    }

    pub fn to_simple_graph(&self) -> Result<super::SimpleGraph> {
        super::SimpleGraph::from_edges(self.vertex_count, self.edges.iter().copied())
    }
}

/// Parses lines `v <id>: <neighbour> <neighbour> ...` giving each vertex's
/// neighbours in cyclic order. Commas may separate neighbours.
pub fn parse_plane_graph(text: &str) -> Result<PlaneGraph> {
    let parse_err = |line: usize, message: String| Error::Parse { line, message };
    let mut lists: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let rest = body
            .strip_prefix('v')
            .ok_or_else(|| parse_err(line, "expected `v <id>: <neighbours>`".into()))?;
        let (id, nbrs) = rest
            .split_once(':')
            .ok_or_else(|| parse_err(line, "missing `:`".into()))?;
        let id: usize = id
            .trim()
            .parse()
            .map_err(|_| parse_err(line, format!("`{}` is not a vertex id", id.trim())))?;
        let nbrs = nbrs
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(line, format!("`{t}` is not a vertex id")))
            })
            .collect::<Result<Vec<_>>>()?;
        lists.push((line, id, nbrs));
    }
    let n = lists.len();
    let mut by_id: Vec<Option<(usize, Vec<usize>)>> = vec![None; n];
    for (line, id, nbrs) in lists {
        if id >= n || by_id[id].is_some() {
            return Err(parse_err(
                line,
                format!("vertex ids must be 0..{n}, each once"),
            ));
        }
        by_id[id] = Some((line, nbrs));
    }
    let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut rotation = vec![Vec::new(); n];
    for (u, entry) in by_id.iter().enumerate() {
        let (line, nbrs) = entry.as_ref().expect("all ids present");
        for &w in nbrs {
            if w >= n || w == u {
                return Err(parse_err(*line, format!("bad neighbour {w} of {u}")));
            }
            let key = (u.min(w), u.max(w));
            let e = *edge_id.entry(key).or_insert_with(|| {
                edges.push(key);
                edges.len() - 1
            });
            rotation[u].push(2 * e + usize::from(u != key.0));
        }
    }
    for (u, entry) in by_id.iter().enumerate() {
        let (line, nbrs) = entry.as_ref().expect("all ids present");
        let mut sorted = nbrs.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(*line, format!("repeated neighbour at {u}")));
        }
        for &w in nbrs {
            if !by_id[w].as_ref().expect("present").1.contains(&u) {
                return Err(parse_err(*line, format!("{w} does not list {u} back")));
            }
        }
    }
    PlaneGraph::new(n, edges, rotation)
}

/// Faces become vertices; the dual of edge `e` joins the faces on its two sides.
pub fn dual_graph(p: &PlaneGraph) -> Result<PlaneGraph> {
    let edges: Vec<(VertexId, VertexId)> = (0..p.edges.len())
        .map(|e| (p.face_of[2 * e], p.face_of[2 * e + 1]))
        .collect();
    // Dart d of the dual leaves the face that d bounds.
    PlaneGraph::new(p.faces.len(), edges, p.faces.clone())
}

/// `Γ(G)`: primal vertices `0..n`, face vertices `n..n+F`, one crossing vertex
/// per edge after those. Edge `e` of `G` contributes the four edges at
/// indices `4e..4e+4`: its two half-edges, then the two dual half-edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TaitGraph {
    pub primal_vertices: usize,
    pub face_vertices: usize,
    pub crossing_vertices: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl TaitGraph {
    pub fn vertex_count(&self) -> usize {
        self.primal_vertices + self.face_vertices + self.crossing_vertices
    }

    pub fn is_black(&self, edge: usize) -> bool {
        edge % 4 < 2
    }

    /// Every edge joins a crossing vertex to a primal or face vertex.
    pub fn is_bipartite_by_construction(&self) -> bool {
        let first_crossing = self.primal_vertices + self.face_vertices;
        self.edges
            .iter()
            .all(|&(a, c)| a < first_crossing && c >= first_crossing)
    }
}

pub fn tait_graph(p: &PlaneGraph) -> TaitGraph {
    let n = p.vertex_count;
    let f = p.faces.len();
    let mut edges = Vec::with_capacity(4 * p.edges.len());
    for (e, &(u, v)) in p.edges.iter().enumerate() {
        let c = n + f + e;
        edges.extend([
            (u, c),
            (v, c),
            (n + p.face_of[2 * e], c),
            (n + p.face_of[2 * e + 1], c),
        ]);
    }
    TaitGraph {
        primal_vertices: n,
        face_vertices: f,
        crossing_vertices: p.edges.len(),
        edges,
    }
}

/// Colours a vertex of `M(Γ(G))` black when its edge touches a primal vertex.
pub fn tait_colouring(t: &TaitGraph) -> Result<Colouring> {
    let bits = (0..t.edges.len())
        .filter(|&e| t.is_black(e))
        .fold(0u64, |acc, e| acc | 1 << e);
    Colouring::new(bits, t.edges.len())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Theorem42Report {
    /// Horizontal homology of `(M(Γ(G)), ε_G)`.
    pub lhs: BigradedRanks,
    /// Sum over matchings of `B(G*)` of shifted reduced homologies.
    pub rhs: BigradedRanks,
    /// Homology of `M(B(G))`, placed in weight 0.
    pub bottom: BigradedRanks,
    pub max_weight: usize,
}

impl Theorem42Report {
    fn level(r: &BigradedRanks, k: usize) -> BigradedRanks {
        r.iter().filter(|(b, _)| b.k == k).collect()
    }

    pub fn level_matches(&self, k: usize) -> bool {
        Self::level(&self.lhs, k) == Self::level(&self.rhs, k)
    }

    pub fn bottom_matches(&self) -> bool {
        Self::level(&self.lhs, 0) == self.bottom
    }

    pub fn holds(&self) -> bool {
        (0..=self.max_weight).all(|k| self.level_matches(k))
            && self.lhs == self.rhs
            && self.bottom_matches()
    }
}

fn half_edges(t: &TaitGraph, kept: impl Fn(usize) -> bool) -> Vec<(VertexId, VertexId)> {
    (0..t.crossing_vertices)
        .filter(|&e| kept(e))
        .flat_map(|e| [t.edges[4 * e], t.edges[4 * e + 1]])
        .collect()
}

/// Computes both sides of the decomposition of `H^h(M(Γ(G)), ε_G)` by weight.
/// `cap` bounds the vertex count of `M(Γ(G))`, which is four per edge.
pub fn theorem42_verify(p: &PlaneGraph, cap: usize) -> Result<Theorem42Report> {
    let t = tait_graph(p);
    if t.edges.len() > cap {
        return Err(Error::CapExceeded {
            vertices: t.edges.len(),
            cap,
        });
    }
    let m_gamma = matching_complex_of_edges(&t.edges)?;
    let lhs = horizontal_homology(&m_gamma, tait_colouring(&t)?)?;

    let betti_of = |edges: &[(VertexId, VertexId)]| -> Result<Vec<usize>> {
        Ok(matching_complex_of_edges(edges)?.betti())
    };
    let mut bottom = BigradedRanks::new();
    for (i, r) in betti_of(&half_edges(&t, |_| true))?.into_iter().enumerate() {
        bottom.add(Bigrading::new(i, 0), r);
    }

    let mut rhs = bottom.clone();
    let white: Vec<usize> = (0..t.edges.len()).filter(|&e| !t.is_black(e)).collect();
    let mut used = vec![false; t.vertex_count()];
    let mut stack: Vec<usize> = Vec::new();
    white_matchings(
        &t,
        &white,
        0,
        &mut used,
        &mut stack,
        &mut |m: &[usize]| {
            let k = m.len();
            let mut removed = vec![false; t.crossing_vertices];
            for &w in m {
                removed[w / 4] = true;
            }
            let kept = half_edges(&t, |e| !removed[e]);
            if kept.is_empty() {
                rhs.add(Bigrading::new(k - 1, k), 1);
            } else {
                for (d, r) in matching_complex_of_edges(&kept)?.reduced_betti() {
                    rhs.add(Bigrading::new((d + k as isize) as usize, k), r);
                }
            }
            Ok(())
        },
    )?;
    Ok(Theorem42Report {
        lhs,
        rhs,
        bottom,
        max_weight: t.crossing_vertices,
    })
}

/// Visits every nonempty matching among the white edges.
fn white_matchings(
    t: &TaitGraph,
    white: &[usize],
    from: usize,
    used: &mut [bool],
    stack: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    for i in from..white.len() {
        let (a, b) = t.edges[white[i]];
        if used[a] || used[b] {
            continue;
        }
        used[a] = true;
        used[b] = true;
        stack.push(white[i]);
        visit(stack)?;
        white_matchings(t, white, i + 1, used, stack, visit)?;
        stack.pop();
        used[a] = false;
        used[b] = false;
    }
    Ok(())
}
