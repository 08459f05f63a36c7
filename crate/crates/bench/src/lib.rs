//! Fixtures shared by the criterion benches.

use uberhom::complex::{rp2_min, torus_min, Family};
use uberhom::graph::SimpleGraph;
use uberhom::{Colouring, SimplicialComplex};

/// Complexes large enough for the cube to dominate, small enough to finish.
pub fn uber_fixtures() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("boundary:4", Family::Boundary(4).build().expect("valid")),
        ("loop:8", Family::Loop(8).build().expect("valid")),
        ("rp2_min", rp2_min()),
        ("torus_min", torus_min()),
    ]
}

/// A colouring with every other vertex black.
pub fn alternating(n: usize) -> Colouring {
    let bits = (0..n).step_by(2).fold(0u64, |acc, v| acc | 1 << v);
    Colouring::new(bits, n).expect("fits")
}

pub fn graph_fixtures() -> Vec<(&'static str, SimpleGraph)> {
    let graph = |f: Family| SimpleGraph::from_complex(&f.build().expect("valid")).expect("graph");
    vec![
        ("prism", SimpleGraph::prism()),
        (
            "k3,3",
            SimpleGraph::complete_bipartite(3, 3).expect("valid"),
        ),
        ("grid:3:3", graph(Family::Grid(3, 3))),
        ("cube:3", graph(Family::Cube(3))),
    ]
}
