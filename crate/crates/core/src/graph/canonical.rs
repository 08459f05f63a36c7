//! Canonical labelling by colour refinement plus individualisation.

use super::SimpleGraph;
use crate::complex::VertexId;
use crate::error::{Error, Result};

/// The upper-triangle code must fit in 64 bits.
pub const CANONICAL_MAX_VERTICES: usize = 11;

/// Isomorphism-invariant code: equal iff the graphs are isomorphic.
pub fn canonical_code(g: &SimpleGraph) -> Result<u64> {
    Ok(search(g)?.0)
}

/// The graph relabelled into canonical position.
pub fn canonical_form(g: &SimpleGraph) -> Result<SimpleGraph> {
    let (_, perm) = search(g)?;
    g.relabel(&perm)
}

fn search(g: &SimpleGraph) -> Result<(u64, Vec<VertexId>)> {
    let n = g.vertex_count();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "canonical forms are limited to {CANONICAL_MAX_VERTICES} vertices"
        )));
    }
    let colours = refine(g, vec![0; n]);
    let mut best: Option<(u64, Vec<VertexId>)> = None;
    explore(g, colours, &mut best);
    Ok(best.unwrap_or((0, Vec::new())))
}

/// Iterates `colour <- (colour, sorted neighbour colours)` to a fixed point.
/// Colours are renumbered by sorted signature, so the result is label-invariant.
fn refine(g: &SimpleGraph, mut colours: Vec<usize>) -> Vec<usize> {
    let n = g.vertex_count();
    loop {
        let classes = colours
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = crate::complex::mask_iter(g.neighbours(v))
                    .map(|w| colours[w])
                    .collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colours = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colours;
        }
    }
}

fn encode(g: &SimpleGraph, pos: &[usize]) -> u64 {
    let n = g.vertex_count();
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        // Pair (a, b) with a < b sits at index b(b-1)/2 + a.
        code |= 1 << (b * (b - 1) / 2 + a);
    }
    debug_assert!(n <= CANONICAL_MAX_VERTICES);
    code
}

fn explore(g: &SimpleGraph, colours: Vec<usize>, best: &mut Option<(u64, Vec<VertexId>)>) {
    let n = g.vertex_count();
    let mut counts = vec![0usize; n];
    for &c in &colours {
        counts[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
        let code = encode(g, &colours);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colours));
        }
        return;
    };
    let cell: Vec<VertexId> = (0..n).filter(|&v| colours[v] == target).collect();
    let mut tried: Vec<VertexId> = Vec::new();
    for &v in &cell {
        // Swapping twins is an automorphism, so one representative suffices.
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let split: Vec<usize> = colours
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + usize::from(c == target && w != v))
            .collect();
        explore(g, refine(g, split), best);
    }
}

fn twins(g: &SimpleGraph, u: VertexId, v: VertexId) -> bool {
    let strip = !((1u64 << u) | (1u64 << v));
    g.neighbours(u) & strip == g.neighbours(v) & strip
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(1..=9);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let g = SimpleGraph::from_edges(n, edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }
    }

    #[test]
    fn separates_the_two_cubic_graphs_on_six_vertices() {
        let prism = SimpleGraph::prism();
        let k33 = SimpleGraph::complete_bipartite(3, 3).unwrap();
        assert_ne!(
            canonical_code(&prism).unwrap(),
            canonical_code(&k33).unwrap()
        );
    }
}
