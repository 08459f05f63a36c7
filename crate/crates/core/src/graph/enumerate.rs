//! Isomorphism classes of small graphs, by vertex augmentation and canonical dedup.

use std::collections::BTreeMap;

use super::canonical::{canonical_code, canonical_form, CANONICAL_MAX_VERTICES};
use super::SimpleGraph;
use crate::error::{Error, Result};

fn check(n: usize) -> Result<()> {
    if n == 0 || n > CANONICAL_MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports 1..={CANONICAL_MAX_VERTICES} vertices"
        )));
    }
    Ok(())
}

fn extend(g: &SimpleGraph, nbrs: u64) -> SimpleGraph {
    let n = g.vertex_count();
    let edges = g
        .edges()
        .chain(crate::complex::mask_iter(nbrs).map(|u| (u, n)))
        .collect::<Vec<_>>();
    SimpleGraph::from_edges(n + 1, edges).expect("fresh vertex keeps the graph simple")
}

/// Dedups by canonical code; the map keeps output order deterministic.
fn dedup(candidates: impl Iterator<Item = SimpleGraph>) -> Result<Vec<SimpleGraph>> {
    let mut seen = BTreeMap::new();
    for g in candidates {
        let code = canonical_code(&g)?;
        if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(code) {
            e.insert(canonical_form(&g)?);
        }
    }
    Ok(seen.into_values().collect())
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    check(n)?;
    // Every graph on n vertices is a graph on n - 1 vertices plus one vertex.
    let mut all = vec![SimpleGraph::empty(1)?];
    for size in 1..n {
        let candidates = all
            .iter()
            .flat_map(|g| (0..1u64 << size).map(move |nbrs| extend(g, nbrs)))
            .collect::<Vec<_>>();
        all = dedup(candidates.into_iter())?;
    }
    Ok(all.into_iter().filter(SimpleGraph::is_connected).collect())
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn trees(n: usize) -> Result<Vec<SimpleGraph>> {
    check(n)?;
    let mut level = vec![SimpleGraph::empty(1)?];
    for size in 1..n {
        let candidates = level
            .iter()
            .flat_map(|t| (0..size).map(move |v| extend(t, 1 << v)))
            .collect::<Vec<_>>();
        level = dedup(candidates.into_iter())?;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        let tree_counts: Vec<usize> = (1..=8).map(|n| trees(n).unwrap().len()).collect();
        assert_eq!(tree_counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
        assert!(trees(8).unwrap().iter().all(SimpleGraph::is_tree));
    }
}
