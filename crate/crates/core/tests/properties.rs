//! Invariants checked on random inputs.

use proptest::prelude::*;
use proptest::test_runner::Config;

use uberhom::coloured::{
    black_subcomplex, diagonal_homology, diagonal_homology_via_complement, graded_euler,
    horizontal_homology, BigradedF2Complex,
};
use uberhom::f2::{BitMatrix, BitVec};
use uberhom::graph::{
    canonical_code, delta_lower_bounds, dissimilarity, encode_graph6, graph_horizontal_ranks,
    parse_graph6, theta, vertex_cover_bijection_check, SimpleGraph,
};
use uberhom::uber::{cube_differentials, uber_homology};
use uberhom::{Bigrading, Colouring, SimplicialComplex};

fn matrix() -> impl Strategy<Value = BitMatrix> {
    (1usize..12, 1usize..12).prop_flat_map(|(r, c)| {
        prop::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
            let mut m = BitMatrix::zeros(r, c);
            for (idx, b) in bits.into_iter().enumerate() {
                m.set(idx / c, idx % c, b);
            }
            m
        })
    })
}

/// A complex on `2..=max` vertices generated by up to five random facets.
fn complex(max: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 1..=5).prop_map(move |masks| {
            let facets = masks
                .iter()
                .map(|&m| (0..n).filter(move |v| m >> v & 1 == 1).collect::<Vec<_>>());
            SimplicialComplex::from_facets(n, facets).unwrap()
        })
    })
}

fn coloured_complex(max: usize) -> impl Strategy<Value = (SimplicialComplex, Colouring)> {
    complex(max).prop_flat_map(|x| {
        let n = x.vertex_count();
        (Just(x), 0u64..(1 << n)).prop_map(move |(x, bits)| (x, Colouring::new(bits, n).unwrap()))
    })
}

/// A connected graph: a random spanning tree plus random extra edges.
fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = SimpleGraph> {
    (min..=max).prop_flat_map(|n| {
        let parents = prop::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = prop::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (parents, extra).prop_map(move |(parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), keep) in pairs.zip(extra) {
                if keep && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == (u, v)) {
                    edges.push((u, v));
                }
            }
            SimpleGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Straight-line graph6 decoder for graphs with fewer than 63 vertices.
fn decode_graph6(code: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = code.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits: Vec<bool> = bytes[1..]
        .iter()
        .flat_map(|&c| (0..6).rev().map(move |s| (c - 63) >> s & 1 == 1))
        .collect();
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    (n, edges)
}

proptest! {
    #![proptest_config(Config::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in kernel.vectors() {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn differentials_square_to_zero((x, eps) in coloured_complex(6)) {
        let c = BigradedF2Complex::build(&x, eps).unwrap();
        prop_assert!(c.check_differentials().is_ok());
    }

    #[test]
    fn extreme_colourings((x, _) in coloured_complex(6)) {
        let n = x.vertex_count();
        let black = horizontal_homology(&x, Colouring::all_black(n)).unwrap();
        let betti = x.betti();
        for (b, r) in black.iter() {
            prop_assert_eq!(b.k, 0);
            prop_assert_eq!(r, betti[b.i]);
        }
        prop_assert_eq!(black.total(), betti.iter().sum::<usize>());
        let white = horizontal_homology(&x, Colouring::all_white(n)).unwrap();
        for (i, &count) in x.f_vector().iter().enumerate() {
            prop_assert_eq!(white.get(i, i + 1), count);
        }
        prop_assert_eq!(white.total(), x.len());
    }

    #[test]
    fn diagonal_from_complement((x, eps) in coloured_complex(6)) {
        prop_assert_eq!(
            diagonal_homology(&x, eps).unwrap(),
            diagonal_homology_via_complement(&x, eps).unwrap()
        );
    }

    #[test]
    fn graded_euler_specialisations((x, eps) in coloured_complex(6)) {
        let p = graded_euler(&x, eps).unwrap();
        prop_assert_eq!(p.eval(1), x.euler());
        let bl = black_subcomplex(&x, eps).unwrap();
        prop_assert_eq!(p.eval(0), bl.euler());
    }

    #[test]
    fn cube_squares_to_zero(x in complex(5), i in 0usize..3, k in 0usize..4) {
        let mats = cube_differentials(&x, Bigrading::new(i, k), 20).unwrap();
        for pair in mats.windows(2) {
            prop_assert!(pair[1].mul(&pair[0]).is_zero());
        }
    }

    #[test]
    fn cube_euler_characteristic(x in complex(5)) {
        let n = x.vertex_count();
        let u = uber_homology(&x).unwrap();
        let mut chain: std::collections::BTreeMap<Bigrading, i64> = Default::default();
        for eps in Colouring::all(n) {
            let sign = if eps.black_count() % 2 == 0 { 1 } else { -1 };
            for (b, r) in horizontal_homology(&x, eps).unwrap().iter() {
                *chain.entry(b).or_default() += sign * r as i64;
            }
        }
        let mut homology: std::collections::BTreeMap<Bigrading, i64> = Default::default();
        for (t, r) in u.iter() {
            let sign = if t.j % 2 == 0 { 1 } else { -1 };
            *homology.entry(Bigrading::new(t.i, t.k)).or_default() += sign * r as i64;
        }
        chain.retain(|_, v| *v != 0);
        homology.retain(|_, v| *v != 0);
        prop_assert_eq!(chain, homology);
    }

    #[test]
    fn uber_relabelling_invariance(
        (x, perm) in complex(5).prop_flat_map(|x| {
            let n = x.vertex_count();
            (Just(x), permutation(n))
        })
    ) {
        let y = x.relabel(&perm).unwrap();
        prop_assert_eq!(uber_homology(&x).unwrap(), uber_homology(&y).unwrap());
    }

    #[test]
    fn graph_closed_form_matches_engine(
        (g, bits) in connected_graph(2, 8).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), 0u64..(1 << n))
        })
    ) {
        let eps = Colouring::new(bits, g.vertex_count()).unwrap();
        let x = g.to_complex().unwrap();
        prop_assert_eq!(
            graph_horizontal_ranks(&g, eps).unwrap(),
            horizontal_homology(&x, eps).unwrap()
        );
    }

    #[test]
    fn theta_relabelling_invariance(
        (g, perm) in connected_graph(2, 7).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), permutation(n))
        })
    ) {
        let h = g.relabel(&perm).unwrap();
        for j in 0..=g.vertex_count() {
            prop_assert_eq!(theta(&g, j).unwrap(), theta(&h, j).unwrap());
        }
        prop_assert!(dissimilarity(&g, &h).unwrap().is_theta_equivalent());
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn graph6_matches_reference_decoder(g in connected_graph(1, 20)) {
        let code = encode_graph6(&g);
        let (n, mut edges) = decode_graph6(&code);
        edges.sort_unstable();
        prop_assert_eq!(n, g.vertex_count());
        prop_assert_eq!(edges, g.edges().collect::<Vec<_>>());
        prop_assert_eq!(parse_graph6(&code).unwrap(), g);
    }

    #[test]
    fn vertex_cover_bijection(g in connected_graph(2, 8)) {
        prop_assert!(vertex_cover_bijection_check(&g).unwrap());
    }

    #[test]
    fn lower_bounds_never_exceed_delta(
        (g, h) in (3usize..=7).prop_flat_map(|n| (connected_graph(n, n), connected_graph(n, n)))
    ) {
        let delta = dissimilarity(&g, &h).unwrap().value().unwrap();
        if let Some(bound) = delta_lower_bounds(&g, &h).unwrap().best() {
            prop_assert!(bound <= delta, "bound {} above Δ {}", bound, delta);
        }
    }
}

#[test]
fn rank_of_identity_and_zero() {
    assert_eq!(BitMatrix::identity(7).rank(), 7);
    assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
    assert!(BitVec::zeros(4).is_zero());
}
