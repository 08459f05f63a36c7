//! The cube of colourings and its homology.
//!
//! Level `j` of the cube is `⊕_{|ε| = j} H^h(X, ε)`. Along a cube edge that
//! turns vertex `v` black, a class is sent to the class of its representative
//! with every simplex containing `v` deleted. Simplices avoiding `v` keep their
//! weight, so the map preserves the bidegree and the complex splits into one
//! cube complex per bidegree `(i, k)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::coloured::{BigradedRanks, Bigrading, Colouring, HorizontalHomology};
use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec};

/// Largest vertex count for which the full cube is enumerated by default.
pub const DEFAULT_CAP: usize = 20;

/// Trigrading `(j, i, k)`: cube level, dimension, weight.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Trigrading {
    pub j: usize,
    pub i: usize,
    pub k: usize,
}

impl fmt::Display for Trigrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.j, self.i, self.k)
    }
}

/// Nonzero überhomology ranks.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct TriGradedRanks(BTreeMap<Trigrading, usize>);

impl TriGradedRanks {
    pub fn get(&self, j: usize, i: usize, k: usize) -> usize {
        self.0.get(&Trigrading { j, i, k }).copied().unwrap_or(0)
    }

    pub(crate) fn insert(&mut self, j: usize, b: Bigrading, r: usize) {
        if r > 0 {
            self.0.insert(Trigrading { j, i: b.i, k: b.k }, r);
        }
    }

    /// The bigraded ranks in cube degree `j`.
    pub fn degree(&self, j: usize) -> BigradedRanks {
        self.0
            .iter()
            .filter(|(t, _)| t.j == j)
            .map(|(t, r)| (Bigrading::new(t.i, t.k), *r))
            .collect()
    }

    /// Ranks at a fixed bidegree, keyed by cube degree.
    pub fn at_bigrading(&self, b: Bigrading) -> BTreeMap<usize, usize> {
        self.0
            .iter()
            .filter(|(t, _)| t.i == b.i && t.k == b.k)
            .map(|(t, r)| (t.j, *r))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Trigrading, usize)> + '_ {
        self.0.iter().map(|(t, r)| (*t, *r))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

impl<const N: usize> From<[((usize, usize, usize), usize); N]> for TriGradedRanks {
    fn from(entries: [((usize, usize, usize), usize); N]) -> Self {
        let mut out = TriGradedRanks::default();
        for ((j, i, k), r) in entries {
            out.insert(j, Bigrading::new(i, k), r);
        }
        out
    }
}

impl fmt::Display for TriGradedRanks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (n, (t, r)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "F^{r}{t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct UberOptions {
    /// Refuse complexes with more vertices than this.
    pub cap: usize,
    /// Restrict the computation to these bidegrees; `None` means all.
    pub bigradings: Option<Vec<Bigrading>>,
}

impl Default for UberOptions {
    fn default() -> Self {
        UberOptions {
            cap: DEFAULT_CAP,
            bigradings: None,
        }
    }
}

impl UberOptions {
    fn wants(&self, b: Bigrading) -> bool {
        self.bigradings.as_ref().is_none_or(|bs| bs.contains(&b))
    }
}

/// Deletes every simplex containing `v`.
pub fn d_eta_chain(chain: &[Simplex], v: VertexId) -> Vec<Simplex> {
    chain.iter().copied().filter(|s| !s.contains(v)).collect()
}

/// Image of one representative under `d_η`, in target coordinates.
fn image_coordinates(
    source: &HorizontalHomology,
    target: &HorizontalHomology,
    b: Bigrading,
    rep: &BitVec,
    v: VertexId,
) -> Result<BitVec> {
    let src_basis = source.complex.basis(b);
    let tgt_basis = target.complex.basis(b);
    let mut image = BitVec::zeros(tgt_basis.len());
    for c in rep.ones() {
        let s = src_basis[c];
        if !s.contains(v) {
            let row = tgt_basis
                .binary_search(&s)
                .expect("a simplex avoiding v keeps its bidegree");
            image.set(row, true);
        }
    }
    match target.groups.get(&b) {
        Some(h) => h.class_coordinates(&image),
        None => Ok(BitVec::zeros(0)),
    }
}

/// Matrix of `d_η : H^h_b(X, ε) -> H^h_b(X, ε')` for `ε' = ε + v`, in the
/// representative bases of both sides.
pub fn d_eta_matrix(
    source: &HorizontalHomology,
    target: &HorizontalHomology,
    b: Bigrading,
    v: VertexId,
) -> Result<BitMatrix> {
    let eps = source.complex.colouring();
    if v >= eps.len() || eps.is_black(v) || eps.with_black(v) != target.complex.colouring() {
        return Err(Error::InvalidParameter(
            "target colouring must be the source with one white vertex turned black".into(),
        ));
    }
    let reps = source
        .groups
        .get(&b)
        .map_or(&[][..], |h| h.representatives());
    let rows = target.groups.get(&b).map_or(0, |h| h.rank());
    let mut m = BitMatrix::zeros(rows, reps.len());
    for (c, rep) in reps.iter().enumerate() {
        for r in image_coordinates(source, target, b, rep, v)?.ones() {
            m.set(r, c, true);
        }
    }
    Ok(m)
}

/// Horizontal homologies of every colouring at one cube level.
struct Level {
    homologies: Vec<HorizontalHomology>,
    position: HashMap<u64, usize>,
}

impl Level {
    fn compute(x: &SimplicialComplex, j: usize) -> Result<Self> {
        let m = x.vertex_count();
        let colourings: Vec<Colouring> = Colouring::level(m, j).collect();
        let homologies = colourings
            .par_iter()
            .map(|&eps| HorizontalHomology::compute(x, eps))
            .collect::<Result<Vec<_>>>()?;
        let position = colourings
            .iter()
            .enumerate()
            .map(|(n, c)| (c.bits(), n))
            .collect();
        Ok(Level {
            homologies,
            position,
        })
    }

    fn rank(&self, n: usize, b: Bigrading) -> usize {
        self.homologies[n].groups.get(&b).map_or(0, |h| h.rank())
    }

    /// Start of each summand at bidegree `b`, plus the total.
    fn offsets(&self, b: Bigrading) -> (Vec<usize>, usize) {
        let mut offsets = Vec::with_capacity(self.homologies.len());
        let mut total = 0;
        for n in 0..self.homologies.len() {
            offsets.push(total);
            total += self.rank(n, b);
        }
        (offsets, total)
    }

    fn bigradings(&self) -> Vec<Bigrading> {
        let mut out: Vec<Bigrading> = self
            .homologies
            .iter()
            .flat_map(|h| {
                h.groups
                    .iter()
                    .filter(|(_, g)| g.rank() > 0)
                    .map(|(b, _)| *b)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// `d^j` at bidegree `b`, from level `cur` to level `next`.
fn level_matrix(cur: &Level, next: &Level, b: Bigrading) -> Result<BitMatrix> {
    let (src_off, cols) = cur.offsets(b);
    let (tgt_off, rows) = next.offsets(b);
    let columns: Vec<Vec<(usize, usize)>> = (0..cur.homologies.len())
        .into_par_iter()
        .map(|n| -> Result<Vec<(usize, usize)>> {
            let source = &cur.homologies[n];
            let Some(group) = source.groups.get(&b) else {
                return Ok(Vec::new());
            };
            let eps = source.complex.colouring();
            let mut entries = Vec::new();
            for (c, rep) in group.representatives().iter().enumerate() {
                for v in (0..eps.len()).filter(|&v| !eps.is_black(v)) {
                    let t = next.position[&eps.with_black(v).bits()];
                    let coords = image_coordinates(source, &next.homologies[t], b, rep, v)?;
                    entries.extend(coords.ones().map(|r| (tgt_off[t] + r, src_off[n] + c)));
                }
            }
            Ok(entries)
        })
        .collect::<Result<_>>()?;
    let mut m = BitMatrix::zeros(rows, cols);
    for (r, c) in columns.into_iter().flatten() {
        // Distinct cube edges land in distinct target summands, so no entry repeats.
        m.flip(r, c);
    }
    Ok(m)
}

fn check_cap(x: &SimplicialComplex, cap: usize) -> Result<()> {
    if x.vertex_count() > cap {
        Err(Error::CapExceeded {
            vertices: x.vertex_count(),
            cap,
        })
    } else {
        Ok(())
    }
}

pub fn uber_homology(x: &SimplicialComplex) -> Result<TriGradedRanks> {
    uber_homology_with(x, &UberOptions::default())
}

/// `Ḧ^j_b = dim C^j_b - rank d^j_b - rank d^{j-1}_b`, level by level.
pub fn uber_homology_with(x: &SimplicialComplex, opts: &UberOptions) -> Result<TriGradedRanks> {
    check_cap(x, opts.cap)?;
    let m = x.vertex_count();
    let mut out = TriGradedRanks::default();
    let mut incoming_rank: BTreeMap<Bigrading, usize> = BTreeMap::new();
    let mut cur = Level::compute(x, 0)?;
    for j in 0..=m {
        let next = if j < m {
            Some(Level::compute(x, j + 1)?)
        } else {
            None
        };
        let bigradings: Vec<Bigrading> = cur
            .bigradings()
            .into_iter()
            .filter(|b| opts.wants(*b))
            .collect();
        let results = bigradings
            .par_iter()
            .map(|&b| -> Result<(Bigrading, usize, usize)> {
                let dim = cur.offsets(b).1;
                let out_rank = match &next {
                    Some(n) => level_matrix(&cur, n, b)?.rank(),
                    None => 0,
                };
                Ok((b, dim, out_rank))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut outgoing = BTreeMap::new();
        for (b, dim, out_rank) in results {
            let in_rank = incoming_rank.get(&b).copied().unwrap_or(0);
            out.insert(j, b, dim - out_rank - in_rank);
            outgoing.insert(b, out_rank);
        }
        incoming_rank = outgoing;
        match next {
            Some(n) => cur = n,
            None => break,
        }
    }
    Ok(out)
}

/// All cube differentials `d^0, ..., d^{m-1}` at bidegree `b`.
pub fn cube_differentials(
    x: &SimplicialComplex,
    b: Bigrading,
    cap: usize,
) -> Result<Vec<BitMatrix>> {
    check_cap(x, cap)?;
    let m = x.vertex_count();
    let mut mats = Vec::with_capacity(m);
    let mut cur = Level::compute(x, 0)?;
    for j in 0..m {
        let next = Level::compute(x, j + 1)?;
        mats.push(level_matrix(&cur, &next, b)?);
        cur = next;
    }
    Ok(mats)
}

/// Simplices lying in the closed star of every vertex.
pub fn closed_star_intersection(x: &SimplicialComplex) -> Vec<Simplex> {
    let m = x.vertex_count();
    x.iter()
        .filter(|s| (0..m).all(|v| x.contains(s.union(Simplex::vertex(v)))))
        .collect()
}

/// Degree-0 überhomology from the closed-star intersection: one generator in
/// bidegree `(dim σ, dim σ + 1)` per simplex `σ` in it.
pub fn uber_degree0_fast(x: &SimplicialComplex) -> BigradedRanks {
    closed_star_intersection(x)
        .into_iter()
        .map(|s| (Bigrading::new(s.dim(), s.dim() + 1), 1))
        .collect()
}

/// True when the link of every simplex has the homology of a sphere of the
/// complementary dimension.
pub fn is_homology_manifold(x: &SimplicialComplex) -> bool {
    homology_manifold_defect(x).is_none()
}

fn homology_manifold_defect(x: &SimplicialComplex) -> Option<String> {
    let n = x.dim()? as isize;
    x.iter().find_map(|s| {
        let expected = BTreeMap::from([(n - s.dim() as isize - 1, 1usize)]);
        let got = x.link_of(s).reduced_betti();
        (got != expected).then(|| format!("link of {s} has reduced Betti numbers {got:?}"))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopDegreeReport {
    pub top: BigradedRanks,
    /// The top degree is a single class in bidegree `(dim X, 0)`.
    pub top_is_fundamental: bool,
    /// For every vertex, the co-elementary colouring has weight-1 homology equal
    /// to the shifted reduced homology of the link and weight-0 homology equal
    /// to the homology of the star's complement, and nothing else.
    pub co_elementary_ok: bool,
}

impl TopDegreeReport {
    pub fn passed(&self) -> bool {
        self.top_is_fundamental && self.co_elementary_ok
    }
}

/// Checks the co-elementary decomposition at vertex `v`.
pub fn co_elementary_matches(x: &SimplicialComplex, v: VertexId) -> Result<bool> {
    let m = x.vertex_count();
    let h = crate::coloured::horizontal_homology(x, Colouring::co_elementary(m, v)?)?;
    let mut expected = BigradedRanks::new();
    for (d, r) in x.link(v)?.reduced_betti() {
        expected.add(Bigrading::new((d + 1) as usize, 1), r);
    }
    if let Ok(rest) = x.delete_star(v) {
        for (d, r) in rest.betti().into_iter().enumerate() {
            expected.add(Bigrading::new(d, 0), r);
        }
    }
    Ok(h == expected)
}

pub fn uber_topdegree_check(x: &SimplicialComplex, cap: usize) -> Result<TopDegreeReport> {
    if let Some(defect) = homology_manifold_defect(x) {
        return Err(Error::NotHomologyManifold(defect));
    }
    let n = x.dim().expect("manifolds are nonempty");
    let m = x.vertex_count();
    let ranks = uber_homology_with(
        x,
        &UberOptions {
            cap,
            bigradings: None,
        },
    )?;
    let top = ranks.degree(m);
    let co_elementary_ok = (0..m)
        .map(|v| co_elementary_matches(x, v))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|ok| ok);
    Ok(TopDegreeReport {
        top_is_fundamental: top == BigradedRanks::from([((n, 0), 1)]),
        top,
        co_elementary_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSuspensionReport {
    pub cone_top_vanishes: bool,
    /// Degree 0 of the cone is generated by the cone on the closed-star intersection.
    pub cone_degree0_matches: bool,
    pub suspension_degree0_matches: bool,
    /// For closed manifolds: the suspension's top degree is one class in
    /// bidegree `(dim X + 1, 0)`. `None` when `X` is not a homology manifold.
    pub suspension_top_matches: Option<bool>,
}

impl ConeSuspensionReport {
    pub fn passed(&self) -> bool {
        self.cone_top_vanishes
            && self.cone_degree0_matches
            && self.suspension_degree0_matches
            && self.suspension_top_matches != Some(false)
    }
}

pub fn cone_suspension_checks(x: &SimplicialComplex, cap: usize) -> Result<ConeSuspensionReport> {
    let m = x.vertex_count();
    let opts = UberOptions {
        cap,
        bigradings: None,
    };
    let cone = x.cone()?;
    let cone_ranks = uber_homology_with(&cone, &opts)?;
    // The cone on the empty set is the apex alone.
    let apex = Simplex::vertex(m);
    let base = closed_star_intersection(x);
    let mut coned = BigradedRanks::new();
    coned.add(Bigrading::new(0, 1), 1);
    for s in &base {
        coned.add(Bigrading::new(s.dim(), s.dim() + 1), 1);
        let t = s.union(apex);
        coned.add(Bigrading::new(t.dim(), t.dim() + 1), 1);
    }
    let susp = x.suspension()?;
    let susp_ranks = uber_homology_with(&susp, &opts)?;
    let x_ranks = uber_homology_with(x, &opts)?;
    let suspension_top_matches = is_homology_manifold(x).then(|| {
        let n = x.dim().expect("nonempty");
        susp_ranks.degree(m + 2) == BigradedRanks::from([((n + 1, 0), 1)])
    });
    Ok(ConeSuspensionReport {
        cone_top_vanishes: cone_ranks.degree(m + 1).is_zero(),
        cone_degree0_matches: cone_ranks.degree(0) == coned,
        suspension_degree0_matches: susp_ranks.degree(0) == x_ranks.degree(0),
        suspension_top_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Family;

    #[test]
    fn edge_uberhomology() {
        let x = Family::Simplex(1).build().unwrap();
        let u = uber_homology(&x).unwrap();
        assert_eq!(
            u,
            TriGradedRanks::from([((0, 0, 1), 2), ((0, 1, 2), 1), ((1, 0, 0), 1)])
        );
    }

    #[test]
    fn edge_cube_map_along_second_vertex() {
        // From (1,0) to (1,1): the class of v1 in bidegree (0,1) goes to the
        // unique class of (1,1), which is represented by either vertex.
        let x = Family::Simplex(1).build().unwrap();
        let src = HorizontalHomology::compute(&x, "10".parse().unwrap()).unwrap();
        let tgt = HorizontalHomology::compute(&x, "11".parse().unwrap()).unwrap();
        let m = d_eta_matrix(&src, &tgt, Bigrading::new(0, 0), 1).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.cols(), 1);
        assert!(m.get(0, 0));
        assert!(d_eta_matrix(&src, &tgt, Bigrading::new(0, 0), 0).is_err());
    }

    #[test]
    fn deletion_chain_map() {
        let e = |a, b| Simplex::new([a, b]).unwrap();
        let chain = [e(0, 1), e(1, 2)];
        assert_eq!(d_eta_chain(&chain, 0), vec![e(1, 2)]);
        assert_eq!(
            d_eta_chain(&[Simplex::vertex(0)], 1),
            vec![Simplex::vertex(0)]
        );
        assert!(d_eta_chain(&[Simplex::vertex(0)], 0).is_empty());
    }

    #[test]
    fn cube_squares_to_zero_on_triangle_boundary() {
        let x = Family::Boundary(2).build().unwrap();
        for b in [
            Bigrading::new(0, 0),
            Bigrading::new(0, 1),
            Bigrading::new(1, 1),
            Bigrading::new(1, 2),
        ] {
            let ds = cube_differentials(&x, b, DEFAULT_CAP).unwrap();
            for w in ds.windows(2) {
                assert!(w[1].mul(&w[0]).is_zero());
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let x = Family::Loop(6).build().unwrap();
        let opts = UberOptions {
            cap: 5,
            bigradings: None,
        };
        assert_eq!(
            uber_homology_with(&x, &opts).unwrap_err(),
            Error::CapExceeded {
                vertices: 6,
                cap: 5
            }
        );
    }

    #[test]
    fn degree_zero_of_simplex() {
        let x = Family::Simplex(2).build().unwrap();
        assert_eq!(
            uber_degree0_fast(&x),
            BigradedRanks::from([((0, 1), 3), ((1, 2), 3), ((2, 3), 1)])
        );
    }
}
