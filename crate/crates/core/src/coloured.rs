//! Vertex colourings, the weight filtration and the bigraded homologies it induces.
//!
//! The weight of a simplex is its number of white vertices. The simplicial
//! boundary splits as `∂ = ∂_h + ∂_d`: `∂_h` drops a black vertex and keeps the
//! weight, `∂_d` drops a white vertex and lowers it by one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::complex::{mask_iter, Simplex, SimplicialComplex, VertexId, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::f2::{homology_rank, homology_unchecked, BitMatrix, HomologyWithBasis};

/// Black (1) / white (0) assignment to the vertices `0..len`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring {
    bits: u64,
    len: usize,
}

impl Colouring {
    /// Bit `v` of `bits` is the colour of vertex `v`.
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidParameter("colouring of length 0".into()));
        }
        if len > MAX_VERTICES {
            return Err(Error::TooManyVertices { count: len });
        }
        if bits & !full_mask(len) != 0 {
            return Err(Error::InvalidParameter(format!(
                "colouring bits exceed length {len}"
            )));
        }
        Ok(Colouring { bits, len })
    }

    pub fn all_black(len: usize) -> Self {
        Colouring::new(full_mask(len), len).expect("valid length")
    }

    pub fn all_white(len: usize) -> Self {
        Colouring::new(0, len).expect("valid length")
    }

    /// Only vertex `v` is black.
    pub fn elementary(len: usize, v: VertexId) -> Result<Self> {
        if v >= len {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: len,
            });
        }
        Colouring::new(1 << v, len)
    }

    /// Every vertex black except `v`.
    pub fn co_elementary(len: usize, v: VertexId) -> Result<Self> {
        Ok(Colouring::elementary(len, v)?.complement())
    }

    /// All `2^len` colourings in increasing bit order.
    pub fn all(len: usize) -> impl Iterator<Item = Colouring> {
        assert!(len > 0 && len < 64, "enumeration needs 0 < len < 64");
        (0..1u64 << len).map(move |bits| Colouring { bits, len })
    }

    /// Colourings with exactly `j` black vertices, increasing bit order.
    pub fn level(len: usize, j: usize) -> impl Iterator<Item = Colouring> {
        assert!(len > 0 && len <= MAX_VERTICES);
        let full = full_mask(len);
        let mut next = if j > len {
            None
        } else if j == 0 {
            Some(0u64)
        } else {
            Some(full_mask(j))
        };
        std::iter::from_fn(move || {
            let current = next?;
            next = next_same_popcount(current).filter(|n| n & !full == 0 && *n > current);
            if current == 0 {
                next = None;
            }
            Some(Colouring { bits: current, len })
        })
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(self) -> usize {
        self.len
    }

    /// Always false; zero-length colourings are rejected.
    pub fn is_empty(self) -> bool {
        false
    }

    #[inline]
    pub fn black_mask(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn white_mask(self) -> u64 {
        !self.bits & full_mask(self.len)
    }

    /// Number of black vertices, `|ε|`.
    pub fn black_count(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_black(self, v: VertexId) -> bool {
        v < self.len && (self.bits >> v) & 1 == 1
    }

    pub fn black_vertices(self) -> impl Iterator<Item = VertexId> {
        mask_iter(self.bits)
    }

    pub fn complement(self) -> Self {
        Colouring {
            bits: self.white_mask(),
            len: self.len,
        }
    }

    /// Same colouring with `v` turned black.
    pub fn with_black(self, v: VertexId) -> Self {
        assert!(v < self.len);
        Colouring {
            bits: self.bits | (1 << v),
            len: self.len,
        }
    }

    /// Number of white vertices of `sigma`.
    #[inline]
    pub fn weight(self, sigma: Simplex) -> usize {
        (sigma.mask() & !self.bits).count_ones() as usize
    }

    /// Relabels so that the colour of `v` moves to `perm[v]`.
    pub fn permute(self, perm: &[VertexId]) -> Self {
        let bits = mask_iter(self.bits).fold(0u64, |acc, v| acc | (1 << perm[v]));
        Colouring {
            bits,
            len: self.len,
        }
    }

    pub(crate) fn check_against(self, x: &SimplicialComplex) -> Result<()> {
        if self.len == x.vertex_count() {
            Ok(())
        } else {
            Err(Error::ColouringLength {
                colouring: self.len,
                vertices: x.vertex_count(),
            })
        }
    }
}

fn full_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Next integer with the same popcount (Gosper's hack).
fn next_same_popcount(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Written vertex by vertex: `"100"` colours vertex 0 black.
impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.len {
            write!(f, "{}", u8::from(self.is_black(v)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Colouring({self})")
    }
}

impl FromStr for Colouring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let s = s.trim();
        if s.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices { count: s.len() });
        }
        for (v, ch) in s.chars().enumerate() {
            match ch {
                '1' => bits |= 1 << v,
                '0' => {}
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "colouring digit `{other}` is not 0 or 1"
                    )))
                }
            }
        }
        Colouring::new(bits, s.chars().count())
    }
}

/// Weight of `sigma` under `eps`, checking that the colouring covers it.
pub fn weight(sigma: Simplex, eps: Colouring) -> Result<usize> {
    let top = 63 - sigma.mask().leading_zeros() as usize;
    if top >= eps.len() {
        return Err(Error::ColouringLength {
            colouring: eps.len(),
            vertices: top + 1,
        });
    }
    Ok(eps.weight(sigma))
}

/// Bidegree `(i, k)`: dimension and weight.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Bigrading {
    pub i: usize,
    pub k: usize,
}

impl Bigrading {
    pub const fn new(i: usize, k: usize) -> Self {
        Bigrading { i, k }
    }
}

impl fmt::Display for Bigrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.k)
    }
}

/// Nonzero ranks by bidegree.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct BigradedRanks(BTreeMap<Bigrading, usize>);

impl BigradedRanks {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, k: usize) -> usize {
        self.0.get(&Bigrading::new(i, k)).copied().unwrap_or(0)
    }

    /// Adds `r` to the entry at `b`; zero contributions are not stored.
    pub fn add(&mut self, b: Bigrading, r: usize) {
        if r > 0 {
            *self.0.entry(b).or_insert(0) += r;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bigrading, usize)> + '_ {
        self.0.iter().map(|(b, r)| (*b, *r))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Ranks summed over the weight, indexed by dimension.
    pub fn flatten(&self) -> Vec<usize> {
        let top = self.0.keys().map(|b| b.i + 1).max().unwrap_or(0);
        let mut out = vec![0; top];
        for (b, r) in &self.0 {
            out[b.i] += r;
        }
        out
    }

    pub fn as_map(&self) -> &BTreeMap<Bigrading, usize> {
        &self.0
    }
}

impl FromIterator<(Bigrading, usize)> for BigradedRanks {
    fn from_iter<T: IntoIterator<Item = (Bigrading, usize)>>(iter: T) -> Self {
        let mut out = BigradedRanks::new();
        for (b, r) in iter {
            out.add(b, r);
        }
        out
    }
}

impl<const N: usize> From<[((usize, usize), usize); N]> for BigradedRanks {
    fn from(entries: [((usize, usize), usize); N]) -> Self {
        entries
            .into_iter()
            .map(|((i, k), r)| (Bigrading::new(i, k), r))
            .collect()
    }
}

impl fmt::Display for BigradedRanks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (n, (b, r)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "F^{r}{b}")?;
        }
        Ok(())
    }
}

/// Chain groups split by bidegree, with both halves of the boundary.
#[derive(Clone, Debug)]
pub struct BigradedF2Complex {
    colouring: Colouring,
    top_dim: Option<usize>,
    blocks: BTreeMap<Bigrading, Vec<Simplex>>,
}

impl BigradedF2Complex {
    pub fn build(x: &SimplicialComplex, eps: Colouring) -> Result<Self> {
        eps.check_against(x)?;
        Ok(Self::build_unchecked(x, eps))
    }

    pub(crate) fn build_unchecked(x: &SimplicialComplex, eps: Colouring) -> Self {
        let mut blocks: BTreeMap<Bigrading, Vec<Simplex>> = BTreeMap::new();
        // Layers are mask-sorted, so each block comes out mask-sorted too.
        for s in x.iter() {
            blocks
                .entry(Bigrading::new(s.dim(), eps.weight(s)))
                .or_default()
                .push(s);
        }
        BigradedF2Complex {
            colouring: eps,
            top_dim: x.dim(),
            blocks,
        }
    }

    pub fn colouring(&self) -> Colouring {
        self.colouring
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.top_dim
    }

    /// Nonempty bidegrees in order.
    pub fn bigradings(&self) -> impl Iterator<Item = Bigrading> + '_ {
        self.blocks.keys().copied()
    }

    /// Basis of the block at `b`, ascending by mask; empty when absent.
    pub fn basis(&self, b: Bigrading) -> &[Simplex] {
        self.blocks.get(&b).map_or(&[], Vec::as_slice)
    }

    pub fn block_ranks(&self) -> BigradedRanks {
        self.blocks.iter().map(|(b, v)| (*b, v.len())).collect()
    }

    fn position(&self, b: Bigrading, s: Simplex) -> usize {
        self.basis(b)
            .binary_search(&s)
            .expect("face lies in its block")
    }

    /// `∂_h` out of block `b`, into block `(i-1, k)`.
    pub fn horizontal_matrix(&self, b: Bigrading) -> BitMatrix {
        let src = self.basis(b);
        if b.i == 0 {
            return BitMatrix::zeros(0, src.len());
        }
        let target = Bigrading::new(b.i - 1, b.k);
        let mut m = BitMatrix::zeros(self.basis(target).len(), src.len());
        for (c, s) in src.iter().enumerate() {
            for v in self.colouring.black_vertices() {
                if let Some(f) = s.remove(v) {
                    m.set(self.position(target, f), c, true);
                }
            }
        }
        m
    }

    /// `∂_d` out of block `b`, into block `(i-1, k-1)`.
    pub fn diagonal_matrix(&self, b: Bigrading) -> BitMatrix {
        let src = self.basis(b);
        if b.i == 0 || b.k == 0 {
            return BitMatrix::zeros(0, src.len());
        }
        let target = Bigrading::new(b.i - 1, b.k - 1);
        let mut m = BitMatrix::zeros(self.basis(target).len(), src.len());
        for (c, s) in src.iter().enumerate() {
            for v in mask_iter(s.mask() & self.colouring.white_mask()) {
                if let Some(f) = s.remove(v) {
                    m.set(self.position(target, f), c, true);
                }
            }
        }
        m
    }

    /// Checks `∂_h² = 0`, `∂_d² = 0` and `∂_h∂_d + ∂_d∂_h = 0` on every block.
    pub fn check_differentials(&self) -> Result<()> {
        for b in self.bigradings() {
            if b.i < 2 {
                continue;
            }
            let h1 = self.horizontal_matrix(b);
            let h2 = self.horizontal_matrix(Bigrading::new(b.i - 1, b.k));
            if !h2.mul(&h1).is_zero() {
                return Err(Error::NonzeroComposition);
            }
            if b.k == 0 {
                continue;
            }
            let d1 = self.diagonal_matrix(b);
            let below_d = Bigrading::new(b.i - 1, b.k - 1);
            let hd = self.horizontal_matrix(below_d).mul(&d1);
            let dh = self.diagonal_matrix(Bigrading::new(b.i - 1, b.k)).mul(&h1);
            if hd != dh {
                return Err(Error::NonzeroComposition);
            }
            if b.k >= 2 && !self.diagonal_matrix(below_d).mul(&d1).is_zero() {
                return Err(Error::NonzeroComposition);
            }
        }
        Ok(())
    }

    /// Horizontal homology with representatives for every nonempty block.
    pub fn horizontal_homology_with_basis(&self) -> BTreeMap<Bigrading, HomologyWithBasis> {
        self.bigradings()
            .map(|b| {
                // The incoming block may be empty; the matrix still has the right row count.
                let incoming = self.horizontal_matrix(Bigrading::new(b.i + 1, b.k));
                (b, homology_unchecked(&incoming, &self.horizontal_matrix(b)))
            })
            .collect()
    }

    pub fn horizontal_ranks(&self) -> BigradedRanks {
        self.bigradings()
            .map(|b| {
                let incoming = self.horizontal_matrix(Bigrading::new(b.i + 1, b.k));
                (b, homology_rank(&incoming, &self.horizontal_matrix(b)))
            })
            .collect()
    }

    /// Homology of `∂_d` computed directly from the diagonal matrices.
    pub fn diagonal_ranks(&self) -> BigradedRanks {
        self.bigradings()
            .map(|b| {
                let incoming = self.diagonal_matrix(Bigrading::new(b.i + 1, b.k + 1));
                (b, homology_rank(&incoming, &self.diagonal_matrix(b)))
            })
            .collect()
    }
}

/// `H^h(X, ε)` with chosen cycle representatives.
#[derive(Clone, Debug)]
pub struct HorizontalHomology {
    pub complex: BigradedF2Complex,
    pub groups: BTreeMap<Bigrading, HomologyWithBasis>,
}

impl HorizontalHomology {
    pub fn compute(x: &SimplicialComplex, eps: Colouring) -> Result<Self> {
        let complex = BigradedF2Complex::build(x, eps)?;
        let groups = complex.horizontal_homology_with_basis();
        Ok(HorizontalHomology { complex, groups })
    }

    pub fn ranks(&self) -> BigradedRanks {
        self.groups.iter().map(|(b, h)| (*b, h.rank())).collect()
    }

    /// Representatives at `b`, each written as a list of simplices.
    pub fn generators(&self, b: Bigrading) -> Vec<Vec<Simplex>> {
        let basis = self.complex.basis(b);
        self.groups.get(&b).map_or_else(Vec::new, |h| {
            h.representatives()
                .iter()
                .map(|rep| rep.ones().map(|c| basis[c]).collect())
                .collect()
        })
    }
}

pub fn horizontal_homology(x: &SimplicialComplex, eps: Colouring) -> Result<BigradedRanks> {
    Ok(BigradedF2Complex::build(x, eps)?.horizontal_ranks())
}

/// Diagonal homology straight from `∂_d`.
pub fn diagonal_homology(x: &SimplicialComplex, eps: Colouring) -> Result<BigradedRanks> {
    Ok(BigradedF2Complex::build(x, eps)?.diagonal_ranks())
}

/// Diagonal homology read off the horizontal homology of the complementary
/// colouring: weight `k` under `ε` is weight `i + 1 - k` under `ε̄`.
pub fn diagonal_homology_via_complement(
    x: &SimplicialComplex,
    eps: Colouring,
) -> Result<BigradedRanks> {
    Ok(horizontal_homology(x, eps.complement())?
        .iter()
        .map(|(b, r)| (Bigrading::new(b.i, b.i + 1 - b.k), r))
        .collect())
}

/// Homology of the simplices of weight at most `k` under the full boundary,
/// indexed by dimension. Negative `k` gives the zero complex.
pub fn filtered_homology(x: &SimplicialComplex, eps: Colouring, k: i64) -> Result<Vec<usize>> {
    eps.check_against(x)?;
    let layers: Vec<Vec<Simplex>> = (0..x.layers())
        .map(|d| {
            x.simplices(d)
                .iter()
                .copied()
                .filter(|s| (eps.weight(*s) as i64) <= k)
                .collect()
        })
        .collect();
    Ok(homology_of_layers(&layers))
}

/// Betti numbers of a face-closed family given as mask-sorted layers.
pub(crate) fn homology_of_layers(layers: &[Vec<Simplex>]) -> Vec<usize> {
    let boundary = |d: usize| -> BitMatrix {
        let src = layers.get(d).map_or(&[][..], Vec::as_slice);
        if d == 0 {
            return BitMatrix::zeros(0, src.len());
        }
        let dst = &layers[d - 1];
        let mut m = BitMatrix::zeros(dst.len(), src.len());
        for (c, s) in src.iter().enumerate() {
            for (_, f) in s.facets() {
                let r = dst.binary_search(&f).expect("layers are face-closed");
                m.set(r, c, true);
            }
        }
        m
    };
    let mut top = layers.len();
    while top > 0 && layers[top - 1].is_empty() {
        top -= 1;
    }
    let ranks: Vec<usize> = (0..=top).map(|d| boundary(d).rank()).collect();
    (0..top)
        .map(|d| layers[d].len() - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0))
        .collect()
}

/// The black subcomplex `Bl(X, ε)`: simplices with only black vertices.
pub fn black_subcomplex(x: &SimplicialComplex, eps: Colouring) -> Result<SimplicialComplex> {
    eps.check_against(x)?;
    Ok(x.full_subcomplex(eps.black_mask()))
}

/// Integer polynomial in `t`; coefficient `n` multiplies `t^n`.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct GradedEulerPoly {
    coefficients: Vec<i64>,
}

impl GradedEulerPoly {
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coefficients.iter().rev().fold(0, |acc, c| acc * t + c)
    }
}

impl fmt::Display for GradedEulerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            match (n, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{n}")?,
                _ => write!(f, "{a}t^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Σ (-1)^i rk H^h_i(X, ε, k) t^k`.
pub fn graded_euler(x: &SimplicialComplex, eps: Colouring) -> Result<GradedEulerPoly> {
    Ok(euler_of_ranks(&horizontal_homology(x, eps)?))
}

pub fn euler_of_ranks(ranks: &BigradedRanks) -> GradedEulerPoly {
    let top = ranks.iter().map(|(b, _)| b.k + 1).max().unwrap_or(0);
    let mut coefficients = vec![0i64; top];
    for (b, r) in ranks.iter() {
        let r = r as i64;
        coefficients[b.k] += if b.i % 2 == 0 { r } else { -r };
    }
    while coefficients.last() == Some(&0) {
        coefficients.pop();
    }
    GradedEulerPoly { coefficients }
}
