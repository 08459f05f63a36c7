use std::fmt;

use crate::error::{Error, Result};

/// Hard ceiling on the vertex universe; a simplex is one machine word.
pub const MAX_VERTICES: usize = 64;

/// A vertex index in `[0, m)`.
pub type VertexId = usize;

/// A nonempty set of vertices, stored as a bit mask.
///
/// `Ord` is the numeric order of masks, which is the order used for every
/// chain basis in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(u64);

impl Simplex {
    /// Wraps a mask; `None` when the mask is empty.
    pub fn from_mask(mask: u64) -> Option<Self> {
        (mask != 0).then_some(Simplex(mask))
    }

    pub fn vertex(v: VertexId) -> Self {
        assert!(v < MAX_VERTICES);
        Simplex(1 << v)
    }

    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: MAX_VERTICES,
                });
            }
            mask |= 1 << v;
        }
        Simplex::from_mask(mask).ok_or(Error::EmptyFacet)
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Always false; simplices are nonempty by construction.
    #[inline]
    pub fn is_empty(self) -> bool {
        false
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.len() - 1
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn is_face_of(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = VertexId> {
        mask_iter(self.0)
    }

    /// The face obtained by dropping `v`; `None` when that leaves nothing or
    /// `v` is not a vertex.
    pub fn remove(self, v: VertexId) -> Option<Simplex> {
        if self.contains(v) {
            Simplex::from_mask(self.0 & !(1 << v))
        } else {
            None
        }
    }

    pub fn union(self, other: Simplex) -> Simplex {
        Simplex(self.0 | other.0)
    }

    /// Codimension-one faces paired with the dropped vertex.
    pub fn facets(self) -> impl Iterator<Item = (VertexId, Simplex)> {
        let mask = self.0;
        mask_iter(mask).filter_map(move |v| Simplex::from_mask(mask & !(1 << v)).map(|f| (v, f)))
    }

    /// Every nonempty face, including the simplex itself.
    pub fn faces(self) -> impl Iterator<Item = Simplex> {
        let mask = self.0;
        let mut sub = mask;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let current = sub;
            if sub == 0 {
                done = true;
                return None;
            }
            sub = (sub - 1) & mask;
            Some(Simplex(current))
        })
    }
}

/// Set bits of a mask, ascending.
pub(crate) fn mask_iter(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (n, v) in self.vertices().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_of_triangle() {
        let s = Simplex::new([0, 1, 2]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.faces().count(), 7);
        assert_eq!(s.facets().count(), 3);
        assert_eq!(s.to_string(), "<0,1,2>");
    }

    #[test]
    fn vertex_has_no_facets() {
        let v = Simplex::vertex(5);
        assert_eq!(v.facets().count(), 0);
        assert_eq!(v.remove(5), None);
        assert!(Simplex::new(Vec::<usize>::new()).is_err());
    }
}
