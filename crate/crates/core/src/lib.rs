pub mod coloured;
pub mod complex;
mod error;
pub mod f2;
pub mod graph;
pub mod morse;
pub mod uber;

pub use coloured::{BigradedRanks, Bigrading, Colouring};
pub use complex::{Simplex, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use uber::{TriGradedRanks, UberOptions, DEFAULT_CAP};
