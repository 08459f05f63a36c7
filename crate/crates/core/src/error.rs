use thiserror::Error;

/// Errors raised by the homology engine and its constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a complex on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("a complex needs at least one vertex")]
    NoVertices,

    #[error("{count} vertices exceed the 64-vertex mask capacity")]
    TooManyVertices { count: usize },

    #[error("empty facet in facet list")]
    EmptyFacet,

    #[error("operation would produce an empty complex")]
    EmptyResult,

    #[error("complex is disconnected")]
    Disconnected,

    #[error("unknown complex family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("colouring has length {colouring} but the complex has {vertices} vertices")]
    ColouringLength { colouring: usize, vertices: usize },

    #[error("chain is not a cycle of the given homology")]
    NotACycle,

    #[error("boundary composition is nonzero; the differential is broken")]
    NonzeroComposition,

    #[error("matrix shapes do not compose: {0}")]
    ShapeMismatch(String),

    #[error("colouring is not dalmatian")]
    NotDalmatian,

    #[error("iterated matching precondition fails at stage {stage}: {reason}")]
    IteratedPrecondition { stage: usize, reason: String },

    #[error("cube needs 2^{vertices} colourings, above the cap of {cap} vertices")]
    CapExceeded { vertices: usize, cap: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed graph6 data: {0}")]
    Graph6(String),

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("rotation system does not describe a sphere embedding (V - E + F = {euler})")]
    NotSpherical { euler: i64 },

    #[error("not a homology manifold: {0}")]
    NotHomologyManifold(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
