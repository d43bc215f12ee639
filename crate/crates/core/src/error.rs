use crate::complex::Simplex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty facet list (use SimplicialComplex::void() to request the void complex)")]
    EmptyInput,
    #[error("negative vertex id {0}")]
    NegativeVertex(i64),
    #[error("vertex {0} does not occur in any facet")]
    PhantomVertex(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("{0} is not a simplex of the complex")]
    NotAFace(Simplex),
    #[error("vertex tables differ ({0} vs {1} vertices)")]
    VertexTableMismatch(usize, usize),
    #[error("simplex enumeration exceeds the guard of {limit} simplices")]
    SimplexGuard { limit: usize },
    #[error("{what}: {count} exceeds the configured cap of {cap}{hint}")]
    CapExceeded {
        what: &'static str,
        count: usize,
        cap: usize,
        hint: &'static str,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("symmetric action requires all factors to be equal")]
    UnequalFactors,
    #[error("not a valid (F,r)-family: {0}")]
    NotFrFamily(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
