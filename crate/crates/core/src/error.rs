use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("vertex {vertex} is not in the ground set")]
    VertexOutOfRange { vertex: usize },
    #[error("at most {max} vertices are supported, got {requested}")]
    TooManyVertices { requested: usize, max: usize },
    #[error("ground set must be non-empty")]
    EmptyGroundSet,
    #[error("a simplicial complex needs at least one facet")]
    EmptyFacetList,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("dual is void: the complex is the full simplex on its ground set")]
    VoidDual,
    #[error("ideal is not square-free")]
    NotSquareFree,
    #[error("the unit ideal has no Stanley-Reisner complex")]
    UnitIdeal,
    #[error("{vertex} is not a vertex of the complex")]
    NotAVertex { vertex: usize },
    #[error("complex is not vertex decomposable")]
    NotVertexDecomposable,
    #[error("vertex {vertex} is not a shedding vertex")]
    NotShedding { vertex: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph has no edges")]
    NoEdges,
    #[error("{what}: {count} exceeds the cap of {cap}")]
    TooLarge { what: &'static str, count: usize, cap: usize },
    #[error("generators of I are not the disjoint union of those of J and K")]
    PartitionMismatch,
    #[error("malformed split tree: {0}")]
    MalformedTree(String),
    #[error("Betti table subject mismatch: expected an ideal table")]
    SubjectMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
}
