use thiserror::Error;

use crate::VertexSet;

/// Failures while reading the edge-list or facet-list text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop edge at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u},{v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} records after the header, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("missing header line")]
    MissingHeader,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("canonical form supports at most {max} vertices, got {n}")]
    TooLargeForCanonicalForm { n: usize, max: usize },
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("facet {0} contains a vertex outside 1..={1}")]
    VertexOutOfRange(VertexSet, usize),
    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("shellability is only decided for pure complexes")]
    NotPure,
    #[error("a complex on {0} vertices must have at least one facet")]
    NoFacets(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("{0} is not a clique")]
    NotAClique(VertexSet),
    #[error("cover misses vertices {0}")]
    Uncovered(VertexSet),
    #[error("set {0} contains vertices outside the graph")]
    OutOfRange(VertexSet),
    #[error("blocks are not a partition of the vertex set")]
    NotAPartition,
    #[error("block {0} is not independent")]
    BlockNotIndependent(VertexSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not 0 or a prime below 2^31")]
    InvalidCharacteristic(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CmError {
    #[error("graph is not bipartite")]
    NotBipartite,
}
