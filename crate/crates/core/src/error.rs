//! Error types shared across the crate.

use thiserror::Error;

use crate::graph::Vertex;

/// Violations of the structural rules for graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the representable maximum {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({0}, {1}) must satisfy u < v")]
    UnorderedEdge(Vertex, Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
}

/// A text-format error, tagged with the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// A vertex sequence that is not a permutation of 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a permutation of 1..={n}: {reason}")]
pub struct OrderingError {
    pub n: usize,
    pub reason: String,
}

/// Failures of the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("input has {n} vertices; this solver accepts at most {limit}")]
    Capacity { n: usize, limit: usize },
}

/// Failures of the interval-completion procedure and its tradeoff checker.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IcError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("tradeoff parameter t={t} out of range 1..={max} (the optimal interval width)")]
    TradeoffOutOfRange { t: usize, max: usize },
    #[error("representation is not canonical: {0}")]
    NotCanonical(String),
    #[error("representation's interval graph is not a supergraph of the input")]
    NotSupergraph,
}

/// Failures when building or verifying the witness family.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("block sizes must satisfy 1 <= a < b < c (got a={a}, b={b}, c={c})")]
    NotStrictlyIncreasing { a: usize, b: usize, c: usize },
    #[error("block sizes must satisfy a*c > b^2 (got a*c={ac}, b^2={bsq})")]
    ProductTooSmall { ac: usize, bsq: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("enumeration needs {needed} candidate edge sets, above the limit {limit}")]
    EnumerationTooLarge { needed: u128, limit: u128 },
}

/// Failures when deriving search strategies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("representation is not canonical: {0}")]
    NotCanonical(String),
    #[error("representation's interval graph is not a supergraph of the input")]
    NotSupergraph,
    #[error("ordering does not match the graph's vertex count")]
    OrderingMismatch,
}
