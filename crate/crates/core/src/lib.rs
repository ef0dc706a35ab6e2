//! Exact and tradeoff solvers for width-like and fill-like layout parameters
//! of small graphs: optimal vertex orderings, canonical interval
//! representations, Pareto frontiers between width and completion cost, an
//! interval-completion procedure with a tradeoff knob, and graph-searching
//! strategies derived from orderings and representations.

pub mod error;
pub mod graph;
pub mod ic;
pub mod interval;
pub mod naive;
pub mod search;
pub mod solvers;
pub mod witness;

pub use error::{
    GraphError, IcError, OrderingError, ParseError, SearchError, SolverError, WitnessError,
};
pub use graph::{Graph, Vertex, VertexSet};
pub use interval::{greedy_representation, CanonicalRepr, Point, VertexOrdering};
pub use solvers::{Limits, ParetoFrontier, SolverResult};
