// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {u}-{v} has a non-positive weight")]
    NonPositiveWeight { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} requires unit edge weights")]
    WeightedInput(&'static str),
    #[error("graph is not a tree")]
    NotATree,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{0} is not a supported field order (expected 2, 3, 4, 5, 7, 8 or 9)")]
    UnsupportedOrder(usize),
    #[error("{n} vertices exceeds the search limit of {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("hamiltonian cycle search gave up after {0} expansions")]
    BudgetExhausted(u64),
    #[error("graph has no hamiltonian cycle")]
    NoHamiltonianCycle,
    #[error("vertices {0} and {1} are joined by several geodesics of length two")]
    AmbiguousLengthTwo(usize, usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex-count header")]
    MissingHeader,
    #[error("header must be a single vertex count")]
    BadHeader,
    #[error("expected `u v` or `u v w`, found {0} tokens")]
    WrongTokenCount(usize),
    #[error("`{0}` is not a non-negative integer")]
    NotAnInteger(String),
    #[error("weight `{0}` is not positive")]
    NonPositiveWeight(String),
    #[error("weighted and unweighted edge lines are mixed")]
    MixedFormats,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}
