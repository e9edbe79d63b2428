use thiserror::Error;

use crate::theta::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length list must not be empty")]
    EmptyLengths,
    #[error("length must be >= 1 (entry {index} is {value})")]
    NonPositiveLength { index: usize, value: i64 },
    #[error("cannot parse {what} literal `{literal}`: {reason}")]
    Parse {
        what: &'static str,
        literal: String,
        reason: String,
    },
    #[error("vertex {0} does not exist in this graph")]
    InvalidVertex(VertexId),
    #[error("landmark set must not be empty")]
    EmptyLandmarks,
    #[error("landmark {0} appears more than once")]
    DuplicateLandmark(VertexId),
    #[error("vertex sequence must not be empty")]
    EmptySequence,
    #[error("path pair ({0}, {1}) is invalid")]
    InvalidPathPair(usize, usize),
    #[error("expected a landmark set of size {expected}, got {actual}")]
    LandmarkCount { expected: usize, actual: usize },
    #[error("landmark set does not resolve the graph")]
    NotResolving,
    #[error("{construction} requires multiplicity {requirement}, got {m}")]
    Multiplicity {
        construction: &'static str,
        requirement: &'static str,
        m: usize,
    },
    #[error("{construction} does not apply to {spec}")]
    PatternMismatch {
        construction: &'static str,
        spec: String,
    },
    #[error("{construction} produced position {position} on path {path} of length {length}")]
    PositionOutOfRange {
        construction: &'static str,
        path: usize,
        position: i64,
        length: usize,
    },
    #[error("cycle order must be at least {min}, got {n}")]
    CycleTooSmall { n: usize, min: usize },
    #[error("cycle order {0} is odd")]
    OddCycle(usize),
    #[error("cycle vertex {vertex} out of range for C{n}")]
    CycleVertex { vertex: usize, n: usize },
    #[error("landmarks must be distinct")]
    CoincidentLandmarks,
}

pub type Result<T> = std::result::Result<T, Error>;
