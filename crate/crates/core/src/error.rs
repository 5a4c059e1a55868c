use thiserror::Error;

use crate::model::ClassTag;

/// Errors raised by parsing, validation, and the class-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("graph6 supports 0..=62 vertices, got {0}")]
    Graph6Size(usize),

    #[error("json: {0}")]
    Json(String),

    #[error("invalid {class}: {}", violations.join("; "))]
    Invalid {
        class: ClassTag,
        violations: Vec<String>,
    },

    #[error(transparent)]
    Domain(#[from] DomainError),

    #[error("{what}: n = {n} exceeds the supported bound {bound}")]
    Unsupported {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("class mismatch: expected {expected}, got {found}")]
    ClassMismatch { expected: ClassTag, found: ClassTag },
}

/// A well-formed object that lies outside the domain of the requested operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("not a split graph")]
    NotSplit,

    #[error("not a set cover: element {0} uncovered")]
    NotCover(usize),

    #[error("not minimal: set {0} has no loyal element")]
    NotMinimal(usize),

    #[error("Y-vertex {0} is an isolate; balance is undefined")]
    YIsolate(usize),

    #[error("input is balanced: it has no {0}")]
    Balanced(&'static str),

    #[error("object on {size} points cannot be compiled up to n = {n}; need size < n")]
    TooLarge { size: usize, n: usize },

    #[error("invalid KS-partition: {0}")]
    BadPartition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
