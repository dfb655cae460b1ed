//! Crate-wide error type. Construction of structures never validates axioms
//! (so deliberately broken data can be built and checked); errors here are
//! strictly shape, parse, and precondition failures.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("composition requires equal objects: codomain of inner is {inner}, domain of outer is {outer}")]
    ComposeMismatch { inner: String, outer: String },

    #[error("grade groups differ: {0}")]
    GradeGroupMismatch(String),

    #[error("invalid bicharacter: {0}")]
    Bicharacter(String),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("multiplication table not associative at indices ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("table has no two-sided unit")]
    NoUnit,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("morphism is not surjective (rank {rank} < {required})")]
    NotSurjective { rank: usize, required: usize },

    #[error("linear system inconsistent: {0}")]
    Inconsistent(String),

    #[error("mutation site out of range: row {row}, col {col} for a {rows}x{cols} matrix")]
    MutationSite {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
