use thiserror::Error;

/// Errors produced by the triangulation and matrix machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),

    #[error("a triangle needs exactly 3 distinct vertices, got {0}")]
    BadTriangle(String),

    #[error("duplicate triangle {0}")]
    DuplicateTriangle(String),

    #[error("a triangulation needs at least one triangle")]
    EmptyTriangulation,

    #[error("vertex {0} is not in the complex")]
    VertexAbsent(String),

    #[error("the star of vertex {0} is not a single cycle")]
    StarNotCycle(String),

    #[error("not a connected closed surface: {0}")]
    NotClosedSurface(String),

    #[error("invalid intersection matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid bijection: {0}")]
    InvalidBijection(String),

    #[error("size mismatch: {left} triangles vs {right} triangles")]
    SizeMismatch { left: usize, right: usize },

    #[error("the triangle map is not intersection preserving")]
    NotIntersectionPreserving,

    #[error("cycle length {0} is out of range ({1})")]
    CycleLength(usize, &'static str),

    #[error("triangles do not realize the {0}-cycle intersection pattern")]
    NotACycleRealization(usize),

    #[error("realization matches none of the three link types: {0}")]
    UnclassifiedRealization(String),

    #[error("no closed surface realizes this matrix")]
    NoSolution,

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
