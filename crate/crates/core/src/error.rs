use thiserror::Error;

/// Errors raised by constructions and predicates.
///
/// All of them are input problems; no operation in this crate can fail once
/// its preconditions hold, because every step is exact.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    /// A line was requested through two identical points.
    #[error("degenerate line: the two defining points coincide")]
    DegenerateLine,
    /// A triangle with zero signed area (collinear or repeated vertices).
    #[error("degenerate triangle: vertices are collinear")]
    DegenerateTriangle,
    /// Fewer than three vertices where a polygon is required.
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    /// A vertex list that is not a strictly convex simple polygon.
    #[error("invalid convex polygon: {0}")]
    InvalidPolygon(&'static str),
}
