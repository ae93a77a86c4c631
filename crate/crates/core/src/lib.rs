//! Exact-arithmetic construction and verification of a dissection of the
//! law of cosines.
//!
//! Everything here is rational: points, areas, dot products, residuals. A
//! triangle with rational vertices yields erected squares, reflected
//! vertices, twelve signed dissection pieces and six colored triangles, all
//! with rational coordinates, so every identity in the construction can be
//! checked by exact equality rather than within a tolerance.
//!
//! Modules, bottom up:
//! - [`scalar`], [`point`], [`polygon`]: the exact kernel and predicates.
//! - [`figure`]: squares on the triangle sides, reflected vertices, the
//!   dissection pieces and the three congruent colored pairs.
//! - [`comparisons`]: the classical contrast constructions (Euclid I.47
//!   triangles, the two families of parallelograms) and their congruence.
//! - [`verify`]: the full check suite with exact zero residuals.

pub mod comparisons;
pub mod error;
pub mod figure;
pub mod point;
pub mod polygon;
pub mod scalar;
pub mod verify;

pub use error::GeomError;
pub use point::{
    dot_at, project_onto_line, reflect_across_line, rotate_quarter, side_of_line, signed_area,
    squared_distance, Point, Side,
};
pub use polygon::{
    convex_interiors_intersect, polygon_signed_area, ConvexPolygon, Location, SignedTriangle,
};
pub use scalar::Scalar;
