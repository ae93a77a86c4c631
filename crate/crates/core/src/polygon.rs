//! Triangles and convex polygons with exact area, location and overlap
//! predicates.

use std::fmt;

use crate::error::GeomError;
use crate::point::{signed_area, squared_distance, Point};
use crate::scalar::Scalar;

/// A triangle whose vertex order is significant: its area is the shoelace
/// value of `(v1, v2, v3)` and may be negative or zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTriangle {
    pub v1: Point,
    pub v2: Point,
    pub v3: Point,
}

impl SignedTriangle {
    pub fn new(v1: Point, v2: Point, v3: Point) -> Self {
        SignedTriangle { v1, v2, v3 }
    }

    pub fn signed_area(&self) -> Scalar {
        signed_area(&self.v1, &self.v2, &self.v3)
    }

    pub fn vertices(&self) -> [&Point; 3] {
        [&self.v1, &self.v2, &self.v3]
    }

    /// Squared side lengths sorted ascending, the congruence fingerprint
    /// used throughout the checks (SSS, orientation-blind).
    pub fn sorted_squared_sides(&self) -> [Scalar; 3] {
        let mut sides = [
            squared_distance(&self.v1, &self.v2),
            squared_distance(&self.v2, &self.v3),
            squared_distance(&self.v3, &self.v1),
        ];
        sides.sort();
        sides
    }

    pub fn is_degenerate(&self) -> bool {
        self.signed_area().is_zero()
    }

    /// The triangle as a convex polygon; fails when degenerate.
    pub fn to_polygon(&self) -> Result<ConvexPolygon, GeomError> {
        ConvexPolygon::new(vec![self.v1.clone(), self.v2.clone(), self.v3.clone()])
    }
}

/// Exact classification of a point against a convex polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Location::Inside => "inside",
            Location::Boundary => "boundary",
            Location::Outside => "outside",
        })
    }
}

/// A strictly convex simple polygon. Either orientation is accepted and
/// recorded via the sign of [`ConvexPolygon::signed_area`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Validates strict convexity: at least three pairwise distinct
    /// vertices, every turn in the same direction, and a single winding.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeomError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::TooFewVertices(n));
        }
        let mut turn = 0;
        for i in 0..n {
            let (p, q, r) = (&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if p == q {
                return Err(GeomError::InvalidPolygon("repeated vertex"));
            }
            let s = signed_area(p, q, r).signum();
            if s == 0 {
                return Err(GeomError::InvalidPolygon("collinear vertices"));
            }
            if turn == 0 {
                turn = s;
            } else if s != turn {
                return Err(GeomError::InvalidPolygon("not convex"));
            }
        }
        // Same-sign turns still allow star traversals (winding > 1) for
        // n >= 5; a single winding makes the cyclic sequence of edge
        // directions cross from the lower to the upper half-plane once.
        let mut wraps = 0;
        let upper = |d: &Point| d.y.is_positive() || (d.y.is_zero() && d.x.is_negative());
        for i in 0..n {
            let d0 = &vertices[(i + 1) % n] - &vertices[i];
            let d1 = &vertices[(i + 2) % n] - &vertices[(i + 1) % n];
            if !upper(&d0) && upper(&d1) {
                wraps += 1;
            }
        }
        if wraps != 1 {
            return Err(GeomError::InvalidPolygon("self-intersecting traversal"));
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn signed_area(&self) -> Scalar {
        polygon_signed_area(&self.vertices).expect("validated polygon")
    }

    /// Exact point location via per-edge side signs.
    pub fn locate(&self, p: &Point) -> Location {
        let interior = self.signed_area().signum();
        let n = self.vertices.len();
        let mut on_some_edge = false;
        for i in 0..n {
            let s = signed_area(&self.vertices[i], &self.vertices[(i + 1) % n], p).signum();
            if s == -interior {
                return Location::Outside;
            }
            if s == 0 {
                on_some_edge = true;
            }
        }
        if on_some_edge {
            Location::Boundary
        } else {
            Location::Inside
        }
    }
}

/// Generalized shoelace: half the sum of cross terms over the closed chain.
/// Works on any ordered vertex list with at least three entries.
pub fn polygon_signed_area(vertices: &[Point]) -> Result<Scalar, GeomError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices(n));
    }
    let mut twice = Scalar::zero();
    for i in 0..n {
        twice += vertices[i].cross(&vertices[(i + 1) % n]);
    }
    Ok(&twice * &Scalar::ratio(1, 2))
}

/// Whether the two interiors share a point, decided exactly by a separating
/// axis search over the edge normals of both polygons.
///
/// Boundary contact alone (shared vertex or edge) does not count.
pub fn convex_interiors_intersect(a: &ConvexPolygon, b: &ConvexPolygon) -> bool {
    for polygon in [a, b] {
        let verts = polygon.vertices();
        let n = verts.len();
        for i in 0..n {
            let edge = &verts[(i + 1) % n] - &verts[i];
            let axis = Point::new(-&edge.y, edge.x.clone());
            let (a_min, a_max) = projection_range(&axis, a.vertices());
            let (b_min, b_max) = projection_range(&axis, b.vertices());
            if a_max <= b_min || b_max <= a_min {
                return false;
            }
        }
    }
    true
}

fn projection_range(axis: &Point, vertices: &[Point]) -> (Scalar, Scalar) {
    let mut lo = axis.dot(&vertices[0]);
    let mut hi = lo.clone();
    for v in &vertices[1..] {
        let d = axis.dot(v);
        if d < lo {
            lo = d.clone();
        }
        if d > hi {
            hi = d;
        }
    }
    (lo, hi)
}
