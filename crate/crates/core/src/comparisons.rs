//! Contrast constructions: Euclid I.47-style triangles and the two
//! parallelogram families (Anderson's, from the colored triangles, and
//! Boyadzhiev's, from the Euclid triangles).
//!
//! Each Euclid triangle shares two sides with the base triangle at an
//! anchor vertex, like the colored triangle there, but its included angle
//! is `pi/2 + x` instead of `pi/2 - x`. In exact terms: the two dot
//! products at the anchor are negatives of each other, the areas agree in
//! magnitude, and the squared third sides differ by `8 |area(ABC)|`.
//!
//! Completing either triangle with its point reflection about the midpoint
//! of its third side yields a parallelogram; the two parallelograms at the
//! same anchor and square are congruent, with the roles of the diagonals
//! swapped.

use crate::figure::{EdgeDissection, EdgeEnd, Figure, SquareColor, VertexLabel};
use crate::point::{dot_at, squared_distance, Point};
use crate::polygon::SignedTriangle;
use crate::scalar::Scalar;

/// The I.47 triangle at one base endpoint of one square: `(R, Q, Q + offset)`
/// where `Q` is the anchor and `R` the (unreflected) apex.
#[derive(Debug, Clone)]
pub struct EuclidTriangle {
    pub color: SquareColor,
    pub anchor: VertexLabel,
    pub triangle: SignedTriangle,
}

impl EuclidTriangle {
    /// The anchor vertex `Q`, shared with the colored triangle there.
    pub fn anchor_point(&self) -> &Point {
        &self.triangle.v2
    }

    /// Dot product of the two sides leaving the anchor.
    pub fn dot_at_anchor(&self) -> Scalar {
        dot_at(&self.triangle.v2, &self.triangle.v1, &self.triangle.v3)
    }

    /// Squared length of the side opposite the anchor.
    pub fn squared_third_side(&self) -> Scalar {
        squared_distance(&self.triangle.v1, &self.triangle.v3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParallelogramKind {
    Anderson,
    Boyadzhiev,
}

impl ParallelogramKind {
    pub fn name(self) -> &'static str {
        match self {
            ParallelogramKind::Anderson => "anderson",
            ParallelogramKind::Boyadzhiev => "boyadzhiev",
        }
    }
}

/// A parallelogram `(X, Y, Y + Z - X, Z)` completed from a source triangle
/// `(X, Y, Z)` with apex `X`; the fourth vertex is the point reflection of
/// `X` about the midpoint of `Y Z`.
#[derive(Debug, Clone)]
pub struct Parallelogram {
    pub kind: ParallelogramKind,
    pub color: SquareColor,
    pub anchor: VertexLabel,
    pub vertices: [Point; 4],
    /// True when the source triangle was degenerate (right angle at the
    /// anchor), collapsing the parallelogram to a segment.
    pub degenerate: bool,
}

impl Parallelogram {
    fn complete(
        kind: ParallelogramKind,
        color: SquareColor,
        anchor: VertexLabel,
        source: &SignedTriangle,
    ) -> Parallelogram {
        let fourth = &(&source.v2 + &source.v3) - &source.v1;
        Parallelogram {
            kind,
            color,
            anchor,
            degenerate: source.is_degenerate(),
            vertices: [
                source.v1.clone(),
                source.v2.clone(),
                fourth,
                source.v3.clone(),
            ],
        }
    }

    pub fn signed_area(&self) -> Scalar {
        crate::polygon::polygon_signed_area(&self.vertices).expect("four vertices")
    }

    /// All four squared side lengths, sorted.
    pub fn sorted_squared_sides(&self) -> [Scalar; 4] {
        let v = &self.vertices;
        let mut sides = [
            squared_distance(&v[0], &v[1]),
            squared_distance(&v[1], &v[2]),
            squared_distance(&v[2], &v[3]),
            squared_distance(&v[3], &v[0]),
        ];
        sides.sort();
        sides
    }

    /// Both squared diagonal lengths, sorted.
    pub fn sorted_squared_diagonals(&self) -> [Scalar; 2] {
        let v = &self.vertices;
        let mut diags = [
            squared_distance(&v[0], &v[2]),
            squared_distance(&v[1], &v[3]),
        ];
        diags.sort();
        diags
    }
}

/// Enumerates the six per-square base endpoints in a fixed order: red
/// start/end, green start/end, blue start/end.
fn anchors(figure: &Figure) -> impl Iterator<Item = (&EdgeDissection, EdgeEnd, VertexLabel)> {
    figure.dissections().into_iter().flat_map(|d| {
        [EdgeEnd::Start, EdgeEnd::End]
            .into_iter()
            .map(move |end| (d, end, d.label_at(end)))
    })
}

/// The six Euclid triangles, one per colored triangle: at each base
/// endpoint `Q` of each square, the triangle `(R, Q, Q + offset)` built
/// from the original apex instead of its reflection.
pub fn build_euclid_triangles(figure: &Figure) -> Vec<EuclidTriangle> {
    anchors(figure)
        .map(|(d, end, label)| {
            let q = d.base_point(end);
            let far = q + &d.square.offset;
            EuclidTriangle {
                color: d.color,
                anchor: label,
                triangle: SignedTriangle::new(d.apex.clone(), q.clone(), far),
            }
        })
        .collect()
}

/// Completes each colored triangle into a parallelogram about the midpoint
/// of its third side. The colored triangle at a base endpoint is stored
/// with its anchor first.
pub fn build_anderson_parallelograms(figure: &Figure) -> Vec<Parallelogram> {
    anchors(figure)
        .map(|(d, end, label)| {
            Parallelogram::complete(
                ParallelogramKind::Anderson,
                d.color,
                label,
                d.colored(end),
            )
        })
        .collect()
}

/// The same completion applied to each Euclid triangle, about the midpoint
/// of ITS third side; the apex is the shared anchor `Q`.
pub fn build_boyadzhiev_parallelograms(euclid: &[EuclidTriangle]) -> Vec<Parallelogram> {
    euclid
        .iter()
        .map(|e| {
            // Reorder (R, Q, D) so the anchor Q is the reflected apex.
            let source = SignedTriangle::new(
                e.triangle.v2.clone(),
                e.triangle.v1.clone(),
                e.triangle.v3.clone(),
            );
            Parallelogram::complete(ParallelogramKind::Boyadzhiev, e.color, e.anchor, &source)
        })
        .collect()
}

/// Parallelogram congruence: equal sorted squared sides and equal sorted
/// squared diagonals. For parallelograms this is sufficient (SSS on the
/// half-triangles either way round).
pub fn parallelograms_congruent(p1: &Parallelogram, p2: &Parallelogram) -> bool {
    p1.sorted_squared_sides() == p2.sorted_squared_sides()
        && p1.sorted_squared_diagonals() == p2.sorted_squared_diagonals()
}
