//! The three-square dissection figure.
//!
//! For a labeled triangle `ABC`, a square is erected externally on each
//! side: red on `BC`, green on `CA`, blue on `AB`. Reflecting the opposite
//! vertex across each side drops its mirror image into (or near) the
//! matching square, and together with the altitude foot it cuts the square
//! into four signed triangular pieces per side, twelve in all. At each base
//! endpoint the two pieces reassemble into a "colored" triangle that shares
//! two sides with `ABC` and has included oriented angle `pi/2 - x`, where
//! `x` is the triangle's angle there; the six colored triangles form three
//! congruent pairs, one per vertex.
//!
//! All vertex orders are fixed, so every piece carries an oriented area.
//! The identities then hold for every nondegenerate triangle, with the
//! orientation sign `s` of `ABC` absorbing mirror images:
//!
//! - `area(near) + area(far) = area(colored)` at each base endpoint;
//! - `2 s (sum of the four pieces of a square) = squared side length`;
//! - `shoelace(sub-rectangle) = -2 area(colored)` at each endpoint;
//! - `area(colored at V) = s/2 * dot of the two triangle sides leaving V`.
//!
//! Negative pieces are how the obtuse and long-altitude cases pay their
//! debts: a far piece flips sign when exactly one of "the altitude exceeds
//! the base side" and "the base angle there is obtuse" holds, and a near
//! piece flips exactly when that base angle is obtuse.

use std::fmt;

use crate::error::GeomError;
use crate::point::{
    dot_at, project_onto_line, reflect_across_line, rotate_quarter, side_of_line, signed_area,
    squared_distance, Point, Side,
};
use crate::polygon::{polygon_signed_area, ConvexPolygon, Location, SignedTriangle};
use crate::scalar::Scalar;

/// Vertex labels are never permuted: the identity under verification names
/// specific vertices (the angle at `C`), so `A`, `B`, `C` mean the input
/// points in input order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexLabel {
    A,
    B,
    C,
}

impl VertexLabel {
    pub const ALL: [VertexLabel; 3] = [VertexLabel::A, VertexLabel::B, VertexLabel::C];

    pub fn name(self) -> &'static str {
        match self {
            VertexLabel::A => "A",
            VertexLabel::B => "B",
            VertexLabel::C => "C",
        }
    }

    /// The color of the congruent pair anchored at this vertex.
    pub fn pair_color(self) -> SquareColor {
        match self {
            VertexLabel::A => SquareColor::Red,
            VertexLabel::B => SquareColor::Green,
            VertexLabel::C => SquareColor::Blue,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Square colors, with the fixed side mapping red:`BC`, green:`CA`,
/// blue:`AB`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareColor {
    Red,
    Green,
    Blue,
}

impl SquareColor {
    pub const ALL: [SquareColor; 3] = [SquareColor::Red, SquareColor::Green, SquareColor::Blue];

    pub fn name(self) -> &'static str {
        match self {
            SquareColor::Red => "red",
            SquareColor::Green => "green",
            SquareColor::Blue => "blue",
        }
    }

    /// First endpoint of this square's base edge.
    pub fn edge_start(self) -> VertexLabel {
        match self {
            SquareColor::Red => VertexLabel::B,
            SquareColor::Green => VertexLabel::C,
            SquareColor::Blue => VertexLabel::A,
        }
    }

    /// Second endpoint of this square's base edge.
    pub fn edge_end(self) -> VertexLabel {
        match self {
            SquareColor::Red => VertexLabel::C,
            SquareColor::Green => VertexLabel::A,
            SquareColor::Blue => VertexLabel::B,
        }
    }

    /// The triangle vertex opposite this square's base edge.
    pub fn apex(self) -> VertexLabel {
        match self {
            SquareColor::Red => VertexLabel::A,
            SquareColor::Green => VertexLabel::B,
            SquareColor::Blue => VertexLabel::C,
        }
    }
}

impl fmt::Display for SquareColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    /// +1 for counterclockwise, -1 for clockwise.
    pub fn sign(self) -> Scalar {
        match self {
            Orientation::Ccw => Scalar::one(),
            Orientation::Cw => Scalar::from_int(-1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Ccw => "ccw",
            Orientation::Cw => "cw",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One value per triangle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerVertex<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T> PerVertex<T> {
    pub fn get(&self, v: VertexLabel) -> &T {
        match v {
            VertexLabel::A => &self.a,
            VertexLabel::B => &self.b,
            VertexLabel::C => &self.c,
        }
    }
}

/// One value per square color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerColor<T> {
    pub red: T,
    pub green: T,
    pub blue: T,
}

impl<T> PerColor<T> {
    pub fn get(&self, c: SquareColor) -> &T {
        match c {
            SquareColor::Red => &self.red,
            SquareColor::Green => &self.green,
            SquareColor::Blue => &self.blue,
        }
    }
}

/// The input triangle with its recorded orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTriangle {
    a: Point,
    b: Point,
    c: Point,
    orientation: Orientation,
}

impl LabeledTriangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self, GeomError> {
        let orientation = match signed_area(&a, &b, &c).signum() {
            1 => Orientation::Ccw,
            -1 => Orientation::Cw,
            _ => return Err(GeomError::DegenerateTriangle),
        };
        Ok(LabeledTriangle { a, b, c, orientation })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    pub fn c(&self) -> &Point {
        &self.c
    }

    pub fn vertex(&self, label: VertexLabel) -> &Point {
        match label {
            VertexLabel::A => &self.a,
            VertexLabel::B => &self.b,
            VertexLabel::C => &self.c,
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// +1 or -1 as a scalar; multiplies oriented areas into the
    /// "as drawn in a counterclockwise figure" convention.
    pub fn orientation_sign(&self) -> Scalar {
        self.orientation.sign()
    }

    pub fn signed_area(&self) -> Scalar {
        signed_area(&self.a, &self.b, &self.c)
    }

    pub fn unsigned_area(&self) -> Scalar {
        self.signed_area().abs()
    }

    /// Squared length of the edge belonging to `color`.
    pub fn squared_side(&self, color: SquareColor) -> Scalar {
        squared_distance(
            self.vertex(color.edge_start()),
            self.vertex(color.edge_end()),
        )
    }
}

/// Convenience spelled like the construction step it performs.
pub fn make_labeled_triangle(a: Point, b: Point, c: Point) -> Result<LabeledTriangle, GeomError> {
    LabeledTriangle::new(a, b, c)
}

/// A square erected externally on a triangle edge.
///
/// `far_from = base_from + offset` and `far_to = base_to + offset`, with
/// `offset` perpendicular to the base, of equal length, and pointing away
/// from the opposite triangle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareOnEdge {
    pub color: SquareColor,
    pub base_from: Point,
    pub base_to: Point,
    pub far_from: Point,
    pub far_to: Point,
    pub offset: Point,
}

impl SquareOnEdge {
    /// Corners in traversal order `(base_from, base_to, far_to, far_from)`.
    pub fn corners(&self) -> [&Point; 4] {
        [&self.base_from, &self.base_to, &self.far_to, &self.far_from]
    }

    pub fn polygon(&self) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            self.base_from.clone(),
            self.base_to.clone(),
            self.far_to.clone(),
            self.far_from.clone(),
        ])
        .expect("erected square is strictly convex")
    }

    pub fn signed_area(&self) -> Scalar {
        polygon_signed_area(&[
            self.base_from.clone(),
            self.base_to.clone(),
            self.far_to.clone(),
            self.far_from.clone(),
        ])
        .expect("four corners")
    }
}

/// Erects the square on `p -> q` on the side away from `opposite`.
pub fn erect_square(
    p: &Point,
    q: &Point,
    opposite: &Point,
    color: SquareColor,
) -> Result<SquareOnEdge, GeomError> {
    let apex_side = side_of_line(opposite, p, q)?;
    if apex_side == Side::On {
        return Err(GeomError::DegenerateTriangle);
    }
    let direction = q - p;
    // A quarter turn of the edge, clockwise when the apex is on the left.
    let offset = rotate_quarter(&direction, &Point::origin(), apex_side == Side::Left);
    debug_assert_ne!(
        side_of_line(&(p + &offset), p, q).unwrap(),
        apex_side,
        "square must be on the exterior side"
    );
    Ok(SquareOnEdge {
        color,
        base_from: p.clone(),
        base_to: q.clone(),
        far_from: p + &offset,
        far_to: q + &offset,
        offset,
    })
}

/// Which end of a base edge a per-endpoint artifact belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeEnd {
    Start,
    End,
}

/// Everything the construction derives from one edge of the triangle: its
/// square, the reflected apex, the altitude foot, the four signed pieces,
/// the two colored triangles and the two altitude-split sub-rectangles.
#[derive(Debug, Clone)]
pub struct EdgeDissection {
    pub color: SquareColor,
    /// Base edge start `P`, end `Q`, and the opposite vertex `R`.
    pub base_start: Point,
    pub base_end: Point,
    pub apex: Point,
    pub square: SquareOnEdge,
    /// `R'`, the apex mirrored across the base line.
    pub apex_reflected: Point,
    /// `H`, the foot of the altitude through the apex.
    pub foot: Point,
    /// Projections of `R'` onto the square sides through `P` and `Q`.
    pub rail_start: Point,
    pub rail_end: Point,
    /// The four signed pieces; vertex orders are fixed.
    pub near_start: SignedTriangle,
    pub far_start: SignedTriangle,
    pub near_end: SignedTriangle,
    pub far_end: SignedTriangle,
    /// Colored triangles at the two base endpoints.
    pub colored_start: SignedTriangle,
    pub colored_end: SignedTriangle,
    /// The two sub-rectangles the altitude foot cuts the square into,
    /// as corner lists (degenerate for right base angles).
    pub rect_start: [Point; 4],
    pub rect_end: [Point; 4],
}

impl EdgeDissection {
    /// Pieces in index order 1..4: near-at-end, far-at-start,
    /// near-at-start, far-at-end. Groups (1,4) and (3,2) are the two
    /// per-endpoint sums.
    pub fn pieces(&self) -> [&SignedTriangle; 4] {
        [&self.near_end, &self.far_start, &self.near_start, &self.far_end]
    }

    pub fn piece_area_sum(&self) -> Scalar {
        self.pieces().iter().map(|t| t.signed_area()).sum()
    }

    pub fn near(&self, end: EdgeEnd) -> &SignedTriangle {
        match end {
            EdgeEnd::Start => &self.near_start,
            EdgeEnd::End => &self.near_end,
        }
    }

    pub fn far(&self, end: EdgeEnd) -> &SignedTriangle {
        match end {
            EdgeEnd::Start => &self.far_start,
            EdgeEnd::End => &self.far_end,
        }
    }

    pub fn colored(&self, end: EdgeEnd) -> &SignedTriangle {
        match end {
            EdgeEnd::Start => &self.colored_start,
            EdgeEnd::End => &self.colored_end,
        }
    }

    pub fn rect(&self, end: EdgeEnd) -> &[Point; 4] {
        match end {
            EdgeEnd::Start => &self.rect_start,
            EdgeEnd::End => &self.rect_end,
        }
    }

    pub fn base_point(&self, end: EdgeEnd) -> &Point {
        match end {
            EdgeEnd::Start => &self.base_start,
            EdgeEnd::End => &self.base_end,
        }
    }

    /// Vertex label at an end of this dissection's base edge.
    pub fn label_at(&self, end: EdgeEnd) -> VertexLabel {
        match end {
            EdgeEnd::Start => self.color.edge_start(),
            EdgeEnd::End => self.color.edge_end(),
        }
    }

    /// The end of the base edge carrying `label`, if any.
    pub fn end_for(&self, label: VertexLabel) -> Option<EdgeEnd> {
        if self.color.edge_start() == label {
            Some(EdgeEnd::Start)
        } else if self.color.edge_end() == label {
            Some(EdgeEnd::End)
        } else {
            None
        }
    }

    pub fn squared_base(&self) -> Scalar {
        squared_distance(&self.base_start, &self.base_end)
    }
}

/// Builds the full dissection of the edge `p -> q` with opposite vertex
/// `apex`.
pub fn dissect_edge(
    p: &Point,
    q: &Point,
    apex: &Point,
    color: SquareColor,
) -> Result<EdgeDissection, GeomError> {
    let square = erect_square(p, q, apex, color)?;
    let offset = square.offset.clone();
    let apex_reflected = reflect_across_line(apex, p, q)?;
    let foot = project_onto_line(apex, p, q)?;
    let far_p = &square.far_from;
    let far_q = &square.far_to;
    let rail_start = project_onto_line(&apex_reflected, p, far_p)?;
    let rail_end = project_onto_line(&apex_reflected, q, far_q)?;

    let near_end = SignedTriangle::new(q.clone(), foot.clone(), apex_reflected.clone());
    let far_end = SignedTriangle::new(rail_end.clone(), apex_reflected.clone(), far_q.clone());
    let near_start = SignedTriangle::new(foot.clone(), p.clone(), apex_reflected.clone());
    let far_start = SignedTriangle::new(rail_start.clone(), far_p.clone(), apex_reflected.clone());
    let colored_end = SignedTriangle::new(q.clone(), apex_reflected.clone(), far_q.clone());
    let colored_start = SignedTriangle::new(p.clone(), far_p.clone(), apex_reflected.clone());

    let foot_far = &foot + &offset;
    let rect_start = [p.clone(), foot.clone(), foot_far.clone(), far_p.clone()];
    let rect_end = [foot.clone(), q.clone(), far_q.clone(), foot_far];

    Ok(EdgeDissection {
        color,
        base_start: p.clone(),
        base_end: q.clone(),
        apex: apex.clone(),
        square,
        apex_reflected,
        foot,
        rail_start,
        rail_end,
        near_start,
        far_start,
        near_end,
        far_end,
        colored_start,
        colored_end,
        rect_start,
        rect_end,
    })
}

/// Two colored triangles anchored at the same vertex, cut from different
/// squares; congruent with equal signed areas.
#[derive(Debug, Clone)]
pub struct ColoredPair {
    /// The pair's own color (blue pair at `C`, green at `B`, red at `A`).
    pub color: SquareColor,
    pub anchor: VertexLabel,
    /// Colors of the squares the two copies were cut from.
    pub hosts: [SquareColor; 2],
    pub copy1: SignedTriangle,
    pub copy2: SignedTriangle,
}

impl ColoredPair {
    pub fn copies(&self) -> [&SignedTriangle; 2] {
        [&self.copy1, &self.copy2]
    }
}

/// The complete construction for one triangle.
#[derive(Debug, Clone)]
pub struct Figure {
    pub triangle: LabeledTriangle,
    pub red: EdgeDissection,
    pub green: EdgeDissection,
    pub blue: EdgeDissection,
    /// Pairs in anchor order `A`, `B`, `C` (red, green, blue).
    pub pairs: [ColoredPair; 3],
}

pub fn build_figure(triangle: LabeledTriangle) -> Figure {
    Figure::build(triangle)
}

impl Figure {
    pub fn build(triangle: LabeledTriangle) -> Figure {
        let dissect = |color: SquareColor| {
            dissect_edge(
                triangle.vertex(color.edge_start()),
                triangle.vertex(color.edge_end()),
                triangle.vertex(color.apex()),
                color,
            )
            .expect("labeled triangle is nondegenerate")
        };
        let red = dissect(SquareColor::Red);
        let green = dissect(SquareColor::Green);
        let blue = dissect(SquareColor::Blue);

        let pair = |anchor: VertexLabel, hosts: [&EdgeDissection; 2]| {
            let copy_of = |d: &EdgeDissection| {
                let end = d.end_for(anchor).expect("anchor lies on host edge");
                d.colored(end).clone()
            };
            ColoredPair {
                color: anchor.pair_color(),
                anchor,
                hosts: [hosts[0].color, hosts[1].color],
                copy1: copy_of(hosts[0]),
                copy2: copy_of(hosts[1]),
            }
        };
        let pairs = [
            pair(VertexLabel::A, [&green, &blue]),
            pair(VertexLabel::B, [&red, &blue]),
            pair(VertexLabel::C, [&red, &green]),
        ];

        Figure { triangle, red, green, blue, pairs }
    }

    pub fn dissection(&self, color: SquareColor) -> &EdgeDissection {
        match color {
            SquareColor::Red => &self.red,
            SquareColor::Green => &self.green,
            SquareColor::Blue => &self.blue,
        }
    }

    pub fn dissections(&self) -> [&EdgeDissection; 3] {
        [&self.red, &self.green, &self.blue]
    }

    pub fn pair(&self, anchor: VertexLabel) -> &ColoredPair {
        match anchor {
            VertexLabel::A => &self.pairs[0],
            VertexLabel::B => &self.pairs[1],
            VertexLabel::C => &self.pairs[2],
        }
    }

    /// Classifies the configuration the way the case analysis needs it.
    pub fn classify(&self) -> CaseReport {
        let t = &self.triangle;
        let angle = |v: VertexLabel, p: VertexLabel, q: VertexLabel| {
            match dot_at(t.vertex(v), t.vertex(p), t.vertex(q)).signum() {
                1 => AngleClass::Acute,
                0 => AngleClass::Right,
                _ => AngleClass::Obtuse,
            }
        };
        let per_color = |f: &dyn Fn(&EdgeDissection) -> bool| PerColor {
            red: f(&self.red),
            green: f(&self.green),
            blue: f(&self.blue),
        };
        let twice_area = &Scalar::from_int(2) * &t.unsigned_area();
        CaseReport {
            orientation: t.orientation(),
            angles: PerVertex {
                a: angle(VertexLabel::A, VertexLabel::B, VertexLabel::C),
                b: angle(VertexLabel::B, VertexLabel::C, VertexLabel::A),
                c: angle(VertexLabel::C, VertexLabel::A, VertexLabel::B),
            },
            reflected: PerColor {
                red: self.red.square.polygon().locate(&self.red.apex_reflected),
                green: self.green.square.polygon().locate(&self.green.apex_reflected),
                blue: self.blue.square.polygon().locate(&self.blue.apex_reflected),
            },
            foot_within_edge: per_color(&|d| {
                let along = dot_at(&d.base_start, &d.apex, &d.base_end);
                !along.is_negative() && along <= d.squared_base()
            }),
            altitude_exceeds_side: per_color(&|d| twice_area > d.squared_base()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleClass {
    Acute,
    Right,
    Obtuse,
}

impl AngleClass {
    pub fn name(self) -> &'static str {
        match self {
            AngleClass::Acute => "acute",
            AngleClass::Right => "right",
            AngleClass::Obtuse => "obtuse",
        }
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact case classification: angle classes, where each reflected vertex
/// landed relative to its square, and the two per-edge predicates that
/// drive the sign pattern of the pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub orientation: Orientation,
    pub angles: PerVertex<AngleClass>,
    /// Location of the reflected apex in its square, keyed by square color.
    pub reflected: PerColor<Location>,
    /// Whether the altitude foot lies on the closed base edge.
    pub foot_within_edge: PerColor<bool>,
    /// Whether the altitude through the apex is longer than the base side
    /// (exact comparison of `2 |area|` against the squared side).
    pub altitude_exceeds_side: PerColor<bool>,
}
