//! Points and the exact predicates everything else is built from.
//!
//! A [`Point`] doubles as a displacement vector, as is usual in small 2D
//! kernels; `p - q` is the vector from `q` to `p`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::GeomError;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    pub fn origin() -> Self {
        Point::from_ints(0, 0)
    }

    pub fn midpoint(p: &Point, q: &Point) -> Point {
        let half = Scalar::ratio(1, 2);
        Point::new(&(&p.x + &q.x) * &half, &(&p.y + &q.y) * &half)
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        &(&self.x * &other.x) + &(&self.y * &other.y)
    }

    pub fn cross(&self, other: &Point) -> Scalar {
        &(&self.x * &other.y) - &(&self.y * &other.x)
    }

    pub fn scaled(&self, s: &Scalar) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

/// Which side of the directed line `l1 -> l2` a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    On,
    Right,
}

/// Shoelace area of the triangle `(p, q, r)`:
/// `((q - p) x (r - p)) / 2`, positive iff the vertices run counterclockwise.
pub fn signed_area(p: &Point, q: &Point, r: &Point) -> Scalar {
    &(q - p).cross(&(r - p)) * &Scalar::ratio(1, 2)
}

/// Dot product of the two rays leaving `x`: `(p - x) . (q - x)`.
///
/// For triangle vertices this is `|xp| * |xq| * cos(angle at x)`, evaluated
/// without any trigonometry.
pub fn dot_at(x: &Point, p: &Point, q: &Point) -> Scalar {
    (p - x).dot(&(q - x))
}

pub fn squared_distance(p: &Point, q: &Point) -> Scalar {
    let d = p - q;
    d.dot(&d)
}

/// Orthogonal projection of `p` onto the line through `l1` and `l2`.
pub fn project_onto_line(p: &Point, l1: &Point, l2: &Point) -> Result<Point, GeomError> {
    let d = l2 - l1;
    let len2 = d.dot(&d);
    if len2.is_zero() {
        return Err(GeomError::DegenerateLine);
    }
    let t = &(p - l1).dot(&d) / &len2;
    Ok(l1 + &d.scaled(&t))
}

/// Mirror image of `p` across the line through `l1` and `l2`.
///
/// Rational in, rational out: the only division is by the squared length of
/// the direction vector.
pub fn reflect_across_line(p: &Point, l1: &Point, l2: &Point) -> Result<Point, GeomError> {
    let foot = project_onto_line(p, l1, l2)?;
    Ok(&(&foot + &foot) - p)
}

/// Rotates `p` a quarter turn about `center`.
pub fn rotate_quarter(p: &Point, center: &Point, clockwise: bool) -> Point {
    let v = p - center;
    let rotated = if clockwise {
        Point::new(v.y, -&v.x)
    } else {
        Point::new(-&v.y, v.x)
    };
    center + &rotated
}

pub fn side_of_line(p: &Point, l1: &Point, l2: &Point) -> Result<Side, GeomError> {
    if l1 == l2 {
        return Err(GeomError::DegenerateLine);
    }
    Ok(match signed_area(l1, l2, p).signum() {
        1 => Side::Left,
        -1 => Side::Right,
        _ => Side::On,
    })
}
