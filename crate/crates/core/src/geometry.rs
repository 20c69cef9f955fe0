//! Points with exact coordinates, the three similarity maps used for
//! degree counting, and the isosceles-right-triangle predicate.

use std::fmt;

use crate::rational::Rational;

/// A point of the plane. Ordering is lexicographic on `(x, y)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(x, y)
    }

    pub fn origin() -> Self {
        Point::int(0, 0)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn dist2(&self, other: &Point) -> Rational {
        self.sub(other).norm2()
    }

    /// Multiplication by `i` (quarter turn about the origin).
    pub fn perp(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        self.add(other).scale(&Rational::half())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Counterclockwise quarter turn of `p` about `center`.
pub fn rot90(center: &Point, p: &Point) -> Point {
    center.add(&p.sub(center).perp())
}

/// Dilation by √2 about `center` followed by a counterclockwise eighth
/// turn, i.e. multiplication of the offset by `1 + i`.
pub fn rot45_plus(center: &Point, p: &Point) -> Point {
    let d = p.sub(center);
    Point::new(&center.x + &d.x - &d.y, &center.y + &d.x + &d.y)
}

/// Dilation by 1/√2 about `center` followed by a counterclockwise eighth
/// turn, i.e. multiplication of the offset by `(1 + i) / 2`.
pub fn rot45_minus(center: &Point, p: &Point) -> Point {
    let d = p.sub(center);
    let h = Rational::half();
    Point::new(
        &center.x + (&d.x - &d.y) * &h,
        &center.y + (&d.x + &d.y) * &h,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrtClass {
    NotIrt,
    /// An isosceles right triangle; `apex` is the right-angle vertex.
    Irt {
        apex: Point,
    },
}

impl IrtClass {
    pub fn is_irt(&self) -> bool {
        matches!(self, IrtClass::Irt { .. })
    }

    pub fn apex(&self) -> Option<&Point> {
        match self {
            IrtClass::Irt { apex } => Some(apex),
            IrtClass::NotIrt => None,
        }
    }
}

fn right_isosceles_at(a: &Point, b: &Point, c: &Point) -> bool {
    let u = b.sub(a);
    let v = c.sub(a);
    u.dot(&v).is_zero() && u.norm2() == v.norm2()
}

/// Exact classification of a triple. Degenerate triples (repeated or
/// collinear points) are `NotIrt`.
pub fn classify_irt(p: &Point, q: &Point, r: &Point) -> IrtClass {
    if p == q || q == r || p == r {
        return IrtClass::NotIrt;
    }
    for (a, b, c) in [(p, q, r), (q, p, r), (r, p, q)] {
        if right_isosceles_at(a, b, c) {
            return IrtClass::Irt { apex: a.clone() };
        }
    }
    IrtClass::NotIrt
}
