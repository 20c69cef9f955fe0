//! Finite point sets with constant-time expected membership.
//!
//! Besides the exact index keyed on canonical [`Point`]s, a set keeps an
//! integer *frame* whenever possible: all coordinates multiplied by their
//! common denominator, stored as `i64` pairs. IRT counts are invariant
//! under scaling, so the counters run on the frame and only fall back to
//! big-rational arithmetic when coordinates are too large.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;

use crate::geometry::Point;
use crate::rational::Rational;

/// Scaled coordinates must stay below this in absolute value so that the
/// similarity maps (which add up to three coordinates) cannot overflow.
const FRAME_LIMIT: i64 = 1 << 40;

#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub(crate) scale: BigInt,
    pub(crate) coords: Vec<(i64, i64)>,
    pub(crate) lookup: HashSet<(i64, i64)>,
}

impl Frame {
    fn build(points: &[Point]) -> Option<Frame> {
        let scale = Rational::common_denominator(points.iter().flat_map(|p| [&p.x, &p.y]));
        let mut coords = Vec::with_capacity(points.len());
        for p in points {
            coords.push(Self::scaled_int(&scale, p)?);
        }
        let lookup = coords.iter().copied().collect();
        Some(Frame {
            scale,
            coords,
            lookup,
        })
    }

    fn scaled_int(scale: &BigInt, p: &Point) -> Option<(i64, i64)> {
        let s = Rational::from_int(scale.clone());
        let x = (&p.x * &s).to_i64()?;
        let y = (&p.y * &s).to_i64()?;
        (x.abs() < FRAME_LIMIT && y.abs() < FRAME_LIMIT).then_some((x, y))
    }

    /// Coordinates of `p` in the frame, which may be non-integral.
    pub(crate) fn scaled(&self, p: &Point) -> (Rational, Rational) {
        let s = Rational::from_int(self.scale.clone());
        (&p.x * &s, &p.y * &s)
    }

    pub(crate) fn contains(&self, c: (i64, i64)) -> bool {
        self.lookup.contains(&c)
    }
}

/// A deduplicated finite set of points. Iteration follows insertion order.
#[derive(Clone, Debug, Default)]
pub struct PointSet {
    points: Vec<Point>,
    index: HashMap<Point, usize>,
    frame: Option<Frame>,
    exact_only: bool,
}

impl PointSet {
    pub fn new() -> Self {
        PointSet::default()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// Points in lexicographic order.
    pub fn sorted(&self) -> Vec<Point> {
        let mut v = self.points.clone();
        v.sort();
        v
    }

    /// Inserts `p`; returns `false` (and leaves the set unchanged) if present.
    pub fn insert(&mut self, p: Point) -> bool {
        if self.index.contains_key(&p) {
            return false;
        }
        self.index.insert(p.clone(), self.points.len());
        let fast = match (&mut self.frame, self.exact_only) {
            (Some(frame), false) => match Frame::scaled_int(&frame.scale, &p) {
                Some(c) => {
                    frame.coords.push(c);
                    frame.lookup.insert(c);
                    true
                }
                None => false,
            },
            _ => false,
        };
        self.points.push(p);
        if !fast && !self.exact_only {
            self.frame = Frame::build(&self.points);
        }
        true
    }

    /// Same set without the integer frame, so every query goes through
    /// exact rational arithmetic. Used to cross-check the two paths.
    pub fn exact_only(&self) -> PointSet {
        PointSet {
            points: self.points.clone(),
            index: self.index.clone(),
            frame: None,
            exact_only: true,
        }
    }

    pub fn has_integer_frame(&self) -> bool {
        self.frame.is_some()
    }

    pub(crate) fn frame(&self) -> Option<&Frame> {
        self.frame.as_ref()
    }

    pub fn translate(&self, by: &Point) -> PointSet {
        self.iter().map(|p| p.add(by)).collect()
    }

    pub fn scale(&self, k: &Rational) -> PointSet {
        self.iter().map(|p| p.scale(k)).collect()
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        self.iter().chain(other.iter()).cloned().collect()
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        let mut points = Vec::new();
        let mut index = HashMap::new();
        for p in iter {
            if !index.contains_key(&p) {
                index.insert(p.clone(), points.len());
                points.push(p);
            }
        }
        let frame = Frame::build(&points);
        PointSet {
            points,
            index,
            frame,
            exact_only: false,
        }
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Equality as sets (insertion order is ignored).
impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().all(|p| other.contains(p))
    }
}

impl Eq for PointSet {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_and_membership() {
        let s: PointSet = [Point::int(0, 0), Point::int(1, 0), Point::int(0, 0)]
            .into_iter()
            .collect();
        assert_eq!(s.len(), 2);
        assert!(s.contains(&Point::int(1, 0)));
        assert!(!s.contains(&Point::int(1, 1)));
        let half = Point::new(Rational::new(2, 4).unwrap(), 0);
        let mut t = s.clone();
        assert!(t.insert(half.clone()));
        assert!(!t.insert(Point::new(Rational::new(1, 2).unwrap(), 0)));
        assert_eq!(t.len(), 3);
        assert!(t.contains(&half));
    }

    #[test]
    fn frame_tracks_denominators() {
        let mut s: PointSet = [Point::int(3, -2)].into_iter().collect();
        assert_eq!(s.frame().unwrap().coords, vec![(3, -2)]);
        s.insert(Point::new(
            Rational::new(1, 2).unwrap(),
            Rational::new(1, 3).unwrap(),
        ));
        let f = s.frame().unwrap();
        assert_eq!(f.scale, BigInt::from(6));
        assert_eq!(f.coords, vec![(18, -12), (3, 2)]);
        assert!(f.contains((3, 2)));
    }

    #[test]
    fn huge_coordinates_drop_the_frame() {
        let big = Rational::from_int(BigInt::from(1) << 70);
        let s: PointSet = [Point::new(big, 0), Point::int(1, 1)].into_iter().collect();
        assert!(!s.has_integer_frame());
        assert!(s.contains(&Point::int(1, 1)));
    }

    #[test]
    fn set_equality_ignores_order() {
        let a: PointSet = [Point::int(0, 0), Point::int(1, 0)].into_iter().collect();
        let b: PointSet = [Point::int(1, 0), Point::int(0, 0)].into_iter().collect();
        assert_eq!(a, b);
        assert!(a.exact_only() == b);
        assert!(!a.exact_only().has_integer_frame());
    }
}
