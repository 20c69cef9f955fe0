//! Lower-bound configurations: square grids, disk-shaped sections of the
//! integer lattice and of its half-shifted copy, and the two-disk union.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::point_set::PointSet;
use crate::rational::Rational;

/// The integer lattice ℤ², or its translate by `(1/2, 1/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LatticeKind {
    Integer,
    HalfShifted,
}

impl LatticeKind {
    fn offset(self) -> Rational {
        match self {
            LatticeKind::Integer => Rational::zero(),
            LatticeKind::HalfShifted => Rational::half(),
        }
    }

    pub fn point(self, i: i64, j: i64) -> Point {
        let o = self.offset();
        Point::new(Rational::from(i) + &o, Rational::from(j) + &o)
    }

    pub fn contains(self, p: &Point) -> bool {
        let o = self.offset();
        (&p.x - &o).is_integer() && (&p.y - &o).is_integer()
    }
}

/// `{0, …, k-1}²`.
pub fn square_grid(k: usize) -> PointSet {
    let k = k as i64;
    (0..k)
        .flat_map(|x| (0..k).map(move |y| Point::int(x, y)))
        .collect()
}

/// The `n` points of the lattice nearest to `center`, by exact squared
/// distance with lexicographic tie-breaking. Sections for increasing `n`
/// are nested.
pub fn disk_lattice(n: usize, kind: LatticeKind, center: &Point) -> PointSet {
    disk_lattice_sorted(n, kind, center).into_iter().collect()
}

/// [`disk_lattice`] as a list in selection order.
pub fn disk_lattice_sorted(n: usize, kind: LatticeKind, center: &Point) -> Vec<Point> {
    if n == 0 {
        return Vec::new();
    }
    let base_x = center.x.floor().to_i64().expect("centre too far out");
    let base_y = center.y.floor().to_i64().expect("centre too far out");
    let mut radius = ((n as f64 / std::f64::consts::PI).sqrt().ceil() as i64) + 2;
    loop {
        let mut cand: Vec<(Rational, Point)> = Vec::new();
        for i in base_x - radius - 1..=base_x + radius + 1 {
            for j in base_y - radius - 1..=base_y + radius + 1 {
                let p = kind.point(i, j);
                cand.push((p.dist2(center), p));
            }
        }
        cand.sort();
        // The box contains every lattice point within `radius` of the centre,
        // so the selection is exact once the n-th distance is inside it.
        if cand.len() >= n && cand[n - 1].0 <= Rational::from(radius * radius) {
            cand.truncate(n);
            return cand.into_iter().map(|(_, p)| p).collect();
        }
        radius *= 2;
    }
}

/// Sizes of the two disks in the two-disk construction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TwoDiskParams {
    pub n: usize,
    /// Size ratio `m2 / m1`, in `(0, 1)`.
    pub x: f64,
    pub m1: usize,
    pub m2: usize,
}

impl TwoDiskParams {
    /// `m1 = round(n / (1 + x))`, `m2 = n - m1`.
    pub fn new(n: usize, x: f64) -> Result<Self> {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::InvalidParams(format!(
                "ratio x = {x} must lie in (0, 1)"
            )));
        }
        let m1 = ((n as f64) / (1.0 + x)).round() as usize;
        Ok(TwoDiskParams {
            n,
            x,
            m1,
            m2: n - m1,
        })
    }
}

/// `A` = integer-lattice disk of size `m1`, `B` = half-shifted disk of
/// size `m2`, both centred at the origin. The lattices are disjoint, so
/// `|A ∪ B| = n`.
pub fn two_disk(params: &TwoDiskParams) -> Result<(PointSet, PointSet)> {
    if params.m2 == 0 {
        return Err(Error::InvalidParams(format!(
            "n = {} and x = {} leave the inner disk empty",
            params.n, params.x
        )));
    }
    let o = Point::origin();
    Ok((
        disk_lattice(params.m1, LatticeKind::Integer, &o),
        disk_lattice(params.m2, LatticeKind::HalfShifted, &o),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RotationClass {
    /// Quarter turns about the centre map each of ℤ² and ℤ² + (½, ½) onto itself.
    Closed,
    /// Quarter turns about the centre move each lattice off itself entirely.
    Empty,
}

/// Classifies the centre `(j, k)`: closed exactly when `k - j` and `k + j`
/// are integers, i.e. the centre lies on one of the two lattices.
pub fn lattice_rotation_class(j: &Rational, k: &Rational) -> RotationClass {
    if (k - j).is_integer() && (k + j).is_integer() {
        RotationClass::Closed
    } else {
        RotationClass::Empty
    }
}

/// Squared radius of the outermost selected point of a sorted section.
pub fn section_radius2(points: &[Point], center: &Point) -> Option<Rational> {
    points.iter().map(|p| p.dist2(center)).max()
}
