//! Degree functions and total IRT counts.
//!
//! Every degree is a membership count: map the whole set through a
//! similarity centred at `z` and count how many images land back in the
//! set. A point of the set always maps to itself, which is why the
//! degrees of members subtract one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::{classify_irt, rot45_minus, rot45_plus, rot90, Point};
use crate::point_set::{Frame, PointSet};
use crate::rational::Rational;

pub const DEFAULT_ORACLE_CAP: usize = 60;

/// Which eighth-turn similarity a 45° degree uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Offsets multiplied by `1 + i`.
    Plus,
    /// Offsets multiplied by `(1 + i) / 2`.
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Similarity {
    Quarter,
    Eighth(Orientation),
}

impl Similarity {
    pub(crate) fn apply(self, center: &Point, p: &Point) -> Point {
        match self {
            Similarity::Quarter => rot90(center, p),
            Similarity::Eighth(Orientation::Plus) => rot45_plus(center, p),
            Similarity::Eighth(Orientation::Minus) => rot45_minus(center, p),
        }
    }
}

/// A centre expressed in a set's integer frame. Each field is `None`
/// when the corresponding quantity is not an integer.
struct FrameCenter {
    x: Option<i64>,
    y: Option<i64>,
    sum: Option<i64>,
    diff: Option<i64>,
}

impl FrameCenter {
    fn from_int((x, y): (i64, i64)) -> Self {
        FrameCenter {
            x: Some(x),
            y: Some(y),
            sum: Some(x + y),
            diff: Some(y - x),
        }
    }

    fn from_rational(x: &Rational, y: &Rational) -> Self {
        FrameCenter {
            x: x.to_i64(),
            y: y.to_i64(),
            sum: (x + y).to_i64(),
            diff: (y - x).to_i64(),
        }
    }
}

fn frame_hits(frame: &Frame, c: &FrameCenter, map: Similarity) -> u64 {
    let pts = frame.coords.iter();
    let n = match map {
        // (cx + cy - py, cy - cx + px)
        Similarity::Quarter => match (c.sum, c.diff) {
            (Some(s), Some(d)) => pts
                .filter(|&&(px, py)| frame.contains((s - py, d + px)))
                .count(),
            // Off-lattice centre: every image has a non-integral coordinate.
            _ => 0,
        },
        // (px - py + cy, px + py - cx)
        Similarity::Eighth(Orientation::Plus) => match (c.x, c.y) {
            (Some(cx), Some(cy)) => pts
                .filter(|&&(px, py)| frame.contains((px - py + cy, px + py - cx)))
                .count(),
            _ => 0,
        },
        // ((cx + cy + px - py) / 2, (cy - cx + px + py) / 2)
        Similarity::Eighth(Orientation::Minus) => match (c.sum, c.diff) {
            (Some(s), Some(d)) => pts
                .filter(|&&(px, py)| {
                    let (nx, ny) = (s + px - py, d + px + py);
                    nx % 2 == 0 && ny % 2 == 0 && frame.contains((nx / 2, ny / 2))
                })
                .count(),
            _ => 0,
        },
    };
    n as u64
}

/// `|P ∩ map(z, P)|`.
pub(crate) fn image_hits(set: &PointSet, z: &Point, map: Similarity) -> u64 {
    if let Some(frame) = set.frame() {
        let (x, y) = frame.scaled(z);
        return frame_hits(frame, &FrameCenter::from_rational(&x, &y), map);
    }
    set.iter()
        .filter(|p| set.contains(&map.apply(z, p)))
        .count() as u64
}

/// Same as [`image_hits`] for the `i`-th stored point.
fn member_hits(set: &PointSet, i: usize, map: Similarity) -> u64 {
    match set.frame() {
        Some(frame) => frame_hits(frame, &FrameCenter::from_int(frame.coords[i]), map),
        None => image_hits(set, &set.points()[i], map),
    }
}

fn require_member(set: &PointSet, z: &Point) -> Result<usize> {
    set.position(z).ok_or_else(|| Error::NotInSet(Box::new(z.clone())))
}

/// Number of IRTs of `set` with right angle at `z ∈ set`.
pub fn deg90(set: &PointSet, z: &Point) -> Result<u64> {
    let i = require_member(set, z)?;
    Ok(member_hits(set, i, Similarity::Quarter) - 1)
}

/// Number of IRTs with right angle at `z ∉ set` and legs ending in `set`.
pub fn deg90_candidate(set: &PointSet, z: &Point) -> Result<u64> {
    if set.contains(z) {
        return Err(Error::AlreadyInSet(Box::new(z.clone())));
    }
    Ok(image_hits(set, z, Similarity::Quarter))
}

/// Number of counterclockwise IRTs `z a b` (`a, b` in the set) whose
/// hypotenuse is `zb` for [`Orientation::Plus`] or `za` for
/// [`Orientation::Minus`].
pub fn deg45(set: &PointSet, z: &Point, orientation: Orientation) -> Result<u64> {
    let i = require_member(set, z)?;
    Ok(member_hits(set, i, Similarity::Eighth(orientation)) - 1)
}

pub fn count_irt(set: &PointSet) -> u64 {
    count_irt_with(set, Exec::default())
}

/// Sum of right-angle degrees over the set; expected `O(n²)`.
pub fn count_irt_with(set: &PointSet, exec: Exec) -> u64 {
    exec.sum(set.len(), |i| member_hits(set, i, Similarity::Quarter) - 1)
}

/// Brute-force `O(n³)` count over all triples, refusing sets larger than
/// [`DEFAULT_ORACLE_CAP`].
pub fn count_irt_oracle(set: &PointSet) -> Result<u64> {
    count_irt_oracle_capped(set, DEFAULT_ORACLE_CAP)
}

pub fn count_irt_oracle_capped(set: &PointSet, cap: usize) -> Result<u64> {
    let n = set.len();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    Ok(oracle_triples(set).len() as u64)
}

/// Every IRT of the set as `(i, j, k, apex_index)` with `i < j < k`, by
/// full triple enumeration.
pub(crate) fn oracle_triples(set: &PointSet) -> Vec<(usize, usize, usize, usize)> {
    let p = set.points();
    let n = p.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if let Some(apex) = classify_irt(&p[i], &p[j], &p[k]).apex() {
                    let a = [i, j, k].into_iter().find(|&t| &p[t] == apex).unwrap();
                    out.push((i, j, k, a));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointDegrees {
    #[serde(skip)]
    pub point: Point,
    pub deg90: u64,
    pub deg45_plus: u64,
    pub deg45_minus: u64,
}

impl PointDegrees {
    pub fn total(&self) -> u64 {
        self.deg90 + self.deg45_plus + self.deg45_minus
    }
}

/// Per-point degree triples, in the set's iteration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub entries: Vec<PointDegrees>,
}

impl DegreeProfile {
    pub fn sum90(&self) -> u64 {
        self.entries.iter().map(|e| e.deg90).sum()
    }

    pub fn sum45_plus(&self) -> u64 {
        self.entries.iter().map(|e| e.deg45_plus).sum()
    }

    pub fn sum45_minus(&self) -> u64 {
        self.entries.iter().map(|e| e.deg45_minus).sum()
    }

    /// The three degree sums agree (each counts every IRT once).
    pub fn sums_agree(&self) -> bool {
        let s = self.sum90();
        s == self.sum45_plus() && s == self.sum45_minus()
    }

    pub fn get(&self, p: &Point) -> Option<&PointDegrees> {
        self.entries.iter().find(|e| &e.point == p)
    }
}

pub fn degree_profile(set: &PointSet) -> DegreeProfile {
    degree_profile_with(set, Exec::default())
}

pub fn degree_profile_with(set: &PointSet, exec: Exec) -> DegreeProfile {
    let entries = exec.map(set.len(), |i| PointDegrees {
        point: set.points()[i].clone(),
        deg90: member_hits(set, i, Similarity::Quarter) - 1,
        deg45_plus: member_hits(set, i, Similarity::Eighth(Orientation::Plus)) - 1,
        deg45_minus: member_hits(set, i, Similarity::Eighth(Orientation::Minus)) - 1,
    });
    DegreeProfile { entries }
}
