use std::collections::HashMap;

use crate::counting::count_irt;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::point_set::PointSet;

/// The six points that complete `{p, q}` to an IRT: right angle at `p`,
/// right angle at `q` (two each), and the two apexes over hypotenuse `pq`.
pub fn completions(p: &Point, q: &Point) -> [Point; 6] {
    let d = q.sub(p).perp();
    let m = p.midpoint(q);
    let h = d.scale(&crate::rational::Rational::half());
    [
        p.add(&d),
        p.sub(&d),
        q.add(&d),
        q.sub(&d),
        m.add(&h),
        m.sub(&h),
    ]
}

/// Number of new IRTs each outside point would create, for every outside
/// point that creates at least one.
fn completion_counts(set: &PointSet) -> HashMap<Point, u64> {
    let pts = set.points();
    let mut counts = HashMap::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for z in completions(&pts[i], &pts[j]) {
                if !set.contains(&z) {
                    *counts.entry(z).or_insert(0) += 1;
                }
            }
        }
    }
    counts
}

/// Every point outside the set whose addition creates at least one IRT.
pub fn candidate_points(set: &PointSet) -> Result<PointSet> {
    if set.len() < 2 {
        return Err(Error::InvalidParams(format!(
            "candidates need at least 2 points, got {}",
            set.len()
        )));
    }
    let mut v: Vec<Point> = completion_counts(set).into_keys().collect();
    v.sort();
    Ok(v.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateScore {
    pub candidate: Point,
    /// IRTs formed by the candidate and two points of the set.
    pub new_irts: u64,
    pub total_after: u64,
}

/// All candidates scored exactly, best first; ties broken by point order.
///
/// A candidate `z` and a pair `{p, q}` form an IRT exactly when `z` is one
/// of the pair's six completions, and each such triple is seen once, so
/// the completion multiplicity of `z` is its score.
pub fn best_extension(set: &PointSet) -> Result<Vec<CandidateScore>> {
    if set.len() < 2 {
        return Err(Error::InvalidParams(format!(
            "extension needs at least 2 points, got {}",
            set.len()
        )));
    }
    let base = count_irt(set);
    let mut scores: Vec<CandidateScore> = completion_counts(set)
        .into_iter()
        .map(|(candidate, new_irts)| CandidateScore {
            candidate,
            new_irts,
            total_after: base + new_irts,
        })
        .collect();
    scores.sort_by(|a, b| {
        b.new_irts
            .cmp(&a.new_irts)
            .then_with(|| a.candidate.cmp(&b.candidate))
    });
    Ok(scores)
}
