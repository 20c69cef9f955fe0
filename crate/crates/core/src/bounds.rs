//! Upper-bound formulas and an executable check of the structural facts
//! about a diameter pair that the `⌊2(n-1)²/3 - 5/3⌋` bound rests on.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::counting::{image_hits, Orientation, Similarity};
use crate::error::{Error, Result, VerificationFailure};
use crate::geometry::{rot45_minus, rot90, Point};
use crate::point_set::PointSet;

/// `n² - n`: each pair of points lies in at most six IRTs.
pub fn trivial_upper(n: u64) -> u64 {
    n * n.saturating_sub(1)
}

/// `⌊(2(n-1)² - 5) / 3⌋` for `n ≥ 3`.
pub fn theorem3_upper(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "upper bound needs n >= 3, got {n}"
        )));
    }
    Ok((2 * (n - 1) * (n - 1) - 5) / 3)
}

/// If every `k`-subset of an `n`-set spans at most `b` IRTs, the set spans
/// at most `⌊n(n-1)(n-2)b / (k(k-1)(k-2))⌋`.
pub fn averaging_upper(n: u64, k: u64, b: u64) -> Result<u64> {
    if k < 3 || k > n {
        return Err(Error::InvalidParams(format!(
            "need 3 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let (n, k, b) = (n as u128, k as u128, b as u128);
    let num = n * (n - 1) * (n - 2) * b;
    let den = k * (k - 1) * (k - 2);
    u64::try_from(num / den).map_err(|_| Error::InvalidParams("bound overflows u64".into()))
}

/// Right-angle degree bound at a diameter pair,
/// `deg90(x) + deg90(y) ≤ ⌈2(n-2)/3⌉`.
///
/// The ceiling is needed: the unit square has sum 2 at n = 4.
pub fn pair_deg90_bound(n: u64) -> u64 {
    (2 * n.saturating_sub(2)).div_ceil(3)
}

/// `⌊(4n - 5)/3⌋`: some endpoint of a diameter lies in at most this many IRTs.
pub fn endpoint_degree_bound(n: u64) -> u64 {
    (4 * n).saturating_sub(5) / 3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterReport {
    pub n: usize,
    #[serde(serialize_with = "ser_pair")]
    pub diameter_pair: (Point, Point),
    /// `|N_x|` where `N_x = P ∩ rot45_minus(x, P) \ {x}`.
    pub nx_size: usize,
    pub ny_size: usize,
    pub nx_cap_ny: usize,
    /// Points `p` with both `rot90(x, p)` and `rot90(y, p)` in the set.
    pub double_rotations: usize,
    pub edge_count: usize,
    pub max_graph_degree: usize,
    /// Longest simple path of the rotation graph, in edges.
    pub max_path_length: usize,
    pub deg90_x: u64,
    pub deg90_y: u64,
    pub deg90_sum_xy: u64,
    pub deg45_plus_sum_xy: u64,
    pub deg45_minus_sum_xy: u64,
    pub min_total_degree_xy: u64,
}

fn ser_pair<S: serde::Serializer>(
    p: &(Point, Point),
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    seq.serialize_element(&p.0.to_string())?;
    seq.serialize_element(&p.1.to_string())?;
    seq.end()
}

/// One named check of a [`DiameterReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl DiameterReport {
    pub fn checks(&self) -> Vec<InvariantCheck> {
        let n = self.n as u64;
        let excess = self.deg90_sum_xy as i64 - self.edge_count as i64;
        let mut out = Vec::new();
        let mut add = |name, holds, detail: String| {
            out.push(InvariantCheck {
                name,
                holds,
                detail,
            })
        };
        add(
            "nx_cap_ny <= 1",
            self.nx_cap_ny <= 1,
            format!("|N_x ∩ N_y| = {}", self.nx_cap_ny),
        );
        add(
            "at most one quarter-turn image about x, y",
            self.double_rotations == 0,
            format!("{} points with both images present", self.double_rotations),
        );
        add(
            "graph degree <= 2",
            self.max_graph_degree <= 2,
            format!("max degree {}", self.max_graph_degree),
        );
        add(
            "path length <= 2",
            self.max_path_length <= 2,
            format!("longest path {}", self.max_path_length),
        );
        add(
            "0 <= deg90 sum - |E| <= 1",
            (0..=1).contains(&excess),
            format!(
                "deg90(x)+deg90(y) = {}, |E| = {}",
                self.deg90_sum_xy, self.edge_count
            ),
        );
        add(
            "deg90 pair sum <= ceil(2(n-2)/3)",
            self.deg90_sum_xy <= pair_deg90_bound(n),
            format!("{} vs {}", self.deg90_sum_xy, pair_deg90_bound(n)),
        );
        add(
            "deg45+ pair sum <= n-1",
            self.deg45_plus_sum_xy < n,
            format!("{} vs {}", self.deg45_plus_sum_xy, n - 1),
        );
        add(
            "deg45- pair sum <= n-1",
            self.deg45_minus_sum_xy < n,
            format!("{} vs {}", self.deg45_minus_sum_xy, n - 1),
        );
        add(
            "min endpoint degree <= floor((4n-5)/3)",
            self.min_total_degree_xy <= endpoint_degree_bound(n),
            format!(
                "{} vs {}",
                self.min_total_degree_xy,
                endpoint_degree_bound(n)
            ),
        );
        out
    }

    pub fn verify(&self) -> Result<(), VerificationFailure> {
        match self.checks().into_iter().find(|c| !c.holds) {
            None => Ok(()),
            Some(c) => Err(VerificationFailure {
                property: c.name,
                detail: format!(
                    "{} (diameter {:?}-{:?}, n = {})",
                    c.detail, self.diameter_pair.0, self.diameter_pair.1, self.n
                ),
            }),
        }
    }
}

/// Diameter pair by exact squared distance; ties go to the
/// lexicographically smallest ordered pair `(a, b)` with `a < b`.
pub fn diameter_pair(set: &PointSet) -> Option<(Point, Point)> {
    let pts = set.sorted();
    let mut best: Option<(crate::rational::Rational, usize, usize)> = None;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let d = pts[i].dist2(&pts[j]);
            if best.as_ref().is_none_or(|(bd, _, _)| d > *bd) {
                best = Some((d, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (pts[i].clone(), pts[j].clone()))
}

fn longest_path(adj: &[Vec<usize>]) -> usize {
    fn dfs(adj: &[Vec<usize>], v: usize, seen: &mut [bool]) -> usize {
        seen[v] = true;
        let mut best = 0;
        for &w in &adj[v] {
            if !seen[w] {
                best = best.max(1 + dfs(adj, w, seen));
            }
        }
        seen[v] = false;
        best
    }
    let mut seen = vec![false; adj.len()];
    (0..adj.len())
        .filter(|&v| !adj[v].is_empty())
        .map(|v| dfs(adj, v, &mut seen))
        .max()
        .unwrap_or(0)
}

/// Measures the diameter-pair quantities without judging them.
pub fn measure_diameter(set: &PointSet) -> Result<DiameterReport> {
    let n = set.len();
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "diameter report needs >= 3 points, got {n}"
        )));
    }
    let (x, y) = diameter_pair(set).expect("n >= 3");

    let shrink_hits = |c: &Point| -> BTreeSet<Point> {
        set.iter()
            .map(|p| rot45_minus(c, p))
            .filter(|q| q != c && set.contains(q))
            .collect()
    };
    let nx = shrink_hits(&x);
    let ny = shrink_hits(&y);

    let rest: Vec<&Point> = set.iter().filter(|p| **p != x && **p != y).collect();
    let pos = |p: &Point| rest.iter().position(|q| *q == p);
    let mut edges = BTreeSet::new();
    let mut double_rotations = 0;
    for p in set.iter() {
        let (px, py) = (rot90(&x, p), rot90(&y, p));
        if p != &x && p != &y && set.contains(&px) && set.contains(&py) {
            double_rotations += 1;
        }
        if let Some(u) = pos(p) {
            for img in [px, py] {
                if let Some(v) = pos(&img) {
                    edges.insert((u.min(v), u.max(v)));
                }
            }
        }
    }
    let mut adj = vec![Vec::new(); rest.len()];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }

    let deg = |z: &Point, map: Similarity| image_hits(set, z, map) - 1;
    let q = Similarity::Quarter;
    let plus = Similarity::Eighth(Orientation::Plus);
    let minus = Similarity::Eighth(Orientation::Minus);
    let (deg90_x, deg90_y) = (deg(&x, q), deg(&y, q));
    let total = |z: &Point| deg(z, q) + deg(z, plus) + deg(z, minus);

    Ok(DiameterReport {
        n,
        nx_size: nx.len(),
        ny_size: ny.len(),
        nx_cap_ny: nx.intersection(&ny).count(),
        double_rotations,
        edge_count: edges.len(),
        max_graph_degree: adj.iter().map(Vec::len).max().unwrap_or(0),
        max_path_length: longest_path(&adj),
        deg90_x,
        deg90_y,
        deg90_sum_xy: deg90_x + deg90_y,
        deg45_plus_sum_xy: deg(&x, plus) + deg(&y, plus),
        deg45_minus_sum_xy: deg(&x, minus) + deg(&y, minus),
        min_total_degree_xy: total(&x).min(total(&y)),
        diameter_pair: (x, y),
    })
}

/// [`measure_diameter`], failing with a verification error if any
/// structural invariant is violated.
pub fn diameter_report(set: &PointSet) -> Result<DiameterReport> {
    let report = measure_diameter(set)?;
    report.verify()?;
    Ok(report)
}

/// `(deg45+(x) + deg45+(y), deg45-(x) + deg45-(y))` at the diameter pair;
/// each must be at most `n - 1`.
pub fn deg45_pair_bounds(set: &PointSet) -> Result<(u64, u64)> {
    let r = measure_diameter(set)?;
    let n = set.len() as u64;
    for (sum, name) in [
        (r.deg45_plus_sum_xy, "deg45+ pair sum <= n-1"),
        (r.deg45_minus_sum_xy, "deg45- pair sum <= n-1"),
    ] {
        if sum > n - 1 {
            return Err(VerificationFailure {
                property: name,
                detail: format!("{sum} > {}", n - 1),
            }
            .into());
        }
    }
    Ok((r.deg45_plus_sum_xy, r.deg45_minus_sum_xy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::square_grid;

    fn set(pts: &[(i64, i64)]) -> PointSet {
        pts.iter().map(|&(x, y)| Point::int(x, y)).collect()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(trivial_upper(3), 6);
        assert_eq!(trivial_upper(4), 12);
        assert_eq!(trivial_upper(9), 72);
        assert_eq!(trivial_upper(0), 0);
        assert_eq!(theorem3_upper(3).unwrap(), 1);
        assert_eq!(theorem3_upper(4).unwrap(), 4);
        assert_eq!(theorem3_upper(9).unwrap(), 41);
        assert!(theorem3_upper(2).is_err());
        assert_eq!(averaging_upper(5, 4, 1).unwrap(), 2);
        assert_eq!(averaging_upper(6, 5, 4).unwrap(), 8);
        assert_eq!(averaging_upper(7, 6, 8).unwrap(), 14);
        assert!(averaging_upper(5, 2, 1).is_err());
        assert!(averaging_upper(5, 6, 1).is_err());
        for (n, b) in [(5, 8), (9, 28), (25, 252)] {
            assert_eq!(averaging_upper(n, n, b).unwrap(), b);
        }
    }

    #[test]
    fn unit_square_report() {
        let sq = set(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let r = diameter_report(&sq).unwrap();
        assert_eq!(r.diameter_pair, (Point::int(0, 0), Point::int(1, 1)));
        assert!(r.nx_cap_ny <= 1);
        let (p, m) = deg45_pair_bounds(&sq).unwrap();
        assert!(p <= 3 && m <= 3);
    }

    #[test]
    fn grid_report() {
        let r = diameter_report(&square_grid(3)).unwrap();
        assert!(r.max_path_length <= 2 && r.max_graph_degree <= 2);
        assert_eq!(r.diameter_pair, (Point::int(0, 0), Point::int(2, 2)));
    }

    #[test]
    fn collinear_report() {
        let line = set(&[(0, 0), (1, 0), (2, 0), (5, 0)]);
        let r = diameter_report(&line).unwrap();
        assert_eq!(r.edge_count, 0);
        assert_eq!(r.deg90_sum_xy, 0);
        assert_eq!(deg45_pair_bounds(&line).unwrap(), (0, 0));
    }

    #[test]
    fn unit_triangle_pair_bounds() {
        let tri = set(&[(0, 0), (1, 0), (0, 1)]);
        let (p, m) = deg45_pair_bounds(&tri).unwrap();
        assert!(p <= 2 && m <= 2);
        assert!(measure_diameter(&set(&[(0, 0), (1, 0)])).is_err());
    }

    #[test]
    fn a_violation_is_reported_as_verification_failure() {
        let sq = set(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let mut r = measure_diameter(&sq).unwrap();
        r.max_path_length = 3;
        let err = r.verify().unwrap_err();
        assert_eq!(err.property, "path length <= 2");
        assert!(Error::from(err).is_verification_failure());
    }

    #[test]
    fn longest_path_counts_edges() {
        let adj = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        assert_eq!(longest_path(&adj), 3);
        assert_eq!(longest_path(&[vec![], vec![]]), 0);
    }
}
