//! Small-case extremal search: best one-point extensions, greedy growth
//! from seed sets, and exhaustive branch-and-bound over integer windows.

mod exhaustive;
mod extension;
mod greedy;

use std::time::Duration;

use serde::Serialize;

use crate::geometry::Point;
use crate::point_set::PointSet;

pub use exhaustive::{
    default_window, exhaustive_max, exhaustive_max_with, ExhaustiveOptions, DEFAULT_BUDGET,
    MAX_WINDOW,
};
pub use extension::{best_extension, candidate_points, completions, CandidateScore};
pub use greedy::{
    default_seeds, greedy_build, named_seed, table1_run, Table1Row, TABLE1, TABLE1_RANGE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Greedy,
    Exhaustive,
}

/// The best set found for one size.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchRecord {
    pub n: usize,
    pub best_count: u64,
    pub witness: PointSet,
    pub method: Method,
    /// Where candidates came from (window size or seed name).
    pub window: String,
    pub runtime: Duration,
}

#[derive(Serialize)]
struct RecordJson<'a> {
    n: usize,
    best_count: u64,
    witness: Vec<[String; 2]>,
    method: Method,
    window: &'a str,
    runtime_secs: f64,
}

fn point_strings(p: &Point) -> [String; 2] {
    [p.x.to_fraction_string(), p.y.to_fraction_string()]
}

impl SearchRecord {
    /// One JSON object; witness points sorted, coordinates as `"num/den"`.
    pub fn to_json(&self) -> String {
        let rec = RecordJson {
            n: self.n,
            best_count: self.best_count,
            witness: self.witness.sorted().iter().map(point_strings).collect(),
            method: self.method,
            window: &self.window,
            runtime_secs: self.runtime.as_secs_f64(),
        };
        serde_json::to_string(&rec).expect("record serialises")
    }
}
