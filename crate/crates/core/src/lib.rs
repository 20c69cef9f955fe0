//! Exact counting of isosceles right triangles (IRTs) in finite planar
//! point sets, together with the lattice constructions, coefficient
//! analysis, upper bounds and small-case search built on top of it.
//!
//! Coordinates are exact rationals throughout; only the coefficient
//! analysis works in floating point.

pub mod bounds;
pub mod coefficient;
pub mod counting;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod lattice;
pub mod point_file;
pub mod point_set;
pub mod rational;
pub mod sampling;
pub mod search;

pub use counting::{
    count_irt, count_irt_oracle, count_irt_with, deg45, deg90, deg90_candidate, degree_profile,
    DegreeProfile, Orientation,
};
pub use error::{Error, ParseError, Result, VerificationFailure};
pub use exec::Exec;
pub use geometry::{classify_irt, rot45_minus, rot45_plus, rot90, IrtClass, Point};
pub use point_set::PointSet;
pub use rational::Rational;
