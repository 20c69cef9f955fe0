use thiserror::Error;

use crate::geometry::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid number {0:?}: expected an integer or int/int")]
    BadNumber(String),
    #[error("line {line}: expected two coordinates, found {found:?}")]
    BadLine { line: usize, found: String },
    #[error("line {line}: invalid coordinate: {source}")]
    BadCoordinate {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
    #[error("line {line}: duplicate point ({point}), first seen on line {first}")]
    DuplicatePoint {
        line: usize,
        first: usize,
        point: Box<Point>,
    },
}

/// A structural property that must hold for every finite point set was
/// observed to fail. Either the implementation is wrong or the input is a
/// counterexample; callers must not treat this like a bad argument.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("verification failure: {property}: {detail}")]
pub struct VerificationFailure {
    pub property: &'static str,
    pub detail: String,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point {0} is not in the set")]
    NotInSet(Box<Point>),
    #[error("point {0} is already in the set")]
    AlreadyInSet(Box<Point>),
    #[error("oracle refuses {n} points (cap {cap})")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("search budget exceeded after {nodes} nodes (budget {budget})")]
    BudgetExceeded { nodes: u64, budget: u64 },
    #[error(transparent)]
    Verification(#[from] VerificationFailure),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, Error::Verification(_))
    }
}
