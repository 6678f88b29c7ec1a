use thiserror::Error;

use crate::torus::Monomial;

/// Position-tagged parse failure. `position` is a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {}", expected.join(" or "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn new(position: usize, expected: &[&str]) -> Self {
        ParseError {
            position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInversion,
    #[error("generator index {0} is out of range 1..=3")]
    IndexOutOfRange(usize),
    #[error("diagonal monomial {0} is not in L_q")]
    DiagonalNotInLq(Monomial),
    #[error("({0},{1}) is not one of the pairs (3,2), (3,1), (2,1)")]
    InvalidPair(u8, u8),
    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
