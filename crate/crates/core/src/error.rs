use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a permutation of 1..={n}: {detail}")]
    NotAPermutation { n: usize, detail: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("a permutation tuple needs k >= 2 chains, got k = {0}")]
    TooFewChains(usize),

    #[error("degree {0} exceeds the supported maximum of {max}", max = crate::subset::MAX_DEGREE)]
    DegreeTooLarge(usize),

    #[error("not a partial order: {0}")]
    NotAPoset(String),

    #[error("not a lattice: elements {a} and {b} have no {missing}")]
    NotALattice { a: usize, b: usize, missing: &'static str },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("lattice is not semimodular: meet({a}, {b}) is covered by {a} but {b} is not covered by join({a}, {b})")]
    NotSemimodular { a: usize, b: usize },

    #[error("not an antimatroid: {0}")]
    NotAnAntimatroid(String),

    #[error("{0}")]
    Refused(String),
}
