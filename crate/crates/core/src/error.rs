use thiserror::Error;

use crate::perm::PermPolynomial;

/// Errors raised by the algebra routines and the expression parser.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty monomial")]
    EmptyMonomial,
    #[error("generator index must be at least 1")]
    ZeroGenerator,
    #[error("invalid dimension request: {0}")]
    InvalidDimension(String),
    #[error("multidegree total {total} does not match degree {degree}")]
    MultidegreeMismatch { total: usize, degree: usize },
    #[error("inputs are not homogeneous in a single multidegree component")]
    MixedComponents,
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("unbound variable slot {0}")]
    UnboundSlot(usize),
    #[error("not a Lie element; defect {0}")]
    NotLie(PermPolynomial),
    #[error("not a Jordan element; offending component {0}")]
    NotJordan(PermPolynomial),
    #[error("word length {0} is too short, need at least 3")]
    WordTooShort(usize),
    #[error("multidegree total {total} exceeds bound {bound}")]
    DegreeBound { total: usize, bound: usize },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator name '{0}'")]
    UnknownGenerator(String),
    #[error("expected exactly one dotted letter per word, found {0}")]
    DotCount(usize),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid rational '{0}'")]
    InvalidRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
