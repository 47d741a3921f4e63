use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element has no square root in this field")]
    NonSquare,
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomials belong to different rings")]
    MixedRing,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` occurs but has no substitution")]
    UnmappedVariable(String),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("Pfaffian needs an even-size matrix, got {0}")]
    OddSize(usize),
    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exact division failed")]
    Inexact,
}
