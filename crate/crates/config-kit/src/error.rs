use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("configuration {name}: {what}")]
    Irregular { name: String, what: String },
    #[error("type mismatch: {0} vs {1}")]
    TypeMismatch(String, String),
    #[error("fixed pair ({0}, {1}) out of range")]
    BadFixedPair(usize, usize),
    #[error("unknown curve {0}")]
    UnknownCurve(String),
    #[error("unknown class {0}")]
    UnknownClass(String),
    #[error("duplicate curve {0}")]
    DuplicateCurve(String),
    #[error("conflicting intersection for {0}, {1}")]
    ConflictingIntersection(String, String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("term must name exactly one of id or class")]
    BadTerm,
    #[error("schema: {0}")]
    Schema(String),
    #[error("fibration {fibration}, fiber {fiber}: {what}")]
    Fiber { fibration: String, fiber: usize, what: String },
    #[error("divisor {divisor}: {what}")]
    Divisor { divisor: String, what: String },
    #[error("curve subset is not a (-2)-graph: {0}")]
    NotSimplyLaced(String),
    #[error("graph matches no Dynkin or affine Dynkin diagram")]
    NoDynkinMatch,
    #[error("six points are not in general position")]
    ArcNotGeneral,
    #[error("label mismatch: {0}")]
    Label(String),
    #[error("table mismatch: {0}")]
    Table(String),
    #[error("configuration is not isomorphic to {0}")]
    NotIsomorphic(String),
}
