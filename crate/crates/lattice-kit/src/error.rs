use config_kit::ConfigError;
use exact_arith::ArithError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("unknown lattice name {0:?}")]
    UnknownName(String),
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix has an odd diagonal entry")]
    NotEven,
    #[error("Gram matrix is degenerate")]
    Degenerate,
    #[error("lattice is not definite")]
    NotDefinite,
    #[error("group order {0} exceeds the bound {1}")]
    OrderBound(u64, u64),
    #[error("glue vector is not in the dual lattice")]
    GlueNotDual,
    #[error("glue is not isotropic: {0}")]
    NotIsotropic(String),
    #[error("pairing of {0} with {1} is not integral: {2}")]
    NonIntegral(String, String, String),
    #[error("unsupported Artin invariant {0}")]
    BadSigma(u32),
    #[error("enumeration did not close: {0}")]
    Enumeration(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
