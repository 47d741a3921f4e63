use exact_arith::ArithError;
use hypersurface_lab::HyperError;
use proj_geom::GeomError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("net of quadrics is degenerate")]
    DegenerateNet,
    #[error("printed point {0} fails: {1}")]
    PrintedPoint(String, String),
    #[error("plane {0} is not contained in the complex")]
    PlaneNotContained(String),
    #[error("prime {0} must be 1 mod 4")]
    BadPrime(u64),
    #[error("prime {0} exceeds the scan bound {1}")]
    PrimeTooLarge(u64, u64),
    #[error("quadric is singular at the point")]
    SingularQuadric,
    #[error("symmetry search exceeded its budget")]
    SearchBudget,
    #[error("{0}")]
    Identity(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Hyper(#[from] HyperError),
}
