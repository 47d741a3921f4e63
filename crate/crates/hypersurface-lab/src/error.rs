use exact_arith::ArithError;
use proj_geom::GeomError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("polynomial is not homogeneous in the coordinates")]
    NotHomogeneous,
    #[error("point is not singular")]
    NotSingular,
    #[error("point does not lie on the hypersurface")]
    NotOnSurface,
    #[error("quadratic part has rank {0} < 2; not an A_n shape")]
    NotAType(usize),
    #[error("local equation has nonzero constant or linear part")]
    NotSingularLocal,
    #[error("quadratic part does not split over this field; extend scalars")]
    ExtendScalars,
    #[error("node test in characteristic 2 needs {0} local variables")]
    UnsupportedCharTwo(usize),
    #[error("line is not contained in the surface")]
    LineNotOnSurface,
    #[error("center lies on a line through two of the points")]
    CenterOnConnectingLine,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("requires characteristic {0}")]
    WrongCharacteristic(u64),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
