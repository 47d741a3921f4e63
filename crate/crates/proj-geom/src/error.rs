use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("all coordinates are zero")]
    ZeroVector,
    #[error("points are dependent")]
    DependentPoints,
    #[error("planes are dependent")]
    DependentPlanes,
    #[error("field has no square root of -1")]
    NoImaginaryUnit,
    #[error("center lies on the axis")]
    CenterOnAxis,
    #[error("not available in characteristic 2")]
    CharTwo,
    #[error("edges are not opposite edges of the coordinate tetrahedron")]
    NotOpposite,
    #[error("point lies on a face of the coordinate tetrahedron")]
    PointOnFace,
    #[error("expected {0} coordinates")]
    Arity(usize),
}
