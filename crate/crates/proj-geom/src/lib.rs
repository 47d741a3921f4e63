//! Projective geometry of P^3: points, planes, lines in Plücker and Klein
//! coordinates, involutions of the coordinate tetrahedron and desmic triples.
//!
//! Plücker coordinates are ordered (p12, p13, p14, p23, p24, p34) with
//! p_ij = a_i b_j - a_j b_i for spanning points a, b.

mod desmic;
mod error;
mod involution;
mod line;
mod point;

pub use desmic::{desmic_from_point, face_quartic, quartic_monomials, xyzw_ring, DesmicTriple};
pub use error::GeomError;
pub use involution::{apply, edge_involution, harmonic_homology};
pub use line::{
    alpha_plane, beta_plane, klein_from_plucker, plucker_from_points, plucker_quadric, LineP3,
    PLUCKER_INDEX,
};
pub use point::{ProjPlane, ProjPoint};
