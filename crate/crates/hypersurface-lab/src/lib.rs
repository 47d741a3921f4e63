//! Singularities of projective hypersurfaces over exact fields, and the concrete
//! quartics: the desmic pencil, Cremona's quartic and the ordinary Kummer quartic
//! in characteristic 2.

mod an;
mod error;
mod form;

pub use an::{rdp_an_type, AnVerdict};
pub use error::HyperError;
pub use form::{quadratic_discriminant, Form, NodeCheck, SingularPointReport};

mod desmic;
mod identity;

pub use desmic::{
    base_line_planes, base_lines, contains_line, desmic_pencil, desmic_pencil_symbolic, node_line_incidence,
    pencil_symmetries, permutations4, projected_24_points_quartic_rank, projected_points_quartic_rank,
    residual_conic, residual_conic_tangency, twenty_four_points, TangencyCondition, SINGULAR_POINTS, VERTICES,
};
pub use identity::{desmic_tetrahedra_sum, eight_forms, eight_squares, verify_identity, xyzw};

mod cremona;

pub use cremona::{
    char2_cremona_singular_points, char2_families_printed, char2_p0, cremona_char2_partials_printed,
    cremona_quadric, cremona_quartic_char2_printed, cremona_quartic_printed, cremona_ring, cubic_normal_form_q,
    cubic_surface, det_poly_matrix, discriminant_matrix, discriminant_ring, hessian, homogenized_quadric_family,
    jacobian_random_check, pfaffian_matrix_char2, pfaffian_poly_matrix, specialize, steinerian_equation,
    steinerian_identity, FamilyCheck, JacobianCheck,
};

mod kummer2;

pub use kummer2::{kummer_char2_quartic, Kummer2};
