//! The cubic line complex attached to a desmic pencil, in Plücker and Klein coordinates.

mod complex;
mod error;
mod montesano;
mod printed;

pub use complex::{
    klein_complex, klein_complex_real, klein_complex_with, klein_matrix, klein_ring, plucker_complex, plucker_ring,
    to_klein, CompleteIntersection35, NodeReport, KLEIN_NAMES, PLUCKER_NAMES,
};
pub use error::ComplexError;
pub use montesano::{
    derived_plucker_cubic, montesano_condition, montesano_determinant, montesano_matrix, nets, printed_net,
    proportional_mod_plucker, Net,
};
pub use printed::{
    all_perms4, cycles_string, klein_nodes_16, parse_cycles, perm_compose, plucker_alpha_planes, plucker_beta_planes,
    qi_from_i64, qi_point, KleinPlane, Perm4, ALPHA_LABELS, BETA_LABELS, DETERMINANT_ARRANGEMENT, KLEIN_NODES_18,
    PLUCKER_NODES_16, PLUCKER_NODES_18,
};

mod inventory;

pub use inventory::{
    klein_correspondence, klein_nodes, plucker_nodes, plucker_plane_to_klein, plucker_to_klein_planes, point_in_plane,
    proportional, verify_node_inventory, verify_plane_inventory, NodeInventory, PlaneInventory,
};

mod scan;

pub use scan::{scan_singular_points, PolyModP, ScanResult, DEFAULT_PRIME_BOUND};

mod symmetry;

pub use symmetry::{monomial_symmetry_group, Monomial6, SymmetryReport};

mod projection;

pub use projection::{
    cone_cubic, p4_ring, p6_ring, printed_cone_cubic, project_to_quartic_threefold, proportionality,
    quartic_threefold, rationality_planes_check, segre_forms, segre_isomorphism_check, ProjectionReport,
    RationalityReport, SegreReport, RATIONALITY_PLANES, RATIONALITY_POINTS, X_NODES, X_SINGULAR_LINES,
};
