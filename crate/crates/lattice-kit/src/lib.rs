//! Even lattices in the curve convention (roots of square -2, so hyperbolic
//! lattices have signature (1, n)), finite quadratic forms, lattices spanned by
//! curve systems, overlattices and the embedding questions for supersingular K3
//! lattices in characteristic 2.

mod artin;
mod curves;
mod discform;
mod error;
mod genus;
mod lattice;
mod overlattice;

pub use artin::{
    artin2_check, brute_even_ternaries, cm_picard_lattices, curve_lattice_model, d5_a3_chain, d5_a3_glue,
    reduced_even_ternaries, required_complement_form, ternary_search, theta_classes, theta_prefix, ArtinReport,
    GluedChain, TernarySearch,
};
pub use curves::{classify_dynkin, divisor_pairings, lattice_from_curves, pairings_of_vector, CurveLattice, DivisorPairings};
pub use discform::{disc_form, fq_isometric, invariant_factors, mod1, mod2, FiniteQuadForm, FQ_ORDER_BOUND};
pub use error::LatticeError;
pub use genus::{genus_match_indefinite, same_genus, GenusVerdict};
pub use lattice::{lattice_sum, standard_lattice, vectors_of_norm, Lattice};
pub use overlattice::{glue_keeps_primitive, overlattice, Overlattice};
