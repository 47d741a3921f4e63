pub mod char2;
pub mod cremona;
pub mod desmic;
pub mod identities;
pub mod lattices;
pub mod line_complex;
pub mod projection;
pub mod supersingular;
pub mod symmetry;
