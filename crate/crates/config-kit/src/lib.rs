//! Incidence configurations and their isomorphisms, the classical models (Reye,
//! cosets in S4, determinant monomials, PG(2,4), duads and synthemes), Dynkin
//! shapes, and systems of (-2)-curves read from JSON.

mod config;
mod curves;
mod dynkin;
mod error;
mod iso;
mod models;
mod pg24;
mod supersingular;
mod sylvester;

pub use config::{AbstractConfig, ConfigType};
pub use curves::{ingest_curve_system, Curve, CurveSystem, DivTarget, Divisor, Fiber, Fibration};
pub use dynkin::{classify_graph, DynkinComponent, DynkinType};
pub use error::ConfigError;
pub use iso::{config_isomorphic, config_isomorphic_with, point_orbits, ConfigIso};
pub use models::{
    abstract_kummer_config, check_type, compose, coset_config, cycle_string, determinant_config, klein_subgroups,
    parse_cycles, reye_config, symmetric_group4, Perm, COSET_TYPE, DETERMINANT_LABELS, DETERMINANT_TYPE, REYE_TYPE,
};
pub use pg24::{collinear, dot, fmt_point, hyperoval, in_general_position, join, pg24, pg24_points, Point3};
pub use supersingular::{
    extract_desmic_28, fibration_tables, label_42_curves, Desmic28, FibrationTables, Labelled42, FIBRATION_TABLES,
};
pub use sylvester::{
    duad_syntheme_system, duads, fmt_duad, fmt_syntheme, parse_syntheme, render_printed_table, synthemes, totals, Duad,
    DuadSynthemeSystem, Syntheme, Total, PRINTED_TOTALS_TABLE,
};
