use std::collections::BTreeMap;
use std::fs;

use config_kit::{
    config_isomorphic, duad_syntheme_system, extract_desmic_28, fibration_tables, ingest_curve_system, label_42_curves,
    pg24, reye_config, render_printed_table, FibrationTables,
};
use exact_arith::q;
use lattice_kit::divisor_pairings;

use crate::runner::{check, e, CheckSpec, Options, Outcome};
use crate::CliError;

pub const DATA: &str = "supersingular-42.json";

/// Pairing profile of H over the 42 curves as printed.
pub const PRINTED_PROFILE: [(i64, usize); 4] = [(0, 15), (1, 16), (2, 3), (3, 8)];

fn tables() -> Result<FibrationTables, String> {
    fibration_tables(&label_42_curves().map_err(e)?).map_err(e)
}

/// Writes the 42-curve system to the data directory if it is not there yet.
pub fn ensure_cache(opts: &Options) -> Result<(), CliError> {
    let path = opts.data_dir.join(DATA);
    if path.is_file() {
        return Ok(());
    }
    let t = tables().map_err(|m| CliError::Write(path.display().to_string(), m))?;
    fs::write(&path, t.system.to_json()).map_err(|err| CliError::Write(path.display().to_string(), err.to_string()))
}

pub fn checks() -> Vec<CheckSpec> {
    vec![
        check("pg24-type", "PG(2,4) is a (21_5) configuration", |_| {
            let ty = pg24().config_type().to_string();
            Ok(Outcome::verdict(ty == "(21_5)", ty))
        }),
        check("totals-table", "duads, synthemes and totals", |_| {
            let sys = duad_syntheme_system().map_err(e)?;
            let got = sys.render_table();
            let ok = got == render_printed_table();
            Ok(Outcome::verdict(ok, if ok { "byte-identical to the printed table".to_string() } else { got }))
        }),
        check("cached-curve-system", "42 curves on the supersingular surface", |opts| {
            let cached = ingest_curve_system(&opts.data_file(DATA).map_err(e)?).map_err(e)?;
            let ok = cached.to_json() == tables()?.system.to_json();
            Ok(Outcome::verdict(ok, format!("{} curves, cache agrees with the generator: {ok}", cached.len())))
        }),
        check("fibrations-d4", "three fibrations with D~4 fibers", |_| {
            let t = tables()?;
            let mut d = Vec::new();
            let mut ok = t.common_simple.len() == 16;
            for name in ["f1", "f2", "f3"] {
                let f = t.system.fibration(name).ok_or(format!("fibration {name} missing"))?;
                let all = f.fibers.iter().all(|fb| fb.kind == "D~4");
                ok &= all;
                d.push(format!("{name}: {} fibers, all D~4 {all}", f.fibers.len()));
            }
            d.push(format!("{} common simple components", t.common_simple.len()));
            Ok(Outcome::verdict(ok, d.join("; ")))
        }),
        check("desmic-28-reye", "28 curves form the Reye configuration", |_| {
            let d = extract_desmic_28(&tables()?).map_err(e)?;
            let iso = config_isomorphic(&d.config, &reye_config()).map_err(e)?;
            Ok(Outcome::verdict(iso.is_some() && d.iso.verify(&d.config, &reye_config()), format!("type {}", d.config.config_type())))
        }),
        check("polarization-square", "H^2 = 4", |_| {
            let h = divisor_pairings(&tables()?.system, "H").map_err(e)?;
            Ok(Outcome::verdict(h.square == q(4), format!("H^2 = {}", h.square)))
        }),
        check("pairing-profile", "pairings of H with the 42 curves", |_| {
            let h = divisor_pairings(&tables()?.system, "H").map_err(e)?;
            let got = h.profile();
            let want: BTreeMap<i64, usize> = PRINTED_PROFILE.into_iter().collect();
            let mut d = format!("computed {}, printed {}", fmt_profile(&got), fmt_profile(&want));
            if got != want {
                let ones: Vec<&str> = h.values.iter().filter(|(_, v)| *v == q(1)).map(|(id, _)| id.as_str()).collect();
                d.push_str(&format!("\ncurves with H.C = 1: {}", ones.join(" ")));
            }
            Ok(Outcome::verdict(got == want, d))
        }),
    ]
}

fn fmt_profile(p: &BTreeMap<i64, usize>) -> String {
    let parts: Vec<String> = p.iter().map(|(v, n)| format!("{v}x{n}")).collect();
    format!("{{{}}}", parts.join(", "))
}
