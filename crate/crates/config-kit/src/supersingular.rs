use std::collections::BTreeSet;

use exact_arith::{q, qf};
use exact_arith::Ring;

use crate::config::AbstractConfig;
use crate::curves::{Curve, CurveSystem, DivTarget, Divisor, Fiber, Fibration};
use crate::error::ConfigError;
use crate::iso::{config_isomorphic, ConfigIso};
use crate::models::{reye_config, REYE_TYPE};
use crate::pg24::{dot, hyperoval, in_general_position, join, pg24_points, Point3};
use crate::sylvester::{duad_syntheme_system, fmt_duad, fmt_syntheme, Duad, Syntheme};

/// Labels of P²(F₄) after fixing the hyperoval: arc points are 1..6, other
/// points are synthemes, secants are duads and external lines are totals.
#[derive(Clone, Debug)]
pub struct Labelled42 {
    pub points: Vec<(Point3, String)>,
    pub lines: Vec<(Point3, String)>,
    /// Exceptional curves first (21), then line transforms (21).
    pub system: CurveSystem,
}

pub fn label_42_curves() -> Result<Labelled42, ConfigError> {
    let arc = hyperoval();
    if !in_general_position(&arc) {
        return Err(ConfigError::ArcNotGeneral);
    }
    let sys = duad_syntheme_system()?;
    let all = pg24_points();
    let on = |l: &Point3, p: &Point3| dot(l, p).is_zero();
    let secant = |i: usize, j: usize| join(&arc[i], &arc[j]);

    let mut points = Vec::new();
    for (k, a) in arc.iter().enumerate() {
        points.push((*a, (k + 1).to_string()));
    }
    let mut syn_of_point = Vec::new();
    for p in all.iter().filter(|p| !arc.contains(p)) {
        let mut ds: Vec<Duad> = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if on(&secant(i, j), p) {
                    ds.push((i as u8 + 1, j as u8 + 1));
                }
            }
        }
        ds.sort();
        let letters: BTreeSet<u8> = ds.iter().flat_map(|&(a, b)| [a, b]).collect();
        if ds.len() != 3 || letters.len() != 6 {
            return Err(ConfigError::Label(format!("point {p:?} lies on secants {ds:?}")));
        }
        let s: Syntheme = [ds[0], ds[1], ds[2]];
        syn_of_point.push((*p, s));
    }
    syn_of_point.sort_by_key(|(_, s)| *s);
    points.extend(syn_of_point.iter().map(|(p, s)| (*p, fmt_syntheme(s))));

    let mut lines = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            lines.push((secant(i, j), fmt_duad(&(i as u8 + 1, j as u8 + 1))));
        }
    }
    let mut externals = Vec::new();
    for l in all.iter().filter(|l| arc.iter().all(|a| !on(l, a))) {
        let mut t: Vec<Syntheme> =
            syn_of_point.iter().filter(|(p, _)| on(l, p)).map(|(_, s)| *s).collect();
        t.sort();
        let total: [Syntheme; 5] =
            t.try_into().map_err(|_| ConfigError::Label(format!("external line {l:?} is not a total")))?;
        let k = sys.total_index(&total).ok_or_else(|| ConfigError::Label(format!("line {l:?} is not a total")))?;
        externals.push((k, *l));
    }
    externals.sort_by_key(|(k, _)| *k);
    lines.extend(externals.iter().map(|(k, l)| (*l, format!("T{}", k + 1))));
    if points.len() != 21 || lines.len() != 21 {
        return Err(ConfigError::Label(format!("{} points, {} lines", points.len(), lines.len())));
    }

    // combinatorial incidence must agree with the geometric one
    for (l, ll) in &lines {
        for (p, pl) in &points {
            let combinatorial = if ll.starts_with('T') {
                let k: usize = ll[1..].parse().unwrap();
                sys.totals[k - 1].iter().any(|s| fmt_syntheme(s) == *pl)
            } else if pl.contains('.') {
                pl.split('.').any(|d| d == ll)
            } else {
                ll.contains(pl.as_str())
            };
            if combinatorial != on(l, p) {
                return Err(ConfigError::Label(format!("{pl} on {ll}")));
            }
        }
    }

    let curves: Vec<Curve> = points
        .iter()
        .chain(&lines)
        .map(|(_, id)| Curve { id: id.clone(), self_intersection: -2 })
        .collect();
    let mut inter = Vec::new();
    for (a, (p, _)) in points.iter().enumerate() {
        for (b, (l, _)) in lines.iter().enumerate() {
            if on(l, p) {
                inter.push((a, 21 + b, 1));
            }
        }
    }
    let system = CurveSystem::new(curves, &inter, Vec::new(), Vec::new())?;
    Ok(Labelled42 { points, lines, system })
}

/// Columns of the three printed tables of singular fibers: header (central
/// component) followed by the four simple components.
pub const FIBRATION_TABLES: [[[&str; 5]; 5]; 3] = [
    [
        ["12", "12.35.46", "12.34.56", "12.36.45", "2"],
        ["13", "13.25.46", "13.24.56", "3", "13.26.45"],
        ["14", "4", "14.23.56", "14.25.36", "14.26.35"],
        ["15", "15.23.46", "5", "15.24.36", "15.26.34"],
        ["16", "6", "16.23.45", "16.24.35", "16.25.34"],
    ],
    [
        ["26", "2", "13.26.45", "14.26.35", "15.26.34"],
        ["36", "12.36.45", "3", "14.25.36", "15.24.36"],
        ["46", "12.35.46", "13.25.46", "4", "15.23.46"],
        ["56", "12.34.56", "13.24.56", "14.23.56", "5"],
        ["16", "1", "16.23.45", "16.24.35", "16.25.34"],
    ],
    [
        ["23", "2", "3", "14.23.56", "15.23.46"],
        ["45", "4", "5", "12.36.45", "13.26.45"],
        ["T2", "12.35.46", "13.24.56", "14.25.36", "15.26.34"],
        ["T5", "12.34.56", "13.25.46", "14.26.35", "15.24.36"],
        ["16", "1", "6", "16.24.35", "16.25.34"],
    ],
];

#[derive(Clone, Debug)]
pub struct FibrationTables {
    /// The 42 curves with fibrations f1, f2, f3 and the divisor "H".
    pub system: CurveSystem,
    pub centrals: Vec<String>,
    pub common_simple: Vec<String>,
}

/// Validates every column as a D̃₄ fiber centred at its header, checks the
/// sixteen simple components of the first four fibers agree across the three
/// tables, and attaches H = F₁ + F₂ + F₃ − ½ Σ (those sixteen).
pub fn fibration_tables(labelled: &Labelled42) -> Result<FibrationTables, ConfigError> {
    let base = &labelled.system;
    let mut fibrations = Vec::new();
    let mut common: Option<BTreeSet<usize>> = None;
    let mut centrals = Vec::new();
    for (t, table) in FIBRATION_TABLES.iter().enumerate() {
        let name = format!("f{}", t + 1);
        let mut fibers = Vec::new();
        let mut simple = BTreeSet::new();
        for (k, col) in table.iter().enumerate() {
            let idx = base.indices(col)?;
            let err = |what: String| ConfigError::Fiber { fibration: name.clone(), fiber: k, what };
            let g = base.gram();
            let ty = base.classify_subset(&idx).map_err(|e| err(e.to_string()))?;
            if ty.to_string() != "D~4" {
                return Err(err(format!("column {} is {ty}", col[0])));
            }
            if idx[1..].iter().any(|&l| g[idx[0]][l] != 1) {
                return Err(err(format!("{} is not the central component", col[0])));
            }
            let mut comps = vec![(idx[0], 2)];
            comps.extend(idx[1..].iter().map(|&l| (l, 1)));
            fibers.push(Fiber { kind: "D~4".into(), components: comps });
            if k < 4 {
                simple.extend(idx[1..].iter().copied());
                centrals.push(col[0].to_string());
            }
        }
        if let Some(c) = &common {
            if *c != simple {
                return Err(ConfigError::Fiber {
                    fibration: name,
                    fiber: 0,
                    what: "simple components of the first four fibers differ from f1".into(),
                });
            }
        } else {
            common = Some(simple);
        }
        fibrations.push(Fibration { name, fibers });
    }
    let common: Vec<usize> = common.unwrap().into_iter().collect();
    if common.len() != 16 {
        return Err(ConfigError::Label(format!("{} common simple components", common.len())));
    }
    let mut terms: Vec<(DivTarget, exact_arith::Q)> =
        (1..=3).map(|k| (DivTarget::Class(format!("f{k}")), q(1))).collect();
    terms.extend(common.iter().map(|&c| (DivTarget::Curve(c), qf(-1, 2))));
    let divisors = vec![Divisor { name: "H".into(), terms }];
    let mut inter = Vec::new();
    for a in 0..base.len() {
        for b in a + 1..base.len() {
            if base.gram()[a][b] != 0 {
                inter.push((a, b, base.gram()[a][b]));
            }
        }
    }
    let system = CurveSystem::new(base.curves().to_vec(), &inter, fibrations, divisors)?;
    let common_simple = common.iter().map(|&c| system.curves()[c].id.clone()).collect();
    Ok(FibrationTables { system, centrals, common_simple })
}

#[derive(Clone, Debug)]
pub struct Desmic28 {
    pub system: CurveSystem,
    pub config: AbstractConfig,
    pub iso: ConfigIso,
}

/// The twelve central and sixteen common simple curves; their incidence must be
/// the Reye configuration.
pub fn extract_desmic_28(tables: &FibrationTables) -> Result<Desmic28, ConfigError> {
    let cs = &tables.system;
    let centrals: Vec<&str> = tables.centrals.iter().map(String::as_str).collect();
    let leaves: Vec<&str> = tables.common_simple.iter().map(String::as_str).collect();
    let ci = cs.indices(&centrals)?;
    let li = cs.indices(&leaves)?;
    let inc = li.iter().map(|&l| (0..12).filter(|&c| cs.gram()[ci[c]][l] == 1).collect()).collect();
    let config = AbstractConfig::new(
        "28 curves",
        tables.centrals.clone(),
        tables.common_simple.clone(),
        inc,
    )?
    .expect_type(REYE_TYPE)?;
    let iso = config_isomorphic(&config, &reye_config())?.ok_or_else(|| ConfigError::NotIsomorphic("Reye".into()))?;
    let all: Vec<usize> = ci.iter().chain(&li).copied().collect();
    Ok(Desmic28 { system: cs.subsystem(&all), config, iso })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelling() {
        let l = label_42_curves().unwrap();
        let cs = &l.system;
        let line12 = cs.index("12").unwrap();
        let mut nbrs: Vec<&str> =
            (0..42).filter(|&k| cs.gram()[line12][k] == 1).map(|k| cs.curves()[k].id.as_str()).collect();
        nbrs.sort();
        assert_eq!(nbrs, ["1", "12.34.56", "12.35.46", "12.36.45", "2"]);
        for k in 0..42 {
            assert_eq!(cs.gram()[k].iter().filter(|&&v| v == 1).count(), 5);
        }
        assert!(cs.index("T6").is_some());
    }

    #[test]
    fn tables_and_extraction() {
        let l = label_42_curves().unwrap();
        let t = fibration_tables(&l).unwrap();
        assert_eq!(t.centrals, ["12", "13", "14", "15", "26", "36", "46", "56", "23", "45", "T2", "T5"]);
        let d = extract_desmic_28(&t).unwrap();
        assert_eq!(d.config.config_type(), REYE_TYPE);
        assert!(d.iso.verify(&d.config, &reye_config()));
        let h = t.system.divisor_vector("H").unwrap();
        assert_eq!(t.system.pair(&h, &h), q(4));
    }
}
