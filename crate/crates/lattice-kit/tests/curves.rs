use std::path::PathBuf;

use config_kit::{extract_desmic_28, fibration_tables, ingest_curve_system, label_42_curves, reye_config, CurveSystem};
use exact_arith::q;
use lattice_kit::*;

fn data(name: &str) -> CurveSystem {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    ingest_curve_system(&p).unwrap()
}

#[test]
fn kummer_span() {
    let cs = data("kummer-char0.json");
    let cl = lattice_from_curves(&cs).unwrap();
    assert_eq!(cl.rank, 19);
    assert_eq!(cl.signature, (1, 18));
    assert_eq!(cl.disc_order(), 16);
    assert_eq!(cl.invariant_factors, vec![2, 2, 4]);
    let v = genus_match_indefinite(&cl.lattice, &lattice_sum("U+D8+D9").unwrap());
    assert!(v.matches, "{v}");
}

#[test]
fn fibration_subsystem() {
    let cs = data("kummer-char0.json");
    let fiber = ["E_00", "E_02", "E_10", "E_13", "E_0", "E_01", "E^1", "E_11", "E_1"];
    let d4 = ["E_20", "E_2", "E_22", "E_23"];
    let d5 = ["D_3", "E_30", "E_3", "E_32", "E_33"];
    assert_eq!(classify_dynkin(&cs, &fiber).unwrap().to_string(), "D~8");
    assert_eq!(classify_dynkin(&cs, &d4).unwrap().to_string(), "D4");
    assert_eq!(classify_dynkin(&cs, &d5).unwrap().to_string(), "D5");
    let mut ids: Vec<&str> = fiber.iter().chain(&d4).chain(&d5).copied().collect();
    ids.push("E^2");
    let sub = cs.subsystem(&cs.indices(&ids).unwrap());
    let cl = lattice_from_curves(&sub).unwrap();
    assert_eq!(cl.rank, 19);
    assert!(same_genus(&cl.lattice, &lattice_sum("U+D8+D5+D4").unwrap()).unwrap());
    ids.push("E^3");
    let sub = cs.subsystem(&cs.indices(&ids).unwrap());
    let cl = lattice_from_curves(&sub).unwrap();
    assert_eq!((cl.rank, cl.disc_order()), (19, 16));
    assert!(same_genus(&cl.lattice, &lattice_sum("U+D8+D9").unwrap()).unwrap());
}

#[test]
fn kummer_polarization() {
    let cs = data("kummer-char0.json");
    let h = divisor_pairings(&cs, "H").unwrap();
    assert_eq!(h.square, q(4));
    for (id, v) in &h.values {
        let want = if id.starts_with("E_") && id.len() == 4 { 1 } else { 0 };
        assert_eq!(*v, q(want), "{id}");
    }
    assert_eq!(divisor_pairings(&cs, "H_two_nodes").unwrap().square, q(4));
    assert!(matches!(divisor_pairings(&cs, "nope"), Err(LatticeError::Config(_))));
}

#[test]
fn desmic_line_system() {
    let cfg = reye_config();
    let cs = CurveSystem::from_config(&cfg).unwrap();
    // two nodes on a common line, F0 that line, F1..F6 the other lines through them
    let f0 = 0;
    let (p1, p2) = (cfg.block(f0)[0], cfg.block(f0)[1]);
    let mut h = vec![q(0); cs.len()];
    h[p1] = q(2);
    h[p2] = q(2);
    h[12 + f0] = q(2);
    let mut others = 0;
    for (b, pts) in cfg.incidence().iter().enumerate() {
        if b != f0 && (pts.contains(&p1) || pts.contains(&p2)) {
            h[12 + b] = q(1);
            others += 1;
        }
    }
    assert_eq!(others, 6);
    let p = pairings_of_vector(&cs, "H", &h).unwrap();
    assert_eq!(p.square, q(4));
    assert!(p.values.iter().all(|(_, v)| *v >= q(0)));
    let cl = lattice_from_curves(&cs).unwrap();
    assert_eq!(cl.signature.0, 1);
}

#[test]
fn supersingular_profile() {
    let t = fibration_tables(&label_42_curves().unwrap()).unwrap();
    let h = divisor_pairings(&t.system, "H").unwrap();
    assert_eq!(h.square, q(4));
    // The eight curves 24, 25, 34, 35, T1, T3, T4, T6 are sections of all three
    // fibrations meeting four common leaves, so they pair to 3 - 2 = 1 (see ledger).
    let prof: Vec<(i64, usize)> = h.profile().into_iter().collect();
    assert_eq!(prof, vec![(0, 15), (1, 24), (2, 3)]);
    for c in &t.centrals {
        assert_eq!(h.value(c), Some(&q(0)));
    }
    for c in t.common_simple.iter().map(String::as_str).chain(["24", "25", "34", "35", "T1", "T3", "T4", "T6"]) {
        assert_eq!(h.value(c), Some(&q(1)), "{c}");
    }
    for c in ["1", "6", "16.23.45"] {
        assert_eq!(h.value(c), Some(&q(2)), "{c}");
    }
    for c in ["16", "16.24.35", "16.25.34"] {
        assert_eq!(h.value(c), Some(&q(0)), "{c}");
    }
    let d = extract_desmic_28(&t).unwrap();
    let cl = lattice_from_curves(&d.system).unwrap();
    assert_eq!((cl.rank, cl.signature, cl.invariant_factors.clone()), (19, (1, 18), vec![2, 2, 4]));
    let all = lattice_from_curves(&t.system).unwrap();
    assert_eq!((all.rank, all.signature, all.invariant_factors), (22, (1, 21), vec![2, 2]));
}
