use config_kit::{Curve, CurveSystem, Fibration};
use exact_arith::{q, Q};
use lattice_kit::*;
use proptest::prelude::*;

const NAMES: [&str; 12] = ["U", "A1", "A2", "A3", "A5", "D4", "D5", "D6", "E6", "E7", "E8", "<-4>"];

fn summands() -> impl Strategy<Value = (usize, usize)> {
    (0..NAMES.len(), 0..NAMES.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn disc_form_is_additive((i, j) in summands()) {
        let (a, b) = (standard_lattice(NAMES[i]).unwrap(), standard_lattice(NAMES[j]).unwrap());
        let sum = disc_form(&a.oplus(&b)).unwrap();
        let parts = disc_form(&a).unwrap().oplus(&disc_form(&b).unwrap());
        prop_assert!(fq_isometric(&sum, &parts).unwrap());
    }

    #[test]
    fn det_is_group_order((i, j) in summands(), m in 1i64..4) {
        let l = standard_lattice(NAMES[i]).unwrap().oplus(&standard_lattice(NAMES[j]).unwrap()).rescale(m);
        let f = disc_form(&l).unwrap();
        prop_assert_eq!(f.order(), l.disc_order());
        prop_assert!(f.is_consistent());
    }

    #[test]
    fn pairings_survive_relabelling(seed in any::<u64>()) {
        // D~4 fiber plus a section, a divisor 2F + S
        let n = 6;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for k in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)];
        let build = |p: &[usize]| {
            let curves = (0..n).map(|k| {
                let orig = p.iter().position(|&x| x == k).unwrap();
                Curve { id: format!("c{orig}"), self_intersection: -2 }
            }).collect();
            let e: Vec<(usize, usize, i64)> = edges.iter().map(|&(a, b)| (p[a], p[b], 1)).collect();
            CurveSystem::new(curves, &e, Vec::<Fibration>::new(), vec![]).unwrap()
        };
        let ident: Vec<usize> = (0..n).collect();
        let (a, b) = (build(&ident), build(&perm));
        let vector = |cs: &CurveSystem| {
            let mut v = vec![q(0); n];
            for (id, c) in [("c0", 4), ("c1", 2), ("c2", 2), ("c3", 2), ("c4", 2), ("c5", 1)] {
                v[cs.index(id).unwrap()] = q(c);
            }
            v
        };
        let pa = pairings_of_vector(&a, "D", &vector(&a)).unwrap();
        let pb = pairings_of_vector(&b, "D", &vector(&b)).unwrap();
        prop_assert_eq!(&pa.square, &pb.square);
        for (id, v) in &pa.values {
            prop_assert_eq!(Some(v), pb.value(id));
        }
        // adding the fiber class (radical direction of the fiber part) changes nothing on fiber components
        let mut w = vector(&a);
        for (k, c) in [2, 1, 1, 1, 1, 0].iter().enumerate() {
            w[k] += Q::from_integer((*c).into());
        }
        let pw = pairings_of_vector(&a, "D", &w).unwrap();
        for id in ["c0", "c1", "c2", "c3", "c4"] {
            prop_assert_eq!(pa.value(id), pw.value(id));
        }
    }
}

#[test]
fn radical_vectors_do_not_change_pairings() {
    let cs = config_kit::ingest_curve_system(
        &[env!("CARGO_MANIFEST_DIR"), "..", "..", "data", "kummer-char0.json"].iter().collect::<std::path::PathBuf>(),
    )
    .unwrap();
    let h = cs.divisor_vector("H").unwrap();
    let f1 = cs.fiber_vector(&cs.fibration("f1").unwrap().fibers[0]);
    let f1b = cs.fiber_vector(&cs.fibration("f1").unwrap().fibers[1]);
    // difference of two fibers of one fibration lies in the radical of the span
    let shifted: Vec<Q> = h.iter().zip(f1.iter().zip(&f1b)).map(|(x, (a, b))| x + a - b).collect();
    assert_eq!(pairings_of_vector(&cs, "H", &h).unwrap(), pairings_of_vector(&cs, "H", &shifted).unwrap());
}
