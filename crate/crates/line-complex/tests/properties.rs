use std::sync::OnceLock;

use exact_arith::QI;
use line_complex::{
    klein_complex, klein_complex_real, klein_nodes, monomial_symmetry_group, point_in_plane, proportional,
    scan_singular_points, KleinPlane, Monomial6, DEFAULT_PRIME_BOUND,
};
use proptest::prelude::*;

#[test]
fn counts_over_f17() {
    let r = scan_singular_points(&klein_complex(), 17, DEFAULT_PRIME_BOUND).unwrap();
    assert_eq!(r.count(), 34);
    let again = scan_singular_points(&klein_complex(), 17, DEFAULT_PRIME_BOUND).unwrap();
    assert_eq!(r.points, again.points);
    let r = scan_singular_points(&klein_complex_real(), 17, DEFAULT_PRIME_BOUND).unwrap();
    assert_eq!(r.count(), 18);
}

#[test]
#[ignore = "slow in debug builds"]
fn counts_over_f29() {
    let r = scan_singular_points(&klein_complex(), 29, DEFAULT_PRIME_BOUND).unwrap();
    assert_eq!(r.count(), 34);
}

fn group() -> &'static Vec<Monomial6> {
    static G: OnceLock<Vec<Monomial6>> = OnceLock::new();
    G.get_or_init(|| monomial_symmetry_group(&klein_complex(), 4096).unwrap().elements)
}

fn nodes() -> Vec<Vec<QI>> {
    let (s1, s2) = klein_nodes();
    s1.into_iter().chain(s2).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn symmetries_permute_nodes(idx in 0usize..1152) {
        let g = &group()[idx];
        let all = nodes();
        for p in &all {
            let img = g.apply(p);
            prop_assert!(all.iter().any(|q| proportional(q, &img)));
        }
    }

    #[test]
    fn symmetries_permute_planes(idx in 0usize..1152, plane in 0usize..24) {
        let g = &group()[idx];
        let planes = KleinPlane::all();
        let basis = planes[plane].forms().kernel();
        let image: Vec<Vec<QI>> = basis.iter().map(|v| g.apply(v)).collect();
        let hits = planes.iter().filter(|pl| {
            let f = pl.forms();
            image.iter().all(|v| point_in_plane(&f, v))
        }).count();
        prop_assert_eq!(hits, 1);
    }

    #[test]
    fn every_plane_holds_seven_nodes(plane in 0usize..24) {
        let f = KleinPlane::all()[plane].forms();
        let on = nodes().iter().filter(|p| point_in_plane(&f, p)).count();
        prop_assert_eq!(on, 7);
    }
}
