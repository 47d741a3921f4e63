use exact_arith::Q;
use line_complex::{
    derived_plucker_cubic, klein_complex, klein_complex_real, klein_nodes, nets, plucker_complex, plucker_nodes,
    printed_net, proportional_mod_plucker, scan_singular_points, verify_node_inventory, verify_plane_inventory,
    DEFAULT_PRIME_BOUND,
};

use crate::runner::{check, e, CheckSpec, Options, Outcome};

pub fn checks(opts: &Options) -> Vec<CheckSpec> {
    let mut v = vec![
        check("nodes-klein", "34 nodes of the complex", |_| {
            let (k1, k2) = klein_nodes();
            let n = (k1.len(), k2.len());
            let inv = verify_node_inventory(&klein_complex(), k1, k2).map_err(e)?;
            Ok(Outcome::verdict(inv.all_nodes() && n == (18, 16), format!("{} + {} ordinary nodes over Q(i)", n.0, n.1)))
        }),
        check("nodes-plucker", "34 nodes of the complex", |_| {
            let (p1, p2) = plucker_nodes();
            let n = (p1.len(), p2.len());
            let inv = verify_node_inventory(&plucker_complex(), p1, p2).map_err(e)?;
            Ok(Outcome::verdict(inv.all_nodes() && n == (18, 16), format!("{} + {} ordinary nodes", n.0, n.1)))
        }),
        check("planes", "24 planes in the complex", |_| {
            let inv = verify_plane_inventory(&klein_complex()).map_err(e)?;
            Ok(Outcome::verdict(inv.planes.len() == 24, format!("{} planes contained", inv.planes.len())))
        }),
        check("plane-incidence", "configuration (24_{3+4}, 18_4 + 16_6)", |_| {
            let inv = verify_plane_inventory(&klein_complex()).map_err(e)?;
            Ok(Outcome::verdict(inv.counts_as_printed(), "3+4 nodes per plane, 4 planes per edge node, 6 per base-line node"))
        }),
        check("montesano-printed-net", "Montesano complex of the printed net", |_| {
            let c = derived_plucker_cubic(&printed_net()).map_err(e)?;
            let r = proportional_mod_plucker(&c, &plucker_complex::<Q>().cubic);
            Ok(Outcome::verdict(r.is_some(), format!("ratio {}", ratio(&r))))
        }),
        check("montesano-three-nets", "the three nets give one complex", |_| {
            let target = plucker_complex::<Q>().cubic;
            let mut ratios = Vec::new();
            for net in nets() {
                let c = derived_plucker_cubic(&net).map_err(e)?;
                ratios.push(proportional_mod_plucker(&c, &target));
            }
            let shown: Vec<String> = ratios.iter().map(ratio).collect();
            Ok(Outcome::verdict(ratios.iter().all(Option::is_some), format!("ratios {}", shown.join(", "))))
        }),
    ];
    for &p in &opts.primes {
        v.push(check(format!("scan-f{p}"), "16+18 = 34 singular points", move |_| {
            let r = scan_singular_points(&klein_complex(), p, DEFAULT_PRIME_BOUND).map_err(e)?;
            scan_outcome(r.count(), 34, p)
        }));
        v.push(check(format!("scan-f{p}-real-variant"), "18 singular points for i -> 1", move |_| {
            let r = scan_singular_points(&klein_complex_real(), p, DEFAULT_PRIME_BOUND).map_err(e)?;
            scan_outcome(r.count(), 18, p)
        }));
    }
    v
}

fn scan_outcome(found: usize, want: usize, p: u64) -> Result<Outcome, String> {
    let msg = format!("{found} singular points in P5(F{p}), expected {want}");
    Ok(if found == want { Outcome::evidence(msg) } else { Outcome::fail(msg) })
}

fn ratio(r: &Option<Q>) -> String {
    r.as_ref().map_or("none".to_string(), ToString::to_string)
}
