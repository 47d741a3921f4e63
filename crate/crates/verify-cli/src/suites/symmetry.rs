use std::time::Instant;

use line_complex::{klein_complex, monomial_symmetry_group};

use crate::runner::{check, e, CheckSpec, Outcome};

const ELEMENT_BUDGET: usize = 100_000;

pub fn checks() -> Vec<CheckSpec> {
    vec![check("monomial-group", "symmetry group of order 1152", |opts| {
        let t = Instant::now();
        let r = monomial_symmetry_group(&klein_complex(), ELEMENT_BUDGET).map_err(e)?;
        let over = t.elapsed().as_secs() > opts.budget_seconds;
        let ok = !over
            && r.order() == 1152
            && r.closed
            && r.contains_g0
            && r.permutes_inventory
            && r.node_orbit_sizes == [18, 16]
            && r.plane_orbit_sizes == [24];
        let mut d = format!(
            "order {}, closed {}, contains g0 {}, node orbits {:?}, plane orbits {:?}",
            r.order(),
            r.closed,
            r.contains_g0,
            r.node_orbit_sizes,
            r.plane_orbit_sizes
        );
        if over {
            d.push_str(&format!("; exceeded budget of {} s", opts.budget_seconds));
        }
        Ok(Outcome::verdict(ok, d))
    })]
}
