use config_kit::{config_isomorphic, reye_config, AbstractConfig};
use exact_arith::{parse_poly, q, Q};
use hypersurface_lab::{
    base_lines, contains_line, desmic_pencil_symbolic, node_line_incidence, projected_24_points_quartic_rank,
    residual_conic_tangency, HyperError, SINGULAR_POINTS,
};
use proj_geom::ProjPoint;

use crate::runner::{check, e, CheckSpec, Outcome};

pub fn checks() -> Vec<CheckSpec> {
    vec![
        check("singular-points", "12 nodes of the desmic surface", |_| {
            let f = desmic_pencil_symbolic();
            let mut bad = Vec::new();
            for p in SINGULAR_POINTS {
                let pt: Vec<Q> = p.iter().map(|&x| q(x)).collect();
                let node = f.singular_at(&pt).singular && f.node_check(&pt).map_err(e)?.is_node();
                if !node {
                    bad.push(format!("{p:?}"));
                }
            }
            Ok(Outcome::verdict(bad.is_empty(), format!("12 points over Q(a,b), c = -a-b; not nodes: {bad:?}")))
        }),
        check("base-lines", "16 lines in the base locus", |_| {
            let f = desmic_pencil_symbolic();
            let n = base_lines::<Q>().iter().filter(|l| contains_line(&f, l)).count();
            Ok(Outcome::verdict(n == 16, format!("{n} of 16 lines contained")))
        }),
        check("reye-configuration", "node/line incidence is the Reye configuration", |_| {
            let inc = node_line_incidence();
            let pts: Vec<String> = SINGULAR_POINTS.iter().map(|p| format!("{p:?}")).collect();
            let lines: Vec<String> = (1..=inc.len()).map(|k| format!("l{k}")).collect();
            let cfg = AbstractConfig::new("desmic", pts, lines, inc).map_err(e)?;
            let iso = config_isomorphic(&cfg, &reye_config()).map_err(e)?;
            Ok(Outcome::verdict(iso.is_some(), format!("type {}", cfg.config_type())))
        }),
        check("tangency-printed", "tangency condition along the printed line", |_| {
            let f = desmic_pencil_symbolic();
            match residual_conic_tangency(&f, &[1, 1, 0, 0], &[0, 0, 1, 1]) {
                Err(HyperError::LineNotOnSurface) => Ok(Outcome::fail(
                    "printed line V(x+y, z+w) is not on the surface, so u(b+c)+v(a+b)=0 cannot be reproduced",
                )),
                Err(err) => Err(e(err)),
                Ok(t) => {
                    let r = f.poly().vars().clone();
                    let cu = parse_poly(&r, "-a", &[]).map_err(e)?;
                    let cv = parse_poly(&r, "a+b", &[]).map_err(e)?;
                    Ok(Outcome::verdict(t.proportional_to(&cu, &cv), "u(b+c)+v(a+b) with c = -a-b"))
                }
            }
        }),
        check("tangency-computed", "tangency condition along V(x+y, x+w)", |_| {
            let f = desmic_pencil_symbolic();
            let t = residual_conic_tangency(&f, &[1, 1, 0, 0], &[1, 0, 0, 1]).map_err(e)?;
            let r = f.poly().vars().clone();
            let cu = parse_poly(&r, "a+2b", &[]).map_err(e)?;
            let cv = parse_poly(&r, "2a+b", &[]).map_err(e)?;
            let ok = t.consistent && t.proportional_to(&cu, &cv);
            Ok(Outcome::verdict(ok, "plane u(x+y)+v(x+w) tangent iff u(b-c)+v(a-c)=0"))
        }),
        check("projected-points-quartic", "24 projected points lie on a quartic", |_| {
            let rank = projected_24_points_quartic_rank(&ProjPoint::from_i64(&[1, 2, 3, 7])).map_err(e)?;
            Ok(Outcome::verdict(rank <= 14, format!("rank {rank} of 15 plane quartics")))
        }),
    ]
}
