use exact_arith::QI;
use line_complex::{project_to_quartic_threefold, rationality_planes_check, segre_isomorphism_check};

use crate::runner::{check, e, CheckSpec, Outcome};

fn count(v: &[bool]) -> usize {
    v.iter().filter(|&&b| b).count()
}

pub fn checks() -> Vec<CheckSpec> {
    vec![
        check("quartic-rewriting", "quartic threefold from the projection", |_| {
            let r = project_to_quartic_threefold().map_err(e)?;
            let ok = r.rewriting_identity && r.elimination_identity;
            Ok(Outcome::verdict(ok, format!("rewriting {}, elimination {}", r.rewriting_identity, r.elimination_identity)))
        }),
        check("quartic-nodes", "17 nodes of the quartic threefold", |_| {
            let r = project_to_quartic_threefold().map_err(e)?;
            let n = count(&r.nodes);
            Ok(Outcome::verdict(n == 17 && r.nodes.len() == 17, format!("{n} of {} nodes", r.nodes.len())))
        }),
        check("quartic-singular-lines", "4 singular lines of the quartic threefold", |_| {
            let r = project_to_quartic_threefold().map_err(e)?;
            let n = count(&r.singular_lines);
            Ok(Outcome::verdict(n == 4 && r.singular_lines.len() == 4, format!("{n} of {} lines singular", r.singular_lines.len())))
        }),
        check("rationality-planes", "planes through the quartic threefold", |_| {
            let r = rationality_planes_check();
            let n = count(&r.planes_contained);
            Ok(Outcome::verdict(n == 3, format!("{n} of 3 planes contained")))
        }),
        check("rationality-intersections", "pairwise plane intersections", |_| {
            let r = rationality_planes_check();
            let pts: Vec<String> = r
                .intersections
                .iter()
                .map(|p| match p {
                    Some(c) => format!("[{}]", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
                    None => "none".to_string(),
                })
                .collect();
            Ok(Outcome::verdict(r.intersections_as_printed, pts.join(" ")))
        }),
        check("segre-cubic", "change of variables to the Segre cubic", |_| {
            let r = segre_isomorphism_check().map_err(e)?;
            let ok = r.linear_sum_zero && r.lambda.as_ref().is_some_and(|l| *l != QI::int(0, 0));
            let lam = r.lambda.as_ref().map_or("none".to_string(), |l| l.to_string());
            Ok(Outcome::verdict(
                ok,
                format!(
                    "sum t = 0: {}; sum t^3 = {lam} * cubic; printed displayed cubic proportional: {}",
                    r.linear_sum_zero,
                    r.printed_variant_lambda.is_some()
                ),
            ))
        }),
        check("segre-nodes", "35 nodes of the cone cubic", |_| {
            let r = segre_isomorphism_check().map_err(e)?;
            let ok = r.candidate_nodes == 35 && r.nodes_verified == 35;
            Ok(Outcome::verdict(
                ok,
                format!("{} candidates, {} verified, {} singular mod 13", r.candidate_nodes, r.nodes_verified, r.singular_mod_13),
            ))
        }),
    ]
}
