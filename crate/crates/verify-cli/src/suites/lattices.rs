use config_kit::{extract_desmic_28, fibration_tables, ingest_curve_system, label_42_curves};
use lattice_kit::{
    artin2_check, d5_a3_chain, fq_isometric, genus_match_indefinite, lattice_from_curves, lattice_sum, same_genus,
    vectors_of_norm, FiniteQuadForm,
};

use crate::runner::{check, e, CheckSpec, Outcome};

pub const DATA: &str = "kummer-char0.json";

pub fn checks() -> Vec<CheckSpec> {
    let mut v = vec![
        check("genus-d8-d9", "U+D8+D9 and U+E8+D8+<-4>", |_| {
            let a = lattice_sum("U+D8+D9").map_err(e)?;
            let b = lattice_sum("U+E8+D8+<-4>").map_err(e)?;
            let g = genus_match_indefinite(&a, &b);
            let ok = g.matches && g.signatures[0] == (1, 18) && g.disc_orders == [16, 16];
            Ok(Outcome::verdict(ok, g.to_string()))
        }),
        check("kummer-28-span", "lattice spanned by the 28 curves", |opts| {
            let cs = ingest_curve_system(&opts.data_file(DATA).map_err(e)?).map_err(e)?;
            let cl = lattice_from_curves(&cs).map_err(e)?;
            let g = genus_match_indefinite(&cl.lattice, &lattice_sum("U+D8+D9").map_err(e)?);
            let ok = cl.rank == 19 && cl.disc_order() == 16 && g.matches;
            Ok(Outcome::verdict(
                ok,
                format!(
                    "rank {}, signature {:?}, invariant factors {:?}; vs U+D8+D9: {}; Picard number 19 is an input hypothesis",
                    cl.rank,
                    cl.signature,
                    cl.invariant_factors,
                    g.conclusion()
                ),
            ))
        }),
        check("supersingular-28-span", "lattice spanned by the 28 curves", |_| {
            let t = fibration_tables(&label_42_curves().map_err(e)?).map_err(e)?;
            let d = extract_desmic_28(&t).map_err(e)?;
            let cl = lattice_from_curves(&d.system).map_err(e)?;
            let ok = cl.rank == 19 && cl.disc_order() == 16;
            Ok(Outcome::verdict(ok, format!("rank {}, signature {:?}, invariant factors {:?}", cl.rank, cl.signature, cl.invariant_factors)))
        }),
        check("u-plus-u", "u+u and v+v", |_| {
            let (u, w) = (FiniteQuadForm::u2(), FiniteQuadForm::v2());
            let ok = fq_isometric(&u.oplus(&u), &w.oplus(&w)).map_err(e)? && !fq_isometric(&u, &w).map_err(e)?;
            Ok(Outcome::verdict(ok, "u+u isometric to v+v, u not isometric to v"))
        }),
        check("q1-plus-v", "q1(4)+v and q5(4)+u", |_| {
            let lhs = FiniteQuadForm::cyclic(1, 2).oplus(&FiniteQuadForm::v2());
            let rhs = FiniteQuadForm::cyclic(5, 2).oplus(&FiniteQuadForm::u2());
            Ok(Outcome::verdict(fq_isometric(&lhs, &rhs).map_err(e)?, "isometric"))
        }),
        check("overlattice-chain", "E8 and D8 over D5+A3", |_| {
            let c = d5_a3_chain().map_err(e)?;
            let e8_roots = vectors_of_norm(&c.e8.lattice, 2).map_err(e)?.len();
            let d8_roots = vectors_of_norm(&c.d8.lattice, 2).map_err(e)?.len();
            let ok = c.e8.index == 4
                && c.d8.index == 2
                && e8_roots == 120
                && d8_roots == 56
                && same_genus(&c.e8.lattice, &lattice_sum("E8").map_err(e)?).map_err(e)?
                && same_genus(&c.d8.lattice, &lattice_sum("D8").map_err(e)?).map_err(e)?;
            Ok(Outcome::verdict(
                ok,
                format!("E8: index {}, {e8_roots} root pairs; D8: index {}, {d8_roots} root pairs", c.e8.index, c.d8.index),
            ))
        }),
    ];
    for sigma in [1u32, 2, 3] {
        v.push(check(format!("artin-sigma-{sigma}"), "embedding iff sigma <= 2", move |_| {
            let r = artin2_check(sigma).map_err(e)?;
            let want = sigma <= 2;
            let mut d = vec![format!("embeddable {}", r.embeddable)];
            if let Some(w) = &r.witness {
                d.push(format!("witness {w}"));
            }
            for (name, ok) in &r.checks {
                d.push(format!("{name}: {ok}"));
            }
            let mut ok = r.embeddable == want && r.all_checks_pass();
            if let Some(s) = &r.search {
                ok &= s.closed && s.matching.is_empty();
                d.push(format!(
                    "reduced ternaries examined {}, det {}: {}, matching {}, exhaustive {}; l between {} and {}",
                    s.examined,
                    s.det,
                    s.with_det.len(),
                    s.matching.len(),
                    s.closed,
                    r.l_lower,
                    r.l_upper
                ));
            }
            Ok(Outcome::verdict(ok, d.join("\n")))
        }));
    }
    v
}
