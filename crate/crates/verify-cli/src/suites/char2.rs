use config_kit::ingest_curve_system;
use exact_arith::{q, Ring, F2, F4};
use hypersurface_lab::{char2_cremona_singular_points, cremona_quartic_char2_printed, kummer_char2_quartic, specialize, AnVerdict};

use crate::runner::{check, e, CheckSpec, Outcome};

pub const DATA: &str = "kummer-char2-ordinary.json";

pub fn checks() -> Vec<CheckSpec> {
    let mut v = vec![check("cremona-singular-families", "12 singular points and P0 in characteristic 2", |_| {
        let fams = char2_cremona_singular_points::<F2>().map_err(e)?;
        let bad: Vec<&str> = fams.iter().filter(|f| !f.holds()).map(|f| f.name).collect();
        let names: Vec<&str> = fams.iter().map(|f| f.name).collect();
        Ok(Outcome::verdict(bad.is_empty() && fams.len() == 4, format!("checked {names:?}; failing {bad:?}")))
    })];
    v.push(check("p0-a3", "A3 point at (a,b,c,d) = (0,0,1,1)", |_| {
        let params = [F4::zero(), F4::zero(), F4::one(), F4::one()];
        let f = specialize(&cremona_quartic_char2_printed::<F4>(), params).map_err(e)?;
        let p0 = [F4::zero(), F4::zero(), F4::zero(), F4::one()];
        let an = f.an_type_at(&p0, 8).map_err(e)?;
        Ok(Outcome::verdict(f.singular_at(&p0).singular && an == AnVerdict::A(3), format!("{an:?} at [0,0,0,1] over F4")))
    }));
    for (name, alpha) in [("kummer-alpha-1", F4::one()), ("kummer-alpha-omega", F4::from_bits(0, 1))] {
        v.push(check(name, "ordinary Kummer quartic in characteristic 2", move |_| {
            let k = kummer_char2_quartic(alpha).map_err(e)?;
            let lines = k.lines_contained.iter().filter(|&&b| b).count();
            let a3 = k.reports.iter().filter(|r| r.singular && r.an == Some(AnVerdict::A(3))).count();
            let ok = lines == 4 && a3 == 6 && k.reports.len() == 6 && k.is_6_2_4_3();
            Ok(Outcome::verdict(ok, format!("{lines} lines, {a3} A3 points, (6_2, 4_3): {}", k.is_6_2_4_3())))
        }));
    }
    v.push(check("quasi-elliptic-fibrations", "three fibrations with two D~8 fibers", |opts| {
        let cs = ingest_curve_system(&opts.data_file(DATA).map_err(e)?).map_err(e)?;
        let mut d = Vec::new();
        let mut ok = cs.len() == 22;
        for name in ["pi1", "pi2", "pi3"] {
            let Some(f) = cs.fibration(name) else {
                return Ok(Outcome::fail(format!("fibration {name} missing")));
            };
            let kinds: Vec<&str> = f.fibers.iter().map(|fb| fb.kind.as_str()).collect();
            ok &= kinds == ["D~8", "D~8"];
            d.push(format!("{name}: {kinds:?}"));
        }
        Ok(Outcome::verdict(ok, d.join("; ")))
    }));
    v.push(check("kummer-polarization", "H^2 = 4 with H.Ei^0 = 1", |opts| {
        let cs = ingest_curve_system(&opts.data_file(DATA).map_err(e)?).map_err(e)?;
        let h = cs.divisor_vector("H").map_err(e)?;
        let dots = cs.pair_with_curves(&h);
        let pattern = cs.curves().iter().enumerate().all(|(k, c)| dots[k] == q(i64::from(c.id.ends_with("^0"))));
        let sq = cs.pair(&h, &h);
        Ok(Outcome::verdict(sq == q(4) && pattern, format!("H^2 = {sq}")))
    }));
    v
}
