use exact_arith::{parse_poly, q, vars, PowerSeriesTrunc, Q};
use hypersurface_lab::{
    base_lines, contains_line, desmic_pencil, pencil_symmetries, rdp_an_type, AnVerdict,
};
use proj_geom::{LineP3, ProjPoint};
use proptest::prelude::*;

fn an_of(src: &str, consts: &[(&str, Q)]) -> AnVerdict {
    let r = vars(&["u", "v", "t"]);
    let f = parse_poly(&r, src, consts).unwrap();
    rdp_an_type(&PowerSeriesTrunc::new(f, 10), 10).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn an_invariant_under_uv_change_and_units(
        n in 1u32..6,
        m in prop::array::uniform4(-3i64..=3),
        c in prop::array::uniform3(-3i64..=3),
    ) {
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let src = format!(
            "(1 + c0 U + c1 V + c2 t)(U V + t^{})",
            n + 1
        );
        let src = src
            .replace('U', "(m0 u + m1 v)")
            .replace('V', "(m2 u + m3 v)");
        let consts = [
            ("m0", q(m[0])), ("m1", q(m[1])), ("m2", q(m[2])), ("m3", q(m[3])),
            ("c0", q(c[0])), ("c1", q(c[1])), ("c2", q(c[2])),
        ];
        prop_assert_eq!(an_of(&src, &consts), AnVerdict::A(n));
    }

    #[test]
    fn contains_line_agrees_with_five_points(
        ab in prop::array::uniform2(-5i64..=5),
        p1 in prop::array::uniform4(-4i64..=4),
        p2 in prop::array::uniform4(-4i64..=4),
        pick in 0usize..32,
    ) {
        prop_assume!(ab[0] != 0 && ab[1] != 0 && ab[0] + ab[1] != 0 && ab[0] != ab[1]);
        let f = desmic_pencil(q(ab[0]), q(ab[1]), q(-ab[0] - ab[1]));
        let l = if pick < 16 {
            base_lines::<Q>()[pick].clone()
        } else {
            match LineP3::from_points(ProjPoint::from_i64(&p1), ProjPoint::from_i64(&p2)) {
                Ok(l) => l,
                Err(_) => return Ok(()),
            }
        };
        let (a, b) = l.points();
        let five = (0..5).all(|k| {
            let p: Vec<Q> = a.coords().iter().zip(b.coords()).map(|(x, y)| x.clone() + q(k) * y.clone()).collect();
            f.vanishes_at(&p)
        });
        prop_assert_eq!(contains_line(&f, &l), five);
    }
}

#[test]
fn base_lines_closed_under_symmetries() {
    let lines = base_lines::<Q>();
    let syms = pencil_symmetries();
    assert_eq!(syms.len(), 192);
    for (perm, sign) in syms {
        for l in &lines {
            let (a, b) = l.points();
            let image = |p: &ProjPoint<Q>| {
                let mut c = vec![q(0); 4];
                for i in 0..4 {
                    c[perm[i]] = p.coords()[i].clone() * q(sign[i]);
                }
                ProjPoint::new(c).unwrap()
            };
            let (ia, ib) = (image(a), image(b));
            assert!(lines.iter().any(|m| m.contains(&ia) && m.contains(&ib)));
        }
    }
}
