use exact_arith::{F2, Q};
use hypersurface_lab::{cubic_normal_form_q, desmic_tetrahedra_sum, eight_squares, steinerian_identity, verify_identity};

use crate::runner::{check, e, CheckSpec, Outcome};

pub fn checks() -> Vec<CheckSpec> {
    vec![
        check("desmic-tetrahedra-sum", "desmic tetrahedra identity", |_| {
            let s = desmic_tetrahedra_sum::<Q>();
            Ok(Outcome::verdict(s.is_zero_poly(), format!("sum has {} terms", s.terms().count())))
        }),
        check("eight-squares", "eight squares identity", |_| {
            let (l, r) = eight_squares::<Q>();
            Ok(Outcome::verdict(verify_identity(&l, &r).map_err(e)?, "exact equality over Z"))
        }),
        check("steinerian-identity-z", "Steinerian identity f^2 - fx fy fz = G w^2", |_| {
            let ok = steinerian_identity(&cubic_normal_form_q::<Q>()).map_err(e)?;
            Ok(Outcome::verdict(ok, "over Z[a,b,c,d]"))
        }),
        check("steinerian-identity-f2", "Steinerian identity f^2 - fx fy fz = G w^2", |_| {
            let ok = steinerian_identity(&cubic_normal_form_q::<F2>()).map_err(e)?;
            Ok(Outcome::verdict(ok, "over F2[a,b,c,d]"))
        }),
    ]
}
