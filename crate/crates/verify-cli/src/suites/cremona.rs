use exact_arith::{q, F2, Q};
use hypersurface_lab::{
    cremona_quartic_char2_printed, cremona_quartic_printed, cubic_normal_form_q, det_poly_matrix, discriminant_matrix,
    hessian, homogenized_quadric_family, jacobian_random_check, pfaffian_matrix_char2, pfaffian_poly_matrix,
    steinerian_equation,
};

use crate::runner::{check, e, CheckSpec, Outcome};

const SEEDS: [u64; 3] = [0, 1, 2];

pub fn checks() -> Vec<CheckSpec> {
    vec![
        check("steinerian-printed", "Cremona quartic as Steinerian", |_| {
            let g = steinerian_equation(&cubic_normal_form_q::<Q>()).map_err(e)?;
            Ok(Outcome::verdict(g.poly() == cremona_quartic_printed::<Q>().poly(), "exact equality with the printed quartic"))
        }),
        check("steinerian-printed-char2", "Cremona quartic in characteristic 2", |_| {
            let g = steinerian_equation(&cubic_normal_form_q::<F2>()).map_err(e)?;
            Ok(Outcome::verdict(
                g.poly() == cremona_quartic_char2_printed::<F2>().poly(),
                "exact equality with the printed char-2 quartic",
            ))
        }),
        check("discriminant-matrix", "discriminant matrix of the quadric family", |_| {
            let h = hessian(&homogenized_quadric_family::<Q>());
            let m = discriminant_matrix::<Q>();
            for i in 0..4 {
                for j in 0..4 {
                    if m[(i, j)].embed(h[(i, j)].vars()).map_err(e)? != h[(i, j)] {
                        return Ok(Outcome::fail(format!("entry ({i},{j}) differs from the Hessian")));
                    }
                }
            }
            Ok(Outcome::pass("equals the Hessian of the quadric family"))
        }),
        check("pfaffian-char2", "alternating matrix in characteristic 2", |_| {
            let m = pfaffian_matrix_char2::<F2>();
            let pf = pfaffian_poly_matrix(&m).map_err(e)?;
            let reduced = discriminant_matrix::<F2>();
            let same = (0..4).all(|i| (0..4).all(|j| reduced[(i, j)] == m[(i, j)]));
            let ok = pf.clone() * pf == det_poly_matrix(&m).map_err(e)? && same;
            Ok(Outcome::verdict(ok, "Pf^2 = det, matrix is the reduction mod 2"))
        }),
        check("jacobian-random", "singular points of the web lie on the Steinerian", |_| {
            let mut bad = Vec::new();
            for s in SEEDS {
                if !jacobian_random_check::<Q>(s, q).map_err(e)?.steinerian_vanishes {
                    bad.push(s);
                }
            }
            Ok(Outcome::verdict(bad.is_empty(), format!("seeds {SEEDS:?}, failing {bad:?}")))
        }),
    ]
}
