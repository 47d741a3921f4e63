use exact_arith::{parse_poly, Field};
use proj_geom::{LineP3, ProjPlane, ProjPoint};

use crate::desmic::contains_line;
use crate::error::HyperError;
use crate::form::{Form, SingularPointReport};
use crate::identity::xyzw;

/// F_α = xyzw + α(x+y+z+w)⁴ with its four lines and six singular points.
#[derive(Clone, Debug)]
pub struct Kummer2<F: Field> {
    pub form: Form<F>,
    /// Plane pairs V(x_k, x+y+z+w).
    pub lines: Vec<([i64; 4], [i64; 4])>,
    pub points: Vec<[i64; 4]>,
    pub reports: Vec<SingularPointReport>,
    pub lines_contained: Vec<bool>,
    /// incidence[i][j]: point i on line j.
    pub incidence: Vec<Vec<bool>>,
}

impl<F: Field> Kummer2<F> {
    /// Each point on 2 lines and each line through 3 points.
    pub fn is_6_2_4_3(&self) -> bool {
        self.incidence.iter().all(|r| r.iter().filter(|&&b| b).count() == 2)
            && (0..self.lines.len()).all(|j| self.incidence.iter().filter(|r| r[j]).count() == 3)
    }
}

pub fn kummer_char2_quartic<F: Field>(alpha: F) -> Result<Kummer2<F>, HyperError> {
    if F::characteristic() != 2 {
        return Err(HyperError::WrongCharacteristic(2));
    }
    if alpha.is_zero() {
        return Err(HyperError::DegenerateParameters("alpha = 0".into()));
    }
    let p = parse_poly(&xyzw(), "x y z w + al (x+y+z+w)^4", &[("al", alpha)])?;
    let form = Form::new(p)?;
    let lines: Vec<([i64; 4], [i64; 4])> = (0..4)
        .map(|k| {
            let mut e = [0; 4];
            e[k] = 1;
            (e, [1, 1, 1, 1])
        })
        .collect();
    let mut points = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut p = [0; 4];
            p[i] = 1;
            p[j] = 1;
            points.push(p);
        }
    }
    let mut lines_contained = Vec::new();
    let mut line_objs = Vec::new();
    for (h1, h2) in &lines {
        let l = LineP3::<F>::from_planes(&ProjPlane::from_i64(h1), &ProjPlane::from_i64(h2))?;
        lines_contained.push(contains_line(&form, &l));
        line_objs.push(l);
    }
    let mut reports = Vec::new();
    let mut incidence = Vec::new();
    for p in &points {
        let pt: Vec<F> = p.iter().map(|&v| F::from_i64(v)).collect();
        let mut r = form.singular_at(&pt);
        if r.singular {
            r.an = Some(form.an_type_at(&pt, 8)?);
        }
        reports.push(r);
        let proj = ProjPoint::new(pt)?;
        incidence.push(line_objs.iter().map(|l| l.contains(&proj)).collect());
    }
    Ok(Kummer2 { form, lines, points, reports, lines_contained, incidence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::AnVerdict;
    use exact_arith::{q, Ring, F2, F4};

    #[test]
    fn six_a3_points_and_four_lines() {
        for alpha in [F4::one(), F4::from_bits(0, 1)] {
            let k = kummer_char2_quartic(alpha).unwrap();
            assert!(k.lines_contained.iter().all(|&b| b));
            for r in &k.reports {
                assert!(r.singular, "{r:?}");
                assert_eq!(r.an, Some(AnVerdict::A(3)));
            }
            assert!(k.is_6_2_4_3());
        }
    }

    #[test]
    fn preconditions() {
        assert!(kummer_char2_quartic(F2::zero()).is_err());
        assert!(matches!(kummer_char2_quartic(q(1)), Err(HyperError::WrongCharacteristic(2))));
    }
}
