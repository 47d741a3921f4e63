use exact_arith::{parse_poly, vars, Field, Matrix, MultiPoly, Vars};
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::HyperError;
use crate::form::Form;
use crate::identity::verify_identity;

const COORDS: [&str; 4] = ["x", "y", "z", "w"];

/// Ring Z[a,b,c,d][x,y,z,w] (over R) used for the cubic normal form.
pub fn cremona_ring() -> Vars {
    vars(&["a", "b", "c", "d", "x", "y", "z", "w"])
}

/// q = (aw + bx + cy + dz)w + x² + y² + z², as a form with parameters a, b, c, d.
pub fn cubic_normal_form_q<F: Field>() -> Form<F> {
    let q = parse_poly(&cremona_ring(), "(a w + b x + c y + d z)w + x^2 + y^2 + z^2", &[]).unwrap();
    Form::with_coord_names(q, &COORDS).unwrap()
}

/// f = qw + xyz.
pub fn cubic_surface<F: Field>(q: &Form<F>) -> Result<Form<F>, HyperError> {
    let [x, y, z, w] = coord_gens(q);
    Form::with_coords(q.poly().clone() * w + x * y * z, q.coords().to_vec())
}

fn coord_gens<F: Field>(f: &Form<F>) -> [MultiPoly<F>; 4] {
    let g = MultiPoly::gens(f.poly().vars());
    let c = f.coords();
    [g[c[0]].clone(), g[c[1]].clone(), g[c[2]].clone(), g[c[3]].clone()]
}

/// q + αyz + βxz + γxy - (αβz + αγy + βγx)w + αβγw²; α, β, γ live in the ring of q.
pub fn cremona_quadric<F: Field>(
    q: &Form<F>,
    alpha: &MultiPoly<F>,
    beta: &MultiPoly<F>,
    gamma: &MultiPoly<F>,
) -> Result<Form<F>, HyperError> {
    if q.degree() != 2 {
        return Err(HyperError::NotHomogeneous);
    }
    let [x, y, z, w] = coord_gens(q);
    let (a, b, g) = (alpha.clone(), beta.clone(), gamma.clone());
    let p = q.poly().clone() + a.clone() * y.clone() * z.clone() + b.clone() * x.clone() * z.clone()
        + g.clone() * x.clone() * y.clone()
        - (a.clone() * b.clone() * z + a.clone() * g.clone() * y + b.clone() * g.clone() * x) * w.clone()
        + a * b * g * w.clone() * w;
    Form::with_coords(p, q.coords().to_vec())
}

/// G = q² - q_y q_z yz - q_x q_z xz - q_x q_y xy - q_x q_y q_z w + xyz q_w.
pub fn steinerian_equation<F: Field>(q: &Form<F>) -> Result<Form<F>, HyperError> {
    if q.degree() != 2 {
        return Err(HyperError::NotHomogeneous);
    }
    let [x, y, z, w] = coord_gens(q);
    let d = q.partials();
    let (qx, qy, qz, qw) = (d[0].clone(), d[1].clone(), d[2].clone(), d[3].clone());
    let f = q.poly().clone();
    let g = f.clone() * f
        - qy.clone() * qz.clone() * y.clone() * z.clone()
        - qx.clone() * qz.clone() * x.clone() * z.clone()
        - qx.clone() * qy.clone() * x.clone() * y.clone()
        - qx * qy * qz * w
        + x * y * z * qw;
    Form::with_coords(g, q.coords().to_vec())
}

pub fn cremona_quartic_printed<F: Field>() -> Form<F> {
    let src = "-(b w + 2x)(c w + 2y)(d w + 2z)w - (b w + 2x)(c w + 2y)x y \
               - (b w + 2x)(d w + 2z)x z - (c w + 2y)(d w + 2z)y z \
               + (2a w + b x + c y + d z)x y z \
               + (a w^2 + b w x + c w y + d w z + x^2 + y^2 + z^2)^2";
    Form::with_coord_names(parse_poly(&cremona_ring(), src, &[]).unwrap(), &COORDS).unwrap()
}

pub fn cremona_quartic_char2_printed<F: Field>() -> Form<F> {
    let src = "b c d w^4 + b c w^2 x y + b d w^2 x z + c d w^2 y z + (b x + c y + d z)x y z \
               + (a w^2 + b w x + c w y + d w z + x^2 + y^2 + z^2)^2";
    Form::with_coord_names(parse_poly(&cremona_ring(), src, &[]).unwrap(), &COORDS).unwrap()
}

/// Printed partials F'_x, F'_y, F'_z of the char-2 quartic (F'_w = 0).
pub fn cremona_char2_partials_printed<F: Field>() -> [MultiPoly<F>; 4] {
    let r = cremona_ring();
    [
        parse_poly(&r, "(c y + d z)(y z + b w^2)", &[]).unwrap(),
        parse_poly(&r, "(b x + d z)(x z + c w^2)", &[]).unwrap(),
        parse_poly(&r, "(b x + c y)(x y + d w^2)", &[]).unwrap(),
        MultiPoly::zero_in(&r),
    ]
}

/// Checks f² - f_x f_y f_z = G w² for f = qw + xyz and G the Steinerian of q.
pub fn steinerian_identity<F: Field>(q: &Form<F>) -> Result<bool, HyperError> {
    let f = cubic_surface(q)?;
    let g = steinerian_equation(q)?;
    let d = f.partials();
    let w = coord_gens(q)[3].clone();
    let lhs = f.poly().clone() * f.poly().clone() - d[0].clone() * d[1].clone() * d[2].clone();
    verify_identity(&lhs, &(g.poly().clone() * w.clone() * w))
}

/// Hessian in x, y, z, w (second partials) of a form.
pub fn hessian<F: Field>(f: &Form<F>) -> Matrix<MultiPoly<F>> {
    let c = f.coords().to_vec();
    Matrix::from_fn(4, 4, |i, j| f.poly().partial(c[i]).partial(c[j]))
}

/// Ring of the homogenized family: parameters, then α0, α1, β0, β1, γ0, γ1.
pub fn discriminant_ring() -> Vars {
    vars(&["a", "b", "c", "d", "al0", "al1", "be0", "be1", "ga0", "ga1"])
}

/// The printed symmetric 4×4 matrix whose determinant is the discriminant of the quadric family.
pub fn discriminant_matrix<F: Field>() -> Matrix<MultiPoly<F>> {
    let r = discriminant_ring();
    let p = |s: &str| parse_poly(&r, s, &[]).unwrap();
    let rows = [
        ["2al0 be0 ga0", "al0 be0 ga1", "al0 be1 ga0", "-al0 be1 ga1 + b al0 be0 ga0"],
        ["al0 be0 ga1", "2al0 be0 ga0", "al1 be0 ga0", "-al1 be0 ga1 + c al0 be0 ga0"],
        ["al0 be1 ga0", "al1 be0 ga0", "2al0 be0 ga0", "-al1 be1 ga0 + d al0 be0 ga0"],
        [
            "-al0 be1 ga1 + b al0 be0 ga0",
            "-al1 be0 ga1 + c al0 be0 ga0",
            "-al1 be1 ga0 + d al0 be0 ga0",
            "2(a al0 be0 ga0 + al1 be1 ga1)",
        ],
    ];
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()).unwrap()
}

/// The printed alternating matrix of the char-2 discriminant (blank entry read as 0).
pub fn pfaffian_matrix_char2<F: Field>() -> Matrix<MultiPoly<F>> {
    let r = discriminant_ring();
    let p = |s: &str| parse_poly(&r, s, &[]).unwrap();
    let rows = [
        ["0", "al0 be0 ga1", "al0 be1 ga0", "al0 be1 ga1 + b al0 be0 ga0"],
        ["al0 be0 ga1", "0", "al1 be0 ga0", "al1 be0 ga1 + c al0 be0 ga0"],
        ["al0 be1 ga0", "al1 be0 ga0", "0", "al1 be1 ga0 + d al0 be0 ga0"],
        ["al0 be1 ga1 + b al0 be0 ga0", "al1 be0 ga1 + c al0 be0 ga0", "al1 be1 ga0 + d al0 be0 ga0", "0"],
    ];
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()).unwrap()
}

/// The quadric family homogenized in (α0:α1), (β0:β1), (γ0:γ1), in the ring
/// parameters + α, β, γ coordinates + x, y, z, w.
pub fn homogenized_quadric_family<F: Field>() -> Form<F> {
    let r = vars(&["a", "b", "c", "d", "al0", "al1", "be0", "be1", "ga0", "ga1", "x", "y", "z", "w"]);
    let src = "al0 be0 ga0((a w + b x + c y + d z)w + x^2 + y^2 + z^2) \
               + al1 be0 ga0 y z + al0 be1 ga0 x z + al0 be0 ga1 x y \
               - (al1 be1 ga0 z + al1 be0 ga1 y + al0 be1 ga1 x)w + al1 be1 ga1 w^2";
    Form::with_coord_names(parse_poly(&r, src, &[]).unwrap(), &COORDS).unwrap()
}

/// Exact Pfaffian of an alternating matrix of polynomials.
pub fn pfaffian_poly_matrix<F: Field>(m: &Matrix<MultiPoly<F>>) -> Result<MultiPoly<F>, HyperError> {
    Ok(m.pfaffian()?)
}

pub fn det_poly_matrix<F: Field>(m: &Matrix<MultiPoly<F>>) -> Result<MultiPoly<F>, HyperError> {
    Ok(m.det()?)
}

/// Outcome of one random Jacobian-system check.
#[derive(Clone, Debug)]
pub struct JacobianCheck<F> {
    /// b, c, d, α, β, γ drawn at random, and a solved for.
    pub parameters: Vec<F>,
    pub point: Vec<F>,
    pub steinerian_vanishes: bool,
}

/// Draws random b, c, d, α, β, γ, solves for the a making the Jacobian system of
/// the quadric family singular, and evaluates the Steinerian at its solution.
pub fn jacobian_random_check<F: Field>(seed: u64, sample: impl Fn(i64) -> F) -> Result<JacobianCheck<F>, HyperError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = cubic_normal_form_q::<F>();
    let g = steinerian_equation(&q)?;
    let r = q.poly().vars().clone();
    loop {
        let draws: Vec<F> = (0..6).map(|_| sample(rng.gen_range(-9..=9))).collect();
        let konst = |v: &F| MultiPoly::constant_in(&r, v.clone());
        let fam = cremona_quadric(&q, &konst(&draws[3]), &konst(&draws[4]), &konst(&draws[5]))?;
        let h = hessian(&fam);
        let at = |a: F| -> Result<Matrix<F>, HyperError> {
            let vals = [a, draws[0].clone(), draws[1].clone(), draws[2].clone()];
            let mut out = Matrix::zeros(4, 4);
            for i in 0..4 {
                for j in 0..4 {
                    let mut p = h[(i, j)].clone();
                    for (k, v) in vals.iter().enumerate() {
                        p = p.subst_some(&[(r[k].as_str(), MultiPoly::constant_in(&r, v.clone()))])?;
                    }
                    out[(i, j)] = p.constant_value().unwrap_or_else(F::zero);
                }
            }
            Ok(out)
        };
        let d0 = at(F::zero())?.det()?;
        let d1 = at(F::one())?.det()? - d0.clone();
        if d1.is_zero() {
            continue;
        }
        let a = -(d0.div(&d1).unwrap());
        let ker = at(a.clone())?.kernel();
        if ker.len() != 1 {
            continue;
        }
        let p = ker[0].clone();
        let mut vals = vec![a.clone(), draws[0].clone(), draws[1].clone(), draws[2].clone()];
        vals.extend(p.iter().cloned());
        let steinerian_vanishes = g.poly().eval(&vals)?.is_zero();
        let mut parameters = vec![a];
        parameters.extend(draws);
        return Ok(JacobianCheck { parameters, point: p, steinerian_vanishes });
    }
}

/// A printed family of char-2 singular points, checked in F2[a,b,c,d][t]/(relation).
#[derive(Clone, Debug)]
pub struct FamilyCheck {
    pub name: &'static str,
    /// Pseudo-remainders of F, F'_x, F'_y, F'_z vanish.
    pub conditions: [bool; 4],
    /// F'_w is identically zero.
    pub w_partial_zero: bool,
}

impl FamilyCheck {
    pub fn holds(&self) -> bool {
        self.conditions.iter().all(|&c| c) && self.w_partial_zero
    }
}

fn family_ring() -> Vars {
    vars(&["a", "b", "c", "d", "t"])
}

/// Coordinates and relation (in t) of the three printed 4-point families and P0.
pub fn char2_families_printed() -> Vec<(&'static str, [&'static str; 4], &'static str)> {
    vec![
        ("family 1", ["d t^2", "b^2", "b t^2", "b t"], "b^2 d t^3 + b^2 t^4 + d^2 t^4 + a b^2 t^2 + b^3 c t + b^4"),
        ("family 2", ["c^2", "d t^2", "c t^2", "c t"], "c^2 d t^3 + c^2 t^4 + d^2 t^4 + a c^2 t^2 + b c^3 t + c^4"),
        ("family 3", ["c", "b", "t^2", "t"], "d t^3 + t^4 + a t^2 + b c t + b^2 + c^2"),
        (
            "P0",
            ["c d t", "b d t", "b c t", "b c"],
            "(b^3 c^3 d^3 + b^4 c^4 + b^4 d^4 + c^4 d^4)t^4 - (b^5 c^5 d + a^2 b^4 c^4)",
        ),
    ]
}

/// Verifies the printed families and P0 symbolically over F2(a,b,c,d).
pub fn char2_cremona_singular_points<F: Field>() -> Result<Vec<FamilyCheck>, HyperError> {
    if F::characteristic() != 2 {
        return Err(HyperError::WrongCharacteristic(2));
    }
    let f = cremona_quartic_char2_printed::<F>();
    let d = f.partials();
    let r = family_ring();
    let gens = MultiPoly::<F>::gens(&r);
    let mut out = Vec::new();
    for (name, coords, rel) in char2_families_printed() {
        let rel = parse_poly::<F>(&r, rel, &[])?;
        let mut images: Vec<MultiPoly<F>> = gens[..4].to_vec();
        for c in coords {
            images.push(parse_poly(&r, c, &[])?);
        }
        let reduce = |p: &MultiPoly<F>| -> Result<bool, HyperError> {
            let s = p.subst_all(&images)?;
            Ok(s.pseudo_rem(&rel, 4)?.is_zero_poly())
        };
        let conditions = [reduce(f.poly())?, reduce(&d[0])?, reduce(&d[1])?, reduce(&d[2])?];
        out.push(FamilyCheck { name, conditions, w_partial_zero: d[3].is_zero_poly() });
    }
    Ok(out)
}

/// Substitutes concrete parameters into a form with parameters a, b, c, d.
pub fn specialize<F: Field>(f: &Form<F>, params: [F; 4]) -> Result<Form<F>, HyperError> {
    let r = f.poly().vars().clone();
    let names: Vec<&str> = COORDS.to_vec();
    let target = vars(&names);
    let g = MultiPoly::<F>::gens(&target);
    let mut images: Vec<MultiPoly<F>> = params.into_iter().map(|v| MultiPoly::constant_in(&target, v)).collect();
    images.extend(g);
    debug_assert_eq!(r.len(), 8);
    Form::new(f.poly().subst_all(&images)?)
}

/// P0 at concrete parameters over a finite field of characteristic 2.
pub fn char2_p0<F: Field>(params: [F; 4]) -> Result<Vec<F>, HyperError> {
    if F::characteristic() != 2 {
        return Err(HyperError::WrongCharacteristic(2));
    }
    let [a, b, c, d] = params;
    let den = b.pow(3) * c.pow(3) * d.pow(3) + b.pow(4) * c.pow(4) + b.pow(4) * d.pow(4) + c.pow(4) * d.pow(4);
    if den.is_zero() {
        return Err(HyperError::DegenerateParameters("denominator of z0^4 vanishes".into()));
    }
    let num = b.pow(5) * c.pow(5) * d.clone() + a.pow(2) * b.pow(4) * c.pow(4);
    let z4 = num.div(&den).unwrap();
    let z0 = F::elements()
        .and_then(|els| els.into_iter().find(|e| e.pow(4) == z4))
        .ok_or_else(|| HyperError::DegenerateParameters("no fourth root found".into()))?;
    let p = vec![c.clone() * d.clone() * z0.clone(), b.clone() * d * z0.clone(), b.clone() * c.clone() * z0, b * c];
    if p.iter().all(|x| x.is_zero()) {
        return Err(HyperError::DegenerateParameters("P0 coordinates vanish".into()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::{q, Ring, Q, F2, F4};

    #[test]
    fn steinerian_matches_printed_quartic() {
        let g = steinerian_equation(&cubic_normal_form_q::<Q>()).unwrap();
        assert_eq!(g.poly(), cremona_quartic_printed::<Q>().poly());
        let g2 = steinerian_equation(&cubic_normal_form_q::<F2>()).unwrap();
        assert_eq!(g2.poly(), cremona_quartic_char2_printed::<F2>().poly());
    }

    #[test]
    fn steinerian_identity_char0_and_char2() {
        assert!(steinerian_identity(&cubic_normal_form_q::<Q>()).unwrap());
        assert!(steinerian_identity(&cubic_normal_form_q::<F2>()).unwrap());
    }

    #[test]
    fn char2_partials_as_printed() {
        let f = cremona_quartic_char2_printed::<F2>();
        let d = f.partials();
        let printed = cremona_char2_partials_printed::<F2>();
        for k in 0..4 {
            assert_eq!(d[k], printed[k], "partial {k}");
        }
    }

    #[test]
    fn quadric_contains_residual_conics() {
        let nf = cubic_normal_form_q::<Q>();
        let r = nf.poly().vars().clone();
        let zero = MultiPoly::zero_in(&r);
        let (al, be, ga) = (MultiPoly::constant_in(&r, q(3)), MultiPoly::constant_in(&r, q(-2)), MultiPoly::constant_in(&r, q(5)));
        let fam = cremona_quadric(&nf, &al, &be, &ga).unwrap();
        let [x, y, z, w] = coord_gens(&nf);
        for (var, other, k) in [("x", al.clone(), 0), ("y", be.clone(), 1), ("z", ga.clone(), 2)] {
            let plane = other.clone() * w.clone();
            let pair = [y.clone() * z.clone(), x.clone() * z.clone(), x.clone() * y.clone()][k].clone();
            let conic = nf.poly().clone() + other * pair;
            let restrict = |p: &MultiPoly<Q>| p.subst_some(&[(var, plane.clone())]).unwrap();
            assert_eq!(restrict(fam.poly()), restrict(&conic));
        }
        let trivial = cremona_quadric(&nf, &zero, &zero, &zero).unwrap();
        assert_eq!(trivial.poly(), nf.poly());
    }

    #[test]
    fn discriminant_matrix_is_hessian_of_family() {
        let h = hessian(&homogenized_quadric_family::<Q>());
        let m = discriminant_matrix::<Q>();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[(i, j)].embed(h[(i, j)].vars()).unwrap(), h[(i, j)], "({i},{j})");
            }
        }
    }

    #[test]
    fn char2_pfaffian_squares_to_det() {
        let m = pfaffian_matrix_char2::<F2>();
        let pf = pfaffian_poly_matrix(&m).unwrap();
        assert_eq!(pf.clone() * pf.clone(), det_poly_matrix(&m).unwrap());
        let one = F2::one();
        let at = pf.eval(&[F2::zero(), one, one, one, one, one, one, one, one, one]).unwrap();
        let det = det_poly_matrix(&m).unwrap().eval(&[F2::zero(), one, one, one, one, one, one, one, one, one]).unwrap();
        assert_eq!(at * at, det);
        // the char-2 matrix is the reduction of the char-0 one
        let reduced = discriminant_matrix::<F2>();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(reduced[(i, j)], m[(i, j)]);
            }
        }
    }

    #[test]
    fn jacobian_solution_lies_on_steinerian() {
        for seed in 0..3 {
            let c = jacobian_random_check::<Q>(seed, q).unwrap();
            assert!(c.steinerian_vanishes, "{c:?}");
        }
    }

    #[test]
    fn char2_families_are_singular() {
        for fam in char2_cremona_singular_points::<F2>().unwrap() {
            assert!(fam.holds(), "{fam:?}");
        }
        assert!(char2_cremona_singular_points::<Q>().is_err());
    }

    #[test]
    fn family_2_needs_squared_y_coordinate() {
        // with y = d t (no square) F and F'_x do not reduce to zero
        let r = family_ring();
        let f = cremona_quartic_char2_printed::<F2>();
        let rel = parse_poly::<F2>(&r, char2_families_printed()[1].2, &[]).unwrap();
        let mut images = MultiPoly::<F2>::gens(&r)[..4].to_vec();
        for c in ["c^2", "d t", "c t^2", "c t"] {
            images.push(parse_poly(&r, c, &[]).unwrap());
        }
        let s = f.poly().subst_all(&images).unwrap();
        assert!(!s.pseudo_rem(&rel, 4).unwrap().is_zero_poly());
    }

    #[test]
    fn p0_limit_is_a3() {
        let params = [F4::zero(), F4::zero(), F4::one(), F4::one()];
        assert!(matches!(char2_p0(params), Err(HyperError::DegenerateParameters(_))));
        let f = specialize(&cremona_quartic_char2_printed::<F4>(), params).unwrap();
        let p0 = [F4::zero(), F4::zero(), F4::zero(), F4::one()];
        assert!(f.singular_at(&p0).singular);
        assert_eq!(f.an_type_at(&p0, 8).unwrap(), crate::AnVerdict::A(3));
    }

    #[test]
    fn p0_at_generic_f4_parameters_is_singular() {
        let w = F4::from_bits(0, 1);
        let params = [w, F4::one(), w, w * w];
        let p = char2_p0(params).unwrap();
        let f = specialize(&cremona_quartic_char2_printed::<F4>(), params).unwrap();
        assert!(f.singular_at(&p).singular);
    }
}
