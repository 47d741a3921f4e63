use std::sync::Arc;

use exact_arith::{parse_poly, q, vars, Field, Matrix, MultiPoly, Q, Vars};
use proj_geom::{quartic_monomials, LineP3, ProjPlane, ProjPoint};

use crate::error::HyperError;
use crate::form::Form;

pub const SINGULAR_POINTS: [[i64; 4]; 12] = [
    [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0],
    [1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1],
    [1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, 1], [-1, 1, 1, 1],
];

pub const VERTICES: [[i64; 4]; 12] = [
    [0, 0, 1, 1], [0, 0, 1, -1], [0, 1, 0, 1], [0, 1, 0, -1],
    [0, 1, 1, 0], [0, 1, -1, 0], [1, 0, 0, 1], [1, 0, 0, -1],
    [1, 0, 1, 0], [1, 0, -1, 0], [1, 1, 0, 0], [1, -1, 0, 0],
];

const PENCIL: &str = "a(x^2-y^2)(z^2-w^2) + b(x^2-w^2)(y^2-z^2) + c(x^2-z^2)(w^2-y^2)";

/// The pencil with c = -a - b, as a form in x, y, z, w over Q[a, b].
pub fn desmic_pencil_symbolic() -> Form<Q> {
    let r = vars(&["a", "b", "x", "y", "z", "w"]);
    let c = parse_poly(&r, "-a-b", &[]).unwrap();
    let f = parse_poly(&vars(&["a", "b", "c", "x", "y", "z", "w"]), PENCIL, &[]).unwrap();
    let g = MultiPoly::gens(&r);
    let f = f.subst_all(&[g[0].clone(), g[1].clone(), c, g[2].clone(), g[3].clone(), g[4].clone(), g[5].clone()]).unwrap();
    Form::with_coord_names(f, &["x", "y", "z", "w"]).unwrap()
}

/// A member of the pencil at concrete parameters.
pub fn desmic_pencil<F: Field>(a: F, b: F, c: F) -> Form<F> {
    let f = parse_poly(&vars(&["x", "y", "z", "w"]), PENCIL, &[("a", a), ("b", b), ("c", c)]).unwrap();
    Form::new(f).unwrap()
}

/// The 16 base lines V(x±y, x±w), V(x±y, y±z), V(z±w, x±w), V(z±w, y±z), as plane pairs.
pub fn base_line_planes() -> Vec<([i64; 4], [i64; 4])> {
    let pm = |i: usize, j: usize, s: i64| {
        let mut c = [0i64; 4];
        c[i] = 1;
        c[j] = s;
        c
    };
    let mut out = Vec::new();
    for (first, second) in [((0, 1), (0, 3)), ((0, 1), (1, 2)), ((2, 3), (0, 3)), ((2, 3), (1, 2))] {
        for s in [1, -1] {
            for t in [1, -1] {
                out.push((pm(first.0, first.1, s), pm(second.0, second.1, t)));
            }
        }
    }
    out
}

pub fn base_lines<F: Field>() -> Vec<LineP3<F>> {
    base_line_planes()
        .iter()
        .map(|(h1, h2)| LineP3::from_planes(&ProjPlane::from_i64(h1), &ProjPlane::from_i64(h2)).unwrap())
        .collect()
}

/// For each base line, the indices of the singular points on it.
pub fn node_line_incidence() -> Vec<Vec<usize>> {
    let lines = base_lines::<Q>();
    lines
        .iter()
        .map(|l| {
            (0..12)
                .filter(|&k| l.contains(&ProjPoint::from_i64(&SINGULAR_POINTS[k])))
                .collect()
        })
        .collect()
}

/// The 192 projective symmetries of the pencil: coordinate permutations composed
/// with sign changes, signs normalised so the first is +1.
pub fn pencil_symmetries() -> Vec<([usize; 4], [i64; 4])> {
    let mut out = Vec::new();
    for p in permutations4() {
        for mask in 0..8u32 {
            let s = [1, if mask & 1 == 0 { 1 } else { -1 }, if mask & 2 == 0 { 1 } else { -1 }, if mask & 4 == 0 { 1 } else { -1 }];
            out.push((p, s));
        }
    }
    out
}

pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Whether the hypersurface contains the line (restriction to a parametrization vanishes).
pub fn contains_line<F: Field>(f: &Form<F>, l: &LineP3<F>) -> bool {
    let old = f.poly().vars();
    let mut names: Vec<String> = old.iter().cloned().collect();
    names.push("_u".into());
    names.push("_v".into());
    let ring: Vars = Arc::new(names);
    let n = ring.len();
    let emb = f.poly().embed(&ring).unwrap();
    let par = l.parametrize(&ring, n - 2, n - 1);
    let map: Vec<(&str, MultiPoly<F>)> =
        f.coords().iter().zip(par).map(|(&i, p)| (old[i].as_str(), p)).collect();
    emb.subst_some(&map).unwrap().is_zero_poly()
}

/// Linear condition cu·u + cv·v = 0 on the plane V(u·h1 + v·h2) through a line of
/// the surface for the plane to be tangent along the line.
#[derive(Clone, Debug)]
pub struct TangencyCondition {
    pub u_coeff: MultiPoly<Q>,
    pub v_coeff: MultiPoly<Q>,
    /// Whether the restrictions A|ℓ and B|ℓ are proportional (a tangent plane exists).
    pub consistent: bool,
}

impl TangencyCondition {
    /// Proportionality to a given condition cu'·u + cv'·v = 0, in the same ring.
    pub fn proportional_to(&self, cu: &MultiPoly<Q>, cv: &MultiPoly<Q>) -> bool {
        (self.u_coeff.clone() * cv.clone() - self.v_coeff.clone() * cu.clone()).is_zero_poly()
    }
}

/// Coordinates (X, Y, Z, W) with X = h1, Y = h2; returns the form rewritten in them
/// (reusing the coordinate variable names) and the change matrix.
fn adapted_coordinates(f: &Form<Q>, h1: &[i64; 4], h2: &[i64; 4]) -> Result<MultiPoly<Q>, HyperError> {
    let mut rows = vec![h1.to_vec(), h2.to_vec()];
    'outer: for i in 0..4 {
        for j in i + 1..4 {
            let mut e1 = vec![0; 4];
            e1[i] = 1;
            let mut e2 = vec![0; 4];
            e2[j] = 1;
            let m = Matrix::<Q>::from_i64(&[rows[0].clone(), rows[1].clone(), e1.clone(), e2.clone()]);
            if m.rank() == 4 {
                rows.push(e1);
                rows.push(e2);
                break 'outer;
            }
        }
    }
    let m = Matrix::<Q>::from_i64(&rows);
    let inv = m.inverse().ok_or(HyperError::Geom(proj_geom::GeomError::DependentPlanes))?;
    let ring = f.poly().vars().clone();
    let g = MultiPoly::<Q>::gens(&ring);
    let new: Vec<MultiPoly<Q>> = f.coords().iter().map(|&i| g[i].clone()).collect();
    let names: Vec<String> = f.coords().iter().map(|&i| ring[i].clone()).collect();
    let images: Vec<(&str, MultiPoly<Q>)> = (0..4)
        .map(|r| {
            let e = (0..4).fold(MultiPoly::zero_in(&ring), |acc, c| acc + new[c].scale(&inv[(r, c)]));
            (names[r].as_str(), e)
        })
        .collect();
    Ok(f.poly().subst_some(&images)?)
}

pub fn residual_conic_tangency(f: &Form<Q>, h1: &[i64; 4], h2: &[i64; 4]) -> Result<TangencyCondition, HyperError> {
    let l = LineP3::<Q>::from_planes(&ProjPlane::from_i64(h1), &ProjPlane::from_i64(h2))?;
    if !contains_line(f, &l) {
        return Err(HyperError::LineNotOnSurface);
    }
    let g = adapted_coordinates(f, h1, h2)?;
    let ring = g.vars().clone();
    let c = f.coords();
    let (xi, yi, zi, wi) = (c[0], c[1], c[2], c[3]);
    let mut a_res = MultiPoly::zero_in(&ring);
    let mut b_res = MultiPoly::zero_in(&ring);
    for (e, coef) in g.terms() {
        // restrictions to ℓ = {X = Y = 0} of A = (X-part)/X and B = (Y-part)/Y
        if e[xi] == 1 && e[yi] == 0 {
            let mut ne = e.clone();
            ne[xi] = 0;
            a_res = a_res + MultiPoly::monomial(&ring, ne, coef.clone());
        } else if e[xi] == 0 && e[yi] == 1 {
            let mut ne = e.clone();
            ne[yi] = 0;
            b_res = b_res + MultiPoly::monomial(&ring, ne, coef.clone());
        }
    }
    let binary = |p: &MultiPoly<Q>, k: u16| -> MultiPoly<Q> {
        let terms = p
            .terms()
            .filter(|(e, _)| e[zi] == k && e[wi] == 3 - k)
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[zi] = 0;
                ne[wi] = 0;
                (ne, c.clone())
            });
        MultiPoly::from_terms(&ring, terms)
    };
    let ak: Vec<MultiPoly<Q>> = (0..4).map(|k| binary(&a_res, k)).collect();
    let bk: Vec<MultiPoly<Q>> = (0..4).map(|k| binary(&b_res, k)).collect();
    let k0 = (0..4).find(|&k| !ak[k].is_zero_poly() || !bk[k].is_zero_poly()).unwrap_or(0);
    let consistent = (0..4).all(|k| {
        (0..4).all(|m| (ak[k].clone() * bk[m].clone() - ak[m].clone() * bk[k].clone()).is_zero_poly())
    });
    Ok(TangencyCondition { u_coeff: -bk[k0].clone(), v_coeff: ak[k0].clone(), consistent })
}

/// Residual conic of a concrete member in the plane V(u·h1 + v·h2) through a base line.
/// Returns the conic (in the adapted coordinates) and whether it meets the line in two
/// distinct points.
pub fn residual_conic(f: &Form<Q>, h1: &[i64; 4], h2: &[i64; 4], u: Q, v: Q) -> Result<(MultiPoly<Q>, bool), HyperError> {
    let g = adapted_coordinates(f, h1, h2)?;
    let ring = g.vars().clone();
    let gens = MultiPoly::<Q>::gens(&ring);
    let c = f.coords();
    let (xi, yi, zi, wi) = (c[0], c[1], c[2], c[3]);
    let zero = MultiPoly::zero_in(&ring);
    // eliminate one of X, Y on the plane uX + vY = 0; the other is the line equation s
    let (restricted, s) = if !exact_arith::Ring::is_zero(&v) {
        let y = gens[xi].scale(&(-u / v));
        (g.subst_some(&[(ring[yi].as_str(), y)])?, gens[xi].clone())
    } else {
        (g.subst_some(&[(ring[xi].as_str(), zero.clone())])?, gens[yi].clone())
    };
    let conic = restricted
        .div_exact_poly(&(s.clone() * s.clone()))
        .ok_or(HyperError::Arith(exact_arith::ArithError::Inexact))?;
    let on_line = conic.subst_some(&[(ring[if s == gens[xi] { xi } else { yi }].as_str(), zero)])?;
    let e2 = |a: u16, b: u16| {
        let mut e = vec![0u16; ring.len()];
        e[zi] = a;
        e[wi] = b;
        on_line.coeff(&e)
    };
    let (p, qq, r) = (e2(2, 0), e2(1, 1), e2(0, 2));
    let disc = qq.clone() * qq - q(4) * p * r;
    Ok((conic, !exact_arith::Ring::is_zero(&disc)))
}

/// Rank of the evaluation matrix of plane quartic monomials at the projections of
/// `points` from `center`.
pub fn projected_points_quartic_rank(points: &[ProjPoint<Q>], center: &ProjPoint<Q>) -> Result<usize, HyperError> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let m = Matrix::from_rows(vec![points[i].coords().to_vec(), points[j].coords().to_vec(), center.coords().to_vec()])?;
            if m.rank() < 3 {
                return Err(HyperError::CenterOnConnectingLine);
            }
        }
    }
    let proj = Matrix::from_rows(Matrix::from_rows(vec![center.coords().to_vec()])?.kernel())?;
    let monos = quartic_monomials(3);
    let imgs: Vec<Vec<Q>> = points.iter().map(|p| proj.mul_vec(p.coords()).unwrap()).collect();
    let m = Matrix::from_fn(points.len(), monos.len(), |i, j| {
        monos[j].iter().enumerate().fold(q(1), |acc, (k, &e)| acc * exact_arith::Ring::pow(&imgs[i][k], e as u32))
    });
    Ok(m.rank())
}

/// The 12 singular points together with the 12 vertices of the three tetrahedra.
pub fn twenty_four_points() -> Vec<ProjPoint<Q>> {
    SINGULAR_POINTS.iter().chain(VERTICES.iter()).map(|p| ProjPoint::from_i64(p)).collect()
}

pub fn projected_24_points_quartic_rank(center: &ProjPoint<Q>) -> Result<usize, HyperError> {
    projected_points_quartic_rank(&twenty_four_points(), center)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_singular_symbolically() {
        let f = desmic_pencil_symbolic();
        for p in SINGULAR_POINTS {
            let pt: Vec<Q> = p.iter().map(|&x| q(x)).collect();
            let r = f.singular_at(&pt);
            assert!(r.singular, "{p:?}");
            assert!(f.node_check(&pt).unwrap().is_node());
        }
    }

    #[test]
    fn base_lines_lie_on_every_member() {
        let f = desmic_pencil_symbolic();
        for l in base_lines::<Q>() {
            assert!(contains_line(&f, &l));
        }
        let generic = LineP3::from_points(ProjPoint::from_i64(&[1, 2, 3, 4]), ProjPoint::from_i64(&[0, 1, -1, 2])).unwrap();
        assert!(!contains_line(&f, &generic));
        let inc = node_line_incidence();
        assert!(inc.iter().all(|l| l.len() == 3));
        assert!((0..12).all(|k| inc.iter().filter(|l| l.contains(&k)).count() == 4));
    }

    #[test]
    fn special_member_is_four_planes() {
        // a = b: every listed point is singular but the member splits into planes
        let f = desmic_pencil(q(1), q(1), q(-2));
        let r = f.poly().vars().clone();
        let planes = parse_poly(&r, "3(x^2-z^2)(y^2-w^2)", &[]).unwrap();
        assert_eq!(f.poly(), &planes);
        for p in SINGULAR_POINTS {
            let pt: Vec<Q> = p.iter().map(|&x| q(x)).collect();
            assert!(f.singular_at(&pt).singular);
            assert!(!f.node_check(&pt).unwrap().is_node());
        }
    }

    #[test]
    fn concrete_member_nodes() {
        let f = desmic_pencil(q(1), q(2), q(-3));
        for p in SINGULAR_POINTS {
            let pt: Vec<Q> = p.iter().map(|&x| q(x)).collect();
            assert!(f.singular_at(&pt).singular);
            assert!(f.node_check(&pt).unwrap().is_node());
        }
        assert!(!f.singular_at(&[q(1), q(2), q(3), q(4)]).singular);
    }

    #[test]
    fn printed_tangency_line_is_not_on_the_surface() {
        let f = desmic_pencil_symbolic();
        assert!(matches!(
            residual_conic_tangency(&f, &[1, 1, 0, 0], &[0, 0, 1, 1]),
            Err(HyperError::LineNotOnSurface)
        ));
        let t = residual_conic_tangency(&f, &[1, 1, 0, 0], &[1, 0, 0, 1]).unwrap();
        assert!(t.consistent);
        let r = f.poly().vars().clone();
        // u(b - c) + v(a - c) with c = -a - b
        let cu = parse_poly(&r, "a+2b", &[]).unwrap();
        let cv = parse_poly(&r, "2a+b", &[]).unwrap();
        assert!(t.proportional_to(&cu, &cv));
    }

    #[test]
    fn projected_points_lie_on_a_quartic() {
        let rank = projected_24_points_quartic_rank(&ProjPoint::from_i64(&[1, 2, 3, 7])).unwrap();
        assert!(rank <= 14, "rank {rank}");
        let random: Vec<ProjPoint<Q>> = (0..24i64)
            .map(|k| ProjPoint::from_i64(&[1, k, k * k % 29 + 1, (k * k * k + 5 * k) % 31 - 7]))
            .collect();
        assert_eq!(projected_points_quartic_rank(&random, &ProjPoint::from_i64(&[1, 2, 3, 7])).unwrap(), 15);
        // [1,1,1,1] and [0,0,0,1] span a line through [1,1,1,2]
        assert!(matches!(
            projected_24_points_quartic_rank(&ProjPoint::from_i64(&[1, 1, 1, 2])),
            Err(HyperError::CenterOnConnectingLine)
        ));
    }
}
