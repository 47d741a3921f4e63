use std::collections::BTreeMap;

use exact_arith::{parse_poly, q, vars, Field, Matrix, MultiPoly, Q};
use proj_geom::LineP3;

use crate::complex::{plucker_complex, plucker_ring};
use crate::error::ComplexError;

/// A net of quadrics in x, y, z, w.
pub type Net<F> = [MultiPoly<F>; 3];

fn net_from(srcs: [&str; 3]) -> Net<Q> {
    let r = vars(&["x", "y", "z", "w"]);
    srcs.map(|s| parse_poly(&r, s, &[]).unwrap())
}

/// t1(xy+zw) + t2(xz+yw) + t3(xw+yz).
pub fn printed_net() -> Net<Q> {
    net_from(["x y + z w", "x z + y w", "x w + y z"])
}

pub fn nets() -> [Net<Q>; 3] {
    [
        net_from(["(x-y)(z+w)", "(x-z)(y+w)", "(x-w)(y+z)"]),
        net_from(["(x-y)(z-w)", "(x-z)(y-w)", "(x+w)(y+z)"]),
        net_from(["x^2-y^2", "x^2-z^2", "x^2-w^2"]),
    ]
}

fn check_net<F: Field>(net: &Net<F>) -> Result<(), ComplexError> {
    let mut keys: Vec<Vec<u16>> = net.iter().flat_map(|p| p.terms().map(|(e, _)| e.clone())).collect();
    keys.sort();
    keys.dedup();
    let m = Matrix::from_fn(3, keys.len(), |i, j| net[i].coeff(&keys[j]));
    if m.rank() < 3 {
        return Err(ComplexError::DegenerateNet);
    }
    Ok(())
}

/// Rows: coefficients of u², v², uv in the restriction of each quadric to the line a·u + b·v.
pub fn montesano_matrix<F: Field>(net: &Net<F>, a: &[F], b: &[F]) -> Result<Matrix<F>, ComplexError> {
    check_net(net)?;
    let mut m = Matrix::zeros(3, 3);
    for (j, quad) in net.iter().enumerate() {
        let polar = |u: &[F], v: &[F]| -> F {
            let mut s = F::zero();
            for (e, c) in quad.terms() {
                let idx: Vec<usize> = e.iter().enumerate().flat_map(|(k, &n)| std::iter::repeat(k).take(n as usize)).collect();
                s = s + c.clone() * (u[idx[0]].clone() * v[idx[1]].clone() + u[idx[1]].clone() * v[idx[0]].clone());
            }
            s
        };
        let two = F::from_i64(2);
        m[(0, j)] = polar(a, a).div(&two).unwrap();
        m[(1, j)] = polar(b, b).div(&two).unwrap();
        m[(2, j)] = polar(a, b);
    }
    Ok(m)
}

/// Whether some quadric of the net contains the line.
pub fn montesano_condition<F: Field>(net: &Net<F>, line: &LineP3<F>) -> Result<bool, ComplexError> {
    let (a, b) = line.points();
    Ok(montesano_matrix(net, a.coords(), b.coords())?.det()?.is_zero())
}

/// The determinant as a polynomial in a1..a4, b1..b4.
pub fn montesano_determinant(net: &Net<Q>) -> Result<MultiPoly<Q>, ComplexError> {
    check_net(net)?;
    let r = vars(&["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"]);
    let g = MultiPoly::<Q>::gens(&r);
    let a: Vec<MultiPoly<Q>> = g[..4].to_vec();
    let b: Vec<MultiPoly<Q>> = g[4..].to_vec();
    let mut m: Matrix<MultiPoly<Q>> = Matrix::from_fn(3, 3, |_, _| MultiPoly::zero_in(&r));
    for (j, quad) in net.iter().enumerate() {
        let on = |x: &[MultiPoly<Q>]| quad.subst_all(x).unwrap();
        let both: Vec<MultiPoly<Q>> = a.iter().zip(&b).map(|(x, y)| x.clone() + y.clone()).collect();
        let (qa, qb) = (on(&a), on(&b));
        m[(0, j)] = qa.clone();
        m[(1, j)] = qb.clone();
        m[(2, j)] = on(&both) - qa - qb;
    }
    Ok(m.det()?)
}

fn cubic_monomials() -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    for i in 0..6 {
        for j in i..6 {
            for k in j..6 {
                let mut e = vec![0u16; 6];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                out.push(e);
            }
        }
    }
    out
}

/// A cubic in Plücker coordinates whose pull-back to (a, b) is the Montesano determinant.
pub fn derived_plucker_cubic(net: &Net<Q>) -> Result<MultiPoly<Q>, ComplexError> {
    let det = montesano_determinant(net)?;
    let r = det.vars().clone();
    let g = MultiPoly::<Q>::gens(&r);
    let pij = |i: usize, j: usize| g[i].clone() * g[4 + j].clone() - g[j].clone() * g[4 + i].clone();
    let pl = [pij(0, 1), pij(0, 2), pij(0, 3), pij(1, 2), pij(1, 3), pij(2, 3)];
    let monos = cubic_monomials();
    let pulled: Vec<MultiPoly<Q>> = monos
        .iter()
        .map(|e| {
            e.iter().enumerate().fold(MultiPoly::constant_in(&r, q(1)), |acc, (k, &n)| acc * pl[k].pow_poly(n as u32))
        })
        .collect();
    let mut rows: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    for p in pulled.iter().chain(std::iter::once(&det)) {
        for (e, _) in p.terms() {
            let n = rows.len();
            rows.entry(e.clone()).or_insert(n);
        }
    }
    let keys: Vec<Vec<u16>> = rows.keys().cloned().collect();
    let m = Matrix::from_fn(keys.len(), monos.len(), |i, j| pulled[j].coeff(&keys[i]));
    let rhs: Vec<Q> = keys.iter().map(|k| det.coeff(k)).collect();
    let sol = m.solve(&rhs).ok_or_else(|| ComplexError::Identity("determinant is not a Plücker cubic".into()))?;
    let pr = plucker_ring();
    Ok(MultiPoly::from_terms(&pr, monos.into_iter().zip(sol)))
}

/// λ with c1 ≡ λ·c2 modulo the Plücker quadric (times linear forms), if one exists.
pub fn proportional_mod_plucker(c1: &MultiPoly<Q>, c2: &MultiPoly<Q>) -> Option<Q> {
    let pr = plucker_ring();
    let quad = plucker_complex::<Q>().quadric;
    let g = MultiPoly::<Q>::gens(&pr);
    let mut cols: Vec<MultiPoly<Q>> = vec![c2.clone()];
    cols.extend(g.iter().map(|x| quad.clone() * x.clone()));
    let monos = cubic_monomials();
    let m = Matrix::from_fn(monos.len(), cols.len(), |i, j| cols[j].coeff(&monos[i]));
    let rhs: Vec<Q> = monos.iter().map(|e| c1.coeff(e)).collect();
    let sol = m.solve(&rhs)?;
    if exact_arith::Ring::is_zero(&sol[0]) {
        None
    } else {
        Some(sol[0].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proj_geom::ProjPoint;

    #[test]
    fn printed_net_gives_printed_cubic() {
        let c = derived_plucker_cubic(&printed_net()).unwrap();
        let printed = plucker_complex::<Q>().cubic;
        assert!(proportional_mod_plucker(&c, &printed).is_some());
    }

    #[test]
    fn three_nets_give_one_complex() {
        let printed = plucker_complex::<Q>().cubic;
        for net in nets() {
            let c = derived_plucker_cubic(&net).unwrap();
            assert!(proportional_mod_plucker(&c, &printed).is_some());
        }
    }

    #[test]
    fn edge_and_base_line_and_random_line() {
        let net = printed_net();
        let edge = LineP3::from_points(ProjPoint::from_i64(&[1, 0, 0, 0]), ProjPoint::from_i64(&[0, 1, 0, 0])).unwrap();
        assert!(montesano_condition(&net, &edge).unwrap());
        for l in hypersurface_lab::base_lines::<Q>() {
            assert!(montesano_condition(&net, &l).unwrap());
        }
        let random = LineP3::from_points(ProjPoint::from_i64(&[1, 2, 3, 5]), ProjPoint::from_i64(&[2, -1, 7, 1])).unwrap();
        assert!(!montesano_condition(&net, &random).unwrap());
        let bad = [net[0].clone(), net[1].clone(), net[0].clone() + net[1].clone()];
        assert!(matches!(montesano_condition(&bad, &random), Err(ComplexError::DegenerateNet)));
    }
}
