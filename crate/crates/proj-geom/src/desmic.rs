use exact_arith::{vars, Field, Matrix, MultiPoly, Vars};

use crate::error::GeomError;
use crate::involution::{apply, edge_involution, harmonic_homology};
use crate::point::{ProjPlane, ProjPoint};

/// The tetrahedra T = V(xyzw), T′ and T″ built from a point, with their face quartics.
#[derive(Clone, Debug)]
pub struct DesmicTriple<F: Field> {
    pub t_prime: Vec<ProjPoint<F>>,
    pub t_second: Vec<ProjPoint<F>>,
    /// Products of face equations of T, T′, T″ in x, y, z, w.
    pub quartics: [MultiPoly<F>; 3],
    /// Rank of the 3 × 35 coefficient matrix of the quartics.
    pub rank: usize,
    /// Coefficients λ with Σ λ_k quartic_k = 0 when rank is 2.
    pub relation: Option<Vec<F>>,
}

impl<F: Field> DesmicTriple<F> {
    pub fn in_one_pencil(&self) -> bool {
        self.rank == 2
    }
}

pub fn xyzw_ring() -> Vars {
    vars(&["x", "y", "z", "w"])
}

/// Product of the four face equations of the tetrahedron with vertices `v`.
pub fn face_quartic<F: Field>(v: &[ProjPoint<F>], ring: &Vars) -> Result<MultiPoly<F>, GeomError> {
    let mut acc = MultiPoly::constant_in(ring, F::one());
    for k in 0..4 {
        let rows: Vec<Vec<F>> = (0..4).filter(|&j| j != k).map(|j| v[j].coords().to_vec()).collect();
        let ker = Matrix::from_rows(rows).unwrap().kernel();
        if ker.len() != 1 {
            return Err(GeomError::DependentPoints);
        }
        acc = acc * ProjPlane::new(ker[0].clone())?.linear_form(ring);
    }
    Ok(acc)
}

/// Build T′ (images of P under the three edge involutions) and T″ (images under
/// the harmonic homologies in the faces of T) and test whether the three face
/// quartics span a pencil.
pub fn desmic_from_point<F: Field>(p: &ProjPoint<F>) -> Result<DesmicTriple<F>, GeomError> {
    if F::characteristic() == 2 {
        return Err(GeomError::CharTwo);
    }
    if p.coords().len() != 4 {
        return Err(GeomError::Arity(4));
    }
    if p.coords().iter().any(|c| c.is_zero()) {
        return Err(GeomError::PointOnFace);
    }
    let mut t_prime = vec![p.clone()];
    for (e1, e2) in [([0, 1], [2, 3]), ([0, 2], [1, 3]), ([0, 3], [1, 2])] {
        t_prime.push(apply(&edge_involution(e1, e2)?, p)?);
    }
    let mut t_second = Vec::new();
    for k in 0..4 {
        let mut e = vec![F::zero(); 4];
        e[k] = F::one();
        let h = harmonic_homology(&ProjPlane::new(e.clone())?, &ProjPoint::new(e)?)?;
        t_second.push(apply(&h, p)?);
    }
    let ring = xyzw_ring();
    let g = MultiPoly::<F>::gens(&ring);
    let t = g[0].clone() * g[1].clone() * g[2].clone() * g[3].clone();
    let quartics = [t, face_quartic(&t_prime, &ring)?, face_quartic(&t_second, &ring)?];
    let monos = quartic_monomials(4);
    let m = Matrix::from_fn(35, 3, |i, j| quartics[j].coeff(&monos[i]));
    let ker = m.kernel();
    let rank = 3 - ker.len();
    let relation = if ker.len() == 1 { Some(ker[0].clone()) } else { None };
    Ok(DesmicTriple { t_prime, t_second, quartics, rank, relation })
}

/// Exponent vectors of degree-4 monomials in n variables.
pub fn quartic_monomials(n: usize) -> Vec<Vec<u16>> {
    fn rec(n: usize, left: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 4, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::Q;

    fn pts(v: &[[i64; 4]]) -> Vec<ProjPoint<Q>> {
        v.iter().map(|c| ProjPoint::from_i64(c)).collect()
    }

    #[test]
    fn vertices_from_unit_point() {
        let d = desmic_from_point(&ProjPoint::<Q>::from_i64(&[1, 1, 1, 1])).unwrap();
        assert_eq!(d.t_prime, pts(&[[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]));
        assert_eq!(d.t_second, pts(&[[-1, 1, 1, 1], [1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]]));
        assert!(d.in_one_pencil());
    }

    #[test]
    fn general_point_gives_pencil() {
        let d = desmic_from_point(&ProjPoint::<Q>::from_i64(&[1, 2, 3, 5])).unwrap();
        assert_eq!(d.rank, 2);
        assert!(desmic_from_point(&ProjPoint::<Q>::from_i64(&[1, 1, 1, 0])).is_err());
    }

    #[test]
    fn monomial_count() {
        assert_eq!(quartic_monomials(4).len(), 35);
        assert_eq!(quartic_monomials(3).len(), 15);
    }
}
