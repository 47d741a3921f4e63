use exact_arith::{Field, Matrix};

use crate::error::GeomError;
use crate::point::{ProjPlane, ProjPoint};

/// Involution fixing the plane `axis` pointwise and the point `center`:
/// M = (a·c) I - 2 c aᵀ, so M² = (a·c)² I.
pub fn harmonic_homology<F: Field>(axis: &ProjPlane<F>, center: &ProjPoint<F>) -> Result<Matrix<F>, GeomError> {
    if F::characteristic() == 2 {
        return Err(GeomError::CharTwo);
    }
    let a = axis.coeffs();
    let c = center.coords();
    if a.len() != c.len() {
        return Err(GeomError::Arity(a.len()));
    }
    let ac = axis.eval(center);
    if ac.is_zero() {
        return Err(GeomError::CenterOnAxis);
    }
    let n = a.len();
    let two = F::from_i64(2);
    Ok(Matrix::from_fn(n, n, |i, j| {
        let d = if i == j { ac.clone() } else { F::zero() };
        d - two.clone() * c[i].clone() * a[j].clone()
    }))
}

/// Sign-change involution fixing two opposite edges of V(xyzw) pointwise.
/// An edge is named by the pair of coordinates vanishing on it; coordinates of
/// `e1` keep their sign, those of `e2` flip.
pub fn edge_involution<F: Field>(e1: [usize; 2], e2: [usize; 2]) -> Result<Matrix<F>, GeomError> {
    if F::characteristic() == 2 {
        return Err(GeomError::CharTwo);
    }
    let mut seen = [false; 4];
    for &i in e1.iter().chain(e2.iter()) {
        if i > 3 || seen[i] {
            return Err(GeomError::NotOpposite);
        }
        seen[i] = true;
    }
    Ok(Matrix::from_fn(4, 4, |i, j| {
        if i != j {
            F::zero()
        } else if e2.contains(&i) {
            -F::one()
        } else {
            F::one()
        }
    }))
}

pub fn apply<F: Field>(m: &Matrix<F>, p: &ProjPoint<F>) -> Result<ProjPoint<F>, GeomError> {
    let v = m.mul_vec(p.coords()).map_err(|_| GeomError::Arity(m.ncols()))?;
    ProjPoint::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::{q, Q};

    #[test]
    fn coordinate_homology() {
        let m = harmonic_homology(&ProjPlane::<Q>::from_i64(&[1, 0, 0, 0]), &ProjPoint::from_i64(&[1, 0, 0, 0])).unwrap();
        assert_eq!(m, Matrix::from_i64(&[vec![-1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]));
        assert_eq!(
            harmonic_homology(&ProjPlane::<Q>::from_i64(&[1, 0, 0, 0]), &ProjPoint::from_i64(&[0, 1, 0, 0])),
            Err(GeomError::CenterOnAxis)
        );
    }

    #[test]
    fn homology_is_involutive() {
        let m = harmonic_homology(&ProjPlane::<Q>::from_i64(&[1, 2, -1, 3]), &ProjPoint::from_i64(&[2, 0, 4, 1])).unwrap();
        let sq = m.mul(&m).unwrap();
        let s = sq[(0, 0)].clone();
        assert_eq!(sq, Matrix::identity(4).scale(&s));
        assert_ne!(s, q(0));
    }

    #[test]
    fn edge_involution_fixes_edges() {
        let m = edge_involution::<Q>([0, 1], [2, 3]).unwrap();
        assert_eq!(m, Matrix::from_i64(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, -1, 0], vec![0, 0, 0, -1]]));
        for p in [[0, 0, 1, 3], [0, 0, 2, -1], [1, 4, 0, 0]] {
            let p = ProjPoint::<Q>::from_i64(&p);
            assert_eq!(apply(&m, &p).unwrap(), p);
        }
        assert_eq!(edge_involution::<Q>([0, 1], [1, 2]), Err(GeomError::NotOpposite));
    }
}
