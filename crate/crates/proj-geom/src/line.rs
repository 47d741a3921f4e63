use std::fmt;

use exact_arith::{Field, Matrix, MultiPoly, Vars};

use crate::error::GeomError;
use crate::point::{ProjPlane, ProjPoint};

/// Index pairs behind (p12, p13, p14, p23, p24, p34), zero-based.
pub const PLUCKER_INDEX: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Line of P^3 with two spanning points and cached Plücker coordinates.
#[derive(Clone, Debug)]
pub struct LineP3<F> {
    a: ProjPoint<F>,
    b: ProjPoint<F>,
    pl: Vec<F>,
}

pub fn plucker_from_points<F: Field>(a: &ProjPoint<F>, b: &ProjPoint<F>) -> Result<LineP3<F>, GeomError> {
    LineP3::from_points(a.clone(), b.clone())
}

impl<F: Field> LineP3<F> {
    pub fn from_points(a: ProjPoint<F>, b: ProjPoint<F>) -> Result<Self, GeomError> {
        if a.coords().len() != 4 || b.coords().len() != 4 {
            return Err(GeomError::Arity(4));
        }
        let (x, y) = (a.coords(), b.coords());
        let pl: Vec<F> = PLUCKER_INDEX
            .iter()
            .map(|&(i, j)| x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone())
            .collect();
        if pl.iter().all(|c| c.is_zero()) {
            return Err(GeomError::DependentPoints);
        }
        Ok(LineP3 { a, b, pl })
    }

    /// Intersection line of two planes.
    pub fn from_planes(h1: &ProjPlane<F>, h2: &ProjPlane<F>) -> Result<Self, GeomError> {
        let m = Matrix::from_rows(vec![h1.coeffs().to_vec(), h2.coeffs().to_vec()]).map_err(|_| GeomError::Arity(4))?;
        let k = m.kernel();
        if k.len() != 2 {
            return Err(GeomError::DependentPlanes);
        }
        Self::from_points(ProjPoint::new(k[0].clone())?, ProjPoint::new(k[1].clone())?)
    }

    pub fn points(&self) -> (&ProjPoint<F>, &ProjPoint<F>) {
        (&self.a, &self.b)
    }

    pub fn plucker(&self) -> &[F] {
        &self.pl
    }

    pub fn plucker_point(&self) -> ProjPoint<F> {
        ProjPoint::new(self.pl.clone()).unwrap()
    }

    pub fn klein(&self) -> Result<ProjPoint<F>, GeomError> {
        ProjPoint::new(klein_from_plucker(&self.pl)?)
    }

    pub fn contains(&self, p: &ProjPoint<F>) -> bool {
        let m = Matrix::from_rows(vec![self.a.coords().to_vec(), self.b.coords().to_vec(), p.coords().to_vec()])
            .unwrap();
        m.rank() == 2
    }

    pub fn lies_in(&self, h: &ProjPlane<F>) -> bool {
        h.contains(&self.a) && h.contains(&self.b)
    }

    /// The four coordinate forms u·a + v·b of a parametrization, in the ring `vars`
    /// using variables `u` and `v` (by index).
    pub fn parametrize(&self, vars: &Vars, u: usize, v: usize) -> Vec<MultiPoly<F>> {
        let uu = MultiPoly::var_index(vars, u);
        let vv = MultiPoly::var_index(vars, v);
        (0..4)
            .map(|k| uu.scale(&self.a.coords()[k]) + vv.scale(&self.b.coords()[k]))
            .collect()
    }
}

impl<F: Field> PartialEq for LineP3<F> {
    fn eq(&self, o: &Self) -> bool {
        self.plucker_point() == o.plucker_point()
    }
}

impl<F: Field> fmt::Display for LineP3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line{}", self.plucker_point())
    }
}

/// p12 p34 - p13 p24 + p14 p23 in the given six variables.
pub fn plucker_quadric<F: Field>(vars: &Vars) -> MultiPoly<F> {
    let x = MultiPoly::<F>::gens(vars);
    x[0].clone() * x[5].clone() - x[1].clone() * x[4].clone() + x[2].clone() * x[3].clone()
}

/// Klein coordinates (x1,x2,x3,y1,y2,y3) of a Plücker 6-tuple.
pub fn klein_from_plucker<F: Field>(p: &[F]) -> Result<Vec<F>, GeomError> {
    if p.len() != 6 {
        return Err(GeomError::Arity(6));
    }
    let i = F::imag_unit().ok_or(GeomError::NoImaginaryUnit)?;
    let (p12, p13, p14, p23, p24, p34) =
        (p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone(), p[4].clone(), p[5].clone());
    Ok(vec![
        p12.clone() + p34.clone(),
        p24.clone() - p13.clone(),
        p14.clone() + p23.clone(),
        i.clone() * (p34 - p12),
        i.clone() * (p24 + p13),
        i * (p23 - p14),
    ])
}

fn pl_index(i: usize, j: usize) -> (usize, bool) {
    let (lo, hi, neg) = if i < j { (i, j, false) } else { (j, i, true) };
    (PLUCKER_INDEX.iter().position(|&x| x == (lo, hi)).unwrap(), neg)
}

/// Linear form a_i p_jk - a_j p_ik + a_k p_ij on Plücker space.
fn alpha_relation<F: Field>(a: &[F], i: usize, j: usize, k: usize) -> Vec<F> {
    let mut f = vec![F::zero(); 6];
    for (c, (s, t), sign) in [(&a[i], (j, k), 1i64), (&a[j], (i, k), -1), (&a[k], (i, j), 1)] {
        let (idx, neg) = pl_index(s, t);
        let v = c.clone() * F::from_i64(if neg { -sign } else { sign });
        f[idx] = f[idx].clone() + v;
    }
    f
}

fn independent_three<F: Field>(cands: Vec<Vec<F>>) -> Vec<Vec<F>> {
    let mut out: Vec<Vec<F>> = Vec::new();
    for c in cands {
        let mut trial = out.clone();
        trial.push(c.clone());
        if Matrix::from_rows(trial).unwrap().rank() == out.len() + 1 {
            out.push(c);
        }
        if out.len() == 3 {
            break;
        }
    }
    out
}

/// Three Plücker linear forms cutting out the lines through `p`.
///
/// For a ≠ 0 these are -c p12 + b p13 - a p23, d p13 - c p14 + a p34, d p12 - b p14 + a p24.
pub fn alpha_plane<F: Field>(p: &ProjPoint<F>) -> Result<Vec<Vec<F>>, GeomError> {
    let a = p.coords();
    if a.len() != 4 {
        return Err(GeomError::Arity(4));
    }
    let neg = |v: Vec<F>| v.into_iter().map(|x| -x).collect::<Vec<F>>();
    let printed = vec![neg(alpha_relation(a, 0, 1, 2)), alpha_relation(a, 0, 2, 3), alpha_relation(a, 0, 1, 3)];
    if !a[0].is_zero() {
        return Ok(printed);
    }
    let mut cands = printed;
    cands.push(alpha_relation(a, 1, 2, 3));
    Ok(independent_three(cands))
}

/// Three Plücker linear forms cutting out the lines in the plane `h`,
/// chosen from the relations Σ_j h_j p_ij = 0.
pub fn beta_plane<F: Field>(h: &ProjPlane<F>) -> Result<Vec<Vec<F>>, GeomError> {
    let c = h.coeffs();
    if c.len() != 4 {
        return Err(GeomError::Arity(4));
    }
    let rel = |i: usize| {
        let mut f = vec![F::zero(); 6];
        for j in 0..4 {
            if j == i {
                continue;
            }
            let (idx, neg) = pl_index(i, j);
            let v = if neg { -c[j].clone() } else { c[j].clone() };
            f[idx] = f[idx].clone() + v;
        }
        f
    };
    Ok(independent_three((0..4).map(rel).collect()))
}
