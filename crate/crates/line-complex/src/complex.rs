use exact_arith::{parse_poly, vars, Field, Matrix, MultiPoly, Vars, QI};

use crate::error::ComplexError;

pub const PLUCKER_NAMES: [&str; 6] = ["p12", "p13", "p14", "p23", "p24", "p34"];
pub const KLEIN_NAMES: [&str; 6] = ["x1", "x2", "x3", "y1", "y2", "y3"];

/// A quadric and a cubic in P⁵.
#[derive(Clone, Debug)]
pub struct CompleteIntersection35<F: Field> {
    pub quadric: MultiPoly<F>,
    pub cubic: MultiPoly<F>,
}

/// Node test result for a point of a (2,3) complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeReport {
    pub on_both: bool,
    pub jacobian_rank: usize,
    /// Rank of the Hessian of cubic - λ·quadric on the tangent space of the quadric.
    pub restricted_rank: Option<usize>,
}

impl NodeReport {
    pub fn is_node(&self) -> bool {
        self.on_both && self.jacobian_rank == 1 && self.restricted_rank == Some(4)
    }
}

impl<F: Field> CompleteIntersection35<F> {
    pub fn ring(&self) -> &Vars {
        self.quadric.vars()
    }

    pub fn contains(&self, p: &[F]) -> Result<bool, ComplexError> {
        Ok(self.quadric.eval(p)?.is_zero() && self.cubic.eval(p)?.is_zero())
    }

    pub fn node_report(&self, p: &[F]) -> Result<NodeReport, ComplexError> {
        let on_both = self.contains(p)?;
        let gq: Vec<F> = (0..6).map(|k| self.quadric.partial(k).eval(p)).collect::<Result<_, _>>()?;
        let gc: Vec<F> = (0..6).map(|k| self.cubic.partial(k).eval(p)).collect::<Result<_, _>>()?;
        let jac = Matrix::from_rows(vec![gq.clone(), gc.clone()])?;
        let jacobian_rank = jac.rank();
        if !on_both || jacobian_rank != 1 {
            return Ok(NodeReport { on_both, jacobian_rank, restricted_rank: None });
        }
        let k = gq.iter().position(|v| !v.is_zero()).ok_or(ComplexError::SingularQuadric)?;
        let lambda = gc[k].div(&gq[k]).unwrap();
        let h = Matrix::from_fn(6, 6, |i, j| {
            let c = self.cubic.partial(i).partial(j).eval(p).unwrap();
            let q = self.quadric.partial(i).partial(j).eval(p).unwrap();
            c - lambda.clone() * q
        });
        let basis = Matrix::from_rows(Matrix::from_rows(vec![gq])?.kernel())?;
        let restricted = basis.mul(&h)?.mul(&basis.transpose())?;
        Ok(NodeReport { on_both, jacobian_rank, restricted_rank: Some(restricted.rank()) })
    }

    /// Jacobian rank at p is at most one (p singular on the intersection).
    pub fn is_singular_at(&self, p: &[F]) -> Result<bool, ComplexError> {
        let r = self.node_report(p)?;
        Ok(r.on_both && r.jacobian_rank <= 1)
    }

    /// Whether the linear span of the rows of `basis` lies in both hypersurfaces.
    pub fn contains_subspace(&self, basis: &[Vec<F>]) -> Result<bool, ComplexError> {
        let names: Vec<String> = (0..basis.len()).map(|k| format!("s{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let r = vars(&refs);
        let s = MultiPoly::<F>::gens(&r);
        let images: Vec<MultiPoly<F>> = (0..6)
            .map(|j| {
                basis
                    .iter()
                    .zip(&s)
                    .fold(MultiPoly::zero_in(&r), |acc, (b, g)| acc + g.scale(&b[j]))
            })
            .collect();
        Ok(self.quadric.subst_all(&images)?.is_zero_poly() && self.cubic.subst_all(&images)?.is_zero_poly())
    }
}

pub fn plucker_ring() -> Vars {
    vars(&PLUCKER_NAMES)
}

pub fn klein_ring() -> Vars {
    vars(&KLEIN_NAMES)
}

/// The complex in Plücker coordinates: the Plücker quadric and the printed cubic.
pub fn plucker_complex<F: Field>() -> CompleteIntersection35<F> {
    let r = plucker_ring();
    CompleteIntersection35 {
        quadric: parse_poly(&r, "p12 p34 - p13 p24 + p14 p23", &[]).unwrap(),
        cubic: parse_poly(&r, "-p12 p13 p23 + p12 p14 p24 - p13 p14 p34 + p23 p24 p34", &[]).unwrap(),
    }
}

/// Σx² + Σy² = x1x2x3 + c·y1y2y3 = 0; c = i gives the complex in Klein coordinates.
pub fn klein_complex_with<F: Field>(c: F) -> CompleteIntersection35<F> {
    let r = klein_ring();
    CompleteIntersection35 {
        quadric: parse_poly(&r, "x1^2+x2^2+x3^2+y1^2+y2^2+y3^2", &[]).unwrap(),
        cubic: parse_poly(&r, "x1 x2 x3 + c y1 y2 y3", &[("c", c)]).unwrap(),
    }
}

pub fn klein_complex() -> CompleteIntersection35<QI> {
    klein_complex_with(QI::i())
}

/// The variant with i replaced by 1.
pub fn klein_complex_real() -> CompleteIntersection35<QI> {
    klein_complex_with(QI::int(1, 0))
}

/// Matrix of the Plücker-to-Klein change of coordinates (rows give x1..y3).
pub fn klein_matrix() -> Matrix<QI> {
    let o = QI::int(0, 0);
    let one = QI::int(1, 0);
    let m1 = QI::int(-1, 0);
    let i = QI::int(0, 1);
    let mi = QI::int(0, -1);
    Matrix::from_rows(vec![
        vec![one.clone(), o.clone(), o.clone(), o.clone(), o.clone(), one.clone()],
        vec![o.clone(), m1, o.clone(), o.clone(), one.clone(), o.clone()],
        vec![o.clone(), o.clone(), one.clone(), one, o.clone(), o.clone()],
        vec![mi.clone(), o.clone(), o.clone(), o.clone(), o.clone(), i.clone()],
        vec![o.clone(), i.clone(), o.clone(), o.clone(), i.clone(), o.clone()],
        vec![o.clone(), o.clone(), mi, i, o.clone(), o],
    ])
    .unwrap()
}

pub fn to_klein(p: &[QI]) -> Vec<QI> {
    klein_matrix().mul_vec(p).unwrap()
}
