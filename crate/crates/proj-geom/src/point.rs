use std::fmt;

use exact_arith::{Field, MultiPoly, Vars};

use crate::error::GeomError;

/// Point of projective space given by homogeneous coordinates. Equality is up to scale.
#[derive(Clone, Debug)]
pub struct ProjPoint<F> {
    coords: Vec<F>,
}

impl<F: Field> ProjPoint<F> {
    pub fn new(coords: Vec<F>) -> Result<Self, GeomError> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(GeomError::ZeroVector);
        }
        Ok(ProjPoint { coords })
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| F::from_i64(x)).collect()).expect("nonzero point")
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Representative with first nonzero coordinate equal to one.
    pub fn normalized(&self) -> Vec<F> {
        let lead = self.coords.iter().find(|c| !c.is_zero()).unwrap();
        let inv = lead.inv().unwrap();
        self.coords.iter().map(|c| c.clone() * inv.clone()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<ProjPoint<G>, GeomError> {
        ProjPoint::new(self.coords.iter().map(f).collect())
    }

    /// Evaluate a polynomial in matching variables at this representative.
    pub fn eval(&self, f: &MultiPoly<F>) -> F {
        f.eval(&self.coords).expect("arity")
    }
}

impl<F: Field> PartialEq for ProjPoint<F> {
    fn eq(&self, o: &Self) -> bool {
        if self.coords.len() != o.coords.len() {
            return false;
        }
        let n = self.coords.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                self.coords[i].clone() * o.coords[j].clone() == self.coords[j].clone() * o.coords[i].clone()
            })
        })
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", c.join(","))
    }
}

/// Hyperplane V(Σ c_i x_i).
#[derive(Clone, Debug)]
pub struct ProjPlane<F> {
    coeffs: Vec<F>,
}

impl<F: Field> ProjPlane<F> {
    pub fn new(coeffs: Vec<F>) -> Result<Self, GeomError> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(GeomError::ZeroVector);
        }
        Ok(ProjPlane { coeffs })
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| F::from_i64(x)).collect()).expect("nonzero plane")
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn eval(&self, p: &ProjPoint<F>) -> F {
        self.coeffs
            .iter()
            .zip(p.coords())
            .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn contains(&self, p: &ProjPoint<F>) -> bool {
        self.eval(p).is_zero()
    }

    pub fn linear_form(&self, vars: &Vars) -> MultiPoly<F> {
        let gens = MultiPoly::gens(vars);
        self.coeffs
            .iter()
            .zip(gens)
            .fold(MultiPoly::zero_in(vars), |acc, (c, g)| acc + g.scale(c))
    }
}

impl<F: Field> PartialEq for ProjPlane<F> {
    fn eq(&self, o: &Self) -> bool {
        ProjPoint { coords: self.coeffs.clone() } == ProjPoint { coords: o.coeffs.clone() }
    }
}

impl<F: Field> fmt::Display for ProjPlane<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(|x| x.to_string()).collect();
        write!(f, "V({})", c.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::{q, Q};

    #[test]
    fn equality_up_to_scale() {
        let a = ProjPoint::<Q>::from_i64(&[1, 2, 0, -1]);
        let b = ProjPoint::<Q>::from_i64(&[-3, -6, 0, 3]);
        assert_eq!(a, b);
        assert_ne!(a, ProjPoint::from_i64(&[1, 2, 0, 1]));
        assert!(ProjPoint::<Q>::new(vec![q(0); 4]).is_err());
    }
}
