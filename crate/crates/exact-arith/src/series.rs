use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ArithError;
use crate::poly::{MultiPoly, Vars};
use crate::ring::{Field, Ring};

pub const DEFAULT_TRUNCATION: u32 = 8;

/// Multivariate power series with all terms of total degree > N discarded.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeriesTrunc<F: Ring> {
    poly: MultiPoly<F>,
    n: u32,
}

impl<F: Ring> PowerSeriesTrunc<F> {
    pub fn new(poly: MultiPoly<F>, n: u32) -> Self {
        PowerSeriesTrunc { poly: poly.truncate(n), n }
    }

    pub fn from_poly(poly: MultiPoly<F>) -> Self {
        Self::new(poly, DEFAULT_TRUNCATION)
    }

    pub fn var(vars: &Vars, i: usize, n: u32) -> Self {
        Self::new(MultiPoly::var_index(vars, i), n)
    }

    pub fn poly(&self) -> &MultiPoly<F> {
        &self.poly
    }

    pub fn truncation(&self) -> u32 {
        self.n
    }

    pub fn vars(&self) -> &Vars {
        self.poly.vars()
    }

    pub fn order(&self) -> Option<u32> {
        self.poly.min_degree()
    }

    pub fn homogeneous_part(&self, d: u32) -> MultiPoly<F> {
        self.poly.homogeneous_part(d)
    }

    /// Substitute series with zero constant term for the variables.
    pub fn subst(&self, images: &[PowerSeriesTrunc<F>]) -> Result<Self, ArithError> {
        if images.iter().any(|s| !s.poly.homogeneous_part(0).is_zero_poly()) {
            return Err(ArithError::Dimension("substituted series must have zero constant term".into()));
        }
        if images.len() != self.poly.nvars() {
            return Err(ArithError::ArityMismatch { expected: self.poly.nvars(), got: images.len() });
        }
        let n = images.iter().map(|s| s.n).chain([self.n]).min().unwrap_or(self.n);
        let target = images.first().map(|s| s.vars().clone()).unwrap_or_else(|| self.vars().clone());
        let mut out = MultiPoly::zero_in(&target);
        for (e, c) in self.poly.terms() {
            let mut t = MultiPoly::constant_in(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = (t * images[i].poly.clone()).truncate(n);
                }
            }
            out = out + t;
        }
        Ok(PowerSeriesTrunc { poly: out, n })
    }
}

impl<F: Field> PowerSeriesTrunc<F> {
    /// Multiplicative inverse of a unit (nonzero constant term).
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.poly.homogeneous_part(0).constant_value()?;
        let c0i = c0.inv()?;
        // 1/(c0(1 - m)) = c0^{-1} Σ m^k, m nilpotent mod degree N+1
        let one = MultiPoly::constant_in(self.vars(), F::one());
        let m = one.clone() - self.poly.scale(&c0i);
        let mut acc = one.clone();
        let mut pw = one;
        for _ in 0..self.n {
            pw = (pw * m.clone()).truncate(self.n);
            acc = acc + pw.clone();
        }
        Some(PowerSeriesTrunc { poly: acc.scale(&c0i), n: self.n })
    }
}

fn min_n<F: Ring>(a: &PowerSeriesTrunc<F>, b: &PowerSeriesTrunc<F>) -> u32 {
    a.n.min(b.n)
}

impl<F: Ring> Add for PowerSeriesTrunc<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = min_n(&self, &o);
        Self::new(self.poly + o.poly, n)
    }
}

impl<F: Ring> Sub for PowerSeriesTrunc<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let n = min_n(&self, &o);
        Self::new(self.poly - o.poly, n)
    }
}

impl<F: Ring> Neg for PowerSeriesTrunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        PowerSeriesTrunc { poly: -self.poly, n: self.n }
    }
}

impl<F: Ring> Mul for PowerSeriesTrunc<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let n = min_n(&self, &o);
        Self::new(self.poly * o.poly, n)
    }
}

impl<F: Ring> fmt::Display for PowerSeriesTrunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self.poly, self.n + 1)
    }
}

impl<F: Ring> PowerSeriesTrunc<F> {
    pub fn pow_series(self, e: u32) -> Self {
        let mut acc = PowerSeriesTrunc::new(MultiPoly::constant_in(self.vars(), F::one()), self.n);
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;
    use crate::rational::{q, Q};

    #[test]
    fn truncation_and_inverse() {
        let r = vars(&["u", "v", "t"]);
        let t = PowerSeriesTrunc::<Q>::var(&r, 2, 8);
        assert!(t.clone().pow_series(9).poly().is_zero_poly());
        let one = PowerSeriesTrunc::new(MultiPoly::constant_in(&r, q(1)), 8);
        let s = one.clone() - t.clone();
        let inv = s.inverse().unwrap();
        assert_eq!(s * inv.clone(), one);
        assert_eq!(inv.poly().coeff(&[0, 0, 8]), q(1));
    }

    #[test]
    fn substitution_composes() {
        let r = vars(&["u", "v", "t"]);
        let u = PowerSeriesTrunc::<Q>::var(&r, 0, 4);
        let v = PowerSeriesTrunc::<Q>::var(&r, 1, 4);
        let t = PowerSeriesTrunc::<Q>::var(&r, 2, 4);
        let f = u.clone() * v.clone() + t.clone().pow_series(3);
        let g = f.subst(&[u.clone() - t.clone() * t.clone(), v.clone(), t.clone()]).unwrap();
        let expect = u * v.clone() - t.clone() * t.clone() * v + t.clone().pow_series(3);
        assert_eq!(g, expect);
    }
}
