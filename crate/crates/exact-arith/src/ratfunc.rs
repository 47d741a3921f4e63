use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::MultiPoly;
use crate::ring::{Field, Ring};

/// Quotient of two polynomials. Equality is by cross-multiplication, so no gcd is needed.
#[derive(Clone, Debug)]
pub struct RatFunc<F: Field> {
    num: MultiPoly<F>,
    den: MultiPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: MultiPoly<F>, den: MultiPoly<F>) -> Option<Self> {
        if den.is_zero_poly() {
            return None;
        }
        let (_, c) = den.leading_term()?;
        let ci = c.inv()?;
        let den_m = den.scale(&ci);
        Some(RatFunc { num: num.scale(&ci), den: den_m })
    }

    pub fn from_poly(p: MultiPoly<F>) -> Self {
        RatFunc { num: p, den: MultiPoly::constant(F::one()) }
    }

    pub fn numer(&self) -> &MultiPoly<F> {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly<F> {
        &self.den
    }

    /// Reduce to a polynomial when the denominator divides the numerator.
    pub fn as_poly(&self) -> Option<MultiPoly<F>> {
        self.num.div_exact_poly(&self.den)
    }

    pub fn eval(&self, point: &[F]) -> Option<F> {
        let n = self.num.eval(point).ok()?;
        let d = self.den.eval(point).ok()?;
        n.div(&d)
    }
}

impl<F: Field> PartialEq for RatFunc<F> {
    fn eq(&self, o: &Self) -> bool {
        self.num.clone() * o.den.clone() == o.num.clone() * self.den.clone()
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return RatFunc { num: self.num + o.num, den: self.den };
        }
        RatFunc {
            num: self.num * o.den.clone() + o.num * self.den.clone(),
            den: self.den * o.den,
        }
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        RatFunc { num: self.num * o.num, den: self.den * o.den }
    }
}

impl<F: Field> Ring for RatFunc<F> {
    fn zero() -> Self {
        RatFunc::from_poly(MultiPoly::constant(F::zero()))
    }
    fn one() -> Self {
        RatFunc::from_poly(MultiPoly::constant(F::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero_poly()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_poly(MultiPoly::constant(F::from_i64(n)))
    }
    fn characteristic() -> u64 {
        F::characteristic()
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn inv(&self) -> Option<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;
    use crate::rational::{q, Q};

    #[test]
    fn cross_multiplication_equality() {
        let r = vars(&["t"]);
        let t = MultiPoly::<Q>::var(&r, "t").unwrap();
        let one = MultiPoly::constant_in(&r, q(1));
        let a = RatFunc::new(t.clone() * t.clone() - one.clone(), t.clone() - one.clone()).unwrap();
        let b = RatFunc::from_poly(t.clone() + one.clone());
        assert_eq!(a, b);
        assert_eq!(a.as_poly(), Some(t.clone() + one.clone()));
        let inv = a.inv().unwrap();
        assert_eq!(inv * b, RatFunc::one());
    }
}
