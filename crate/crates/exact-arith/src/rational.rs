use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::{Domain, Field, ModP, Ring};

pub type Q = BigRational;
pub type Z = BigInt;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        q(n)
    }
    fn characteristic() -> u64 {
        0
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn try_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &n * &n == *self.numer() && &d * &d == *self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
}

impl ModP for BigRational {
    fn mod_p(&self, p: u64, _i: Option<u64>) -> Option<u64> {
        let pb = BigInt::from(p);
        let n = self.numer().mod_floor(&pb).to_u64()?;
        let d = self.denom().mod_floor(&pb).to_u64()?;
        let di = crate::ring::inv_mod(d, p)?;
        Some((n as u128 * di as u128 % p as u128) as u64)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn characteristic() -> u64 {
        0
    }
}

impl Domain for BigInt {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (qt, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Some(qt)
        } else {
            None
        }
    }
}

impl ModP for BigInt {
    fn mod_p(&self, p: u64, _i: Option<u64>) -> Option<u64> {
        self.mod_floor(&BigInt::from(p)).to_u64()
    }
}

/// Exact integer value of a rational, if it is one.
pub fn to_integer(x: &Q) -> Option<BigInt> {
    if x.is_integer() {
        Some(x.to_integer())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(qf(9, 4).try_sqrt(), Some(qf(3, 2)));
        assert_eq!(q(2).try_sqrt(), None);
        assert_eq!(q(-1).try_sqrt(), None);
        assert!(Q::imag_unit().is_none());
    }

    #[test]
    fn reduce_mod_p() {
        assert_eq!(qf(1, 2).mod_p(13, None), Some(7));
        assert_eq!(q(-1).mod_p(13, None), Some(12));
        assert_eq!(qf(1, 13).mod_p(13, None), None);
    }

    #[test]
    fn integer_exact_division() {
        assert_eq!(BigInt::from(12).div_exact(&BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(BigInt::from(12).div_exact(&BigInt::from(5)), None);
    }
}
