use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::rational::{q, Q};
use crate::ring::{Field, ModP, Ring};

/// Gaussian rational a + b·i with i² = -1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QI {
    pub re: Q,
    pub im: Q,
}

impl QI {
    pub fn new(re: Q, im: Q) -> Self {
        QI { re, im }
    }

    pub fn int(re: i64, im: i64) -> Self {
        QI { re: q(re), im: q(im) }
    }

    pub fn i() -> Self {
        QI::int(0, 1)
    }

    pub fn conj(&self) -> Self {
        QI { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<Q> for QI {
    fn from(re: Q) -> Self {
        QI { re, im: <Q as Ring>::zero() }
    }
}

impl fmt::Display for QI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zr = Ring::is_zero(&self.re);
        let zi = Ring::is_zero(&self.im);
        match (zr, zi) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => write!(f, "({}+{}i)", self.re, self.im),
        }
    }
}

impl Add for QI {
    type Output = QI;
    fn add(self, o: QI) -> QI {
        QI { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for QI {
    type Output = QI;
    fn sub(self, o: QI) -> QI {
        QI { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for QI {
    type Output = QI;
    fn mul(self, o: QI) -> QI {
        QI {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for QI {
    type Output = QI;
    fn neg(self) -> QI {
        QI { re: -self.re, im: -self.im }
    }
}

impl Ring for QI {
    fn zero() -> Self {
        QI::int(0, 0)
    }
    fn one() -> Self {
        QI::int(1, 0)
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.re) && Ring::is_zero(&self.im)
    }
    fn from_i64(n: i64) -> Self {
        QI::int(n, 0)
    }
    fn characteristic() -> u64 {
        0
    }
}

impl Field for QI {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Ring::is_zero(&n) {
            return None;
        }
        let c = self.conj();
        Some(QI { re: c.re / n.clone(), im: c.im / n })
    }

    fn try_sqrt(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return Some(QI::zero());
        }
        // (x+iy)^2 = re + i·im: x^2 = (re + |z|)/2 with |z| = sqrt(norm)
        let m = self.norm().try_sqrt()?;
        let two: BigRational = q(2);
        let x2 = (self.re.clone() + m.clone()) / two.clone();
        if let Some(x) = x2.try_sqrt() {
            if !Ring::is_zero(&x) {
                let y = self.im.clone() / (two * x.clone());
                return Some(QI { re: x, im: y });
            }
        }
        let y2 = (m - self.re.clone()) / q(2);
        let y = y2.try_sqrt()?;
        if Ring::is_zero(&y) {
            return None;
        }
        let x = self.im.clone() / (q(2) * y.clone());
        Some(QI { re: x, im: y })
    }

    fn imag_unit() -> Option<Self> {
        Some(QI::i())
    }
}

impl ModP for QI {
    fn mod_p(&self, p: u64, i_image: Option<u64>) -> Option<u64> {
        let r = self.re.mod_p(p, None)?;
        if Ring::is_zero(&self.im) {
            return Some(r);
        }
        let i = i_image?;
        let m = self.im.mod_p(p, None)?;
        Some(((r as u128 + m as u128 * i as u128) % p as u128) as u64)
    }
}
