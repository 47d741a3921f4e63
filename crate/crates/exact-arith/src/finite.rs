use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::{pow_mod, sqrt_minus_one_mod, Field, ModP, Ring};

/// Element of the prime field Z/P. The modulus is part of the type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

pub type F2 = Fp<2>;
pub type F13 = Fp<13>;
pub type F17 = Fp<17>;

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn characteristic() -> u64 {
        P
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(pow_mod(self.0, P - 2, P)))
        }
    }

    fn try_sqrt(&self) -> Option<Self> {
        if self.0 == 0 || P == 2 {
            return Some(*self);
        }
        if pow_mod(self.0, (P - 1) / 2, P) != 1 {
            return None;
        }
        // Tonelli-Shanks; returns the smaller of the two roots
        let (mut qv, mut s) = (P - 1, 0u32);
        while qv % 2 == 0 {
            qv /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while pow_mod(z, (P - 1) / 2, P) != P - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow_mod(z, qv, P);
        let mut t = pow_mod(self.0, qv, P);
        let mut r = pow_mod(self.0, (qv + 1) / 2, P);
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = (tt as u128 * tt as u128 % P as u128) as u64;
                i += 1;
            }
            let b = pow_mod(c, 1u64 << (m - i - 1), P);
            m = i;
            c = (b as u128 * b as u128 % P as u128) as u64;
            t = (t as u128 * c as u128 % P as u128) as u64;
            r = (r as u128 * b as u128 % P as u128) as u64;
        }
        Some(Fp(r.min(P - r)))
    }

    fn imag_unit() -> Option<Self> {
        sqrt_minus_one_mod(P).map(Fp)
    }

    fn elements() -> Option<Vec<Self>> {
        if P <= 1 << 16 {
            Some((0..P).map(Fp).collect())
        } else {
            None
        }
    }
}

impl<const P: u64> ModP for Fp<P> {
    fn mod_p(&self, p: u64, _i: Option<u64>) -> Option<u64> {
        if p == P {
            Some(self.0)
        } else {
            None
        }
    }
}

/// F₄ = F₂[ω]/(ω²+ω+1); stored as bits (a, b) for a + b·ω.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const OMEGA: F4 = F4(2);
    pub const OMEGA2: F4 = F4(3);

    pub fn from_bits(a: u8, b: u8) -> Self {
        F4((a & 1) | ((b & 1) << 1))
    }

    pub fn bits(self) -> (u8, u8) {
        (self.0 & 1, (self.0 >> 1) & 1)
    }

    pub fn all() -> [F4; 4] {
        [F4(0), F4(1), F4(2), F4(3)]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w^2",
        };
        write!(f, "{s}")
    }
}

impl Add for F4 {
    type Output = F4;
    fn add(self, o: F4) -> F4 {
        F4(self.0 ^ o.0)
    }
}

impl Sub for F4 {
    type Output = F4;
    fn sub(self, o: F4) -> F4 {
        F4(self.0 ^ o.0)
    }
}

impl Neg for F4 {
    type Output = F4;
    fn neg(self) -> F4 {
        self
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, o: F4) -> F4 {
        let (a, b) = self.bits();
        let (c, d) = o.bits();
        // (a+bω)(c+dω) = ac+bd + (ad+bc+bd)ω
        F4::from_bits((a & c) ^ (b & d), (a & d) ^ (b & c) ^ (b & d))
    }
}

impl Ring for F4 {
    fn zero() -> Self {
        F4(0)
    }
    fn one() -> Self {
        F4(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(n: i64) -> Self {
        F4((n.rem_euclid(2)) as u8)
    }
    fn characteristic() -> u64 {
        2
    }
}

impl Field for F4 {
    fn inv(&self) -> Option<Self> {
        match self.0 {
            0 => None,
            1 => Some(F4(1)),
            2 => Some(F4(3)),
            _ => Some(F4(2)),
        }
    }

    fn try_sqrt(&self) -> Option<Self> {
        // Frobenius is bijective: sqrt(x) = x^2
        Some(*self * *self)
    }

    fn elements() -> Option<Vec<Self>> {
        Some(F4::all().to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_relations() {
        let w = F4::OMEGA;
        assert_eq!(w * w, w + F4::ONE);
        assert_eq!(w * w * w, F4::ONE);
        for x in F4::all() {
            if x != F4::ZERO {
                assert_eq!(x * x.inv().unwrap(), F4::ONE);
            }
            let s = x.try_sqrt().unwrap();
            assert_eq!(s * s, x);
        }
    }

    #[test]
    fn prime_field_basics() {
        let a = Fp::<13>::new(-1);
        assert_eq!(a.value(), 12);
        assert_eq!(Fp::<13>::imag_unit(), Some(Fp::<13>::new(5)));
        assert_eq!(Fp::<17>::imag_unit(), Some(Fp::<17>::new(4)));
        assert_eq!(Fp::<7>::imag_unit(), None);
        for v in 1..13 {
            let x = Fp::<13>::new(v);
            assert_eq!(x * x.inv().unwrap(), Fp::one());
            let sq = x * x;
            let r = sq.try_sqrt().unwrap();
            assert_eq!(r * r, sq);
        }
        assert!(Fp::<13>::new(2).try_sqrt().is_none());
    }
}
