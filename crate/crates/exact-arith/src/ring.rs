use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Commutative ring with identity. Elements are immutable values.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
    /// 0 for characteristic zero.
    fn characteristic() -> u64;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Integral domain with exact division when the quotient exists.
pub trait Domain: Ring {
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn try_sqrt(&self) -> Option<Self> {
        None
    }

    /// Canonical square root of -1 when the field has one and characteristic is not 2.
    fn imag_unit() -> Option<Self> {
        if Self::characteristic() == 2 {
            return None;
        }
        (-Self::one()).try_sqrt()
    }

    /// All elements, for small finite fields.
    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

impl<F: Field> Domain for F {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
}

/// Reduction of scalars to Z/p with a chosen image of i.
pub trait ModP {
    fn mod_p(&self, p: u64, i_image: Option<u64>) -> Option<u64>;
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut base = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    Some(pow_mod(a, p - 2, p))
}

/// Smallest square root of -1 modulo an odd prime p ≡ 1 mod 4.
pub fn sqrt_minus_one_mod(p: u64) -> Option<u64> {
    if p % 4 != 1 {
        return None;
    }
    (1..p).find(|&x| (x as u128 * x as u128 % p as u128) as u64 == p - 1)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
