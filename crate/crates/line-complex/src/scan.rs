use exact_arith::{is_prime, sqrt_minus_one_mod, ModP, MultiPoly, QI};
use rayon::prelude::*;

use crate::complex::CompleteIntersection35;
use crate::error::ComplexError;

/// Default upper bound on scanned primes.
pub const DEFAULT_PRIME_BOUND: u64 = 31;

/// A polynomial with coefficients reduced mod p.
#[derive(Clone, Debug)]
pub struct PolyModP {
    p: u64,
    terms: Vec<(Vec<u16>, u64)>,
}

impl PolyModP {
    pub fn reduce<R: ModP + exact_arith::Ring>(f: &MultiPoly<R>, p: u64, i_image: Option<u64>) -> Option<Self> {
        let terms = f
            .terms()
            .map(|(e, c)| c.mod_p(p, i_image).map(|v| (e.clone(), v)))
            .collect::<Option<Vec<_>>>()?;
        Some(PolyModP { p, terms: terms.into_iter().filter(|(_, c)| *c != 0).collect() })
    }

    pub fn eval(&self, x: &[u64]) -> u64 {
        let p = self.p;
        let mut s = 0u64;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (k, &n) in e.iter().enumerate() {
                for _ in 0..n {
                    t = t * x[k] % p;
                }
            }
            s = (s + t) % p;
        }
        s
    }
}

/// Singular points of a (2,3) complete intersection over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub prime: u64,
    pub points: Vec<[u64; 6]>,
}

impl ScanResult {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

struct Compiled {
    p: u64,
    q: PolyModP,
    c: PolyModP,
    dq: Vec<PolyModP>,
    dc: Vec<PolyModP>,
}

impl Compiled {
    fn singular(&self, x: &[u64; 6]) -> bool {
        if self.q.eval(x) != 0 || self.c.eval(x) != 0 {
            return false;
        }
        let p = self.p;
        let gq: Vec<u64> = self.dq.iter().map(|d| d.eval(x)).collect();
        let gc: Vec<u64> = self.dc.iter().map(|d| d.eval(x)).collect();
        (0..6).all(|i| (i + 1..6).all(|j| (gq[i] * gc[j] % p + p - gq[j] * gc[i] % p) % p == 0))
    }
}

/// Exhaustive scan of P⁵(F_p), points normalised with leading coordinate 1, in
/// lexicographic order of (leading position, remaining coordinates).
pub fn scan_singular_points(
    ci: &CompleteIntersection35<QI>,
    p: u64,
    bound: u64,
) -> Result<ScanResult, ComplexError> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(ComplexError::BadPrime(p));
    }
    if p > bound {
        return Err(ComplexError::PrimeTooLarge(p, bound));
    }
    let i = sqrt_minus_one_mod(p);
    let red = |f: &MultiPoly<QI>| PolyModP::reduce(f, p, i).ok_or(ComplexError::BadPrime(p));
    let comp = Compiled {
        p,
        q: red(&ci.quadric)?,
        c: red(&ci.cubic)?,
        dq: (0..6).map(|k| red(&ci.quadric.partial(k))).collect::<Result<_, _>>()?,
        dc: (0..6).map(|k| red(&ci.cubic.partial(k))).collect::<Result<_, _>>()?,
    };
    let mut points = Vec::new();
    for lead in 0..6 {
        let free = 5 - lead;
        let total = p.pow(free as u32);
        let found: Vec<[u64; 6]> = (0..total)
            .into_par_iter()
            .filter_map(|mut n| {
                let mut x = [0u64; 6];
                x[lead] = 1;
                for k in (lead + 1..6).rev() {
                    x[k] = n % p;
                    n /= p;
                }
                comp.singular(&x).then_some(x)
            })
            .collect();
        points.extend(found);
    }
    Ok(ScanResult { prime: p, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{klein_complex, klein_complex_real};

    #[test]
    fn counts_over_f13() {
        let r = scan_singular_points(&klein_complex(), 13, DEFAULT_PRIME_BOUND).unwrap();
        assert_eq!(r.count(), 34);
        let r = scan_singular_points(&klein_complex_real(), 13, DEFAULT_PRIME_BOUND).unwrap();
        assert_eq!(r.count(), 18);
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(matches!(scan_singular_points(&klein_complex(), 11, 31), Err(ComplexError::BadPrime(11))));
        assert!(matches!(scan_singular_points(&klein_complex(), 37, 31), Err(ComplexError::PrimeTooLarge(37, 31))));
    }
}
