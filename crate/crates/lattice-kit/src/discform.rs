use std::collections::HashSet;
use std::fmt;

use exact_arith::{qf, BigInt, Matrix, Q};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::LatticeError;
use crate::lattice::Lattice;

/// Isometry searches refuse groups larger than this.
pub const FQ_ORDER_BOUND: u64 = 1 << 10;

fn floor_mod(x: &Q, m: i64) -> Q {
    let m = Q::from_integer(BigInt::from(m));
    let k = (x / &m).floor();
    x - k * m
}

pub fn mod2(x: &Q) -> Q {
    floor_mod(x, 2)
}

pub fn mod1(x: &Q) -> Q {
    floor_mod(x, 1)
}

/// Finite quadratic form on ⊕ ℤ/dᵢ given by q on the generators (mod 2) and b
/// between generators (mod 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuadForm {
    pub orders: Vec<u64>,
    pub q: Vec<Q>,
    pub b: Vec<Vec<Q>>,
    /// Generators as rational vectors in lattice coordinates, when the form came
    /// from a lattice.
    pub generators: Vec<Vec<Q>>,
}

impl fmt::Display for FiniteQuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = (0..self.orders.len())
            .map(|i| format!("Z/{}[q={}]", self.orders[i], self.q[i]))
            .collect();
        write!(f, "{}", parts.join("+"))?;
        for i in 0..self.orders.len() {
            for j in i + 1..self.orders.len() {
                if !self.b[i][j].is_zero() {
                    write!(f, " b{}{}={}", i + 1, j + 1, self.b[i][j])?;
                }
            }
        }
        Ok(())
    }
}

impl FiniteQuadForm {
    pub fn new(orders: Vec<u64>, q: Vec<Q>, b: Vec<Vec<Q>>) -> Self {
        let n = orders.len();
        let q = q.iter().map(mod2).collect();
        let b = (0..n).map(|i| (0..n).map(|j| if i == j { Q::zero() } else { mod1(&b[i][j]) }).collect()).collect();
        FiniteQuadForm { orders, q, b, generators: Vec::new() }
    }

    pub fn trivial() -> Self {
        Self::new(vec![], vec![], vec![])
    }

    /// u₊(2): hyperbolic plane on (ℤ/2)².
    pub fn u2() -> Self {
        Self::new(vec![2, 2], vec![Q::zero(), Q::zero()], vec![vec![Q::zero(), qf(1, 2)], vec![qf(1, 2), Q::zero()]])
    }

    /// v₊(2): (ℤ/2)² with q ≡ 1 on all nonzero elements.
    pub fn v2() -> Self {
        Self::new(vec![2, 2], vec![Q::one(), Q::one()], vec![vec![Q::zero(), qf(1, 2)], vec![qf(1, 2), Q::zero()]])
    }

    /// q_θ(2ᵏ): cyclic of order 2ᵏ with q(generator) = θ/2ᵏ.
    pub fn cyclic(theta: i64, k: u32) -> Self {
        let d = 1i64 << k;
        Self::new(vec![d as u64], vec![qf(theta, d)], vec![vec![Q::zero()]])
    }

    pub fn oplus(&self, other: &Self) -> Self {
        let n = self.orders.len();
        let m = other.orders.len();
        let mut b = vec![vec![Q::zero(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                b[i][j] = self.b[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                b[n + i][n + j] = other.b[i][j].clone();
            }
        }
        let mut orders = self.orders.clone();
        orders.extend(&other.orders);
        let mut q = self.q.clone();
        q.extend(other.q.iter().cloned());
        Self::new(orders, q, b)
    }

    pub fn negate(&self) -> Self {
        let q = self.q.iter().map(|x| -x).collect();
        let b = self.b.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        Self::new(self.orders.clone(), q, b)
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Minimal number of generators of the group.
    pub fn length(&self) -> usize {
        invariant_factors(&self.orders).len()
    }

    pub fn value(&self, a: &[u64]) -> Q {
        let n = self.orders.len();
        let mut s = Q::zero();
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            let ai = Q::from_integer(BigInt::from(a[i]));
            s += &ai * &ai * &self.q[i];
            for j in i + 1..n {
                if a[j] != 0 {
                    s += Q::from_integer(BigInt::from(2 * a[i] * a[j])) * &self.b[i][j];
                }
            }
        }
        mod2(&s)
    }

    pub fn bilinear(&self, a: &[u64], c: &[u64]) -> Q {
        let n = self.orders.len();
        let mut s = Q::zero();
        for i in 0..n {
            for j in 0..n {
                if a[i] == 0 || c[j] == 0 {
                    continue;
                }
                let v = if i == j { &self.q[i] } else { &self.b[i][j] };
                s += Q::from_integer(BigInt::from(a[i] * c[j])) * v;
            }
        }
        mod1(&s)
    }

    /// All elements as coordinate tuples, in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.orders {
            out = out.into_iter().flat_map(|v| (0..d).map(move |a| {
                let mut w = v.clone();
                w.push(a);
                w
            })).collect();
        }
        out
    }

    pub fn add(&self, a: &[u64], c: &[u64]) -> Vec<u64> {
        a.iter().zip(c).zip(&self.orders).map(|((x, y), d)| (x + y) % d).collect()
    }

    pub fn scale(&self, k: u64, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.orders).map(|(x, d)| (k * x) % d).collect()
    }

    pub fn element_order(&self, a: &[u64]) -> u64 {
        a.iter().zip(&self.orders).fold(1, |acc, (x, d)| acc.lcm(&(d / x.gcd(d))))
    }

    /// Generator data respect the relations dᵢgᵢ = 0.
    pub fn is_consistent(&self) -> bool {
        let n = self.orders.len();
        (0..n).all(|i| {
            let d = Q::from_integer(BigInt::from(self.orders[i]));
            (&d * &self.q[i]).is_integer()
                && mod2(&(&d * &d * &self.q[i])).is_zero()
                && (0..n).all(|j| (&d * &self.b[i][j]).is_integer())
        })
    }

    /// Isotropic elements (q = 0 mod 2), excluding zero.
    pub fn isotropic_elements(&self) -> Vec<Vec<u64>> {
        self.elements().into_iter().filter(|a| a.iter().any(|&x| x != 0) && self.value(a).is_zero()).collect()
    }

    /// Rational vector in lattice coordinates for an element; needs generators.
    pub fn lift(&self, a: &[u64]) -> Vec<Q> {
        let n = self.generators.first().map_or(0, |g| g.len());
        let mut v = vec![Q::zero(); n];
        for (k, g) in self.generators.iter().enumerate() {
            let c = Q::from_integer(BigInt::from(a[k]));
            for (vi, gi) in v.iter_mut().zip(g) {
                *vi += &c * gi;
            }
        }
        v
    }
}

/// Invariant factors (each dividing the next, >1) of ⊕ ℤ/dᵢ.
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let n = orders.len();
    let m = Matrix::from_fn(n, n, |i, j| if i == j { BigInt::from(orders[i]) } else { BigInt::zero() });
    if n == 0 {
        return vec![];
    }
    m.smith().diag.into_iter().map(|d| d.to_u64().unwrap()).filter(|&d| d > 1).collect()
}

/// Discriminant form of a nondegenerate even lattice, computed from the Smith form
/// U·G·V = D: the columns of V·D⁻¹ generate L*/L.
pub fn disc_form(l: &Lattice) -> Result<FiniteQuadForm, LatticeError> {
    let n = l.rank();
    if n == 0 {
        return Ok(FiniteQuadForm::trivial());
    }
    if l.det().is_zero() {
        return Err(LatticeError::Degenerate);
    }
    let g = l.q_matrix();
    let s = l.int_matrix().smith();
    let mut gens = Vec::new();
    let mut orders = Vec::new();
    for (k, d) in s.diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        let dq = Q::from_integer(d.clone());
        gens.push((0..n).map(|i| Q::from_integer(s.v[(i, k)].clone()) / &dq).collect::<Vec<Q>>());
        orders.push(d.to_u64().ok_or(LatticeError::OrderBound(u64::MAX, FQ_ORDER_BOUND))?);
    }
    let pair = |x: &[Q], y: &[Q]| -> Q {
        let gy = g.mul_vec(y).expect("sizes");
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    };
    let k = gens.len();
    let q = gens.iter().map(|x| pair(x, x)).collect();
    let b = (0..k).map(|i| (0..k).map(|j| pair(&gens[i], &gens[j])).collect()).collect();
    let mut f = FiniteQuadForm::new(orders, q, b);
    f.generators = gens;
    Ok(f)
}

/// Exhaustive search for an isometry; generators of `a` are sent to elements of
/// `b` of the same order with matching q and b values, and the images must
/// generate `b`.
pub fn fq_isometric(a: &FiniteQuadForm, b: &FiniteQuadForm) -> Result<bool, LatticeError> {
    for f in [a, b] {
        if f.order() > FQ_ORDER_BOUND {
            return Err(LatticeError::OrderBound(f.order(), FQ_ORDER_BOUND));
        }
    }
    if a.order() != b.order() || invariant_factors(&a.orders) != invariant_factors(&b.orders) {
        return Ok(false);
    }
    let elems = b.elements();
    let cand: Vec<Vec<&Vec<u64>>> = (0..a.orders.len())
        .map(|i| elems.iter().filter(|e| b.element_order(e) == a.orders[i] && b.value(e) == a.q[i]).collect())
        .collect();
    let mut chosen: Vec<&Vec<u64>> = Vec::new();
    Ok(search(a, b, &cand, &mut chosen))
}

fn search<'a>(a: &FiniteQuadForm, b: &FiniteQuadForm, cand: &[Vec<&'a Vec<u64>>], chosen: &mut Vec<&'a Vec<u64>>) -> bool {
    let i = chosen.len();
    if i == cand.len() {
        return generates(b, chosen);
    }
    for &e in &cand[i] {
        if (0..i).all(|j| b.bilinear(chosen[j], e) == a.b[j][i]) {
            chosen.push(e);
            if search(a, b, cand, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn generates(b: &FiniteQuadForm, gens: &[&Vec<u64>]) -> bool {
    let zero = vec![0u64; b.orders.len()];
    let mut seen: HashSet<Vec<u64>> = HashSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = b.add(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as u64 == b.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard_lattice;

    fn df(name: &str) -> FiniteQuadForm {
        disc_form(&standard_lattice(name).unwrap()).unwrap()
    }

    #[test]
    fn named_forms() {
        let (u, v) = (FiniteQuadForm::u2(), FiniteQuadForm::v2());
        assert!(fq_isometric(&df("D4"), &v).unwrap());
        assert!(fq_isometric(&df("D8"), &u).unwrap());
        assert!(!fq_isometric(&u, &v).unwrap());
        assert!(fq_isometric(&df("D12"), &v).unwrap());
        let m4 = df("<-4>");
        assert_eq!(m4.orders, vec![4]);
        assert_eq!(m4.q[0], qf(7, 4));
        assert!(fq_isometric(&m4, &FiniteQuadForm::cyclic(-1, 2)).unwrap());
        assert!(df("E8").orders.is_empty());
    }

    #[test]
    fn nikulin_identities() {
        let (u, v) = (FiniteQuadForm::u2(), FiniteQuadForm::v2());
        assert!(fq_isometric(&u.oplus(&u), &v.oplus(&v)).unwrap());
        let lhs = FiniteQuadForm::cyclic(1, 2).oplus(&v);
        let rhs = FiniteQuadForm::cyclic(5, 2).oplus(&u);
        assert!(fq_isometric(&lhs, &rhs).unwrap());
        assert!(!fq_isometric(&lhs, &FiniteQuadForm::cyclic(1, 2).oplus(&u)).unwrap());
    }

    #[test]
    fn consistency_and_bound() {
        assert!(df("A3").is_consistent());
        assert!(df("D9").is_consistent());
        let big = (0..11).fold(FiniteQuadForm::trivial(), |acc, _| acc.oplus(&FiniteQuadForm::cyclic(1, 1)));
        assert!(matches!(fq_isometric(&big, &big), Err(LatticeError::OrderBound(2048, 1024))));
    }

    #[test]
    fn polarization() {
        let f = df("D5").oplus(&df("A3"));
        let el = f.elements();
        for x in &el {
            for y in &el {
                let lhs = mod2(&(f.value(&f.add(x, y)) - f.value(x) - f.value(y)));
                assert_eq!(lhs, mod2(&(Q::from_integer(2.into()) * f.bilinear(x, y))));
            }
        }
    }
}
