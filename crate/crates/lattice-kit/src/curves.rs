use std::collections::BTreeMap;

use config_kit::{ConfigError, CurveSystem, DynkinType};
use exact_arith::{BigInt, IntMatrix, Matrix, Q};
use num_traits::{ToPrimitive, Zero};

use crate::error::LatticeError;
use crate::lattice::Lattice;

/// Lattice spanned by a curve system, modulo the radical of its Gram matrix.
#[derive(Clone, Debug)]
pub struct CurveLattice {
    pub lattice: Lattice,
    pub rank: usize,
    pub signature: (usize, usize),
    pub invariant_factors: Vec<u64>,
    /// Basis of the quotient as integer combinations of the curves.
    pub basis: Vec<Vec<i64>>,
}

impl CurveLattice {
    pub fn disc_order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }
}

/// With U·G·V = D of rank r, the first r columns of V give a basis of ℤⁿ modulo
/// the integral radical.
pub fn lattice_from_curves(cs: &CurveSystem) -> Result<CurveLattice, LatticeError> {
    let n = cs.len();
    let g: IntMatrix = Matrix::from_fn(n, n, |i, j| BigInt::from(cs.gram()[i][j]));
    let s = g.smith();
    let r = s.diag.iter().filter(|d| !d.is_zero()).count();
    let basis: Vec<Vec<i64>> =
        (0..r).map(|k| (0..n).map(|i| s.v[(i, k)].to_i64().expect("small entries")).collect()).collect();
    let whole = Lattice::integral(format!("span of {} curves", n), cs.gram().to_vec())?;
    let lattice = whole.sublattice(format!("span of {} curves", n), &basis);
    let signature = lattice.signature()?;
    let invariant_factors = lattice.discriminant_group()?.iter().map(|d| d.to_u64().expect("small")).collect();
    Ok(CurveLattice { lattice, rank: r, signature, invariant_factors, basis })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorPairings {
    pub name: String,
    pub square: Q,
    /// (curve id, pairing), in curve order.
    pub values: Vec<(String, Q)>,
}

impl DivisorPairings {
    /// Number of curves with each pairing value.
    pub fn profile(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for (_, v) in &self.values {
            *m.entry(v.to_integer().to_i64().expect("small")).or_insert(0) += 1;
        }
        m
    }

    pub fn value(&self, id: &str) -> Option<&Q> {
        self.values.iter().find(|(c, _)| c == id).map(|(_, v)| v)
    }
}

/// H² and H·C for every curve C; fiber classes are expanded through the
/// fibration records. A non-integral value is an error.
pub fn divisor_pairings(cs: &CurveSystem, name: &str) -> Result<DivisorPairings, LatticeError> {
    let h = cs.divisor_vector(name)?;
    pairings_of_vector(cs, name, &h)
}

pub fn pairings_of_vector(cs: &CurveSystem, name: &str, h: &[Q]) -> Result<DivisorPairings, LatticeError> {
    let square = cs.pair(h, h);
    if !square.is_integer() {
        return Err(LatticeError::NonIntegral(name.into(), name.into(), square.to_string()));
    }
    let mut values = Vec::with_capacity(cs.len());
    for (c, v) in cs.curves().iter().zip(cs.pair_with_curves(h)) {
        if !v.is_integer() {
            return Err(LatticeError::NonIntegral(name.into(), c.id.clone(), v.to_string()));
        }
        values.push((c.id.clone(), v));
    }
    Ok(DivisorPairings { name: name.into(), square, values })
}

/// Dynkin type of the dual graph of the named curves.
pub fn classify_dynkin(cs: &CurveSystem, subset: &[&str]) -> Result<DynkinType, ConfigError> {
    let idx = cs.indices(subset)?;
    cs.classify_subset(&idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use config_kit::{Curve, Fibration};

    fn system(n: usize, edges: &[(usize, usize, i64)]) -> CurveSystem {
        let curves = (0..n).map(|i| Curve { id: format!("c{i}"), self_intersection: -2 }).collect();
        CurveSystem::new(curves, edges, Vec::<Fibration>::new(), vec![]).unwrap()
    }

    #[test]
    fn single_curve() {
        let cl = lattice_from_curves(&system(1, &[])).unwrap();
        assert_eq!(cl.rank, 1);
        assert_eq!(cl.invariant_factors, vec![2]);
    }

    #[test]
    fn affine_chain_has_radical() {
        // Ã2 triangle: rank 2, quotient is A2
        let cs = system(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        let cl = lattice_from_curves(&cs).unwrap();
        assert_eq!(cl.rank, 2);
        assert_eq!(cl.signature, (0, 2));
        assert_eq!(cl.invariant_factors, vec![3]);
    }
}
