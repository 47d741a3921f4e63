use exact_arith::{BigInt, IntMatrix, Matrix, Q};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::discform::mod2;
use crate::error::LatticeError;
use crate::lattice::Lattice;

#[derive(Clone, Debug)]
pub struct Overlattice {
    pub lattice: Lattice,
    /// Basis rows in coordinates of the original lattice.
    pub basis: Vec<Vec<Q>>,
    pub index: u64,
}

fn pair(g: &[Vec<i64>], x: &[Q], y: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            if g[i][j] != 0 {
                s += xi * yj * Q::from_integer(BigInt::from(g[i][j]));
            }
        }
    }
    s
}

/// Even overlattice of `l` generated by `l` and the glue vectors (rational
/// coordinates in the basis of `l`). Glue must lie in L*, have even norm and
/// integral mutual pairings.
pub fn overlattice(l: &Lattice, glue: &[Vec<Q>], name: &str) -> Result<Overlattice, LatticeError> {
    let g = l.gram();
    let n = l.rank();
    for v in glue {
        if v.len() != n {
            return Err(LatticeError::GlueNotDual);
        }
        for row in g {
            let s: Q = row.iter().zip(v).map(|(a, b)| Q::from_integer(BigInt::from(*a)) * b).sum();
            if !s.is_integer() {
                return Err(LatticeError::GlueNotDual);
            }
        }
    }
    for (i, v) in glue.iter().enumerate() {
        let q = pair(g, v, v);
        if !mod2(&q).is_zero() {
            return Err(LatticeError::NotIsotropic(format!("glue {i} has norm {q}")));
        }
        for w in &glue[i + 1..] {
            if !pair(g, v, w).is_integer() {
                return Err(LatticeError::NotIsotropic(format!("glue {i} pairs non-integrally")));
            }
        }
    }
    let den = glue.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { den.clone() } else { BigInt::zero() }).collect())
        .chain(glue.iter().map(|v| v.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect()))
        .collect();
    let m: IntMatrix = Matrix::from_fn(rows.len(), n, |i, j| rows[i][j].clone());
    let h = m.hnf();
    let denq = Q::from_integer(den.clone());
    let basis: Vec<Vec<Q>> =
        (0..h.nrows()).map(|i| (0..n).map(|j| Q::from_integer(h[(i, j)].clone()) / &denq).collect()).collect();
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = pair(g, &basis[i], &basis[j]);
            if !v.is_integer() {
                return Err(LatticeError::NotIsotropic(format!("overlattice pairing {v}")));
            }
            gram[i][j] = v.to_integer().to_i64().expect("small");
        }
    }
    let lattice = Lattice::even(name, gram)?;
    let index = (l.det() / lattice.det()).abs().to_u64().expect("small index").sqrt();
    Ok(Overlattice { lattice, basis, index })
}

/// Whether the sublattice on coordinates `sub` stays primitive after gluing:
/// no element of the glue group is integral off `sub` but fractional on it.
pub fn glue_keeps_primitive(glue: &[Vec<Q>], sub: &[usize]) -> bool {
    let orders: Vec<u64> = glue
        .iter()
        .map(|v| v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())).to_u64().expect("small"))
        .collect();
    let n = glue.first().map_or(0, |v| v.len());
    let mut idx = vec![0u64; glue.len()];
    loop {
        let mut x = vec![Q::zero(); n];
        for (k, v) in glue.iter().enumerate() {
            let c = Q::from_integer(BigInt::from(idx[k]));
            for (a, b) in x.iter_mut().zip(v) {
                *a += &c * b;
            }
        }
        let off_integral = (0..n).filter(|i| !sub.contains(i)).all(|i| x[i].is_integer());
        let on_integral = sub.iter().all(|&i| x[i].is_integer());
        if off_integral && !on_integral {
            return false;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return true;
            }
            idx[k] += 1;
            if idx[k] < orders[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard_lattice;

    #[test]
    fn empty_glue() {
        let d4 = standard_lattice("D4").unwrap();
        let o = overlattice(&d4, &[], "D4").unwrap();
        assert_eq!(o.index, 1);
        assert_eq!(o.lattice.det(), d4.det());
    }

    #[test]
    fn rejects_non_isotropic() {
        let a1 = standard_lattice("A1").unwrap();
        let half = vec![exact_arith::qf(1, 2)];
        assert!(matches!(overlattice(&a1, &[half], "x"), Err(LatticeError::NotIsotropic(_))));
        assert!(matches!(overlattice(&a1, &[vec![exact_arith::qf(1, 3)]], "x"), Err(LatticeError::GlueNotDual)));
    }
}
