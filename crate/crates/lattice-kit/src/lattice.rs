use std::fmt;

use exact_arith::{inertia, BigInt, IntMatrix, Matrix, Q};
use num_traits::{Signed, ToPrimitive};

use crate::error::LatticeError;

/// Integral lattice given by a Gram matrix. Root lattices are negative definite
/// (roots of square -2), so hyperbolic lattices have signature (1, n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub name: String,
    gram: Vec<Vec<i64>>,
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

fn dynkin_gram(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(a, b) in edges {
        g[a][b] = 1;
        g[b][a] = 1;
    }
    g
}

fn chain(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|k| (k - 1, k)).collect()
}

impl Lattice {
    /// Integral symmetric Gram; evenness is not required here (see [`Lattice::even`]).
    pub fn integral(name: impl Into<String>, gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) || (0..n).any(|i| (0..n).any(|j| gram[i][j] != gram[j][i])) {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(Lattice { name: name.into(), gram })
    }

    pub fn even(name: impl Into<String>, gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let l = Self::integral(name, gram)?;
        if !l.is_even() {
            return Err(LatticeError::NotEven);
        }
        Ok(l)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i] % 2 == 0)
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn int_matrix(&self) -> IntMatrix {
        Matrix::from_fn(self.rank(), self.rank(), |i, j| BigInt::from(self.gram[i][j]))
    }

    pub fn q_matrix(&self) -> Matrix<Q> {
        self.int_matrix().to_q()
    }

    pub fn det(&self) -> BigInt {
        if self.rank() == 0 {
            return BigInt::from(1);
        }
        self.int_matrix().det().expect("square")
    }

    /// (n₊, n₋); errors on a degenerate Gram.
    pub fn signature(&self) -> Result<(usize, usize), LatticeError> {
        let (p, z, n) = inertia(&self.q_matrix())?;
        if z > 0 {
            return Err(LatticeError::Degenerate);
        }
        Ok((p, n))
    }

    pub fn is_indefinite(&self) -> bool {
        matches!(self.signature(), Ok((p, n)) if p > 0 && n > 0)
    }

    /// Invariant factors > 1 of L*/L.
    pub fn discriminant_group(&self) -> Result<Vec<BigInt>, LatticeError> {
        if self.det() == BigInt::from(0) {
            return Err(LatticeError::Degenerate);
        }
        let s = self.int_matrix().smith();
        Ok(s.diag.into_iter().filter(|d| *d != BigInt::from(1)).collect())
    }

    pub fn disc_order(&self) -> u64 {
        self.det().abs().to_u64().expect("small determinant")
    }

    pub fn direct_sum(parts: &[&Lattice]) -> Lattice {
        let n: usize = parts.iter().map(|l| l.rank()).sum();
        let mut g = vec![vec![0; n]; n];
        let mut off = 0;
        for l in parts {
            for i in 0..l.rank() {
                for j in 0..l.rank() {
                    g[off + i][off + j] = l.gram[i][j];
                }
            }
            off += l.rank();
        }
        let name = parts.iter().map(|l| l.name.clone()).collect::<Vec<_>>().join("⊕");
        Lattice { name, gram: g }
    }

    pub fn oplus(&self, other: &Lattice) -> Lattice {
        Lattice::direct_sum(&[self, other])
    }

    /// L(m): the Gram multiplied by m.
    pub fn rescale(&self, m: i64) -> Lattice {
        let gram = self.gram.iter().map(|r| r.iter().map(|x| x * m).collect()).collect();
        Lattice { name: format!("{}({m})", self.name), gram }
    }

    pub fn negate(&self) -> Lattice {
        let mut l = self.rescale(-1);
        l.name = format!("{}(-1)", self.name);
        l
    }

    /// Sublattice spanned by the given basis vectors (rows, in L-coordinates).
    pub fn sublattice(&self, name: impl Into<String>, basis: &[Vec<i64>]) -> Lattice {
        let g = &self.gram;
        let pair = |u: &[i64], v: &[i64]| -> i64 {
            let mut s = 0;
            for (i, a) in u.iter().enumerate().filter(|(_, a)| **a != 0) {
                for (j, b) in v.iter().enumerate().filter(|(_, b)| **b != 0) {
                    s += a * b * g[i][j];
                }
            }
            s
        };
        let gram = basis.iter().map(|u| basis.iter().map(|v| pair(u, v)).collect()).collect();
        Lattice { name: name.into(), gram }
    }
}

/// U, A_n, D_n (n ≥ 4), E6, E7, E8, and ⟨k⟩ (also written <k>).
pub fn standard_lattice(name: &str) -> Result<Lattice, LatticeError> {
    let unknown = || LatticeError::UnknownName(name.to_string());
    let gram = if name == "U" {
        vec![vec![0, 1], vec![1, 0]]
    } else if let Some(k) = name.strip_prefix('⟨').and_then(|s| s.strip_suffix('⟩')).or_else(|| {
        name.strip_prefix('<').and_then(|s| s.strip_suffix('>'))
    }) {
        vec![vec![k.parse().map_err(|_| unknown())?]]
    } else {
        let (family, n) = name.split_at(1);
        let n: usize = n.parse().map_err(|_| unknown())?;
        match (family, n) {
            ("A", n) if n >= 1 => dynkin_gram(n, &chain(n)),
            ("D", n) if n >= 4 => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                dynkin_gram(n, &e)
            }
            ("E", n @ 6..=8) => {
                let mut e = chain(n - 1);
                e.push((2, n - 1));
                dynkin_gram(n, &e)
            }
            _ => return Err(unknown()),
        }
    };
    Ok(Lattice { name: name.replace('<', "⟨").replace('>', "⟩"), gram })
}

/// Direct sum of standard lattices written like "U+E8+D8+<-4>".
pub fn lattice_sum(spec: &str) -> Result<Lattice, LatticeError> {
    let parts = spec.split('+').map(|s| standard_lattice(s.trim())).collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&Lattice> = parts.iter().collect();
    Ok(Lattice::direct_sum(&refs))
}

/// Vectors of norm -n (n > 0) in a negative definite lattice, or of norm n in a
/// positive definite one, up to sign. Fincke-Pohst enumeration with float
/// bounds and exact final check.
pub fn vectors_of_norm(l: &Lattice, n: i64) -> Result<Vec<Vec<i64>>, LatticeError> {
    let sig = l.signature()?;
    let sign = match sig {
        (p, 0) if p == l.rank() => 1,
        (0, m) if m == l.rank() => -1,
        _ => return Err(LatticeError::NotDefinite),
    };
    let r = l.rank();
    let g: Vec<Vec<f64>> = l.gram.iter().map(|row| row.iter().map(|&x| (sign * x) as f64).collect()).collect();
    // Cholesky-style decomposition Q(x) = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)²
    let mut q = g.clone();
    for i in 0..r {
        for j in i + 1..r {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..r {
            for m in k..r {
                q[k][m] -= q[k][i] * q[i][m];
            }
        }
    }
    let bound = n as f64 + 1e-6;
    let mut out = Vec::new();
    let mut x = vec![0i64; r];
    fn rec(
        i: usize,
        q: &[Vec<f64>],
        x: &mut Vec<i64>,
        rem: f64,
        out: &mut Vec<Vec<i64>>,
        exact: &dyn Fn(&[i64]) -> bool,
    ) {
        let r = x.len();
        let c: f64 = -(i + 1..r).map(|j| q[i][j] * x[j] as f64).sum::<f64>();
        let w = (rem / q[i][i]).max(0.0).sqrt();
        let lo = (c - w - 1e-9).ceil() as i64;
        let hi = (c + w + 1e-9).floor() as i64;
        for v in lo..=hi {
            x[i] = v;
            let t = v as f64 - c;
            let left = rem - q[i][i] * t * t;
            if left < -1e-6 {
                continue;
            }
            if i == 0 {
                if exact(x) {
                    out.push(x.clone());
                }
            } else {
                rec(i - 1, q, x, left, out, exact);
            }
        }
        x[i] = 0;
    }
    let exact = |v: &[i64]| {
        let mut s = 0i64;
        for a in 0..r {
            for b in 0..r {
                s += v[a] * v[b] * l.gram[a][b];
            }
        }
        s == sign * n
    };
    if r > 0 {
        rec(r - 1, &q, &mut x, bound, &mut out, &exact);
    }
    // keep one of ±v: first nonzero coordinate positive
    out.retain(|v| v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_grams() {
        assert_eq!(standard_lattice("U").unwrap().gram(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(standard_lattice("D8").unwrap().det(), BigInt::from(4));
        assert_eq!(standard_lattice("D9").unwrap().det().abs(), BigInt::from(4));
        assert_eq!(standard_lattice("E8").unwrap().det(), BigInt::from(1));
        assert_eq!(standard_lattice("A3").unwrap().det().abs(), BigInt::from(4));
        assert_eq!(standard_lattice("<-4>").unwrap().gram(), &[vec![-4]]);
        assert!(standard_lattice("B3").is_err());
        assert!(standard_lattice("D3").is_err());
    }

    #[test]
    fn rescaled() {
        let u2 = standard_lattice("U").unwrap().rescale(2);
        assert_eq!(u2.det(), BigInt::from(-4));
        let a22 = standard_lattice("A2").unwrap().rescale(2);
        assert_eq!(a22.det(), BigInt::from(12));
    }

    #[test]
    fn root_counts() {
        let count = |s: &str| vectors_of_norm(&standard_lattice(s).unwrap(), 2).unwrap().len();
        assert_eq!(count("E8"), 120);
        assert_eq!(count("D8"), 56);
        assert_eq!(count("A3"), 6);
        assert_eq!(count("E6"), 36);
    }

    #[test]
    fn signatures() {
        let l = lattice_sum("U+D8+D9").unwrap();
        assert_eq!(l.signature().unwrap(), (1, 18));
        assert_eq!(l.rank(), 19);
    }
}
