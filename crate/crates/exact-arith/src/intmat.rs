use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ArithError;
use crate::matrix::Matrix;
use crate::rational::Q;
use crate::ring::Field;

/// Integer matrix with arbitrary-precision entries.
pub type IntMatrix = Matrix<BigInt>;

/// Smith normal form U·A·V = D with U, V unimodular and d_1 | d_2 | ...
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of D, length min(rows, cols), nonnegative.
    pub diag: Vec<BigInt>,
}

/// Quotient rounded to the nearest integer, so the remainder is at most |d|/2.
fn nearest_quotient(x: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (two.clone() * x + d.abs()).div_floor(&(two * d.abs())) * d.signum()
}

impl Matrix<BigInt> {
    pub fn smith(&self) -> Smith {
        let (m, n) = (self.nrows(), self.ncols());
        let mut a = self.clone();
        let mut u = IntMatrix::identity(m);
        let mut v = IntMatrix::identity(n);
        let k = m.min(n);
        for t in 0..k {
            loop {
                // smallest nonzero entry of the trailing block to (t, t)
                let mut best: Option<(usize, usize)> = None;
                for i in t..m {
                    for j in t..n {
                        if !a[(i, j)].is_zero()
                            && best.map_or(true, |(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((bi, bj)) = best else { break };
                a.swap_rows(t, bi);
                u.swap_rows(t, bi);
                a.swap_cols(t, bj);
                v.swap_cols(t, bj);
                let p = a[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..m {
                    if !a[(i, t)].is_zero() {
                        let qt = nearest_quotient(&a[(i, t)], &p);
                        a.row_axpy(i, t, &-qt.clone());
                        u.row_axpy(i, t, &-qt);
                        clean &= a[(i, t)].is_zero();
                    }
                }
                for j in t + 1..n {
                    if !a[(t, j)].is_zero() {
                        let qt = nearest_quotient(&a[(t, j)], &p);
                        a.col_axpy(j, t, &-qt.clone());
                        v.col_axpy(j, t, &-qt);
                        clean &= a[(t, j)].is_zero();
                    }
                }
                if !clean {
                    continue;
                }
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[(i, j)].is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        a.row_axpy(t, i, &BigInt::one());
                        u.row_axpy(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            if a[(t, t)].is_negative() {
                a.row_scale_neg(t);
                u.row_scale_neg(t);
            }
        }
        let diag = (0..k).map(|i| a[(i, i)].clone()).collect();
        Smith { u, v, diag }
    }

    /// Row-style Hermite normal form with zero rows removed: upper echelon,
    /// positive pivots, entries above a pivot reduced into [0, pivot).
    pub fn hnf(&self) -> IntMatrix {
        let (m, n) = (self.nrows(), self.ncols());
        let mut a = self.clone();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            loop {
                let nz: Vec<usize> = (r..m).filter(|&i| !a[(i, c)].is_zero()).collect();
                if nz.is_empty() {
                    break;
                }
                let p = *nz.iter().min_by_key(|&&i| a[(i, c)].abs()).unwrap();
                a.swap_rows(r, p);
                let mut done = true;
                for i in r + 1..m {
                    if !a[(i, c)].is_zero() {
                        let qt = a[(i, c)].div_floor(&a[(r, c)]);
                        a.row_axpy(i, r, &-qt);
                        if !a[(i, c)].is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if a[(r, c)].is_zero() {
                continue;
            }
            if a[(r, c)].is_negative() {
                a.row_scale_neg(r);
            }
            for i in 0..r {
                let qt = a[(i, c)].div_floor(&a[(r, c)]);
                if !qt.is_zero() {
                    a.row_axpy(i, r, &-qt);
                }
            }
            r += 1;
        }
        a.submatrix(&(0..r).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>())
    }

    /// row_i += c·row_j
    pub fn row_axpy(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.ncols() {
            let v = &self[(i, k)] + c * &self[(j, k)];
            self[(i, k)] = v;
        }
    }

    /// col_i += c·col_j
    pub fn col_axpy(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.nrows() {
            let v = &self[(k, i)] + c * &self[(k, j)];
            self[(k, i)] = v;
        }
    }

    fn row_scale_neg(&mut self, i: usize) {
        for k in 0..self.ncols() {
            let v = -self[(i, k)].clone();
            self[(i, k)] = v;
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.nrows() {
            let t = self[(k, a)].clone();
            self[(k, a)] = self[(k, b)].clone();
            self[(k, b)] = t;
        }
    }

    pub fn to_q(&self) -> Matrix<Q> {
        self.map(|x| Q::from_integer(x.clone()))
    }
}

/// Inertia (n_+, n_0, n_-) of a symmetric rational matrix, by congruence diagonalization.
pub fn inertia(m: &Matrix<Q>) -> Result<(usize, usize, usize), ArithError> {
    if !m.is_symmetric() {
        return Err(ArithError::NotSymmetric);
    }
    let n = m.nrows();
    let mut a = m.clone();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let piv = active.iter().copied().find(|&i| !a[(i, i)].is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                // all diagonal entries zero: find an off-diagonal entry and fold j into i
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[(i, j)].is_zero());
                match pair {
                    None => {
                        zero += active.len();
                        break;
                    }
                    Some((i, j)) => {
                        sym_add(&mut a, i, j);
                        i
                    }
                }
            }
        };
        let d = a[(p, p)].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let dinv = d.inv().unwrap();
        active.retain(|&x| x != p);
        for &i in &active {
            let f = a[(i, p)].clone() * dinv.clone();
            if f.is_zero() {
                continue;
            }
            for &j in &active {
                let v = a[(i, j)].clone() - f.clone() * a[(p, j)].clone();
                a[(i, j)] = v;
            }
        }
        for &i in &active {
            a[(i, p)] = Q::zero();
            a[(p, i)] = Q::zero();
        }
    }
    Ok((pos, zero, neg))
}

/// Congruence e_i -> e_i + e_j.
fn sym_add(a: &mut Matrix<Q>, i: usize, j: usize) {
    let n = a.nrows();
    for k in 0..n {
        let v = a[(i, k)].clone() + a[(j, k)].clone();
        a[(i, k)] = v;
    }
    for k in 0..n {
        let v = a[(k, i)].clone() + a[(k, j)].clone();
        a[(k, i)] = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn smith_of_a3_cartan() {
        let a3 = z(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let s = a3.smith();
        assert_eq!(s.diag, vec![BigInt::from(1), BigInt::from(1), BigInt::from(4)]);
        let d = s.u.mul(&a3).unwrap().mul(&s.v).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { s.diag[i].clone() } else { BigInt::zero() };
                assert_eq!(d[(i, j)], e);
            }
        }
        assert_eq!(s.u.det().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn hnf_spans_same_lattice() {
        let m = z(&[vec![2, 4], vec![6, 8], vec![4, 4]]);
        let h = m.hnf();
        assert_eq!(h, z(&[vec![2, 0], vec![0, 4]]));
    }

    #[test]
    fn signature_of_hyperbolic_plane() {
        let u = z(&[vec![0, 1], vec![1, 0]]).to_q();
        assert_eq!(inertia(&u).unwrap(), (1, 0, 1));
        let m = z(&[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).to_q();
        assert_eq!(inertia(&m).unwrap(), (1, 1, 1));
        let neg = z(&[vec![-2, 1], vec![1, -2]]).to_q();
        assert_eq!(inertia(&neg).unwrap(), (0, 0, 2));
    }
}
