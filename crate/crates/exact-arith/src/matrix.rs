use std::fmt;

use crate::error::ArithError;
use crate::ring::{Domain, Field, Ring};

/// Dense row-major matrix over a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(ArithError::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| R::from_i64(x)).collect()).collect())
            .expect("ragged rows")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, ArithError> {
        if self.cols != o.rows {
            return Err(ArithError::Dimension(format!("{}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * o[(k, j)].clone();
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>, ArithError> {
        if v.len() != self.cols {
            return Err(ArithError::Dimension("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn add(&self, o: &Self) -> Result<Self, ArithError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(ArithError::Dimension("shape".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero() && (0..i).all(|j| self[(i, j)] == -self[(j, i)].clone())
            })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    fn require_square(&self) -> Result<(), ArithError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ArithError::NotSquare(self.rows, self.cols))
        }
    }

    /// Determinant by the Leibniz formula. Factorial cost; for small sizes and cross-checks.
    pub fn det_leibniz(&self) -> Result<R, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut acc = R::zero();
        leibniz_rec(self, &mut perm, 0, true, &mut acc);
        Ok(acc)
    }

    /// Pfaffian of an alternating matrix, by expansion along the first row.
    pub fn pfaffian(&self) -> Result<R, ArithError> {
        self.require_square()?;
        if self.rows % 2 == 1 {
            return Err(ArithError::OddSize(self.rows));
        }
        if !self.is_alternating() {
            return Err(ArithError::NotAlternating);
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(pf_rec(self, &idx))
    }

    /// Determinant by cofactor expansion with memo-free recursion over minors; for
    /// rings without exact division.
    pub fn det_expand(&self) -> Result<R, ArithError> {
        self.require_square()?;
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(det_rec(self, 0, &idx))
    }
}

fn leibniz_rec<R: Ring>(m: &Matrix<R>, perm: &mut Vec<usize>, k: usize, even: bool, acc: &mut R) {
    let n = perm.len();
    if k == n {
        let mut t = R::one();
        for (i, &p) in perm.iter().enumerate() {
            t = t * m[(i, p)].clone();
            if t.is_zero() {
                return;
            }
        }
        *acc = if even { acc.clone() + t } else { acc.clone() - t };
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        leibniz_rec(m, perm, k + 1, if i == k { even } else { !even }, acc);
        perm.swap(k, i);
    }
}

fn det_rec<R: Ring>(m: &Matrix<R>, row: usize, cols: &[usize]) -> R {
    if cols.is_empty() {
        return R::one();
    }
    let mut acc = R::zero();
    for (k, &c) in cols.iter().enumerate() {
        let a = &m[(row, c)];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let t = a.clone() * det_rec(m, row + 1, &rest);
        acc = if k % 2 == 0 { acc + t } else { acc - t };
    }
    acc
}

fn pf_rec<R: Ring>(m: &Matrix<R>, idx: &[usize]) -> R {
    if idx.is_empty() {
        return R::one();
    }
    let i = idx[0];
    let mut acc = R::zero();
    for k in 1..idx.len() {
        let j = idx[k];
        let a = &m[(i, j)];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != j).collect();
        let t = a.clone() * pf_rec(m, &rest);
        acc = if k % 2 == 1 { acc + t } else { acc - t };
    }
    acc
}

impl<R: Domain> Matrix<R> {
    /// Fraction-free determinant (Bareiss).
    pub fn det(&self) -> Result<R, ArithError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut a = self.clone();
        let mut prev = R::one();
        let mut sign = false;
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = !sign;
                    }
                    None => return Ok(R::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v.div_exact(&prev).ok_or(ArithError::Inexact)?;
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if sign { -d } else { d })
    }
}

impl<R: Ring> Matrix<R> {
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else { continue };
            a.swap_rows(r, p);
            let inv = a[(r, c)].inv().expect("nonzero pivot");
            for j in c..a.cols {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
            for i in 0..a.rows {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in c..a.cols {
                        let v = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                        a[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : M v = 0}.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (k, &p) in piv.iter().enumerate() {
                    v[p] = -r[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    /// One solution of M x = b, if any.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        if b.len() != self.rows {
            return None;
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &p) in piv.iter().enumerate() {
            x[p] = r[(k, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Whether two matrices have the same row space.
    pub fn same_row_space(&self, o: &Self) -> bool {
        if self.cols != o.cols {
            return false;
        }
        let (a, pa) = self.rref();
        let (b, pb) = o.rref();
        pa == pb && (0..pa.len()).all(|i| a.row(i) == b.row(i))
    }
}

impl<R> std::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> std::ops::IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}
