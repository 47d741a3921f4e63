use std::fmt;

use exact_arith::{Field, Matrix, MultiPoly, PowerSeriesTrunc};

use crate::error::HyperError;
use crate::form::quadratic_discriminant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnVerdict {
    A(u32),
    /// No pure power of t appeared below the truncation degree.
    Inconclusive,
}

impl fmt::Display for AnVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnVerdict::A(n) => write!(f, "A{n}"),
            AnVerdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Type of a surface singularity with local equation `local` in three variables,
/// when it is of type A_n with n ≤ max_n.
///
/// The quadratic part is brought to uv and then, degree by degree, terms divisible
/// by u or v are absorbed by u ↦ u - B, v ↦ v - A. The first surviving pure power
/// t^(n+1) gives A_n.
pub fn rdp_an_type<F: Field>(local: &PowerSeriesTrunc<F>, max_n: u32) -> Result<AnVerdict, HyperError> {
    let f = local.poly();
    if f.nvars() != 3 {
        return Err(HyperError::Arith(exact_arith::ArithError::ArityMismatch { expected: 3, got: f.nvars() }));
    }
    if !f.homogeneous_part(0).is_zero_poly() || !f.homogeneous_part(1).is_zero_poly() {
        return Err(HyperError::NotSingularLocal);
    }
    let n_trunc = local.truncation();
    let ring = f.vars().clone();
    let q2 = f.homogeneous_part(2);
    if !quadratic_discriminant(&q2, &[0, 1, 2])?.is_zero_poly() {
        return Ok(AnVerdict::A(1));
    }
    let b = polar_matrix(&q2);
    let rank = b.rank();
    let ker = b.kernel();
    if F::characteristic() == 2 {
        if rank < 2 {
            return Err(HyperError::NotAType(1));
        }
    } else if rank < 2 {
        return Err(HyperError::NotAType(rank));
    }
    let k = ker[0].clone();
    let (i, j) = [(1usize, 2usize), (0, 2), (0, 1)]
        .into_iter()
        .find(|&(i, j)| {
            let m = Matrix::from_fn(3, 3, |r, c| match c {
                0 => k[r].clone(),
                1 => unit::<F>(i, r),
                _ => unit::<F>(j, r),
            });
            m.det().map(|d| !d.is_zero()).unwrap_or(false)
        })
        .expect("a kernel vector completes to a basis");
    let g = MultiPoly::<F>::gens(&ring);
    // x = t·k + y·e_i + z·e_j with (t, y, z) the ring variables
    let images: Vec<MultiPoly<F>> = (0..3)
        .map(|m| g[0].scale(&k[m]) + g[1].scale(&unit(i, m)) + g[2].scale(&unit(j, m)))
        .collect();
    let f1 = f.subst_all(&images)?.truncate(n_trunc);
    let q = f1.homogeneous_part(2);
    let alpha = q.coeff(&[0, 2, 0]);
    let beta = q.coeff(&[0, 1, 1]);
    let gamma = q.coeff(&[0, 0, 2]);
    // q = l1 · l2 with l = (coefficient of y, coefficient of z)
    let (l1, l2): ([F; 2], [F; 2]) = if alpha.is_zero() {
        ([F::zero(), F::one()], [beta.clone(), gamma.clone()])
    } else {
        let (r1, r2) = quadratic_roots(&alpha, &beta, &gamma)?;
        ([F::one(), -r1], [alpha.clone(), -(alpha.clone() * r2)])
    };
    let lm = Matrix::from_rows(vec![l1.to_vec(), l2.to_vec()])?;
    let inv = lm.inverse().ok_or(HyperError::NotAType(1))?;
    // (y, z) = inv · (u, v) with u, v the ring variables 1, 2
    let y = g[1].scale(&inv[(0, 0)]) + g[2].scale(&inv[(0, 1)]);
    let z = g[1].scale(&inv[(1, 0)]) + g[2].scale(&inv[(1, 1)]);
    let mut cur = f1.subst_all(&[g[0].clone(), y, z])?.truncate(n_trunc);
    debug_assert_eq!(cur.homogeneous_part(2), g[1].clone() * g[2].clone());
    let top = n_trunc.min(max_n + 1);
    for m in 3..=top {
        let part = cur.homogeneous_part(m);
        let mut a = MultiPoly::zero_in(&ring);
        let mut bb = MultiPoly::zero_in(&ring);
        let mut pure = F::zero();
        for (e, c) in part.terms() {
            if e[1] > 0 {
                a = a + MultiPoly::monomial(&ring, vec![e[0], e[1] - 1, e[2]], c.clone());
            } else if e[2] > 0 {
                bb = bb + MultiPoly::monomial(&ring, vec![e[0], e[1], e[2] - 1], c.clone());
            } else {
                pure = c.clone();
            }
        }
        if !pure.is_zero() {
            return Ok(AnVerdict::A(m - 1));
        }
        if !a.is_zero_poly() || !bb.is_zero_poly() {
            let images = [g[0].clone(), g[1].clone() - bb, g[2].clone() - a];
            cur = cur.subst_all(&images)?.truncate(n_trunc);
        }
    }
    Ok(AnVerdict::Inconclusive)
}

fn unit<F: Field>(i: usize, r: usize) -> F {
    if i == r {
        F::one()
    } else {
        F::zero()
    }
}

fn polar_matrix<F: Field>(q2: &MultiPoly<F>) -> Matrix<F> {
    Matrix::from_fn(3, 3, |i, j| {
        let mut e = vec![0u16; 3];
        e[i] += 1;
        e[j] += 1;
        let c = q2.coeff(&e);
        if i == j {
            c * F::from_i64(2)
        } else {
            c
        }
    })
}

/// Roots of α s² + β s + γ in F.
fn quadratic_roots<F: Field>(alpha: &F, beta: &F, gamma: &F) -> Result<(F, F), HyperError> {
    if F::characteristic() == 2 {
        let elems = F::elements().ok_or(HyperError::ExtendScalars)?;
        let r1 = elems
            .into_iter()
            .find(|s| (alpha.clone() * s.clone() * s.clone() + beta.clone() * s.clone() + gamma.clone()).is_zero())
            .ok_or(HyperError::ExtendScalars)?;
        // r1 + r2 = -β/α
        let r2 = -(beta.div(alpha).unwrap()) - r1.clone();
        return Ok((r1, r2));
    }
    let disc = beta.clone() * beta.clone() - F::from_i64(4) * alpha.clone() * gamma.clone();
    let s = disc.try_sqrt().ok_or(HyperError::ExtendScalars)?;
    let two_a = F::from_i64(2) * alpha.clone();
    let r1 = (s.clone() - beta.clone()).div(&two_a).unwrap();
    let r2 = (-s - beta.clone()).div(&two_a).unwrap();
    Ok((r1, r2))
}
