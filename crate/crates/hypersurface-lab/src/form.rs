use std::sync::Arc;

use exact_arith::{Field, Matrix, MultiPoly, Vars};

use crate::an::{rdp_an_type, AnVerdict};
use crate::error::HyperError;
use exact_arith::PowerSeriesTrunc;

/// Homogeneous polynomial in designated coordinate variables. Any other variables
/// of the ring are parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Form<F: Field> {
    poly: MultiPoly<F>,
    coords: Vec<usize>,
    degree: u32,
}

impl<F: Field> Form<F> {
    /// All variables of the ring are coordinates.
    pub fn new(poly: MultiPoly<F>) -> Result<Self, HyperError> {
        let coords: Vec<usize> = (0..poly.nvars()).collect();
        Self::with_coords(poly, coords)
    }

    pub fn with_coord_names(poly: MultiPoly<F>, names: &[&str]) -> Result<Self, HyperError> {
        let coords = names
            .iter()
            .map(|n| poly.var_position(n).ok_or_else(|| exact_arith::ArithError::UnknownVariable(n.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::with_coords(poly, coords)
    }

    pub fn with_coords(poly: MultiPoly<F>, coords: Vec<usize>) -> Result<Self, HyperError> {
        let mut deg = None;
        for (e, _) in poly.terms() {
            let d: u32 = coords.iter().map(|&i| e[i] as u32).sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Err(HyperError::NotHomogeneous),
                _ => {}
            }
        }
        Ok(Form { poly, coords, degree: deg.unwrap_or(0) })
    }

    pub fn poly(&self) -> &MultiPoly<F> {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn characteristic(&self) -> u64 {
        F::characteristic()
    }

    pub fn partials(&self) -> Vec<MultiPoly<F>> {
        self.coords.iter().map(|&i| self.poly.partial(i)).collect()
    }

    fn constant(&self, c: &F) -> MultiPoly<F> {
        MultiPoly::constant_in(self.poly.vars(), c.clone())
    }

    /// Substitute point coordinates; the result is a polynomial in the parameters.
    pub fn eval_poly(&self, f: &MultiPoly<F>, p: &[F]) -> MultiPoly<F> {
        let names: Vec<String> = self.coords.iter().map(|&i| self.poly.vars()[i].clone()).collect();
        let map: Vec<(&str, MultiPoly<F>)> =
            names.iter().zip(p).map(|(n, c)| (n.as_str(), self.constant(c))).collect();
        f.subst_some(&map).expect("coordinate names belong to the ring")
    }

    pub fn vanishes_at(&self, p: &[F]) -> bool {
        self.eval_poly(&self.poly, p).is_zero_poly()
    }

    /// Local equation in the affine chart x_k = p_k (first nonzero coordinate),
    /// x_j = p_j + t_j otherwise. Local variables are appended to the ring as
    /// `t0, t1, ...` (one per coordinate other than k).
    pub fn local_equation(&self, p: &[F]) -> (MultiPoly<F>, Vec<usize>) {
        let k = p.iter().position(|c| !c.is_zero()).expect("nonzero point");
        let old = self.poly.vars();
        let mut names: Vec<String> = old.iter().cloned().collect();
        let nloc = self.coords.len() - 1;
        let loc_start = names.len();
        for j in 0..nloc {
            names.push(format!("t{j}"));
        }
        let ring: Vars = Arc::new(names);
        let mut images: Vec<MultiPoly<F>> = MultiPoly::gens(&ring)[..old.len()].to_vec();
        let mut j = 0;
        for (ci, &var) in self.coords.iter().enumerate() {
            let c = MultiPoly::constant_in(&ring, p[ci].clone());
            if ci == k {
                images[var] = c;
            } else {
                images[var] = c + MultiPoly::var_index(&ring, loc_start + j);
                j += 1;
            }
        }
        let local = self.poly.subst_all(&images).expect("same ring");
        (local, (loc_start..loc_start + nloc).collect())
    }

    pub fn singular_at(&self, p: &[F]) -> SingularPointReport {
        let on = self.vanishes_at(p);
        let grads: Vec<MultiPoly<F>> = self.partials().iter().map(|g| self.eval_poly(g, p)).collect();
        let nonzero = grads.iter().filter(|g| !g.is_zero_poly()).count();
        let singular = on && nonzero == 0;
        let mut report = SingularPointReport {
            point: p.iter().map(|c| c.to_string()).collect(),
            on_hypersurface: on,
            singular,
            jacobian_rank: usize::from(nonzero > 0),
            quadratic_discriminant: None,
            node: None,
            an: None,
        };
        if singular {
            if let Ok(nc) = self.node_check(p) {
                report.node = Some(nc.is_node());
                report.quadratic_discriminant = Some(nc.discriminant.to_string());
            }
            if self.poly.nvars() == self.coords.len() && self.coords.len() == 4 {
                if let Ok(v) = self.an_type_at(p, 8) {
                    report.an = Some(v);
                }
            }
        }
        report
    }

    /// Ordinary double point test on the quadratic part of the local equation.
    pub fn node_check(&self, p: &[F]) -> Result<NodeCheck<F>, HyperError> {
        if !self.vanishes_at(p) {
            return Err(HyperError::NotOnSurface);
        }
        let (local, loc) = self.local_equation(p);
        let lin = local.homogeneous_part_in(&loc, 1);
        if !lin.is_zero_poly() {
            return Err(HyperError::NotSingular);
        }
        let q2 = local.homogeneous_part_in(&loc, 2);
        let disc = quadratic_discriminant(&q2, &loc)?;
        Ok(NodeCheck { discriminant: disc })
    }

    /// A_n type at a point, for forms without parameters.
    pub fn an_type_at(&self, p: &[F], n: u32) -> Result<AnVerdict, HyperError> {
        let (local, loc) = self.local_equation(p);
        let ring: Vars = Arc::new(loc.iter().map(|&i| local.vars()[i].clone()).collect());
        let mut out = MultiPoly::zero_in(&ring);
        for (e, c) in local.terms() {
            if e.iter().enumerate().any(|(i, &k)| k > 0 && !loc.contains(&i)) {
                return Err(HyperError::DegenerateParameters("form has parameters".into()));
            }
            let ne: Vec<u16> = loc.iter().map(|&i| e[i]).collect();
            out = out + MultiPoly::monomial(&ring, ne, c.clone());
        }
        rdp_an_type(&PowerSeriesTrunc::new(out, n), n)
    }
}

/// Result of the node test; the point is a node iff the discriminant is nonzero.
#[derive(Clone, Debug)]
pub struct NodeCheck<F: Field> {
    pub discriminant: MultiPoly<F>,
}

impl<F: Field> NodeCheck<F> {
    pub fn is_node(&self) -> bool {
        !self.discriminant.is_zero_poly()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularPointReport {
    pub point: Vec<String>,
    pub on_hypersurface: bool,
    pub singular: bool,
    pub jacobian_rank: usize,
    pub quadratic_discriminant: Option<String>,
    pub node: Option<bool>,
    pub an: Option<AnVerdict>,
}

/// Nondegeneracy polynomial of a quadratic form in the variables `loc`:
/// the determinant of the polar matrix in characteristic ≠ 2; in characteristic 2
/// the half-discriminant 4abc + def - ad² - be² - cf² for three variables, or the
/// determinant of the (alternating) polar matrix for an even number of variables.
pub fn quadratic_discriminant<F: Field>(q2: &MultiPoly<F>, loc: &[usize]) -> Result<MultiPoly<F>, HyperError> {
    let n = loc.len();
    let coeff = |i: usize, j: usize| -> MultiPoly<F> {
        let mut out = MultiPoly::zero_in(q2.vars());
        for (e, c) in q2.terms() {
            let hit = if i == j {
                e[loc[i]] == 2
            } else {
                e[loc[i]] == 1 && e[loc[j]] == 1
            };
            if hit {
                let mut ne = e.clone();
                for &l in loc {
                    ne[l] = 0;
                }
                out = out + MultiPoly::monomial(q2.vars(), ne, c.clone());
            }
        }
        out
    };
    if F::characteristic() == 2 && n % 2 == 1 {
        if n != 3 {
            return Err(HyperError::UnsupportedCharTwo(n));
        }
        let (a, b, c) = (coeff(0, 0), coeff(1, 1), coeff(2, 2));
        let (d, e, f) = (coeff(1, 2), coeff(0, 2), coeff(0, 1));
        let four = MultiPoly::constant_in(q2.vars(), F::from_i64(4));
        return Ok(four * a.clone() * b.clone() * c.clone() + d.clone() * e.clone() * f.clone()
            - a * d.clone() * d
            - b * e.clone() * e
            - c * f.clone() * f);
    }
    let two = MultiPoly::constant_in(q2.vars(), F::from_i64(2));
    let m = Matrix::from_fn(n, n, |i, j| if i == j { two.clone() * coeff(i, i) } else { coeff(i, j) });
    Ok(m.det()?)
}

trait HomogeneousIn<F: Field> {
    fn homogeneous_part_in(&self, vars: &[usize], d: u32) -> MultiPoly<F>;
}

impl<F: Field> HomogeneousIn<F> for MultiPoly<F> {
    fn homogeneous_part_in(&self, vars: &[usize], d: u32) -> MultiPoly<F> {
        let terms = self
            .terms()
            .filter(|(e, _)| vars.iter().map(|&i| e[i] as u32).sum::<u32>() == d)
            .map(|(e, c)| (e.clone(), c.clone()));
        MultiPoly::from_terms(self.vars(), terms)
    }
}
