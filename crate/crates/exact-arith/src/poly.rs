use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::ArithError;
use crate::ring::{Domain, Field, Ring};

pub type Vars = Arc<Vec<String>>;
pub type Exps = Vec<u16>;

pub fn vars(names: &[&str]) -> Vars {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Sparse multivariate polynomial over `R` with named, ordered variables.
///
/// A polynomial with an empty variable list is a constant that adapts to the
/// ring of whatever it is combined with.
#[derive(Clone, Debug)]
pub struct MultiPoly<R> {
    vars: Vars,
    terms: BTreeMap<Exps, R>,
}

fn same_vars(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero_in(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_in(vars: &Vars, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.len()], c);
        }
        MultiPoly { vars: vars.clone(), terms }
    }

    pub fn constant(c: R) -> Self {
        Self::constant_in(&Arc::new(Vec::new()), c)
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, ArithError> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| ArithError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_index(vars, i))
    }

    pub fn var_index(vars: &Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, R::one())
    }

    /// All variables of the ring, in order.
    pub fn gens(vars: &Vars) -> Vec<Self> {
        (0..vars.len()).map(|i| Self::var_index(vars, i)).collect()
    }

    pub fn monomial(vars: &Vars, exps: Exps, c: R) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { vars: vars.clone(), terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, R)>>(vars: &Vars, it: I) -> Self {
        let mut p = Self::zero_in(vars);
        for (e, c) in it {
            assert_eq!(e.len(), vars.len(), "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exps, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_position(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<R> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(R::zero))
    }

    pub fn coeff(&self, e: &[u16]) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).min()
    }

    pub fn degree_in(&self, i: usize) -> Option<u16> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as u32).sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, max_deg: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as u32).sum::<u32>() <= max_deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<S: Ring, G: Fn(&R) -> S>(&self, g: G) -> MultiPoly<S> {
        let mut out = MultiPoly::<S>::zero_in(&self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), g(v));
        }
        out
    }

    /// Evaluate at a point given one value per variable.
    pub fn eval(&self, point: &[R]) -> Result<R, ArithError> {
        if point.len() != self.vars.len() {
            return Err(ArithError::ArityMismatch { expected: self.vars.len(), got: point.len() });
        }
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * point[i].pow(k as u32);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitute a polynomial for every variable (by position). All images share one ring.
    pub fn subst_all(&self, images: &[MultiPoly<R>]) -> Result<MultiPoly<R>, ArithError> {
        if images.len() != self.vars.len() {
            return Err(ArithError::ArityMismatch { expected: self.vars.len(), got: images.len() });
        }
        let target = common_vars(images)?;
        let mut powers: Vec<Vec<MultiPoly<R>>> = vec![Vec::new(); images.len()];
        let mut out = MultiPoly::zero_in(&target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant_in(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(MultiPoly::constant_in(&target, R::one()));
                }
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap().clone() * images[i].clone();
                    pw.push(next);
                }
                t = t * pw[k as usize].clone();
            }
            out = out + t;
        }
        Ok(out)
    }

    /// Substitute by variable name; every variable occurring in `self` must be mapped.
    /// Unmapped variables that do not occur are sent to zero.
    pub fn subst(&self, map: &[(&str, MultiPoly<R>)]) -> Result<MultiPoly<R>, ArithError> {
        let target = common_vars(&map.iter().map(|(_, p)| p.clone()).collect::<Vec<_>>())?;
        let mut images = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match map.iter().find(|(n, _)| n == v) {
                Some((_, p)) => images.push(p.with_vars_of(&target)),
                None => {
                    if self.degree_in(i).unwrap_or(0) > 0 {
                        return Err(ArithError::UnmappedVariable(v.clone()));
                    }
                    images.push(MultiPoly::zero_in(&target));
                }
            }
        }
        self.subst_all(&images)
    }

    /// Replace selected variables by polynomials in the same ring, keeping the others.
    pub fn subst_some(&self, map: &[(&str, MultiPoly<R>)]) -> Result<MultiPoly<R>, ArithError> {
        let mut images = Self::gens(&self.vars);
        for (n, p) in map {
            let i = self.var_position(n).ok_or_else(|| ArithError::UnknownVariable(n.to_string()))?;
            if !p.vars.is_empty() && !same_vars(&p.vars, &self.vars) {
                return Err(ArithError::MixedRing);
            }
            images[i] = p.with_vars_of(&self.vars);
        }
        self.subst_all(&images)
    }

    fn with_vars_of(&self, target: &Vars) -> Self {
        if self.vars.is_empty() {
            let c = self.constant_value().unwrap_or_else(R::zero);
            MultiPoly::constant_in(target, c)
        } else {
            self.clone()
        }
    }

    /// Re-express in a ring whose variables include all variables of `self` (matched by name).
    pub fn embed(&self, target: &Vars) -> Result<Self, ArithError> {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| ArithError::UnknownVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut out = MultiPoly::zero_in(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[pos[i]] = k;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Formal partial derivative (integer multiplicities reduce in positive characteristic).
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c.clone() * R::from_i64(e[i] as i64));
        }
        out
    }

    pub fn partial_by(&self, name: &str) -> Result<Self, ArithError> {
        let i = self.var_position(name).ok_or_else(|| ArithError::UnknownVariable(name.to_string()))?;
        Ok(self.partial(i))
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.vars.len()).map(|i| self.partial(i)).collect()
    }

    /// Coefficients as a polynomial in variable `i`: result[k] is the coefficient of v^k.
    pub fn coefficients_in(&self, i: usize) -> Vec<Self> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![Self::zero_in(&self.vars); d + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[i] as usize;
            ne[i] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    /// Pseudo-remainder of `self` by `g` with respect to variable `i`.
    pub fn pseudo_rem(&self, g: &Self, i: usize) -> Result<Self, ArithError> {
        let m = g.degree_in(i).ok_or(ArithError::DivisionByZero)?;
        let gc = g.coefficients_in(i);
        let lc = gc[m as usize].clone();
        let mut r = self.clone();
        loop {
            let dr = match r.degree_in(i) {
                Some(d) if d >= m && !r.is_zero_poly() => d,
                _ => break,
            };
            let lr = r.coefficients_in(i)[dr as usize].clone();
            let mut e = vec![0; self.vars.len()];
            e[i] = dr - m;
            let shift = MultiPoly::monomial(&self.vars, e, R::one());
            r = lc.clone() * r - lr * shift * g.clone();
        }
        Ok(r)
    }

    pub fn is_zero_poly(&self) -> bool {
        self.terms.is_empty()
    }

    /// Apply x_i ↦ s_i · x_{perm[i]}.
    pub fn monomial_transform(&self, perm: &[usize], scal: &[R]) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0u16; e.len()];
            let mut cc = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    ne[perm[i]] += k;
                    cc = cc * scal[i].pow(k as u32);
                }
            }
            out.add_term(ne, cc);
        }
        out
    }

    pub fn pow_poly(&self, e: u32) -> Self {
        let mut acc = MultiPoly::constant_in(&self.vars, R::one());
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Support (exponent vectors) of the polynomial.
    pub fn support(&self) -> Vec<Exps> {
        self.terms.keys().cloned().collect()
    }

    /// Lex-largest term.
    pub fn leading_term(&self) -> Option<(&Exps, &R)> {
        self.terms.iter().next_back()
    }
}

impl<F: Field> MultiPoly<F> {
    /// The scalar λ with self = λ·other, if it exists.
    pub fn proportional(&self, other: &Self) -> Option<F> {
        if other.is_zero_poly() {
            return if self.is_zero_poly() { Some(F::zero()) } else { None };
        }
        let (e, c) = other.leading_term()?;
        let lam = self.coeff(e).div(c)?;
        if *self == other.scale(&lam) {
            Some(lam)
        } else {
            None
        }
    }

    /// Exact quotient self / d, if d divides self.
    pub fn div_exact_poly(&self, d: &Self) -> Option<Self> {
        if d.is_zero_poly() {
            return None;
        }
        let (vars, a, b) = align(self, d).ok()?;
        let (de, dc) = b.leading_term()?;
        let dc_inv = dc.inv()?;
        let de = de.clone();
        let mut r = a;
        let mut qt = MultiPoly::zero_in(&vars);
        while let Some((re, rc)) = r.leading_term() {
            if re.iter().zip(de.iter()).any(|(x, y)| x < y) {
                return None;
            }
            let e: Exps = re.iter().zip(de.iter()).map(|(x, y)| x - y).collect();
            let t = MultiPoly::monomial(&vars, e, rc.clone() * dc_inv.clone());
            r = r - t.clone() * b.clone();
            qt = qt + t;
        }
        Some(qt)
    }

    /// Make the lex-leading coefficient one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }
}

impl<F: Field> Domain for MultiPoly<F> {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div_exact_poly(other)
    }
}

fn common_vars<R: Ring>(ps: &[MultiPoly<R>]) -> Result<Vars, ArithError> {
    let mut target: Option<Vars> = None;
    for p in ps {
        if p.vars.is_empty() {
            continue;
        }
        match &target {
            None => target = Some(p.vars.clone()),
            Some(t) => {
                if !same_vars(t, &p.vars) {
                    return Err(ArithError::MixedRing);
                }
            }
        }
    }
    Ok(target.unwrap_or_else(|| Arc::new(Vec::new())))
}

fn align<R: Ring>(a: &MultiPoly<R>, b: &MultiPoly<R>) -> Result<(Vars, MultiPoly<R>, MultiPoly<R>), ArithError> {
    if same_vars(&a.vars, &b.vars) {
        return Ok((a.vars.clone(), a.clone(), b.clone()));
    }
    if a.vars.is_empty() && a.is_constant() {
        return Ok((b.vars.clone(), a.with_vars_of(&b.vars), b.clone()));
    }
    if b.vars.is_empty() && b.is_constant() {
        return Ok((a.vars.clone(), a.clone(), b.with_vars_of(&a.vars)));
    }
    Err(ArithError::MixedRing)
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        match align(self, other) {
            Ok((_, a, b)) => a.terms == b.terms,
            Err(_) => false,
        }
    }
}

impl<R: Ring> Add for MultiPoly<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (_, mut a, b) = align(&self, &o).expect("polynomials from different rings");
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl<R: Ring> Sub for MultiPoly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Neg for MultiPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly { vars: self.vars, terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<R: Ring> Mul for MultiPoly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (vars, a, b) = align(&self, &o).expect("polynomials from different rings");
        let mut out = MultiPoly::zero_in(&vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", c, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly::constant(R::zero())
    }
    fn one() -> Self {
        MultiPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        MultiPoly::constant(R::from_i64(n))
    }
    fn characteristic() -> u64 {
        R::characteristic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, Q};

    fn ring() -> Vars {
        vars(&["x", "y", "u", "v"])
    }

    #[test]
    fn substitution_expands() {
        let r = ring();
        let x = MultiPoly::<Q>::var(&r, "x").unwrap();
        let y = MultiPoly::<Q>::var(&r, "y").unwrap();
        let u = MultiPoly::<Q>::var(&r, "u").unwrap();
        let v = MultiPoly::<Q>::var(&r, "v").unwrap();
        let f = x + y;
        let g = f.subst(&[("x", u.clone() * u.clone()), ("y", v.clone())]).unwrap();
        assert_eq!(g, u.clone() * u + v);
    }

    #[test]
    fn subst_requires_all_occurring_vars() {
        let r = ring();
        let x = MultiPoly::<Q>::var(&r, "x").unwrap();
        let err = x.subst(&[("y", MultiPoly::var(&r, "u").unwrap())]).unwrap_err();
        assert!(matches!(err, ArithError::UnmappedVariable(_)));
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = MultiPoly::<Q>::var(&vars(&["x"]), "x").unwrap();
        let b = MultiPoly::<Q>::var(&vars(&["y"]), "y").unwrap();
        let f = MultiPoly::<Q>::var(&vars(&["s", "t"]), "s").unwrap();
        assert!(matches!(f.subst_all(&[a, b]), Err(ArithError::MixedRing)));
    }

    #[test]
    fn exact_division_and_pseudo_remainder() {
        let r = ring();
        let g = MultiPoly::<Q>::gens(&r);
        let (x, y) = (g[0].clone(), g[1].clone());
        let a = x.clone() * x.clone() - y.clone() * y.clone();
        let b = x.clone() + y.clone();
        assert_eq!(a.div_exact_poly(&b), Some(x.clone() - y.clone()));
        assert_eq!(a.div_exact_poly(&(x.clone() + MultiPoly::constant(q(1)))), None);
        // x^2 - y^2 mod (y*x - 1) in x: y^2·(x^2-y^2) reduces to 1 - y^4
        let m = y.clone() * x.clone() - MultiPoly::constant(q(1));
        let pr = a.pseudo_rem(&m, 0).unwrap();
        assert_eq!(pr, MultiPoly::constant(q(1)) - y.pow_poly(4));
    }

    #[test]
    fn partials_and_homogeneous_parts() {
        let r = ring();
        let g = MultiPoly::<Q>::gens(&r);
        let f = g[0].pow_poly(3) + g[0].clone() * g[1].clone() + g[2].clone();
        assert_eq!(f.partial(0), g[0].pow_poly(2).scale(&q(3)) + g[1].clone());
        assert_eq!(f.homogeneous_part(2), g[0].clone() * g[1].clone());
        assert!(!f.is_homogeneous());
        assert_eq!(f.total_degree(), Some(3));
    }

    #[test]
    fn char_two_partials_are_formal() {
        use crate::finite::F2;
        let r = vars(&["x", "w"]);
        let g = MultiPoly::<F2>::gens(&r);
        let f = g[0].clone() * g[1].pow_poly(2);
        assert!(f.partial(1).is_zero_poly());
    }
}
