use std::collections::{BTreeSet, HashMap, HashSet};

use exact_arith::{Field, Matrix, Ring, QI};
use rayon::prelude::*;

use crate::complex::CompleteIntersection35;
use crate::error::ComplexError;
use crate::inventory::klein_nodes;
use crate::printed::KleinPlane;

/// Monomial matrix M with M[j][perm[j]] = i^pw[j]; acts on points by (Mv)_j = i^pw[j]·v_perm[j]
/// and on polynomials by x_j ↦ i^pw[j]·x_perm[j]. Normalised projectively so pw[0] = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial6 {
    pub perm: [u8; 6],
    pub pw: [u8; 6],
}

fn i_pow(k: u8) -> QI {
    match k % 4 {
        0 => QI::int(1, 0),
        1 => QI::int(0, 1),
        2 => QI::int(-1, 0),
        _ => QI::int(0, -1),
    }
}

impl Monomial6 {
    pub fn identity() -> Self {
        Monomial6 { perm: [0, 1, 2, 3, 4, 5], pw: [0; 6] }
    }

    pub fn normalized(mut self) -> Self {
        let s = self.pw[0];
        for k in &mut self.pw {
            *k = (*k + 4 - s) % 4;
        }
        self
    }

    /// The product self·other as matrices.
    pub fn compose(&self, other: &Self) -> Self {
        let mut perm = [0u8; 6];
        let mut pw = [0u8; 6];
        for j in 0..6 {
            let m = self.perm[j] as usize;
            perm[j] = other.perm[m];
            pw[j] = (self.pw[j] + other.pw[m]) % 4;
        }
        Monomial6 { perm, pw }.normalized()
    }

    pub fn apply(&self, v: &[QI]) -> Vec<QI> {
        (0..6).map(|j| i_pow(self.pw[j]) * v[self.perm[j] as usize].clone()).collect()
    }

    /// (x1,x2,x3,y1,y2,y3) ↦ (-y1,-y2,-y3,x1,x2,x3).
    pub fn g0() -> Self {
        Monomial6 { perm: [3, 4, 5, 0, 1, 2], pw: [2, 2, 2, 0, 0, 0] }.normalized()
    }

    fn scalars(&self) -> Vec<QI> {
        self.pw.iter().map(|&k| i_pow(k)).collect()
    }
}

/// Projective point normalised so the first nonzero coordinate is 1.
fn point_key(v: &[QI]) -> String {
    let lead = v.iter().find(|x| !x.is_zero()).cloned().unwrap_or_else(QI::one);
    let inv = lead.inv().unwrap();
    v.iter().map(|x| (x.clone() * inv.clone()).to_string()).collect::<Vec<_>>().join(",")
}

/// Row-reduced basis of a subspace.
fn subspace_key(rows: &[Vec<QI>]) -> String {
    let (r, piv) = Matrix::from_rows(rows.to_vec()).unwrap().rref();
    (0..piv.len()).map(|i| point_key(&r.row(i))).collect::<Vec<_>>().join(";")
}

fn support_preserved(f: &exact_arith::MultiPoly<QI>, m: &Monomial6) -> bool {
    f.terms().all(|(e, _)| {
        let mut ne = vec![0u16; e.len()];
        for (k, &n) in e.iter().enumerate() {
            ne[m.perm[k] as usize] += n;
        }
        !f.coeff(&ne).is_zero()
    })
}

fn preserves(f: &exact_arith::MultiPoly<QI>, m: &Monomial6) -> bool {
    let perm: Vec<usize> = m.perm.iter().map(|&k| k as usize).collect();
    let g = f.monomial_transform(&perm, &m.scalars());
    let Some((e, c)) = f.terms().next() else { return true };
    let d = g.coeff(e);
    if d.is_zero() {
        return false;
    }
    let mu = exact_arith::Field::div(&d, c).unwrap();
    g == f.scale(&mu)
}

fn all_perms6() -> Vec<[u8; 6]> {
    let mut out = Vec::new();
    let mut p = [0u8, 1, 2, 3, 4, 5];
    permute(&mut p, 0, &mut out);
    out.sort();
    out
}

fn permute(p: &mut [u8; 6], k: usize, out: &mut Vec<[u8; 6]>) {
    if k == 6 {
        out.push(*p);
        return;
    }
    for i in k..6 {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

/// Outcome of the monomial symmetry search.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub elements: Vec<Monomial6>,
    pub closed: bool,
    pub contains_g0: bool,
    pub node_orbit_sizes: Vec<usize>,
    pub plane_orbit_sizes: Vec<usize>,
    /// Every image of a listed plane is a listed plane and every image of a node is a node.
    pub permutes_inventory: bool,
}

impl SymmetryReport {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Searches all monomial matrices with entries in {±1, ±i} preserving both equations up to
/// scalars (modulo scalar matrices), then checks closure and orbits on the printed nodes and planes.
pub fn monomial_symmetry_group(ci: &CompleteIntersection35<QI>, budget: usize) -> Result<SymmetryReport, ComplexError> {
    let perms = all_perms6();
    let perms: Vec<[u8; 6]> = perms
        .into_iter()
        .filter(|perm| {
            let m = Monomial6 { perm: *perm, pw: [0; 6] };
            support_preserved(&ci.quadric, &m) && support_preserved(&ci.cubic, &m)
        })
        .collect();
    let mut found: Vec<Monomial6> = perms
        .par_iter()
        .flat_map_iter(|perm| {
            let perm = *perm;
            (0..1024u32).filter_map(move |code| {
                let mut pw = [0u8; 6];
                for k in 1..6 {
                    pw[k] = ((code >> (2 * (k - 1))) & 3) as u8;
                }
                Some(Monomial6 { perm, pw })
            })
        })
        .filter(|m| preserves(&ci.quadric, m) && preserves(&ci.cubic, m))
        .collect();
    found.sort();
    if found.len() > budget {
        return Err(ComplexError::SearchBudget);
    }
    let set: HashSet<Monomial6> = found.iter().copied().collect();
    let closed = set.contains(&Monomial6::identity())
        && found.par_iter().all(|a| found.iter().all(|b| set.contains(&a.compose(b))));
    let contains_g0 = set.contains(&Monomial6::g0());

    let (s1, s2) = klein_nodes();
    let nodes: Vec<Vec<QI>> = s1.into_iter().chain(s2).collect();
    let planes: Vec<_> = KleinPlane::all().iter().map(KleinPlane::forms).collect();
    let bases: Vec<Vec<Vec<QI>>> = planes.iter().map(|f| f.kernel()).collect();
    let node_keys: HashMap<String, usize> = nodes.iter().enumerate().map(|(k, v)| (point_key(v), k)).collect();
    let plane_keys: HashMap<String, usize> = bases.iter().enumerate().map(|(k, b)| (subspace_key(b), k)).collect();
    let node_image = |m: &Monomial6, k: usize| node_keys.get(&point_key(&m.apply(&nodes[k]))).copied();
    let plane_image = |m: &Monomial6, k: usize| {
        let imgs: Vec<Vec<QI>> = bases[k].iter().map(|b| m.apply(b)).collect();
        plane_keys.get(&subspace_key(&imgs)).copied()
    };
    let permutes_inventory = found.par_iter().all(|m| {
        (0..nodes.len()).all(|k| node_image(m, k).is_some()) && (0..planes.len()).all(|k| plane_image(m, k).is_some())
    });
    let orbits = |n: usize, img: &(dyn Fn(&Monomial6, usize) -> Option<usize> + Sync)| -> Vec<usize> {
        let mut seen = vec![false; n];
        let mut sizes = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let orbit: BTreeSet<usize> = found.iter().filter_map(|m| img(m, s)).collect();
            for &k in &orbit {
                seen[k] = true;
            }
            sizes.push(orbit.len());
        }
        sizes
    };
    let node_orbit_sizes = orbits(nodes.len(), &node_image);
    let plane_orbit_sizes = orbits(planes.len(), &plane_image);
    Ok(SymmetryReport { elements: found, closed, contains_g0, node_orbit_sizes, plane_orbit_sizes, permutes_inventory })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::klein_complex;

    #[test]
    fn group_of_order_1152() {
        let r = monomial_symmetry_group(&klein_complex(), 100_000).unwrap();
        assert_eq!(r.order(), 1152);
        assert!(r.closed && r.contains_g0 && r.permutes_inventory);
        assert_eq!(r.node_orbit_sizes, vec![18, 16]);
        assert_eq!(r.plane_orbit_sizes, vec![24]);
    }
}
