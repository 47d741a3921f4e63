use std::collections::BTreeSet;

use exact_arith::Q;
use num_traits::Zero;
use rayon::prelude::*;

use crate::discform::{disc_form, fq_isometric, FiniteQuadForm};
use crate::error::LatticeError;
use crate::genus::{genus_match_indefinite, same_genus};
use crate::lattice::{lattice_sum, vectors_of_norm, Lattice};
use crate::overlattice::{glue_keeps_primitive, overlattice, Overlattice};

/// Order-4 isotropic element of the discriminant form of D5⊕A3, lifted to
/// rational coordinates; the lexicographically first one.
pub fn d5_a3_glue() -> Result<Vec<Q>, LatticeError> {
    let base = lattice_sum("D5+A3")?;
    let f = disc_form(&base)?;
    let x = f
        .isotropic_elements()
        .into_iter()
        .find(|a| f.element_order(a) == 4)
        .ok_or_else(|| LatticeError::Enumeration("no order-4 isotropic glue for D5+A3".into()))?;
    Ok(f.lift(&x))
}

pub struct GluedChain {
    pub base: Lattice,
    pub d8: Overlattice,
    pub e8: Overlattice,
}

/// D5⊕A3 ⊂ D8 ⊂ E8 from the glue element x (index 4) and 2x (index 2).
pub fn d5_a3_chain() -> Result<GluedChain, LatticeError> {
    let base = lattice_sum("D5+A3")?;
    let x = d5_a3_glue()?;
    let two_x: Vec<Q> = x.iter().map(|c| c * Q::from_integer(2.into())).collect();
    let e8 = overlattice(&base, &[x], "E8 over D5+A3")?;
    let d8 = overlattice(&base, &[two_x], "D8 over D5+A3")?;
    Ok(GluedChain { base, d8, e8 })
}

/// Pads a glue vector on D5⊕A3 to U⊕D5⊕D12⊕A3.
fn padded(x: &[Q]) -> Vec<Q> {
    let mut v = vec![Q::zero(); 22];
    v[2..7].clone_from_slice(&x[..5]);
    v[19..22].clone_from_slice(&x[5..]);
    v
}

#[derive(Clone, Debug)]
pub struct TernarySearch {
    pub det: i64,
    /// Gram matrices (positive form, to be negated) passing the reduction bounds.
    pub examined: usize,
    pub with_det: Vec<[[i64; 3]; 3]>,
    pub matching: Vec<[[i64; 3]; 3]>,
    /// Reduction bound abc ≤ 4·det covers the Minkowski bound abc ≤ 2·det.
    pub closed: bool,
}

fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn positive_definite3(m: &[[i64; 3]; 3]) -> bool {
    m[0][0] > 0 && m[0][0] * m[1][1] - m[0][1] * m[1][0] > 0 && det3(m) > 0
}

/// Even positive definite ternary forms [[a,f,e],[f,b,d],[e,d,c]] with
/// 2 ≤ a ≤ b ≤ c even, abc ≤ 4·det, |2f|,|2e| ≤ a, |2d| ≤ b and the given
/// determinant. Parallel over a.
pub fn reduced_even_ternaries(det: i64) -> (usize, Vec<[[i64; 3]; 3]>) {
    let bound = 4 * det;
    let a_values: Vec<i64> = (1..).map(|k| 2 * k).take_while(|a| a * a * a <= bound).collect();
    let per_a: Vec<(usize, Vec<[[i64; 3]; 3]>)> = a_values
        .par_iter()
        .map(|&a| {
            let mut examined = 0;
            let mut found = Vec::new();
            let mut b = a;
            while a * b * b <= bound {
                let mut c = b;
                while a * b * c <= bound {
                    for f in -a / 2..=a / 2 {
                        for e in -a / 2..=a / 2 {
                            for d in -b / 2..=b / 2 {
                                examined += 1;
                                let m = [[a, f, e], [f, b, d], [e, d, c]];
                                if det3(&m) == det && positive_definite3(&m) {
                                    found.push(m);
                                }
                            }
                        }
                    }
                    c += 2;
                }
                b += 2;
            }
            (examined, found)
        })
        .collect();
    let examined = per_a.iter().map(|p| p.0).sum();
    (examined, per_a.into_iter().flat_map(|p| p.1).collect())
}

fn negated(m: &[[i64; 3]; 3]) -> Result<Lattice, LatticeError> {
    Lattice::even("M", m.iter().map(|r| r.iter().map(|x| -x).collect()).collect())
}

/// Negative definite even ternaries of |det| = `det` whose discriminant form is
/// isometric to `target`.
pub fn ternary_search(det: i64, target: &FiniteQuadForm) -> Result<TernarySearch, LatticeError> {
    let (examined, with_det) = reduced_even_ternaries(det);
    let mut matching = Vec::new();
    for m in &with_det {
        if fq_isometric(&disc_form(&negated(m)?)?, target)? {
            matching.push(*m);
        }
    }
    Ok(TernarySearch { det, examined, with_det, matching, closed: 4 * det >= 2 * det })
}

/// Theta-series prefix (counts of vectors of norm 2, 4, ..., 2k up to sign) of a
/// positive definite even ternary, used to compare forms.
pub fn theta_prefix(m: &[[i64; 3]; 3], k: i64) -> Result<Vec<usize>, LatticeError> {
    let l = Lattice::even("T", m.iter().map(|r| r.to_vec()).collect())?;
    (1..=k).map(|j| vectors_of_norm(&l, 2 * j).map(|v| v.len())).collect()
}

/// All even positive definite ternaries of the given determinant with entries in a
/// box, reduced or not. Only for the small-determinant sanity comparison.
pub fn brute_even_ternaries(det: i64, diag_max: i64, off_max: i64) -> Vec<[[i64; 3]; 3]> {
    let mut out = Vec::new();
    for a in (2..=diag_max).step_by(2) {
        for b in (2..=diag_max).step_by(2) {
            for c in (2..=diag_max).step_by(2) {
                for f in -off_max..=off_max {
                    for e in -off_max..=off_max {
                        for d in -off_max..=off_max {
                            let m = [[a, f, e], [f, b, d], [e, d, c]];
                            if det3(&m) == det && positive_definite3(&m) {
                                out.push(m);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct ArtinReport {
    pub sigma: u32,
    pub embeddable: bool,
    pub witness: Option<String>,
    /// 2σ − 3 ≤ l(M) ≤ 3.
    pub l_lower: i64,
    pub l_upper: usize,
    pub checks: Vec<(String, bool)>,
    pub search: Option<TernarySearch>,
}

impl ArtinReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

/// The 28-curve lattice as U⊕D5⊕D12 (coordinates 0..19 of the glued lattice).
pub fn curve_lattice_model() -> Result<Lattice, LatticeError> {
    lattice_sum("U+D5+D12")
}

pub fn required_complement_form() -> FiniteQuadForm {
    FiniteQuadForm::cyclic(1, 2).oplus(&FiniteQuadForm::v2())
}

/// Embeddability of the 28-curve lattice in the supersingular K3 lattice of
/// Artin invariant σ. For σ ≤ 2 a glued witness is built and checked; for σ = 3
/// the candidate complements are enumerated.
pub fn artin2_check(sigma: u32) -> Result<ArtinReport, LatticeError> {
    if !(1..=3).contains(&sigma) {
        return Err(LatticeError::BadSigma(sigma));
    }
    let l = curve_lattice_model()?;
    let l_len = disc_form(&l)?.length();
    let mut checks = vec![(
        "L = U+D5+D12 matches U+E8+D8+<-4>".to_string(),
        genus_match_indefinite(&l, &lattice_sum("U+E8+D8+<-4>")?).matches,
    )];
    let l_lower = 2 * sigma as i64 - l_len as i64;
    let mut report = ArtinReport { sigma, embeddable: false, witness: None, l_lower, l_upper: 3, checks: vec![], search: None };
    if sigma <= 2 {
        let x = d5_a3_glue()?;
        let glue = if sigma == 1 { x } else { x.iter().map(|c| c * Q::from_integer(2.into())).collect() };
        let glue = padded(&glue);
        let base = lattice_sum("U+D5+D12+A3")?;
        let s = overlattice(&base, std::slice::from_ref(&glue), &format!("S{sigma}"))?;
        let s_disc = disc_form(&s.lattice)?;
        checks.push(("S has signature (1,21)".into(), s.lattice.signature()? == (1, 21)));
        checks.push((
            format!("S*/S = (Z/2)^{}", 2 * sigma),
            s_disc.orders.len() == 2 * sigma as usize && s_disc.orders.iter().all(|&d| d == 2),
        ));
        let named: &[&str] = if sigma == 1 { &["U+E8+D12"] } else { &["U+D8+D12", "U+E8+D8+D4"] };
        for n in named {
            checks.push((format!("S matches {n}"), same_genus(&s.lattice, &lattice_sum(n)?)?));
        }
        let l_coords: Vec<usize> = (0..19).collect();
        checks.push(("L primitive in S".into(), glue_keeps_primitive(&[glue.clone()], &l_coords)));
        let a3_coords: Vec<usize> = (19..22).collect();
        checks.push(("A3 primitive in S".into(), glue_keeps_primitive(&[glue], &a3_coords)));
        report.embeddable = true;
        report.witness = Some(format!(
            "{} = overlattice of U+D5+D12+A3 of index {} via {}",
            named[0],
            s.index,
            if sigma == 1 { "D5+A3 ⊂ E8" } else { "D5+A3 ⊂ D8" }
        ));
    } else {
        let target = required_complement_form();
        let search = ternary_search(16, &target)?;
        if !search.closed {
            return Err(LatticeError::Enumeration("reduction bound below the Minkowski bound".into()));
        }
        checks.push(("l(M) forced to 3".into(), l_lower == 3));
        checks.push(("candidate complements exist with |det| = 16".into(), !search.with_det.is_empty()));
        report.embeddable = !search.matching.is_empty();
        report.search = Some(search);
    }
    report.checks.append(&mut checks);
    Ok(report)
}

/// The two CM Picard lattices of rank 20, with (rank, signature, invariant factors).
pub fn cm_picard_lattices() -> Result<Vec<(Lattice, (usize, usize), Vec<u64>)>, LatticeError> {
    let a22 = crate::lattice::standard_lattice("A2")?.rescale(2);
    let lats = [lattice_sum("U+E8+E8+<-4>+<-4>")?, lattice_sum("U+E8+E8")?.oplus(&a22)];
    lats.into_iter()
        .map(|l| {
            let sig = l.signature()?;
            let inv = l.discriminant_group()?.iter().map(|d| d.try_into().expect("small")).collect();
            Ok((l, sig, inv))
        })
        .collect()
}

/// Distinct theta prefixes, as a comparison key for small ternary lists.
pub fn theta_classes(list: &[[[i64; 3]; 3]], k: i64) -> Result<BTreeSet<Vec<usize>>, LatticeError> {
    list.iter().map(|m| theta_prefix(m, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_into_e8() {
        let c = d5_a3_chain().unwrap();
        assert_eq!(c.e8.index, 4);
        assert_eq!(c.e8.lattice.det().to_string(), "1");
        assert_eq!(vectors_of_norm(&c.e8.lattice, 2).unwrap().len(), 120);
        assert!(same_genus(&c.e8.lattice, &lattice_sum("E8").unwrap()).unwrap());
        assert_eq!(c.d8.index, 2);
        assert_eq!(vectors_of_norm(&c.d8.lattice, 2).unwrap().len(), 56);
        assert!(same_genus(&c.d8.lattice, &lattice_sum("D8").unwrap()).unwrap());
        assert_eq!(c.base.rank(), 8);
    }

    #[test]
    fn det4_ternaries_are_a3() {
        let (_, reduced) = reduced_even_ternaries(4);
        let brute = brute_even_ternaries(4, 8, 4);
        let a3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]];
        let want = theta_classes(&[a3], 3).unwrap();
        assert!(!reduced.is_empty());
        assert_eq!(theta_classes(&reduced, 3).unwrap(), want);
        assert_eq!(theta_classes(&brute, 3).unwrap(), want);
    }

    #[test]
    fn sigma_range() {
        assert!(matches!(artin2_check(0), Err(LatticeError::BadSigma(0))));
        assert!(matches!(artin2_check(4), Err(LatticeError::BadSigma(4))));
    }
}
