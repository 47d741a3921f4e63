use exact_arith::{Field, Matrix, QI};

use crate::complex::{klein_matrix, to_klein, CompleteIntersection35, NodeReport};
use crate::error::ComplexError;
use crate::printed::{
    klein_nodes_16, plucker_alpha_planes, plucker_beta_planes, qi_from_i64, qi_point, KleinPlane, KLEIN_NODES_18,
    PLUCKER_NODES_16, PLUCKER_NODES_18,
};

/// The 34 nodes split into the 18 edge points and the 16 base lines.
#[derive(Clone, Debug)]
pub struct NodeInventory<F> {
    pub sing1: Vec<Vec<F>>,
    pub sing2: Vec<Vec<F>>,
    pub reports1: Vec<NodeReport>,
    pub reports2: Vec<NodeReport>,
}

impl<F> NodeInventory<F> {
    pub fn all_nodes(&self) -> bool {
        self.reports1.iter().chain(&self.reports2).all(NodeReport::is_node)
    }
}

fn check_all<F: Field>(
    ci: &CompleteIntersection35<F>,
    pts: &[Vec<F>],
    tag: &str,
) -> Result<Vec<NodeReport>, ComplexError> {
    pts.iter()
        .enumerate()
        .map(|(k, p)| {
            let r = ci.node_report(p)?;
            if !r.is_node() {
                return Err(ComplexError::PrintedPoint(format!("{tag} {}", k + 1), format!("{r:?}")));
            }
            Ok(r)
        })
        .collect()
}

/// Printed nodes in Plücker coordinates.
pub fn plucker_nodes() -> (Vec<Vec<QI>>, Vec<Vec<QI>>) {
    (
        PLUCKER_NODES_18.iter().map(|p| qi_from_i64(p)).collect(),
        PLUCKER_NODES_16.iter().map(|p| qi_from_i64(p)).collect(),
    )
}

/// Printed nodes in Klein coordinates.
pub fn klein_nodes() -> (Vec<Vec<QI>>, Vec<Vec<QI>>) {
    (KLEIN_NODES_18.iter().map(qi_point).collect(), klein_nodes_16())
}

pub fn verify_node_inventory(
    ci: &CompleteIntersection35<QI>,
    sing1: Vec<Vec<QI>>,
    sing2: Vec<Vec<QI>>,
) -> Result<NodeInventory<QI>, ComplexError> {
    let reports1 = check_all(ci, &sing1, "Sing1 point")?;
    let reports2 = check_all(ci, &sing2, "Sing2 point")?;
    Ok(NodeInventory { sing1, sing2, reports1, reports2 })
}

/// Projective equality of two vectors.
pub fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone()).is_zero()))
}

/// For each Plücker point, the index of its Klein image in `klein` (None if absent).
pub fn klein_correspondence(plucker: &[Vec<QI>], klein: &[Vec<QI>]) -> Vec<Option<usize>> {
    plucker
        .iter()
        .map(|p| {
            let k = to_klein(p);
            klein.iter().position(|q| proportional(&k, q))
        })
        .collect()
}

/// Linear forms (rows) of a Plücker plane rewritten in Klein coordinates.
pub fn plucker_plane_to_klein(forms: &[[i64; 6]; 3]) -> Matrix<QI> {
    let l = Matrix::from_rows(forms.iter().map(|r| qi_from_i64(r)).collect()).unwrap();
    l.mul(&klein_matrix().inverse().unwrap()).unwrap()
}

/// For each printed Plücker plane (α list then β list), the index of the matching Klein plane.
pub fn plucker_to_klein_planes() -> Vec<Option<usize>> {
    let klein: Vec<Matrix<QI>> = KleinPlane::all().iter().map(KleinPlane::forms).collect();
    plucker_alpha_planes()
        .iter()
        .chain(plucker_beta_planes().iter())
        .map(|f| {
            let m = plucker_plane_to_klein(f);
            klein.iter().position(|k| k.same_row_space(&m))
        })
        .collect()
}

/// Plane incidence for the 24 Klein-form planes.
#[derive(Clone, Debug)]
pub struct PlaneInventory {
    pub planes: Vec<KleinPlane>,
    /// incidence1[plane][node] for Sing₁, incidence2 for Sing₂.
    pub incidence1: Vec<Vec<bool>>,
    pub incidence2: Vec<Vec<bool>>,
}

impl PlaneInventory {
    pub fn points_per_plane(&self) -> Vec<(usize, usize)> {
        (0..self.planes.len())
            .map(|k| (count(&self.incidence1[k]), count(&self.incidence2[k])))
            .collect()
    }

    pub fn planes_per_point1(&self) -> Vec<usize> {
        column_counts(&self.incidence1)
    }

    pub fn planes_per_point2(&self) -> Vec<usize> {
        column_counts(&self.incidence2)
    }

    /// The (24_{3+4}, 18_4 + 16_6) counts.
    pub fn counts_as_printed(&self) -> bool {
        self.points_per_plane().iter().all(|&c| c == (3, 4))
            && self.planes_per_point1().iter().all(|&c| c == 4)
            && self.planes_per_point2().iter().all(|&c| c == 6)
    }
}

fn count(v: &[bool]) -> usize {
    v.iter().filter(|&&b| b).count()
}

fn column_counts(m: &[Vec<bool>]) -> Vec<usize> {
    (0..m[0].len()).map(|j| m.iter().filter(|r| r[j]).count()).collect()
}

pub fn point_in_plane(forms: &Matrix<QI>, p: &[QI]) -> bool {
    forms.mul_vec(p).unwrap().iter().all(|v| exact_arith::Ring::is_zero(v))
}

pub fn verify_plane_inventory(ci: &CompleteIntersection35<QI>) -> Result<PlaneInventory, ComplexError> {
    let planes = KleinPlane::all();
    let (s1, s2) = klein_nodes();
    let mut incidence1 = Vec::new();
    let mut incidence2 = Vec::new();
    for pl in &planes {
        let forms = pl.forms();
        if !ci.contains_subspace(&forms.kernel())? {
            return Err(ComplexError::PlaneNotContained(format!("{pl:?}")));
        }
        incidence1.push(s1.iter().map(|p| point_in_plane(&forms, p)).collect());
        incidence2.push(s2.iter().map(|p| point_in_plane(&forms, p)).collect());
    }
    Ok(PlaneInventory { planes, incidence1, incidence2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{klein_complex, plucker_complex};
    use crate::printed::{cycles_string, ALPHA_LABELS, BETA_LABELS};

    #[test]
    fn printed_nodes_are_nodes_in_both_models() {
        let (p1, p2) = plucker_nodes();
        let inv = verify_node_inventory(&plucker_complex(), p1.clone(), p2.clone()).unwrap();
        assert!(inv.all_nodes());
        let (k1, k2) = klein_nodes();
        assert_eq!((k1.len(), k2.len()), (18, 16));
        assert!(verify_node_inventory(&klein_complex(), k1.clone(), k2.clone()).unwrap().all_nodes());
        let c1 = klein_correspondence(&p1, &k1);
        let c2 = klein_correspondence(&p2, &k2);
        let mut seen1: Vec<usize> = c1.iter().map(|c| c.unwrap()).collect();
        let mut seen2: Vec<usize> = c2.iter().map(|c| c.unwrap()).collect();
        seen1.sort();
        seen1.dedup();
        seen2.sort();
        seen2.dedup();
        assert_eq!((seen1.len(), seen2.len()), (18, 16));
    }

    #[test]
    fn planes_contained_with_printed_counts() {
        let inv = verify_plane_inventory(&klein_complex()).unwrap();
        assert!(inv.counts_as_printed(), "{:?}", inv.points_per_plane());
        let pl = plucker_complex::<QI>();
        for f in plucker_alpha_planes().iter().chain(plucker_beta_planes().iter()) {
            let m = Matrix::from_rows(f.iter().map(|r| qi_from_i64(r)).collect()).unwrap();
            assert!(pl.contains_subspace(&m.kernel()).unwrap());
        }
    }

    #[test]
    fn plane_labels_match_printed_lists() {
        let planes = KleinPlane::all();
        let found: Vec<String> = plucker_to_klein_planes()
            .iter()
            .map(|k| cycles_string(&planes[k.expect("Plücker plane has a Klein image")].label()))
            .collect();
        let printed: Vec<String> = ALPHA_LABELS.iter().chain(BETA_LABELS.iter()).map(|s| s.to_string()).collect();
        assert_eq!(found, printed);
    }

    #[test]
    fn printed_point_in_four_planes() {
        let p = qi_point(&[(0, 1), (0, 0), (0, 0), (0, 0), (0, 0), (1, 0)]);
        let mut labels: Vec<String> = KleinPlane::all()
            .iter()
            .filter(|pl| point_in_plane(&pl.forms(), &p))
            .map(|pl| cycles_string(&pl.label()))
            .collect();
        labels.sort();
        let mut expected = vec!["(143)", "(132)", "(1432)", "(13)"];
        expected.sort();
        assert_eq!(labels, expected);
    }
}
