use exact_arith::{parse_poly, q, vars, Field, Matrix, MultiPoly, Ring, Vars, Q, QI};
use hypersurface_lab::Form;

use crate::complex::{klein_complex, CompleteIntersection35};
use crate::error::ComplexError;
use crate::inventory::klein_nodes;
use crate::scan::PolyModP;

pub fn p4_ring() -> Vars {
    vars(&["x1", "x2", "x3", "x4", "x5"])
}

/// The printed quartic threefold X ⊂ P⁴.
pub fn quartic_threefold() -> MultiPoly<Q> {
    parse_poly(
        &p4_ring(),
        "x1^2 x2 x4 - x1^2 x3 x5 + x2^2 x3 x5 - x2 x3^2 x4 + x3 x4^2 x5 - x2 x4 x5^2",
        &[],
    )
    .unwrap()
}

pub const X_NODES: [[i64; 5]; 17] = [
    [1, 0, 0, 0, 0], [1, 0, 0, 1, 1], [1, 0, 0, -1, 1], [1, 1, 0, 0, 1], [1, -1, 0, 0, 1],
    [1, 0, 0, 1, -1], [1, 0, 0, -1, -1], [1, 1, 0, 0, -1], [1, -1, 0, 0, -1], [1, 0, 1, 1, 0],
    [1, 0, 1, -1, 0], [1, 1, 1, 0, 0], [1, -1, 1, 0, 0], [1, 0, -1, 1, 0], [1, 0, -1, -1, 0],
    [1, 1, -1, 0, 0], [1, -1, -1, 0, 0],
];

/// The four singular lines, each cut out by three linear forms on P⁴.
pub const X_SINGULAR_LINES: [[[i64; 5]; 3]; 4] = [
    [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 1, 0]],
    [[1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1]],
    [[1, 0, 0, 0, 0], [0, 1, 0, -1, 0], [0, 0, 1, 0, -1]],
    [[1, 0, 0, 0, 0], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1]],
];

/// Π1, Π2, Π3 and the printed pairwise intersections Π1∩Π2, Π2∩Π3, Π3∩Π1.
pub const RATIONALITY_PLANES: [[[i64; 5]; 2]; 3] = [
    [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0]],
    [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
    [[1, -1, 0, 1, 0], [1, 0, -1, 0, 1]],
];
pub const RATIONALITY_POINTS: [[i64; 5]; 3] = [[1, 0, 0, 0, 0], [1, 1, 1, 0, 0], [1, 0, 0, -1, -1]];

#[derive(Clone, Debug)]
pub struct ProjectionReport {
    /// X equals x1²(x2x4 - x3x5) + (x2x3 - x4x5)(x2x5 - x3x4).
    pub rewriting_identity: bool,
    /// x1·cubic + X lies in the ideal of the Plücker quadric (so X is the projection).
    pub elimination_identity: bool,
    pub nodes: Vec<bool>,
    /// Each line lies on X and every partial of X vanishes along it.
    pub singular_lines: Vec<bool>,
}

impl ProjectionReport {
    pub fn passed(&self) -> bool {
        self.rewriting_identity
            && self.elimination_identity
            && self.nodes.iter().all(|&b| b)
            && self.singular_lines.iter().all(|&b| b)
    }
}

fn restrict_to_kernel(f: &MultiPoly<Q>, forms: &[[i64; 5]]) -> Vec<MultiPoly<Q>> {
    let m = Matrix::<Q>::from_i64(&forms.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let basis = m.kernel();
    let names: Vec<String> = (0..basis.len()).map(|k| format!("s{k}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let r = vars(&refs);
    let s = MultiPoly::<Q>::gens(&r);
    let images: Vec<MultiPoly<Q>> = (0..5)
        .map(|j| basis.iter().zip(&s).fold(MultiPoly::zero_in(&r), |acc, (b, g)| acc + g.scale(&b[j])))
        .collect();
    std::iter::once(f.clone())
        .chain((0..5).map(|k| f.partial(k)))
        .map(|g| g.subst_all(&images).unwrap())
        .collect()
}

pub fn project_to_quartic_threefold() -> Result<ProjectionReport, ComplexError> {
    let x = quartic_threefold();
    let r = p4_ring();
    let rewritten = parse_poly(&r, "x1^2(x2 x4 - x3 x5) + (x2 x3 - x4 x5)(x2 x5 - x3 x4)", &[])?;
    let pr = vars(&["x1", "x2", "x3", "x4", "x5", "x6"]);
    let cubic = parse_poly(&pr, "-x1 x2 x4 + x1 x3 x5 - x2 x3 x6 + x4 x5 x6", &[])?;
    let quad = parse_poly(&pr, "x1 x6 - x2 x5 + x3 x4", &[])?;
    let x6 = x.embed(&pr)?;
    let g = MultiPoly::<Q>::gens(&pr);
    let elimination_identity = (g[0].clone() * cubic + x6).div_exact_poly(&quad).is_some();
    let form = Form::new(x.clone())?;
    let nodes = X_NODES
        .iter()
        .map(|p| {
            let pt: Vec<Q> = p.iter().map(|&v| q(v)).collect();
            form.node_check(&pt).map(|n| n.is_node()).unwrap_or(false)
        })
        .collect();
    let singular_lines = X_SINGULAR_LINES
        .iter()
        .map(|forms| restrict_to_kernel(&x, forms).iter().all(MultiPoly::is_zero_poly))
        .collect();
    Ok(ProjectionReport { rewriting_identity: x == rewritten, elimination_identity, nodes, singular_lines })
}

#[derive(Clone, Debug)]
pub struct RationalityReport {
    pub planes_contained: Vec<bool>,
    pub intersections: Vec<Option<Vec<Q>>>,
    pub intersections_as_printed: bool,
}

pub fn rationality_planes_check() -> RationalityReport {
    let x = quartic_threefold();
    let planes_contained = RATIONALITY_PLANES.iter().map(|f| restrict_to_kernel(&x, f)[0].is_zero_poly()).collect();
    let pairs = [(0, 1), (1, 2), (2, 0)];
    let intersections: Vec<Option<Vec<Q>>> = pairs
        .iter()
        .map(|&(a, b)| {
            let rows: Vec<Vec<i64>> = RATIONALITY_PLANES[a].iter().chain(&RATIONALITY_PLANES[b]).map(|r| r.to_vec()).collect();
            let k = Matrix::<Q>::from_i64(&rows).kernel();
            (k.len() == 1).then(|| k[0].clone())
        })
        .collect();
    let intersections_as_printed = intersections.iter().zip(RATIONALITY_POINTS).all(|(p, e)| {
        p.as_ref().is_some_and(|p| {
            let e: Vec<Q> = e.iter().map(|&v| q(v)).collect();
            crate::inventory::proportional(p, &e)
        })
    });
    RationalityReport { planes_contained, intersections, intersections_as_printed }
}

pub fn p6_ring() -> Vars {
    vars(&["x0", "x1", "x2", "x3", "x4", "x5", "x6"])
}

/// x0·f2 + f3 for the Klein-form complex.
pub fn cone_cubic(ci: &CompleteIntersection35<QI>) -> MultiPoly<QI> {
    let r = p6_ring();
    let shift: Vec<MultiPoly<QI>> = MultiPoly::<QI>::gens(&r)[1..].to_vec();
    let x0 = MultiPoly::var_index(&r, 0);
    x0 * ci.quadric.subst_all(&shift).unwrap() + ci.cubic.subst_all(&shift).unwrap()
}

/// The cubic as printed (with x2³, x3³ and no x5² term).
pub fn printed_cone_cubic() -> MultiPoly<QI> {
    parse_poly(&p6_ring(), "x0(x1^2+x2^3+x3^3+x4^2+x6^2)+x1 x2 x3+i x4 x5 x6", &[("i", QI::i())]).unwrap()
}

pub fn segre_forms() -> Vec<MultiPoly<QI>> {
    let srcs = [
        "2x0+x1-x2-x3",
        "2x0-x1+x2-x3",
        "2x0-x1-x2+x3",
        "2x0+x1+x2+x3",
        "-2x0-i(x4+x5+x6)",
        "-2x0+i(x4+x5-x6)",
        "-2x0+i(x4-x5+x6)",
        "-2x0+i(-x4+x5+x6)",
    ];
    srcs.iter().map(|s| parse_poly(&p6_ring(), s, &[("i", QI::i())]).unwrap()).collect()
}

/// λ with f = λ·g, if one exists.
pub fn proportionality<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Option<F> {
    let (e, c) = g.terms().next()?;
    let lambda = f.coeff(e).div(c)?;
    (!lambda.is_zero() && *f == g.scale(&lambda)).then_some(lambda)
}

#[derive(Clone, Debug)]
pub struct SegreReport {
    pub linear_sum_zero: bool,
    pub lambda: Option<QI>,
    pub printed_variant_lambda: Option<QI>,
    /// The cone point and the lifts of the 34 nodes, each checked to be a node of the cubic.
    pub candidate_nodes: usize,
    pub nodes_verified: usize,
    /// The same candidates singular after reduction mod 13.
    pub singular_mod_13: usize,
}

pub fn segre_isomorphism_check() -> Result<SegreReport, ComplexError> {
    let ci = klein_complex();
    let cubic = cone_cubic(&ci);
    let t = segre_forms();
    let r = p6_ring();
    let sum = t.iter().fold(MultiPoly::zero_in(&r), |acc, f| acc + f.clone());
    let cubes = t.iter().fold(MultiPoly::zero_in(&r), |acc, f| acc + f.pow_poly(3));
    let lambda = proportionality(&cubes, &cubic);
    let printed_variant_lambda = proportionality(&cubes, &printed_cone_cubic());

    let (s1, s2) = klein_nodes();
    let mut candidates: Vec<Vec<QI>> = vec![std::iter::once(QI::one()).chain(std::iter::repeat(QI::zero()).take(6)).collect()];
    for p in s1.iter().chain(&s2) {
        let k = (0..6).find(|&k| !ci.quadric.partial(k).eval(p).unwrap().is_zero()).unwrap();
        let mu = ci.cubic.partial(k).eval(p)?.div(&ci.quadric.partial(k).eval(p)?).unwrap();
        candidates.push(std::iter::once(-mu).chain(p.iter().cloned()).collect());
    }
    let form = Form::new(cubic.clone())?;
    let nodes_verified = candidates
        .iter()
        .filter(|p| form.node_check(p).map(|n| n.is_node()).unwrap_or(false))
        .count();
    let p = 13;
    let i13 = exact_arith::sqrt_minus_one_mod(p);
    let reduce = |f: &MultiPoly<QI>| PolyModP::reduce(f, p, i13).unwrap();
    let f13 = reduce(&cubic);
    let d13: Vec<PolyModP> = (0..7).map(|k| reduce(&cubic.partial(k))).collect();
    let singular_mod_13 = candidates
        .iter()
        .filter(|pt| {
            let v: Vec<u64> = pt.iter().map(|c| exact_arith::ModP::mod_p(c, p, i13).unwrap()).collect();
            f13.eval(&v) == 0 && d13.iter().all(|d| d.eval(&v) == 0)
        })
        .count();
    Ok(SegreReport {
        linear_sum_zero: sum.is_zero_poly(),
        lambda,
        printed_variant_lambda,
        candidate_nodes: candidates.len(),
        nodes_verified,
        singular_mod_13,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_threefold_checks() {
        let r = project_to_quartic_threefold().unwrap();
        assert!(r.rewriting_identity && r.elimination_identity, "{r:?}");
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn rationality_planes() {
        let r = rationality_planes_check();
        assert!(r.planes_contained.iter().all(|&b| b));
        assert!(r.intersections_as_printed, "{r:?}");
    }

    #[test]
    fn segre_change_of_variables() {
        let r = segre_isomorphism_check().unwrap();
        assert!(r.linear_sum_zero);
        assert_eq!(r.lambda, Some(QI::int(24, 0)));
        assert_eq!(r.printed_variant_lambda, None);
        assert_eq!((r.candidate_nodes, r.nodes_verified, r.singular_mod_13), (35, 35, 35));
    }
}
