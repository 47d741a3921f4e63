use exact_arith::{Field, Ring, F4};

use crate::config::AbstractConfig;

pub type Point3 = [F4; 3];

/// Points of P²(F₄) with first nonzero coordinate 1, in lexicographic order of
/// element indices.
pub fn pg24_points() -> Vec<Point3> {
    let mut out = Vec::new();
    for a in F4::all() {
        for b in F4::all() {
            for c in F4::all() {
                let v = [a, b, c];
                if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_one()) {
                    out.push(v);
                }
            }
        }
    }
    out
}

pub fn dot(a: &Point3, b: &Point3) -> F4 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn fmt_point(p: &Point3) -> String {
    format!("({},{},{})", p[0], p[1], p[2])
}

/// Lines are the same normalized vectors read as linear forms.
pub fn pg24() -> AbstractConfig {
    let pts = pg24_points();
    let names: Vec<String> = pts.iter().map(fmt_point).collect();
    let inc = pts.iter().map(|l| (0..pts.len()).filter(|&p| dot(l, &pts[p]).is_zero()).collect()).collect();
    let lines = pts.iter().map(|l| format!("[{},{},{}]", l[0], l[1], l[2])).collect();
    AbstractConfig::new("PG(2,4)", names, lines, inc).expect("projective plane is regular")
}

pub fn collinear(a: &Point3, b: &Point3, c: &Point3) -> bool {
    let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
    det.is_zero()
}

/// The line through two distinct points, normalized.
pub fn join(a: &Point3, b: &Point3) -> Point3 {
    let v = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
    let lead = *v.iter().find(|x| !x.is_zero()).expect("distinct points");
    let inv = lead.inv().unwrap();
    [v[0] * inv, v[1] * inv, v[2] * inv]
}

/// {(1,0,0),(0,1,0),(0,0,1),(1,1,1),(1,ω,ω²),(1,ω²,ω)}.
pub fn hyperoval() -> [Point3; 6] {
    let (o, l, w, w2) = (F4::ZERO, F4::ONE, F4::OMEGA, F4::OMEGA2);
    [[l, o, o], [o, l, o], [o, o, l], [l, l, l], [l, w, w2], [l, w2, w]]
}

pub fn in_general_position(pts: &[Point3]) -> bool {
    (0..pts.len()).all(|i| {
        (i + 1..pts.len()).all(|j| (j + 1..pts.len()).all(|k| !collinear(&pts[i], &pts[j], &pts[k])))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_axioms() {
        let c = pg24();
        assert_eq!(c.config_type().to_string(), "(21_5)");
        let n = c.points().len();
        for p in 0..n {
            for q in p + 1..n {
                let common = (0..n).filter(|&l| c.incident(p, l) && c.incident(q, l)).count();
                assert_eq!(common, 1);
            }
        }
        for l in 0..n {
            for m in l + 1..n {
                assert_eq!(c.block(l).iter().filter(|p| c.block(m).contains(p)).count(), 1);
            }
        }
    }

    #[test]
    fn hyperoval_is_arc() {
        let h = hyperoval();
        assert!(in_general_position(&h));
        let mut bad = h;
        bad[5] = [F4::ONE, F4::ONE, F4::ZERO];
        assert!(!in_general_position(&bad));
    }
}
