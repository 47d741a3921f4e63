use exact_arith::{parse_poly, vars, MultiPoly, Ring, Vars};

use crate::error::HyperError;

/// Exact polynomial equality; both sides must live in the same ring.
pub fn verify_identity<R: Ring>(lhs: &MultiPoly<R>, rhs: &MultiPoly<R>) -> Result<bool, HyperError> {
    if lhs.vars() != rhs.vars() && !lhs.vars().is_empty() && !rhs.vars().is_empty() {
        return Err(HyperError::Arith(exact_arith::ArithError::MixedRing));
    }
    Ok(lhs == rhs)
}

pub fn xyzw() -> Vars {
    vars(&["x", "y", "z", "w"])
}

/// -16xyzw + T′ + T″ with the printed face products.
pub fn desmic_tetrahedra_sum<R: Ring>() -> MultiPoly<R> {
    parse_poly(
        &xyzw(),
        "-16x y z w + (x-y-z+w)(x-y+z-w)(x+y-z-w)(x+y+z+w) + (-x+y+z+w)(x-y+z+w)(x+y-z+w)(x+y+z-w)",
        &[],
    )
    .expect("well-formed")
}

/// Both sides of the eight-squares identity.
pub fn eight_squares<R: Ring>() -> (MultiPoly<R>, MultiPoly<R>) {
    let r = xyzw();
    let lhs = parse_poly(&r, "8(x^2+y^2+z^2+w^2)", &[]).unwrap();
    let rhs = parse_poly(
        &r,
        "(x-y-z-w)^2+(x-y+z+w)^2+(x+y-z+w)^2+(x+y+z-w)^2+(x-y-z+w)^2+(x-y+z-w)^2+(x+y-z-w)^2+(x+y+z+w)^2",
        &[],
    )
    .unwrap();
    (lhs, rhs)
}

/// The eight linear forms of the eight-squares identity.
pub fn eight_forms<R: Ring>() -> Vec<MultiPoly<R>> {
    ["x-y-z-w", "x-y+z+w", "x+y-z+w", "x+y+z-w", "x-y-z+w", "x-y+z-w", "x+y-z-w", "x+y+z+w"]
        .iter()
        .map(|s| parse_poly(&xyzw(), s, &[]).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::Q;

    #[test]
    fn printed_identities_hold() {
        assert!(desmic_tetrahedra_sum::<Q>().is_zero_poly());
        let (l, r) = eight_squares::<Q>();
        assert!(verify_identity(&l, &r).unwrap());
    }

    #[test]
    fn eight_forms_substitution() {
        let s = vars(&["s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8"]);
        let f: MultiPoly<Q> = parse_poly(&s, "s1^2+s2^2+s3^2+s4^2+s5^2+s6^2+s7^2+s8^2", &[]).unwrap();
        let g = f.subst_all(&eight_forms()).unwrap();
        assert_eq!(g, eight_squares::<Q>().0);
        let other = parse_poly::<Q>(&vars(&["u"]), "u", &[]).unwrap();
        assert!(verify_identity(&g, &other).is_err());
    }
}
