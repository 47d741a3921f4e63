use exact_arith::{q, vars, Field, Matrix, Ring, Q, QI};
use proj_geom::*;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = ProjPoint<Q>> {
    prop::array::uniform4(-5i64..6)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| ProjPoint::from_i64(&c))
}

fn dot<F: Field>(f: &[F], p: &[F]) -> F {
    f.iter().zip(p).fold(F::zero(), |a, (x, y)| a + x.clone() * y.clone())
}

fn to_qi(p: &ProjPoint<Q>) -> ProjPoint<QI> {
    p.map(|x| QI::from(x.clone())).unwrap()
}

proptest! {
    #[test]
    fn plucker_relation_holds(a in point(), b in point()) {
        prop_assume!(a != b);
        let l = plucker_from_points(&a, &b).unwrap();
        let quad = plucker_quadric::<Q>(&vars(&["p12", "p13", "p14", "p23", "p24", "p34"]));
        prop_assert_eq!(quad.eval(l.plucker()).unwrap(), q(0));
    }

    #[test]
    fn plucker_independent_of_spanning_pair(a in point(), b in point(), s in -3i64..4, t in 1i64..4) {
        prop_assume!(a != b);
        let l = plucker_from_points(&a, &b).unwrap();
        let c: Vec<Q> = a.coords().iter().zip(b.coords()).map(|(x, y)| x.clone() * q(s) + y.clone() * q(t)).collect();
        let m = plucker_from_points(&a, &ProjPoint::new(c).unwrap()).unwrap();
        prop_assert_eq!(l, m);
    }

    #[test]
    fn klein_lands_on_sum_of_squares(a in point(), b in point()) {
        prop_assume!(a != b);
        let l = plucker_from_points(&to_qi(&a), &to_qi(&b)).unwrap();
        let k = l.klein().unwrap();
        let s = k.coords().iter().fold(QI::zero(), |acc, x| acc + x.clone() * x.clone());
        prop_assert!(s.is_zero());
    }

    #[test]
    fn alpha_forms_vanish_on_lines_through_point(p in point(), r in point()) {
        prop_assume!(p != r);
        let l = plucker_from_points(&p, &r).unwrap();
        let forms = alpha_plane(&p).unwrap();
        prop_assert_eq!(Matrix::from_rows(forms.clone()).unwrap().rank(), 3);
        for f in forms {
            prop_assert_eq!(dot(&f, l.plucker()), q(0));
        }
    }

    #[test]
    fn beta_forms_vanish_on_lines_in_plane(h in point(), r in point()) {
        let plane = ProjPlane::new(h.coords().to_vec()).unwrap();
        // two points of the plane from its kernel, moved by r
        let ker = Matrix::from_rows(vec![plane.coeffs().to_vec()]).unwrap().kernel();
        let a = ProjPoint::new(ker[0].clone()).unwrap();
        let w: Vec<Q> = (0..4).map(|i| {
            ker[1][i].clone() * r.coords()[0].clone() + ker[2][i].clone() * q(1) + ker[0][i].clone() * r.coords()[1].clone()
        }).collect();
        let Ok(b) = ProjPoint::new(w) else { return Ok(()) };
        prop_assume!(a != b);
        let l = plucker_from_points(&a, &b).unwrap();
        let forms = beta_plane(&plane).unwrap();
        prop_assert_eq!(Matrix::from_rows(forms.clone()).unwrap().rank(), 3);
        for f in forms {
            prop_assert_eq!(dot(&f, l.plucker()), q(0));
        }
    }

    #[test]
    fn homology_squares_to_scalar(a in point(), c in point()) {
        let axis = ProjPlane::new(a.coords().to_vec()).unwrap();
        prop_assume!(!axis.contains(&c));
        let m = harmonic_homology(&axis, &c).unwrap();
        let sq = m.mul(&m).unwrap();
        prop_assert_eq!(sq.clone(), Matrix::identity(4).scale(&sq[(0, 0)]));
        prop_assert_eq!(apply(&m, &c).unwrap(), c);
    }
}
