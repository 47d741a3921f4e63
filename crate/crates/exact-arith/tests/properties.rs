use exact_arith::*;
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-20i64..20, 1i64..6).prop_map(|(n, d)| qf(n, d))
}

fn small_qi() -> impl Strategy<Value = QI> {
    (small_q(), small_q()).prop_map(|(a, b)| QI::new(a, b))
}

fn f13() -> impl Strategy<Value = F13> {
    (0i64..13).prop_map(F13::new)
}

fn f4() -> impl Strategy<Value = F4> {
    (0usize..4).prop_map(|i| F4::all()[i])
}

fn check_axioms<R: Ring>(a: R, b: R, c: R) {
    assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
    assert_eq!(a.clone() + R::zero(), a.clone());
    assert_eq!(a.clone() * R::one(), a.clone());
    assert!((a.clone() - a.clone()).is_zero());
}

fn check_inverse<F: Field>(a: F) {
    if !a.is_zero() {
        assert_eq!(a.clone() * a.inv().unwrap(), F::one());
    }
}

fn poly_strategy() -> impl Strategy<Value = MultiPoly<Q>> {
    prop::collection::vec(((0u16..3, 0u16..3, 0u16..3), -5i64..5), 0..6).prop_map(|ts| {
        let r = vars(&["x", "y", "z"]);
        MultiPoly::from_terms(&r, ts.into_iter().map(|((a, b, c), k)| (vec![a, b, c], q(k))))
    })
}

fn int_matrix(n: usize, m: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-6i64..7, n * m).prop_map(move |v| {
        IntMatrix::from_i64(&v.chunks(m).map(|r| r.to_vec()).collect::<Vec<_>>())
    })
}

proptest! {
    #[test]
    fn rational_field_axioms(a in small_q(), b in small_q(), c in small_q()) {
        check_axioms(a.clone(), b, c);
        check_inverse(a);
    }

    #[test]
    fn gaussian_field_axioms(a in small_qi(), b in small_qi(), c in small_qi()) {
        check_axioms(a.clone(), b, c);
        check_inverse(a);
    }

    #[test]
    fn prime_field_axioms(a in f13(), b in f13(), c in f13()) {
        check_axioms(a, b, c);
        check_inverse(a);
    }

    #[test]
    fn f4_axioms(a in f4(), b in f4(), c in f4()) {
        check_axioms(a, b, c);
        check_inverse(a);
    }

    #[test]
    fn polynomial_ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        check_axioms(a, b, c);
    }

    #[test]
    fn product_divides_exactly(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero_poly());
        let p = a.clone() * b.clone();
        prop_assert_eq!(p.div_exact_poly(&b), Some(a));
    }

    #[test]
    fn derivative_is_a_derivation(a in poly_strategy(), b in poly_strategy()) {
        let lhs = (a.clone() * b.clone()).partial(1);
        let rhs = a.partial(1) * b.clone() + a * b.partial(1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pfaffian_squares_to_determinant(v in prop::collection::vec(-5i64..6, 15)) {
        let n = 6;
        let mut m = Matrix::<Q>::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m[(i, j)] = q(v[k]);
                m[(j, i)] = q(-v[k]);
                k += 1;
            }
        }
        prop_assert_eq!(m.pfaffian().unwrap().pow(2), m.det().unwrap());
    }

    #[test]
    fn bareiss_matches_leibniz(m in int_matrix(4, 4)) {
        prop_assert_eq!(m.det().unwrap(), m.det_leibniz().unwrap());
    }

    #[test]
    fn smith_form_is_unimodular_and_divisible(m in int_matrix(4, 5)) {
        let s = m.smith();
        let d = s.u.mul(&m).unwrap().mul(&s.v).unwrap();
        for i in 0..4 {
            for j in 0..5 {
                let e = if i == j { s.diag[i].clone() } else { Z::from(0) };
                prop_assert_eq!(&d[(i, j)], &e);
            }
        }
        prop_assert_eq!(num_abs(s.u.det().unwrap()), Z::from(1));
        prop_assert_eq!(num_abs(s.v.det().unwrap()), Z::from(1));
        for w in s.diag.windows(2) {
            if !w[0].is_zero() {
                prop_assert!((w[1].clone() % w[0].clone()).is_zero());
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
    }

    #[test]
    fn inertia_is_congruence_invariant(sym in prop::collection::vec(-4i64..5, 10), p in int_matrix(4, 4)) {
        prop_assume!(!p.det().unwrap().is_zero());
        let mut g = IntMatrix::zeros(4, 4);
        let mut k = 0;
        for i in 0..4 {
            for j in i..4 {
                g[(i, j)] = Z::from(sym[k]);
                g[(j, i)] = Z::from(sym[k]);
                k += 1;
            }
        }
        let h = p.transpose().mul(&g).unwrap().mul(&p).unwrap();
        prop_assert_eq!(inertia(&g.to_q()).unwrap(), inertia(&h.to_q()).unwrap());
    }
}

fn num_abs(x: Z) -> Z {
    if x < Z::from(0) { -x } else { x }
}
