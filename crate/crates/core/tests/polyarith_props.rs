mod common;

use common::{arb_nonzero_poly, arb_poly, poly};
use proptest::prelude::*;
use telescoper::polyarith::rat::rat;
use telescoper::polyarith::upoly::{series_inverse, series_mul};
use telescoper::polyarith::{gcd_poly, parse_poly, squarefree_part, BiPoly, RatFun, Var};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parses_back(p in arb_poly(3, 3)) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn ring_laws(p in arb_poly(2, 2), q in arb_poly(2, 2), r in arb_poly(2, 2)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&(&p + &q) - &q) == p);
    }

    #[test]
    fn product_rule(p in arb_poly(3, 2), q in arb_poly(2, 3)) {
        for v in [Var::X, Var::Y] {
            let lhs = (&p * &q).diff(v);
            let rhs = &(&p.diff(v) * &q) + &(&p * &q.diff(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(3, 2), q in arb_nonzero_poly(2, 2)) {
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn gcd_divides_and_recovers_common_factor(
        g in arb_nonzero_poly(1, 1),
        p in arb_nonzero_poly(2, 1),
        q in arb_nonzero_poly(1, 2),
    ) {
        let a = &g * &p;
        let b = &g * &q;
        let h = gcd_poly(&a, &b);
        prop_assert!(a.div_exact(&h).is_some());
        prop_assert!(b.div_exact(&h).is_some());
        prop_assert!(h.div_exact(&g.monic()).is_some() || g.is_constant());
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree(p in arb_nonzero_poly(2, 1), q in arb_nonzero_poly(1, 1)) {
        let f = &(&p * &q) * &q;
        let s = squarefree_part(&f);
        prop_assert!(f.div_exact(&s).is_some());
        let same = |u: &BiPoly, w: &BiPoly| u.div_exact(w).is_some_and(|k| k.is_constant());
        prop_assert!(same(&squarefree_part(&s), &s));
        prop_assert!(same(&s, &squarefree_part(&(&p * &q))));
    }

    #[test]
    fn rational_functions_normalize(p in arb_poly(2, 2), q in arb_nonzero_poly(2, 1), g in arb_nonzero_poly(1, 1)) {
        let a = RatFun::new(&p * &g, &q * &g).unwrap();
        let b = RatFun::new(p.clone(), q.clone()).unwrap();
        prop_assert_eq!(&a, &b);
        let back = a.mul(&RatFun::from_poly(q.clone()));
        prop_assert_eq!(back, RatFun::from_poly(p));
    }

    #[test]
    fn quotient_rule(p in arb_poly(2, 2), q in arb_nonzero_poly(2, 1)) {
        let f = RatFun::new(p.clone(), q.clone()).unwrap();
        let want = RatFun::new(&(&p.diff(Var::X) * &q) - &(&p * &q.diff(Var::X)), &q * &q).unwrap();
        prop_assert_eq!(f.diff(Var::X), want);
    }

    #[test]
    fn series_inverse_is_inverse(cs in proptest::collection::vec(-5i64..=5, 1..8), n in 1usize..12) {
        let mut a: Vec<_> = cs.into_iter().map(rat).collect();
        if a[0] == rat(0) {
            a[0] = rat(1);
        }
        let inv = series_inverse(&a, n);
        let prod = series_mul(&a, &inv, n);
        prop_assert_eq!(prod[0].clone(), rat(1));
        prop_assert!(prod[1..].iter().all(|c| *c == rat(0)));
    }
}

#[test]
fn parse_errors_are_reported() {
    assert!(parse_poly("x + * y").is_err());
    assert!(parse_poly("x + z").is_err());
    assert!(parse_poly("1/0").is_err());
    assert_eq!(poly("(x + y)^2"), poly("x^2 + 2*x*y + y^2"));
    assert_eq!(BiPoly::x().degree(Var::Y), 0);
    assert_eq!(
        BiPoly::zero().degree(Var::X),
        telescoper::polyarith::MINUS_INFINITY
    );
}
