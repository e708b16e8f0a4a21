mod common;

use common::poly;
use proptest::prelude::*;
use telescoper::algebraic::{
    algebraic_telescoper, annihilates, series_solve, series_solve_linear, to_hyperexp,
    AlgebraicError, AlgebraicInput,
};
use telescoper::polyarith::rat::rat;
use telescoper::polyarith::upoly::series_mul;
use telescoper::polyarith::BiPoly;
use telescoper::telescope::verify_relation;

#[test]
fn square_root_operator_annihilates_series() {
    let input = AlgebraicInput::new(poly("y^2 - x - 1"), rat(1)).unwrap();
    let rel = algebraic_telescoper(&input, 2, 9).unwrap().unwrap();
    assert!(verify_relation(&to_hyperexp(&input).unwrap(), &rel));
    assert!(annihilates(&rel.p, &series_solve(&input, 40)).unwrap());
    // A perturbed operator must not annihilate.
    let mut bad = rel.p.clone();
    bad[0] = &bad[0] + &BiPoly::x();
    assert!(!annihilates(&bad, &series_solve(&input, 40)).unwrap());
    assert!(matches!(
        annihilates(&rel.p, &series_solve(&input, 5)),
        Err(AlgebraicError::SeriesTooShort { .. })
    ));
}

#[test]
fn cubic_root_has_an_operator() {
    let input = AlgebraicInput::new(poly("y^3 + x*y - 1 - x^2"), rat(1)).unwrap();
    let (tx, ty) = input.taus();
    let sizes = telescoper::bounds::algebraic_size_formulas(tx, ty).unwrap();
    let (r, d) = sizes[0];
    let rel = algebraic_telescoper(&input, r as usize, d)
        .unwrap()
        .expect("operator at the predicted size");
    assert!(annihilates(&rel.p, &series_solve(&input, 60)).unwrap());
}

#[test]
fn invalid_inputs() {
    assert!(AlgebraicInput::new(poly("y^2 - x - 1"), rat(2)).is_err());
    assert!(AlgebraicInput::new(poly("x + 1"), rat(0)).is_err());
    // Double root at the origin.
    assert!(AlgebraicInput::new(poly("y^2 - x"), rat(0)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// `m = (1 + k x) y^2 − (1 + c x)`, root near 1: both iterations agree
    /// and `m(x, a(x))` vanishes to the truncation order.
    #[test]
    fn newton_series_solve_the_equation(k in -3i64..=3, c in -3i64..=3, n in 1usize..20) {
        let m = poly(&format!("(1 + {k}*x)*y^2 - (1 + {c}*x)"));
        let input = AlgebraicInput::new(m, rat(1)).unwrap();
        let s = series_solve(&input, n);
        prop_assert_eq!(&s, &series_solve_linear(&input, n));
        let sq = series_mul(&s.coeffs, &s.coeffs, n + 1);
        let lhs = series_mul(&[rat(1), rat(k)], &sq, n + 1);
        let mut rhs = vec![rat(0); n + 1];
        rhs[0] = rat(1);
        if n >= 1 {
            rhs[1] = rat(c);
        }
        prop_assert_eq!(lhs, rhs);
    }
}
