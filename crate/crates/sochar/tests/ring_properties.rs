//! Randomized ring-axiom and determinant properties.

use proptest::prelude::*;
use sochar::{det_bareiss, det_cofactor, Coefficient, LaurentPoly, SquareMatrix, TruncatedSeries};

const VARS: usize = 2;

fn arb_coeff() -> impl Strategy<Value = Coefficient> {
    (-9i64..=9).prop_map(Coefficient::from_i64)
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec(
        (proptest::collection::vec(-4i32..=4, VARS), arb_coeff()),
        0..4,
    )
    .prop_map(|terms| {
        let mut p = LaurentPoly::zero(VARS);
        for (exp, c) in terms {
            // even doubled exponents: ordinary Laurent monomials
            let exp: Vec<i32> = exp.into_iter().map(|d| 2 * d).collect();
            let t = LaurentPoly::term(VARS, exp, c).unwrap();
            p = p.try_add(&t).unwrap();
        }
        p
    })
}

fn arb_nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

const CAP: usize = 4;

fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(
        (proptest::collection::vec(0u32..=2, 2), arb_poly()),
        0..4,
    )
    .prop_map(|terms| {
        let mut s = TruncatedSeries::zero(VARS, 2, CAP);
        for (exp, c) in terms {
            let t = TruncatedSeries::term(VARS, 2, CAP, exp, c).unwrap();
            s = s.try_add(&t).unwrap();
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
    }

    #[test]
    fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let left = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
        let right = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let left = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let right = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exact_cancellation(a in arb_poly(), b in arb_poly()) {
        let sum = a.try_add(&b).unwrap();
        prop_assert_eq!(sum.try_sub(&b).unwrap(), a);
    }

    #[test]
    fn division_undoes_multiplication(a in arb_nonzero_poly(), b in arb_nonzero_poly()) {
        let prod = a.try_mul(&b).unwrap();
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn series_ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        let left = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let right = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.try_add(&b).unwrap().try_sub(&b).unwrap(), a);
    }

    #[test]
    fn series_truncation_is_a_homomorphism(a in arb_series(), b in arb_series()) {
        let smaller = CAP - 1;
        let direct = a.try_mul(&b).unwrap().truncate(smaller);
        let truncated = a.truncate(smaller).try_mul(&b.truncate(smaller)).unwrap();
        prop_assert_eq!(direct, truncated);
    }

    #[test]
    fn determinant_alternates_on_row_swap(rows in proptest::collection::vec(
        proptest::collection::vec(arb_poly(), 3), 3))
    {
        let m = SquareMatrix::new(rows.clone()).unwrap();
        let mut swapped = rows;
        swapped.swap(0, 2);
        let ms = SquareMatrix::new(swapped).unwrap();
        prop_assert_eq!(det_cofactor(&m), det_cofactor(&ms).neg_ref());
    }

    #[test]
    fn determinant_algorithms_agree(rows in proptest::collection::vec(
        proptest::collection::vec(arb_poly(), 4), 4))
    {
        let m = SquareMatrix::new(rows).unwrap();
        prop_assert_eq!(det_cofactor(&m), det_bareiss(&m));
    }
}
