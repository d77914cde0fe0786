use algebra_core::factor::factor_rational;
use algebra_core::gcd::gcd;
use algebra_core::{det_valuation_series, resultant, AlgebraError, Matrix, Poly, Scalar, Series};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0i32..3, 0i32..3), -4i64..5), 1..5).prop_map(|terms| {
        Poly::from_terms(
            &["x", "y"],
            terms.into_iter().map(|((a, b), c)| (vec![a, b], Scalar::int(c))).collect(),
        )
    })
}

fn nonconstant_in_y() -> impl Strategy<Value = Poly> {
    small_poly().prop_map(|p| p.add(&Poly::var("y")))
}

fn series_entry() -> impl Strategy<Value = Series> {
    (0i64..3, prop::collection::vec(-3i64..4, 12)).prop_map(|(v, cs)| {
        Series::new(cs.into_iter().enumerate().map(|(i, c)| (v + i as i64, Scalar::int(c))), Some(12))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn addition_is_commutative_with_inverse(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(c in nonconstant_in_y(), a in nonconstant_in_y(), b in nonconstant_in_y()) {
        prop_assume!(a.has_var("y") && b.has_var("y") && c.has_var("y"));
        let r = resultant(&a.mul(&c), &b.mul(&c), "y").unwrap();
        prop_assert!(r.is_zero());
        let g = gcd(&a, &b);
        let r2 = resultant(&a, &b, "y").unwrap();
        prop_assert_eq!(r2.is_zero(), g.has_var("y"));
    }

    #[test]
    fn factorization_remultiplies(a in small_poly(), b in small_poly()) {
        let p = a.mul(&b);
        prop_assume!(!p.is_zero() && !p.is_constant());
        let fs = factor_rational(&p).unwrap();
        let prod = fs.iter().fold(Poly::one(), |acc, (f, m)| acc.mul(&f.pow(*m as u32)));
        prop_assert_eq!(prod.normalize_unit(), p.normalize_unit());
        for (f, _) in &fs {
            let again = factor_rational(f).unwrap();
            prop_assert_eq!(again.len(), 1);
            prop_assert_eq!(again[0].1, 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn det_valuation_matches_leibniz(entries in prop::collection::vec(series_entry(), 9)) {
        let m = Matrix::new(3, 3, entries);
        let brute = m.det_leibniz();
        match brute.valuation() {
            Ok(v) => {
                let d = det_valuation_series(&m).unwrap();
                prop_assert_eq!(d.valuation, v);
                prop_assert_eq!(d.certificate.iter().sum::<usize>() as i64, v);
                prop_assert_eq!(*d.certificate.last().unwrap(), 0);
            }
            Err(_) => {
                let r = det_valuation_series(&m);
                let undetermined = matches!(
                    r,
                    Err(AlgebraError::ZeroDeterminant) | Err(AlgebraError::InsufficientPrecision { .. })
                );
                prop_assert!(undetermined);
            }
        }
    }
}
