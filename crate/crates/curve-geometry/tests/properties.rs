use algebra_core::{Poly, Scalar};
use curve_geometry::curve::{Center, PlaneCurve};
use curve_geometry::puiseux::{is_primitive, local_branches, LX, LY};
use curve_geometry::singular::{delta_invariant, milnor_number};
use num_integer::Integer;
use proptest::prelude::*;

fn origin() -> Center {
    Center::affine(Scalar::zero(), Scalar::zero(), None)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `y^q = x^p` with coprime exponents: one branch, μ = (p−1)(q−1).
    #[test]
    fn quasi_homogeneous_milnor(p in 2i32..8, q in 2i32..6) {
        prop_assume!(p.gcd(&q) == 1);
        let c = PlaneCurve::new(&Poly::parse(&format!("y^{q} - x^{p}")).unwrap()).unwrap();
        prop_assert_eq!(milnor_number(&c, &origin()).unwrap(), ((p - 1) * (q - 1)) as i64);
        prop_assert_eq!(delta_invariant(&c, &origin()).unwrap(), ((p - 1) * (q - 1) / 2) as i64);
    }

    /// Smooth branches `Y = aᵢ X^{eᵢ}`: δ is the sum of pairwise contacts.
    #[test]
    fn smooth_branch_arrangements(
        specs in proptest::collection::btree_set((1i64..4, 1i32..4), 2..4)
    ) {
        let specs: Vec<_> = specs.into_iter().collect();
        let mut f = Poly::one();
        for &(a, e) in &specs {
            f = f.mul(&Poly::parse(&format!("y - {a}*x^{e}")).unwrap());
        }
        let c = PlaneCurve::new(&f).unwrap();
        let mut delta = 0i64;
        for i in 0..specs.len() {
            for j in i + 1..specs.len() {
                let (ai, ei) = specs[i];
                let (aj, ej) = specs[j];
                delta += if ei == ej { assert_ne!(ai, aj); ei as i64 } else { ei.min(ej) as i64 };
            }
        }
        prop_assert_eq!(delta_invariant(&c, &origin()).unwrap(), delta);
    }

    /// Branch conservation: Σ (residue degree)·v(X) = ord_Y f(0, Y), every
    /// residual vanishes and every parametrization is primitive.
    #[test]
    fn puiseux_conservation(
        coeffs in proptest::collection::vec(-3i64..4, 6),
        r in 2i32..5
    ) {
        let mut f = Poly::monomial(Scalar::one(), &[(LY, r)]);
        let mons = [(1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1)];
        for (c, (a, b)) in coeffs.iter().zip(mons) {
            f = f.add(&Poly::monomial(Scalar::int(*c), &[(LX, a), (LY, b)]));
        }
        prop_assume!(algebra_core::gcd::is_squarefree(&f));
        prop_assume!(!f.eval(LX, &Scalar::zero()).unwrap().is_zero());
        let bs = local_branches(&f, &None, 10).unwrap();
        let total: i64 = bs.iter().map(|b| b.degree() as i64 * b.x.valuation().unwrap()).sum();
        prop_assert_eq!(total, r as i64);
        for b in &bs {
            prop_assert!(f.eval_series(&[(LX, &b.x), (LY, &b.y)]).unwrap().is_indistinguishable_from_zero());
            prop_assert!(b.y.is_exact() || is_primitive(&b.x, &b.y));
        }
    }
}
