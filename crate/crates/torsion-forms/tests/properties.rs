use algebra_core::{Poly, Scalar, Series};
use character_variety::symmetrize::{X, Y};
use curve_geometry::cover::build_cover_from;
use curve_geometry::curve::PlaneCurve;
use knot_model::Database;
use proptest::prelude::*;
use torsion_forms::twisted::{point_over, twisted_complex};
use torsion_forms::valuation::valuation_of_parametrization;
use torsion_forms::*;

fn form(name: &str) -> TorsionForm {
    assemble_torsion_form(&Database::bundled().load(name).unwrap()).unwrap()
}

fn knot_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["trefoil", "figure-eight", "5_2"])
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    (1i64..6, 1i64..5, any::<bool>()).prop_map(|(n, d, neg)| Scalar::frac(if neg { -n } else { n }, d))
}

fn eigenvalue() -> impl Strategy<Value = Scalar> {
    (2i64..8, 1i64..4, any::<bool>()).prop_map(|(n, d, neg)| Scalar::frac(if neg { -n } else { n }, d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    /// Orders do not depend on the local parameter: s ↦ c·t + d·t².
    #[test]
    fn orders_survive_reparametrization(
        name in prop::sample::select(vec!["trefoil", "figure-eight"]),
        c in nonzero_rational(),
        d in nonzero_rational(),
        which in 0usize..8,
    ) {
        let f = form(name);
        let cover = build_cover_from(&PlaneCurve::new(&f.curve).unwrap(), 0).unwrap();
        let place = &cover.places[which % cover.places.len()];
        let before = valuation_at_place(&f, place).unwrap();
        let s = Series::new([(1, c), (2, d)], Some(12));
        let cut = |x: &Series| x.truncate(x.val_lower_bound().unwrap_or(0) + 8).compose(&s).unwrap();
        let after = valuation_of_parametrization(&f, &cut(&place.x), &cut(&place.y), &cut(&place.alpha)).unwrap();
        prop_assert_eq!(before, after);
    }

    /// `Z − Z⁻¹` squares to `Y_μ² − 4` at points of the curve.
    #[test]
    fn eigenvalue_identity(name in knot_name(), alpha in eigenvalue(), choice in 0usize..4) {
        let f = form(name);
        let pt = point_over(&f, &alpha, choice).unwrap();
        let at = |p: &Poly| p.eval_all(&[(X, pt.x.clone()), (Y, pt.y.clone())]).unwrap();
        let den = at(&f.z_mu.den);
        prop_assume!(!den.is_zero());
        let z = &(&at(&f.z_mu.a) + &(&at(&f.z_mu.b) * &pt.alpha)) * &den.inv().unwrap();
        prop_assume!(!z.is_zero());
        let diff = &z - &z.inv().unwrap();
        let y = at(&f.y_mu);
        prop_assert_eq!(&diff * &diff, &(&y * &y) - &Scalar::int(4));
    }

    /// `d₁ ∘ d₂ = 0` for every `T`.
    #[test]
    fn twisted_complex_is_a_complex(name in knot_name(), alpha in eigenvalue(), choice in 0usize..4, t in nonzero_rational()) {
        let k = Database::bundled().load(name).unwrap();
        let f = form(name);
        let pt = point_over(&f, &alpha, choice).unwrap();
        let complex = twisted_complex(&k, &pt).unwrap();
        let (d1, d2) = complex.at(&t).unwrap();
        prop_assert!(d1.mul(&d2).is_zero());
    }
}
