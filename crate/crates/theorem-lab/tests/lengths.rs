use algebra_core::{Poly, Scalar, Series};
use curve_geometry::curve::{Center, PlaneCurve};
use curve_geometry::places::newton_puiseux;
use proptest::prelude::*;
use theorem_lab::{branch_torsion_length, monomial_singularity_length};

/// Torsion length of `Ω ⊗ O` for `X^p = Y^q` computed on the module itself:
/// `O dX ⊕ O dY` modulo `p X^{p−1} dX − q Y^{q−1} dY` at `X = S^{q′}`,
/// `Y = S^{p′}`. Over the DVR the quotient is `O ⊕ O/(S^a)` with `a` the
/// smaller valuation of the relation's entries, and the free part maps
/// injectively to `Ω_O`, so the kernel has length `a`.
fn module_length(p: i64, q: i64) -> i64 {
    let n = num_gcd(p, q);
    let (pp, qq) = (p / n, q / n);
    let s = Series::t();
    let x = s.pow(qq as u32);
    let y = s.pow(pp as u32);
    let r1 = x.pow((p - 1) as u32).scale(&Scalar::int(p));
    let r2 = y.pow((q - 1) as u32).scale(&Scalar::int(-q));
    r1.valuation().unwrap().min(r2.valuation().unwrap())
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn xy(p: i64, q: i64) -> Poly {
    Poly::var("x").pow(p as u32).sub(&Poly::var("y").pow(q as u32))
}

fn origin() -> Center {
    Center::affine(Scalar::zero(), Scalar::zero(), None)
}

fn lengths_at_origin(curve: &Poly) -> Vec<i64> {
    let c = PlaneCurve::new(curve).unwrap();
    newton_puiseux(&c, &origin(), 16)
        .unwrap()
        .iter()
        .map(|pl| branch_torsion_length(&c, pl).unwrap())
        .collect()
}

#[test]
fn monomial_branches_match_the_module_computation() {
    for p in 2..=6 {
        for q in p + 1..=6 {
            let want = module_length(p, q);
            assert_eq!(monomial_singularity_length(p, q).unwrap().length, want, "({p}, {q})");
            let got = lengths_at_origin(&xy(p, q));
            assert!(!got.is_empty());
            assert!(got.iter().all(|&l| l == want), "({p}, {q}): {got:?} vs {want}");
        }
    }
}

#[test]
fn cusp_node_and_smooth_branches() {
    assert_eq!(lengths_at_origin(&xy(2, 3)), vec![3]);
    assert_eq!(lengths_at_origin(&xy(2, 2)), vec![1, 1]);
    assert_eq!(monomial_singularity_length(2, 2).unwrap().length, module_length(2, 2));
    let smooth = Poly::var("y").sub(&Poly::var("x").pow(2)).sub(&Poly::var("x"));
    assert_eq!(lengths_at_origin(&smooth), vec![0]);
}

#[test]
fn swapped_exponents_warn() {
    let l = monomial_singularity_length(5, 3).unwrap();
    assert_eq!(l.length, monomial_singularity_length(3, 5).unwrap().length);
    assert!(l.warning.unwrap().contains("swapped"));
}

#[test]
fn ideal_places_are_rejected() {
    let c = PlaneCurve::new(&Poly::var("y").sub(&Poly::var("x").pow(3))).unwrap();
    let ideal = curve_geometry::places::ideal_places(&c, 8).unwrap();
    assert!(branch_torsion_length(&c, &ideal[0]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    /// The length is an analytic invariant: a shear `x ↦ x + c·y` and a
    /// unit factor do not change it.
    #[test]
    fn length_is_invariant_under_shear(p in 2i64..5, dq in 1i64..3, c in -3i64..4, u in 1i64..4) {
        let q = p + dq;
        let x = Poly::var("x").add(&Poly::var("y").scale(&Scalar::int(c)));
        let curve = x.pow(p as u32).scale(&Scalar::int(u)).sub(&Poly::var("y").pow(q as u32));
        let want = monomial_singularity_length(p, q).unwrap().length;
        for l in lengths_at_origin(&curve) {
            prop_assert_eq!(l, want);
        }
    }
}
