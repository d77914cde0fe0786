use algebra_core::factor::factor_rational;
use algebra_core::resultant::discriminant;
use algebra_core::{resultant, NumberField, Poly, Scalar};

fn p(s: &str) -> Poly {
    Poly::parse(s).unwrap()
}

#[test]
fn five_two_curve_value_at_origin_chart_point() {
    let f = p("-x^2*(y-1)*(y-2) + y^3 - y^2 - 2*y + 1");
    let v = f.eval_all(&[("x", Scalar::int(0)), ("y", Scalar::int(1))]).unwrap();
    assert_eq!(v, Scalar::int(-1));
}

#[test]
fn figure_eight_factors() {
    let f = p("(x^2 - y - 2)*(2*x^2 + y^2 - x^2*y - y - 1)");
    let fs = factor_rational(&f).unwrap();
    let mut got: Vec<Poly> = fs.into_iter().map(|(g, m)| {
        assert_eq!(m, 1);
        g
    }).collect();
    got.sort_by_key(|g| g.total_degree());
    assert_eq!(got[0], p("x^2 - y - 2"));
    assert_eq!(got[1], p("2*x^2 + y^2 - x^2*y - y - 1").normalize_unit());
}

#[test]
fn figure_eight_irreducible_part_is_affinely_smooth() {
    // No common zero of P, P_x, P_y: eliminate y from (P, P_y) and (P, P_x)
    // and check the two eliminants share no root.
    let f = p("2*x^2 + y^2 - x^2*y - y - 1");
    let r1 = resultant(&f, &f.derivative("y"), "y").unwrap();
    let r2 = resultant(&f, &f.derivative("x"), "y").unwrap();
    let g = algebra_core::gcd(&r1, &r2);
    assert!(g.is_constant(), "common eliminant factor {g}");
    assert!(!discriminant(&f, "y").unwrap().is_zero());
}

#[test]
fn eisenstein_field_identities() {
    let k = NumberField::from_ints(&[1, 1, 1], "j").unwrap();
    let j = k.generator();
    assert_eq!(&j * &j.pow(2), Scalar::one());
    let d = &j - &j.pow(2);
    assert_eq!(d.pow(2), Scalar::int(-3));
}

#[test]
fn golden_ratio_inverse() {
    let k = NumberField::from_ints(&[-5, 0, 1], "s").unwrap();
    let s = k.generator();
    let phi = &(&Scalar::one() + &s) * &Scalar::frac(1, 2);
    let expected = &(&s - &Scalar::one()) * &Scalar::frac(1, 2);
    assert_eq!(phi.inv().unwrap(), expected);
}
