use algebra_core::{Poly, Scalar, Series};
use curve_geometry::cover::build_cover;
use curve_geometry::curve::{CenterKind, PlaneCurve};
use curve_geometry::places::{ideal_places, on_curve, Place};
use curve_geometry::singular::{genus, singular_points};

const P52: &str = "-x^2*(y - 1)*(y - 2) + y^3 - y^2 - 2*y + 1";
const P61: &str = "x^4*(y - 2)^2 - x^2*(y + 1)*(y - 2)*(2*y - 3) + (y^3 - 3*y - 1)*(y - 1)";
const P41: &str = "2*x^2 + y^2 - x^2*y - y - 1";

fn curve(s: &str) -> PlaneCurve {
    PlaneCurve::new(&Poly::parse(s).unwrap()).unwrap()
}

fn ints(cs: &[(i64, i64)], prec: i64) -> Series {
    Series::new(cs.iter().map(|&(e, c)| (e, Scalar::int(c))), Some(prec))
}

fn place<'a>(ps: &'a [Place], label: &str) -> &'a Place {
    ps.iter().find(|p| p.label == label).unwrap()
}

/// `z/s²` at a place centered at `[0 : 1 : 0]`.
fn z_over_s2(p: &Place) -> Series {
    assert_eq!(p.center.kind, CenterKind::Infinity);
    assert!(p.center.x.is_zero());
    assert_eq!(p.local.0, Series::t());
    p.local.1.shift(-2)
}

#[test]
fn deltas_and_genera() {
    let s52 = singular_points(&curve(P52)).unwrap();
    assert_eq!(s52.len(), 1);
    assert!(s52[0].center.is_ideal());
    assert_eq!((s52[0].delta, s52[0].branches), (1, 2));
    let mut d61: Vec<i64> = singular_points(&curve(P61)).unwrap().iter().map(|s| s.delta).collect();
    d61.sort();
    assert_eq!(d61, vec![3, 4]);
    assert_eq!(genus(&curve(P41)).unwrap(), 1);
    assert_eq!(genus(&curve(P52)).unwrap(), 2);
    assert_eq!(genus(&curve(P61)).unwrap(), 3);
    assert_eq!(genus(&curve("y")).unwrap(), 0);
}

#[test]
fn covers() {
    for (p, gx, ram, chi, gy) in [(P41, 1, 4, -4, 3), (P52, 2, 6, -10, 6), (P61, 3, 8, -16, 9), ("y", 0, 2, 2, 0)] {
        let c = build_cover(&curve(p)).unwrap();
        assert_eq!((c.genus_x, c.ramification_count, c.chi_y, c.genus_y), (gx, ram, chi, gy), "{p}");
        // Never ramified at infinity.
        assert!(c.places.iter().filter(|q| q.ideal).all(|q| q.ramification == 1));
        for q in &c.places {
            assert!(on_curve(&curve(p), &q.x, &q.y).unwrap());
        }
    }
}

#[test]
fn five_two_ideal_expansions() {
    let ps = ideal_places(&curve(P52), 8).unwrap();
    assert_eq!(ps.len(), 3);
    let p1 = place(&ps, "ideal-1");
    assert_eq!(p1.x.truncate(1), ints(&[(-1, 1)], 1));
    assert_eq!(p1.y.truncate(3), ints(&[(0, 1), (2, 1)], 3));
    // At y → 2 the contact is quadratic: v(y − 2) = 2 since x has a simple
    // pole, so no uniformizer produces a linear term.
    let p2 = place(&ps, "ideal-2");
    assert_eq!(p2.y.truncate(3), ints(&[(0, 2), (2, 1)], 3));
    let p3 = place(&ps, "ideal-3");
    assert_eq!(z_over_s2(p3).truncate(4), ints(&[(0, 1), (2, -2)], 4));
}

#[test]
fn six_one_ideal_expansions() {
    let ps = ideal_places(&curve(P61), 10).unwrap();
    assert_eq!(ps.len(), 3);
    // y = 2 − 2a t² + … with 4a² + 6a + 1 = 0, a Galois orbit of two places.
    let p1 = place(&ps, "ideal-1");
    assert_eq!(p1.orbit(), 2);
    let a = p1.y.coeff(2).unwrap() * Scalar::frac(-1, 2);
    let rel = &(&(&a * &a) * &Scalar::int(4)) + &(&(&a * &Scalar::int(6)) + &Scalar::one());
    assert!(rel.is_zero());
    assert!(p1.y.coeff(1).unwrap().is_zero());
    let p2 = place(&ps, "ideal-2");
    assert_eq!(z_over_s2(p2).truncate(8), ints(&[(0, 1), (2, -2), (4, 6), (6, -25)], 8));
    let p3 = place(&ps, "ideal-3");
    assert_eq!(z_over_s2(p3).truncate(4), ints(&[(0, 1), (2, -1)], 4));
}

#[test]
fn figure_eight_ramifies_over_a_quadratic_pair() {
    let c = build_cover(&curve(P41)).unwrap();
    assert_eq!(c.ramification_points, vec!["ram-1", "ram-2"]);
    for l in &c.ramification_points {
        let p = c.base_place(l).unwrap();
        assert_eq!(p.orbit(), 2);
        assert_eq!(p.center.field.as_ref().unwrap().minpoly().len(), 3);
    }
    assert_eq!(c.places.iter().filter(|q| q.ideal).count(), 4);
}

#[test]
fn trefoil_line_has_one_ideal_place() {
    let c = build_cover(&curve("y")).unwrap();
    let ideal: Vec<_> = c.places.iter().filter(|q| q.ideal).collect();
    assert_eq!(ideal.len(), 2);
    assert_eq!(ideal[0].alpha.valuation().unwrap(), -1);
    assert_eq!(ideal[1].alpha.valuation().unwrap(), 1);
    let json = serde_json::to_string(&c.report()).unwrap();
    assert!(json.contains("\"ideal-1a\""));
}
