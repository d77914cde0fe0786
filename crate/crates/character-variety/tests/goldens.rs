use algebra_core::Poly;
use character_variety::augmented::{eigenvalue_function, AugmentedCurve, FfElem};
use character_variety::trace::{agrees_mod, trace_of_word};
use character_variety::variety::check_pinned;
use character_variety::{build_taut_rep, defining_polynomial, irreducibility_witness, ComponentKind};
use knot_model::{Database, KnotRecord};

fn p(s: &str) -> Poly {
    Poly::parse(s).unwrap()
}

fn load(name: &str) -> KnotRecord {
    Database::bundled().load(name).unwrap()
}

#[test]
fn figure_eight_polynomial_and_components() {
    let k = load("figure-eight");
    let rep = build_taut_rep(&k).unwrap();
    let data = defining_polynomial(&k, &rep).unwrap();
    let expected = p("(x^2 - y - 2)*(2*x^2 + y^2 - x^2*y - y - 1)");
    assert_eq!(data.full.normalize_unit(), expected.normalize_unit());
    let red: Vec<_> = data.components.iter().filter(|c| c.kind == ComponentKind::Reducible).collect();
    assert_eq!(red.len(), 1);
    assert_eq!(red[0].poly.normalize_unit(), p("x^2 - y - 2").normalize_unit());
    assert_eq!(data.irreducible().count(), 1);
    assert!(irreducibility_witness(&rep, &red[0].poly).is_err());
    check_pinned(&data, &k.polynomial_p()).unwrap();
}

#[test]
fn pinned_curves_match() {
    let cases = [
        ("5_2", "-x^2*(y-1)*(y-2) + y^3 - y^2 - 2*y + 1"),
        ("6_1", "x^4*(y-2)^2 - x^2*(y+1)*(y-2)*(2*y-3) + (y^3-3*y-1)*(y-1)"),
        ("trefoil", "y"),
    ];
    for (name, irr) in cases {
        let k = load(name);
        let rep = build_taut_rep(&k).unwrap();
        let data = defining_polynomial(&k, &rep).unwrap();
        assert_eq!(data.main_component().unwrap().normalize_unit(), p(irr).normalize_unit(), "{name}");
        check_pinned(&data, &k.polynomial_p()).unwrap();
        irreducibility_witness(&rep, data.main_component().unwrap()).unwrap();
    }
}

#[test]
fn longitude_traces_match_pinned_values() {
    for name in ["figure-eight", "5_2", "6_1"] {
        let k = load(name);
        let rep = build_taut_rep(&k).unwrap();
        let data = defining_polynomial(&k, &rep).unwrap();
        let pres = k.presentation().unwrap();
        let tr = trace_of_word(&rep, &k.longitude_word(&pres).unwrap()).unwrap().xy;
        assert!(agrees_mod(&tr, &k.y_mu_poly(), data.main_component().unwrap()).unwrap(), "{name}");
    }
    assert!(agrees_mod(
        &trace_of_word(&build_taut_rep(&load("figure-eight")).unwrap(), &"vUVuuVUv".parse_word()).unwrap().xy,
        &p("x^4 - 5*x^2 + 2"),
        &p("2*x^2 + y^2 - x^2*y - y - 1"),
    )
    .unwrap());
}

#[test]
fn printed_five_two_longitude_trace_differs_from_derived() {
    let k = load("5_2");
    let printed = k.y_mu_printed.as_ref().unwrap().to_poly().unwrap();
    let curve = p("-x^2*(y-1)*(y-2) + y^3 - y^2 - 2*y + 1");
    assert!(!agrees_mod(&printed, &k.y_mu_poly(), &curve).unwrap());
}

#[test]
fn longitude_eigenvalues() {
    for name in ["figure-eight", "5_2", "6_1", "trefoil"] {
        let k = load(name);
        let rep = build_taut_rep(&k).unwrap();
        let data = defining_polynomial(&k, &rep).unwrap();
        let curve = AugmentedCurve::new(data.main_component().unwrap().clone());
        let pres = k.presentation().unwrap();
        let m = k.meridian_word(&pres).unwrap();
        for w in [k.longitude_word(&pres).unwrap(), m.clone()] {
            let z = eigenvalue_function(&curve, &rep, &m, &w).unwrap();
            let zi = eigenvalue_function(&curve, &rep, &m, &w.inverse()).unwrap();
            assert!(curve.equal(&z.mul(&zi), &FfElem::from_poly(Poly::one())).unwrap(), "{name}");
            let tr = trace_of_word(&rep, &w).unwrap().xy;
            assert!(curve.equal(&z.add(&zi), &FfElem::from_poly(tr)).unwrap(), "{name} {w}");
        }
        let zm = eigenvalue_function(&curve, &rep, &m, &m).unwrap();
        assert!(curve.equal(&zm, &FfElem::alpha()).unwrap(), "{name}");
    }
}

#[test]
fn trefoil_longitude_is_minus_meridian_power() {
    let k = load("trefoil");
    let rep = build_taut_rep(&k).unwrap();
    let curve = AugmentedCurve::new(p("y"));
    let pres = k.presentation().unwrap();
    let m = k.meridian_word(&pres).unwrap();
    let z = eigenvalue_function(&curve, &rep, &m, &k.longitude_word(&pres).unwrap()).unwrap();
    assert!(curve.equal(&z, &FfElem::alpha_pow(-6).neg()).unwrap());
}

trait ParseWord {
    fn parse_word(&self) -> knot_model::Word;
}

impl ParseWord for str {
    fn parse_word(&self) -> knot_model::Word {
        knot_model::Word::parse(self).unwrap()
    }
}
