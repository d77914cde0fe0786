use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use algebra_core::Scalar;
use knot_model::{Database, KnotRecord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torsion_forms::divisor::smooth_spot_check;
use torsion_forms::twisted::sample_points;
use torsion_forms::*;

fn knot(name: &str) -> KnotRecord {
    Database::bundled().load(name).unwrap()
}

/// Divisors are shared between tests; 6_1 takes a few seconds.
fn div(name: &str) -> Divisor {
    static CACHE: OnceLock<Mutex<HashMap<String, Divisor>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().unwrap().get(name) {
        return d.clone();
    }
    let d = divisor(&assemble_torsion_form(&knot(name)).unwrap()).unwrap();
    cache.lock().unwrap().insert(name.to_string(), d.clone());
    d
}

fn orders(d: &Divisor) -> Vec<(String, i64)> {
    d.entries.iter().map(|e| (e.label.clone(), e.order)).collect()
}

fn expect(d: &Divisor, want: &[(&str, i64)]) {
    let want: Vec<(String, i64)> = want.iter().map(|(l, o)| (l.to_string(), *o)).collect();
    assert_eq!(orders(d), want);
}

#[test]
fn trefoil_divisor() {
    let d = div("trefoil");
    expect(&d, &[("ideal-1a", -1), ("ideal-1b", -1), ("ram-1", 0), ("ram-2", 0)]);
    assert_eq!((d.degree, d.genus_y), (-2, 0));
    assert_eq!(d.ideal_orders(), vec![-1, -1]);
}

#[test]
fn figure_eight_divisor() {
    let d = div("figure-eight");
    expect(&d, &[("ideal-1a", 1), ("ideal-1b", 1), ("ideal-2a", 1), ("ideal-2b", 1), ("ram-1", 0), ("ram-2", 0)]);
    assert_eq!((d.degree, d.genus_y), (4, 3));
}

#[test]
fn five_two_divisor() {
    let d = div("5_2");
    expect(
        &d,
        &[
            ("ideal-1a", 3),
            ("ideal-1b", 3),
            ("ideal-2a", 1),
            ("ideal-2b", 1),
            ("ideal-3a", 1),
            ("ideal-3b", 1),
            ("ram-1", 0),
            ("ram-2", 0),
        ],
    );
    assert_eq!((d.degree, d.genus_y), (10, 6));
}

#[test]
fn six_one_divisor() {
    let d = div("6_1");
    expect(
        &d,
        &[
            ("ideal-1a", 1),
            ("ideal-1b", 1),
            ("ideal-2a", 1),
            ("ideal-2b", 1),
            ("ideal-3a", 5),
            ("ideal-3b", 5),
            ("ram-1", 0),
            ("ram-2", 0),
        ],
    );
    // ideal-1a and ideal-1b each stand for a conjugate pair.
    assert_eq!(d.ideal_orders(), vec![1, 1, 1, 1, 1, 1, 5, 5]);
    assert_eq!((d.degree, d.genus_y), (16, 9));
}

#[test]
fn divisors_are_supported_at_ideal_places() {
    for name in ["trefoil", "figure-eight", "5_2", "6_1"] {
        let d = div(name);
        assert!(d.finite_support().is_empty(), "{name}");
        let r = d.report();
        assert!(r.genus_check.ok, "{name}");
        assert_eq!(r.genus_check.expected_degree, 2 * d.genus_y - 2);
    }
}

#[test]
fn unit_certificates() {
    for (name, norm) in [("trefoil", "-4"), ("figure-eight", "16"), ("5_2", "64"), ("6_1", "256")] {
        let c = certify_finite_support(&assemble_torsion_form(&knot(name)).unwrap()).unwrap();
        assert_eq!(c.norm, norm, "{name}");
    }
}

#[test]
fn smooth_places_have_order_zero() {
    for name in ["trefoil", "figure-eight", "5_2"] {
        let f = assemble_torsion_form(&knot(name)).unwrap();
        // x₀ = α₀ + α₀⁻¹ keeps the lift free of field towers.
        let xs = [Scalar::frac(10, 3), Scalar::frac(5, 2), Scalar::frac(-17, 4)];
        assert!(smooth_spot_check(&f, &xs).unwrap() > 0, "{name}");
    }
}

#[test]
fn report_serializes() {
    let d = div("figure-eight");
    let v = serde_json::to_value(d.report()).unwrap();
    assert_eq!(v["degree"], 4);
    assert_eq!(v["finite_support"]["norm"], "16");
    assert_eq!(v["places"][0]["label"], "ideal-1a");
    let f = serde_json::to_value(assemble_torsion_form(&knot("figure-eight")).unwrap().report()).unwrap();
    assert_eq!(f["orientation"], "inverse");
}

fn cayley_agreement(name: &str, count: usize, seed: u64) -> Vec<CayleyEvaluation> {
    let k = knot(name);
    let f = assemble_torsion_form(&k).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = sample_points(&k, &f, &mut rng, count).unwrap();
    pts.iter()
        .map(|p| {
            let e = torsion_via_cayley(&k, &f, p).unwrap();
            assert!(e.agrees_up_to_sign, "{name} at x = {}: {} vs {}", e.x, e.tau_cayley, e.tau_form);
            assert_eq!(e.homology, (0, 1, 1));
            e
        })
        .collect()
}

#[test]
fn trefoil_torsion_is_constant() {
    for e in cayley_agreement("trefoil", 5, 7) {
        assert_eq!(e.tau_cayley, "-1/2");
        assert_eq!(e.tau_form, "-1/2");
    }
}

#[test]
fn figure_eight_cayley_agreement() {
    cayley_agreement("figure-eight", 5, 11);
}

#[test]
fn five_two_cayley_agreement() {
    cayley_agreement("5_2", 5, 13);
}

#[test]
fn six_one_cayley_agreement() {
    cayley_agreement("6_1", 3, 17);
}

#[test]
fn sample_points_are_deterministic() {
    let k = knot("figure-eight");
    let f = assemble_torsion_form(&k).unwrap();
    let a = sample_points(&k, &f, &mut ChaCha8Rng::seed_from_u64(3), 4).unwrap();
    let b = sample_points(&k, &f, &mut ChaCha8Rng::seed_from_u64(3), 4).unwrap();
    assert_eq!(a, b);
}
