use algebra_core::gcd::gcd;
use knot_model::fox::fundamental_identity_holds;
use knot_model::{kth_alexander_polynomial, parse_presentation, Word};
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec!['u', 'v', 'U', 'V']), 1..max)
        .prop_map(Word::from_letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fox_identity_holds(w in word(20)) {
        prop_assert!(fundamental_identity_holds(&w, &['u', 'v']));
    }

    #[test]
    fn printer_round_trips(l in word(12), r in word(12)) {
        let text = format!("u,v | {l} = {r}");
        if let Ok(p) = parse_presentation(&text) {
            prop_assert_eq!(parse_presentation(&p.to_string()).unwrap(), p.clone());
            prop_assert_eq!(p.phi_word(p.relator()), 0);
            prop_assert!(p.relator().is_cyclically_reduced());
        }
    }

    #[test]
    fn higher_alexander_polynomials_divide(w in word(10)) {
        let text = format!("u,v | v*{w} = {w}*u");
        if let Ok(p) = parse_presentation(&text) {
            if let (Ok(d1), Ok(d2)) = (kth_alexander_polynomial(&p, 1), kth_alexander_polynomial(&p, 2)) {
                prop_assert_eq!(gcd(&d1, &d2).normalize_unit(), d2.normalize_unit());
            }
        }
    }
}
