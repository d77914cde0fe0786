use algebra_core::Poly;
use character_variety::rep::det2;
use character_variety::trace::specialize_two_bridge;
use character_variety::{trace_of_word, trace_reduce, TautRep};
use knot_model::Word;
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec!['u', 'v', 'U', 'V']), 0..=max)
        .prop_map(Word::from_letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn determinant_is_one(w in word(12)) {
        let rep = TautRep::two_bridge(['u', 'v']);
        prop_assert_eq!(det2(&rep.matrix(&w).unwrap()), Poly::one());
    }

    #[test]
    fn trefoil_determinant_is_one(w in word(8)) {
        let rep = TautRep::trefoil(['u', 'v']);
        prop_assert_eq!(det2(&rep.matrix(&w).unwrap()), Poly::one());
    }

    #[test]
    fn matrix_trace_equals_trace_reduction(w in word(8)) {
        let rep = TautRep::two_bridge(['u', 'v']);
        let direct = trace_of_word(&rep, &w).unwrap().xy;
        let reduced = specialize_two_bridge(&trace_reduce(&w, ['u', 'v']), ['u', 'v']).unwrap();
        prop_assert_eq!(direct, reduced);
    }
}
