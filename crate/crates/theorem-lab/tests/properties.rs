use algebra_core::{Poly, Scalar};
use proptest::prelude::*;
use theorem_lab::finite::{alexander_root_classes, prediction_for_multiplicity};
use theorem_lab::Hypotheses;

proptest! {
    /// `Δ = Π (a_i t − b_i)^{r_i}`: each class predicts `2r − 2`, and simple
    /// roots need no extra hypotheses.
    #[test]
    fn root_classes_predict_two_r_minus_two(
        roots in prop::collection::btree_map(2i64..12, 1usize..4, 1..4),
    ) {
        let t = Poly::var("t");
        let delta = roots.iter().fold(Poly::one(), |acc, (&b, &r)| acc.mul(&t.sub(&Poly::int(b)).pow(r as u32)));
        let classes = alexander_root_classes(&delta).unwrap();
        prop_assert_eq!(classes.len(), roots.len());
        for c in &classes {
            prop_assert_eq!(c.predicted, 2 * c.multiplicity as i64 - 2);
            prop_assert_eq!(c.hypotheses == Hypotheses::Automatic, c.multiplicity == 1);
        }
        let mut want: Vec<usize> = roots.values().copied().collect();
        let mut got: Vec<usize> = classes.iter().map(|c| c.multiplicity).collect();
        want.sort();
        got.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn simple_roots_predict_zero(k in 1i64..20) {
        let t = Poly::var("t");
        let delta = t.pow(2).sub(&t.scale(&Scalar::int(2 * k + 1))).add(&Poly::one());
        for c in alexander_root_classes(&delta).unwrap() {
            prop_assert_eq!((c.predicted, c.hypotheses), prediction_for_multiplicity(1));
            prop_assert_eq!(c.predicted, 0);
        }
    }
}
