//! Exact output: rationals as `p/q`, number-field elements as coefficient
//! vectors in the power basis of the generator `g`.

use algebra_core::{Scalar, Series};
use curve_geometry::field::{self, Field};
use serde_json::{json, Value};

/// Coordinates of `c` in `1, g, …, g^{d−1}`; a single entry over `Q`.
pub fn coords(c: &Scalar, k: &Field) -> Vec<String> {
    match k {
        Some(f) => c.coords_in(f).iter().map(|q| q.to_string()).collect(),
        None => c.coord_strings(),
    }
}

pub fn scalar_json(c: &Scalar, k: &Field) -> Value {
    match k {
        Some(_) => json!(coords(c, k)),
        None => json!(c.to_string()),
    }
}

pub fn scalar_text(c: &Scalar, k: &Field) -> String {
    match k {
        Some(_) => format!("[{}]", coords(c, k).join(", ")),
        None => c.to_string(),
    }
}

pub fn series_json(s: &Series, k: &Field) -> Value {
    let terms: Vec<Value> = s.terms().map(|(&e, c)| json!([e, scalar_json(c, k)])).collect();
    json!({ "terms": terms, "prec": s.prec() })
}

/// `c0 + c1*t + … + O(t^n)`; unit rational coefficients are left implicit.
pub fn series_text(s: &Series, k: &Field) -> String {
    let mut out = String::new();
    for (&e, c) in s.terms() {
        let power = match e {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{e}"),
        };
        let (neg, body) = match (k, c.is_one(), (-c).is_one()) {
            (None, true, _) if e != 0 => (false, power),
            (None, _, true) if e != 0 => (true, power),
            (None, ..) => {
                let neg = c.to_string().starts_with('-');
                let mag = if neg { (-c).to_string() } else { c.to_string() };
                (neg, if e == 0 { mag } else { format!("{mag}*{power}") })
            }
            (Some(_), ..) => (false, if e == 0 { scalar_text(c, k) } else { format!("{}*{power}", scalar_text(c, k)) }),
        };
        push_term(&mut out, neg, &body);
    }
    if let Some(p) = s.prec() {
        push_term(&mut out, false, &format!("O(t^{p})"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn push_term(out: &mut String, neg: bool, body: &str) {
    match (out.is_empty(), neg) {
        (true, false) => out.push_str(body),
        (true, true) => {
            out.push('-');
            out.push_str(body)
        }
        (false, false) => {
            out.push_str(" + ");
            out.push_str(body)
        }
        (false, true) => {
            out.push_str(" - ");
            out.push_str(body)
        }
    }
}

/// The minimal polynomial line, printed once per field.
pub fn field_header(k: &Field) -> Option<String> {
    let basis: Vec<String> = (0..field::degree(k))
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    field::minpoly_string(k).map(|m| format!("coefficients in Q(g) with {m} = 0, as vectors over the basis {}", basis.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::scalar::{rat, NumberField};

    fn ints(cs: &[(i64, i64)], prec: Option<i64>) -> Series {
        Series::new(cs.iter().map(|&(e, c)| (e, Scalar::int(c))), prec)
    }

    #[test]
    fn rational_series() {
        assert_eq!(series_text(&ints(&[(-1, 1), (1, -1), (2, 3)], Some(4)), &None), "t^-1 - t + 3*t^2 + O(t^4)");
        assert_eq!(series_text(&ints(&[(0, -2)], None), &None), "-2");
        assert_eq!(series_text(&Series::new([(0, Scalar::frac(-1, 3))], Some(1)), &None), "-1/3 + O(t^1)");
        assert_eq!(series_text(&ints(&[], Some(3)), &None), "O(t^3)");
    }

    #[test]
    fn number_field_coordinates() {
        let k = Some(NumberField::new(vec![rat(-5), rat(0), rat(1)], "g").unwrap());
        let g = k.as_ref().unwrap().generator();
        assert_eq!(scalar_text(&g, &k), "[0, 1]");
        assert_eq!(scalar_text(&Scalar::frac(1, 2), &k), "[1/2, 0]");
        assert_eq!(scalar_json(&g, &k), serde_json::json!(["0", "1"]));
        assert!(field_header(&k).unwrap().contains("g^2 - 5 = 0"));
        assert_eq!(field_header(&None), None);
    }
}
