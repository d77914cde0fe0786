//! Fox free differential calculus in the integral group ring of a free group.

use crate::presentation::GroupPresentation;
use crate::word::Word;
use algebra_core::{Poly, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// A finite Z-linear combination of freely reduced words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, 1)
    }

    pub fn term(w: Word, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<Word, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Word, c: i64) {
        let e = self.terms.entry(w).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (w, &c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &o.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    /// Image in `Z[t^{±1}]` under `g ↦ t^{φ(g)}`.
    pub fn abelianize(&self, p: &GroupPresentation) -> Poly {
        let mut out = Poly::zero_in(&["t"]);
        for (w, &c) in &self.terms {
            out = out.add(&Poly::monomial(Scalar::int(c), &[("t", p.phi_word(w) as i32)]));
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let sep = if i > 0 { " " } else { "" };
            let space = if i > 0 { " " } else { "" };
            match c.abs() {
                1 => write!(f, "{sep}{sign}{space}{w}")?,
                k => write!(f, "{sep}{sign}{space}{k}*{w}")?,
            }
        }
        Ok(())
    }
}

/// `∂r/∂g` by the Fox rules: `∂(w₁w₂) = ∂w₁ + w₁∂w₂` and `∂g⁻¹ = −g⁻¹`.
pub fn fox_derivative(r: &Word, gen: char) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix: Vec<char> = vec![];
    for &c in r.letters() {
        if c == gen {
            out.add_term(Word::from_letters(prefix.iter().copied()), 1);
        }
        prefix.push(c);
        if c == gen.to_ascii_uppercase() {
            out.add_term(Word::from_letters(prefix.iter().copied()), -1);
        }
    }
    out
}

/// Checks `Σ_g (∂r/∂g)(g − 1) = r − 1`.
pub fn fundamental_identity_holds(r: &Word, generators: &[char]) -> bool {
    let one = GroupRingElement::word(Word::empty());
    let lhs = generators.iter().fold(GroupRingElement::zero(), |acc, &g| {
        let gm1 = GroupRingElement::word(Word::from_letters([g])).sub(&one);
        acc.add(&fox_derivative(r, g).mul(&gm1))
    });
    lhs == GroupRingElement::word(r.clone()).sub(&one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn basic_rules() {
        assert_eq!(fox_derivative(&w("u"), 'u'), GroupRingElement::word(Word::empty()));
        assert_eq!(fox_derivative(&w("uv"), 'v'), GroupRingElement::word(w("u")));
        assert_eq!(fox_derivative(&w("U"), 'u'), GroupRingElement::term(w("U"), -1));
    }

    #[test]
    fn commutator_abelianized() {
        let p = parse_presentation("u,v | u = v").unwrap();
        let d = fox_derivative(&w("UVuv"), 'u');
        assert_eq!(d.to_string(), "-U + UV");
        let a = d.abelianize(&p);
        assert_eq!(a, Poly::parse("t^-2 - t^-1").unwrap());
        // Equal to 1 − t⁻¹ up to the unit −t⁻¹.
        let n = crate::alexander::normalize_laurent;
        assert_eq!(n(&a), n(&Poly::parse("1 - t^-1").unwrap()));
    }

    #[test]
    fn identity_on_samples() {
        for s in ["aaBBB", "vuVUvUVuvU", "uVUvuVUvuVUvUVuvUVuv"] {
            assert!(fundamental_identity_holds(&w(s), &['a', 'b', 'u', 'v']));
        }
    }
}
