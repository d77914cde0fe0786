//! Two-generator one-relator presentations.
//!
//! Grammar: `<gens> | <word> = <word>` where generators are single
//! lower-case letters, inverses are written `g^-1` or upper-case `G`,
//! `[a,b]` is the commutator `a b a⁻¹ b⁻¹`, parentheses group, and `^n`
//! raises to an integer power. `*` between factors is optional; `1` is the
//! empty word.

use crate::error::{KnotError, Result};
use crate::word::Word;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<char>,
    relator: Word,
    phi: BTreeMap<char, i64>,
}

impl GroupPresentation {
    /// Builds a presentation from the relator `lhs·rhs⁻¹`, freely and
    /// cyclically reduced, and derives the abelianization.
    pub fn new(generators: Vec<char>, lhs: &Word, rhs: &Word) -> Result<GroupPresentation> {
        if generators.len() != 2 {
            return Err(KnotError::Unsupported(format!(
                "{} generators (exactly two are supported)",
                generators.len()
            )));
        }
        let relator = lhs.concat(&rhs.inverse()).cyclic_reduce();
        if relator.is_empty() {
            return Err(KnotError::TrivialRelator);
        }
        for g in relator.generators() {
            if !generators.contains(&g) {
                return Err(KnotError::Unsupported(format!("relator uses unknown generator `{g}`")));
            }
        }
        let e0 = relator.exponent_sum(generators[0]);
        let e1 = relator.exponent_sum(generators[1]);
        if e0 == 0 && e1 == 0 {
            return Err(KnotError::NotSurjective("relator has zero exponent sums".into()));
        }
        // φ is the kernel direction of (e0, e1), primitive, positive on the
        // first generator (or on the second when the first is killed).
        let g = gcd(e0, e1);
        let (mut a, mut b) = (-e1 / g, e0 / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        let phi = BTreeMap::from([(generators[0], a), (generators[1], b)]);
        Ok(GroupPresentation { generators, relator, phi })
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    /// Abelianization `φ: Γ → Z` on a generator.
    pub fn phi(&self, g: char) -> i64 {
        self.phi[&g.to_ascii_lowercase()]
    }

    /// `φ` of a word.
    pub fn phi_word(&self, w: &Word) -> i64 {
        self.generators.iter().map(|&g| w.exponent_sum(g) * self.phi[&g]).sum()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|c| c.to_string()).collect();
        write!(f, "{} | {} = 1", gens.join(","), self.relator)
    }
}

/// Parses `<gens> | <word> = <word>`.
pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let bar = text
        .find('|')
        .ok_or_else(|| KnotError::Parse { pos: text.len(), msg: "expected `|` after generators".into() })?;
    let mut generators = vec![];
    let mut offset = 0;
    for part in text[..bar].split(',') {
        let name = part.trim();
        let pos = offset + part.find(|c: char| !c.is_whitespace()).unwrap_or(0);
        let mut chars = name.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if c.is_ascii_lowercase() => {
                if generators.contains(&c) {
                    return Err(KnotError::Parse { pos, msg: format!("duplicate generator `{c}`") });
                }
                generators.push(c);
            }
            _ => {
                return Err(KnotError::Parse {
                    pos,
                    msg: format!("generator `{name}` must be a single lower-case letter"),
                })
            }
        }
        offset += part.len() + 1;
    }
    let mut p = WordParser { s: text.as_bytes(), pos: bar + 1, gens: &generators };
    let lhs = p.word()?;
    p.ws();
    if p.peek() != Some(b'=') {
        return Err(p.err("expected `=`"));
    }
    p.pos += 1;
    let rhs = p.word()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    GroupPresentation::new(generators, &lhs, &rhs)
}

/// Parses a word expression over the given generators (same syntax as the
/// two sides of a presentation).
pub fn parse_word(text: &str, generators: &[char]) -> Result<Word> {
    let mut p = WordParser { s: text.as_bytes(), pos: 0, gens: generators };
    let w = p.word()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(w)
}

struct WordParser<'a> {
    s: &'a [u8],
    pos: usize,
    gens: &'a [char],
}

impl WordParser<'_> {
    fn err(&self, msg: &str) -> KnotError {
        KnotError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word> {
        let mut acc = Word::empty();
        let mut any = false;
        loop {
            match self.peek() {
                Some(b'*') if any => {
                    self.pos += 1;
                    acc = acc.concat(&self.factor()?);
                }
                Some(c) if c == b'(' || c == b'[' || c == b'1' || c.is_ascii_alphabetic() => {
                    acc = acc.concat(&self.factor()?);
                    any = true;
                }
                _ => break,
            }
        }
        if !any {
            return Err(self.err("expected a word"));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let neg = self.s.get(self.pos) == Some(&b'-');
            if neg {
                self.pos += 1;
            }
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected an integer exponent"));
            }
            let n: i32 = std::str::from_utf8(&self.s[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(if neg { -n } else { n }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::empty())
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("unbalanced `(`"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.word()?;
                if self.peek() != Some(b',') {
                    return Err(self.err("expected `,` in commutator"));
                }
                self.pos += 1;
                let b = self.word()?;
                if self.peek() != Some(b']') {
                    return Err(self.err("unbalanced `[`"));
                }
                self.pos += 1;
                Ok(Word::commutator(&a, &b))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let c = c as char;
                if !self.gens.contains(&c.to_ascii_lowercase()) {
                    return Err(self.err(&format!("unknown generator `{c}`")));
                }
                self.pos += 1;
                Ok(Word::from_letters([c]))
            }
            Some(b')') | Some(b']') => Err(self.err("unbalanced closing bracket")),
            _ => Err(self.err("expected a generator, `(`, `[` or `1`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_eight() {
        let p = parse_presentation("u,v | v*[u,V]*u^-1*[u,V]^-1 = 1").unwrap();
        assert_eq!(p.relator().to_string(), "vuVUvUVuvU");
        assert_eq!((p.phi('u'), p.phi('v')), (1, 1));
    }

    #[test]
    fn trefoil() {
        let p = parse_presentation("a,b | a^2 = b^3").unwrap();
        assert_eq!(p.relator().to_string(), "aaBBB");
        assert_eq!((p.phi('a'), p.phi('b')), (3, 2));
        assert_eq!(p.phi_word(p.relator()), 0);
    }

    #[test]
    fn trivial_relator() {
        assert_eq!(parse_presentation("u,v | u = u"), Err(KnotError::TrivialRelator));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_presentation("u,v | [u,v = 1") {
            Err(KnotError::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_presentation("u,v | u*w = v"), Err(KnotError::Parse { pos: 8, .. })));
        assert!(matches!(parse_presentation("u,v | (uv = v"), Err(KnotError::Parse { .. })));
    }

    #[test]
    fn printer_round_trip() {
        let p = parse_presentation("u,v | v*(uVUv)^2 = (uVUv)^2*u").unwrap();
        let q = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(p, q);
    }
}
