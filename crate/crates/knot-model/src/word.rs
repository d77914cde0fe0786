//! Words in a free group on single-letter generators.
//!
//! A lower-case letter is a generator and the matching upper-case letter its
//! inverse, so `"uVUv"` is `u v⁻¹ u⁻¹ v`.

use crate::error::{KnotError, Result};
use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<char>);

fn inverse_letter(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

impl Word {
    pub fn empty() -> Word {
        Word(vec![])
    }

    /// Parses a bare letter string such as `"vUVu"` and freely reduces it.
    pub fn parse(s: &str) -> Result<Word> {
        for (pos, c) in s.char_indices() {
            if !c.is_ascii_alphabetic() {
                return Err(KnotError::Parse { pos, msg: format!("`{c}` is not a generator letter") });
            }
        }
        Ok(Word::from_letters(s.chars()))
    }

    pub fn from_letters(letters: impl IntoIterator<Item = char>) -> Word {
        let mut out: Vec<char> = vec![];
        for c in letters {
            if out.last() == Some(&inverse_letter(c)) {
                out.pop();
            } else {
                out.push(c);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(o.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&c| inverse_letter(c)).collect())
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != inverse_letter(w[0]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && (self.0.len() < 2 || *self.0.last().unwrap() != inverse_letter(self.0[0]))
    }

    /// Removes matching first/last letter pairs.
    pub fn cyclic_reduce(&self) -> Word {
        let mut v = Word::from_letters(self.0.iter().copied()).0;
        while v.len() >= 2 && *v.last().unwrap() == inverse_letter(v[0]) {
            v.pop();
            v.remove(0);
        }
        Word(v)
    }

    /// Signed number of occurrences of generator `g` (lower-case).
    pub fn exponent_sum(&self, g: char) -> i64 {
        self.0
            .iter()
            .map(|&c| if c == g { 1 } else if c == inverse_letter(g) { -1 } else { 0 })
            .sum()
    }

    /// Generators (lower-case) that occur.
    pub fn generators(&self) -> Vec<char> {
        let mut g: Vec<char> = self.0.iter().map(|c| c.to_ascii_lowercase()).collect();
        g.sort();
        g.dedup();
        g
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        assert_eq!(Word::parse("uvVU").unwrap(), Word::empty());
        assert_eq!(Word::parse("uVvv").unwrap().to_string(), "uv");
    }

    #[test]
    fn commutator_and_inverse() {
        let u = Word::parse("u").unwrap();
        let vi = Word::parse("V").unwrap();
        assert_eq!(Word::commutator(&u, &vi).to_string(), "uVUv");
        let w = Word::parse("uVUv").unwrap();
        assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::parse("vuUuVa").unwrap();
        assert_eq!(w.to_string(), "vuVa");
        assert_eq!(Word::parse("vuaV").unwrap().cyclic_reduce().to_string(), "ua");
        assert!(!Word::parse("vuaV").unwrap().is_cyclically_reduced());
    }

    #[test]
    fn exponent_sums() {
        let w = Word::parse("aaBBB").unwrap();
        assert_eq!(w.exponent_sum('a'), 2);
        assert_eq!(w.exponent_sum('b'), -3);
    }
}
