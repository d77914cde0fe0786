//! Trace functions of words.

use crate::error::Result;
use crate::rep::{trace2, TautRep, T};
use crate::symmetrize::{symmetrize, X};
use algebra_core::Poly;
use knot_model::{Template, Word};
use std::collections::HashMap;

/// `Y_γ` as a polynomial in `(x, y)`, with the pre-image in `(a, y)` (or in
/// `t` for the trefoil) before rewriting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFunction {
    pub xy: Poly,
    pub raw: Poly,
}

/// Direct matrix trace, rewritten in `(x, y)`.
pub fn trace_of_word(rep: &TautRep, w: &Word) -> Result<TraceFunction> {
    let raw = trace2(&rep.matrix(w)?);
    let xy = match rep.template() {
        Template::TwoBridge => symmetrize(&raw)?,
        Template::Trefoil => trefoil_in_x(rep, &raw)?,
    };
    Ok(TraceFunction { xy, raw })
}

/// `t = x/(j − j²)` on the trefoil component.
fn trefoil_in_x(rep: &TautRep, f: &Poly) -> Result<Poly> {
    let j = rep.field().expect("trefoil template carries Q(j)").generator();
    let c = (&j - &j.pow(2)).inv()?;
    Ok(f.subs(T, &Poly::monomial(c, &[(X, 1)]))?.compact())
}

/// Reduces `f` modulo an irreducible curve polynomial (pseudo-remainder in `y`,
/// or in `x` when `y` is absent).
pub fn reduce_mod(f: &Poly, p: &Poly) -> Result<Poly> {
    let v = if p.has_var("y") { "y" } else { "x" };
    if !f.has_var(v) {
        return Ok(f.clone());
    }
    Ok(f.prem(p, v)?.compact())
}

/// Whether `p` divides `f` (for irreducible `p`).
pub fn vanishes_mod(f: &Poly, p: &Poly) -> Result<bool> {
    Ok(reduce_mod(f, p)?.is_zero())
}

/// `α^n + α^{-n}` evaluated as a polynomial in the variable `v`.
fn power_sum_in(v: &str, n: usize) -> Poly {
    let y = Poly::var(v);
    let (mut p0, mut p1) = (Poly::int(2), y.clone());
    if n == 0 {
        return p0;
    }
    for _ in 1..n {
        let p2 = y.mul(&p1).sub(&p0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Names of the three basic traces `Y_g₀`, `Y_g₁`, `Y_g₀g₁`.
pub fn basic_trace_vars(gens: [char; 2]) -> [String; 3] {
    [format!("Y{}", gens[0]), format!("Y{}", gens[1]), format!("Y{}{}", gens[0], gens[1])]
}

/// Reduces `Tr w` to a polynomial in the basic traces with
/// `Tr A g⁻¹ B = Y_g Tr AB − Tr A g B` and `Tr A g² B = Y_g Tr A g B − Tr AB`.
pub fn trace_reduce(w: &Word, gens: [char; 2]) -> Poly {
    let mut memo = HashMap::new();
    reduce_rec(&w.cyclic_reduce(), gens, &mut memo)
}

fn rotate_min(l: &[char]) -> Vec<char> {
    (0..l.len()).map(|i| [&l[i..], &l[..i]].concat()).min().unwrap_or_default()
}

fn reduce_rec(w: &Word, gens: [char; 2], memo: &mut HashMap<Vec<char>, Poly>) -> Poly {
    let w = w.cyclic_reduce();
    let key = rotate_min(w.letters());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let names = basic_trace_vars(gens);
    let letters = w.letters();
    let out = if letters.is_empty() {
        Poly::int(2)
    } else if let Some(i) = letters.iter().position(|c| c.is_ascii_uppercase()) {
        let g = letters[i].to_ascii_lowercase();
        let yg = Poly::var(&names[gens.iter().position(|&h| h == g).unwrap()]);
        let without = Word::from_letters(letters[..i].iter().chain(&letters[i + 1..]).copied());
        let flipped = Word::from_letters(
            letters[..i].iter().copied().chain([g]).chain(letters[i + 1..].iter().copied()),
        );
        yg.mul(&reduce_rec(&without, gens, memo)).sub(&reduce_rec(&flipped, gens, memo))
    } else if w.generators().len() == 1 {
        let g = letters[0];
        power_sum_in(&names[gens.iter().position(|&h| h == g).unwrap()], letters.len())
    } else {
        // Rotate so the word starts a syllable, then look for a square.
        let n = letters.len();
        let start = (0..n).find(|&i| letters[i] != letters[(i + n - 1) % n]).unwrap();
        let rot: Vec<char> = letters[start..].iter().chain(&letters[..start]).copied().collect();
        match (0..n - 1).find(|&i| rot[i] == rot[i + 1]) {
            Some(i) => {
                let g = rot[i];
                let yg = Poly::var(&names[gens.iter().position(|&h| h == g).unwrap()]);
                let once = Word::from_letters(rot[..i].iter().chain(&rot[i + 1..]).copied());
                let none = Word::from_letters(rot[..i].iter().chain(&rot[i + 2..]).copied());
                yg.mul(&reduce_rec(&once, gens, memo)).sub(&reduce_rec(&none, gens, memo))
            }
            None => power_sum_in(&names[2], n / 2),
        }
    };
    memo.insert(key, out.clone());
    out
}

/// Evaluates a reduced trace polynomial at `Y_g₀ = Y_g₁ = x`, `Y_g₀g₁ = y`.
pub fn specialize_two_bridge(p: &Poly, gens: [char; 2]) -> Result<Poly> {
    let names = basic_trace_vars(gens);
    let mut out = p.subs(&names[0], &Poly::var("x"))?;
    out = out.subs(&names[1], &Poly::var("x"))?;
    out = out.subs(&names[2], &Poly::var("y"))?;
    Ok(out.compact())
}

/// `Δ_{g,h} = Y_g² + Y_h² + Y_gh² − Y_g Y_h Y_gh − 4 = Tr[g,h] − 2`.
pub fn delta_polynomial(yg: &Poly, yh: &Poly, ygh: &Poly) -> Poly {
    yg.pow(2).add(&yh.pow(2)).add(&ygh.pow(2)).sub(&yg.mul(yh).mul(ygh)).sub(&Poly::int(4))
}

/// Checks `Tr` against a reduced trace modulo `p`.
pub fn agrees_mod(a: &Poly, b: &Poly, p: &Poly) -> Result<bool> {
    vanishes_mod(&a.sub(b), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn reductions() {
        let g = ['u', 'v'];
        assert_eq!(trace_reduce(&Word::parse("uu").unwrap(), g), p("Yu^2 - 2"));
        assert_eq!(
            trace_reduce(&Word::parse("uvUV").unwrap(), g),
            p("Yu^2 + Yv^2 + Yuv^2 - Yu*Yv*Yuv - 2")
        );
        assert_eq!(trace_reduce(&Word::parse("uV").unwrap(), g), p("Yu*Yv - Yuv"));
    }

    #[test]
    fn matrix_and_reduction_agree() {
        let rep = TautRep::two_bridge(['u', 'v']);
        for s in ["uvUVu", "uuvUvvUUV", "vUVuuVUv"] {
            let w = Word::parse(s).unwrap();
            let direct = trace_of_word(&rep, &w).unwrap().xy;
            let reduced = specialize_two_bridge(&trace_reduce(&w, ['u', 'v']), ['u', 'v']).unwrap();
            assert_eq!(direct, reduced, "{s}");
        }
    }

    #[test]
    fn trefoil_meridian_trace_is_x() {
        let rep = TautRep::trefoil(['a', 'b']);
        let tr = trace_of_word(&rep, &Word::parse("aB").unwrap()).unwrap();
        assert_eq!(tr.xy, Poly::var("x"));
        assert!(trace_of_word(&rep, &Word::parse("a").unwrap()).unwrap().xy.is_zero());
    }
}
