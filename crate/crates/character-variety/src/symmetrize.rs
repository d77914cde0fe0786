//! Rewriting Laurent polynomials in the eigenvalue `a` in terms of
//! `x = a + a⁻¹`.

use crate::error::{CharVarError, Result};
use algebra_core::Poly;

/// Eigenvalue variable.
pub const ALPHA: &str = "a";
/// Meridian trace.
pub const X: &str = "x";
/// Trace of `uv`.
pub const Y: &str = "y";

/// `a^k + a^{-k}` as a polynomial in `x` (`p₀ = 2`, `p₁ = x`).
pub fn power_sum(k: u32) -> Poly {
    let x = Poly::var(X);
    let (mut p0, mut p1) = (Poly::int(2), x.clone());
    if k == 0 {
        return p0;
    }
    for _ in 1..k {
        let p2 = x.mul(&p1).sub(&p0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// `s_k` with `a^k = s_k·a − s_{k−1}` modulo `a² − x a + 1`; `s_{−k} = −s_k`.
pub fn second_kind(k: i32) -> Poly {
    let x = Poly::var(X);
    let (mut s0, mut s1) = (Poly::zero(), Poly::one());
    if k == 0 {
        return s0;
    }
    for _ in 1..k.unsigned_abs() {
        let s2 = x.mul(&s1).sub(&s0);
        s0 = s1;
        s1 = s2;
    }
    if k < 0 {
        s1.neg()
    } else {
        s1
    }
}

/// Rewrites `f`, symmetric under `a ↦ a⁻¹`, as a polynomial in `x`; any
/// antisymmetric residue is an error.
pub fn symmetrize(f: &Poly) -> Result<Poly> {
    let mut rest = f.clone();
    let mut out = Poly::zero();
    while !rest.is_zero() {
        let k = rest.degree(ALPHA).unwrap_or(0);
        let c = rest.coeff_in(ALPHA, k);
        if k < 0 {
            return Err(CharVarError::Asymmetric(rest.to_string()));
        }
        if k == 0 {
            out = out.add(&c);
            rest = rest.sub(&c);
            continue;
        }
        out = out.add(&c.mul(&power_sum(k as u32)));
        let pair = Poly::var(ALPHA).pow(k as u32).add(&Poly::monomial(1.into(), &[(ALPHA, -k)]));
        rest = rest.sub(&c.mul(&pair));
    }
    Ok(out.compact())
}

/// Writes a Laurent polynomial in `a` as `A + B·a` modulo `a² − x a + 1`.
pub fn reduce_alpha(f: &Poly) -> (Poly, Poly) {
    let mut a = Poly::zero();
    let mut b = Poly::zero();
    for (k, c) in f.coeffs_in(ALPHA) {
        b = b.add(&c.mul(&second_kind(k)));
        a = a.sub(&c.mul(&second_kind(k - 1)));
    }
    (a.compact(), b.compact())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(2), p("x^2 - 2"));
        assert_eq!(power_sum(3), p("x^3 - 3*x"));
        assert_eq!(symmetrize(&p("a^2 + y + a^-2")).unwrap(), p("x^2 - 2 + y"));
    }

    #[test]
    fn asymmetric_input_fails() {
        assert!(matches!(symmetrize(&p("a + 2*a^-1")), Err(CharVarError::Asymmetric(_))));
    }

    #[test]
    fn alpha_reduction() {
        assert_eq!(reduce_alpha(&p("a^2")), (p("-1"), p("x")));
        assert_eq!(reduce_alpha(&p("a^-1")), (p("x"), p("-1")));
        assert_eq!(reduce_alpha(&p("a^3 + a^-3")), (power_sum(3), Poly::zero()));
    }
}
