//! Multivariate gcd by recursive primitive polynomial remainder sequences.

use crate::poly::Poly;

/// Greatest common divisor, normalized by [`Poly::normalize_unit`].
/// Laurent inputs (negative exponents) are first cleared of monomial
/// factors, since monomials are units there.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let lift = |p: &Poly| if p.is_polynomial() { p.clone() } else { clear_monomials(p) };
    gcd_rec(&lift(a), &lift(b)).normalize_unit()
}

/// Gcd of a list of polynomials.
pub fn gcd_all<'a>(ps: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut g = Poly::zero();
    for p in ps {
        g = gcd(&g, p);
        if g.is_constant() && !g.is_zero() {
            return Poly::one();
        }
    }
    g
}

/// Divides out `Π vᵢ^{min exponent}` so the result is a genuine polynomial
/// without monomial content.
pub fn clear_monomials(p: &Poly) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let mut out = p.clone();
    for v in p.used_vars() {
        let m = p.min_degree(&v).unwrap();
        if m != 0 {
            out = out.shift(&[(&v, -m)]);
        }
    }
    out
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let mut vars = a.used_vars();
    vars.extend(b.used_vars());
    vars.sort();
    vars.dedup();
    let Some(v) = vars.last().cloned() else {
        return Poly::one();
    };
    if !a.has_var(&v) {
        return gcd_rec(a, &content_in(b, &v));
    }
    if !b.has_var(&v) {
        return gcd_rec(&content_in(a, &v), b);
    }
    let ca = content_in(a, &v);
    let cb = content_in(b, &v);
    let c = gcd_rec(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree(&v) < g.degree(&v) {
        std::mem::swap(&mut f, &mut g);
    }
    let g = loop {
        let r = f.prem(&g, &v).expect("nonzero divisor");
        if r.is_zero() {
            break g;
        }
        if !r.has_var(&v) {
            break Poly::one();
        }
        f = g;
        g = primitive_part_in(&r, &v);
    };
    c.mul(&primitive_part_in(&g, &v)).normalize_unit()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &Poly, v: &str) -> Poly {
    let mut g = Poly::zero();
    for c in p.coeffs_in(v).values() {
        g = gcd_rec(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g.normalize_unit()
}

pub fn primitive_part_in(p: &Poly, v: &str) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    p.div_exact(&content_in(p, v)).expect("content divides").normalize_unit()
}

/// `p / gcd(p, ∂p/∂v₁, …)`: the product of the distinct irreducible factors.
pub fn squarefree_part(p: &Poly) -> Poly {
    p.div_exact(&repeated_part(p)).expect("gcd divides").normalize_unit()
}

pub fn is_squarefree(p: &Poly) -> bool {
    repeated_part(p).is_constant()
}

fn repeated_part(p: &Poly) -> Poly {
    let mut g = p.clone();
    for v in p.used_vars() {
        g = gcd(&g, &p.derivative(&v));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn bivariate_common_factor() {
        let f = p("(x^2 - y - 2)*(x + y)");
        let g = p("(x^2 - y - 2)*(x - 3*y + 1)");
        assert_eq!(gcd(&f, &g), p("x^2 - y - 2"));
    }

    #[test]
    fn coprime_inputs() {
        assert_eq!(gcd(&p("x^2 + y^2 - 1"), &p("x - y")), Poly::one());
    }

    #[test]
    fn squarefree_part_strips_repeats() {
        let f = p("(x^2*y - 2*x^2 - y^2 + y + 1)^2*(x^2 - y - 2)");
        assert_eq!(squarefree_part(&f), p("(x^2*y - 2*x^2 - y^2 + y + 1)*(x^2 - y - 2)").normalize_unit());
        assert!(!is_squarefree(&f));
        assert!(is_squarefree(&p("y^2 - x^3")));
        assert_eq!(squarefree_part(&p("x^2*y")), p("x*y"));
    }

    #[test]
    fn content_in_variable() {
        let f = p("x^2*y + x^2 - y - 1");
        assert_eq!(content_in(&f, "x"), p("y + 1"));
        assert_eq!(primitive_part_in(&f, "x"), p("x^2 - 1"));
    }
}
