//! The augmented curve `Y`: the double cover of a component given by
//! `α² − xα + 1 = 0`, and eigenvalue functions on it.

use crate::error::{CharVarError, Result};
use crate::rep::TautRep;
use crate::symmetrize::{reduce_alpha, second_kind, X};
use crate::trace::{reduce_mod, trace_of_word, vanishes_mod};
use algebra_core::{Matrix, Poly, Scalar};
use knot_model::{Template, Word};

/// An irreducible plane curve `P(x, y) = 0` with the cover `α + α⁻¹ = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedCurve {
    p: Poly,
}

/// `(a + b·α)/den` with `a, b, den ∈ Q[x, y]`, read modulo `P` and
/// `α² = xα − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfElem {
    pub a: Poly,
    pub b: Poly,
    pub den: Poly,
}

impl AugmentedCurve {
    pub fn new(p: Poly) -> AugmentedCurve {
        AugmentedCurve { p }
    }

    pub fn base(&self) -> &Poly {
        &self.p
    }

    /// Whether `f ∈ Q[x, y]` vanishes on the curve.
    pub fn vanishes(&self, f: &Poly) -> Result<bool> {
        vanishes_mod(f, &self.p)
    }

    pub fn is_zero(&self, e: &FfElem) -> Result<bool> {
        Ok(self.vanishes(&e.a)? && self.vanishes(&e.b)?)
    }

    pub fn equal(&self, e: &FfElem, f: &FfElem) -> Result<bool> {
        self.is_zero(&e.sub(f))
    }

    /// Inverse via the conjugate `a + b(x − α)`; the norm must not vanish
    /// on the curve.
    pub fn inv(&self, e: &FfElem) -> Result<FfElem> {
        let n = e.norm_numerator();
        if self.vanishes(&n)? {
            return Err(CharVarError::Algebra(algebra_core::AlgebraError::DivisionByZero));
        }
        let conj_a = e.a.add(&e.b.mul(&Poly::var(X)));
        Ok(FfElem { a: conj_a.mul(&e.den), b: e.b.neg().mul(&e.den), den: n })
    }

    /// Reduces numerators modulo `P` when `P` has constant leading
    /// coefficient in `y` (so the pseudo-remainder is the true remainder of
    /// the monic normalization).
    pub fn simplify(&self, e: &FfElem) -> Result<FfElem> {
        let lc = self.p.lead_in("y");
        let Some(c) = lc.as_scalar().filter(|_| self.p.has_var("y")) else { return Ok(e.clone()) };
        let monic = self.p.scale(&c.inv()?);
        let r = |f: &Poly| reduce_mod(f, &monic);
        Ok(FfElem { a: r(&e.a)?, b: r(&e.b)?, den: r(&e.den)? })
    }
}

impl FfElem {
    pub fn from_poly(a: Poly) -> FfElem {
        FfElem { a, b: Poly::zero(), den: Poly::one() }
    }

    pub fn alpha() -> FfElem {
        FfElem { a: Poly::zero(), b: Poly::one(), den: Poly::one() }
    }

    /// `α^k` as `s_k α − s_{k−1}`.
    pub fn alpha_pow(k: i32) -> FfElem {
        FfElem { a: second_kind(k - 1).neg(), b: second_kind(k), den: Poly::one() }
    }

    /// From a Laurent polynomial in `a` with coefficients in `Q[y]`.
    pub fn from_laurent(f: &Poly) -> FfElem {
        let (a, b) = reduce_alpha(f);
        FfElem { a, b, den: Poly::one() }
    }

    pub fn add(&self, o: &FfElem) -> FfElem {
        if self.den == o.den {
            return FfElem { a: self.a.add(&o.a), b: self.b.add(&o.b), den: self.den.clone() };
        }
        FfElem {
            a: self.a.mul(&o.den).add(&o.a.mul(&self.den)),
            b: self.b.mul(&o.den).add(&o.b.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    pub fn neg(&self) -> FfElem {
        FfElem { a: self.a.neg(), b: self.b.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &FfElem) -> FfElem {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> FfElem {
        FfElem { a: self.a.scale(c), b: self.b.scale(c), den: self.den.clone() }
    }

    pub fn mul(&self, o: &FfElem) -> FfElem {
        let x = Poly::var(X);
        let bb = self.b.mul(&o.b);
        FfElem {
            a: self.a.mul(&o.a).sub(&bb),
            b: self.a.mul(&o.b).add(&o.a.mul(&self.b)).add(&x.mul(&bb)),
            den: self.den.mul(&o.den),
        }
    }

    /// Numerator of the norm `(a + bα)(a + b(x − α)) = a² + abx + b²`.
    pub fn norm_numerator(&self) -> Poly {
        self.a.pow(2).add(&self.a.mul(&self.b).mul(&Poly::var(X))).add(&self.b.pow(2))
    }

    /// `e + ē = (2a + bx)/den`.
    pub fn trace(&self) -> (Poly, Poly) {
        (self.a.scale(&Scalar::int(2)).add(&self.b.mul(&Poly::var(X))), self.den.clone())
    }
}

fn entry_element(rep: &TautRep, m: &Matrix<Poly>, i: usize, j: usize) -> FfElem {
    debug_assert_eq!(rep.template(), Template::TwoBridge);
    FfElem::from_laurent(m.get(i, j))
}

/// `Z_w` for a peripheral word `w`.
///
/// On the two-bridge template the meridian image is upper triangular, so
/// `Z_w` is the `(1,1)` entry and the `(2,1)` entry must vanish on the
/// curve. On the trefoil, `ρ(w) = ±ρ(m)^k` exactly for the meridian `m`, and
/// `Z_w = ±α^k`.
pub fn eigenvalue_function(
    curve: &AugmentedCurve,
    rep: &TautRep,
    meridian: &Word,
    w: &Word,
) -> Result<FfElem> {
    let m = rep.matrix(w)?;
    match rep.template() {
        Template::TwoBridge => {
            let low = entry_element(rep, &m, 1, 0);
            if !curve.is_zero(&low)? {
                return Err(CharVarError::NotPeripheral(w.to_string()));
            }
            curve.simplify(&entry_element(rep, &m, 0, 0))
        }
        Template::Trefoil => {
            // φ cannot see k (the longitude has φ = 0), but Tr ρ(m)^k has
            // degree |k| in x.
            let d = trace_of_word(rep, w)?.xy.degree(X).unwrap_or(0);
            for k in [d, -d] {
                let mk = rep.matrix(&meridian.pow(k))?;
                for sign in [1, -1] {
                    if m.sub(&mk.scale(&Poly::int(sign))).map(|e| e.compact()).is_zero() {
                        return Ok(FfElem::alpha_pow(k).scale(&Scalar::int(sign)));
                    }
                }
            }
            Err(CharVarError::NotPeripheral(w.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn alpha_inverse_is_conjugate() {
        let c = AugmentedCurve::new(p("2*x^2 + y^2 - x^2*y - y - 1"));
        let a = FfElem::alpha();
        let ai = c.inv(&a).unwrap();
        assert!(c.equal(&a.mul(&ai), &FfElem::from_poly(Poly::one())).unwrap());
        assert!(c.equal(&ai, &FfElem::from_poly(Poly::var("x")).sub(&a)).unwrap());
        assert!(c.equal(&FfElem::alpha_pow(-1), &ai).unwrap());
    }

    #[test]
    fn meridian_eigenvalue_is_alpha() {
        let rep = TautRep::two_bridge(['u', 'v']);
        let c = AugmentedCurve::new(p("2*x^2 + y^2 - x^2*y - y - 1"));
        let u = Word::parse("u").unwrap();
        let z = eigenvalue_function(&c, &rep, &u, &u).unwrap();
        assert!(c.equal(&z, &FfElem::alpha()).unwrap());
        let v = Word::parse("v").unwrap();
        assert!(matches!(
            eigenvalue_function(&c, &rep, &u, &v),
            Err(CharVarError::NotPeripheral(_))
        ));
    }
}
