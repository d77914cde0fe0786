//! Alexander polynomials from the abelianized Fox matrix.

use crate::error::{KnotError, Result};
use crate::fox::fox_derivative;
use crate::presentation::GroupPresentation;
use algebra_core::gcd::{clear_monomials, gcd_all};
use algebra_core::{Poly, Scalar};

/// Row `(∂r/∂g)ᵩ` over the generators, as Laurent polynomials in `t`.
pub fn alexander_matrix(p: &GroupPresentation) -> Vec<Poly> {
    p.generators().iter().map(|&g| fox_derivative(p.relator(), g).abelianize(p)).collect()
}

/// Representative with no monomial factor, coprime integer coefficients and
/// positive leading coefficient.
pub fn normalize_laurent(p: &Poly) -> Poly {
    clear_monomials(p).normalize_unit()
}

/// `Δ(t)` from the one-relator formula `Δ = (∂r/∂g₀)ᵩ (t − 1)/(t^{φ(g₁)} − 1)`,
/// cross-checked against the gcd of the Fox row.
pub fn alexander_polynomial(p: &GroupPresentation) -> Result<Poly> {
    if !p.relator().is_cyclically_reduced() {
        return Err(KnotError::Unsupported("relator is not cyclically reduced".into()));
    }
    let row = alexander_matrix(p);
    let gens = p.generators();
    // Pick the generator whose partner has nonzero φ.
    let (i, j) = if p.phi(gens[1]) != 0 { (0, 1) } else { (1, 0) };
    let k = p.phi(gens[j]);
    let t = Poly::var("t");
    let tk = Poly::monomial(Scalar::one(), &[("t", k.abs() as i32)]).sub(&Poly::one());
    let num = clear_monomials(&row[i]).mul(&t.sub(&Poly::one()));
    let delta = num
        .div_exact(&tk)
        .map_err(|_| KnotError::NotSurjective("Fox row not divisible by t^φ − 1".into()))?;
    let delta = normalize_laurent(&delta);
    let via_gcd = normalize_laurent(&gcd_all(row.iter()));
    if delta != via_gcd {
        return Err(KnotError::Unsupported(format!(
            "Alexander polynomial routes disagree: {delta} vs {via_gcd}"
        )));
    }
    let at_one = delta.eval_all(&[("t", Scalar::one())])?;
    if at_one != Scalar::one() && at_one != Scalar::int(-1) {
        return Err(KnotError::NotSurjective(format!("Δ(1) = {at_one}, expected ±1")));
    }
    Ok(delta)
}

/// Invariant factors `P₁ | P₂ | …` of the torsion Alexander module over
/// `Q[t^{±1}]`, from the determinantal divisors of the Fox row.
pub fn invariant_factors(p: &GroupPresentation) -> Result<Vec<Poly>> {
    // A 1×2 row has determinantal divisors D₀ = 1 and D₁ = gcd of its
    // entries; the free summand coming from the base point is discarded.
    let d1 = normalize_laurent(&gcd_all(alexander_matrix(p).iter()));
    if d1.is_zero() {
        return Err(KnotError::NotSurjective("Fox row vanishes".into()));
    }
    Ok(if d1.is_constant() { vec![] } else { vec![d1] })
}

/// `Δ_k = gcd of products of n + 1 − k invariant factors`, i.e. the product of
/// the `n + 1 − k` smallest; `1` once `k` exceeds the number of factors.
pub fn kth_alexander_polynomial(p: &GroupPresentation, k: usize) -> Result<Poly> {
    if k == 0 {
        return Err(KnotError::Unsupported("k must be positive".into()));
    }
    let fs = invariant_factors(p)?;
    let n = fs.len();
    if k > n {
        return Ok(Poly::one());
    }
    Ok(normalize_laurent(&fs[..n + 1 - k].iter().fold(Poly::one(), |acc, f| acc.mul(f))))
}

/// Multiplicity of `λ²` as a root of `Δ`.
pub fn alexander_root_order(delta: &Poly, lambda_sq: &Scalar) -> Result<usize> {
    let u = clear_monomials(delta).to_upoly("t")?;
    Ok(u.root_multiplicity(lambda_sq))
}

/// `Δ(t) ≐ t^{deg} Δ(1/t)` up to sign.
pub fn is_symmetric(delta: &Poly) -> bool {
    let u = match clear_monomials(delta).to_upoly("t") {
        Ok(u) => u,
        Err(_) => return false,
    };
    let c = u.coeffs();
    let rev: Vec<Scalar> = c.iter().rev().cloned().collect();
    c == rev.as_slice() || c.iter().zip(&rev).all(|(a, b)| *a == -b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;
    use algebra_core::NumberField;

    fn t(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn trefoil() {
        let p = parse_presentation("a,b | a^2 = b^3").unwrap();
        assert_eq!(alexander_polynomial(&p).unwrap(), t("t^2 - t + 1"));
        assert_eq!(kth_alexander_polynomial(&p, 1).unwrap(), t("t^2 - t + 1"));
        assert_eq!(kth_alexander_polynomial(&p, 2).unwrap(), Poly::one());
    }

    #[test]
    fn figure_eight() {
        let p = parse_presentation("u,v | v*[u,V]*u^-1*[u,V]^-1 = 1").unwrap();
        let d = alexander_polynomial(&p).unwrap();
        assert_eq!(d, t("t^2 - 3*t + 1"));
        assert!(is_symmetric(&d));
        assert_eq!(kth_alexander_polynomial(&p, 2).unwrap(), Poly::one());
    }

    #[test]
    fn root_orders() {
        let k = NumberField::from_ints(&[-5, 0, 1], "s").unwrap();
        let s = k.generator();
        let l2 = &(&Scalar::int(3) + &s) * &Scalar::frac(1, 2);
        let d = t("t^2 - 3*t + 1");
        assert_eq!(alexander_root_order(&d, &l2).unwrap(), 1);
        assert_eq!(alexander_root_order(&d, &Scalar::one()).unwrap(), 0);
        assert_eq!(alexander_root_order(&t("(t - 2)^2"), &Scalar::int(2)).unwrap(), 2);
    }
}
