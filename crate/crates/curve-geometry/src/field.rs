//! Coefficient fields: factoring over `Q` or a simple extension `Q(θ)`,
//! and adjoining roots without building towers.

use crate::error::{CurveError, Result};
use algebra_core::{factor_upoly, resultant, NumberField, Poly, Scalar, UPoly, Q};
use std::sync::Arc;

/// Name given to adjoined generators.
pub const GENERATOR: &str = "g";

pub type Field = Option<Arc<NumberField>>;

/// Degree over `Q`.
pub fn degree(k: &Field) -> usize {
    k.as_ref().map_or(1, |f| f.degree())
}

pub fn minpoly_string(k: &Field) -> Option<String> {
    k.as_ref().map(|f| {
        let p = UPoly::new(f.minpoly().iter().cloned().map(Scalar::Rat).collect());
        Poly::from_upoly(f.name(), &p).to_string()
    })
}

fn upoly_string(p: &UPoly) -> String {
    Poly::from_upoly("z", p).to_string()
}

/// The smaller of two fields when one of them is `Q`.
pub fn join(a: &Field, b: &Field) -> Result<Field> {
    match (a, b) {
        (None, k) | (k, None) => Ok(k.clone()),
        (Some(x), Some(y)) if NumberField::same(x, y) => Ok(a.clone()),
        (Some(_), Some(y)) => Err(CurveError::FieldTower(minpoly_string(&Some(y.clone())).unwrap())),
    }
}

/// Monic irreducible factors over `k` of a nonzero polynomial (each distinct
/// factor once).
pub fn factor_over(f: &UPoly, k: &Field) -> Result<Vec<UPoly>> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    let sq = squarefree(f);
    match k {
        Some(field) => trager(&sq, field),
        None => Ok(factor_upoly(&sq)?.into_iter().map(|(g, _)| g.monic()).collect()),
    }
}

fn squarefree(f: &UPoly) -> UPoly {
    let g = f.gcd(&f.derivative());
    f.div_exact(&g).expect("gcd divides").monic()
}

/// Trager's norm method over `Q(θ)`.
fn trager(f: &UPoly, k: &Arc<NumberField>) -> Result<Vec<UPoly>> {
    let theta = k.generator();
    let m = Poly::from_upoly(
        "_th",
        &UPoly::new(k.minpoly().iter().cloned().map(Scalar::Rat).collect()),
    );
    for s in 0..16i64 {
        // g(z) = f(z − sθ)
        let shift = UPoly::new(vec![-&(&Scalar::int(s) * &theta), Scalar::one()]);
        let g = f.compose(&shift);
        let gb = lift_to_bivariate(&g, k);
        let n = if gb.has_var("_th") { resultant(&m, &gb, "_th")? } else { gb.pow(k.degree() as u32) };
        let n = n.to_upoly("_z")?;
        if n.gcd(&n.derivative()).degree() != Some(0) {
            continue;
        }
        let back = UPoly::new(vec![&Scalar::int(s) * &theta, Scalar::one()]);
        let mut out = vec![];
        for (ni, _) in factor_upoly(&n)? {
            let h = f.gcd(&ni.compose(&back));
            if h.degree().unwrap_or(0) > 0 {
                out.push(h);
            }
        }
        return Ok(out);
    }
    Err(CurveError::Invariant(format!("no squarefree norm found for {}", upoly_string(f))))
}

/// `Σ cᵢ zⁱ` with `cᵢ ∈ Q(θ)` as a rational polynomial in `(_th, _z)`.
fn lift_to_bivariate(g: &UPoly, k: &Arc<NumberField>) -> Poly {
    let mut out = Poly::zero();
    for (i, c) in g.coeffs().iter().enumerate() {
        for (j, q) in c.coords_in(k).into_iter().enumerate() {
            let q = Scalar::Rat(q);
            if !q.is_zero() {
                out = out.add(&Poly::monomial(q, &[("_th", j as i32), ("_z", i as i32)]));
            }
        }
    }
    out
}

/// A root of the irreducible `h` over `k`: in `k` itself when `h` is linear,
/// in a new simple extension when `k = Q`, otherwise a tower error.
pub fn adjoin_root(h: &UPoly, k: &Field) -> Result<(Scalar, Field)> {
    match h.degree() {
        Some(1) => Ok((-&(&h.coeff(0) * &h.coeff(1).inv()?), k.clone())),
        Some(_) if k.is_none() && h.is_rational() => {
            let coeffs: Vec<Q> = h.monic().coeffs().iter().map(|c| c.as_rational().unwrap().clone()).collect();
            let f = NumberField::new_unchecked(coeffs, GENERATOR);
            let g = f.generator();
            Ok((g, Some(f)))
        }
        _ => Err(CurveError::FieldTower(upoly_string(h))),
    }
}

/// All roots of `f` over the algebraic closure, grouped as one representative
/// per irreducible factor over `k`.
pub fn roots(f: &UPoly, k: &Field) -> Result<Vec<(Scalar, Field)>> {
    factor_over(f, k)?.iter().map(|h| adjoin_root(h, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_over_quadratic_field() {
        // x² − 2 splits over Q(√2).
        let k = NumberField::from_ints(&[-2, 0, 1], "r").unwrap();
        let f = UPoly::from_ints(&[-2, 0, 1]);
        let fs = factor_over(&f, &Some(k.clone())).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|h| h.degree() == Some(1)));
        // x² + 1 stays irreducible.
        let g = UPoly::from_ints(&[1, 0, 1]);
        let h = UPoly::new(g.coeffs().iter().map(|c| c * &k.generator()).collect());
        let fs = factor_over(&h, &Some(k)).unwrap();
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn adjoining_over_an_extension_is_a_tower() {
        let k = NumberField::from_ints(&[-2, 0, 1], "r").unwrap();
        let g = k.generator();
        let h = UPoly::new(vec![-&g, Scalar::zero(), Scalar::one()]);
        assert!(matches!(adjoin_root(&h, &Some(k)), Err(CurveError::FieldTower(_))));
        let (r, f) = adjoin_root(&UPoly::from_ints(&[1, 1, 1]), &None).unwrap();
        assert_eq!(degree(&f), 2);
        assert!(UPoly::from_ints(&[1, 1, 1]).eval(&r).is_zero());
    }
}
