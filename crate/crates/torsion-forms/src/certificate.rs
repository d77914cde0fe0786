//! Certificate that `ω` has no zeros or poles at finite smooth places away
//! from `x = ±2`.
//!
//! Write `ω = u·η` with `η = dx/(P_y·(2α − x))`. On the smooth affine part
//! of `X`, `dx/P_y` is regular and nowhere zero, and `2α − x` is a unit off
//! `x = ±2`, so `η` has no zeros or poles there. If `u` is a unit of
//! `O = Q[x][y]/(P)` (with `P` monic in `y`), then `ω` has order 0 at every
//! such place. `u ∈ O` is checked through the multiplication matrix of the
//! denominator over `Q[x]`, and `u ∈ O*` by a constant norm.

use crate::error::{Result, TorsionError};
use crate::form::TorsionForm;
use algebra_core::{Matrix, Poly, Scalar};
use character_variety::symmetrize::{X, Y};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitCertificate {
    /// `u = numerator/denominator` with both in `Q[x, y]`.
    pub numerator: String,
    pub denominator: String,
    /// `N_{O/Q[x]}(u)`, a nonzero constant.
    pub norm: String,
}

/// Coordinates of `f mod P` in the basis `1, y, …, y^{n−1}` over `Q[x]`.
fn coords(f: &Poly, monic: &Poly, n: usize) -> Result<Vec<Poly>> {
    let r = if f.has_var(Y) { f.prem(monic, Y)? } else { f.clone() };
    let cs = r.coeffs_in(Y);
    Ok((0..n as i32).map(|i| cs.get(&i).cloned().unwrap_or_else(Poly::zero).compact()).collect())
}

fn multiplication_matrix(f: &Poly, monic: &Poly, n: usize) -> Result<Matrix<Poly>> {
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        let col = coords(&f.mul(&Poly::var(Y).pow(j as u32)), monic, n)?;
        for (i, c) in col.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

fn fail(msg: impl Into<String>) -> TorsionError {
    TorsionError::Uncertified(msg.into())
}

/// Checks that `u = ω/η` is a unit of `O`.
pub fn certify_finite_support(form: &TorsionForm) -> Result<UnitCertificate> {
    let c = form.coefficient();
    let a = c.numerator.clone();
    let b = form.tau_num.mul(&form.z_mu.b).compact();
    let lead = form.curve.lead_in(Y);
    let Some(lc) = lead.as_scalar().filter(|s| !s.is_zero()) else {
        return Err(fail(format!("{} is not monic in y", form.curve)));
    };
    let monic = form.curve.scale(&lc.inv()?);
    let n = form.curve.degree(Y).unwrap_or(0).max(1) as usize;
    let mb = multiplication_matrix(&b, &monic, n)?;
    let nb = mb.det()?.compact();
    if nb.is_zero() {
        return Err(fail("the denominator vanishes on the curve"));
    }
    let av = coords(&a, &monic, n)?;
    let adj = mb.adjugate()?;
    for i in 0..n {
        let mut s = Poly::zero();
        for (j, aj) in av.iter().enumerate() {
            s = s.add(&adj.get(i, j).mul(aj));
        }
        if s.compact().div_exact(&nb).is_err() {
            return Err(fail("u is not integral over Q[x]"));
        }
    }
    let na = multiplication_matrix(&a, &monic, n)?.det()?.compact();
    let norm = na.div_exact(&nb).map_err(|_| fail("N(u) is not a polynomial"))?.compact();
    match norm.as_scalar() {
        Some(s) if !s.is_zero() && !norm.has_var(X) => Ok(UnitCertificate {
            numerator: a.to_string(),
            denominator: b.to_string(),
            norm: s.to_string(),
        }),
        _ => Err(fail(format!("N(u) = {norm} is not a nonzero constant"))),
    }
}

/// `u` at a point, for spot checks.
pub fn unit_at(form: &TorsionForm, x: &Scalar, y: &Scalar) -> Result<Scalar> {
    let pt = [(X, x.clone()), (Y, y.clone())];
    let a = form.coefficient().numerator.eval_all(&pt)?;
    let b = form.tau_num.mul(&form.z_mu.b).eval_all(&pt)?;
    Ok(&a * &b.inv()?)
}
