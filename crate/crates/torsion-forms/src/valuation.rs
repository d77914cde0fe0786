//! Orders of the torsion form at places of the augmented curve.

use crate::error::{Result, TorsionError};
use crate::form::TorsionForm;
use algebra_core::{Poly, Scalar, Series};
use character_variety::symmetrize::{X, Y};
use curve_geometry::cover::CoverPlace;

fn visible_valuation(s: &Series, what: &str) -> Result<i64> {
    if s.is_zero() {
        return Err(TorsionError::Invariant(format!("{what} vanishes identically on the curve")));
    }
    if s.is_indistinguishable_from_zero() {
        let have = s.prec().unwrap_or(0);
        return Err(TorsionError::InsufficientPrecision(2 * have.abs().max(8)));
    }
    Ok(s.valuation()?)
}

/// `v_s(ω)` for a parametrization `x(s)`, `y(s)`, `α(s)` of a place.
pub fn valuation_of_parametrization(form: &TorsionForm, x: &Series, y: &Series, alpha: &Series) -> Result<i64> {
    let at = |f: &Poly| f.eval_series(&[(X, x), (Y, y)]);
    let residual = at(&form.curve)?;
    if !residual.is_indistinguishable_from_zero() {
        return Err(TorsionError::NotOnCurve(format!("x = {x}, y = {y}")));
    }
    // Factor by factor: h = 2·J·e·τ_den / (τ_num·b·P_y·(2α − x)).
    let (px, py) = (form.curve.derivative(X), form.curve.derivative(Y));
    let (yx, yy) = (form.y_mu.derivative(X), form.y_mu.derivative(Y));
    let py_s = at(&py)?;
    let j = at(&yx)?.mul(&py_s).sub(&at(&yy)?.mul(&at(&px)?));
    let mut v = visible_valuation(&j, "dY_μ")?;
    v += visible_valuation(&at(&form.z_mu.den)?, "the denominator of Z_μ")?;
    v += visible_valuation(&at(&form.tau_den)?, "the denominator of τ_μ")?;
    v -= visible_valuation(&at(&form.tau_num)?, "τ_μ")?;
    v -= visible_valuation(&at(&form.z_mu.b)?, "Z_μ − Z_μ⁻¹")?;
    v -= visible_valuation(&py_s, "P_y")?;
    let root = alpha.scale(&Scalar::int(2)).sub(x);
    v -= visible_valuation(&root, "2α − x")?;
    v += visible_valuation(&x.derivative(), "dx")?;
    Ok(v)
}

/// `v(ω)` at a place of `Y`: the order of `h(x(s), y(s), α(s))·x′(s)`.
///
/// Expansions are cut to a few terms past their leading one first and
/// lengthened only when that is not enough to see the leading terms.
pub fn valuation_at_place(form: &TorsionForm, place: &CoverPlace) -> Result<i64> {
    let full = [&place.x, &place.y, &place.alpha];
    let mut extra = 4;
    let result = loop {
        let cut: Vec<Series> = full.iter().map(|s| s.truncate(s.val_lower_bound().unwrap_or(0) + extra)).collect();
        let shortened = cut.iter().zip(full).any(|(c, s)| c.prec() != s.prec());
        match valuation_of_parametrization(form, &cut[0], &cut[1], &cut[2]) {
            Err(TorsionError::InsufficientPrecision(_)) if shortened => extra *= 2,
            r => break r,
        }
    };
    result.map_err(|e| match e {
        TorsionError::NotOnCurve(_) => TorsionError::NotOnCurve(place.label.clone()),
        e => e,
    })
}
