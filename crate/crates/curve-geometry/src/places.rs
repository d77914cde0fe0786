//! Places of the smooth projective model, as Puiseux parametrizations.

use crate::curve::{Center, PlaneCurve, X, Y};
use crate::error::{CurveError, Result};
use crate::field::{self, Field};
use crate::puiseux::{is_primitive, local_branches};
use crate::singular::affine_singular_centers;
use algebra_core::{Poly, Scalar, Series};
use serde::Serialize;
use std::cmp::Ordering;

/// One Galois orbit of places: `x(t)`, `y(t)` over `field`, standing for
/// `degree(field)` places of the curve.
#[derive(Clone, Debug)]
pub struct Place {
    pub label: String,
    pub center: Center,
    pub x: Series,
    pub y: Series,
    /// The parametrization in the chart of the center.
    pub local: (Series, Series),
    pub field: Field,
}

impl Place {
    pub fn orbit(&self) -> usize {
        field::degree(&self.field)
    }

    pub fn is_ideal(&self) -> bool {
        self.center.is_ideal()
    }

    pub fn report(&self) -> PlaceReport {
        PlaceReport {
            label: self.label.clone(),
            center: self.center.to_string(),
            ideal: self.is_ideal(),
            field: field::minpoly_string(&self.field),
            orbit: self.orbit(),
            x: SeriesReport::new(&self.x),
            y: SeriesReport::new(&self.y),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    /// `(exponent, coefficient)` pairs.
    pub terms: Vec<(i64, String)>,
    /// Absolute truncation order, absent for exact series.
    pub prec: Option<i64>,
    pub text: String,
}

impl SeriesReport {
    pub fn new(s: &Series) -> SeriesReport {
        SeriesReport { terms: s.terms().map(|(&e, c)| (e, c.to_string())).collect(), prec: s.prec(), text: s.to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaceReport {
    pub label: String,
    pub center: String,
    pub ideal: bool,
    pub field: Option<String>,
    pub orbit: usize,
    pub x: SeriesReport,
    pub y: SeriesReport,
}

/// Coefficientwise comparison over the common known range.
fn cmp_series(a: &Series, b: &Series) -> Ordering {
    let lo = a.val_lower_bound().unwrap_or(0).min(b.val_lower_bound().unwrap_or(0));
    let hi = match (a.prec(), b.prec()) {
        (Some(p), Some(q)) => p.min(q),
        (Some(p), None) | (None, Some(p)) => p,
        (None, None) => {
            let last = |s: &Series| s.terms().last().map_or(0, |(&e, _)| e + 1);
            last(a).max(last(b))
        }
    };
    for e in lo..hi {
        let (ca, cb) = (a.coeff(e).unwrap_or_else(|_| Scalar::zero()), b.coeff(e).unwrap_or_else(|_| Scalar::zero()));
        match ca.canonical_cmp(&cb) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Residual check `P(x(t), y(t)) ≡ 0` up to truncation.
pub fn on_curve(curve: &PlaneCurve, x: &Series, y: &Series) -> Result<bool> {
    Ok(curve.poly().eval_series(&[(X, x), (Y, y)])?.is_indistinguishable_from_zero())
}

/// One place per branch at `c`, in deterministic order, unlabeled.
pub fn newton_puiseux(curve: &PlaneCurve, c: &Center, order: i64) -> Result<Vec<Place>> {
    let chart = curve.chart(c)?;
    // Charts at infinity lose precision when inverting the local coordinate.
    let local_order = if c.is_ideal() { order + 2 * curve.degree() as i64 } else { order };
    let mut out = vec![];
    for b in local_branches(&chart.g, &c.field, local_order)? {
        let (x, y) = chart.to_global(&b.x, &b.y, local_order)?;
        let (x, y) = (x.truncate(order), y.truncate(order));
        if !is_primitive(&b.x, &b.y) {
            return Err(CurveError::Invariant(format!("non-primitive parametrization at {c}")));
        }
        if !on_curve(curve, &x, &y)? {
            return Err(CurveError::Invariant(format!("Puiseux residual does not vanish at {c}")));
        }
        out.push(Place { label: String::new(), center: c.clone(), x, y, local: (b.x, b.y), field: b.field });
    }
    out.sort_by(|p, q| cmp_series(&p.local.0, &q.local.0).then_with(|| cmp_series(&p.local.1, &q.local.1)));
    Ok(out)
}

fn label_all(mut places: Vec<Place>, prefix: &str) -> Vec<Place> {
    for (i, p) in places.iter_mut().enumerate() {
        p.label = format!("{prefix}-{}", i + 1);
    }
    places
}

/// Places over the points at infinity, labeled `ideal-1`, `ideal-2`, ….
pub fn ideal_places(curve: &PlaneCurve, order: i64) -> Result<Vec<Place>> {
    let mut out = vec![];
    for c in curve.points_at_infinity()? {
        out.extend(newton_puiseux(curve, &c, order)?);
    }
    Ok(label_all(out, "ideal"))
}

/// Affine places with `x = x₀`, unlabeled.
pub fn places_over_x(curve: &PlaneCurve, x0: &Scalar, order: i64) -> Result<Vec<Place>> {
    let fibre = curve.poly().eval(X, x0)?.to_upoly(Y)?;
    if fibre.is_zero() {
        return Err(CurveError::BadCurve(format!("x = {x0} is a component of {}", curve.poly())));
    }
    let mut centers: Vec<Center> =
        field::roots(&fibre, &None)?.into_iter().map(|(y0, k)| Center::affine(x0.clone(), y0, k)).collect();
    centers.sort();
    let mut out = vec![];
    for c in centers {
        out.extend(newton_puiseux(curve, &c, order)?);
    }
    Ok(out)
}

/// Places over the affine singular points, labeled `sing-1`, ….
pub fn singular_places(curve: &PlaneCurve, order: i64) -> Result<Vec<Place>> {
    let mut out = vec![];
    for c in affine_singular_centers(curve)? {
        out.extend(newton_puiseux(curve, &c, order)?);
    }
    Ok(label_all(out, "sing"))
}

/// `v_t(f(x(t), y(t)))`; errors when the truncation hides the leading term.
pub fn valuation_of(f: &Poly, p: &Place) -> Result<i64> {
    let s = f.eval_series(&[(X, &p.x), (Y, &p.y)])?;
    if s.is_zero() {
        return Err(CurveError::Invariant(format!("{f} vanishes on the curve")));
    }
    if s.is_indistinguishable_from_zero() {
        return Err(CurveError::InsufficientPrecision(s.prec().unwrap_or(0) + 1));
    }
    Ok(s.valuation()?)
}
