//! The divisor of the torsion form on the augmented curve.

use crate::certificate::{certify_finite_support, UnitCertificate};
use crate::error::{Result, TorsionError};
use crate::form::TorsionForm;
use crate::valuation::valuation_at_place;
use algebra_core::Scalar;
use curve_geometry::cover::{build_cover_from, lift_place, CoverData};
use curve_geometry::curve::PlaneCurve;
use curve_geometry::places::places_over_x;
use curve_geometry::singular::{is_singular, ORDERS};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorEntry {
    pub label: String,
    pub base: String,
    pub ideal: bool,
    pub ramification: u32,
    /// Number of conjugate places this entry stands for.
    pub orbit: usize,
    pub order: i64,
}

#[derive(Clone, Debug)]
pub struct Divisor {
    pub knot: String,
    pub form: String,
    pub entries: Vec<DivisorEntry>,
    pub degree: i64,
    pub genus_y: i64,
    pub certificate: UnitCertificate,
    pub cover: CoverData,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaceOrder {
    pub label: String,
    pub order: i64,
    pub orbit: usize,
    pub ideal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenusCheck {
    pub genus_y: i64,
    pub expected_degree: i64,
    pub degree: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorReport {
    pub knot: String,
    pub form: String,
    pub places: Vec<PlaceOrder>,
    pub degree: i64,
    pub genus_check: GenusCheck,
    pub finite_support: UnitCertificate,
}

impl Divisor {
    pub fn order(&self, label: &str) -> Option<i64> {
        self.entries.iter().find(|e| e.label == label).map(|e| e.order)
    }

    /// Entries with nonzero order.
    pub fn support(&self) -> impl Iterator<Item = &DivisorEntry> {
        self.entries.iter().filter(|e| e.order != 0)
    }

    /// Orders of the ideal places, one per geometric place.
    pub fn ideal_orders(&self) -> Vec<i64> {
        self.entries.iter().filter(|e| e.ideal).flat_map(|e| std::iter::repeat_n(e.order, e.orbit)).collect()
    }

    pub fn finite_support(&self) -> Vec<&DivisorEntry> {
        self.support().filter(|e| !e.ideal).collect()
    }

    pub fn report(&self) -> DivisorReport {
        DivisorReport {
            knot: self.knot.clone(),
            form: self.form.clone(),
            places: self
                .entries
                .iter()
                .map(|e| PlaceOrder { label: e.label.clone(), order: e.order, orbit: e.orbit, ideal: e.ideal })
                .collect(),
            degree: self.degree,
            genus_check: GenusCheck {
                genus_y: self.genus_y,
                expected_degree: 2 * self.genus_y - 2,
                degree: self.degree,
                ok: self.degree == 2 * self.genus_y - 2,
            },
            finite_support: self.certificate.clone(),
        }
    }
}

/// Orders at every place of a precomputed cover.
pub fn orders_on_cover(form: &TorsionForm, cover: &CoverData) -> Result<Vec<DivisorEntry>> {
    cover
        .places
        .iter()
        .map(|p| {
            Ok(DivisorEntry {
                label: p.label.clone(),
                base: p.base.clone(),
                ideal: p.ideal,
                ramification: p.ramification,
                orbit: p.orbit(),
                order: valuation_at_place(form, p)?,
            })
        })
        .collect()
}

/// `div(ω)`: orders at the ideal places, the places over singular points and
/// over `x = ±2`, with order 0 elsewhere certified by [`certify_finite_support`].
/// A degree other than `2g(Y) − 2` is an invariant violation.
pub fn divisor(form: &TorsionForm) -> Result<Divisor> {
    divisor_from_order(form, 0)
}

/// As [`divisor`], starting the expansions at truncation order `min_order`
/// or the first larger entry of the precision ladder.
pub fn divisor_from_order(form: &TorsionForm, min_order: i64) -> Result<Divisor> {
    let curve = PlaneCurve::new(&form.curve)?;
    let certificate = certify_finite_support(form)?;
    let mut min = min_order;
    let (cover, entries) = loop {
        let cover = build_cover_from(&curve, min)?;
        match orders_on_cover(form, &cover) {
            Ok(entries) => break (cover, entries),
            Err(TorsionError::InsufficientPrecision(n)) if cover.order < ORDERS[ORDERS.len() - 1] => {
                min = n.max(cover.order + 1);
            }
            Err(e) => return Err(e),
        }
    };
    let degree = entries.iter().map(|e| e.order * e.orbit as i64).sum();
    let expected = 2 * cover.genus_y - 2;
    if degree != expected {
        return Err(TorsionError::DegreeMismatch { degree, expected });
    }
    Ok(Divisor {
        knot: form.knot.clone(),
        form: form.provenance.clone(),
        entries,
        degree,
        genus_y: cover.genus_y,
        certificate,
        cover,
    })
}

/// Order 0 at every place of `Y` over the smooth affine points with
/// `x = x₀`, for each `x₀` (with `x₀² ≠ 4`). Choosing `x₀ = α₀ + α₀⁻¹` with
/// rational `α₀` avoids towers when the fibre is irrational.
pub fn smooth_spot_check(form: &TorsionForm, xs: &[Scalar]) -> Result<usize> {
    let curve = PlaneCurve::new(&form.curve)?;
    let mut checked = 0;
    for x0 in xs {
        if (&(x0 * x0) - &Scalar::int(4)).is_zero() {
            continue;
        }
        let order = ORDERS[1];
        for p in places_over_x(&curve, x0, order)? {
            if is_singular(&curve, &p.center)? {
                continue;
            }
            for q in lift_place(&p)? {
                let v = valuation_at_place(form, &q)?;
                if v != 0 {
                    return Err(TorsionError::Invariant(format!(
                        "ω has order {v} at a smooth place over x = {x0} outside the certified support"
                    )));
                }
                checked += q.orbit();
            }
        }
    }
    Ok(checked)
}
