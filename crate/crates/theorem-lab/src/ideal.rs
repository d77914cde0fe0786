//! Ideal-point orders against the incompressible-surface bound
//! `v(tor) ≤ −χ(Σ) − 1`.

use knot_model::KnotRecord;
use serde::Serialize;
use torsion_forms::Divisor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundStatus {
    Holds,
    Violated,
    /// `χ(Σ) ≥ 0`: the theorem does not apply; the comparison is empirical.
    Inapplicable,
    Unassigned,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealPointCheck {
    pub label: String,
    /// The ideal point of `X` below the place.
    pub base: String,
    pub orbit: usize,
    pub order: i64,
    pub chi: Option<i64>,
    pub bound: Option<i64>,
    pub within_bound: Option<bool>,
    pub equality: Option<bool>,
    pub status: BoundStatus,
}

impl IdealPointCheck {
    pub fn is_violation(&self) -> bool {
        self.status == BoundStatus::Violated
    }
}

/// One check per ideal place of `Y`, with the surface assigned to the ideal
/// point of `X` below it.
pub fn ideal_bound_check(knot: &KnotRecord, div: &Divisor) -> Vec<IdealPointCheck> {
    div.entries
        .iter()
        .filter(|e| e.ideal)
        .map(|e| {
            let chi = knot.surface_for(&e.base);
            let bound = chi.map(|c| -c - 1);
            let within_bound = bound.map(|b| e.order <= b);
            let status = match (chi, within_bound) {
                (None, _) => BoundStatus::Unassigned,
                (Some(c), _) if c >= 0 => BoundStatus::Inapplicable,
                (_, Some(true)) => BoundStatus::Holds,
                _ => BoundStatus::Violated,
            };
            IdealPointCheck {
                label: e.label.clone(),
                base: e.base.clone(),
                orbit: e.orbit,
                order: e.order,
                chi,
                bound,
                within_bound,
                equality: bound.map(|b| e.order == b),
                status,
            }
        })
        .collect()
}
