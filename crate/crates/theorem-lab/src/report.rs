//! The consolidated per-knot report.

use std::fmt;

use crate::error::{LabError, Result};
use crate::finite::{analyze_reducible, attach_computed, divisor_place_predictions, FinitePointPrediction, RootClass};
use crate::ideal::{ideal_bound_check, BoundStatus, IdealPointCheck};
use curve_geometry::curve::PlaneCurve;
use knot_model::KnotRecord;
use serde::Serialize;
use torsion_forms::divisor::DivisorReport;
use torsion_forms::{assemble_torsion_form, divisor, Divisor};

/// `deg div(tor) = 2g(Y) − 2`, and Riemann–Hurwitz read off the divisor:
/// `−χ(Y)` from the orders, `−χ(X) = (−χ(Y) − #ramification)/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Consistency {
    pub degree: i64,
    pub expected_degree: i64,
    pub predicted_finite: i64,
    pub computed_ideal: i64,
    /// Predicted finite orders plus computed ideal orders.
    pub accounted: i64,
    pub minus_chi_y: i64,
    pub minus_chi_x: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub knot: String,
    pub curve: String,
    pub genus_x: i64,
    pub genus_y: i64,
    pub chi_x: i64,
    pub chi_y: i64,
    pub ramification: usize,
    pub alexander: String,
    pub root_classes: Vec<RootClass>,
    pub divisor: DivisorReport,
    pub finite: Vec<FinitePointPrediction>,
    pub ideal: Vec<IdealPointCheck>,
    pub consistency: Consistency,
    pub notes: Vec<String>,
}

impl TheoremReport {
    /// Broken invariants: mismatched finite predictions, bound violations and
    /// a failed degree identity.
    pub fn violations(&self) -> Vec<String> {
        let mut out = vec![];
        for f in &self.finite {
            if f.matches == Some(false) {
                out.push(format!("{}: predicted order {} but computed {:?}", f.label, f.predicted, f.computed));
            }
        }
        for c in self.ideal.iter().filter(|c| c.is_violation()) {
            out.push(format!("{}: order {} exceeds −χ − 1 = {:?}", c.label, c.order, c.bound));
        }
        if !self.consistency.ok {
            out.push(format!(
                "degree {} vs 2g(Y) − 2 = {}, accounted {}",
                self.consistency.degree, self.consistency.expected_degree, self.consistency.accounted
            ));
        }
        out
    }
}

pub fn full_report(knot: &KnotRecord) -> Result<TheoremReport> {
    let form = assemble_torsion_form(knot).map_err(|e| LabError::from(e).context("torsion form"))?;
    let div = divisor(&form).map_err(|e| LabError::from(e).context("divisor"))?;
    report_for(knot, &div)
}

/// As [`full_report`] with a precomputed divisor.
pub fn report_for(knot: &KnotRecord, div: &Divisor) -> Result<TheoremReport> {
    let mut reducible = analyze_reducible(knot).map_err(|e| e.context("reducible characters"))?;
    let curve = PlaneCurve::new(&reducible.curve)?;
    attach_computed(&mut reducible, &curve, div)?;
    let mut finite = divisor_place_predictions(&curve, div).map_err(|e| e.context("finite places"))?;
    finite.extend(reducible.predictions.iter().cloned());
    let ideal = ideal_bound_check(knot, div);
    let predicted_finite: i64 = finite.iter().map(|f| f.predicted * f.places as i64).sum();
    let computed_ideal: i64 = div.entries.iter().filter(|e| e.ideal).map(|e| e.order * e.orbit as i64).sum();
    let cover = &div.cover;
    let expected_degree = 2 * cover.genus_y - 2;
    let minus_chi_y = predicted_finite + computed_ideal;
    let minus_chi_x = (minus_chi_y - cover.ramification_count as i64) / 2;
    let consistency = Consistency {
        degree: div.degree,
        expected_degree,
        predicted_finite,
        computed_ideal,
        accounted: predicted_finite + computed_ideal,
        minus_chi_y,
        minus_chi_x,
        ok: div.degree == expected_degree
            && minus_chi_y == -cover.chi_y
            && minus_chi_x == -cover.chi_x
            && (minus_chi_y - cover.ramification_count as i64) % 2 == 0,
    };
    let mut notes = reducible.notes.clone();
    if ideal.iter().any(|c| c.status == BoundStatus::Inapplicable) {
        let eq = ideal.iter().filter(|c| c.status == BoundStatus::Inapplicable).all(|c| c.equality == Some(true));
        notes.push(format!(
            "surface with χ ≥ 0: the ideal-point bound does not apply; empirical equality {}",
            if eq { "holds" } else { "fails" }
        ));
    }
    if ideal.iter().any(|c| c.status == BoundStatus::Unassigned) {
        notes.push("some ideal places have no surface assignment".into());
    }
    Ok(TheoremReport {
        knot: knot.name.clone(),
        curve: reducible.curve.to_string(),
        genus_x: cover.genus_x,
        genus_y: cover.genus_y,
        chi_x: cover.chi_x,
        chi_y: cover.chi_y,
        ramification: cover.ramification_count,
        alexander: reducible.alexander.to_string(),
        root_classes: reducible.classes.clone(),
        divisor: div.report(),
        finite,
        ideal,
        consistency,
        notes,
    })
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), |v| v.to_string())
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot {}", self.knot)?;
        writeln!(f, "  curve P = {}", self.curve)?;
        writeln!(f, "  g(X) = {}, g(Y) = {}, χ(X) = {}, χ(Y) = {}, ramification points: {}", self.genus_x, self.genus_y, self.chi_x, self.chi_y, self.ramification)?;
        writeln!(f, "  Alexander polynomial: {}", self.alexander)?;
        for c in &self.root_classes {
            writeln!(f, "    root class {} = 0: r = {}, predicts {} ({:?})", c.factor, c.multiplicity, c.predicted, c.hypotheses)?;
        }
        writeln!(f, "  divisor of tor ({}):", self.divisor.form)?;
        for p in &self.divisor.places {
            let orbit = if p.orbit > 1 { format!(" ×{}", p.orbit) } else { String::new() };
            writeln!(f, "    {:<10} {:>3}{}", p.label, p.order, orbit)?;
        }
        writeln!(f, "    degree {} (2g(Y) − 2 = {})", self.divisor.degree, self.divisor.genus_check.expected_degree)?;
        writeln!(f, "    finite support certified, norm {}", self.divisor.finite_support.norm)?;
        writeln!(f, "  finite places:")?;
        for p in &self.finite {
            writeln!(
                f,
                "    {:<14} {:<24} {} place(s): predicted {} [{}], computed {} [{}]",
                p.label,
                format!("{:?}", p.kind),
                p.places,
                p.predicted,
                p.provenance,
                opt(&p.computed),
                p.computed_by.as_deref().unwrap_or("-"),
            )?;
        }
        writeln!(f, "  ideal places:")?;
        for c in &self.ideal {
            writeln!(
                f,
                "    {:<10} v = {:>2}, χ = {:>3}, −χ − 1 = {:>3}: {:?}{}",
                c.label,
                c.order,
                opt(&c.chi),
                opt(&c.bound),
                c.status,
                if c.equality == Some(true) { ", equality" } else { "" }
            )?;
        }
        let k = &self.consistency;
        writeln!(
            f,
            "  bookkeeping: −χ(Y) = {} (finite {} + ideal {}), −χ(X) = ({} − {})/2 = {}: {}",
            k.minus_chi_y,
            k.predicted_finite,
            k.computed_ideal,
            k.minus_chi_y,
            self.ramification,
            k.minus_chi_x,
            if k.ok { "ok" } else { "FAILED" }
        )?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
