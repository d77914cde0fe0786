//! One function per subcommand. Each returns the text rendering, the JSON
//! value and the list of broken invariants; `main` decides the exit code.

use std::fmt::Write as _;

use algebra_core::Scalar;
use character_variety::{build_taut_rep, defining_polynomial};
use curve_geometry::cover::{build_cover_from, CoverData};
use curve_geometry::curve::PlaneCurve;
use knot_model::alexander::{alexander_polynomial, invariant_factors, is_symmetric, kth_alexander_polynomial};
use knot_model::fox::fundamental_identity_holds;
use knot_model::{Database, KnotRecord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use theorem_lab::finite::alexander_root_classes;
use theorem_lab::{reducible_point_prediction, report_for, TheoremReport};
use torsion_forms::twisted::sample_points;
use torsion_forms::{assemble_torsion_form, divisor_from_order, torsion_via_cayley, Divisor, TorsionForm};

use crate::error::{CliError, Result};
use crate::goldens;
use crate::render::{field_header, series_json, series_text};

pub const DEFAULT_PUISEUX_ORDER: i64 = 8;

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct Settings {
    pub db: Database,
    /// Truncation order override; the precision ladder starts here.
    pub order: Option<i64>,
    pub seed: u64,
    pub samples: usize,
}

impl Settings {
    pub fn new(db: Database) -> Settings {
        Settings { db, order: None, seed: 0, samples: 5 }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub violations: Vec<String>,
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn with_violations(mut json: Value, violations: &[String]) -> Value {
    if let Value::Object(m) = &mut json {
        m.insert("violations".into(), json!(violations));
    }
    json
}

fn load(s: &Settings, knot: &str) -> Result<KnotRecord> {
    Ok(s.db.load(knot)?)
}

fn min_order(s: &Settings) -> Result<i64> {
    match s.order {
        Some(n) if n < 1 => Err(CliError::Usage("order must be ≥ 1".into())),
        Some(n) => Ok(n),
        None => Ok(0),
    }
}

fn form_and_divisor(s: &Settings, knot: &KnotRecord) -> Result<(TorsionForm, Divisor)> {
    let form = assemble_torsion_form(knot)?;
    let div = divisor_from_order(&form, min_order(s)?)?;
    Ok((form, div))
}

fn report(s: &Settings, knot: &KnotRecord) -> Result<TheoremReport> {
    let (_, div) = form_and_divisor(s, knot)?;
    Ok(report_for(knot, &div)?)
}

pub fn analyze(s: &Settings, knot: &str) -> Result<Output> {
    let r = report(s, &load(s, knot)?)?;
    let violations = r.violations();
    Ok(Output { text: r.to_string(), json: with_violations(to_json(&r), &violations), violations })
}

pub fn check_theorems(s: &Settings, knot: &str) -> Result<Output> {
    let r = report(s, &load(s, knot)?)?;
    let violations = r.violations();
    let mut text = format!("knot {}\n  finite places:\n", r.knot);
    for p in &r.finite {
        let computed = p.computed.map_or("-".to_string(), |c| c.to_string());
        let verdict = match p.matches {
            Some(true) => "ok",
            Some(false) => "MISMATCH",
            None => "unchecked",
        };
        writeln!(
            text,
            "    {:<14} predicted {} [{}, {:?}], computed {}: {}",
            p.label, p.predicted, p.provenance, p.hypotheses, computed, verdict
        )
        .unwrap();
    }
    text.push_str("  ideal places:\n");
    for c in &r.ideal {
        let bound = c.bound.map_or("-".to_string(), |b| b.to_string());
        let eq = if c.equality == Some(true) { ", equality" } else { "" };
        writeln!(text, "    {:<10} v = {}, −χ − 1 = {}: {:?}{}", c.label, c.order, bound, c.status, eq).unwrap();
    }
    let k = &r.consistency;
    writeln!(
        text,
        "  degree {} = 2g(Y) − 2 = {}; accounted {}: {}",
        k.degree,
        k.expected_degree,
        k.accounted,
        if k.ok { "ok" } else { "FAILED" }
    )
    .unwrap();
    for n in &r.notes {
        writeln!(text, "  note: {n}").unwrap();
    }
    let json = json!({
        "knot": r.knot,
        "finite": to_json(&r.finite),
        "ideal": to_json(&r.ideal),
        "consistency": to_json(&r.consistency),
        "notes": r.notes,
    });
    Ok(Output { text, json: with_violations(json, &violations), violations })
}

fn cover_labels(cover: &CoverData) -> String {
    let x: Vec<&str> = cover.base_places.iter().map(|p| p.label.as_str()).collect();
    let y: Vec<String> = cover.places.iter().map(|p| format!("Y:{}", p.label)).collect();
    format!("{}; {}", x.join(", "), y.join(", "))
}

/// Expansions at one place, by label: a place of `X` (`ideal-1`, `ram-2`, …)
/// or, with a `Y:` prefix or a lift suffix, of the cover (`ideal-1a`,
/// `Y:ram-2`, …).
pub fn puiseux(s: &Settings, knot: &str, label: &str, order: i64) -> Result<Output> {
    if order < 1 {
        return Err(CliError::Usage("order must be ≥ 1".into()));
    }
    let record = load(s, knot)?;
    let data = defining_polynomial(&record, &build_taut_rep(&record)?)?;
    let curve = PlaneCurve::new(data.main_component()?)?;
    let cover = build_cover_from(&curve, order.max(s.order.unwrap_or(0)))?;
    let cut = |x: &algebra_core::Series| x.truncate(order);
    let mut text = format!("knot {}, curve P = {}\n", record.name, curve.poly());
    let on_y = label.strip_prefix("Y:");
    let json = if let Some(p) = cover.base_place(label).filter(|_| on_y.is_none()) {
        writeln!(text, "place {} of X at {}, {} conjugate(s)", p.label, p.center, p.orbit()).unwrap();
        if let Some(h) = field_header(&p.field) {
            writeln!(text, "{h}").unwrap();
        }
        writeln!(text, "  x = {}", series_text(&cut(&p.x), &p.field)).unwrap();
        writeln!(text, "  y = {}", series_text(&cut(&p.y), &p.field)).unwrap();
        if p.is_ideal() {
            writeln!(text, "chart coordinates at the center:").unwrap();
            writeln!(text, "  X = {}", series_text(&cut(&p.local.0), &p.field)).unwrap();
            writeln!(text, "  Y = {}", series_text(&cut(&p.local.1), &p.field)).unwrap();
        }
        json!({
            "knot": record.name,
            "label": p.label,
            "surface": "X",
            "center": p.center.to_string(),
            "minpoly": curve_geometry::field::minpoly_string(&p.field),
            "orbit": p.orbit(),
            "order": order,
            "x": series_json(&cut(&p.x), &p.field),
            "y": series_json(&cut(&p.y), &p.field),
            "local": [series_json(&cut(&p.local.0), &p.field), series_json(&cut(&p.local.1), &p.field)],
        })
    } else if let Some(p) = cover.place(on_y.unwrap_or(label)) {
        writeln!(text, "place {} of Y over {}, ramification {}, {} conjugate(s)", p.label, p.base, p.ramification, p.orbit())
            .unwrap();
        if let Some(h) = field_header(&p.field) {
            writeln!(text, "{h}").unwrap();
        }
        writeln!(text, "  x = {}", series_text(&cut(&p.x), &p.field)).unwrap();
        writeln!(text, "  y = {}", series_text(&cut(&p.y), &p.field)).unwrap();
        writeln!(text, "  α = {}", series_text(&cut(&p.alpha), &p.field)).unwrap();
        json!({
            "knot": record.name,
            "label": p.label,
            "surface": "Y",
            "base": p.base,
            "ramification": p.ramification,
            "minpoly": curve_geometry::field::minpoly_string(&p.field),
            "orbit": p.orbit(),
            "order": order,
            "x": series_json(&cut(&p.x), &p.field),
            "y": series_json(&cut(&p.y), &p.field),
            "alpha": series_json(&cut(&p.alpha), &p.field),
        })
    } else {
        return Err(CliError::Usage(format!(
            "unknown place label `{label}`; available labels: {}",
            cover_labels(&cover)
        )));
    };
    Ok(Output { text, json, violations: vec![] })
}

pub fn torsion_divisor(s: &Settings, knot: &str) -> Result<Output> {
    let record = load(s, knot)?;
    let (form, div) = form_and_divisor(s, &record)?;
    let mut rng = s.rng();
    let points = sample_points(&record, &form, &mut rng, s.samples)?;
    let evals = points.iter().map(|p| torsion_via_cayley(&record, &form, p)).collect::<std::result::Result<Vec<_>, _>>()?;
    let mut violations = vec![];
    for e in &evals {
        if !e.agrees_up_to_sign {
            violations.push(format!("Cayley torsion {} differs from τ_μ = {} at α = {}", e.tau_cayley, e.tau_form, e.alpha));
        }
        if e.homology != (0, 1, 1) {
            violations.push(format!("twisted homology {:?} at α = {}", e.homology, e.alpha));
        }
    }
    let rep = div.report();
    let form_report = form.report();
    let mut text = format!("knot {}\n  μ = {}, τ_μ = {}\n  ω = {} dx\n", record.name, form_report.mu, form_report.tau_printed, form_report.coefficient);
    writeln!(text, "  divisor:").unwrap();
    for p in &rep.places {
        let orbit = if p.orbit > 1 { format!(" (×{})", p.orbit) } else { String::new() };
        writeln!(text, "    {:<10} {:>3}{}", p.label, p.order, orbit).unwrap();
    }
    writeln!(text, "  degree {} (2g(Y) − 2 = {}, g(Y) = {})", rep.degree, rep.genus_check.expected_degree, rep.genus_check.genus_y)
        .unwrap();
    writeln!(text, "  no other zeros or poles: u = ω/η is a unit of norm {}", rep.finite_support.norm).unwrap();
    writeln!(text, "  Cayley cross-check, seed {}, {} point(s):", s.seed, evals.len()).unwrap();
    for e in &evals {
        let y = match &e.minpoly {
            Some(m) => format!("root of {m}"),
            None => e.y.clone(),
        };
        writeln!(
            text,
            "    α = {:<6} y = {:<24} τ_Cayley = {}, τ_μ = {}: {}",
            e.alpha,
            y,
            e.tau_cayley,
            e.tau_form,
            if e.agrees_up_to_sign { "agree" } else { "DIFFER" }
        )
        .unwrap();
    }
    let json = json!({
        "knot": record.name,
        "form": to_json(&form_report),
        "divisor": to_json(&rep),
        "seed": s.seed,
        "cayley": to_json(&evals),
    });
    Ok(Output { text, json: with_violations(json, &violations), violations })
}

pub fn alexander(s: &Settings, knot: &str) -> Result<Output> {
    let record = load(s, knot)?;
    let pres = record.presentation()?;
    let delta = alexander_polynomial(&pres)?;
    let at_one = delta.eval_all(&[("t", Scalar::one())])?;
    let symmetric = is_symmetric(&delta);
    let factors: Vec<String> = invariant_factors(&pres)?.iter().map(|f| f.to_string()).collect();
    let delta2 = kth_alexander_polynomial(&pres, 2)?;
    let fox = fundamental_identity_holds(pres.relator(), pres.generators());
    let classes = alexander_root_classes(&delta)?;
    let predictions = reducible_point_prediction(&record)?;
    let mut violations = vec![];
    if !symmetric {
        violations.push(format!("Δ = {delta} is not symmetric"));
    }
    if at_one != Scalar::one() && at_one != Scalar::int(-1) {
        violations.push(format!("Δ(1) = {at_one}"));
    }
    if !fox {
        violations.push("Fox fundamental identity fails on the relator".into());
    }
    let mut text = format!("knot {}\n  relator r = {}\n  Δ(t) = {delta}\n  Δ(1) = {at_one}, symmetric: {symmetric}\n", record.name, pres.relator());
    writeln!(text, "  invariant factors: [{}], Δ₂ = {delta2}", factors.join(", ")).unwrap();
    writeln!(text, "  Fox identity Σ (∂r/∂g)(g − 1) = r − 1: {}", if fox { "holds" } else { "FAILS" }).unwrap();
    for c in &classes {
        writeln!(text, "  root class {} = 0: multiplicity {}, predicted order {} ({:?})", c.factor, c.multiplicity, c.predicted, c.hypotheses)
            .unwrap();
    }
    for p in &predictions {
        writeln!(text, "  reducible character {} at {}: {} place(s) of Y, predicted order {}", p.label, p.center, p.places, p.predicted)
            .unwrap();
    }
    let json = json!({
        "knot": record.name,
        "relator": pres.relator().to_string(),
        "alexander": delta.to_string(),
        "at_one": at_one.to_string(),
        "symmetric": symmetric,
        "invariant_factors": factors,
        "alexander_2": delta2.to_string(),
        "fox_identity": fox,
        "root_classes": to_json(&classes),
        "reducible_points": to_json(&predictions),
    });
    Ok(Output { text, json: with_violations(json, &violations), violations })
}

pub fn run_goldens(s: &Settings, only: Option<&str>) -> Result<Output> {
    let rows = goldens::run(s, only)?;
    let violations: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("criterion {} {}: expected {}, computed {}", r.criterion, r.name, r.expected, r.computed))
        .collect();
    Ok(Output { text: goldens::table(&rows), json: with_violations(json!({ "rows": to_json(&rows) }), &violations), violations })
}
