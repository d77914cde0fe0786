//! Vanishing orders at finite places: singularity lengths at irreducible
//! characters and `2r − 2` at reducible ones.

use crate::error::{LabError, Result};
use algebra_core::gcd::clear_monomials;
use algebra_core::{factor_rational, factor_upoly, resultant, Poly, Scalar, Series, UPoly};
use character_variety::symmetrize::{X, Y};
use character_variety::{build_taut_rep, defining_polynomial, irreducibility_witness};
use curve_geometry::curve::{Center, PlaneCurve};
use curve_geometry::field::{self, Field};
use curve_geometry::places::Place;
use curve_geometry::singular::{is_singular, with_precision, LocalData};
use knot_model::alexander::alexander_polynomial;
use knot_model::KnotRecord;
use serde::Serialize;
use torsion_forms::Divisor;

const LAMBDA_SQ: &str = "s";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointKind {
    IrreducibleSingular,
    ReducibleIntersection,
    Smooth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    #[serde(rename = "length formula")]
    LengthFormula,
    #[serde(rename = "2r-2")]
    TwoRMinusTwo,
    #[serde(rename = "zero")]
    Zero,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::LengthFormula => "length formula",
            Provenance::TwoRMinusTwo => "2r-2",
            Provenance::Zero => "zero",
        })
    }
}

/// Status of the extra hypotheses behind the `2r − 2` prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Hypotheses {
    /// Simple root: nothing beyond the root condition is needed.
    Automatic,
    /// Root of higher multiplicity: the rank conditions cannot be checked here.
    Assumed,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitePointPrediction {
    pub label: String,
    pub kind: PointKind,
    pub center: String,
    /// Places of `Y` this entry stands for.
    pub places: usize,
    pub predicted: i64,
    pub provenance: Provenance,
    pub hypotheses: Hypotheses,
    /// Multiplicity `r` of `λ²` as a root of `Δ`.
    pub root_multiplicity: Option<usize>,
    pub computed: Option<i64>,
    pub computed_by: Option<String>,
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialLength {
    pub length: i64,
    pub warning: Option<String>,
}

/// Length of the torsion of `Ω ⊗ O` at a branch of `X^p = Y^q`:
/// `q′(p − 1)` with `q′ = q/gcd(p, q)`.
pub fn monomial_singularity_length(p: i64, q: i64) -> Result<MonomialLength> {
    if p < 1 || q < 1 {
        return Err(LabError::Invalid(format!("exponents must be positive, got ({p}, {q})")));
    }
    let (p, q, warning) = if p > q {
        (q, p, Some(format!("exponents swapped to ({q}, {p})")))
    } else {
        (p, q, None)
    };
    let n = gcd(p, q);
    Ok(MonomialLength { length: q / n * (p - 1), warning })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn order(s: &Series, what: &str) -> Result<Option<i64>> {
    if s.is_zero() {
        return Ok(None);
    }
    if s.is_indistinguishable_from_zero() {
        return Err(LabError::Truncation(format!("{what} is O(t^{})", s.prec().unwrap_or(0))));
    }
    Ok(Some(s.valuation()?))
}

/// `length(T)` at a finite place from its parametrization:
/// `v(P_x) + v(g) − v(y′)` with `v(g) = min(v(x′), v(y′))`, checked against
/// `v(P_y) + v(g) − v(x′)` through the chain rule.
pub fn branch_torsion_length(curve: &PlaneCurve, place: &Place) -> Result<i64> {
    if place.is_ideal() {
        return Err(LabError::Invalid(format!("{} is an ideal place", place.label)));
    }
    let p = curve.poly();
    let at = |f: &Poly| f.eval_series(&[(X, &place.x), (Y, &place.y)]);
    let vpx = order(&at(&p.derivative(X))?, "P_x")?;
    let vpy = order(&at(&p.derivative(Y))?, "P_y")?;
    let vdx = order(&place.x.derivative(), "x′")?;
    let vdy = order(&place.y.derivative(), "y′")?;
    let vg = match (vdx, vdy) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return Err(LabError::Invalid(format!("{} has a constant parametrization", place.label))),
    };
    let via_x = vpx.zip(vdy).map(|(a, b)| a + vg - b);
    let via_y = vpy.zip(vdx).map(|(a, b)| a + vg - b);
    match (via_x, via_y) {
        (Some(a), Some(b)) if a != b => Err(LabError::Invariant(format!(
            "chain rule fails at {}: v(P_x) + v(x′) ≠ v(P_y) + v(y′)",
            place.label
        ))),
        (Some(a), _) | (_, Some(a)) => Ok(a),
        (None, None) => Err(LabError::Invalid(format!("{}: P_x and P_y vanish on the branch", place.label))),
    }
}

/// An irreducible factor of `Δ(s)` with its multiplicity and the order it
/// predicts at reducible characters with `λ²` among its roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootClass {
    pub factor: String,
    pub multiplicity: usize,
    pub predicted: i64,
    pub hypotheses: Hypotheses,
    #[serde(skip)]
    poly: UPoly,
}

fn upoly_to_poly(f: &UPoly, var: &str) -> Poly {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Poly::zero(), |acc, (k, c)| acc.add(&Poly::monomial(c.clone(), &[(var, k as i32)])))
}

pub fn prediction_for_multiplicity(r: usize) -> (i64, Hypotheses) {
    let h = if r == 1 { Hypotheses::Automatic } else { Hypotheses::Assumed };
    (2 * r as i64 - 2, h)
}

/// Root classes of an Alexander polynomial in `t`.
pub fn alexander_root_classes(delta: &Poly) -> Result<Vec<RootClass>> {
    let var = delta.vars().first().cloned().unwrap_or_else(|| "t".into());
    let u = clear_monomials(delta).to_upoly(&var)?;
    if u.is_zero() {
        return Err(LabError::Invalid("Δ = 0".into()));
    }
    let mut out = vec![];
    for (h, r) in factor_upoly(&u)? {
        if h.degree().unwrap_or(0) == 0 {
            continue;
        }
        if h.eval(&Scalar::one()).is_zero() {
            return Err(LabError::Invariant("λ² = 1 is a root of Δ, but Δ(1) ≠ 0 for a knot".into()));
        }
        let (predicted, hypotheses) = prediction_for_multiplicity(r);
        out.push(RootClass { factor: upoly_to_poly(&h, LAMBDA_SQ).to_string(), multiplicity: r, predicted, hypotheses, poly: h });
    }
    Ok(out)
}

/// Irreducible factors of the polynomial whose roots are `x = λ + λ⁻¹` with
/// `λ²` a root of `h`.
fn meridian_traces(h: &UPoly) -> Result<Vec<Poly>> {
    let s = Poly::var(LAMBDA_SQ);
    let x2 = Poly::var(X).pow(2);
    // λ² + λ⁻² + 2 = x²  ⇔  s² + (2 − x²)s + 1 = 0.
    let q = s.pow(2).add(&Poly::int(2).sub(&x2).mul(&s)).add(&Poly::one());
    let m = resultant(&upoly_to_poly(h, LAMBDA_SQ), &q, LAMBDA_SQ)?;
    Ok(factor_rational(&m)?.into_iter().map(|(f, _)| f).filter(|f| !f.is_constant()).collect())
}

/// A reducible character on the irreducible-type component.
#[derive(Clone, Debug)]
pub struct ReduciblePoint {
    pub center: Center,
    pub trace_factor: Poly,
    pub multiplicity: usize,
}

/// Common points of `P` and `Δ_{u,v}` over one factor `f(x)`.
fn points_over(curve: &Poly, witness: &Poly, f: &Poly) -> Result<Vec<Center>> {
    let (x0, k) = field::adjoin_root(&f.to_upoly(X)?, &None)?;
    let on = |p: &Poly| -> Result<UPoly> {
        let e = p.eval(X, &x0)?;
        Ok(if e.has_var(Y) { e.to_upoly(Y)? } else { UPoly::constant(e.as_scalar().unwrap_or_else(Scalar::zero)) })
    };
    let g = on(curve)?.gcd(&on(witness)?);
    if g.degree().unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    let mut out = vec![];
    for (y0, kk) in field::roots(&g, &k)? {
        out.push(Center::affine(x0.clone(), y0, join(&k, &kk)?));
    }
    Ok(out)
}

fn join(a: &Field, b: &Field) -> Result<Field> {
    Ok(field::join(a, b)?)
}

/// Reducible characters on `curve` with their Alexander multiplicities, and
/// the root classes of `Δ` whose traces miss the component.
pub fn locate_reducible_points(
    curve: &Poly,
    witness: &Poly,
    classes: &[RootClass],
) -> Result<(Vec<ReduciblePoint>, Vec<String>)> {
    let mut traces: Vec<(Poly, usize)> = vec![];
    for c in classes {
        for f in meridian_traces(&c.poly)? {
            match traces.iter().find(|(g, _)| *g == f) {
                Some((_, r)) if *r != c.multiplicity => {
                    return Err(LabError::Invariant(format!("λ² and λ⁻² have different multiplicities in Δ over {f}")))
                }
                Some(_) => {}
                None => traces.push((f, c.multiplicity)),
            }
        }
    }
    // Every common zero of P and Δ_{u,v} must come from an Alexander root.
    let all = resultant(curve, witness, Y)?;
    if !all.is_zero() && all.has_var(X) {
        for (f, _) in factor_rational(&all)? {
            if !f.is_constant() && !traces.iter().any(|(g, _)| *g == f) {
                return Err(LabError::Invariant(format!(
                    "reducible characters over {f} = 0 whose λ² is not a root of Δ"
                )));
            }
        }
    }
    let mut points = vec![];
    let mut missing = vec![];
    for (f, r) in traces {
        let centers = points_over(curve, witness, &f)?;
        if centers.is_empty() {
            missing.push(format!("no intersection on this component over {f} = 0"));
        }
        for c in centers {
            points.push(ReduciblePoint { center: c, trace_factor: f.clone(), multiplicity: r });
        }
    }
    Ok((points, missing))
}

/// Alexander data and reducible characters of a record's irreducible-type
/// component.
#[derive(Clone, Debug)]
pub struct ReducibleAnalysis {
    pub curve: Poly,
    pub alexander: Poly,
    pub classes: Vec<RootClass>,
    pub points: Vec<ReduciblePoint>,
    pub predictions: Vec<FinitePointPrediction>,
    /// Root classes of `Δ` with no point on the component.
    pub notes: Vec<String>,
}

pub fn analyze_reducible(knot: &KnotRecord) -> Result<ReducibleAnalysis> {
    let rep = build_taut_rep(knot)?;
    let data = defining_polynomial(knot, &rep)?;
    let curve = data.main_component()?.clone();
    let (_, witness) = irreducibility_witness(&rep, &curve)?;
    let alexander = alexander_polynomial(&knot.presentation()?)?;
    let classes = alexander_root_classes(&alexander)?;
    let (points, notes) = locate_reducible_points(&curve, &witness, &classes)?;
    let plane = PlaneCurve::new(&curve)?;
    let predictions = points.iter().enumerate().map(|(i, p)| reducible_entry(&plane, i, p)).collect::<Result<_>>()?;
    Ok(ReducibleAnalysis { curve, alexander, classes, points, predictions, notes })
}

/// Predicted orders at the reducible characters of the record's
/// irreducible-type component.
pub fn reducible_point_prediction(knot: &KnotRecord) -> Result<Vec<FinitePointPrediction>> {
    Ok(analyze_reducible(knot)?.predictions)
}

fn reducible_entry(curve: &PlaneCurve, i: usize, p: &ReduciblePoint) -> Result<FinitePointPrediction> {
    let (predicted, hypotheses) = prediction_for_multiplicity(p.multiplicity);
    let branches = if is_singular(curve, &p.center)? {
        with_precision(|o| Ok(LocalData::new(curve, &p.center, o)?.branch_count()))?
    } else {
        1
    };
    let x2 = &p.center.x * &p.center.x;
    let sheets = if (&x2 - &Scalar::int(4)).is_zero() { 1 } else { 2 };
    Ok(FinitePointPrediction {
        label: format!("reducible-{}", i + 1),
        kind: PointKind::ReducibleIntersection,
        center: p.center.to_string(),
        places: branches * sheets * p.center.conjugates(),
        predicted,
        provenance: Provenance::TwoRMinusTwo,
        hypotheses,
        root_multiplicity: Some(p.multiplicity),
        computed: None,
        computed_by: None,
        matches: None,
    })
}

/// Predictions at the finite places the divisor computes directly: places
/// over affine singular points and over `x = ±2`.
pub fn divisor_place_predictions(curve: &PlaneCurve, div: &Divisor) -> Result<Vec<FinitePointPrediction>> {
    let mut out = vec![];
    for e in div.entries.iter().filter(|e| !e.ideal) {
        let base = div
            .cover
            .base_place(&e.base)
            .ok_or_else(|| LabError::Invalid(format!("no base place {}", e.base)))?;
        let (kind, predicted, provenance) = if is_singular(curve, &base.center)? {
            (PointKind::IrreducibleSingular, branch_torsion_length(curve, base)?, Provenance::LengthFormula)
        } else {
            (PointKind::Smooth, 0, Provenance::Zero)
        };
        out.push(FinitePointPrediction {
            label: e.label.clone(),
            kind,
            center: base.center.to_string(),
            places: e.orbit,
            predicted,
            provenance,
            hypotheses: Hypotheses::NotApplicable,
            root_multiplicity: None,
            computed: Some(e.order),
            computed_by: Some("divisor".into()),
            matches: Some(e.order == predicted),
        });
    }
    Ok(out)
}

/// Fills in computed orders at reducible characters: zero by the unit
/// certificate at smooth points off `x = ±2`, otherwise from the divisor.
pub fn attach_computed(analysis: &mut ReducibleAnalysis, curve: &PlaneCurve, div: &Divisor) -> Result<()> {
    for (p, pt) in analysis.predictions.iter_mut().zip(&analysis.points) {
        let c = &pt.center;
        let x2 = &c.x * &c.x;
        let (computed, by) = if !is_singular(curve, c)? && !(&x2 - &Scalar::int(4)).is_zero() {
            (Some(0), Some("unit certificate".to_string()))
        } else {
            let hit = div.entries.iter().find(|e| div.cover.base_place(&e.base).is_some_and(|b| b.center == *c));
            (hit.map(|e| e.order), hit.map(|_| "divisor".to_string()))
        };
        p.computed = computed;
        p.computed_by = by;
        p.matches = computed.map(|v| v == p.predicted);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_lengths() {
        assert_eq!(monomial_singularity_length(2, 3).unwrap().length, 3);
        assert_eq!(monomial_singularity_length(2, 2).unwrap().length, 1);
        assert_eq!(monomial_singularity_length(1, 7).unwrap().length, 0);
        assert_eq!(monomial_singularity_length(4, 6).unwrap().length, 9);
        let swapped = monomial_singularity_length(3, 2).unwrap();
        assert_eq!(swapped.length, 3);
        assert!(swapped.warning.is_some());
        assert!(monomial_singularity_length(0, 2).is_err());
    }

    #[test]
    fn double_root_predicts_two() {
        let t = Poly::var("t");
        let delta = t.sub(&Poly::int(2)).pow(2);
        let classes = alexander_root_classes(&delta).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!((classes[0].multiplicity, classes[0].predicted), (2, 2));
        assert_eq!(classes[0].hypotheses, Hypotheses::Assumed);
    }

    #[test]
    fn root_at_one_is_rejected() {
        let t = Poly::var("t");
        let delta = t.sub(&Poly::one()).mul(&t.sub(&Poly::int(3)));
        assert!(matches!(alexander_root_classes(&delta), Err(LabError::Invariant(_))));
    }

    #[test]
    fn traces_of_figure_eight_roots() {
        let t = Poly::var("t");
        let delta = t.pow(2).sub(&t.scale(&Scalar::int(3))).add(&Poly::one());
        let classes = alexander_root_classes(&delta).unwrap();
        let fs = meridian_traces(&classes[0].poly).unwrap();
        assert_eq!(fs, vec![Poly::var(X).pow(2).sub(&Poly::int(5))]);
    }
}
