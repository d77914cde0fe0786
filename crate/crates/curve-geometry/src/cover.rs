//! The augmented curve `Y → X`, `α² − xα + 1 = 0`, branched over `x = ±2`.

use crate::curve::{PlaneCurve, X};
use crate::error::{CurveError, Result};
use crate::field::{self, Field};
use crate::places::{ideal_places, places_over_x, singular_places, valuation_of, Place, PlaceReport, SeriesReport};
use crate::singular::{genus_from, singular_points, with_precision, with_precision_from, SingularPoint};
use algebra_core::{Poly, Scalar, Series, UPoly};
use serde::Serialize;

/// A place of `Y`: `x(s)`, `y(s)`, `α(s)` in a uniformizer `s` of `Y`.
#[derive(Clone, Debug)]
pub struct CoverPlace {
    pub label: String,
    pub base: String,
    pub ramification: u32,
    pub ideal: bool,
    pub x: Series,
    pub y: Series,
    pub alpha: Series,
    pub field: Field,
}

impl CoverPlace {
    pub fn orbit(&self) -> usize {
        field::degree(&self.field)
    }

    pub fn report(&self) -> CoverPlaceReport {
        CoverPlaceReport {
            label: self.label.clone(),
            base: self.base.clone(),
            ramification: self.ramification,
            ideal: self.ideal,
            field: field::minpoly_string(&self.field),
            orbit: self.orbit(),
            x: SeriesReport::new(&self.x),
            y: SeriesReport::new(&self.y),
            alpha: SeriesReport::new(&self.alpha),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverPlaceReport {
    pub label: String,
    pub base: String,
    pub ramification: u32,
    pub ideal: bool,
    pub field: Option<String>,
    pub orbit: usize,
    pub x: SeriesReport,
    pub y: SeriesReport,
    pub alpha: SeriesReport,
}

#[derive(Clone, Debug)]
pub struct CoverData {
    pub singular_points: Vec<SingularPoint>,
    /// Ideal places, places over affine singular points and places over
    /// `x = ±2`.
    pub base_places: Vec<Place>,
    pub ramification_points: Vec<String>,
    pub ramification_count: usize,
    pub genus_x: i64,
    pub chi_x: i64,
    pub chi_y: i64,
    pub genus_y: i64,
    pub places: Vec<CoverPlace>,
    pub order: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub genus_x: i64,
    pub chi_x: i64,
    pub ramification_points: Vec<String>,
    pub ramification_count: usize,
    pub chi_y: i64,
    pub genus_y: i64,
    pub base_places: Vec<PlaceReport>,
    pub places: Vec<CoverPlaceReport>,
}

impl CoverData {
    pub fn report(&self) -> CoverReport {
        CoverReport {
            genus_x: self.genus_x,
            chi_x: self.chi_x,
            ramification_points: self.ramification_points.clone(),
            ramification_count: self.ramification_count,
            chi_y: self.chi_y,
            genus_y: self.genus_y,
            base_places: self.base_places.iter().map(Place::report).collect(),
            places: self.places.iter().map(CoverPlace::report).collect(),
        }
    }

    pub fn place(&self, label: &str) -> Option<&CoverPlace> {
        self.places.iter().find(|p| p.label == label)
    }

    pub fn base_place(&self, label: &str) -> Option<&Place> {
        self.base_places.iter().find(|p| p.label == label)
    }

    /// The lifts of a base place.
    pub fn lifts<'a>(&'a self, base: &'a str) -> impl Iterator<Item = &'a CoverPlace> {
        self.places.iter().filter(move |p| p.base == base)
    }
}

fn x2_minus_4() -> Poly {
    Poly::var(X).pow(2).sub(&Poly::int(4))
}

/// Whether `Y → X` ramifies at the place: `v(x² − 4)` is odd.
pub fn is_ramified(p: &Place) -> Result<bool> {
    Ok(valuation_of(&x2_minus_4(), p)? % 2 != 0)
}

/// `c⁻¹ s^{-v} f` for `f` with leading term `c t^v`, so the result starts at 1.
fn normalized(f: &Series) -> Result<(i64, Scalar, Series)> {
    let (v, c) = f.leading()?;
    Ok((v, c.clone(), f.shift(-v).scale(&c.inv()?)))
}

/// A square root of `c` in `k`, if there is one.
fn sqrt_in(c: &Scalar, k: &Field) -> Result<Option<Scalar>> {
    if let Some(r) = c.sqrt_exact() {
        return Ok(Some(r));
    }
    let z2 = UPoly::new(vec![-c, Scalar::zero(), Scalar::one()]);
    for h in field::factor_over(&z2, &join_scalar(c, k)?)? {
        if h.degree() == Some(1) {
            return Ok(Some(-&h.coeff(0)));
        }
    }
    Ok(None)
}

fn join_scalar(c: &Scalar, k: &Field) -> Result<Field> {
    field::join(k, &c.field().cloned())
}

fn check_alpha(x: &Series, a: &Series) -> Result<()> {
    let r = a.mul(a).sub(&x.mul(a)).add(&Series::constant(Scalar::one()));
    if !r.is_indistinguishable_from_zero() {
        return Err(CurveError::Invariant(format!("α(t) does not satisfy α² − xα + 1 = 0: {r}")));
    }
    Ok(())
}

/// The places of `Y` over a place of `X`.
pub fn lift_place(p: &Place) -> Result<Vec<CoverPlace>> {
    let disc = p.x.mul(&p.x).sub(&Series::constant(Scalar::int(4)));
    if disc.is_indistinguishable_from_zero() {
        return Err(CurveError::InsufficientPrecision(disc.prec().unwrap_or(0) + 1));
    }
    let (v, c, unit) = normalized(&disc)?;
    let half = Scalar::frac(1, 2);
    let mk = |suffix: &str, ram: u32, x: &Series, y: &Series, alpha: Series, field: Field| -> Result<CoverPlace> {
        check_alpha(x, &alpha)?;
        Ok(CoverPlace {
            label: format!("{}{suffix}", p.label),
            base: p.label.clone(),
            ramification: ram,
            ideal: p.is_ideal(),
            x: x.clone(),
            y: y.clone(),
            alpha,
            field,
        })
    };
    if v % 2 != 0 {
        // t = s²/c makes the leading coefficient of x² − 4 a square.
        let k = (v - 1) / 2;
        let ci = c.inv()?;
        let sub = Series::monomial(ci.clone(), 2);
        let x = p.x.compose(&sub)?;
        let y = p.y.compose(&sub)?;
        let root_unit = unit.compose(&sub)?;
        // x² − 4 = c^{−2k} s^{2v} · u(s²/c) with u(0) = 1.
        let root = root_unit.sqrt()?.shift(v).scale(&ci.powi(k)?);
        let alpha = x.add(&root).scale(&half);
        return Ok(vec![mk("", 2, &x, &y, alpha, p.field.clone())?]);
    }
    let root_unit = unit.sqrt()?;
    match sqrt_in(&c, &p.field)? {
        Some(r) => {
            let root = root_unit.shift(v / 2).scale(&r);
            let a = p.x.add(&root).scale(&half);
            let b = a.inv()?;
            let (first, second) = if lift_order(&a, &b) { (a, b) } else { (b, a) };
            Ok(vec![mk("a", 1, &p.x, &p.y, first, p.field.clone())?, mk("b", 1, &p.x, &p.y, second, p.field.clone())?])
        }
        None if p.field.is_none() => {
            // The two lifts are conjugate over Q(√c): one inert place.
            let (r, k) = field::adjoin_root(&UPoly::new(vec![-&c, Scalar::zero(), Scalar::one()]), &None)?;
            let root = root_unit.shift(v / 2).scale(&r);
            let a = p.x.add(&root).scale(&half);
            Ok(vec![mk("", 1, &p.x, &p.y, a, k)?])
        }
        None => Err(CurveError::FieldTower(format!("z^2 - ({c})"))),
    }
}

/// `a` before `b` when it has the smaller valuation, then the smaller
/// leading coefficient.
fn lift_order(a: &Series, b: &Series) -> bool {
    let (va, ca) = a.leading().expect("nonzero");
    let (vb, cb) = b.leading().expect("nonzero");
    va.cmp(&vb).then_with(|| ca.canonical_cmp(&cb)).is_le()
}

/// Ramification points, Euler characteristics, genera and all places of `Y`
/// over the special places of `X`.
pub fn build_cover(curve: &PlaneCurve) -> Result<CoverData> {
    let sing = singular_points(curve)?;
    let genus_x = genus_from(curve, &sing)?;
    with_precision(|order| cover_at(curve, &sing, genus_x, order))
}

/// As [`build_cover`], with series known to at least `min_order`.
pub fn build_cover_from(curve: &PlaneCurve, min_order: i64) -> Result<CoverData> {
    let sing = singular_points(curve)?;
    let genus_x = genus_from(curve, &sing)?;
    with_precision_from(min_order, |order| cover_at(curve, &sing, genus_x, order))
}

fn cover_at(curve: &PlaneCurve, sing: &[SingularPoint], genus_x: i64, order: i64) -> Result<CoverData> {
    let mut base = ideal_places(curve, order)?;
    let singular = singular_places(curve, order)?;
    let mut over = vec![];
    for x0 in [-2, 2] {
        for p in places_over_x(curve, &Scalar::int(x0), order)? {
            if singular.iter().any(|s| s.center == p.center) {
                return Err(CurveError::SingularRamification(p.center.to_string()));
            }
            over.push(p);
        }
    }
    base.extend(singular);
    let (mut ram_k, mut fib_k) = (0, 0);
    for mut p in over {
        if is_ramified(&p)? {
            ram_k += 1;
            p.label = format!("ram-{ram_k}");
        } else {
            fib_k += 1;
            p.label = format!("fib-{fib_k}");
        }
        base.push(p);
    }
    let mut places = vec![];
    let mut ramified = vec![];
    let mut ram_count = 0;
    for p in &base {
        let lifts = lift_place(p)?;
        let weight: usize = lifts.iter().map(|l| l.ramification as usize * l.orbit()).sum();
        if weight != 2 * p.orbit() {
            return Err(CurveError::Invariant(format!("lifts of {} do not have total degree 2", p.label)));
        }
        if lifts[0].ramification == 2 {
            ramified.push(p.label.clone());
            ram_count += p.orbit();
        }
        places.extend(lifts);
    }
    let chi_x = 2 - 2 * genus_x;
    let chi_y = 2 * chi_x - ram_count as i64;
    if chi_y % 2 != 0 || chi_y > 2 {
        return Err(CurveError::Invariant(format!("χ(Y) = {chi_y} is not the Euler characteristic of a closed surface")));
    }
    Ok(CoverData {
        singular_points: sing.to_vec(),
        base_places: base,
        ramification_points: ramified,
        ramification_count: ram_count,
        genus_x,
        chi_x,
        chi_y,
        genus_y: (2 - chi_y) / 2,
        places,
        order,
    })
}
