//! Singular points, Milnor numbers, δ-invariants and the genus.

use crate::curve::{Center, Chart, PlaneCurve, X, Y};
use crate::error::{CurveError, Result};
use crate::field;
use crate::puiseux::{local_branches, LocalBranch, LX, LY};
use algebra_core::gcd::content_in;
use algebra_core::{resultant, Poly, Scalar, Series, UPoly};
use serde::Serialize;

/// Truncation orders tried, in turn, when a valuation is not yet visible.
pub const ORDERS: [i64; 5] = [12, 24, 48, 96, 192];

#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub center: Center,
    pub multiplicity: usize,
    pub milnor: i64,
    pub branches: usize,
    pub delta: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularPointReport {
    pub center: String,
    pub conjugates: usize,
    pub multiplicity: usize,
    pub milnor: i64,
    pub branches: usize,
    pub delta: i64,
}

impl SingularPoint {
    pub fn report(&self) -> SingularPointReport {
        SingularPointReport {
            center: self.center.to_string(),
            conjugates: self.center.conjugates(),
            multiplicity: self.multiplicity,
            milnor: self.milnor,
            branches: self.branches,
            delta: self.delta,
        }
    }
}

/// Runs `f` at increasing truncation orders until precision suffices.
pub fn with_precision<T>(f: impl Fn(i64) -> Result<T>) -> Result<T> {
    with_precision_from(0, f)
}

/// As [`with_precision`], skipping orders below `min`.
pub fn with_precision_from<T>(min: i64, f: impl Fn(i64) -> Result<T>) -> Result<T> {
    let mut need = min;
    for order in ORDERS {
        if order < need {
            continue;
        }
        match f(order) {
            Err(CurveError::InsufficientPrecision(n)) => need = n,
            Err(CurveError::Algebra(algebra_core::AlgebraError::InsufficientPrecision { required })) => {
                need = required
            }
            r => return r,
        }
    }
    Err(CurveError::InsufficientPrecision(need.max(2 * ORDERS[ORDERS.len() - 1])))
}

/// Order of vanishing of `g` at the origin.
pub fn multiplicity(g: &Poly) -> usize {
    g.terms().map(|(m, _)| m.iter().sum::<i32>()).min().unwrap_or(0).max(0) as usize
}

/// Branches at a center, in its chart.
pub struct LocalData {
    pub chart: Chart,
    pub branches: Vec<LocalBranch>,
}

impl LocalData {
    pub fn new(curve: &PlaneCurve, c: &Center, order: i64) -> Result<LocalData> {
        let chart = curve.chart(c)?;
        let branches = local_branches(&chart.g, &c.field, order)?;
        Ok(LocalData { chart, branches })
    }

    /// Geometric branches through one of the conjugate points.
    pub fn branch_count(&self) -> usize {
        self.branches.iter().map(|b| b.degree()).sum::<usize>() / self.chart.center.conjugates()
    }

    /// Local intersection multiplicity of the curve with `h(X, Y) = 0`.
    pub fn intersection(&self, h: &Poly) -> Result<i64> {
        let conj = self.chart.center.conjugates();
        let mut total = 0;
        for b in &self.branches {
            let v = valuation_on(h, b)?;
            total += v * (b.degree() / conj) as i64;
        }
        Ok(total)
    }
}

/// `v_T(h(X(T), Y(T)))` on a branch.
pub fn valuation_on(h: &Poly, b: &LocalBranch) -> Result<i64> {
    let s: Series = h.eval_series(&[(LX, &b.x), (LY, &b.y)])?;
    if s.is_zero() {
        return Err(CurveError::NonIsolated(format!("{h} contains a branch")));
    }
    if s.is_indistinguishable_from_zero() {
        return Err(CurveError::InsufficientPrecision(s.prec().unwrap_or(0) + 1));
    }
    Ok(s.valuation()?)
}

/// `μ` through Teissier's lemma `I(g, ∂g/∂Y') = μ + I(g, X') − 1` in
/// coordinates `X' = X − cY`, `Y' = Y` with `X'` not a component.
pub fn milnor_from(local: &LocalData) -> Result<i64> {
    let g = &local.chart.g;
    let (gx, gy) = (g.derivative(LX), g.derivative(LY));
    for c in [0i64, 1, -1, 2, -2, 3] {
        let c = Scalar::int(c);
        let l = Poly::var(LX).sub(&Poly::var(LY).scale(&c));
        if local.branches.iter().any(|b| b.x.sub(&b.y.scale(&c)).is_zero()) {
            continue;
        }
        let d = gx.scale(&c).add(&gy);
        return Ok(local.intersection(&d)? - local.intersection(&l)? + 1);
    }
    Err(CurveError::NonIsolated(local.chart.center.to_string()))
}

fn analyze(curve: &PlaneCurve, c: &Center) -> Result<SingularPoint> {
    with_precision(|order| {
        let local = LocalData::new(curve, c, order)?;
        let multiplicity = multiplicity(&local.chart.g);
        let milnor = milnor_from(&local)?;
        let r = local.branch_count();
        if milnor < 1 || (milnor + r as i64 - 1) % 2 != 0 {
            return Err(CurveError::DeltaParity { point: c.to_string(), mu: milnor, r });
        }
        Ok(SingularPoint { center: c.clone(), multiplicity, milnor, branches: r, delta: (milnor + r as i64 - 1) / 2 })
    })
}

pub fn milnor_number(curve: &PlaneCurve, c: &Center) -> Result<i64> {
    Ok(analyze(curve, c)?.milnor)
}

pub fn delta_invariant(curve: &PlaneCurve, c: &Center) -> Result<i64> {
    Ok(analyze(curve, c)?.delta)
}

/// Whether the center is a singular point of the projective curve.
pub fn is_singular(curve: &PlaneCurve, c: &Center) -> Result<bool> {
    Ok(multiplicity(&curve.chart(c)?.g) >= 2)
}

/// Affine singular points: `x`-coordinates from `Res_y(P, P_y)` (and the
/// content of `P` in `y`), then `y` from the gcd of `P`, `P_x`, `P_y`.
pub fn affine_singular_centers(curve: &PlaneCurve) -> Result<Vec<Center>> {
    let p = curve.poly();
    if !p.has_var(Y) {
        return Ok(vec![]);
    }
    let content = content_in(p, Y);
    let pp = p.div_exact(&content)?;
    let mut cand = resultant(&pp, &pp.derivative(Y), Y)?.mul(&content);
    if cand.is_zero() {
        return Err(CurveError::BadCurve(p.to_string()));
    }
    cand = cand.compact();
    if !cand.has_var(X) {
        return Ok(vec![]);
    }
    let (px, py) = (p.derivative(X), p.derivative(Y));
    let mut out = vec![];
    for (x0, k) in field::roots(&cand.to_upoly(X)?, &None)? {
        let mut h = UPoly::zero();
        for q in [p, &px, &py] {
            let u = q.eval(X, &x0)?.to_upoly(Y)?;
            h = h.gcd(&u);
        }
        if h.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (y0, k1) in field::roots(&h, &k)? {
            out.push(Center::affine(x0.clone(), y0, k1));
        }
    }
    out.sort();
    Ok(out)
}

/// All singular points, affine first, then at infinity.
pub fn singular_points(curve: &PlaneCurve) -> Result<Vec<SingularPoint>> {
    let mut centers = affine_singular_centers(curve)?;
    for c in curve.points_at_infinity()? {
        if is_singular(curve, &c)? {
            centers.push(c);
        }
    }
    centers.iter().map(|c| analyze(curve, c)).collect()
}

/// Noether–Plücker: `g = (d−1)(d−2)/2 − Σ δ` over all conjugate singular
/// points.
pub fn genus_from(curve: &PlaneCurve, sing: &[SingularPoint]) -> Result<i64> {
    let d = curve.degree() as i64;
    let g = (d - 1) * (d - 2) / 2 - sing.iter().map(|s| s.delta * s.center.conjugates() as i64).sum::<i64>();
    if g < 0 {
        return Err(CurveError::NegativeGenus(g));
    }
    Ok(g)
}

pub fn genus(curve: &PlaneCurve) -> Result<i64> {
    genus_from(curve, &singular_points(curve)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(&Poly::parse(s).unwrap()).unwrap()
    }

    fn origin() -> Center {
        Center::affine(Scalar::zero(), Scalar::zero(), None)
    }

    #[test]
    fn standard_singularities() {
        let node = curve("y^2 - x^2 - x^3");
        let s = analyze(&node, &origin()).unwrap();
        assert_eq!((s.milnor, s.branches, s.delta), (1, 2, 1));
        assert_eq!(milnor_number(&curve("y^2 - x^3"), &origin()).unwrap(), 2);
        let a5 = analyze(&curve("y^2 - x^6"), &origin()).unwrap();
        assert_eq!((a5.milnor, a5.delta), (5, 3));
        assert_eq!(delta_invariant(&curve("y^2 - x^8"), &origin()).unwrap(), 4);
    }

    #[test]
    fn nodal_cubic_is_rational() {
        let c = curve("y^2 - x^2 - x^3");
        let sing = singular_points(&c).unwrap();
        assert_eq!(sing.len(), 1);
        assert_eq!(genus(&c).unwrap(), 0);
        assert_eq!(genus(&curve("y^2 - x^3 - x")).unwrap(), 1);
    }

    #[test]
    fn coordinate_axes_need_a_shear() {
        let c = curve("x*y + x^3");
        let s = analyze(&c, &origin()).unwrap();
        assert_eq!((s.milnor, s.branches, s.delta), (1, 2, 1));
    }
}
