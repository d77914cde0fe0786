//! The twisted chain complex of the presentation 2-complex and the Cayley
//! formula.
//!
//! At a point of `Y`, `ρ` is a representation over a number field and
//! `Φ(g) = T^{φ(g)}·Ad ρ(g)` twists `sl₂` (basis `E, F, H`) by the
//! abelianization. The complex `C₂ → C₁ → C₀` of dimensions `3, 6, 3` has
//! boundaries built from Fox derivatives and `Φ(gᵢ) − I`; it is acyclic over
//! `Q(T)`, and its Cayley torsion is `Δ(T) = det Φ(∂r/∂g₀)/det(Φ(g₁) − I)`.
//! At `T = 1` the complex has `H₁ ≅ H₂ ≅ k`, and the torsion relative to the
//! longitude is the limit `Δ(T)/(T − 1)` as `T → 1`.

use crate::error::{Result, TorsionError};
use crate::form::TorsionForm;
use algebra_core::{Matrix, Poly, Scalar, UPoly};
use character_variety::rep::T as TREFOIL_T;
use character_variety::symmetrize::{ALPHA, X, Y};
use character_variety::{build_taut_rep, eigenvalue_function, irreducibility_witness, AugmentedCurve, FfElem, TautRep};
use curve_geometry::field;
use knot_model::{fox_derivative, GroupPresentation, GroupRingElement, KnotRecord, Template, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Twist variable.
pub const TWIST: &str = "T";

/// A point of `Y` with rational eigenvalue `α`: `x = α + α⁻¹` and `y` a root
/// of one factor of `P(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    pub alpha: Scalar,
    pub x: Scalar,
    pub y: Scalar,
    /// Minimal polynomial of `y` when it is irrational.
    pub minpoly: Option<String>,
}

impl SamplePoint {
    fn coords(&self) -> [(&'static str, Scalar); 2] {
        [(X, self.x.clone()), (Y, self.y.clone())]
    }
}

/// Torsion of an acyclic complex with standard bases, by the Cayley formula:
/// `ds[i]` is `dᵢ₊₁: Cᵢ₊₁ → Cᵢ` as a `dim Cᵢ × dim Cᵢ₊₁` matrix, and the result
/// is `Π det(dᵢ restricted)^{(−1)^{i+1}}`, up to sign.
pub fn cayley_torsion(ds: &[Matrix<Scalar>]) -> Result<Scalar> {
    let not_exact = || TorsionError::Invariant("complex is not acyclic".into());
    // Rows of C_i not yet hit by the chosen columns of d_i.
    let mut rows: Vec<usize> = (0..ds.first().map_or(0, |d| d.rows())).collect();
    let mut tor = Scalar::one();
    for (i, d) in ds.iter().enumerate() {
        if i + 1 < ds.len() && !d.mul(&ds[i + 1]).is_zero() {
            return Err(TorsionError::Invariant(format!("d{} ∘ d{} ≠ 0", i + 1, i + 2)));
        }
        let mut cols = vec![];
        for j in 0..d.cols() {
            let mut trial = cols.clone();
            trial.push(j);
            if d.select(&rows, &trial).rank() == trial.len() {
                cols = trial;
            }
            if cols.len() == rows.len() {
                break;
            }
        }
        if cols.len() != rows.len() {
            return Err(not_exact());
        }
        let det = d.select(&rows, &cols).det()?;
        tor = if i % 2 == 0 { &tor * &det } else { &tor * &det.inv()? };
        rows = (0..d.cols()).filter(|j| !cols.contains(j)).collect();
    }
    if !rows.is_empty() {
        return Err(not_exact());
    }
    Ok(tor)
}

/// `Ad g` on `sl₂` in the basis `E, F, H`, coordinates `X ↦ (X₀₁, X₁₀, X₀₀)`.
pub fn adjoint(g: &Matrix<Scalar>, g_inv: &Matrix<Scalar>) -> Matrix<Scalar> {
    let z = Scalar::zero;
    let basis = [
        Matrix::from_rows(vec![vec![z(), Scalar::one()], vec![z(), z()]]),
        Matrix::from_rows(vec![vec![z(), z()], vec![Scalar::one(), z()]]),
        Matrix::from_rows(vec![vec![Scalar::one(), z()], vec![z(), Scalar::int(-1)]]),
    ];
    let mut out = Matrix::zeros(3, 3);
    for (j, b) in basis.iter().enumerate() {
        let c = g.mul(b).mul(g_inv);
        for (i, v) in [c.get(0, 1), c.get(1, 0), c.get(0, 0)].into_iter().enumerate() {
            out.set(i, j, v.clone());
        }
    }
    out
}

fn inverse2(m: &Matrix<Scalar>) -> Matrix<Scalar> {
    Matrix::from_rows(vec![
        vec![m.get(1, 1).clone(), -m.get(0, 1)],
        vec![-m.get(1, 0), m.get(0, 0).clone()],
    ])
}

/// The complex at a point, with entries Laurent polynomials in `T`.
#[derive(Clone, Debug)]
pub struct TwistedComplex {
    /// `d₂: C₂ → C₁`, `6 × 3`: the blocks `Φ(∂r/∂gᵢ)ᵀ`.
    pub d2: Matrix<Poly>,
    /// `d₁: C₁ → C₀`, `3 × 6`: the blocks `(Φ(gᵢ) − I)ᵀ`.
    pub d1: Matrix<Poly>,
}

impl TwistedComplex {
    pub fn at(&self, t: &Scalar) -> Result<(Matrix<Scalar>, Matrix<Scalar>)> {
        let ev = |p: &Poly| -> algebra_core::Result<Scalar> { p.eval_all(&[(TWIST, t.clone())]) };
        Ok((self.d1.try_map(ev)?, self.d2.try_map(ev)?))
    }

    /// `Δ(T)`'s numerator `det Φ(∂r/∂g₀)` and denominator `det(Φ(g₁) − I)`.
    pub fn alexander_ratio(&self) -> (Poly, Poly) {
        let num = self.d2.select(&[0, 1, 2], &[0, 1, 2]).det_leibniz().compact();
        let den = self.d1.select(&[0, 1, 2], &[3, 4, 5]).det_leibniz().compact();
        (num, den)
    }
}

struct PointRep {
    images: [Matrix<Scalar>; 2],
    inverses: [Matrix<Scalar>; 2],
    generators: [char; 2],
}

impl PointRep {
    fn word(&self, w: &Word) -> Matrix<Scalar> {
        let mut m = Matrix::identity(2);
        for &c in w.letters() {
            let i = self.generators.iter().position(|&g| g == c.to_ascii_lowercase()).expect("generator");
            m = m.mul(if c.is_ascii_lowercase() { &self.images[i] } else { &self.inverses[i] });
        }
        m
    }

    /// `Φ(e)` as a matrix of Laurent polynomials in `T`.
    fn phi(&self, e: &GroupRingElement, pres: &GroupPresentation) -> Matrix<Poly> {
        let mut out = Matrix::<Poly>::zeros(3, 3);
        for (w, &c) in e.terms() {
            let g = self.word(w);
            let ad = adjoint(&g, &inverse2(&g));
            let k = pres.phi_word(w) as i32;
            let term = ad.map(|s| Poly::monomial(s * &Scalar::int(c), &[(TWIST, k)]));
            out = out.add(&term);
        }
        out.map(|p| p.compact())
    }
}

fn point_rep(rep: &TautRep, pt: &SamplePoint) -> Result<PointRep> {
    let values: Vec<(&str, Scalar)> = match rep.template() {
        Template::TwoBridge => vec![(ALPHA, pt.alpha.clone()), (Y, pt.y.clone())],
        Template::Trefoil => {
            let j = rep.field().expect("trefoil field").generator();
            vec![(TREFOIL_T, &pt.x * &(&j - &j.pow(2)).inv()?)]
        }
    };
    let ev = |m: &Matrix<Poly>| m.try_map(|p| p.eval_all(&values));
    let images = [ev(rep.generator_image(0))?, ev(rep.generator_image(1))?];
    let inverses = [inverse2(&images[0]), inverse2(&images[1])];
    Ok(PointRep { images, inverses, generators: rep.generators() })
}

/// Builds the complex at a point and checks `d₁∘d₂ = 0` exactly.
pub fn twisted_complex(knot: &KnotRecord, pt: &SamplePoint) -> Result<TwistedComplex> {
    let pres = knot.presentation()?;
    let rep = build_taut_rep(knot)?;
    let pr = point_rep(&rep, pt)?;
    let r = pres.relator();
    let mut d2 = Matrix::<Poly>::zeros(6, 3);
    let mut d1 = Matrix::<Poly>::zeros(3, 6);
    for (b, &g) in rep.generators().iter().enumerate() {
        let fox = pr.phi(&fox_derivative(r, g), &pres).transpose();
        let gen = pr.phi(&GroupRingElement::word(Word::from_letters([g])), &pres);
        let bd = gen.sub(&Matrix::identity(3)).transpose();
        for i in 0..3 {
            for j in 0..3 {
                d2.set(3 * b + i, j, fox.get(i, j).clone());
                d1.set(i, 3 * b + j, bd.get(i, j).clone());
            }
        }
    }
    if !d1.mul(&d2).map(|p| p.compact()).is_zero() {
        return Err(TorsionError::Invariant("d₁ ∘ d₂ ≠ 0 in the twisted complex".into()));
    }
    Ok(TwistedComplex { d2, d1 })
}

/// Homology dimensions `(h₀, h₁, h₂)` of the untwisted complex (`T = 1`).
pub fn homology_dimensions(c: &TwistedComplex) -> Result<(usize, usize, usize)> {
    let (d1, d2) = c.at(&Scalar::one())?;
    let (r1, r2) = (d1.rank(), d2.rank());
    Ok((3 - r1, 6 - r1 - r2, 3 - r2))
}

/// Laurent polynomial in `T` as `(T − 1)^k·q(T)` with `q(1) ≠ 0`; returns
/// `(k, q(1))`.
fn order_at_one(p: &Poly) -> Result<(usize, Scalar)> {
    let low = p.min_degree(TWIST).unwrap_or(0).min(0);
    let mut u: UPoly = p.shift(&[(TWIST, -low)]).to_upoly(TWIST)?;
    if u.is_zero() {
        return Err(TorsionError::BadPoint("determinant vanishes identically in T".into()));
    }
    let lin = UPoly::from_ints(&[-1, 1]);
    let mut k = 0;
    loop {
        let v = u.eval(&Scalar::one());
        if !v.is_zero() {
            return Ok((k, v));
        }
        u = u.div_exact(&lin)?;
        k += 1;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CayleyEvaluation {
    pub alpha: String,
    pub x: String,
    pub y: String,
    pub minpoly: Option<String>,
    /// `lim Δ(T)/(T − 1)`: the torsion relative to the longitude.
    pub tau_longitude: String,
    /// Converted to the record's `μ`.
    pub tau_cayley: String,
    /// `τ_μ` from the form, at the point.
    pub tau_form: String,
    /// Coefficients of `ω` against `dx` from both routes.
    pub coefficient_form: String,
    pub coefficient_cayley: String,
    pub agrees_up_to_sign: bool,
    pub homology: (usize, usize, usize),
}

/// `k` with `Z = ±α^k` on the curve, if any.
fn alpha_exponent(aug: &AugmentedCurve, z: &FfElem, bound: i32) -> Result<Option<i32>> {
    for k in -bound..=bound {
        let ak = FfElem::alpha_pow(k);
        if aug.equal(z, &ak)? || aug.equal(z, &ak.neg())? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// `dlog Z_μ / dlog Z_λ`: 1 when `μ` is the longitude, `k_μ/k_λ` when both
/// eigenvalues are powers of `α`.
pub fn longitude_conversion(knot: &KnotRecord, form: &TorsionForm) -> Result<Scalar> {
    let pres = knot.presentation()?;
    let lambda = knot.longitude_word(&pres)?;
    if lambda == form.mu {
        return Ok(Scalar::one());
    }
    let rep = build_taut_rep(knot)?;
    let aug = AugmentedCurve::new(form.curve.clone());
    let meridian = knot.meridian_word(&pres)?;
    let zl = eigenvalue_function(&aug, &rep, &meridian, &lambda)?;
    let bound = (lambda.len() + form.mu.len()) as i32;
    match (alpha_exponent(&aug, &form.z_mu, bound)?, alpha_exponent(&aug, &zl, bound)?) {
        (Some(km), Some(kl)) if kl != 0 => Ok(Scalar::frac(km as i64, kl as i64)),
        _ => Err(TorsionError::BadPoint(format!(
            "cannot relate dlog Z of {} to the longitude without a common eigenvalue power",
            form.mu
        ))),
    }
}

/// Checks the point against the preconditions of the comparison.
fn check_point(knot: &KnotRecord, form: &TorsionForm, pt: &SamplePoint) -> Result<()> {
    let v = |p: &Poly| p.eval_all(&pt.coords());
    let bad = |why: &str| Err(TorsionError::BadPoint(format!("{why} at x = {}, y = {}", pt.x, pt.y)));
    if !v(&form.curve)?.is_zero() {
        return bad("not on the curve");
    }
    if (&(&pt.x * &pt.x) - &Scalar::int(4)).is_zero() {
        return bad("x² = 4");
    }
    if v(&form.curve.derivative(Y))?.is_zero() {
        return bad("P_y = 0");
    }
    if v(&form.jacobian)?.is_zero() {
        return bad("dY_μ = 0");
    }
    if v(&form.tau_num)?.is_zero() || v(&form.z_mu.b)?.is_zero() || v(&form.z_mu.den)?.is_zero() {
        return bad("τ_μ or Z_μ − Z_μ⁻¹ vanishes");
    }
    let rep = build_taut_rep(knot)?;
    let (_, delta) = irreducibility_witness(&rep, &form.curve)?;
    if v(&delta)?.is_zero() {
        return bad("reducible character");
    }
    Ok(())
}

/// The torsion at a point by the Cayley formula on the twisted complex,
/// compared with the form: returns the evaluation record.
pub fn torsion_via_cayley(knot: &KnotRecord, form: &TorsionForm, pt: &SamplePoint) -> Result<CayleyEvaluation> {
    check_point(knot, form, pt)?;
    let complex = twisted_complex(knot, pt)?;
    let homology = homology_dimensions(&complex)?;
    if homology != (0, 1, 1) {
        return Err(TorsionError::BadPoint(format!("homology dimensions {homology:?} at x = {}", pt.x)));
    }
    let (num, den) = complex.alexander_ratio();
    // The Cayley formula at a generic T agrees with the determinant ratio.
    let t0 = Scalar::int(3);
    let (d1, d2) = complex.at(&t0)?;
    let cay = cayley_torsion(&[d1, d2])?;
    let ratio = &den.eval_all(&[(TWIST, t0.clone())])? * &num.eval_all(&[(TWIST, t0)])?.inv()?;
    if cay != ratio && cay != -&ratio {
        return Err(TorsionError::Invariant("Cayley torsion differs from the determinant ratio".into()));
    }
    let (kn, vn) = order_at_one(&num)?;
    let (kd, vd) = order_at_one(&den)?;
    if kn != kd + 1 {
        return Err(TorsionError::BadPoint(format!("Δ(T) has order {} at T = 1", kn as i64 - kd as i64)));
    }
    let tau_l = &vn * &vd.inv()?;
    let tau_c = &tau_l * &longitude_conversion(knot, form)?;
    let at = |p: &Poly| p.eval_all(&pt.coords());
    let tau_f = &at(&form.tau_num)? * &at(&form.tau_den)?.inv()?;
    let c = form.coefficient();
    let root = &(&pt.alpha * &Scalar::int(2)) - &pt.x;
    let base = &at(&c.denominator)? * &root;
    let coef_form = &at(&c.numerator)? * &base.inv()?;
    let coef_cayley = &coef_form * &(&tau_f * &tau_c.inv()?);
    Ok(CayleyEvaluation {
        alpha: pt.alpha.to_string(),
        x: pt.x.to_string(),
        y: pt.y.to_string(),
        minpoly: pt.minpoly.clone(),
        tau_longitude: tau_l.to_string(),
        tau_cayley: tau_c.to_string(),
        tau_form: tau_f.to_string(),
        coefficient_form: coef_form.to_string(),
        coefficient_cayley: coef_cayley.to_string(),
        agrees_up_to_sign: tau_c == tau_f || tau_c == -&tau_f,
        homology,
    })
}

/// A point over `α = α₀`, taking `y` from the `choice`-th rational factor of
/// `P(α₀ + α₀⁻¹, y)`.
pub fn point_over(form: &TorsionForm, alpha: &Scalar, choice: usize) -> Result<SamplePoint> {
    let x = alpha + &alpha.inv()?;
    if !form.curve.has_var(Y) {
        return Err(TorsionError::BadPoint("curve without y".into()));
    }
    let fibre = form.curve.eval(X, &x)?.to_upoly(Y)?;
    let factors = field::factor_over(&fibre, &None)?;
    if factors.is_empty() {
        return Err(TorsionError::BadPoint(format!("no points over x = {x}")));
    }
    let h = &factors[choice % factors.len()];
    let (y, k) = field::adjoin_root(h, &None)?;
    Ok(SamplePoint { alpha: alpha.clone(), x, y, minpoly: field::minpoly_string(&k) })
}

/// Seeded sample points satisfying the comparison's preconditions.
pub fn sample_points(knot: &KnotRecord, form: &TorsionForm, rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<SamplePoint>> {
    let mut out: Vec<SamplePoint> = vec![];
    for _ in 0..50 * count.max(1) {
        if out.len() == count {
            break;
        }
        let (n, d): (i64, i64) = (rng.gen_range(2..=9), rng.gen_range(1..=4));
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let alpha = Scalar::frac(sign * n, d);
        if (&alpha * &alpha).is_one() {
            continue;
        }
        let pt = point_over(form, &alpha, rng.gen_range(0..4usize))?;
        if out.iter().any(|p| p.x == pt.x && p.y == pt.y) {
            continue;
        }
        if check_point(knot, form, &pt).is_ok() && twisted_complex(knot, &pt).is_ok() {
            out.push(pt);
        }
    }
    if out.len() < count {
        return Err(TorsionError::BadPoint(format!("found only {} admissible sample points", out.len())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Scalar::int(v)).collect()).collect())
    }

    #[test]
    fn identity_complex_has_torsion_one() {
        assert!(cayley_torsion(&[Matrix::identity(3)]).unwrap().is_one());
    }

    #[test]
    fn single_isomorphism_gives_its_determinant() {
        let d = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(cayley_torsion(&[d]).unwrap(), Scalar::int(5));
    }

    #[test]
    fn three_term_complex() {
        // 0 → Q → Q² → Q → 0 with d2 = (1, 1)ᵀ and d1 = (2, −2).
        let d1 = m(&[&[2, -2]]);
        let d2 = m(&[&[1], &[1]]);
        assert_eq!(cayley_torsion(&[d1, d2]).unwrap(), Scalar::int(2));
    }

    #[test]
    fn non_exact_complexes_are_rejected() {
        let d1 = m(&[&[1, 0]]);
        let d2 = m(&[&[1], &[0]]);
        assert!(cayley_torsion(&[d1, d2]).is_err());
        assert!(cayley_torsion(&[m(&[&[1, 2], &[2, 4]])]).is_err());
    }

    #[test]
    fn adjoint_is_multiplicative() {
        let g = m(&[&[2, 1], &[3, 2]]);
        let h = m(&[&[1, 4], &[0, 1]]);
        let (gi, hi) = (inverse2(&g), inverse2(&h));
        let gh = g.mul(&h);
        let ghi = hi.mul(&gi);
        assert_eq!(adjoint(&gh, &ghi), adjoint(&g, &gi).mul(&adjoint(&h, &hi)));
        assert!(adjoint(&m(&[&[1, 0], &[0, 1]]), &m(&[&[1, 0], &[0, 1]])).sub(&Matrix::identity(3)).is_zero());
    }
}
