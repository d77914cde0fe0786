//! The torsion form `ω = (2/τ_μ)·dY_μ/(Z_μ − Z_μ⁻¹)` on the augmented curve.
//!
//! With `Z_μ = (a + bα)/e`, the conjugate is `Z_μ⁻¹ = (a + b(x − α))/e`, so
//! `Z_μ − Z_μ⁻¹ = b(2α − x)/e`, and on the curve `dY_μ = (J/P_y)·dx` with
//! `J = ∂_xY_μ·P_y − ∂_yY_μ·P_x`. Hence `ω = h·dx` with
//!
//! ```text
//! h = 2·J·e·τ_den / (τ_num·b·P_y·(2α − x)).
//! ```

use crate::error::{Result, TorsionError};
use algebra_core::{Poly, Scalar};
use character_variety::symmetrize::{X, Y};
use character_variety::trace::{agrees_mod, vanishes_mod};
use character_variety::variety::check_pinned;
use character_variety::{build_taut_rep, defining_polynomial, eigenvalue_function, trace_of_word, AugmentedCurve, FfElem};
use knot_model::{KnotRecord, TauOrientation, Word};
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct TorsionForm {
    pub knot: String,
    /// The irreducible-type component `P(x, y)`.
    pub curve: Poly,
    pub mu: Word,
    pub y_mu: Poly,
    pub z_mu: FfElem,
    /// `τ_μ = tau_num/tau_den` as it enters the form.
    pub tau_num: Poly,
    pub tau_den: Poly,
    pub orientation: TauOrientation,
    pub jacobian: Poly,
    pub provenance: String,
}

/// `ω = (numerator / (denominator · (2α − x)))·dx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient {
    pub numerator: Poly,
    pub denominator: Poly,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormReport {
    pub knot: String,
    pub mu: String,
    pub curve: String,
    pub y_mu: String,
    pub tau: String,
    pub tau_printed: String,
    pub orientation: String,
    pub coefficient: String,
    pub provenance: String,
}

fn p(s: &str) -> Poly {
    Poly::var(s)
}

impl TorsionForm {
    /// `2·J·e·τ_den` over `τ_num·b·P_y`; the factor `2α − x` stays implicit.
    pub fn coefficient(&self) -> Coefficient {
        let numerator = self.jacobian.mul(&self.z_mu.den).mul(&self.tau_den).scale(&Scalar::int(2));
        let denominator = self.tau_num.mul(&self.z_mu.b).mul(&self.curve.derivative(Y));
        Coefficient { numerator: numerator.compact(), denominator: denominator.compact() }
    }

    /// The printed convention: `τ_μ` itself, or its reciprocal.
    pub fn printed_tau(&self) -> String {
        match self.orientation {
            TauOrientation::Tau => format!("{}", self.tau_num),
            TauOrientation::Inverse => format!("1/({})", self.tau_num),
        }
    }

    pub fn report(&self) -> FormReport {
        let c = self.coefficient();
        FormReport {
            knot: self.knot.clone(),
            mu: self.mu.to_string(),
            curve: self.curve.to_string(),
            y_mu: self.y_mu.to_string(),
            tau: self.tau_num.to_string(),
            tau_printed: self.printed_tau(),
            orientation: match self.orientation {
                TauOrientation::Tau => "tau".into(),
                TauOrientation::Inverse => "inverse".into(),
            },
            coefficient: format!("({}) / (({})·(2α − x))", c.numerator, c.denominator),
            provenance: self.provenance.clone(),
        }
    }
}

/// `P_x`-free form of `dY/dx` on the curve: `J = Y_x·P_y − Y_y·P_x`.
pub fn jacobian(y_mu: &Poly, curve: &Poly) -> Poly {
    y_mu.derivative(X).mul(&curve.derivative(Y)).sub(&y_mu.derivative(Y).mul(&curve.derivative(X))).compact()
}

/// Builds `ω` for the record's `μ`, after checking the pinned `P` and `Y_μ`
/// against the computed ones.
pub fn assemble_torsion_form(knot: &KnotRecord) -> Result<TorsionForm> {
    let pres = knot.presentation()?;
    let mu = knot.mu_word(&pres)?;
    assemble_for_word(knot, &mu)
}

pub fn assemble_for_word(knot: &KnotRecord, mu: &Word) -> Result<TorsionForm> {
    let pres = knot.presentation()?;
    let rep = build_taut_rep(knot)?;
    let data = defining_polynomial(knot, &rep)?;
    check_pinned(&data, &knot.polynomial_p())?;
    let curve = data.main_component()?.clone();
    let tau = knot.tau();
    if tau.is_zero() {
        return Err(TorsionError::MissingTau);
    }
    let y_mu = trace_of_word(&rep, mu)?.xy;
    if !agrees_mod(&y_mu, &knot.y_mu_poly(), &curve)? {
        return Err(TorsionError::Invariant(format!("pinned Y_μ disagrees with the trace of {mu}")));
    }
    let aug = AugmentedCurve::new(curve.clone());
    let meridian = knot.meridian_word(&pres)?;
    let z = eigenvalue_function(&aug, &rep, &meridian, mu)?;
    if vanishes_mod(&z.b, &curve)? {
        return Err(TorsionError::Central);
    }
    check_eigenvalue(&z, &y_mu, &curve)?;
    let jacobian = jacobian(&y_mu, &curve);
    if vanishes_mod(&jacobian, &curve)? {
        return Err(TorsionError::Invariant("Y_μ is constant on the curve".into()));
    }
    let source = knot.tau_source.as_deref().unwrap_or("printed");
    Ok(TorsionForm {
        knot: knot.name.clone(),
        curve,
        mu: mu.clone(),
        y_mu,
        z_mu: z,
        tau_num: tau,
        tau_den: Poly::one(),
        orientation: knot.tau_orientation,
        jacobian,
        provenance: format!("(2/τ_μ)·dY_μ/(Z_μ − Z_μ⁻¹), μ = {mu}, τ_μ {source}"),
    })
}

/// `Z + Z⁻¹ = Y_μ`, `Z·Z⁻¹ = 1` and `(Z − Z⁻¹)² = Y_μ² − 4` on the curve.
fn check_eigenvalue(z: &FfElem, y_mu: &Poly, curve: &Poly) -> Result<()> {
    let (tr, den) = z.trace();
    let fail = |what: &str| Err(TorsionError::Invariant(format!("Z_μ fails {what} on the curve")));
    if !agrees_mod(&tr, &y_mu.mul(&den), curve)? {
        return fail("Z + Z⁻¹ = Y_μ");
    }
    if !agrees_mod(&z.norm_numerator(), &den.pow(2), curve)? {
        return fail("Z·Z⁻¹ = 1");
    }
    let lhs = z.b.pow(2).mul(&p(X).pow(2).sub(&Poly::int(4)));
    let rhs = y_mu.pow(2).sub(&Poly::int(4)).mul(&den.pow(2));
    if !agrees_mod(&lhs, &rhs, curve)? {
        return fail("(Z − Z⁻¹)² = Y² − 4");
    }
    Ok(())
}
