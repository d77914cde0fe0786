//! The defining polynomial of the character variety and its components.

use crate::error::{CharVarError, Result};
use crate::rep::{trace2, TautRep};
use crate::symmetrize::{symmetrize, ALPHA, X, Y};
use crate::trace::{delta_polynomial, trace_of_word, vanishes_mod};
use algebra_core::gcd::{clear_monomials, squarefree_part};
use algebra_core::{factor_rational, Matrix, Poly};
use knot_model::{KnotRecord, Template, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Characters of reducible representations (`Δ_{u,v} ≡ 0`).
    Reducible,
    Irreducible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub poly: Poly,
    pub kind: ComponentKind,
    /// `Δ_{u,v}` reduced modulo the component.
    pub witness: Poly,
}

/// `P(x, y)` with its rational factorization into typed components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurveData {
    pub full: Poly,
    pub components: Vec<Component>,
}

impl PlaneCurveData {
    pub fn irreducible(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.kind == ComponentKind::Irreducible)
    }

    /// The unique irreducible-type component, if there is exactly one.
    pub fn main_component(&self) -> Result<&Poly> {
        let mut it = self.irreducible();
        match (it.next(), it.next()) {
            (Some(c), None) => Ok(&c.poly),
            (None, _) => Err(CharVarError::ReducibleType),
            _ => Err(CharVarError::Unsupported("several irreducible-type components".into())),
        }
    }
}

/// `Tr ρ(r) = 2` on the template, made squarefree, then split by type.
pub fn defining_polynomial(knot: &KnotRecord, rep: &TautRep) -> Result<PlaneCurveData> {
    let m = rep.matrix(knot.presentation()?.relator())?;
    match rep.template() {
        Template::TwoBridge => {
            let tr = symmetrize(&trace2(&m).sub(&Poly::int(2)))?;
            if tr.is_zero() || tr.is_constant() {
                return Err(CharVarError::NoCurve);
            }
            let full = squarefree_part(&tr).normalize_unit();
            let delta = two_bridge_delta();
            let mut components = vec![];
            for (f, _) in factor_rational(&full)? {
                let witness = crate::trace::reduce_mod(&delta, &f)?;
                let kind = if witness.is_zero() { ComponentKind::Reducible } else { ComponentKind::Irreducible };
                if kind == ComponentKind::Irreducible {
                    certify_relation(&m, &f)?;
                }
                components.push(Component { poly: f, kind, witness });
            }
            Ok(PlaneCurveData { full, components })
        }
        Template::Trefoil => {
            // The relation holds identically in t, so the component is the
            // image of t ↦ (Tr ρ(ab⁻¹), Tr ρ(a)) = ((j − j²)t, 0).
            if !m.sub(&Matrix::identity(2)).map(|e| e.compact()).is_zero() {
                return Err(CharVarError::NoCurve);
            }
            let a = Word::parse(&rep.generators()[0].to_string())?;
            let ya = trace_of_word(rep, &a)?.xy;
            let full = Poly::var(Y).sub(&ya).normalize_unit();
            let witness = trefoil_delta(rep)?;
            let kind = if vanishes_mod(&witness, &full)? {
                ComponentKind::Reducible
            } else {
                ComponentKind::Irreducible
            };
            Ok(PlaneCurveData { components: vec![Component { poly: full.clone(), kind, witness }], full })
        }
    }
}

/// `Δ_{u,v}` on the template: `Y_u = Y_v = x`, `Y_uv = y`.
pub fn two_bridge_delta() -> Poly {
    let x = Poly::var(X);
    delta_polynomial(&x, &x, &Poly::var(Y))
}

fn trefoil_delta(rep: &TautRep) -> Result<Poly> {
    let [a, b] = rep.generators();
    let tr = |s: String| -> Result<Poly> { Ok(trace_of_word(rep, &Word::parse(&s)?)?.xy) };
    Ok(delta_polynomial(&tr(a.to_string())?, &tr(b.to_string())?, &tr(format!("{a}{b}"))?))
}

/// Every entry of `ρ(r) − I` vanishes on the component `f(x, y) = 0` with
/// `x = a + a⁻¹`, so the relation holds exactly and not only its trace.
fn certify_relation(m: &Matrix<Poly>, f: &Poly) -> Result<()> {
    let x_of_a = Poly::var(ALPHA).add(&Poly::monomial(algebra_core::Scalar::one(), &[(ALPHA, -1)]));
    let fa = clear_monomials(&f.subs(X, &x_of_a)?);
    let diff = m.sub(&Matrix::identity(2));
    for i in 0..2 {
        for j in 0..2 {
            let e = clear_monomials(diff.get(i, j));
            if e.is_zero() {
                continue;
            }
            if e.div_exact(&fa).is_err() {
                return Err(CharVarError::Mismatch(format!("relator entry ({i},{j}) does not vanish on {f}")));
            }
        }
    }
    Ok(())
}

/// Witness pair and `Δ` modulo the component; errors on reducible type.
pub fn irreducibility_witness(rep: &TautRep, component: &Poly) -> Result<((Word, Word), Poly)> {
    let [a, b] = rep.generators();
    let delta = match rep.template() {
        Template::TwoBridge => two_bridge_delta(),
        Template::Trefoil => trefoil_delta(rep)?,
    };
    let reduced = crate::trace::reduce_mod(&delta, component)?;
    if reduced.is_zero() {
        return Err(CharVarError::ReducibleType);
    }
    Ok(((Word::parse(&a.to_string())?, Word::parse(&b.to_string())?), delta))
}

/// Compares a computed polynomial with a pinned one up to a rational unit.
pub fn equal_up_to_unit(a: &Poly, b: &Poly) -> bool {
    a.normalize_unit() == b.normalize_unit()
}

/// Checks the pinned `P` against the computed curve: either the full product
/// or the irreducible-type part must match.
pub fn check_pinned(data: &PlaneCurveData, pinned: &Poly) -> Result<()> {
    if equal_up_to_unit(&data.full, pinned) {
        return Ok(());
    }
    let irr = data.irreducible().fold(Poly::one(), |acc, c| acc.mul(&c.poly));
    if equal_up_to_unit(&irr, pinned) {
        return Ok(());
    }
    Err(CharVarError::Mismatch(format!("computed {} but pinned {}", data.full, pinned)))
}
