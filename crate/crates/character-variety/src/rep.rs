//! Tautological representations.

use crate::error::{CharVarError, Result};
use crate::symmetrize::{ALPHA, Y};
use algebra_core::{Matrix, NumberField, Poly, Scalar};
use knot_model::{GroupPresentation, KnotRecord, Template, Word};
use std::sync::Arc;

/// Parameter of the trefoil family.
pub const T: &str = "t";

/// `ρ` on the two generators, with entries in `Z[a^{±1}][y]` (two-bridge
/// template) or `Q(j)[t]` (trefoil).
#[derive(Clone, Debug)]
pub struct TautRep {
    template: Template,
    generators: [char; 2],
    images: [Matrix<Poly>; 2],
    inverses: [Matrix<Poly>; 2],
    field: Option<Arc<NumberField>>,
}

/// Inverse of a determinant-one 2×2 matrix.
pub fn sl2_inverse(m: &Matrix<Poly>) -> Matrix<Poly> {
    Matrix::from_rows(vec![
        vec![m.get(1, 1).clone(), m.get(0, 1).neg()],
        vec![m.get(1, 0).neg(), m.get(0, 0).clone()],
    ])
}

pub fn det2(m: &Matrix<Poly>) -> Poly {
    m.get(0, 0).mul(m.get(1, 1)).sub(&m.get(0, 1).mul(m.get(1, 0)))
}

pub fn trace2(m: &Matrix<Poly>) -> Poly {
    m.get(0, 0).add(m.get(1, 1))
}

impl TautRep {
    /// `ρ(u) = (a 1; 0 a⁻¹)`, `ρ(v) = (a 0; y − a² − a⁻² a⁻¹)`.
    pub fn two_bridge(generators: [char; 2]) -> TautRep {
        let a = Poly::var(ALPHA);
        let ai = Poly::monomial(Scalar::one(), &[(ALPHA, -1)]);
        let low = Poly::var(Y).sub(&a.pow(2)).sub(&ai.pow(2));
        let u = Matrix::from_rows(vec![vec![a.clone(), Poly::one()], vec![Poly::zero(), ai.clone()]]);
        let v = Matrix::from_rows(vec![vec![a, Poly::zero()], vec![low, ai]]);
        TautRep::from_images(Template::TwoBridge, generators, [u, v], None)
    }

    /// `ρ(a) = (t 1; −(t²+1) −t)`, `ρ(b) = diag(−j, −j²)` over `Q(j)`.
    pub fn trefoil(generators: [char; 2]) -> TautRep {
        let k = NumberField::from_ints(&[1, 1, 1], "j").expect("x^2+x+1 is irreducible");
        let j = k.generator();
        let t = Poly::var(T);
        let a = Matrix::from_rows(vec![
            vec![t.clone(), Poly::one()],
            vec![t.pow(2).add(&Poly::one()).neg(), t.neg()],
        ]);
        let b = Matrix::from_rows(vec![
            vec![Poly::constant(-&j), Poly::zero()],
            vec![Poly::zero(), Poly::constant(-&j.pow(2))],
        ]);
        TautRep::from_images(Template::Trefoil, generators, [a, b], Some(k))
    }

    fn from_images(
        template: Template,
        generators: [char; 2],
        images: [Matrix<Poly>; 2],
        field: Option<Arc<NumberField>>,
    ) -> TautRep {
        let inverses = [sl2_inverse(&images[0]), sl2_inverse(&images[1])];
        TautRep { template, generators, images, inverses, field }
    }

    pub fn template(&self) -> Template {
        self.template
    }

    pub fn generators(&self) -> [char; 2] {
        self.generators
    }

    /// `Q(j)` for the trefoil template.
    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    pub fn generator_image(&self, i: usize) -> &Matrix<Poly> {
        &self.images[i]
    }

    /// `ρ(w)` by direct multiplication.
    pub fn matrix(&self, w: &Word) -> Result<Matrix<Poly>> {
        let mut m = Matrix::<Poly>::identity(2);
        for &c in w.letters() {
            let g = c.to_ascii_lowercase();
            let i = self
                .generators
                .iter()
                .position(|&h| h == g)
                .ok_or_else(|| CharVarError::Unsupported(format!("letter `{c}` is not a generator")))?;
            let f = if c.is_ascii_lowercase() { &self.images[i] } else { &self.inverses[i] };
            m = m.mul(f);
        }
        Ok(m.map(|e| e.compact()))
    }
}

/// Builds the tautological representation for a record.
pub fn build_taut_rep(knot: &KnotRecord) -> Result<TautRep> {
    let pres = knot.presentation()?;
    let gens = generator_pair(&pres)?;
    match knot.template {
        Template::TwoBridge => {
            // Both generators must be meridians: same image under φ.
            if pres.phi(gens[0]) != pres.phi(gens[1]) {
                return Err(CharVarError::Unsupported(
                    "two-bridge template needs conjugate generators".into(),
                ));
            }
            Ok(TautRep::two_bridge(gens))
        }
        Template::Trefoil => {
            if (pres.phi(gens[0]), pres.phi(gens[1])) != (3, 2) {
                return Err(CharVarError::Unsupported("trefoil template needs ⟨a,b | a² = b³⟩".into()));
            }
            Ok(TautRep::trefoil(gens))
        }
    }
}

fn generator_pair(p: &GroupPresentation) -> Result<[char; 2]> {
    match p.generators() {
        [a, b] => Ok([*a, *b]),
        g => Err(CharVarError::Unsupported(format!("{} generators", g.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn template_traces() {
        let r = TautRep::two_bridge(['u', 'v']);
        let uv = r.matrix(&Word::parse("uv").unwrap()).unwrap();
        assert_eq!(trace2(&uv), Poly::var(Y));
        for g in ["u", "v", "uvUUv"] {
            assert_eq!(det2(&r.matrix(&Word::parse(g).unwrap()).unwrap()), Poly::one());
        }
    }

    #[test]
    fn trefoil_relation_holds() {
        let r = TautRep::trefoil(['a', 'b']);
        let a2 = r.matrix(&Word::parse("aa").unwrap()).unwrap();
        let b3 = r.matrix(&Word::parse("bbb").unwrap()).unwrap();
        assert_eq!(a2, b3);
        assert_eq!(det2(r.generator_image(1)), Poly::one());
    }
}
