//! Projective plane curves, centers and local charts.

use crate::error::{CurveError, Result};
use crate::field::{self, Field};
use crate::puiseux::{LX, LY};
use algebra_core::gcd::squarefree_part;
use algebra_core::{Poly, Scalar, Series};
use std::cmp::Ordering;
use std::fmt;

pub const X: &str = "x";
pub const Y: &str = "y";

/// `P(x, y) = 0` with its homogenization `F(X, Y, Z)` of degree `d`.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    p: Poly,
    degree: usize,
    f: Poly,
}

impl PlaneCurve {
    pub fn new(p: &Poly) -> Result<PlaneCurve> {
        let p = p.compact();
        let bad = || CurveError::BadCurve(p.to_string());
        if p.is_constant() || !p.is_polynomial() || p.used_vars().iter().any(|v| v != X && v != Y) {
            return Err(bad());
        }
        if squarefree_part(&p).total_degree() != p.total_degree() {
            return Err(bad());
        }
        let degree = p.total_degree().unwrap() as usize;
        let mut f = Poly::zero();
        for (i, pi) in p.coeffs_in(X) {
            for (j, c) in pi.coeffs_in(Y) {
                let c = c.as_scalar().unwrap();
                let z = degree as i32 - i - j;
                f = f.add(&Poly::monomial(c, &[("X", i), ("Y", j), ("Z", z)]));
            }
        }
        Ok(PlaneCurve { p, degree, f })
    }

    pub fn poly(&self) -> &Poly {
        &self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `F(X, Y, Z)`.
    pub fn homogenization(&self) -> &Poly {
        &self.f
    }

    /// The top-degree form `F(X, Y, 0)`.
    pub fn top_form(&self) -> Poly {
        self.f.eval("Z", &Scalar::zero()).unwrap().compact()
    }

    /// Points at infinity `[1 : m : 0]` (by the roots `m` of `F(1, m, 0)`) and
    /// `[0 : 1 : 0]` when `X` divides the top form.
    pub fn points_at_infinity(&self) -> Result<Vec<Center>> {
        let top = self.top_form();
        let h = top.eval("X", &Scalar::one())?.to_upoly("Y")?;
        let mut out = vec![];
        for (m, k) in field::roots(&h, &None)? {
            out.push(Center::infinity(Scalar::one(), m, k));
        }
        if h.degree().unwrap_or(0) < self.degree {
            out.push(Center::infinity(Scalar::zero(), Scalar::one(), None));
        }
        out.sort();
        Ok(out)
    }

    /// The chart around `c`: a polynomial `g(X, Y)` in local coordinates
    /// vanishing at the origin, and the map back to `(x, y)`.
    pub fn chart(&self, c: &Center) -> Result<Chart> {
        let lx = Poly::var(LX);
        let ly = Poly::var(LY);
        let (g, kind) = match c.kind {
            CenterKind::Affine => {
                let g = self
                    .p
                    .subs(X, &lx.add(&Poly::constant(c.x.clone())))?
                    .subs(Y, &ly.add(&Poly::constant(c.y.clone())))?;
                (g, ChartKind::Affine)
            }
            // [1 : m : 0]: (u, w) = (y/x, 1/x); local X = w, Y = u − m.
            CenterKind::Infinity if !c.x.is_zero() => {
                let g = self
                    .f
                    .eval("X", &Scalar::one())?
                    .subs("Y", &ly.add(&Poly::constant(c.y.clone())))?
                    .subs("Z", &lx)?;
                (g, ChartKind::XInfinite)
            }
            // [0 : 1 : 0]: (s, z) = (x/y, 1/y); local X = s, Y = z.
            CenterKind::Infinity => {
                let g = self.f.eval("Y", &Scalar::one())?.subs("X", &lx)?.subs("Z", &ly)?;
                (g, ChartKind::YInfinite)
            }
        };
        let g = g.compact();
        if !g.constant_term().is_zero() {
            return Err(CurveError::NotOnCurve(c.to_string()));
        }
        Ok(Chart { g, kind, center: c.clone() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CenterKind {
    Affine,
    Infinity,
}

/// An affine point `(x, y)` or a point `[x : y : 0]` at infinity, with
/// coordinates in `field`; stands for `degree(field)` conjugate points.
#[derive(Clone, Debug)]
pub struct Center {
    pub kind: CenterKind,
    pub x: Scalar,
    pub y: Scalar,
    pub field: Field,
}

impl Center {
    pub fn affine(x: Scalar, y: Scalar, field: Field) -> Center {
        Center { kind: CenterKind::Affine, x, y, field }
    }

    pub fn infinity(x: Scalar, y: Scalar, field: Field) -> Center {
        Center { kind: CenterKind::Infinity, x, y, field }
    }

    pub fn is_ideal(&self) -> bool {
        self.kind == CenterKind::Infinity
    }

    pub fn conjugates(&self) -> usize {
        field::degree(&self.field)
    }
}

impl PartialEq for Center {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Center {}
impl PartialOrd for Center {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
/// Affine before infinite; at infinity `[1 : m : 0]` (by `m`) before
/// `[0 : 1 : 0]`.
impl Ord for Center {
    fn cmp(&self, o: &Self) -> Ordering {
        self.kind
            .cmp(&o.kind)
            .then_with(|| match self.kind {
                CenterKind::Affine => self.x.canonical_cmp(&o.x),
                CenterKind::Infinity => o.x.canonical_cmp(&self.x),
            })
            .then_with(|| self.y.canonical_cmp(&o.y))
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CenterKind::Affine => write!(f, "({}, {})", self.x, self.y)?,
            CenterKind::Infinity => write!(f, "[{} : {} : 0]", self.x, self.y)?,
        }
        if let Some(m) = field::minpoly_string(&self.field) {
            write!(f, " over {m} = 0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartKind {
    /// `x = x₀ + X`, `y = y₀ + Y`.
    Affine,
    /// `x = 1/X`, `y = (m + Y)/X`.
    XInfinite,
    /// `x = X/Y`, `y = 1/Y`.
    YInfinite,
}

#[derive(Clone, Debug)]
pub struct Chart {
    pub g: Poly,
    pub kind: ChartKind,
    pub center: Center,
}

impl Chart {
    /// `(x(t), y(t))` from a local parametrization.
    pub fn to_global(&self, lx: &Series, ly: &Series, order: i64) -> Result<(Series, Series)> {
        let c = &self.center;
        let inv = |s: &Series| if s.is_exact() && s.terms().count() > 1 { s.truncate(order).inv() } else { s.inv() };
        Ok(match self.kind {
            ChartKind::Affine => (lx.add(&Series::constant(c.x.clone())), ly.add(&Series::constant(c.y.clone()))),
            ChartKind::XInfinite => {
                let wi = inv(lx)?;
                (wi.clone(), ly.add(&Series::constant(c.y.clone())).mul(&wi))
            }
            ChartKind::YInfinite => {
                let zi = inv(ly)?;
                (lx.mul(&zi), zi)
            }
        })
    }
}
