//! Rational Newton–Puiseux expansions (Duval's variant) of the branches of
//! `f(X, Y) = 0` through the origin.
//!
//! Each edge of slope `m/q` and root `ξ` of its edge polynomial gives the
//! substitution `X = ξ^v X₁^q`, `Y = X₁^m (ξ^u + Y₁)` with `uq − vm = 1`, so
//! coefficients stay in `k(ξ)` and no `q`-th roots are ever taken. The
//! resulting parametrizations are primitive and `X(T)` is an exact monomial.

use crate::error::{CurveError, Result};
use crate::field::{self, Field};
use algebra_core::{Poly, Scalar, Series, UPoly};
use num_integer::Integer;
use std::collections::BTreeMap;

pub const LX: &str = "X";
pub const LY: &str = "Y";

/// One branch, standing for `degree(field)` conjugate geometric branches.
#[derive(Clone, Debug)]
pub struct LocalBranch {
    pub x: Series,
    pub y: Series,
    pub field: Field,
}

impl LocalBranch {
    pub fn degree(&self) -> usize {
        field::degree(&self.field)
    }
}

/// All branches of `f` through the origin, with `Y(T)` known to `O(T^order)`
/// at least. `f` is a polynomial in `X`, `Y` with coefficients in `k`,
/// squarefree, vanishing at the origin.
pub fn local_branches(f: &Poly, k: &Field, order: i64) -> Result<Vec<LocalBranch>> {
    if !f.constant_term().is_zero() {
        return Err(CurveError::NotOnCurve("origin".into()));
    }
    let mut f = f.clone();
    let mut out = vec![];
    // A vertical component X = 0 is invisible to the Newton polygon.
    if f.eval(LX, &Scalar::zero())?.is_zero() {
        out.push(LocalBranch { x: Series::exact([]), y: Series::t(), field: k.clone() });
        f = f.div_exact(&Poly::var(LX))?;
        if !f.eval(LX, &Scalar::zero())?.eval(LY, &Scalar::zero())?.is_zero() {
            return Ok(out);
        }
    }
    out.extend(expand(&f, k, order.max(1))?);
    Ok(out)
}

/// `(b, a) ↦ c` for the terms `c X^a Y^b`.
fn support(f: &Poly) -> BTreeMap<(i32, i32), Scalar> {
    let mut out = BTreeMap::new();
    for (b, pb) in f.coeffs_in(LY) {
        for (a, pa) in pb.coeffs_in(LX) {
            let c = pa.as_scalar().expect("bivariate");
            if !c.is_zero() {
                out.insert((b, a), c);
            }
        }
    }
    out
}

fn expand(f: &Poly, k: &Field, order: i64) -> Result<Vec<LocalBranch>> {
    let mut f = f.clone();
    let mut out = vec![];
    if f.eval(LY, &Scalar::zero())?.is_zero() {
        out.push(LocalBranch { x: Series::t(), y: Series::exact([]), field: k.clone() });
        f = f.div_exact(&Poly::var(LY))?;
    }
    let sup = support(&f);
    // r = ord_Y f(0, Y): number of roots Y(X) → 0.
    let r = sup.keys().filter(|(_, a)| *a == 0).map(|(b, _)| *b).min();
    let Some(r) = r else {
        return Err(CurveError::NonIsolated("X = 0 is a component".into()));
    };
    if r == 0 {
        return Ok(out);
    }
    if r == 1 {
        out.push(LocalBranch { x: Series::t(), y: smooth_solve(&f, order)?, field: k.clone() });
        return Ok(out);
    }
    for edge in lower_edges(&sup, r) {
        out.extend(expand_edge(&f, &sup, &edge, k, order)?);
    }
    Ok(out)
}

/// Lower-left Newton polygon edges from `(r, 0)` leftwards, as `(b1, a1, b2, a2)`
/// with `b1 < b2`.
fn lower_edges(sup: &BTreeMap<(i32, i32), Scalar>, r: i32) -> Vec<(i32, i32, i32, i32)> {
    let mut lowest: BTreeMap<i32, i32> = BTreeMap::new();
    for &(b, a) in sup.keys() {
        if b <= r {
            let e = lowest.entry(b).or_insert(a);
            *e = (*e).min(a);
        }
    }
    let bmin = *lowest.keys().next().unwrap();
    let (mut bc, mut ac) = (r, 0);
    let mut edges = vec![];
    while bc > bmin {
        // Smallest slope (a − ac)/(bc − b); ties go to the farthest point.
        let mut best: Option<(i32, i32)> = None;
        for (&b, &a) in lowest.range(..bc) {
            best = match best {
                None => Some((b, a)),
                Some((bb, ab)) => {
                    let lhs = (a - ac) as i64 * (bc - bb) as i64;
                    let rhs = (ab - ac) as i64 * (bc - b) as i64;
                    if lhs < rhs || (lhs == rhs && b < bb) {
                        Some((b, a))
                    } else {
                        Some((bb, ab))
                    }
                }
            };
        }
        let (b, a) = best.unwrap();
        edges.push((b, a, bc, ac));
        bc = b;
        ac = a;
    }
    edges
}

fn expand_edge(
    f: &Poly,
    sup: &BTreeMap<(i32, i32), Scalar>,
    &(b1, a1, b2, a2): &(i32, i32, i32, i32),
    k: &Field,
    order: i64,
) -> Result<Vec<LocalBranch>> {
    let g = (a1 - a2).gcd(&(b2 - b1));
    let (m, q) = ((a1 - a2) / g, (b2 - b1) / g);
    // v ≡ −m⁻¹ (mod q), u = (1 + vm)/q.
    let v = (0..q).find(|v| (1 + v * m) % q == 0).unwrap();
    let u = (1 + v * m) / q;
    let l = q * a1 + m * b1;
    let mut phi = vec![Scalar::zero(); ((b2 - b1) / q + 1) as usize];
    for (&(b, a), c) in sup {
        if q * a + m * b == l {
            phi[((b - b1) / q) as usize] = c.clone();
        }
    }
    let mut out = vec![];
    for (xi, k1) in field::roots(&UPoly::new(phi), k)? {
        let f1 = transform(f, &xi, m, q, u, v, l)?;
        let xv = xi.powi(v as i64)?;
        let xu = xi.powi(u as i64)?;
        for br in expand(&f1, &k1, order)? {
            // X = ξ^v X₁^q exactly; Y = X₁^m (ξ^u + Y₁).
            let x = br.x.pow(q as u32).scale(&xv);
            let y = br.x.pow(m as u32).mul(&br.y.add(&Series::constant(xu.clone())));
            out.push(LocalBranch { x, y, field: br.field });
        }
    }
    Ok(out)
}

/// `f(ξ^v X^q, X^m (ξ^u + Y)) / X^l`.
fn transform(f: &Poly, xi: &Scalar, m: i32, q: i32, u: i32, v: i32, l: i32) -> Result<Poly> {
    let shifted = Poly::constant(xi.powi(u as i64)?).add(&Poly::var(LY));
    let mut pows: BTreeMap<i32, Poly> = BTreeMap::new();
    let mut out = Poly::zero();
    for ((b, a), c) in support(f) {
        let pb = pows.entry(b).or_insert_with(|| shifted.pow(b as u32)).clone();
        let c = &c * &xi.powi((v * a) as i64)?;
        out = out.add(&pb.mul(&Poly::monomial(c, &[(LX, q * a + m * b - l)])));
    }
    Ok(out.compact())
}

/// `Y(T)` with `f(T, Y(T)) = 0`, `Y(0) = 0`, for `∂f/∂Y(0,0) ≠ 0`, by Newton
/// iteration with doubling precision.
fn smooth_solve(f: &Poly, order: i64) -> Result<Series> {
    let fy = f.derivative(LY);
    let t = Series::t();
    let mut y = Series::big_o(1);
    let mut p = 1;
    while p < order {
        p = (2 * p).min(order);
        let yp = Series::new(y.terms().map(|(&e, c)| (e, c.clone())), Some(p));
        let num = f.eval_series(&[(LX, &t), (LY, &yp)])?.truncate(p);
        let den = fy.eval_series(&[(LX, &t), (LY, &yp)])?.truncate(p);
        y = yp.sub(&num.div(&den)?).truncate(p);
    }
    Ok(y)
}

/// Whether the parametrization is not a power substitution: the exponents of
/// all non-constant known terms have gcd one.
pub fn is_primitive(x: &Series, y: &Series) -> bool {
    let mut g = 0i64;
    for s in [x, y] {
        for (&e, _) in s.terms() {
            if e != 0 {
                g = g.gcd(&e);
            }
        }
    }
    g == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn residual_vanishes(f: &Poly, b: &LocalBranch) -> bool {
        f.eval_series(&[(LX, &b.x), (LY, &b.y)]).unwrap().is_indistinguishable_from_zero()
    }

    #[test]
    fn node_has_two_rational_branches() {
        let f = p("Y^2 - X^2 - X^3");
        let bs = local_branches(&f, &None, 8).unwrap();
        assert_eq!(bs.len(), 2);
        for b in &bs {
            assert!(residual_vanishes(&f, b));
            assert_eq!(b.y.valuation().unwrap(), 1);
        }
    }

    #[test]
    fn cusp_is_one_ramified_branch() {
        let f = p("Y^2 - X^3");
        let bs = local_branches(&f, &None, 8).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].x, Series::monomial(Scalar::one(), 2));
        assert_eq!(bs[0].y.leading().unwrap(), (3, Scalar::one()));
        assert!(is_primitive(&bs[0].x, &bs[0].y));
    }

    #[test]
    fn conjugate_branches_share_a_field() {
        // Y² = 2X²: tangents Y = ±√2 X form one Galois orbit.
        let f = p("Y^2 - 2*X^2 - X^3");
        let bs = local_branches(&f, &None, 6).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].degree(), 2);
        assert!(residual_vanishes(&f, &bs[0]));
    }

    #[test]
    fn tacnode_branches() {
        let f = p("Y^2 - X^6 - X^7");
        let bs = local_branches(&f, &None, 10).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.y.valuation().unwrap() == 3 && residual_vanishes(&f, b)));
    }

    #[test]
    fn axis_components() {
        let f = p("X*Y");
        let bs = local_branches(&f, &None, 4).unwrap();
        assert_eq!(bs.len(), 2);
    }
}
