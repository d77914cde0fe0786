//! Truncated Laurent series in a local parameter `t`.
//!
//! A series is known modulo `t^prec`; `prec == None` marks an exact finite
//! Laurent polynomial. Every operation tracks the absolute precision of its
//! result and refuses to produce a leading term it cannot certify.

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Default absolute truncation order for local expansions.
pub const DEFAULT_ORDER: i64 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    terms: BTreeMap<i64, Scalar>,
    prec: Option<i64>,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, p) | (p, None) => p,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl Series {
    /// Builds a series from `(exponent, coefficient)` pairs, dropping terms at
    /// or beyond `prec`.
    pub fn new(terms: impl IntoIterator<Item = (i64, Scalar)>, prec: Option<i64>) -> Series {
        let mut s = Series { terms: BTreeMap::new(), prec };
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s.clip();
        s
    }

    pub fn exact(terms: impl IntoIterator<Item = (i64, Scalar)>) -> Series {
        Series::new(terms, None)
    }

    /// `O(t^prec)`.
    pub fn big_o(prec: i64) -> Series {
        Series { terms: BTreeMap::new(), prec: Some(prec) }
    }

    pub fn constant(c: Scalar) -> Series {
        Series::exact([(0, c)])
    }

    /// Exact constant; kept for call sites that have a template series.
    pub fn constant_like(_template: Option<&Series>, c: Scalar) -> Series {
        Series::constant(c)
    }

    /// The parameter `t` itself.
    pub fn t() -> Series {
        Series::exact([(1, Scalar::one())])
    }

    /// `c·t^k`, exact.
    pub fn monomial(c: Scalar, k: i64) -> Series {
        Series::exact([(k, c)])
    }

    fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                let s = &*x + &c;
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    fn clip(&mut self) {
        if let Some(p) = self.prec {
            self.terms.retain(|&k, _| k < p);
        }
    }

    pub fn prec(&self) -> Option<i64> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Known terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of `t^k`; errors if `k` lies beyond the truncation.
    pub fn coeff(&self, k: i64) -> Result<Scalar> {
        if let Some(p) = self.prec {
            if k >= p {
                return Err(AlgebraError::InsufficientPrecision { required: k + 1 });
            }
        }
        Ok(self.terms.get(&k).cloned().unwrap_or_else(Scalar::zero))
    }

    /// True only for the exact zero series.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.prec.is_none()
    }

    /// True if no nonzero term is known (exact zero or pure `O(t^p)`).
    pub fn is_indistinguishable_from_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lower bound on the valuation: the first known term, else the precision.
    pub fn val_lower_bound(&self) -> Option<i64> {
        self.terms.keys().next().copied().or(self.prec)
    }

    /// Valuation; fails when no term is known before the truncation.
    pub fn valuation(&self) -> Result<i64> {
        match (self.terms.keys().next(), self.prec) {
            (Some(&k), _) => Ok(k),
            (None, Some(p)) => Err(AlgebraError::InsufficientPrecision { required: p + 1 }),
            (None, None) => Err(AlgebraError::Invalid("valuation of the zero series".into())),
        }
    }

    /// `(valuation, leading coefficient)`.
    pub fn leading(&self) -> Result<(i64, Scalar)> {
        let v = self.valuation()?;
        Ok((v, self.terms[&v].clone()))
    }

    /// Number of certified terms after the leading one (relative precision).
    pub fn relative_prec(&self) -> Option<i64> {
        let v = self.val_lower_bound()?;
        self.prec.map(|p| p - v)
    }

    pub fn truncate(&self, prec: i64) -> Series {
        Series::new(self.terms.clone(), min_prec(self.prec, Some(prec)))
    }

    pub fn add(&self, o: &Series) -> Series {
        let mut out = Series { terms: self.terms.clone(), prec: min_prec(self.prec, o.prec) };
        for (&k, c) in &o.terms {
            out.add_term(k, c.clone());
        }
        out.clip();
        out
    }

    pub fn sub(&self, o: &Series) -> Series {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Series {
        Series { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(), prec: self.prec }
    }

    pub fn scale(&self, s: &Scalar) -> Series {
        if s.is_zero() {
            return Series::exact([]);
        }
        Series { terms: self.terms.iter().map(|(&k, c)| (k, c * s)).collect(), prec: self.prec }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Series {
        Series {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
            prec: self.prec.map(|p| p + k),
        }
    }

    pub fn mul(&self, o: &Series) -> Series {
        if self.is_zero() || o.is_zero() {
            return Series::exact([]);
        }
        let prec = match (self.prec, o.prec) {
            (None, None) => None,
            _ => {
                let va = self.val_lower_bound().unwrap();
                let vb = o.val_lower_bound().unwrap();
                min_prec(self.prec.map(|p| p + vb), o.prec.map(|p| p + va))
            }
        };
        let mut out = Series { terms: BTreeMap::new(), prec };
        for (&i, a) in &self.terms {
            for (&j, b) in &o.terms {
                if prec.is_some_and(|p| i + j >= p) {
                    break;
                }
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    /// Multiplicative inverse. Exact series must be monomials; truncate first
    /// otherwise.
    pub fn inv(&self) -> Result<Series> {
        let (v, c) = self.leading()?;
        let ci = c.inv()?;
        let Some(p) = self.prec else {
            if self.terms.len() == 1 {
                return Ok(Series::monomial(ci, -v));
            }
            return Err(AlgebraError::Unsupported(
                "inverse of an exact non-monomial series; truncate first".into(),
            ));
        };
        let n = (p - v) as usize;
        // Normalized u = self / (c t^v) = 1 + a_1 t + ...
        let a: Vec<Scalar> = (0..n).map(|i| &self.terms.get(&(v + i as i64)).cloned().unwrap_or_else(Scalar::zero) * &ci).collect();
        let mut b = vec![Scalar::zero(); n];
        if n > 0 {
            b[0] = Scalar::one();
        }
        for k in 1..n {
            let mut s = Scalar::zero();
            for j in 1..=k {
                if !a[j].is_zero() && !b[k - j].is_zero() {
                    s = &s + &(&a[j] * &b[k - j]);
                }
            }
            b[k] = -s;
        }
        Ok(Series::new(
            b.into_iter().enumerate().map(|(i, x)| (i as i64 - v, &x * &ci)),
            Some(p - 2 * v),
        ))
    }

    pub fn div(&self, o: &Series) -> Result<Series> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, n: u32) -> Series {
        let mut acc = Series::constant(Scalar::one());
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn powi(&self, n: i64) -> Result<Series> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow((-n) as u32))
        }
    }

    /// Square root with the leading coefficient's exact root; the branch is
    /// fixed by [`Scalar::sqrt_exact`].
    pub fn sqrt(&self) -> Result<Series> {
        let (v, c) = self.leading()?;
        if v % 2 != 0 {
            return Err(AlgebraError::Unsupported("square root of odd valuation".into()));
        }
        let r = c
            .sqrt_exact()
            .ok_or_else(|| AlgebraError::Unsupported(format!("no exact square root of {c}")))?;
        let Some(p) = self.prec else {
            if self.terms.len() == 1 {
                return Ok(Series::monomial(r, v / 2));
            }
            return Err(AlgebraError::Unsupported(
                "square root of an exact non-monomial series; truncate first".into(),
            ));
        };
        let n = (p - v) as usize;
        let ci = c.inv()?;
        let a: Vec<Scalar> = (0..n).map(|i| &self.terms.get(&(v + i as i64)).cloned().unwrap_or_else(Scalar::zero) * &ci).collect();
        let half = Scalar::frac(1, 2);
        let mut s = vec![Scalar::zero(); n];
        if n > 0 {
            s[0] = Scalar::one();
        }
        for k in 1..n {
            let mut acc = a[k].clone();
            for j in 1..k {
                acc = &acc - &(&s[j] * &s[k - j]);
            }
            s[k] = &acc * &half;
        }
        Ok(Series::new(
            s.into_iter().enumerate().map(|(i, x)| (i as i64 + v / 2, &x * &r)),
            Some(p - v / 2),
        ))
    }

    pub fn derivative(&self) -> Series {
        Series::new(
            self.terms.iter().filter(|(&k, _)| k != 0).map(|(&k, c)| (k - 1, c * &Scalar::int(k))),
            self.prec.map(|p| p - 1),
        )
    }

    /// `self(g(t))` for `g` of positive valuation.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        let vg = g.valuation()?;
        if vg < 1 {
            return Err(AlgebraError::Invalid("composition needs a series of positive valuation".into()));
        }
        let mut acc = Series::exact([]);
        let mut powers: BTreeMap<i64, Series> = BTreeMap::new();
        for (&k, c) in &self.terms {
            let p = match powers.get(&k) {
                Some(p) => p.clone(),
                None => {
                    let p = g.powi(k)?;
                    powers.insert(k, p.clone());
                    p
                }
            };
            acc = acc.add(&p.scale(c));
        }
        if let Some(p) = self.prec {
            // The tail O(t^p) becomes O(t^(p·vg)).
            acc = acc.add(&Series::big_o(p * vg));
        }
        Ok(acc)
    }

    /// Substitutes `t ↦ t^k` (k ≥ 1).
    pub fn ramify(&self, k: i64) -> Series {
        Series {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
            prec: self.prec.map(|p| p * k),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Series {
        Series::new(self.terms.iter().map(|(&k, c)| (k, f(c))), self.prec)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        for (&k, c) in &self.terms {
            let cs = match c {
                Scalar::Rat(_) => c.to_string(),
                _ => format!("({c})"),
            };
            parts.push(match k {
                0 => cs,
                1 => format!("{cs}*t"),
                _ => format!("{cs}*t^{k}"),
            });
        }
        if let Some(p) = self.prec {
            parts.push(format!("O(t^{p})"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], prec: i64) -> Series {
        Series::new(c.iter().enumerate().map(|(i, &x)| (i as i64, Scalar::int(x))), Some(prec))
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_t = s(&[1, -1], 6);
        let inv = one_minus_t.inv().unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1, 1], 6));
        assert_eq!(one_minus_t.mul(&inv).truncate(6), s(&[1], 6));
    }

    #[test]
    fn laurent_inverse_tracks_precision() {
        // t^2 (1 + t) + O(t^5): inverse known to O(t^1)
        let a = Series::new([(2, Scalar::int(1)), (3, Scalar::int(1))], Some(5));
        let b = a.inv().unwrap();
        assert_eq!(b.prec(), Some(1));
        assert_eq!(b.coeff(-2).unwrap(), Scalar::int(1));
        assert_eq!(b.coeff(0).unwrap(), Scalar::int(1));
    }

    #[test]
    fn square_root_of_one_plus_t() {
        let r = s(&[1, 1], 5).sqrt().unwrap();
        assert_eq!(r.mul(&r).truncate(5), s(&[1, 1], 5));
        assert_eq!(r.coeff(2).unwrap(), Scalar::frac(-1, 8));
    }

    #[test]
    fn valuation_needs_a_known_term() {
        assert_eq!(
            Series::big_o(4).valuation(),
            Err(AlgebraError::InsufficientPrecision { required: 5 })
        );
        assert!(s(&[1], 3).coeff(3).is_err());
    }

    #[test]
    fn cancellation_keeps_precision() {
        let a = s(&[1, 2, 3], 3);
        let b = s(&[1, 2], 4);
        let d = a.sub(&b);
        assert_eq!(d.valuation().unwrap(), 2);
        assert_eq!(d.prec(), Some(3));
    }

    #[test]
    fn composition_with_reparametrization() {
        // (1 + t)^-1 at t ↦ 2t + t^2
        let f = s(&[1, -1, 1, -1, 1], 5);
        let g = Series::exact([(1, Scalar::int(2)), (2, Scalar::int(1))]);
        let h = f.compose(&g).unwrap();
        // 1/(1 + 2t + t^2) = 1/(1+t)^2 = 1 - 2t + 3t^2 - 4t^3 + 5t^4
        assert_eq!(h, s(&[1, -2, 3, -4, 5], 5));
    }

    #[test]
    fn derivative_shifts_precision() {
        let d = s(&[1, 1, 1], 3).derivative();
        assert_eq!(d, s(&[1, 2], 2));
    }
}
