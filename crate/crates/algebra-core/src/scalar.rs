//! Exact scalars: rationals and elements of simple number fields `Q(θ)`.
//!
//! A [`Scalar`] is kept canonical: a number-field element whose coordinates
//! beyond the constant term vanish is stored as a rational. Mixing elements
//! of two different fields is a programming error and panics.

use crate::error::{AlgebraError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

pub type Q = BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `n/d`.
pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Rational square root when `q` is a perfect square.
pub fn rational_sqrt(q: &Q) -> Option<Q> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

/// A simple extension `Q(θ)` given by the monic minimal polynomial of `θ`.
#[derive(Debug)]
pub struct NumberField {
    name: String,
    minpoly: Vec<Q>,
}

impl NumberField {
    /// Builds `Q[θ]/(m)`; `m` is given by ascending coefficients and must be
    /// irreducible of degree at least two.
    pub fn new(minpoly: Vec<Q>, name: &str) -> Result<Arc<NumberField>> {
        let m = trim(minpoly);
        if m.len() < 3 {
            return Err(AlgebraError::ReducibleMinpoly(format!(
                "degree {} is too small for a proper extension",
                m.len().saturating_sub(1)
            )));
        }
        if !crate::factor::is_irreducible_q(&m) {
            return Err(AlgebraError::ReducibleMinpoly(poly_string(&m, name)));
        }
        Ok(Self::new_unchecked(m, name))
    }

    /// Builds the field without the irreducibility check.
    pub fn new_unchecked(minpoly: Vec<Q>, name: &str) -> Arc<NumberField> {
        let m = trim(minpoly);
        let lc = m.last().expect("nonzero minimal polynomial").clone();
        let minpoly = m.into_iter().map(|c| c / &lc).collect();
        Arc::new(NumberField { name: name.to_string(), minpoly })
    }

    /// Convenience constructor from integer coefficients (ascending).
    pub fn from_ints(coeffs: &[i64], name: &str) -> Result<Arc<NumberField>> {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), name)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Monic minimal polynomial, ascending coefficients.
    pub fn minpoly(&self) -> &[Q] {
        &self.minpoly
    }

    pub fn same(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
        Arc::ptr_eq(a, b) || a.minpoly == b.minpoly
    }

    /// The generator `θ`.
    pub fn generator(self: &Arc<Self>) -> Scalar {
        let mut c = vec![Q::zero(); self.degree()];
        c[1] = Q::one();
        Scalar::from_coords(self, c)
    }

    /// The element `Σ cᵢ θⁱ`.
    pub fn element(self: &Arc<Self>, coeffs: Vec<Q>) -> Scalar {
        Scalar::from_coords(self, coeffs)
    }

    fn reduce(&self, mut p: Vec<Q>) -> Vec<Q> {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let off = p.len() - d;
            for (i, m) in self.minpoly[..d].iter().enumerate() {
                p[off + i] -= &top * m;
            }
        }
        p.resize(d, Q::zero());
        p
    }

    fn mul_coords(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }

    fn inv_coords(&self, a: &[Q]) -> Option<Vec<Q>> {
        // Extended Euclid on (m, a) over Q.
        let (mut r0, mut r1) = (self.minpoly.clone(), trim(a.to_vec()));
        if r1.is_empty() {
            return None;
        }
        let (mut t0, mut t1): (Vec<Q>, Vec<Q>) = (vec![], vec![Q::one()]);
        while r1.len() > 1 {
            let (qt, r) = divrem_q(&r0, &r1);
            let t2 = sub_q(&t0, &mul_q(&qt, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
            if r1.is_empty() {
                return None;
            }
        }
        let c = r1[0].clone();
        Some(self.reduce(t1.into_iter().map(|x| x / &c).collect()))
    }
}

fn trim(mut v: Vec<Q>) -> Vec<Q> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn mul_q(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn sub_q(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out = vec![Q::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn divrem_q(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lb = b.last().unwrap().clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Q::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn poly_string(c: &[Q], var: &str) -> String {
    let mut parts = vec![];
    for (i, x) in c.iter().enumerate().rev() {
        if x.is_zero() {
            continue;
        }
        parts.push(match i {
            0 => format!("{x}"),
            1 => format!("{x}*{var}"),
            _ => format!("{x}*{var}^{i}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Element of a number field, in coordinates on the power basis.
#[derive(Clone, Debug)]
pub struct NfElem {
    field: Arc<NumberField>,
    coeffs: Vec<Q>,
}

impl NfElem {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }
}

/// An exact scalar: a rational, or an irrational element of some `Q(θ)`.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Q),
    Alg(NfElem),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Alg(a), Scalar::Alg(b)) => {
                NumberField::same(&a.field, &b.field) && a.coeffs == b.coeffs
            }
            _ => false,
        }
    }
}
impl Eq for Scalar {}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(Q::zero())
    }
    pub fn one() -> Scalar {
        Scalar::Rat(Q::one())
    }
    pub fn int(n: i64) -> Scalar {
        Scalar::Rat(rat(n))
    }
    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::Rat(frac(n, d))
    }

    /// Canonical element from power-basis coordinates.
    pub fn from_coords(field: &Arc<NumberField>, coeffs: Vec<Q>) -> Scalar {
        let c = field.reduce(coeffs);
        if c[1..].iter().all(|x| x.is_zero()) {
            Scalar::Rat(c[0].clone())
        } else {
            Scalar::Alg(NfElem { field: field.clone(), coeffs: c })
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_zero())
    }
    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_one())
    }
    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }
    pub fn as_rational(&self) -> Option<&Q> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Alg(_) => None,
        }
    }
    pub fn field(&self) -> Option<&Arc<NumberField>> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Alg(e) => Some(&e.field),
        }
    }

    /// Coordinates on the power basis of `field` (rationals embed as constants).
    pub fn coords_in(&self, field: &Arc<NumberField>) -> Vec<Q> {
        match self {
            Scalar::Rat(q) => {
                let mut v = vec![Q::zero(); field.degree()];
                v[0] = q.clone();
                v
            }
            Scalar::Alg(e) => {
                assert!(NumberField::same(&e.field, field), "element of a different number field");
                e.coeffs.clone()
            }
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(q) => {
                if q.is_zero() {
                    Err(AlgebraError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(q.recip()))
                }
            }
            Scalar::Alg(e) => {
                let c = e.field.inv_coords(&e.coeffs).ok_or(AlgebraError::DivisionByZero)?;
                Ok(Scalar::from_coords(&e.field, c))
            }
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, n: i64) -> Result<Scalar> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow((-n) as u32))
        }
    }

    /// Exact square root when the scalar is a rational square.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(q) => rational_sqrt(q).map(Scalar::Rat),
            Scalar::Alg(_) => None,
        }
    }

    /// Total order used for deterministic sorting (numeric on rationals).
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Rat(_), Scalar::Alg(_)) => Ordering::Less,
            (Scalar::Alg(_), Scalar::Rat(_)) => Ordering::Greater,
            (Scalar::Alg(a), Scalar::Alg(b)) => a
                .field
                .minpoly
                .cmp(&b.field.minpoly)
                .then_with(|| a.coeffs.cmp(&b.coeffs)),
        }
    }

    /// Coordinates as strings, for serialization.
    pub fn coord_strings(&self) -> Vec<String> {
        match self {
            Scalar::Rat(q) => vec![q.to_string()],
            Scalar::Alg(e) => e.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    fn combine(&self, other: &Scalar, op: impl Fn(&Q, &Q) -> Q) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(op(a, b)),
            _ => {
                let f = self.field().or(other.field()).unwrap().clone();
                let a = self.coords_in(&f);
                let b = other.coords_in(&f);
                let c = a.iter().zip(&b).map(|(x, y)| op(x, y)).collect();
                Scalar::from_coords(&f, c)
            }
        }
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Alg(e)) | (Scalar::Alg(e), Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar::Alg(NfElem { field: e.field.clone(), coeffs: e.coeffs.iter().map(|c| c * a).collect() })
            }
            (Scalar::Alg(x), Scalar::Alg(y)) => {
                assert!(NumberField::same(&x.field, &y.field), "operands live in different number fields");
                Scalar::from_coords(&x.field, x.field.mul_coords(&x.coeffs, &y.coeffs))
            }
        }
    }
}

impl From<Q> for Scalar {
    fn from(q: Q) -> Self {
        Scalar::Rat(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Alg(e) => {
                let mut first = true;
                write!(f, "(")?;
                for (i, c) in e.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mag = c.abs();
                    if first {
                        if c.is_negative() {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
                    }
                    first = false;
                    match (i, mag.is_one()) {
                        (0, _) => write!(f, "{mag}")?,
                        (1, true) => write!(f, "{}", e.field.name)?,
                        (1, false) => write!(f, "{mag}*{}", e.field.name)?,
                        (_, true) => write!(f, "{}^{i}", e.field.name)?,
                        (_, false) => write!(f, "{mag}*{}^{i}", e.field.name)?,
                    }
                }
                write!(f, ")")
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.combine(b, |x, y| x + y));
forward_binop!(Sub, sub, |a, b| a.combine(b, |x, y| x - y));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.mul_ref(&b.inv().expect("division by zero scalar")));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Alg(e) => Scalar::Alg(NfElem { field: e.field.clone(), coeffs: e.coeffs.iter().map(|c| -c).collect() }),
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qj() -> Arc<NumberField> {
        NumberField::from_ints(&[1, 1, 1], "j").unwrap()
    }

    #[test]
    fn cube_root_of_unity_products() {
        let k = qj();
        let j = k.generator();
        let j2 = &j * &j;
        assert_eq!(&j * &j2, Scalar::one());
        let d = &j - &j2;
        assert_eq!(&d * &d, Scalar::int(-3));
    }

    #[test]
    fn golden_ratio_inverse() {
        let k = NumberField::from_ints(&[-5, 0, 1], "s5").unwrap();
        let s = k.generator();
        let phi = (&Scalar::one() + &s) / Scalar::int(2);
        let expected = (&s - &Scalar::one()) / Scalar::int(2);
        assert_eq!(phi.inv().unwrap(), expected);
    }

    #[test]
    fn reducible_minpoly_rejected() {
        assert!(NumberField::from_ints(&[-1, 0, 1], "r").is_err());
        assert!(NumberField::from_ints(&[-4, 0, 1], "r").is_err());
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(Scalar::zero().inv(), Err(AlgebraError::DivisionByZero));
        let k = qj();
        let z = &k.generator() - &k.generator();
        assert!(z.inv().is_err());
    }

    #[test]
    fn canonical_form_demotes_rationals() {
        let k = qj();
        let j = k.generator();
        let s = &(&j * &j) + &j;
        assert_eq!(s, Scalar::int(-1));
        assert!(s.is_rational());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&frac(2, 1)), None);
        assert_eq!(rational_sqrt(&frac(-4, 1)), None);
    }
}
