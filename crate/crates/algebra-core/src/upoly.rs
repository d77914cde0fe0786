//! Dense univariate polynomials over [`Scalar`] coefficients.

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;
use std::fmt;

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    c: Vec<Scalar>,
}

impl UPoly {
    pub fn new(mut c: Vec<Scalar>) -> UPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| Scalar::int(x)).collect())
    }

    pub fn zero() -> UPoly {
        UPoly { c: vec![] }
    }

    pub fn constant(s: Scalar) -> UPoly {
        UPoly::new(vec![s])
    }

    /// The monomial `c·z^k`.
    pub fn monomial(c: Scalar, k: usize) -> UPoly {
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        UPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.c.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.c.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(|x| x.is_rational())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, s: &Scalar) -> UPoly {
        UPoly::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut acc = UPoly::constant(Scalar::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division over the coefficient field.
    pub fn divrem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut r = self.c.clone();
        let dl = d.lead().inv()?;
        let dd = d.c.len();
        if r.len() < dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut q = vec![Scalar::zero(); r.len() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd - 1] * &dl;
            if top.is_zero() {
                continue;
            }
            for (i, b) in d.c.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&top * b);
            }
            q[k] = top;
        }
        r.truncate(dd - 1);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    pub fn rem(&self, d: &UPoly) -> Result<UPoly> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact quotient, failing if the division leaves a remainder.
    pub fn div_exact(&self, d: &UPoly) -> Result<UPoly> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision(format!("{self} by {d}")))
        }
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let l = self.lead().inv().expect("nonzero leading coefficient");
        self.scale(&l)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·o = g` and `g` monic.
    pub fn xgcd(&self, o: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::constant(Scalar::one()), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::constant(Scalar::one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.lead().inv().expect("nonzero");
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * &Scalar::int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `self(g(z))`.
    pub fn compose(&self, g: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(g).add(&UPoly::constant(c.clone()));
        }
        acc
    }

    /// Squarefree decomposition (Yun): pairs `(f_i, i)` with `self = lc·Π f_iⁱ`.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = vec![];
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_exact(&a).expect("gcd divides");
        let mut c = df.div_exact(&a).expect("gcd divides derivative");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Multiplicity of `x` as a root.
    pub fn root_multiplicity(&self, x: &Scalar) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.eval(x).is_zero() {
            p = p.derivative();
            k += 1;
        }
        k
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[1, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&UPoly::from_ints(&[-1, 1])), UPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn xgcd_identity() {
        let a = UPoly::from_ints(&[1, 0, 1]);
        let b = UPoly::from_ints(&[2, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, UPoly::from_ints(&[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn squarefree_parts() {
        // (z-2)^2 (z+1)
        let f = UPoly::from_ints(&[-2, 1]).pow(2).mul(&UPoly::from_ints(&[1, 1]));
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(UPoly::from_ints(&[1, 1]), 1), (UPoly::from_ints(&[-2, 1]), 2)]);
        assert_eq!(f.root_multiplicity(&Scalar::int(2)), 2);
        assert_eq!(f.root_multiplicity(&Scalar::int(3)), 0);
    }
}
