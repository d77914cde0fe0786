//! Sparse multivariate polynomials with named variables.
//!
//! Exponents are `i32`, so the same type carries Laurent polynomials (e.g. in
//! the eigenvalue `a` or a local parameter `t`). Variable lists are kept sorted
//! by name; operands with different variable sets are aligned on the fly.

use crate::error::{AlgebraError, Result};
use crate::scalar::{Scalar, Q};
use crate::series::Series;
use crate::upoly::UPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Monomial = Vec<i32>;

#[derive(Clone, Debug, Default)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let vars = merge_vars(&self.vars, &other.vars);
        self.aligned(&vars).terms == other.aligned(&vars).terms
    }
}
impl Eq for Poly {}

fn merge_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut v: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    v.sort();
    v.dedup();
    v
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn zero_in(vars: &[&str]) -> Poly {
        let mut v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        v.sort();
        v.dedup();
        Poly { vars: v, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![], c);
        }
        Poly { vars: vec![], terms }
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(Scalar::int(n))
    }

    pub fn one() -> Poly {
        Poly::int(1)
    }

    pub fn var(name: &str) -> Poly {
        Poly::monomial(Scalar::one(), &[(name, 1)])
    }

    /// `c · Π vᵢ^{eᵢ}`.
    pub fn monomial(c: Scalar, powers: &[(&str, i32)]) -> Poly {
        let mut vars: Vec<String> = powers.iter().map(|(v, _)| v.to_string()).collect();
        vars.sort();
        vars.dedup();
        let mut e = vec![0; vars.len()];
        for (v, k) in powers {
            let i = vars.iter().position(|w| w == v).unwrap();
            e[i] += k;
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { vars, terms }
    }

    /// Builds from terms over the given variable list (any order).
    pub fn from_terms(vars: &[&str], terms: Vec<(Monomial, Scalar)>) -> Poly {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&i, &j| vars[i].cmp(vars[j]));
        let sorted: Vec<String> = order.iter().map(|&i| vars[i].to_string()).collect();
        let mut out = Poly { vars: sorted, terms: BTreeMap::new() };
        for (e, c) in terms {
            let m: Monomial = order.iter().map(|&i| e[i]).collect();
            out.add_term(m, c);
        }
        out
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn var_index(&self, v: &str) -> Option<usize> {
        self.vars.iter().position(|w| w == v)
    }

    /// Whether `v` occurs with a nonzero exponent.
    pub fn has_var(&self, v: &str) -> bool {
        match self.var_index(v) {
            None => false,
            Some(i) => self.terms.keys().any(|e| e[i] != 0),
        }
    }

    /// Variables that actually occur.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars.iter().filter(|v| self.has_var(v)).cloned().collect()
    }

    /// Drops variables that do not occur.
    pub fn compact(&self) -> Poly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        Poly {
            vars: keep.iter().map(|&i| self.vars[i].clone()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses over a sorted superset of variables.
    pub fn aligned(&self, vars: &[String]) -> Poly {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<Option<usize>> = vars.iter().map(|v| self.var_index(v)).collect();
        for (i, v) in self.vars.iter().enumerate() {
            if !vars.contains(v) {
                assert!(self.terms.keys().all(|e| e[i] == 0), "cannot drop used variable {v}");
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (map.iter().map(|m| m.map_or(0, |i| e[i])).collect(), c.clone()))
            .collect();
        Poly { vars: vars.to_vec(), terms }
    }

    fn add_term(&mut self, e: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                let s = &*x + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn binary_align(&self, o: &Poly) -> (Poly, Poly) {
        if self.vars == o.vars {
            return (self.clone(), o.clone());
        }
        let vars = merge_vars(&self.vars, &o.vars);
        (self.aligned(&vars), o.aligned(&vars))
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (mut a, b) = self.binary_align(o);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let (a, b) = self.binary_align(o);
        let mut out = Poly { vars: a.vars.clone(), terms: BTreeMap::new() };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
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

    /// Multiplies by `Π vᵢ^{eᵢ}`.
    pub fn shift(&self, powers: &[(&str, i32)]) -> Poly {
        self.mul(&Poly::monomial(Scalar::one(), powers))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Value of a constant polynomial.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Scalar::zero))
    }

    pub fn constant_term(&self) -> Scalar {
        let z = vec![0; self.vars.len()];
        self.terms.get(&z).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of an exact monomial.
    pub fn coeff(&self, powers: &[(&str, i32)]) -> Scalar {
        let mut e = vec![0; self.vars.len()];
        for (v, k) in powers {
            match self.var_index(v) {
                Some(i) => e[i] = *k,
                None if *k == 0 => {}
                None => return Scalar::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.is_rational())
    }

    /// Maximum exponent of `v` (`None` for zero).
    pub fn degree(&self, v: &str) -> Option<i32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(v) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap(),
        })
    }

    /// Minimum exponent of `v` (`None` for zero).
    pub fn min_degree(&self, v: &str) -> Option<i32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(v) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).min().unwrap(),
        })
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Whether all exponents are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k >= 0))
    }

    /// Coefficients in `v`: exponent ↦ coefficient (free of `v`).
    pub fn coeffs_in(&self, v: &str) -> BTreeMap<i32, Poly> {
        let mut out: BTreeMap<i32, Poly> = BTreeMap::new();
        let Some(i) = self.var_index(v) else {
            if !self.is_zero() {
                out.insert(0, self.clone());
            }
            return out;
        };
        let rest: Vec<String> = self.vars.iter().filter(|w| *w != v).cloned().collect();
        for (e, c) in &self.terms {
            let mut r = e.clone();
            let k = r.remove(i);
            out.entry(k)
                .or_insert_with(|| Poly { vars: rest.clone(), terms: BTreeMap::new() })
                .add_term(r, c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(v: &str, coeffs: &BTreeMap<i32, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in coeffs {
            out = out.add(&c.shift(&[(v, *k)]));
        }
        out
    }

    /// Coefficient of `v^k`.
    pub fn coeff_in(&self, v: &str, k: i32) -> Poly {
        self.coeffs_in(v).remove(&k).unwrap_or_default()
    }

    /// Leading coefficient in `v`.
    pub fn lead_in(&self, v: &str) -> Poly {
        match self.degree(v) {
            None => Poly::zero(),
            Some(d) => self.coeff_in(v, d),
        }
    }

    pub fn derivative(&self, v: &str) -> Poly {
        let Some(i) = self.var_index(v) else {
            return Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        };
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * &Scalar::int(e[i] as i64));
        }
        out
    }

    /// Substitutes `v ↦ value`. Negative powers of `v` require `value` to be
    /// a single term.
    pub fn subs(&self, v: &str, value: &Poly) -> Result<Poly> {
        let coeffs = self.coeffs_in(v);
        if coeffs.is_empty() {
            return Ok(Poly::zero());
        }
        let min = *coeffs.keys().next().unwrap();
        let inv = if min < 0 { Some(value.monomial_inverse()?) } else { None };
        let mut out = Poly::zero();
        let mut cache: BTreeMap<i32, Poly> = BTreeMap::new();
        for (k, c) in coeffs {
            let p = match cache.get(&k) {
                Some(p) => p.clone(),
                None => {
                    let p = if k >= 0 {
                        value.pow(k as u32)
                    } else {
                        inv.as_ref().unwrap().pow((-k) as u32)
                    };
                    cache.insert(k, p.clone());
                    p
                }
            };
            out = out.add(&c.mul(&p));
        }
        Ok(out)
    }

    fn monomial_inverse(&self) -> Result<Poly> {
        if self.terms.len() != 1 {
            return Err(AlgebraError::Unsupported("negative power of a non-monomial".into()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(e.iter().map(|k| -k).collect(), c.inv()?);
        Ok(Poly { vars: self.vars.clone(), terms })
    }

    /// Evaluates `v` at a scalar.
    pub fn eval(&self, v: &str, x: &Scalar) -> Result<Poly> {
        self.subs(v, &Poly::constant(x.clone()))
            .or_else(|_| {
                // Negative powers of a scalar.
                let xi = x.inv()?;
                let mut out = Poly::zero();
                for (k, c) in self.coeffs_in(v) {
                    let s = if k >= 0 { x.pow(k as u32) } else { xi.pow((-k) as u32) };
                    out = out.add(&c.scale(&s));
                }
                Ok(out)
            })
    }

    /// Evaluates every variable; unassigned used variables are an error.
    pub fn eval_all(&self, values: &[(&str, Scalar)]) -> Result<Scalar> {
        let mut p = self.clone();
        for (v, x) in values {
            if p.has_var(v) {
                p = p.eval(v, x)?;
            }
        }
        p.as_scalar()
            .ok_or_else(|| AlgebraError::Invalid(format!("unassigned variables in {}", p)))
    }

    /// Substitutes series for all variables.
    pub fn eval_series(&self, values: &[(&str, &Series)]) -> Result<Series> {
        let idx: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| values.iter().position(|(w, _)| w == v))
            .collect();
        for (i, v) in self.vars.iter().enumerate() {
            if idx[i].is_none() && self.has_var(v) {
                return Err(AlgebraError::Invalid(format!("no series given for `{v}`")));
            }
        }
        let template = values.first().map(|(_, s)| (*s).clone());
        let mut powers: Vec<BTreeMap<i32, Series>> = vec![BTreeMap::new(); self.vars.len()];
        let mut acc: Option<Series> = None;
        for (e, c) in &self.terms {
            let mut term: Option<Series> = None;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let base = values[idx[i].unwrap()].1;
                if let std::collections::btree_map::Entry::Vacant(v) = powers[i].entry(k) {
                    v.insert(base.powi(k as i64)?);
                }
                let p = &powers[i][&k];
                term = Some(match term {
                    None => p.clone(),
                    Some(t) => t.mul(p),
                });
            }
            let term = match term {
                Some(t) => t.scale(c),
                None => Series::constant_like(template.as_ref(), c.clone()),
            };
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        Ok(acc.unwrap_or_else(|| Series::constant_like(template.as_ref(), Scalar::zero())))
    }

    /// Leading term in lexicographic order of the sorted variables.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Exact division; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let (a, b) = self.binary_align(d);
        // Shift Laurent exponents so both are honest polynomials.
        let n = a.vars.len();
        let mut sa = vec![0; n];
        let mut sb = vec![0; n];
        for i in 0..n {
            sa[i] = a.terms.keys().map(|e| e[i]).min().unwrap().min(0);
            sb[i] = b.terms.keys().map(|e| e[i]).min().unwrap().min(0);
        }
        let shift = |p: &Poly, s: &[i32]| Poly {
            vars: p.vars.clone(),
            terms: p.terms.iter().map(|(e, c)| (e.iter().zip(s).map(|(x, y)| x - y).collect(), c.clone())).collect(),
        };
        let mut r = shift(&a, &sa);
        let b = shift(&b, &sb);
        let (lb, lc) = b.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let lci = lc.inv()?;
        let mut q = Poly { vars: a.vars.clone(), terms: BTreeMap::new() };
        while let Some((le, lcoef)) = r.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Monomial = le.iter().zip(&lb).map(|(x, y)| x - y).collect();
            if qe.iter().any(|&k| k < 0) {
                return Err(AlgebraError::InexactDivision(format!("{self} by {d}")));
            }
            let qc = &lcoef * &lci;
            for (e, c) in &b.terms {
                let m: Monomial = e.iter().zip(&qe).map(|(x, y)| x + y).collect();
                r.add_term(m, -(&qc * c));
            }
            q.add_term(qe, qc);
        }
        let back: Vec<i32> = sa.iter().zip(&sb).map(|(x, y)| y - x).collect();
        Ok(shift(&q, &back))
    }

    /// Pseudo-remainder of `self` by `d` with respect to `v`.
    pub fn prem(&self, d: &Poly, v: &str) -> Result<Poly> {
        let dd = d.degree(v).ok_or(AlgebraError::DivisionByZero)?;
        let ld = d.lead_in(v);
        let mut r = self.clone();
        let Some(mut dr) = r.degree(v) else { return Ok(r) };
        let mut e = dr - dd + 1;
        while !r.is_zero() && dr >= dd {
            let lr = r.lead_in(v);
            let t = lr.shift(&[(v, dr - dd)]);
            r = r.mul(&ld).sub(&t.mul(d));
            e -= 1;
            dr = match r.degree(v) {
                Some(k) => k,
                None => break,
            };
        }
        if e > 0 {
            r = r.mul(&ld.pow(e as u32));
        }
        Ok(r)
    }

    /// Normalizes by a unit: integer coprime coefficients with positive
    /// leading coefficient for rational polynomials, monic otherwise.
    pub fn normalize_unit(&self) -> Poly {
        let Some((_, lc)) = self.leading_term() else { return self.clone() };
        if !self.is_rational() {
            return self.scale(&lc.inv().unwrap());
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            let q = c.as_rational().unwrap();
            den = den.lcm(q.denom());
            num = num.gcd(q.numer());
        }
        let mut s = Q::new(den, num);
        if lc.as_rational().unwrap().is_negative() {
            s = -s;
        }
        self.scale(&Scalar::Rat(s))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Renames a variable (the target must not already occur).
    pub fn rename(&self, from: &str, to: &str) -> Poly {
        let Some(i) = self.var_index(from) else { return self.clone() };
        let mut names: Vec<String> = self.vars.clone();
        names[i] = to.to_string();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Poly::from_terms(&refs, self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect())
    }

    /// Dense univariate view in `v`; requires no other variables and
    /// nonnegative exponents.
    pub fn to_upoly(&self, v: &str) -> Result<UPoly> {
        let mut c = vec![];
        for (k, p) in self.coeffs_in(v) {
            if k < 0 {
                return Err(AlgebraError::Invalid("negative exponent in univariate view".into()));
            }
            let s = p.as_scalar().ok_or_else(|| {
                AlgebraError::Invalid(format!("{self} is not univariate in `{v}`"))
            })?;
            if c.len() <= k as usize {
                c.resize(k as usize + 1, Scalar::zero());
            }
            c[k as usize] = s;
        }
        Ok(UPoly::new(c))
    }

    pub fn from_upoly(v: &str, p: &UPoly) -> Poly {
        Poly::from_terms(
            &[v],
            p.coeffs().iter().enumerate().map(|(i, c)| (vec![i as i32], c.clone())).collect(),
        )
    }

    /// Parses expressions such as `2*x^2 + y^2 - x^2*y - y - 1`.
    pub fn parse(s: &str) -> Result<Poly> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let out = p.expr()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.into() }
    }
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }
    fn expr(&mut self) -> Result<Poly> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            neg = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }
    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    let c = d.as_scalar().ok_or_else(|| self.err("division by non-constant"))?;
                    acc = acc.scale(&c.inv()?);
                }
                Some(c) if c == b'(' || c.is_ascii_alphabetic() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }
    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let neg = if self.s.get(self.pos) == Some(&b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let n = self.integer()?;
            let n = i32::try_from(n).map_err(|_| self.err("exponent too large"))?;
            if neg {
                return base.monomial_inverse().map(|b| b.pow(n as u32));
            }
            return Ok(base.pow(n as u32));
        }
        Ok(base)
    }
    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("bad integer"))
    }
    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                Ok(Poly::constant(Scalar::Rat(Q::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Poly::var(std::str::from_utf8(&self.s[start..self.pos]).unwrap()))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: i32 = a.iter().sum();
            let db: i32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (n, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            let (neg, mag) = match c {
                Scalar::Rat(q) => (q.is_negative(), Scalar::Rat(q.abs())),
                _ => (false, c.clone()),
            };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("(x+y)*(x-y)"), p("x^2 - y^2"));
    }

    #[test]
    fn laurent_substitution() {
        let t_inv = Poly::parse("t^-1").unwrap();
        assert_eq!(p("x^2").subs("x", &t_inv).unwrap(), p("t^-2"));
    }

    #[test]
    fn evaluation_of_a_curve_polynomial() {
        let f = p("-x^2*(y-1)*(y-2) + y^3 - y^2 - 2*y + 1");
        let v = f.eval_all(&[("x", Scalar::int(0)), ("y", Scalar::int(1))]).unwrap();
        assert_eq!(v, Scalar::int(-1));
    }

    #[test]
    fn exact_division() {
        let a = p("x^3 - y^3");
        assert_eq!(a.div_exact(&p("x - y")).unwrap(), p("x^2 + x*y + y^2"));
        assert!(a.div_exact(&p("x + y")).is_err());
        let l = p("a^2 - a^-2");
        assert_eq!(l.div_exact(&p("a - a^-1")).unwrap(), p("a + a^-1"));
    }

    #[test]
    fn pseudo_remainder_vanishes_on_multiples() {
        let g = p("x*y + 1");
        let f = g.mul(&p("y^2 - x"));
        assert!(f.prem(&g, "y").unwrap().is_zero());
    }

    #[test]
    fn display_round_trip() {
        let f = p("2*x^2 + y^2 - x^2*y - y - 1");
        assert_eq!(p(&f.to_string()), f);
        assert_eq!(f.to_string(), "-x^2*y + 2*x^2 + y^2 - y - 1");
    }

    #[test]
    fn normalize_unit_scales_to_primitive_integers() {
        let f = p("-x/2 - 1/3");
        assert_eq!(f.normalize_unit(), p("3*x + 2"));
    }

    #[test]
    fn derivatives_and_degrees() {
        let f = p("x^3*y - 2*x*y^2 + 5");
        assert_eq!(f.derivative("x"), p("3*x^2*y - 2*y^2"));
        assert_eq!(f.degree("y"), Some(2));
        assert_eq!(f.total_degree(), Some(4));
        assert_eq!(f.lead_in("y"), p("-2*x"));
    }
}
