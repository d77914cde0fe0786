//! Factorization over Q.
//!
//! Univariate: squarefree decomposition, then Zassenhaus (factor modulo a
//! good prime, multifactor Hensel lifting past a Mignotte-type bound, subset
//! recombination). Bivariate: make the polynomial monic in the main
//! variable, specialize the other variable at a good integer, factor, lift
//! the factors adically in the specialized variable and recombine.

use crate::error::{AlgebraError, Result};
use crate::gcd::{content_in, squarefree_part};
use crate::modp::{small_primes, Fp, PolyP};
use crate::poly::Poly;
use crate::scalar::{Scalar, Q};
use crate::upoly::UPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type ZPoly = Vec<BigInt>;

fn ztrim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zcontent(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn zprimitive(a: &[BigInt]) -> ZPoly {
    let c = zcontent(a);
    if c.is_zero() {
        return vec![];
    }
    let s = if a.last().unwrap().is_negative() { -c } else { c };
    a.iter().map(|x| x / &s).collect()
}

fn sym_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

fn to_modp(a: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let mut v: PolyP = a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Exact division over Z, `None` if `d` does not divide `a`.
fn zdiv(a: &[BigInt], d: &[BigInt]) -> Option<ZPoly> {
    let mut r = a.to_vec();
    if r.len() < d.len() {
        return if r.is_empty() { Some(vec![]) } else { None };
    }
    let ld = d.last().unwrap();
    let dd = d.len();
    let mut q = vec![BigInt::zero(); r.len() - dd + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + dd - 1];
        if top.is_zero() {
            continue;
        }
        let (qk, rem) = top.div_rem(ld);
        if !rem.is_zero() {
            return None;
        }
        for (i, b) in d.iter().enumerate() {
            r[k + i] -= &qk * b;
        }
        q[k] = qk;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(ztrim(q))
    } else {
        None
    }
}

/// Primitive integer polynomial with positive leading coefficient.
fn upoly_to_z(f: &UPoly) -> ZPoly {
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.as_rational().expect("rational coefficients").denom());
    }
    let v: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| {
            let q = c.as_rational().unwrap();
            q.numer() * (&den / q.denom())
        })
        .collect();
    zprimitive(&v)
}

fn z_to_upoly(a: &[BigInt]) -> UPoly {
    UPoly::new(a.iter().map(|c| Scalar::Rat(Q::from_integer(c.clone()))).collect())
}

/// Multifactor linear Hensel lifting of `f ≡ lc·Π gᵢ (mod p)` to `mod p^k`.
fn hensel_lift(f: &[BigInt], gs: &[PolyP], fp: Fp, k: u32) -> Vec<ZPoly> {
    let p = BigInt::from(fp.p);
    let lc = f.last().unwrap().clone();
    let linv = fp.inv(lc.mod_floor(&p).to_u64().unwrap());
    let r = gs.len();
    let mut s = Vec::with_capacity(r);
    for i in 0..r {
        let h = (0..r).filter(|&j| j != i).fold(vec![1u64], |acc, j| fp.mul(&acc, &gs[j]));
        let (_, si, _) = fp.xgcd(&fp.rem(&h, &gs[i]), &gs[i]);
        s.push(si);
    }
    let mut lifted: Vec<ZPoly> =
        gs.iter().map(|g| g.iter().map(|&c| BigInt::from(c)).collect()).collect();
    let mut pm = p.clone();
    for _ in 1..k {
        let prod = lifted.iter().fold(vec![lc.clone()], |acc, g| zmul(&acc, g));
        let n = f.len().max(prod.len());
        let e: ZPoly = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                let d = a - b;
                debug_assert!((&d % &pm).is_zero());
                d / &pm
            })
            .collect();
        let ep = to_modp(&e, fp.p);
        if !ep.is_empty() {
            let ep = fp.scale(&ep, linv);
            for i in 0..r {
                let d = fp.rem(&fp.mul(&ep, &s[i]), &gs[i]);
                let g = &mut lifted[i];
                for (j, c) in d.iter().enumerate() {
                    if j >= g.len() {
                        g.resize(j + 1, BigInt::zero());
                    }
                    g[j] += &pm * BigInt::from(*c);
                }
            }
        }
        pm *= &p;
    }
    lifted
}

fn isqrt_ceil(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &(&r * &r) == n {
        r
    } else {
        r + 1
    }
}

/// Irreducible factors over Z of a primitive squarefree polynomial with
/// positive leading coefficient.
fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7047_5a55);
    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes(20000) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fm = to_modp(f, p);
        if fp.gcd(&fm, &fp.derivative(&fm)).len() != 1 {
            continue;
        }
        let fs = fp.factor_squarefree(&fm, &mut rng);
        if fs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((fp, fs));
        }
        tried += 1;
        if tried == 4 {
            break;
        }
    }
    let (fp, gs) = best.expect("a good prime exists for a squarefree polynomial");

    // Coefficient bound for factors, times the leading coefficient.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * isqrt_ceil(&norm2) * lc.abs();
    let p = BigInt::from(fp.p);
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= &bound * 2 {
        pk *= &p;
        k += 1;
    }
    let lifted = hensel_lift(f, &gs, fp, k);

    let mut remaining: Vec<ZPoly> = lifted;
    let mut cur = f.to_vec();
    let mut out = vec![];
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = None;
        for subset in combinations(remaining.len(), size) {
            let lcc = cur.last().unwrap().clone();
            let prod = subset.iter().fold(vec![lcc], |acc, &i| zmul(&acc, &remaining[i]));
            let cand: ZPoly = ztrim(prod.iter().map(|c| sym_mod(c, &pk)).collect());
            let cand = zprimitive(&cand);
            if cand.len() < 2 {
                continue;
            }
            if let Some(q) = zdiv(&cur, &cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                cur = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if cur.len() > 1 {
        out.push(zprimitive(&cur));
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn upoly_key(f: &UPoly) -> (usize, Vec<String>) {
    (f.degree().unwrap_or(0), f.coeffs().iter().map(|c| c.to_string()).collect())
}

/// Irreducible factorization over Q of a rational univariate polynomial.
/// Factors are primitive integer polynomials with positive leading
/// coefficient, sorted by degree then coefficients.
pub fn factor_upoly(f: &UPoly) -> Result<Vec<(UPoly, usize)>> {
    if f.is_zero() {
        return Err(AlgebraError::Invalid("factorization of zero".into()));
    }
    if !f.is_rational() {
        return Err(AlgebraError::Unsupported("factorization over a number field".into()));
    }
    let mut out = vec![];
    for (g, m) in f.squarefree_decomposition() {
        let z = upoly_to_z(&g);
        for h in zassenhaus(&z) {
            out.push((z_to_upoly(&h), m));
        }
    }
    out.sort_by_key(|a| upoly_key(&a.0));
    Ok(out)
}

/// Irreducibility over Q of the polynomial with the given ascending
/// coefficients.
pub fn is_irreducible_q(coeffs: &[Q]) -> bool {
    let f = UPoly::new(coeffs.iter().cloned().map(Scalar::Rat).collect());
    match f.degree() {
        None | Some(0) => false,
        Some(d) => match factor_upoly(&f) {
            Ok(fs) => fs.len() == 1 && fs[0].1 == 1 && fs[0].0.degree() == Some(d),
            Err(_) => false,
        },
    }
}

/// Rational roots with multiplicities, in increasing order.
pub fn rational_roots(f: &UPoly) -> Result<Vec<(Q, usize)>> {
    let mut out: Vec<(Q, usize)> = factor_upoly(f)?
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, m)| {
            let r = -(g.coeff(0) / g.coeff(1));
            (r.as_rational().unwrap().clone(), m)
        })
        .collect();
    out.sort();
    Ok(out)
}

fn poly_key(p: &Poly) -> (i32, String) {
    (p.total_degree().unwrap_or(0), p.to_string())
}

/// Irreducible factorization over Q of a polynomial in at most two
/// variables. Factors are normalized by [`Poly::normalize_unit`]; the
/// product of `factor^multiplicity` equals the input up to a rational unit.
pub fn factor_rational(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if p.is_zero() {
        return Err(AlgebraError::Invalid("factorization of zero".into()));
    }
    if !p.is_rational() {
        return Err(AlgebraError::Unsupported("factorization over a number field".into()));
    }
    if !p.is_polynomial() {
        return Err(AlgebraError::Invalid("factorization of a Laurent polynomial".into()));
    }
    let vars = p.used_vars();
    if vars.len() > 2 {
        return Err(AlgebraError::Unsupported("factorization in more than two variables".into()));
    }
    let sf = squarefree_part(p);
    let mut irreducible = factor_squarefree(&sf)?;
    irreducible.sort_by_key(poly_key);
    let mut out = vec![];
    for f in irreducible {
        let mut q = p.clone();
        let mut m = 0;
        while let Ok(r) = q.div_exact(&f) {
            q = r;
            m += 1;
        }
        out.push((f, m));
    }
    Ok(out)
}

/// Irreducible factors of a squarefree polynomial in at most two variables.
pub fn factor_squarefree(p: &Poly) -> Result<Vec<Poly>> {
    let vars = p.used_vars();
    match vars.len() {
        0 => Ok(vec![]),
        1 => {
            let v = &vars[0];
            let u = p.to_upoly(v)?;
            Ok(factor_upoly(&u)?
                .into_iter()
                .map(|(g, _)| Poly::from_upoly(v, &g).normalize_unit())
                .collect())
        }
        2 => {
            let (a, b) = (&vars[0], &vars[1]);
            let (y, x) = if p.degree(a) <= p.degree(b) { (a, b) } else { (b, a) };
            let c = content_in(p, y);
            let mut out = factor_squarefree(&c)?;
            let pp = p.div_exact(&c)?;
            if pp.has_var(x) {
                out.extend(bivariate(&pp, x, y)?);
            } else {
                out.extend(factor_squarefree(&pp)?);
            }
            Ok(out.into_iter().map(|f| f.normalize_unit()).collect())
        }
        _ => Err(AlgebraError::Unsupported("factorization in more than two variables".into())),
    }
}

fn series_mul(a: &[UPoly], b: &[UPoly], k: usize) -> Vec<UPoly> {
    let mut out = vec![UPoly::zero(); k];
    for (i, x) in a.iter().enumerate().take(k) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= k {
                break;
            }
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// Factors a squarefree bivariate polynomial, primitive in `y` and of
/// positive degree in both variables.
fn bivariate(pp: &Poly, x: &str, y: &str) -> Result<Vec<Poly>> {
    let n = pp.degree(y).unwrap();
    if n == 1 {
        return Ok(vec![pp.clone()]);
    }
    let lc = pp.lead_in(y);
    // F(x, Y) = lc^{n-1} pp(x, Y/lc), monic in Y.
    let mut f = Poly::zero();
    for (k, c) in pp.coeffs_in(y) {
        let scaled = if k == n { Poly::one() } else { c.mul(&lc.pow((n - 1 - k) as u32)) };
        f = f.add(&scaled.shift(&[(y, k)]));
    }

    let mut x0 = None;
    for i in 0..200i64 {
        let cand = if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 };
        let s = Scalar::int(cand);
        let f0 = f.eval(x, &s)?.to_upoly(y)?;
        if f0.degree() == Some(n as usize) && f0.gcd(&f0.derivative()).degree() == Some(0) {
            x0 = Some(cand);
            break;
        }
    }
    let x0 = x0.ok_or_else(|| AlgebraError::Unsupported("no good specialization point".into()))?;
    let f0 = f.eval(x, &Scalar::int(x0))?.to_upoly(y)?;
    let gs: Vec<UPoly> = factor_upoly(&f0)?.into_iter().map(|(g, _)| g.monic()).collect();
    if gs.len() == 1 {
        return Ok(vec![pp.clone()]);
    }

    let z = "__z";
    let shifted = f.subs(x, &Poly::var(z).add(&Poly::int(x0)))?;
    let dz = shifted.degree(z).unwrap() as usize;
    let kprec = dz + 1;
    let mut fz: Vec<UPoly> = vec![UPoly::zero(); kprec];
    for (k, c) in shifted.coeffs_in(z) {
        fz[k as usize] = c.to_upoly(y)?;
    }

    // Linear Hensel lifting in z.
    let r = gs.len();
    let mut s = Vec::with_capacity(r);
    for i in 0..r {
        let h = (0..r).filter(|&j| j != i).fold(UPoly::constant(Scalar::one()), |acc, j| acc.mul(&gs[j]));
        let (g, si, _) = h.rem(&gs[i])?.xgcd(&gs[i]);
        debug_assert_eq!(g.degree(), Some(0));
        s.push(si);
    }
    let mut lifted: Vec<Vec<UPoly>> = gs.iter().map(|g| vec![g.clone()]).collect();
    for (m, fm) in fz.iter().enumerate().take(kprec).skip(1) {
        let prod = lifted.iter().fold(vec![UPoly::constant(Scalar::one())], |acc, g| series_mul(&acc, g, m + 1));
        let e = fm.sub(prod.get(m).unwrap_or(&UPoly::zero()));
        for ((l, si), gi) in lifted.iter_mut().zip(&s).zip(gs.iter()) {
            let d = if e.is_zero() { UPoly::zero() } else { e.mul(si).rem(gi)? };
            l.push(d);
        }
    }
    let to_poly = |g: &[UPoly]| -> Poly {
        let mut out = Poly::zero();
        for (k, c) in g.iter().enumerate() {
            out = out.add(&Poly::from_upoly(y, c).shift(&[(z, k as i32)]));
        }
        out
    };

    let mut cur = shifted.clone();
    let mut remaining: Vec<Vec<UPoly>> = lifted;
    let mut found_factors = vec![];
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit = None;
        for subset in combinations(remaining.len(), size) {
            let prod = subset
                .iter()
                .fold(vec![UPoly::constant(Scalar::one())], |acc, &i| series_mul(&acc, &remaining[i], kprec));
            let cand = to_poly(&prod);
            if let Ok(q) = cur.div_exact(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found_factors.push(cand);
                cur = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    found_factors.push(cur);

    let back = Poly::var(x).sub(&Poly::int(x0));
    let ly = lc.mul(&Poly::var(y));
    let mut out = vec![];
    for h in found_factors {
        let hx = h.subs(z, &back)?;
        let g = hx.subs(y, &ly)?;
        out.push(crate::gcd::primitive_part_in(&g, y));
    }
    Ok(out)
}
