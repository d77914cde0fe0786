//! Dense polynomials over a prime field `F_p` (odd `p < 2^31`), with
//! distinct-degree and Cantor–Zassenhaus equal-degree factorization.

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Ascending coefficients in `[0, p)`, no trailing zeros.
pub type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

fn trim(mut v: PolyP) -> PolyP {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        assert!(p > 2 && p < (1 << 31), "unsupported modulus {p}");
        Fp { p }
    }

    pub fn reduce_i(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn addm(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn subm(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod p");
        let mut r = 1u64;
        let mut b = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulm(r, b);
            }
            b = self.mulm(b, b);
            e >>= 1;
        }
        r
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| self.addm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| self.subm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.addm(out[i + j], self.mulm(x, y));
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &[u64], s: u64) -> PolyP {
        trim(a.iter().map(|&x| self.mulm(x, s)).collect())
    }

    pub fn divrem(&self, a: &[u64], d: &[u64]) -> (PolyP, PolyP) {
        assert!(!d.is_empty(), "division by zero polynomial");
        let mut r = a.to_vec();
        if r.len() < d.len() {
            return (vec![], trim(r));
        }
        let li = self.inv(*d.last().unwrap());
        let dd = d.len();
        let mut q = vec![0u64; r.len() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = self.mulm(r[k + dd - 1], li);
            if top == 0 {
                continue;
            }
            for (i, &b) in d.iter().enumerate() {
                r[k + i] = self.subm(r[k + i], self.mulm(top, b));
            }
            q[k] = top;
        }
        r.truncate(dd - 1);
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &[u64], d: &[u64]) -> PolyP {
        self.divrem(a, d).1
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => vec![],
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn xgcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], vec![]);
        let (mut t0, mut t1) = (vec![], vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let li = self.inv(*r0.last().expect("xgcd of zeros"));
        (self.scale(&r0, li), self.scale(&s0, li), self.scale(&t0, li))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        trim(a.iter().enumerate().skip(1).map(|(i, &x)| self.mulm(x, i as u64 % self.p)).collect())
    }

    /// `base^e mod m`.
    pub fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> PolyP {
        let mut acc = vec![1u64];
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
        }
        self.rem(&acc, m)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub fn ddf(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = vec![];
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 1;
        while f.len() > 2 * d {
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                out.push((g.clone(), d));
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
            }
            d += 1;
        }
        if f.len() > 1 {
            let deg = f.len() - 1;
            out.push((f, deg));
        }
        out
    }

    /// Splits a monic product of distinct degree-`d` irreducibles.
    pub fn edf(&self, g: &[u64], d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyP> {
        let n = g.len() - 1;
        if n == d {
            return vec![g.to_vec()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: PolyP = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &e, g), &[1]);
            let c = self.gcd(&b, g);
            if c.len() > 1 && c.len() < g.len() {
                let rest = self.divrem(g, &c).0;
                let mut out = self.edf(&c, d, rng);
                out.extend(self.edf(&self.monic(&rest), d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial.
    pub fn factor_squarefree(&self, f: &[u64], rng: &mut ChaCha8Rng) -> Vec<PolyP> {
        let f = self.monic(f);
        let mut out = vec![];
        for (g, d) in self.ddf(&f) {
            out.extend(self.edf(&g, d, rng));
        }
        out.sort();
        out
    }
}

/// Odd primes up to `limit`.
pub fn small_primes(limit: u64) -> Vec<u64> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut out = vec![];
    for i in 2..=limit as usize {
        if sieve[i] {
            if i > 2 {
                out.push(i as u64);
            }
            let mut j = i * i;
            while j <= limit as usize {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn splits_x4_minus_1_mod_5() {
        let f = Fp::new(5);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x4m1 = vec![4, 0, 0, 0, 1];
        let fs = f.factor_squarefree(&x4m1, &mut rng);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(vec![1u64], |acc, g| f.mul(&acc, g));
        assert_eq!(prod, x4m1);
    }

    #[test]
    fn irreducible_quadratic_mod_7() {
        let f = Fp::new(7);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // x^2 + 1 is irreducible since 7 ≡ 3 mod 4.
        assert_eq!(f.factor_squarefree(&[1, 0, 1], &mut rng), vec![vec![1, 0, 1]]);
    }

    #[test]
    fn xgcd_bezout() {
        let f = Fp::new(11);
        let a = vec![1, 2, 1];
        let b = vec![3, 1];
        let (g, s, t) = f.xgcd(&a, &b);
        assert_eq!(f.add(&f.mul(&s, &a), &f.mul(&t, &b)), g);
    }
}
