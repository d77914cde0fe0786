//! Small dense matrices over the crate's rings.

use crate::error::{AlgebraError, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::series::Series;
use crate::upoly::UPoly;
use std::fmt;

/// Commutative ring operations used by the matrix routines.
pub trait Ring: Clone + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Rings with exact division by known divisors (integral domains).
pub trait ExactDiv: Ring {
    fn div_exact(&self, o: &Self) -> Result<Self>;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl ExactDiv for Scalar {
    fn div_exact(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl ExactDiv for Poly {
    fn div_exact(&self, o: &Self) -> Result<Self> {
        Poly::div_exact(self, o)
    }
}

impl Ring for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::constant(Scalar::one())
    }
    fn add(&self, o: &Self) -> Self {
        UPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        UPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        UPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        UPoly::neg(self)
    }
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
    }
}

impl ExactDiv for UPoly {
    fn div_exact(&self, o: &Self) -> Result<Self> {
        UPoly::div_exact(self, o)
    }
}

impl Ring for Series {
    fn zero() -> Self {
        Series::exact([])
    }
    fn one() -> Self {
        Series::constant(Scalar::one())
    }
    fn add(&self, o: &Self) -> Self {
        Series::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Series::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Series::mul(self, o)
    }
    fn neg(&self) -> Self {
        Series::neg(self)
    }
    fn is_zero(&self) -> bool {
        Series::is_zero(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Matrix<T> {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Matrix<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix<T> {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut m = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(o.get(k, j)));
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    pub fn add(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &T) -> Matrix<T> {
        self.map(|a| a.mul(s))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<T> {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    /// Stacks `self` above `o`.
    pub fn vstack(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Places `o` to the right of `self`.
    pub fn hstack(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.rows, o.rows);
        let mut data = Vec::with_capacity(self.rows * (self.cols + o.cols));
        for i in 0..self.rows {
            for j in 0..self.cols {
                data.push(self.get(i, j).clone());
            }
            for j in 0..o.cols {
                data.push(o.get(i, j).clone());
            }
        }
        Matrix { rows: self.rows, cols: self.cols + o.cols, data }
    }

    /// Leibniz expansion; meant for n ≤ 6 and for rings without division.
    pub fn det_leibniz(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut acc = T::zero();
        let mut c = vec![0usize; n];
        let mut sign = true;
        let term = |p: &[usize]| -> T {
            let mut t = T::one();
            for (i, &j) in p.iter().enumerate() {
                t = t.mul(self.get(i, j));
                if t.is_zero() {
                    break;
                }
            }
            t
        };
        acc = acc.add(&term(&perm));
        // Heap's algorithm; each swap flips the sign.
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                sign = !sign;
                let t = term(&perm);
                acc = if sign { acc.add(&t) } else { acc.sub(&t) };
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        acc
    }

    /// Cofactor expansion along the first row, recursively.
    pub fn det_cofactor(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        match n {
            0 => T::one(),
            1 => self.get(0, 0).clone(),
            2 => self.get(0, 0).mul(self.get(1, 1)).sub(&self.get(0, 1).mul(self.get(1, 0))),
            _ => {
                let mut acc = T::zero();
                let rows: Vec<usize> = (1..n).collect();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&k| k != j).collect();
                    let m = self.select(&rows, &cols).det_cofactor().mul(a);
                    acc = if j % 2 == 0 { acc.add(&m) } else { acc.sub(&m) };
                }
                acc
            }
        }
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(AlgebraError::Invalid("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    None => return Ok(T::zero()),
                    Some(i) => {
                        for j in 0..n {
                            a.data.swap(k * n + j, i * n + j);
                        }
                        negate = !negate;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a.get(i, j).mul(a.get(k, k)).sub(&a.get(i, k).mul(a.get(k, j)));
                    a.set(i, j, v.div_exact(&prev)?);
                }
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Adjugate matrix (transpose of the cofactor matrix).
    pub fn adjugate(&self) -> Result<Matrix<T>> {
        let n = self.rows;
        let mut m = Matrix::zeros(n, n);
        if n == 1 {
            m.set(0, 0, T::one());
            return Ok(m);
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&k| k != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&k| k != i).collect();
                let d = self.select(&rows, &cols).det()?;
                m.set(i, j, if (i + j) % 2 == 0 { d } else { d.neg() });
            }
        }
        Ok(m)
    }
}

impl Matrix<Scalar> {
    /// Rank by Gaussian elimination over the coefficient field.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (m, n) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m).find(|&i| !a.get(i, c).is_zero()) else { continue };
            for j in 0..n {
                a.data.swap(r * n + j, p * n + j);
            }
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for i in 0..m {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c) * &inv;
                for j in c..n {
                    let v = a.get(i, j) - &(&f * a.get(r, j));
                    a.set(i, j, v);
                }
            }
            r += 1;
            if r == m {
                break;
            }
        }
        r
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut a = self.clone();
        let (m, n) = (self.rows, self.cols);
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m).find(|&i| !a.get(i, c).is_zero()) else { continue };
            for j in 0..n {
                a.data.swap(r * n + j, p * n + j);
            }
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for j in 0..n {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..m {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    let v = a.get(i, j) - &(&f * a.get(r, j));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m {
                break;
            }
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); n];
                v[f] = Scalar::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a.get(row, f);
                }
                v
            })
            .collect()
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    #[test]
    fn determinants_agree() {
        let a = m(&[&[2, -1, 0, 3], &[1, 4, 2, 0], &[0, 5, -3, 1], &[7, 0, 1, 2]]);
        let d = a.det().unwrap();
        assert_eq!(d, a.det_leibniz());
        assert_eq!(d, a.det_cofactor());
    }

    #[test]
    fn bareiss_over_polynomials() {
        let p = |s: &str| Poly::parse(s).unwrap();
        let a = Matrix::from_rows(vec![vec![p("x"), p("y")], vec![p("y"), p("x")]]);
        assert_eq!(a.det().unwrap(), p("x^2 - y^2"));
    }

    #[test]
    fn adjugate_inverts_up_to_determinant() {
        let a = m(&[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let d = a.det().unwrap();
        let prod = a.mul(&a.adjugate().unwrap());
        assert_eq!(prod, Matrix::identity(3).scale(&d));
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            let col = Matrix::new(3, 1, v);
            assert!(a.mul(&col).is_zero());
        }
    }
}
