//! Sylvester resultants and discriminants.

use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Builds the Sylvester matrix of `p` and `q` in `var`, rows of `p` first.
pub fn sylvester(p: &Poly, q: &Poly, var: &str) -> Result<Matrix<Poly>> {
    if !p.has_var(var) && !q.has_var(var) {
        return Err(AlgebraError::MissingVariable(var.to_string()));
    }
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::Invalid("resultant of a zero polynomial".into()));
    }
    if p.min_degree(var).unwrap() < 0 || q.min_degree(var).unwrap() < 0 {
        return Err(AlgebraError::Invalid(format!("negative powers of `{var}` in resultant")));
    }
    let m = p.degree(var).unwrap() as usize;
    let n = q.degree(var).unwrap() as usize;
    let pc = p.coeffs_in(var);
    let qc = q.coeffs_in(var);
    let size = m + n;
    let mut s = Matrix::zeros(size, size);
    for i in 0..n {
        for (&k, c) in &pc {
            s.set(i, i + m - k as usize, c.clone());
        }
    }
    for i in 0..m {
        for (&k, c) in &qc {
            s.set(n + i, i + n - k as usize, c.clone());
        }
    }
    Ok(s)
}

/// `Res_var(p, q)` as the determinant of the Sylvester matrix.
pub fn resultant(p: &Poly, q: &Poly, var: &str) -> Result<Poly> {
    let s = sylvester(p, q, var)?;
    if s.rows() == 0 {
        return Ok(Poly::one());
    }
    s.det()
}

/// `Res_var(p, ∂p/∂var)` (unnormalized discriminant).
pub fn discriminant(p: &Poly, var: &str) -> Result<Poly> {
    resultant(p, &p.derivative(var), var)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn linear_case() {
        // Sylvester [[1, -x], [1, -1]] has determinant x - 1.
        assert_eq!(resultant(&p("y - x"), &p("y - 1"), "y").unwrap(), p("x - 1"));
    }

    #[test]
    fn square_against_linear() {
        assert_eq!(resultant(&p("y^2"), &p("y - x"), "y").unwrap(), p("x^2"));
    }

    #[test]
    fn missing_variable() {
        assert_eq!(
            resultant(&p("x + 1"), &p("x - 1"), "y"),
            Err(AlgebraError::MissingVariable("y".into()))
        );
    }

    #[test]
    fn common_factor_gives_zero() {
        let f = p("(y - x)*(y + 2)");
        let g = p("(y - x)*(x*y - 3)");
        assert!(resultant(&f, &g, "y").unwrap().is_zero());
    }

    #[test]
    fn constant_in_var() {
        assert_eq!(resultant(&p("y^3 + x"), &p("x + 2"), "y").unwrap(), p("(x + 2)^3"));
    }
}
