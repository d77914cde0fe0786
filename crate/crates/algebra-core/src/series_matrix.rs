//! Valuation of determinants of matrices over truncated power series.
//!
//! The kernel filtration: eliminate every pivot that is a unit in `k[[t]]`
//! (Schur complements keep the determinant up to a unit), leaving a block
//! `B ≡ 0 mod t` of size `r_i = dim ker A_i(0)`. Then `det A_i = unit · t^{r_i}
//! det(B/t)`, and the process restarts on `A_{i+1} = B/t` until the block is
//! empty. The certificate `(r_0, r_1, …, 0)` sums to `v(det A)`.

use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetValuation {
    pub valuation: i64,
    /// Kernel dimensions `r_i`, ending with the terminal `0`.
    pub certificate: Vec<usize>,
}

/// Valuation of `det A` with its kernel-filtration certificate.
pub fn det_valuation_series(a: &Matrix<Series>) -> Result<DetValuation> {
    if a.rows() != a.cols() {
        return Err(AlgebraError::Invalid("series matrix must be square".into()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(DetValuation { valuation: 0, certificate: vec![0] });
    }
    let mut entries: Vec<Series> = (0..n * n).map(|k| a.get(k / n, k % n).clone()).collect();
    if entries.iter().all(|s| s.is_indistinguishable_from_zero()) {
        return Err(AlgebraError::ZeroDeterminant);
    }

    // Shift so every entry lies in k[[t]].
    let low = entries.iter().filter_map(|s| s.val_lower_bound()).min().unwrap();
    let mut valuation = 0i64;
    if low < 0 {
        entries = entries.iter().map(|s| s.shift(-low)).collect();
        valuation += n as i64 * low;
    }

    // Exact entries need a working truncation before inversion. A nonzero
    // determinant of exact entries has valuation at most the row-degree sum,
    // and each filtration step consumes one order.
    let finite = entries.iter().filter_map(|s| s.prec()).max();
    let cap = match finite {
        Some(p) => p,
        None => {
            let d: i64 = (0..n)
                .map(|i| {
                    (0..n)
                        .filter_map(|j| entries[i * n + j].terms().last().map(|(&k, _)| k))
                        .max()
                        .unwrap_or(0)
                })
                .sum();
            d + 2
        }
    };
    let required = cap + 1;
    entries = entries.into_iter().map(|s| if s.is_exact() { s.truncate(cap) } else { s }).collect();

    let mut cur = Matrix::new(n, n, entries);
    let mut certificate = vec![];
    loop {
        let block = eliminate_units(cur, required)?;
        let r = block.rows();
        certificate.push(r);
        if r == 0 {
            break;
        }
        let all: Vec<&Series> = (0..r * r).map(|k| block.get(k / r, k % r)).collect();
        if all.iter().all(|s| s.is_indistinguishable_from_zero()) {
            return Err(AlgebraError::ZeroDeterminant);
        }
        valuation += r as i64;
        cur = block.map(|s| s.shift(-1));
    }
    Ok(DetValuation { valuation, certificate })
}

/// Pivots on unit entries until none remain; returns the residual block,
/// every entry of which is divisible by `t`.
fn eliminate_units(mut m: Matrix<Series>, required: i64) -> Result<Matrix<Series>> {
    loop {
        let k = m.rows();
        if k == 0 {
            return Ok(m);
        }
        let mut pivot = None;
        let mut undecided = false;
        'search: for i in 0..k {
            for j in 0..k {
                let s = m.get(i, j);
                match s.coeff(0) {
                    Ok(c) if !c.is_zero() => {
                        pivot = Some((i, j));
                        break 'search;
                    }
                    Ok(_) => {}
                    Err(_) => {
                        if !s.is_indistinguishable_from_zero() || s.prec().is_some_and(|p| p <= 0) {
                            undecided = true;
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            if undecided {
                return Err(AlgebraError::InsufficientPrecision { required });
            }
            return Ok(m);
        };
        let inv = m.get(pi, pj).inv()?;
        let rows: Vec<usize> = (0..k).filter(|&i| i != pi).collect();
        let cols: Vec<usize> = (0..k).filter(|&j| j != pj).collect();
        let mut next = Matrix::zeros(k - 1, k - 1);
        for (a, &i) in rows.iter().enumerate() {
            let f = m.get(i, pj).mul(&inv);
            for (b, &j) in cols.iter().enumerate() {
                next.set(a, b, m.get(i, j).sub(&f.mul(m.get(pi, j))));
            }
        }
        m = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn poly(c: &[(i64, i64)]) -> Series {
        Series::exact(c.iter().map(|&(k, x)| (k, Scalar::int(x))))
    }

    fn mat(rows: Vec<Vec<Series>>) -> Matrix<Series> {
        Matrix::from_rows(rows)
    }

    #[test]
    fn diagonal_t_one() {
        let a = mat(vec![vec![poly(&[(1, 1)]), poly(&[])], vec![poly(&[]), poly(&[(0, 1)])]]);
        let d = det_valuation_series(&a).unwrap();
        assert_eq!(d, DetValuation { valuation: 1, certificate: vec![1, 0] });
    }

    #[test]
    fn jordan_block_in_t() {
        let a = mat(vec![vec![poly(&[(1, 1)]), poly(&[(0, 1)])], vec![poly(&[]), poly(&[(1, 1)])]]);
        let d = det_valuation_series(&a).unwrap();
        assert_eq!(d.valuation, 2);
        assert_eq!(d.certificate, vec![1, 1, 0]);
    }

    #[test]
    fn singular_matrix_is_reported() {
        let a = mat(vec![vec![poly(&[(2, 1)]), poly(&[(1, 1)])], vec![poly(&[(1, 1)]), poly(&[(0, 1)])]]);
        assert_eq!(det_valuation_series(&a), Err(AlgebraError::ZeroDeterminant));
    }

    #[test]
    fn derivative_recipe_counterexample() {
        // [[1, t], [t, t^2 + t^3]] has det t^3, while dim ker A(0) = 1 and
        // the naive derivative filtration stalls after one step.
        let a = mat(vec![
            vec![poly(&[(0, 1)]), poly(&[(1, 1)])],
            vec![poly(&[(1, 1)]), poly(&[(2, 1), (3, 1)])],
        ]);
        let d = det_valuation_series(&a).unwrap();
        assert_eq!(d.valuation, 3);
        assert_eq!(d.certificate, vec![1, 1, 1, 0]);
    }

    #[test]
    fn truncated_entries_exhaust_precision() {
        // Unit pivot known, the rest only known modulo t^0.
        let a = mat(vec![
            vec![poly(&[(0, 1)]), Series::big_o(0)],
            vec![Series::new([(0, Scalar::int(1))], Some(1)), Series::new([(0, Scalar::int(1))], Some(1))],
        ]);
        assert!(matches!(
            det_valuation_series(&a),
            Err(AlgebraError::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn laurent_entries_shift() {
        let a = mat(vec![vec![poly(&[(-1, 1)]), poly(&[])], vec![poly(&[]), poly(&[(2, 1)])]]);
        assert_eq!(det_valuation_series(&a).unwrap().valuation, 1);
    }
}
