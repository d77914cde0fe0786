//! Exact arithmetic foundation for torvar.
//!
//! Rationals and simple number fields ([`scalar`]), sparse multivariate and
//! Laurent polynomials ([`poly`]), dense univariate polynomials ([`upoly`]),
//! gcd, resultants and factorization over Q, truncated Laurent series, and
//! small matrices including valuations of determinants over power series.

pub mod error;
pub mod factor;
pub mod gcd;
pub mod matrix;
pub mod modp;
pub mod poly;
pub mod resultant;
pub mod scalar;
pub mod series;
pub mod series_matrix;
pub mod upoly;

pub use error::{AlgebraError, Result};
pub use factor::{factor_rational, factor_upoly, is_irreducible_q, rational_roots};
pub use gcd::{gcd, squarefree_part};
pub use matrix::Matrix;
pub use poly::Poly;
pub use resultant::resultant;
pub use scalar::{frac, rat, NfElem, NumberField, Scalar, Q};
pub use series::Series;
pub use series_matrix::{det_valuation_series, DetValuation};
pub use upoly::UPoly;
