//! Exact arithmetic: big integers, polynomials in the interpolation
//! parameter, multivariate Laurent polynomials with half-integer exponents,
//! truncated power series, exact division, and determinants.

mod coeff;
mod laurent;
mod matrix;
mod series;

pub use coeff::Coefficient;
pub use laurent::LaurentPoly;
pub use matrix::{det_auto, det_bareiss, det_cofactor, ExactDiv, RingElem, SquareMatrix};
pub use series::{geometric, inverse_one_minus, TruncatedSeries};

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("structural mismatch: {detail}")]
    ShapeMismatch { detail: String },
    #[error("inexact division")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square: {detail}")]
    NonSquare { detail: String },
    #[error("expected an ordinary polynomial (integral, nonnegative exponents)")]
    NotPolynomial,
    #[error("coefficient still depends on the parameter")]
    AlphaNotInteger,
}
