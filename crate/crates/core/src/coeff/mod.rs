//! The coefficient field: rational functions in `q` and `u = γ^{1/2}`.
//!
//! Central elements of the algebra (powers of γ) live here rather than in
//! words, so `γ^k` is simply `u^{2k}`.

mod laurent;
mod ratfunc;
mod upoly;

pub use laurent::{Exponents, LaurentPoly};
pub use ratfunc::{rf_add, rf_eval, rf_inv, rf_mul, RatFunc};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("evaluation point must have nonzero q and u")]
    ZeroEvaluationPoint,
}

/// The quantum integer `[n] = (q^n - q^-n)/(q - q^-1)`, returned as
/// the Laurent polynomial `q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn qint(n: i64) -> RatFunc {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    let poly = LaurentPoly::from_terms((0..m).map(|i| ((m - 1 - 2 * i, 0), BigInt::from(sign))));
    RatFunc::from_poly(poly)
}
