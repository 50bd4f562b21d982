//! Exact integer polynomials, truncated power series, closed-form Poincare
//! series, rational-form fitting and cyclotomic trial division.
//!
//! All arithmetic is on `i64` with checked operations; overflow is reported
//! as [`SeriesError::Overflow`], never wrapped.

mod cyclotomic;
mod fit;
mod poincare;
mod poly;
mod truncated;

pub use cyclotomic::{cyclotomic, cyclotomic_table, cyclotomic_trial_division, CyclotomicFactor, CyclotomicSplit};
pub use fit::{ratio_fit, ratio_fit_series, RatioFitResult, Verdict, DEFAULT_MIN_MARGIN};
pub use poincare::{affine_poincare, finite_poincare};
pub use poly::{expand_factored, CoeffsJson, IntPolynomial};
pub use truncated::{series_div, series_mul, SeriesOperand, TruncatedSeries};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("integer overflow in series arithmetic")]
    Overflow,
    #[error("series has no coefficients")]
    EmptySeries,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("divisor leading coefficient {0} is not +1 or -1")]
    NonUnitLeadingCoefficient(i64),
    #[error("denominator constant term {0} is not +1 or -1")]
    NonUnitConstantTerm(i64),
    #[error("requested order {requested} exceeds known precision {available}")]
    InsufficientPrecision { requested: usize, available: usize },
    #[error("series order {order} is below the required {required}")]
    InsufficientOrder { order: usize, required: usize },
    #[error("invariant degree {0} is below 2")]
    InvalidDegree(u32),
    #[error("growth coefficient {0} does not fit in i64")]
    CoefficientTooLarge(u64),
}
