//! Fitting a growth series to the rational form `P(G) / P_N(t)`.
//!
//! Given the Poincare polynomial `P(G)` of a finite candidate and a growth
//! series `H` known through `t^n`, the quotient `q = P(G) / H` is expanded
//! through `t^n`. When its coefficients vanish from some degree `N + 1`
//! onwards, with at least `min_margin` verified zeros, `q` is reported as the
//! polynomial `P_N`. Otherwise the verdict records which of the top
//! `min_margin` coefficients are nonzero. Neither verdict is a proof: both
//! only describe the inspected window.

use serde::Serialize;

use super::{series_div, series_mul, IntPolynomial, SeriesError, TruncatedSeries};
use crate::weyl::GrowthSeries;

/// Default number of trailing zero coefficients required for a polynomial
/// verdict.
pub const DEFAULT_MIN_MARGIN: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Polynomial,
    NonTerminating,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioFitResult {
    pub verdict: Verdict,
    /// `P_N`, present for a polynomial verdict.
    pub quotient: Option<IntPolynomial>,
    /// `N`, present for a polynomial verdict.
    pub degree: Option<usize>,
    /// Number of zero quotient coefficients after the last nonzero one.
    pub margin_checked: usize,
    /// Indices of nonzero coefficients among the top `min_margin`, present
    /// (and non-empty) for a non-terminating verdict.
    pub evidence: Vec<usize>,
    /// Highest order inspected.
    pub order: usize,
    pub min_margin: usize,
    /// The full expanded quotient through `order`.
    pub expansion: TruncatedSeries,
}

/// Fits `finite_poly / growth`. A complete (finite) growth series is exact to
/// every order and gets zero-padded as far as needed.
pub fn ratio_fit(
    finite_poly: &IntPolynomial,
    growth: &GrowthSeries,
    min_margin: usize,
) -> Result<RatioFitResult, SeriesError> {
    let mut series = growth.to_series()?;
    if growth.complete {
        let needed = finite_poly.degree().unwrap_or(0) + min_margin;
        if series.order() < needed {
            series = TruncatedSeries::from_polynomial(&series.to_polynomial(), needed);
        }
    }
    ratio_fit_series(finite_poly, &series, min_margin)
}

pub fn ratio_fit_series(
    finite_poly: &IntPolynomial,
    growth: &TruncatedSeries,
    min_margin: usize,
) -> Result<RatioFitResult, SeriesError> {
    let deg = finite_poly.degree().ok_or(SeriesError::ZeroPolynomial)?;
    let order = growth.order();
    if growth.coeff(0) != 1 {
        return Err(SeriesError::NonUnitConstantTerm(growth.coeff(0)));
    }
    if order < deg + min_margin {
        return Err(SeriesError::InsufficientOrder { order, required: deg + min_margin });
    }
    let q = series_div(finite_poly, growth, order)?;
    // q[0] = finite_poly[0] / 1 is nonzero for any Poincare polynomial, but a
    // caller may pass anything; an all-zero expansion is a degree-0 quotient.
    let last = q.coeffs().iter().rposition(|&c| c != 0).unwrap_or(0);
    let margin_checked = order - last;
    if margin_checked >= min_margin {
        let quotient = IntPolynomial::new(q.coeffs()[..=last].to_vec());
        Ok(RatioFitResult {
            verdict: Verdict::Polynomial,
            degree: quotient.degree().or(Some(0)),
            quotient: Some(quotient),
            margin_checked,
            evidence: Vec::new(),
            order,
            min_margin,
            expansion: q,
        })
    } else {
        let window_start = order + 1 - min_margin;
        let evidence = (window_start..=order).filter(|&i| q.coeff(i) != 0).collect();
        Ok(RatioFitResult {
            verdict: Verdict::NonTerminating,
            quotient: None,
            degree: None,
            margin_checked,
            evidence,
            order,
            min_margin,
            expansion: q,
        })
    }
}

impl RatioFitResult {
    /// Multiplies the quotient back against the growth series; for a
    /// polynomial verdict this reproduces the finite polynomial through
    /// `order`.
    pub fn reconstruct(&self, growth: &TruncatedSeries) -> Result<Option<TruncatedSeries>, SeriesError> {
        match &self.quotient {
            Some(q) => Ok(Some(series_mul(&growth.truncate(self.order), q)?)),
            None => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{finite_poincare, IntPolynomial};

    #[test]
    fn exact_polynomial_ratio() {
        // growth = P / Q with Q = 1 - t - t^3
        let p = finite_poincare(&[2, 3]).unwrap();
        let q = IntPolynomial::new(vec![1, -1, 0, -1]);
        let growth = series_div(&p, &q, 15).unwrap();
        let fit = ratio_fit_series(&p, &growth, 5).unwrap();
        assert_eq!(fit.verdict, Verdict::Polynomial);
        assert_eq!(fit.quotient.as_ref(), Some(&q));
        assert_eq!(fit.degree, Some(3));
        assert_eq!(fit.margin_checked, 12);
        let back = fit.reconstruct(&growth).unwrap().unwrap();
        assert_eq!(back, TruncatedSeries::from_polynomial(&p, 15));
    }

    #[test]
    fn non_terminating_has_evidence() {
        // (1 + t^2)/(1 + t) does not terminate
        let growth = TruncatedSeries::from_polynomial(&IntPolynomial::new(vec![1, 1]), 11);
        let fit = ratio_fit_series(&IntPolynomial::new(vec![1, 0, 1]), &growth, 5).unwrap();
        assert_eq!(fit.verdict, Verdict::NonTerminating);
        assert!(!fit.evidence.is_empty());
        assert!(fit.evidence.iter().all(|&i| (7..=11).contains(&i)));
        assert!(fit.quotient.is_none());
    }

    #[test]
    fn insufficient_order() {
        let growth = TruncatedSeries::new(vec![1, 2, 2]).unwrap();
        let err = ratio_fit_series(&IntPolynomial::new(vec![1, 1]), &growth, 5).unwrap_err();
        assert_eq!(err, SeriesError::InsufficientOrder { order: 2, required: 6 });
        assert_eq!(
            ratio_fit_series(&IntPolynomial::zero(), &growth, 1).unwrap_err(),
            SeriesError::ZeroPolynomial
        );
    }
}
