use serde::{Deserialize, Serialize};

use super::{IntPolynomial, SeriesError};

/// Power series known exactly through `t^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    /// `coeffs` must be non-empty; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<i64>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptySeries);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Pads or truncates a polynomial to exactly `order + 1` coefficients.
    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(|i| p.coeff(i)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Reads the coefficients as a polynomial (trailing zeros dropped).
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }
}

/// Anything that can serve as a multiplicand or divisor in series arithmetic.
/// Polynomials are exact to every order; truncated series only to their own.
pub trait SeriesOperand {
    fn coeff_at(&self, i: usize) -> i64;
    /// Highest order known exactly, `None` when exact to every order.
    fn precision(&self) -> Option<usize>;
}

impl SeriesOperand for TruncatedSeries {
    fn coeff_at(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn precision(&self) -> Option<usize> {
        Some(self.order())
    }
}

impl SeriesOperand for IntPolynomial {
    fn coeff_at(&self, i: usize) -> i64 {
        self.coeff(i)
    }

    fn precision(&self) -> Option<usize> {
        None
    }
}

fn min_precision(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Cauchy product truncated to the lower of the two precisions.
pub fn series_mul(a: &TruncatedSeries, b: &impl SeriesOperand) -> Result<TruncatedSeries, SeriesError> {
    let order = min_precision(Some(a.order()), b.precision()).expect("a is truncated");
    let mut out = vec![0i64; order + 1];
    for (i, &x) in a.coeffs[..=order].iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, slot) in out[i..].iter_mut().enumerate() {
            let y = b.coeff_at(j);
            if y == 0 {
                continue;
            }
            let term = x.checked_mul(y).ok_or(SeriesError::Overflow)?;
            *slot = slot.checked_add(term).ok_or(SeriesError::Overflow)?;
        }
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// Series long division: the `q` with `denominator * q = numerator` through
/// `t^order`. The denominator's constant term must be `+1` or `-1`.
pub fn series_div(
    numerator: &impl SeriesOperand,
    denominator: &impl SeriesOperand,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    if let Some(avail) = min_precision(numerator.precision(), denominator.precision()) {
        if avail < order {
            return Err(SeriesError::InsufficientPrecision { requested: order, available: avail });
        }
    }
    let c0 = denominator.coeff_at(0);
    if c0 != 1 && c0 != -1 {
        return Err(SeriesError::NonUnitConstantTerm(c0));
    }
    let den: Vec<i64> = (0..=order).map(|i| denominator.coeff_at(i)).collect();
    let mut q: Vec<i64> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = numerator.coeff_at(n);
        for k in 1..=n {
            if den[k] == 0 {
                continue;
            }
            let term = den[k].checked_mul(q[n - k]).ok_or(SeriesError::Overflow)?;
            acc = acc.checked_sub(term).ok_or(SeriesError::Overflow)?;
        }
        q.push(acc.checked_mul(c0).ok_or(SeriesError::Overflow)?);
    }
    Ok(TruncatedSeries { coeffs: q })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(c.to_vec()).unwrap()
    }

    #[test]
    fn mul_basic() {
        assert_eq!(series_mul(&s(&[1, 1]), &s(&[1, -1])).unwrap(), s(&[1, 0]));
        // truncates to the shorter operand
        assert_eq!(series_mul(&s(&[1, 1, 1]), &s(&[1, 1])).unwrap(), s(&[1, 2]));
        let p = IntPolynomial::new(vec![1, 0, -1]);
        assert_eq!(series_mul(&s(&[1, 1, 1, 1]), &p).unwrap(), s(&[1, 1, 0, 0]));
    }

    #[test]
    fn div_basic() {
        // 1 / (1 - t) = 1 + t + t^2 + ...
        let q = series_div(&IntPolynomial::one(), &IntPolynomial::new(vec![1, -1]), 4).unwrap();
        assert_eq!(q, s(&[1, 1, 1, 1, 1]));
        // negative constant term
        let q = series_div(&IntPolynomial::one(), &IntPolynomial::new(vec![-1, 1]), 3).unwrap();
        assert_eq!(q, s(&[-1, -1, -1, -1]));
    }

    #[test]
    fn div_errors() {
        assert_eq!(
            series_div(&IntPolynomial::one(), &s(&[2, 1]), 1),
            Err(SeriesError::NonUnitConstantTerm(2))
        );
        assert_eq!(
            series_div(&IntPolynomial::one(), &s(&[1, 1]), 3),
            Err(SeriesError::InsufficientPrecision { requested: 3, available: 1 })
        );
        assert_eq!(TruncatedSeries::new(vec![]), Err(SeriesError::EmptySeries));
    }

    #[test]
    fn polynomial_padding() {
        let p = IntPolynomial::new(vec![1, 2]);
        assert_eq!(TruncatedSeries::from_polynomial(&p, 3).coeffs(), &[1, 2, 0, 0]);
        assert_eq!(TruncatedSeries::from_polynomial(&p, 0).coeffs(), &[1]);
    }
}
