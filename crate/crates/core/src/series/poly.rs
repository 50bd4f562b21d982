use std::fmt;

use serde::{Deserialize, Serialize};

use super::SeriesError;

/// Exact integer polynomial, coefficient `i` multiplies `t^i`. Trailing
/// zeros are always stripped, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "CoeffsJson", from = "CoeffsJson")]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `1 + t + ... + t^(n-1)`, i.e. `(t^n - 1)/(t - 1)`.
    pub fn geometric(n: usize) -> Self {
        IntPolynomial::new(vec![1; n])
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = -1;
        c[n] += 1;
        IntPolynomial::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    pub fn eval_at_one(&self) -> Result<i64, SeriesError> {
        self.coeffs.iter().try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(SeriesError::Overflow))
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn mul(&self, other: &IntPolynomial) -> Result<IntPolynomial, SeriesError> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(SeriesError::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(SeriesError::Overflow)?;
            }
        }
        Ok(IntPolynomial::new(out))
    }

    pub fn pow(&self, exp: u32) -> Result<IntPolynomial, SeriesError> {
        (0..exp).try_fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Long division by a divisor with leading coefficient `+-1`. Returns
    /// `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial), SeriesError> {
        let lead = divisor.leading().ok_or(SeriesError::DivisionByZero)?;
        if lead != 1 && lead != -1 {
            return Err(SeriesError::NonUnitLeadingCoefficient(lead));
        }
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![0i64; rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dlen - 1].checked_mul(lead).ok_or(SeriesError::Overflow)?;
            quot[k] = q;
            if q == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let term = q.checked_mul(d).ok_or(SeriesError::Overflow)?;
                rem[k + j] = rem[k + j].checked_sub(term).ok_or(SeriesError::Overflow)?;
            }
        }
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<Option<IntPolynomial>, SeriesError> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{a} t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a} t^{i}")?,
            }
        }
        Ok(())
    }
}

/// JSON form `{"coeffs": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffsJson {
    pub coeffs: Vec<i64>,
}

impl From<IntPolynomial> for CoeffsJson {
    fn from(p: IntPolynomial) -> Self {
        CoeffsJson { coeffs: p.coeffs }
    }
}

impl From<CoeffsJson> for IntPolynomial {
    fn from(j: CoeffsJson) -> Self {
        IntPolynomial::new(j.coeffs)
    }
}

/// Product of a list of factors; the empty product is `1`.
pub fn expand_factored(factors: &[IntPolynomial]) -> Result<IntPolynomial, SeriesError> {
    factors.iter().try_fold(IntPolynomial::one(), |acc, f| acc.mul(f))
}
