use super::{series_div, IntPolynomial, SeriesError, TruncatedSeries};

/// Poincare polynomial of a finite Weyl group from its invariant degrees:
/// the product of `(t^d - 1)/(t - 1)` over all degrees `d`.
pub fn finite_poincare(degrees: &[u32]) -> Result<IntPolynomial, SeriesError> {
    degrees.iter().try_fold(IntPolynomial::one(), |acc, &d| {
        if d < 2 {
            return Err(SeriesError::InvalidDegree(d));
        }
        acc.mul(&IntPolynomial::geometric(d as usize))
    })
}

/// Bott's series for the untwisted affine extension of a finite algebra:
/// `P(G) * prod 1/(1 - t^(d - 1))`, expanded through `t^order`.
pub fn affine_poincare(degrees: &[u32], order: usize) -> Result<TruncatedSeries, SeriesError> {
    let numerator = finite_poincare(degrees)?;
    let denominator = degrees.iter().try_fold(IntPolynomial::one(), |acc, &d| {
        let mut c = vec![0i64; d as usize];
        c[0] = 1;
        c[d as usize - 1] -= 1;
        acc.mul(&IntPolynomial::new(c))
    })?;
    series_div(&numerator, &denominator, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        assert_eq!(finite_poincare(&[2]).unwrap().coeffs(), &[1, 1]);
        assert_eq!(finite_poincare(&[2, 3, 4]).unwrap().coeffs(), &[1, 3, 5, 6, 5, 3, 1]);
        assert_eq!(finite_poincare(&[]).unwrap(), IntPolynomial::one());
        assert_eq!(finite_poincare(&[2, 1]), Err(SeriesError::InvalidDegree(1)));
    }

    #[test]
    fn d5_shape() {
        let p = finite_poincare(&[2, 4, 6, 8, 5]).unwrap();
        assert_eq!(p.degree(), Some(20));
        assert_eq!(p.eval_at_one().unwrap(), 1920);
        assert!(p.is_palindromic());
    }

    #[test]
    fn affine_small() {
        assert_eq!(affine_poincare(&[2], 5).unwrap().coeffs(), &[1, 2, 2, 2, 2, 2]);
        // (1 + t + t^2)/(1 - t)^2: 1, 3, then 3n
        assert_eq!(affine_poincare(&[2, 3], 4).unwrap().coeffs(), &[1, 3, 6, 9, 12]);
        assert_eq!(affine_poincare(&[2, 4, 6, 8, 5], 0).unwrap().coeffs(), &[1]);
    }
}
