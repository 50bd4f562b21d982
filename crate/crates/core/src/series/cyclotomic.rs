//! Cyclotomic polynomials and trial division by them.

use serde::Serialize;

use super::{IntPolynomial, SeriesError};

fn divisors(n: usize) -> Vec<usize> {
    let mut divs: Vec<usize> = (1..=n).take_while(|i| i * i <= n).filter(|i| n.is_multiple_of(*i)).collect();
    let large: Vec<usize> = divs.iter().rev().map(|&d| n / d).filter(|&d| d * d != n).collect();
    divs.extend(large);
    divs
}

/// `Phi_1 .. Phi_max`, index `k - 1` holds `Phi_k`. Built by exact division
/// `Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_table(max: usize) -> Result<Vec<IntPolynomial>, SeriesError> {
    let mut table: Vec<IntPolynomial> = Vec::with_capacity(max);
    for n in 1..=max {
        let mut acc = IntPolynomial::t_pow_minus_one(n);
        for d in divisors(n).into_iter().filter(|&d| d < n) {
            acc = acc.div_exact(&table[d - 1])?.expect("Phi_d divides t^n - 1 for d | n");
        }
        table.push(acc);
    }
    Ok(table)
}

pub fn cyclotomic(n: usize) -> Result<IntPolynomial, SeriesError> {
    assert!(n > 0, "cyclotomic index must be positive");
    Ok(cyclotomic_table(n)?.pop().expect("table has n entries"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicFactor {
    pub index: usize,
    pub multiplicity: u32,
    /// The factor as extracted. For index 1 this is `1 - t`, the sign
    /// normalisation that keeps constant terms positive.
    pub polynomial: IntPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSplit {
    pub factors: Vec<CyclotomicFactor>,
    pub residual: IntPolynomial,
}

impl CyclotomicSplit {
    /// Product of all extracted factors (with multiplicity) and the residual.
    pub fn recombine(&self) -> Result<IntPolynomial, SeriesError> {
        self.factors.iter().try_fold(self.residual.clone(), |acc, f| acc.mul(&f.polynomial.pow(f.multiplicity)?))
    }
}

/// Divides out `Phi_k` for `k = 1..=max_index`, each as often as the division
/// stays exact. Whatever is left is the residual.
pub fn cyclotomic_trial_division(
    p: &IntPolynomial,
    max_index: usize,
) -> Result<CyclotomicSplit, SeriesError> {
    if p.is_zero() {
        return Err(SeriesError::ZeroPolynomial);
    }
    let mut residual = p.clone();
    let mut factors = Vec::new();
    for (i, phi) in cyclotomic_table(max_index)?.into_iter().enumerate() {
        let index = i + 1;
        let phi = if index == 1 { phi.neg() } else { phi };
        let mut multiplicity = 0;
        while residual.degree().unwrap_or(0) >= phi.degree().unwrap_or(0) {
            match residual.div_exact(&phi)? {
                Some(q) => {
                    residual = q;
                    multiplicity += 1;
                }
                None => break,
            }
        }
        if multiplicity > 0 {
            factors.push(CyclotomicFactor { index, multiplicity, polynomial: phi });
        }
    }
    Ok(CyclotomicSplit { factors, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
    }

    #[test]
    fn known_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        // Phi_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic(105).unwrap().coeffs().contains(&-2));
    }

    #[test]
    fn product_over_divisors_is_t_n_minus_1() {
        let table = cyclotomic_table(30).unwrap();
        for n in 1..=30 {
            let prod = divisors(n).iter().try_fold(IntPolynomial::one(), |acc, &d| acc.mul(&table[d - 1])).unwrap();
            assert_eq!(prod, IntPolynomial::t_pow_minus_one(n), "n = {n}");
        }
    }

    #[test]
    fn one_plus_t() {
        let split = cyclotomic_trial_division(&p(&[1, 1]), 4).unwrap();
        assert_eq!(split.factors.len(), 1);
        assert_eq!(split.factors[0].index, 2);
        assert_eq!(split.residual, IntPolynomial::one());
    }

    #[test]
    fn residual_recombines() {
        let q = p(&[3, -1, 4, 1, -5, 9, 2, 6]);
        let prod = q.mul(&cyclotomic(3).unwrap()).unwrap().mul(&p(&[1, -1])).unwrap();
        let split = cyclotomic_trial_division(&prod, 10).unwrap();
        assert_eq!(split.recombine().unwrap(), prod);
        assert!(split.factors.iter().any(|f| f.index == 3));
    }
}
