use std::fmt;

use smallvec::SmallVec;

use super::WeylError;
use crate::algebra::GeneralizedCartanMatrix;

/// Coordinates of `rho - w(rho)` over the simple roots. Distinct Weyl group
/// elements give distinct vectors, so this is the element's canonical name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaVector(SmallVec<[i64; 6]>);

impl GammaVector {
    pub fn zero(rank: usize) -> Self {
        GammaVector(SmallVec::from_elem(0, rank))
    }

    pub fn unit(rank: usize, index: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[index] = 1;
        v
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Renders as a sum over labelled simple roots, e.g. `2 a[-1] + a[0]`.
    pub fn display_with<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        Labelled(self, labels)
    }
}

impl From<Vec<i64>> for GammaVector {
    fn from(v: Vec<i64>) -> Self {
        GammaVector(SmallVec::from_vec(v))
    }
}

impl From<&[i64]> for GammaVector {
    fn from(v: &[i64]) -> Self {
        GammaVector(SmallVec::from_slice(v))
    }
}

impl fmt::Display for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

struct Labelled<'a>(&'a GammaVector, &'a [String]);

impl fmt::Display for Labelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
             .0
            .iter()
            .zip(self.1)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, l)| if c == 1 { format!("a[{l}]") } else { format!("{c} a[{l}]") })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Flat copy of the Cartan matrix for the inner enumeration loop.
#[derive(Debug, Clone)]
pub(crate) struct Reflector {
    rank: usize,
    rows: Vec<i64>,
}

impl Reflector {
    pub(crate) fn new(gcm: &GeneralizedCartanMatrix) -> Self {
        Reflector { rank: gcm.rank(), rows: gcm.entries().iter().flatten().copied().collect() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    /// `<rho - gamma, alpha_mu^vee> = 1 - sum_nu A[mu][nu] gamma_nu`. Positive
    /// exactly when reflecting at `mu` lengthens the element.
    #[inline]
    pub(crate) fn pairing(&self, gamma: &GammaVector, mu: usize) -> Result<i64, WeylError> {
        let row = &self.rows[mu * self.rank..(mu + 1) * self.rank];
        row.iter().zip(gamma.coords()).try_fold(1i64, |acc, (&a, &g)| {
            a.checked_mul(g).and_then(|t| acc.checked_sub(t)).ok_or(WeylError::IntegerOverflow)
        })
    }

    #[inline]
    pub(crate) fn reflect(&self, gamma: &GammaVector, mu: usize) -> Result<GammaVector, WeylError> {
        let shift = self.pairing(gamma, mu)?;
        let mut out = gamma.clone();
        out.0[mu] = out.0[mu].checked_add(shift).ok_or(WeylError::IntegerOverflow)?;
        Ok(out)
    }
}

/// `rho - s_mu(rho - gamma)`: only coordinate `mu` changes, by
/// `1 - sum_nu A[mu][nu] gamma_nu`.
pub fn gamma_reflect(
    gcm: &GeneralizedCartanMatrix,
    gamma: &GammaVector,
    mu: usize,
) -> Result<GammaVector, WeylError> {
    let rank = gcm.rank();
    if mu >= rank {
        return Err(WeylError::IndexOutOfRange { index: mu, rank });
    }
    if gamma.rank() != rank {
        return Err(WeylError::RankMismatch { expected: rank, found: gamma.rank() });
    }
    let shift = (0..rank).try_fold(1i64, |acc, nu| {
        gcm.entry(mu, nu)
            .checked_mul(gamma.coords()[nu])
            .and_then(|t| acc.checked_sub(t))
            .ok_or(WeylError::IntegerOverflow)
    })?;
    let mut out = gamma.clone();
    out.0[mu] = out.0[mu].checked_add(shift).ok_or(WeylError::IntegerOverflow)?;
    Ok(out)
}
