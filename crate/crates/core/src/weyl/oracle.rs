use std::collections::HashSet;

use super::{GrowthSeries, WeylError};
use crate::algebra::GeneralizedCartanMatrix;

/// Independent growth count: breadth-first search over the orbit of `rho`
/// in fundamental-weight coordinates, deduplicating against every state
/// seen so far.
///
/// `s_mu` maps a weight with coordinates `x` to `x - x_mu * A[., mu]`; the
/// start state `rho` has every coordinate equal to one.
pub fn weyl_orbit_oracle(gcm: &GeneralizedCartanMatrix, max_order: usize) -> Result<GrowthSeries, WeylError> {
    let rank = gcm.rank();
    let columns: Vec<Vec<i64>> = (0..rank).map(|mu| (0..rank).map(|nu| gcm.entry(nu, mu)).collect()).collect();
    let rho = vec![1i64; rank];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([rho.clone()]);
    let mut frontier = vec![rho];
    let mut coeffs = vec![1u64];
    let mut complete = false;

    while coeffs.len() <= max_order {
        let mut next = Vec::new();
        for state in &frontier {
            for (mu, column) in columns.iter().enumerate() {
                let x = state[mu];
                let image = state
                    .iter()
                    .zip(column)
                    .map(|(&s, &a)| x.checked_mul(a).and_then(|t| s.checked_sub(t)))
                    .collect::<Option<Vec<i64>>>()
                    .ok_or(WeylError::IntegerOverflow)?;
                if seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        if next.is_empty() {
            complete = true;
            break;
        }
        coeffs.push(next.len() as u64);
        frontier = next;
    }
    Ok(GrowthSeries { algebra: gcm.fingerprint(), order: coeffs.len() - 1, coeffs, complete })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_catalog;

    #[test]
    fn a3_permutation_count() {
        let g = weyl_orbit_oracle(&build_catalog("A3").unwrap().gcm, 50).unwrap();
        assert_eq!(g.coeffs, vec![1, 3, 5, 6, 5, 3, 1]);
        assert!(g.complete);
    }

    #[test]
    fn a1() {
        let g = weyl_orbit_oracle(&build_catalog("A1").unwrap().gcm, 50).unwrap();
        assert_eq!((g.coeffs, g.complete), (vec![1, 1], true));
    }

    #[test]
    fn ha3_prefix() {
        let g = weyl_orbit_oracle(&build_catalog("HA3").unwrap().gcm, 5).unwrap();
        assert_eq!(g.coeffs, vec![1, 5, 15, 36, 75, 142]);
        assert!(!g.complete);
    }
}
