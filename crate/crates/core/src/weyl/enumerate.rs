//! Level-by-level enumeration of a Weyl group through its gamma vectors.
//!
//! Level `i` holds the gamma vectors of all elements of length `i`. Each is
//! produced by reflecting a level `i - 1` vector at some simple root. A
//! neighbour of a length `i - 1` element has length `i - 2` or `i`, so a
//! candidate is new exactly when it is absent from level `i - 2`; only the
//! two most recent levels are kept. The full-history mode keeps every level
//! and turns any candidate that hits another level into an error.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checkpoint::LevelCheckpoint;
use super::gamma::{GammaVector, Reflector};
use super::WeylError;
use crate::algebra::GeneralizedCartanMatrix;
use crate::series::{SeriesError, TruncatedSeries};

const CHUNK: usize = 4096;

/// Number of Weyl group elements of each length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthSeries {
    /// Name or fingerprint of the algebra the series belongs to.
    pub algebra: String,
    /// Highest length included; `coeffs.len() - 1`.
    pub order: usize,
    pub coeffs: Vec<u64>,
    /// The group is finite and every element has been counted.
    pub complete: bool,
}

impl GrowthSeries {
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn to_series(&self) -> Result<TruncatedSeries, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| i64::try_from(c).map_err(|_| SeriesError::CoefficientTooLarge(c)))
            .collect::<Result<Vec<_>, _>>()?;
        TruncatedSeries::new(coeffs)
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Keep every level and reject candidates that land anywhere except
    /// levels `i` and `i - 2`.
    pub full_history: bool,
    /// Written after every completed level and resumed from if present.
    pub checkpoint: Option<PathBuf>,
}

/// Stepwise enumerator; [`enumerate_levels`] drives it to a target order.
pub struct LevelEnumerator {
    reflector: Reflector,
    fingerprint: String,
    level: usize,
    previous: Vec<GammaVector>,
    current: Vec<GammaVector>,
    /// Levels `0..level - 1` in full-history mode.
    history: Option<Vec<Vec<GammaVector>>>,
    coeffs: Vec<u64>,
    exhausted: bool,
    pool: Option<rayon::ThreadPool>,
}

impl LevelEnumerator {
    pub fn new(gcm: &GeneralizedCartanMatrix, options: &EnumerationOptions) -> Result<Self, WeylError> {
        Ok(LevelEnumerator {
            reflector: Reflector::new(gcm),
            fingerprint: gcm.fingerprint(),
            level: 0,
            previous: Vec::new(),
            current: vec![GammaVector::zero(gcm.rank())],
            history: options.full_history.then(Vec::new),
            coeffs: vec![1],
            exhausted: false,
            pool: build_pool(options.workers)?,
        })
    }

    pub fn from_checkpoint(
        gcm: &GeneralizedCartanMatrix,
        checkpoint: LevelCheckpoint,
        options: &EnumerationOptions,
    ) -> Result<Self, WeylError> {
        if options.full_history {
            return Err(WeylError::FullHistoryResume);
        }
        let fingerprint = gcm.fingerprint();
        if checkpoint.algebra != fingerprint {
            return Err(WeylError::CheckpointMismatch { expected: fingerprint, found: checkpoint.algebra });
        }
        if checkpoint.rank != gcm.rank() {
            return Err(WeylError::RankMismatch { expected: gcm.rank(), found: checkpoint.rank });
        }
        Ok(LevelEnumerator {
            reflector: Reflector::new(gcm),
            fingerprint,
            level: checkpoint.level,
            previous: checkpoint.previous,
            current: checkpoint.current,
            history: None,
            coeffs: checkpoint.coeffs,
            exhausted: false,
            pool: build_pool(options.workers)?,
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Gamma vectors of the current level, sorted.
    pub fn current(&self) -> &[GammaVector] {
        &self.current
    }

    pub fn previous(&self) -> &[GammaVector] {
        &self.previous
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn checkpoint(&self) -> LevelCheckpoint {
        LevelCheckpoint {
            algebra: self.fingerprint.clone(),
            rank: self.reflector.rank(),
            level: self.level,
            coeffs: self.coeffs.clone(),
            previous: self.previous.clone(),
            current: self.current.clone(),
        }
    }

    /// Builds the next level. Returns `false` (and marks the enumerator
    /// exhausted) when the next level is empty.
    pub fn advance(&mut self) -> Result<bool, WeylError> {
        if self.exhausted {
            return Ok(false);
        }
        let next = match &self.pool {
            Some(pool) => pool.install(|| self.next_level()),
            None => self.next_level(),
        }?;
        if next.is_empty() {
            self.exhausted = true;
            return Ok(false);
        }
        let retired = std::mem::replace(&mut self.previous, std::mem::replace(&mut self.current, next));
        if let Some(history) = &mut self.history {
            if self.level >= 1 {
                history.push(retired);
            }
        }
        self.level += 1;
        self.coeffs.push(self.current.len() as u64);
        log::debug!("level {} has {} elements", self.level, self.current.len());
        Ok(true)
    }

    fn next_level(&self) -> Result<Vec<GammaVector>, WeylError> {
        let rank = self.reflector.rank();
        let target = self.level + 1;
        let chunks: Vec<Vec<GammaVector>> = self
            .current
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut out = Vec::with_capacity(chunk.len() * 2);
                for gamma in chunk {
                    for mu in 0..rank {
                        let candidate = self.reflector.reflect(gamma, mu)?;
                        if contains(&self.previous, &candidate) {
                            continue;
                        }
                        if let Some(history) = &self.history {
                            self.check_adjacency(history, &candidate, target)?;
                        }
                        out.push(candidate);
                    }
                }
                out.sort_unstable();
                out.dedup();
                Ok(out)
            })
            .collect::<Result<_, WeylError>>()?;
        let mut next: Vec<GammaVector> = chunks.concat();
        next.par_sort_unstable();
        next.dedup();
        Ok(next)
    }

    fn check_adjacency(
        &self,
        history: &[Vec<GammaVector>],
        candidate: &GammaVector,
        target: usize,
    ) -> Result<(), WeylError> {
        let found = if contains(&self.current, candidate) {
            Some(self.level)
        } else {
            history.iter().position(|lvl| contains(lvl, candidate))
        };
        match found {
            Some(level) => Err(WeylError::AdjacencyViolation {
                target,
                found_at: level,
                coords: candidate.coords().to_vec(),
            }),
            None => Ok(()),
        }
    }
}

fn contains(sorted: &[GammaVector], v: &GammaVector) -> bool {
    sorted.binary_search(v).is_ok()
}

fn build_pool(workers: Option<usize>) -> Result<Option<rayon::ThreadPool>, WeylError> {
    workers
        .map(|n| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| WeylError::ThreadPool(e.to_string()))
        })
        .transpose()
}

/// Counts elements of each length `0..=max_order`, stopping early at the
/// first empty level (then `complete` is set).
pub fn enumerate_levels(
    gcm: &GeneralizedCartanMatrix,
    max_order: usize,
    options: &EnumerationOptions,
) -> Result<GrowthSeries, WeylError> {
    let mut enumerator = match options.checkpoint.as_deref().filter(|p| p.exists()) {
        Some(path) => {
            let ckpt = LevelCheckpoint::read_from(path)?;
            log::info!("resuming from level {} ({})", ckpt.level, path.display());
            LevelEnumerator::from_checkpoint(gcm, ckpt, options)?
        }
        None => LevelEnumerator::new(gcm, options)?,
    };
    while enumerator.level() < max_order {
        if !enumerator.advance()? {
            break;
        }
        if let Some(path) = &options.checkpoint {
            write_checkpoint(&enumerator, path)?;
        }
    }
    let mut coeffs = enumerator.coeffs().to_vec();
    coeffs.truncate(max_order + 1);
    Ok(GrowthSeries {
        algebra: gcm.fingerprint(),
        order: coeffs.len() - 1,
        coeffs,
        complete: enumerator.is_exhausted(),
    })
}

fn write_checkpoint(enumerator: &LevelEnumerator, path: &Path) -> Result<(), WeylError> {
    enumerator.checkpoint().write_to(path)
}
