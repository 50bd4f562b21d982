//! Weyl group enumeration by length, using `rho - w(rho)` as the canonical
//! name of each element.

mod checkpoint;
mod enumerate;
mod gamma;
mod oracle;

pub use checkpoint::{LevelCheckpoint, CHECKPOINT_VERSION};
pub use enumerate::{enumerate_levels, EnumerationOptions, GrowthSeries, LevelEnumerator};
pub use gamma::{gamma_reflect, GammaVector};
pub use oracle::weyl_orbit_oracle;

#[derive(thiserror::Error, Debug)]
pub enum WeylError {
    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector has rank {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("integer overflow in gamma arithmetic")]
    IntegerOverflow,
    #[error("candidate {coords:?} for level {target} already lies in level {found_at}")]
    AdjacencyViolation { target: usize, found_at: usize, coords: Vec<i64> },
    #[error("checkpoint format version {found}, expected {expected}")]
    CheckpointVersionMismatch { expected: u32, found: u32 },
    #[error("checkpoint belongs to algebra {found}, expected {expected}")]
    CheckpointMismatch { expected: String, found: String },
    #[error("malformed checkpoint: {0}")]
    CheckpointFormat(String),
    #[error("full-history dedup cannot resume from a checkpoint")]
    FullHistoryResume,
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
