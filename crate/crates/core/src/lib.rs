//! Exact growth series of Kac-Moody Weyl groups.
//!
//! - [`algebra`]: generalized Cartan matrices, the catalog of finite, affine
//!   and over-extended `HA_r` algebras, exact inverses and invariant degrees.
//! - [`weyl`]: breadth-first enumeration of the Weyl group by length, keyed
//!   by the gamma vector `rho - w(rho)`, plus an independent orbit oracle.
//! - [`series`]: integer polynomial and power-series arithmetic, closed-form
//!   Poincare series, rational-form fitting and cyclotomic trial division.

pub mod algebra;
pub mod series;
pub mod weyl;

pub use algebra::{build_catalog, AlgebraDescriptor, GeneralizedCartanMatrix};
pub use series::{IntPolynomial, TruncatedSeries};
pub use weyl::{enumerate_levels, EnumerationOptions, GrowthSeries};
