//! Periodic ±1 sequences over `Z_2^n`: autocorrelation and run structure,
//! Schur-ring orbit partitions, compatible sequence families, counting
//! bounds, and Hadamard-type matrix constructions, each backed by a
//! brute-force oracle at small sizes.

pub mod bounds;
pub mod error;
pub mod hadamard;
pub mod pcoms;
pub mod runstruct;
pub mod scalar;
pub mod schur;
pub mod sequence;

pub use error::{Error, Result};
pub use runstruct::{RunPattern, RunVector};
pub use scalar::{Count, Rational};
pub use sequence::{AutocorrelationVector, BinarySequence};

/// Arbitrary-precision count used by reports.
pub type BigCount = num_bigint::BigUint;
