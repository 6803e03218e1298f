//! Upper bounds on the number of compatible families, read off the run
//! structure of their concatenation, and the exact counts they should
//! dominate.

pub mod general;
pub mod matrices;
pub mod partitions;
pub mod perfect;

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Count;
use crate::sequence::{canonical_bits, words_of_weight, BinarySequence};

pub use general::{bound_b, bound_b_in, family_count_oracle, family_count_table, run_one_count_range, RunOneRange};
pub use matrices::{circulant_hadamard_bound, core_block_range, gs_bound, one_core_bound, two_core_bound};
pub use partitions::{compositions_with_ones, multinomial_partition_sum, PartitionSpec};
pub use perfect::{perfect_bounds, perfect_case_params, PerfectCandidate, PerfectCase};

/// Exhaustive counts are only attempted below this many candidates.
pub const ORACLE_CUTOFF: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Refined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Display", deserialize = "T: FromStr"))]
pub struct BoundReport<T = BigUint> {
    pub params: BTreeMap<String, i64>,
    pub method: Method,
    #[serde(serialize_with = "decimal", deserialize_with = "from_decimal")]
    pub value: T,
    pub oracle: Option<u64>,
    pub applicable: bool,
    pub notes: Vec<String>,
}

fn decimal<T: Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn from_decimal<'de, T: FromStr, D: Deserializer<'de>>(d: D) -> std::result::Result<T, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(|_| serde::de::Error::custom(format!("not a decimal integer: {s}")))
}

impl<T: Count> BoundReport<T> {
    pub(crate) fn new(params: &[(&str, i64)], method: Method, value: T) -> Self {
        BoundReport {
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            method,
            value,
            oracle: None,
            applicable: true,
            notes: vec![],
        }
    }

    pub(crate) fn inapplicable(params: &[(&str, i64)], method: Method, why: impl Into<String>) -> Self {
        let mut r = Self::new(params, method, T::zero());
        r.applicable = false;
        r.notes.push(why.into());
        r
    }

    pub(crate) fn with_oracle(mut self, oracle: Option<u64>) -> Self {
        self.oracle = oracle;
        if !self.dominated() {
            self.notes.push(format!("exact count {} exceeds the bound", oracle.unwrap_or(0)));
        }
        self
    }

    /// The exact count, when known, does not exceed the bound.
    pub fn dominated(&self) -> bool {
        !self.applicable || self.oracle.is_none_or(|o| T::from(o) <= self.value)
    }
}

/// Orbits of length-`n`, weight-`w` sequences whose nontrivial
/// autocorrelations all equal `d`. `None` beyond the oracle cutoff.
pub fn two_level_orbit_count(n: usize, w: usize, d: i64) -> Option<u64> {
    if !(2..=63).contains(&n) || w > n {
        return None;
    }
    let space: BigUint = crate::scalar::binomial(n as u64, w as u64);
    if space > BigUint::from(ORACLE_CUTOFF) {
        return None;
    }
    let words: Vec<u64> = words_of_weight(n, w).collect();
    Some(
        words
            .par_iter()
            .filter(|&&b| canonical_bits(n, b) == b)
            .filter(|&&b| {
                let x = BinarySequence::from_bits(n, b);
                (1..=n / 2).all(|k| x.autocorrelation_at(k) == d)
            })
            .count() as u64,
    )
}
