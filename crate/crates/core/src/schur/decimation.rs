//! Classes of circulant orbits under coprime decimation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::scalar::{euler_phi, gcd};
use crate::schur::dimension::DimensionReport;
use crate::sequence::{canonical_bits, BinarySequence};

pub const MAX_CLASS_N: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecimationClass {
    #[serde(with = "crate::schur::orbits::seq_string")]
    pub rep: BinarySequence,
    pub orbits: Vec<String>,
}

/// Decimation indices `r` with `gcd(r, n) = 1`; just `1` when `n = 1`.
pub fn units(n: usize) -> Vec<usize> {
    if n <= 1 {
        return vec![1];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

fn decimate_bits(n: usize, b: u64, r: usize) -> u64 {
    (0..n).fold(0, |acc, i| acc | (((b >> (r * i % n)) & 1) << i))
}

/// Orbit representatives grouped by decimation, each group sorted, groups
/// sorted by their least representative.
pub fn decimation_classes(n: usize) -> Result<Vec<DecimationClass>> {
    if n == 0 || n > MAX_CLASS_N {
        return Err(invalid(format!("decimation classes support 1..={MAX_CLASS_N}, got {n}")));
    }
    let us: Vec<usize> = units(n);
    let mut class_of: BTreeMap<u64, u64> = BTreeMap::new();
    let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for b in 0..1u64 << n {
        if canonical_bits(n, b) != b || class_of.contains_key(&b) {
            continue;
        }
        let mut members: Vec<u64> = us.iter().map(|&r| canonical_bits(n, decimate_bits(n, b, r))).collect();
        members.sort_by_key(|&m| crate::sequence::lex_key(n, m));
        members.dedup();
        let rep = members[0];
        for &m in &members {
            class_of.insert(m, rep);
        }
        groups.insert(crate::sequence::lex_key(n, rep), members);
    }
    Ok(groups
        .into_values()
        .map(|ms| DecimationClass {
            rep: BinarySequence::from_bits(n, ms[0]),
            orbits: ms.iter().map(|&m| BinarySequence::from_bits(n, m).to_string()).collect(),
        })
        .collect())
}

fn cycle_count(n: usize, r: usize, t: usize) -> u32 {
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = (r * j + t) % n;
        }
    }
    cycles
}

/// Burnside count over the maps `j -> r j + t` on `Z_n`.
pub fn affine_burnside(n: usize) -> u128 {
    let us = units(n);
    let total: u128 = us.iter().flat_map(|&r| (0..n).map(move |t| 1u128 << cycle_count(n, r, t))).sum();
    total / (n * us.len()) as u128
}

/// The printed decimated-ring expression with its `C(k, t)` read as the
/// cycle count of `j -> k j + t`. The printed range `1..n-1` for `k` is
/// empty at `n = 1`, where no value is produced.
pub fn printed_decimated_formula(n: usize) -> Option<i64> {
    let ks: Vec<usize> = (1..n).filter(|&k| gcd(k, n) == 1).collect();
    if ks.is_empty() {
        return None;
    }
    let total: i64 = (0..n).flat_map(|t| ks.iter().map(move |&k| 1i64 << cycle_count(n, k, t))).sum();
    let den = (n * euler_phi(n)) as i64;
    (total % den == 0).then_some(total / den)
}

/// Class count by direct grouping, with the printed expression as a report.
pub fn dim_sd(n: usize) -> Result<DimensionReport> {
    let enumerated = decimation_classes(n)?.len() as u64;
    let formula = printed_decimated_formula(n);
    let mut notes = vec![format!("affine Burnside count {}", affine_burnside(n))];
    if formula.is_none() {
        notes.push("printed expression has an empty range here".into());
    }
    Ok(DimensionReport::new(enumerated, formula, notes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        assert_eq!(decimation_classes(5).unwrap().len(), 6);
        assert_eq!(decimation_classes(3).unwrap().len(), 4);
        assert_eq!(decimation_classes(1).unwrap().len(), 2);
        for n in 1..=13 {
            assert_eq!(decimation_classes(n).unwrap().len() as u128, affine_burnside(n), "n = {n}");
        }
    }

    #[test]
    fn printed_formula_reading() {
        assert_eq!(printed_decimated_formula(5), Some(6));
        assert_eq!(printed_decimated_formula(2), Some(3));
        assert_eq!(printed_decimated_formula(1), None);
        let r = dim_sd(5).unwrap();
        assert!(r.matches);
        assert!(!dim_sd(1).unwrap().matches);
    }

    #[test]
    fn merged_weight_classes_n5() {
        let cls = decimation_classes(5).unwrap();
        let w2 = cls.iter().find(|c| c.rep.weight() == 2).unwrap();
        assert_eq!(w2.orbits, vec!["++---", "+-+--"]);
    }
}
