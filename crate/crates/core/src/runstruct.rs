//! Run vectors and the run-structure expressions for periodic
//! autocorrelation.
//!
//! Pattern counts `N_X(R_{i_1}...R_{i_r})` are taken over the cyclic run
//! vector: `X` is rotated to start at a sign change, and every window of `r`
//! consecutive runs (wrapping around) is counted once per period.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::sequence::BinarySequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunVector {
    pub lengths: Vec<usize>,
    pub l: usize,
}

impl RunVector {
    fn from_lengths(lengths: Vec<usize>) -> Self {
        let l = lengths.len();
        RunVector { lengths, l }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RunPattern(Vec<usize>);

impl RunPattern {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(invalid("run pattern needs at least one positive length"));
        }
        Ok(RunPattern(parts))
    }

    pub fn single(i: usize) -> Self {
        RunPattern(vec![i])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

fn nonconstant(x: &BinarySequence) -> Result<()> {
    if x.is_constant() {
        Err(Error::DegenerateRun)
    } else {
        Ok(())
    }
}

fn blocks(x: &BinarySequence, start: usize) -> Vec<usize> {
    let n = x.len();
    let mut out = Vec::new();
    let mut len = 1;
    for j in 1..n {
        if x.get((start + j) % n) == x.get((start + j - 1) % n) {
            len += 1;
        } else {
            out.push(len);
            len = 1;
        }
    }
    out.push(len);
    out
}

/// Maximal constant blocks read left to right, without merging the wrap.
pub fn run_vector(x: &BinarySequence) -> Result<RunVector> {
    nonconstant(x)?;
    Ok(RunVector::from_lengths(blocks(x, 0)))
}

/// Run vector of the rotation that starts at the first cyclic sign change.
pub fn cyclic_run_vector(x: &BinarySequence) -> Result<RunVector> {
    nonconstant(x)?;
    let n = x.len();
    let start = (0..n).find(|&i| x.get(i) != x.get((i + n - 1) % n)).expect("nonconstant sequence has a sign change");
    Ok(RunVector::from_lengths(blocks(x, start)))
}

/// `l(X_C)`: number of cyclic sign changes.
pub fn orbit_run_length(x: &BinarySequence) -> Result<usize> {
    nonconstant(x)?;
    let n = x.len();
    Ok((0..n).filter(|&i| x.get(i) != x.get((i + 1) % n)).count())
}

pub fn count_run_pattern(x: &BinarySequence, p: &RunPattern) -> Result<usize> {
    let rv = cyclic_run_vector(x)?;
    let (l, r) = (rv.l, p.0.len());
    if r > l {
        return Ok(0);
    }
    Ok((0..l).filter(|&s| (0..r).all(|j| rv.lengths[(s + j) % l] == p.0[j])).count())
}

/// Per-total window tallies of the cyclic run vector.
///
/// `single[i] = N(R_i)` and `multi[i]` is the signed count
/// `sum (-1)^r N(R_{i_1}..R_{i_r})` over windows with `r >= 2` runs and total `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStats {
    pub n: usize,
    pub l: usize,
    pub single: Vec<i64>,
    pub multi: Vec<i64>,
}

impl RunStats {
    pub fn of(x: &BinarySequence) -> Result<Self> {
        let rv = cyclic_run_vector(x)?;
        let (n, l) = (x.len(), rv.l);
        let mut single = vec![0i64; n + 1];
        let mut multi = vec![0i64; n + 1];
        for s in 0..l {
            let mut total = 0;
            for r in 1..l {
                total += rv.lengths[(s + r - 1) % l];
                if total >= n {
                    break;
                }
                if r == 1 {
                    single[total] += 1;
                } else {
                    multi[total] += if r % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        Ok(RunStats { n, l, single, multi })
    }

    fn value_v2(&self, k: usize) -> i64 {
        let (n, l, k) = (self.n as i64, self.l as i64, k as i64);
        let mut acc = n - 2 * k * l + 4 * (k - 1) * self.single[1];
        for i in 2..k {
            let iu = i as usize;
            acc += 4 * (k - i) * (self.single[iu] - self.multi[iu]);
        }
        acc
    }
}

fn check_shift(x: &BinarySequence, k: usize) -> Result<()> {
    if k == 0 || k > x.len() {
        return Err(invalid(format!("shift {k} outside 1..={}", x.len())));
    }
    Ok(())
}

/// `P_X(k)` from the run structure, summing directly over every window of
/// consecutive runs whose total length is below `k`.
pub fn autocorrelation_via_runs(x: &BinarySequence, k: usize) -> Result<i64> {
    check_shift(x, k)?;
    let rv = cyclic_run_vector(x)?;
    let (n, l) = (x.len() as i64, rv.l);
    let ki = k as i64;
    let mut sum = 0i64;
    for s in 0..l {
        let mut total = 0usize;
        for r in 1..=l {
            total += rv.lengths[(s + r - 1) % l];
            if total >= k {
                break;
            }
            let sign = if r % 2 == 0 { 1 } else { -1 };
            sum += sign * (ki - total as i64);
        }
    }
    Ok(n - 2 * ki * l as i64 - 4 * sum)
}

/// The rearranged form grouping single runs against multi-run windows of
/// equal total. Shifts below 3 use [`autocorrelation_via_runs`].
pub fn autocorrelation_via_runs_v2(x: &BinarySequence, k: usize) -> Result<i64> {
    check_shift(x, k)?;
    if k < 3 {
        return autocorrelation_via_runs(x, k);
    }
    Ok(RunStats::of(x)?.value_v2(k))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub pass: bool,
    pub violations: Vec<String>,
}

impl CheckResult {
    fn from_violations(violations: Vec<String>) -> Self {
        CheckResult { pass: violations.is_empty(), violations }
    }
}

/// The run data forced on a sequence with off-peak autocorrelation `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoLevelProfile {
    pub n: usize,
    pub d: i64,
    pub l: usize,
    pub n_r1: usize,
}

pub fn two_level_profile(n: usize, d: i64) -> Result<TwoLevelProfile> {
    let diff = n as i64 - d;
    if diff.rem_euclid(4) != 0 {
        return Err(invalid(format!("{n} is not congruent to {d} mod 4")));
    }
    if diff <= 0 {
        return Err(invalid(format!("off-peak value {d} must be below {n}")));
    }
    Ok(TwoLevelProfile { n, d, l: (diff / 2) as usize, n_r1: (diff / 4) as usize })
}

impl TwoLevelProfile {
    pub fn check(&self, x: &BinarySequence) -> Result<CheckResult> {
        if x.len() != self.n {
            return Err(Error::PeriodMismatch { expected: self.n, found: x.len() });
        }
        let st = RunStats::of(x)?;
        let mut v = Vec::new();
        if st.l != self.l {
            v.push(format!("l = {}, expected {}", st.l, self.l));
        }
        if st.single[1] != self.n_r1 as i64 {
            v.push(format!("N(R1) = {}, expected {}", st.single[1], self.n_r1));
        }
        for k in 2..self.n.saturating_sub(1) {
            if st.single[k] != st.multi[k] {
                v.push(format!("k = {k}: N(R{k}) = {} but window sum = {}", st.single[k], st.multi[k]));
            }
        }
        Ok(CheckResult::from_violations(v))
    }
}

/// Aggregate run identities that characterize a compatible family with
/// constant sum `c`.
pub fn family_run_profile(family: &[BinarySequence], c: i64) -> Result<CheckResult> {
    let first = family.first().ok_or_else(|| invalid("empty family"))?;
    let n = first.len();
    if let Some(bad) = family.iter().find(|x| x.len() != n) {
        return Err(Error::PeriodMismatch { expected: n, found: bad.len() });
    }
    let nq = (n * family.len()) as i64;
    if (nq - c).rem_euclid(4) != 0 {
        return Err(invalid(format!("nq - c = {} is not divisible by 4", nq - c)));
    }
    let stats: Vec<RunStats> = family.iter().map(RunStats::of).collect::<Result<_>>()?;
    let mut v = Vec::new();
    let l: i64 = stats.iter().map(|s| s.l as i64).sum();
    if l != (nq - c) / 2 {
        v.push(format!("sum l = {l}, expected {}", (nq - c) / 2));
    }
    let r1: i64 = stats.iter().map(|s| s.single[1]).sum();
    if r1 != (nq - c) / 4 {
        v.push(format!("sum N(R1) = {r1}, expected {}", (nq - c) / 4));
    }
    for k in 2..n.saturating_sub(1) {
        let lhs: i64 = stats.iter().map(|s| s.single[k]).sum();
        let rhs: i64 = stats.iter().map(|s| s.multi[k]).sum();
        if lhs != rhs {
            v.push(format!("k = {k}: sum N(R{k}) = {lhs} but window sum = {rhs}"));
        }
    }
    Ok(CheckResult::from_violations(v))
}
