//! Compositions with a prescribed number of unit parts.
//!
//! A run vector splits into the lengths of its `+` runs and its `-` runs;
//! each half is a composition whose unit parts are the runs of length one.
//! Every bound in this module is a sum of products of such counts.

use serde::{Deserialize, Serialize};

use crate::scalar::{binomial, multinomial, Count};

/// Compositions of `target` into `parts_total` parts, exactly `ones` of
/// which equal 1 and the rest at least `min_other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub target: u64,
    pub parts_total: u64,
    pub ones: u64,
    pub min_other: u64,
}

impl PartitionSpec {
    pub fn new(target: u64, parts_total: u64, ones: u64) -> Self {
        PartitionSpec { target, parts_total, ones, min_other: 2 }
    }

    pub fn feasible(&self) -> bool {
        self.ones <= self.parts_total && {
            let rest = self.parts_total - self.ones;
            let floor = self.ones + self.min_other * rest;
            floor <= self.target && (rest > 0 || self.target == self.ones)
        }
    }
}

/// Non-increasing partitions of `total` into exactly `k` parts in `min..=max`.
fn partitions(total: u64, k: u64, min: u64, max: u64, cur: &mut Vec<u64>, out: &mut dyn FnMut(&[u64])) {
    if k == 0 {
        if total == 0 {
            out(cur);
        }
        return;
    }
    if total < k * min {
        return;
    }
    let top = max.min(total - (k - 1) * min);
    for p in (min..=top).rev() {
        if p * k < total {
            break;
        }
        cur.push(p);
        partitions(total - p, k - 1, min, p, cur, out);
        cur.pop();
    }
}

/// Sum over partitions of the multinomial of part multiplicities.
///
/// Each partition of `target - ones` into `parts_total - ones` parts of size
/// at least `min_other`, grouped by multiplicity `i_2, i_3, ...`, contributes
/// `parts_total! / (ones! i_2! i_3! ...)`: the number of ways to order it.
pub fn multinomial_partition_sum<T: Count>(spec: &PartitionSpec) -> T {
    if !spec.feasible() {
        return T::zero();
    }
    let rest = spec.parts_total - spec.ones;
    let mut acc = T::zero();
    let mut cur = Vec::new();
    partitions(spec.target - spec.ones, rest, spec.min_other, u64::MAX, &mut cur, &mut |parts: &[u64]| {
        let mut mults = vec![spec.ones];
        let mut i = 0;
        while i < parts.len() {
            let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
            mults.push(j as u64);
            i += j;
        }
        acc += multinomial::<T>(&mults);
    });
    acc
}

/// Closed form of [`multinomial_partition_sum`] for `min_other = 2`: place
/// the unit parts, then split the remainder into parts of size at least two.
pub fn compositions_with_ones<T: Count>(target: u64, parts: u64, ones: u64) -> T {
    if ones > parts || target < ones {
        return T::zero();
    }
    let rest = parts - ones;
    let s = target - ones;
    if rest == 0 {
        return if s == 0 { T::one() } else { T::zero() };
    }
    if s < 2 * rest {
        return T::zero();
    }
    binomial::<T>(parts, ones) * binomial::<T>(s - rest - 1, rest - 1)
}

/// Compositions of `target` of any length with exactly `ones` unit parts and
/// every other part at least two. The empty composition counts for zero.
pub fn compositions_any_length<T: Count>(target: u64, ones: u64) -> T {
    if target < ones {
        return T::zero();
    }
    let mut acc = T::zero();
    for rest in 0..=(target - ones) / 2 {
        acc += compositions_with_ones::<T>(target, ones + rest, ones);
    }
    acc
}

/// Table `t[target][ones]` of [`compositions_any_length`].
pub fn composition_table<T: Count>(max_target: u64, max_ones: u64) -> Vec<Vec<T>> {
    (0..=max_target).map(|t| (0..=max_ones).map(|o| compositions_any_length::<T>(t, o)).collect()).collect()
}

/// Counts the compositions one by one. Exponential; an oracle for tests.
pub fn count_compositions_brute(target: u64, parts: u64, ones: u64) -> u64 {
    fn go(left: u64, parts: u64, ones: u64) -> u64 {
        if parts == 0 {
            return (left == 0 && ones == 0) as u64;
        }
        let mut n = 0;
        if ones > 0 && left >= 1 {
            n += go(left - 1, parts - 1, ones - 1);
        }
        for p in 2..=left {
            n += go(left - p, parts - 1, ones);
        }
        n
    }
    go(target, parts, ones)
}
