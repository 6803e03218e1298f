//! The run-count bound for a family and its exhaustive counterpart.
//!
//! Concatenating the canonical representatives of a family gives a word
//! that starts with `+`, ends with `-`, and has `l = (nq - c) / 2` runs, half
//! of each sign. It is fixed by the compositions `P` and `Q` of its `+` and
//! `-` lengths, so counting pairs with `h` unit parts in `P` over the
//! admissible `h` bounds the number of families.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bounds::partitions::compositions_with_ones;
use crate::bounds::{BoundReport, Method, ORACLE_CUTOFF};
use crate::error::{invalid, Result};
use crate::scalar::Count;
use crate::schur::orbits::enumerate_orbits;

/// Admissible numbers of unit runs in `P` and in `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunOneRange {
    pub p: (u64, u64),
    pub q: (u64, u64),
}

/// Unit-run ranges for a word with `l` runs and weight `a`, `l/2 < a < l`.
pub fn run_one_count_range(l: u64, a: u64) -> Result<RunOneRange> {
    if !l.is_multiple_of(2) || l < 4 {
        return Err(invalid(format!("run count {l} must be even and at least 4")));
    }
    if !(l / 2 < a && a < l) {
        return Err(invalid(format!("weight {a} outside ({}, {l})", l / 2)));
    }
    let half = l / 2;
    Ok(RunOneRange { p: (l - a, half - 1), q: (1, half - (l - a)) })
}

fn params(n: usize, q: usize, c: i64, a: usize) -> [(&'static str, i64); 4] {
    [("n", n as i64), ("q", q as i64), ("c", c), ("a", a as i64)]
}

/// `sum_h M(a, l/2, h) M(nq - a, l/2, l/2 - h)` for `h` in `lo..=hi`.
pub(crate) fn run_sum<T: Count>(total: u64, a: u64, half: u64, lo: u64, hi: u64) -> T {
    let mut acc = T::zero();
    if a > total {
        return acc;
    }
    for h in lo..=hi.min(half) {
        acc += compositions_with_ones::<T>(a, half, h) * compositions_with_ones::<T>(total - a, half, half - h);
    }
    acc
}

/// The bound on families with `q` members of length `n`, constant `c` and
/// total weight `a`, without the exhaustive count.
pub fn bound_b_in<T: Count>(n: usize, q: usize, c: i64, a: usize) -> Result<BoundReport<T>> {
    if n < 2 || q == 0 || a > n * q {
        return Err(invalid(format!("no words of weight {a} in {q} blocks of length {n}")));
    }
    let p = params(n, q, c, a);
    if q == 1 && c == n as i64 - 4 {
        return Ok(BoundReport::inapplicable(
            &p,
            Method::Formula,
            "single sequence with off-peak value n - 4: weight-one rows have no run of length two",
        ));
    }
    let length = (n * q) as i64;
    let twice = length - c;
    if twice <= 0 || twice % 4 != 0 {
        let mut r = BoundReport::new(&p, Method::Formula, T::zero());
        r.notes.push(format!("nq - c = {twice} is not a positive multiple of 4"));
        return Ok(r);
    }
    let l = (twice / 2) as u64;
    let half = l / 2;
    let lo = l.saturating_sub(a as u64).max(1);
    let value = if half >= 1 { run_sum(length as u64, a as u64, half, lo, half - 1) } else { T::zero() };
    Ok(BoundReport::new(&p, Method::Formula, value))
}

/// [`bound_b_in`] with the exhaustive count attached when it is cheap.
pub fn bound_b(n: usize, q: usize, c: i64, a: usize) -> Result<BoundReport<BigUint>> {
    let r = bound_b_in::<BigUint>(n, q, c, a)?;
    if !r.applicable {
        return Ok(r);
    }
    let oracle = family_count_oracle(n, q, c, a)?;
    Ok(r.with_oracle(oracle))
}

/// Ordered `q`-tuples of nonconstant orbits of length `n` whose
/// autocorrelations sum to `c` at every nontrivial shift and whose weights add
/// up to `a`. Tuples made only of weight-1 and weight-`(n-1)` orbits are left
/// out: they have no run of length two. `None` when the tuple space exceeds
/// the cutoff.
pub fn family_count_oracle(n: usize, q: usize, c: i64, a: usize) -> Result<Option<u64>> {
    Ok(family_count_table(n, q)?.map(|t| t.get(&(a, c)).copied().unwrap_or(0)))
}

/// The counts of [`family_count_oracle`] for every `(a, c)` at once.
pub fn family_count_table(n: usize, q: usize) -> Result<Option<BTreeMap<(usize, i64), u64>>> {
    if n > 20 || q == 0 {
        return Ok(None);
    }
    let orbits: Vec<_> = enumerate_orbits(n)?.into_iter().filter(|o| !o.rep.is_constant()).collect();
    let space = u32::try_from(q).ok().and_then(|q| (orbits.len() as u64).checked_pow(q));
    if space.is_none_or(|s| s > ORACLE_CUTOFF) {
        return Ok(None);
    }
    let h = n / 2;
    let all: Vec<(usize, Vec<i64>)> =
        orbits.iter().map(|o| (o.weight(), (1..=h).map(|k| o.rep.autocorrelation_at(k)).collect())).collect();
    let thin: Vec<(usize, Vec<i64>)> = all.iter().filter(|(w, _)| *w == 1 || *w == n - 1).cloned().collect();
    let flat = |pool: &[(usize, Vec<i64>)]| -> BTreeMap<(usize, i64), u64> {
        let mut states: HashMap<(usize, Vec<i64>), u64> = HashMap::new();
        states.insert((0, vec![0; h]), 1);
        for _ in 0..q {
            let mut next: HashMap<(usize, Vec<i64>), u64> = HashMap::new();
            for ((w, s), m) in &states {
                for (ow, ov) in pool {
                    let v: Vec<i64> = s.iter().zip(ov).map(|(x, y)| x + y).collect();
                    *next.entry((w + ow, v)).or_default() += m;
                }
            }
            states = next;
        }
        let mut out = BTreeMap::new();
        for ((w, s), m) in states {
            if s.iter().all(|&v| v == s[0]) {
                *out.entry((w, s[0])).or_default() += m;
            }
        }
        out
    };
    let mut table = flat(&all);
    for (k, m) in flat(&thin) {
        if let Some(v) = table.get_mut(&k) {
            *v -= m;
        }
    }
    table.retain(|_, v| *v > 0);
    Ok(Some(table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(n: usize, q: usize, c: i64, a: usize) -> u64 {
        bound_b_in::<u64>(n, q, c, a).unwrap().value
    }

    #[test]
    fn worked_value() {
        let r = bound_b(5, 2, -2, 4).unwrap();
        assert_eq!(r.value, BigUint::from(18u32));
        assert_eq!(r.oracle, Some(2));
        assert!(r.dominated());
    }

    #[test]
    fn excluded_and_empty_cases() {
        let r = bound_b(4, 1, 0, 1).unwrap();
        assert!(!r.applicable);
        // l = 2 leaves no room for h.
        assert_eq!(value(6, 1, 2, 1), 0);
        // nq - c not divisible by 4.
        assert_eq!(value(5, 1, 3, 2), 0);
        assert!(bound_b(3, 1, -1, 4).is_err());
    }

    #[test]
    fn unit_run_ranges() {
        let m = 3;
        let r = run_one_count_range(2 * m * m, 2 * m * m - m).unwrap();
        assert_eq!(r.p, (m, m * m - 1));
        assert_eq!(r.p.1 + r.q.0, m * m);
        let p: u64 = 19;
        let r = run_one_count_range(p.div_ceil(2), (p - 1) / 2).unwrap();
        assert_eq!(r.p, (1, (p - 3) / 4));
        assert_eq!(r.q, (1, (p - 3) / 4));
        assert!(run_one_count_range(10, 5).is_err());
        assert!(run_one_count_range(9, 6).is_err());
    }

    #[test]
    fn reflection_symmetry() {
        for n in 2..=9 {
            for q in 1..=3 {
                for c in -(n as i64 * q as i64)..=(n * q) as i64 {
                    for a in 0..=n * q {
                        let x = bound_b_in::<u64>(n, q, c, a).unwrap();
                        let y = bound_b_in::<u64>(n, q, c, n * q - a).unwrap();
                        assert_eq!(x.value, y.value, "{n} {q} {c} {a}");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_matches_known_families() {
        // {+-+-----, +++--+--} in either order, and its negation at weight 10.
        assert!(family_count_oracle(8, 2, 0, 6).unwrap().unwrap() >= 2);
        assert!(family_count_oracle(8, 2, 0, 10).unwrap().unwrap() >= 2);
        assert_eq!(family_count_oracle(7, 1, -1, 3).unwrap(), Some(2));
        assert_eq!(family_count_oracle(9, 3, -3, 30).unwrap(), Some(0));
    }
}
