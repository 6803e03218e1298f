//! Bounds attached to Hadamard-type matrices: circulant, one and two
//! circulant cores, and Goethals-Seidel arrays.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bounds::general::{bound_b, run_sum};
use crate::bounds::partitions::composition_table;
use crate::bounds::{two_level_orbit_count, BoundReport, Method};
use crate::error::{invalid, precondition, Result};
use crate::scalar::Count;

/// The window sum shared by the refined bounds.
///
/// A word of weight `total` made of two halves is split by how many of its
/// unit `+` runs (`h` in total, `d` of them in the front half) and how much
/// of its weight (`a`, of which `a1` in front) sit in each half; the `-`
/// runs are split the same way with `e` and `b1`. Each half contributes the
/// number of compositions with the prescribed unit parts.
pub(crate) fn split_window_sum<T: Count>(total: u64, unit_runs: u64, h_range: (u64, u64), a_range: (u64, u64)) -> T {
    let table: Vec<Vec<T>> = composition_table(total, unit_runs.max(h_range.1));
    let x = |t: u64, o: u64| table[t as usize][o as usize].clone();
    let half_pair = |a: u64, h: u64| -> T {
        let mut acc = T::zero();
        for d in 0..=h {
            for a1 in 0..=a {
                acc += x(a1, d) * x(a - a1, h - d);
            }
        }
        acc
    };
    (h_range.0..=h_range.1)
        .into_par_iter()
        .map(|h| {
            let mut acc = T::zero();
            if h > unit_runs {
                return acc;
            }
            for a in a_range.0..=a_range.1.min(total) {
                acc += half_pair(a, h) * half_pair(total - a, unit_runs - h);
            }
            acc
        })
        .reduce(T::zero, |a, b| a + b)
}

/// Refined bound on circulant Hadamard matrices of order `4m^2`.
pub fn circulant_hadamard_bound(m: u64) -> Result<BoundReport> {
    let p = [("m", m as i64), ("n", (4 * m * m) as i64)];
    if m < 2 {
        return Ok(BoundReport::inapplicable(
            &p,
            Method::Refined,
            "m = 1 is the order-4 matrix, a single sequence of weight one",
        ));
    }
    let total = 2 * m * m - m;
    let units = m * m;
    let value: BigUint = split_window_sum(total, units, (m, m * m - 1), ((m * m - m) / 2, (3 * m * m - m) / 2));
    let mut r = BoundReport::new(&p, Method::Refined, value);
    let plain: BigUint = run_sum(4 * m * m, total, units, m, units - 1);
    r.notes.push(format!("unrefined run-count bound: {plain}"));
    let oracle = two_level_orbit_count((4 * m * m) as usize, total as usize, 0);
    Ok(r.with_oracle(oracle))
}

fn check_one_core(p: u64) -> Result<()> {
    if p % 4 != 3 || p < 7 {
        return Err(precondition(format!("one-core length {p} must be 3 mod 4 and at least 7")));
    }
    Ok(())
}

/// Unit `+` runs allowed once short and long extremes are ruled out, `p > 11`.
/// Both ends are strict, so the interval is `[2, (p - 3)/4 - 1]`.
pub fn core_block_range(p: u64) -> Result<(u64, u64)> {
    check_one_core(p)?;
    if p <= 11 {
        return Err(precondition(format!("the refined range needs p > 11, got {p}")));
    }
    Ok((2, (p - 3) / 4 - 1))
}

/// Bound on single sequences of length `p` with constant `-1`, the first
/// rows of one-core Hadamard matrices of order `p + 1`.
pub fn one_core_bound(p: u64) -> Result<BoundReport> {
    check_one_core(p)?;
    let half = (p + 1) / 4;
    let (lo, hi, note) =
        if p > 11 { (2, (p - 3) / 4, "h in [2, (p-3)/4]") } else { (1, (p - 3) / 4, "p <= 11: h in [1, (p-3)/4]") };
    let a = (p - 1) / 2;
    let value: BigUint = run_sum(p, a, half, lo, hi);
    let mut r = BoundReport::new(&[("p", p as i64), ("a", a as i64)], Method::Formula, value);
    r.notes.push(note.to_string());
    Ok(r.with_oracle(two_level_orbit_count(p as usize, a as usize, -1)))
}

/// Bound on pairs of length `n` with constant `-2`, the cores of Hadamard
/// matrices of order `2n + 2`.
pub fn two_core_bound(n: usize) -> Result<BoundReport> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(precondition(format!("two-core length {n} must be odd and at least 3")));
    }
    bound_b(n, 2, -2, n - 1)
}

/// Bound on Goethals-Seidel quadruples of length `n` with row sums
/// `s = (a, b, c, d)`.
pub fn gs_bound(n: usize, s: [i64; 4]) -> Result<BoundReport> {
    if n.is_multiple_of(2) {
        return Err(precondition(format!("Goethals-Seidel length {n} must be odd")));
    }
    let squares: i64 = s.iter().map(|x| x * x).sum();
    if squares != 4 * n as i64 {
        return Err(precondition(format!("row sums {s:?} give {squares}, not 4n = {}", 4 * n)));
    }
    if s.iter().any(|&x| x <= 0 || x > n as i64) {
        return Err(invalid(format!("row sums {s:?} must lie in 1..={n}")));
    }
    let sum: i64 = s.iter().sum();
    let weights: Vec<i64> = s.iter().map(|x| (n as i64 - x) / 2).collect();
    let a = 2 * n as i64 - sum / 2;
    let mut r = bound_b(n, 4, 0, a as usize)?;
    for (k, v) in ["ra", "rb", "rc", "rd"].iter().zip(s) {
        r.params.insert(k.to_string(), v);
    }
    r.notes.push(format!("member weights {weights:?}"));
    if s.contains(&(n as i64)) {
        r.notes.push("a constant member has no run structure and is outside the count".to_string());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_small_orders() {
        let r = circulant_hadamard_bound(2).unwrap();
        assert_eq!(r.oracle, Some(0));
        assert!(r.value > BigUint::from(0u32));
        assert!(!circulant_hadamard_bound(1).unwrap().applicable);
        // Exceeds 64 bits at m = 6.
        let big = circulant_hadamard_bound(6).unwrap();
        assert!(big.value > BigUint::from(u64::MAX));
    }

    #[test]
    fn circulant_regression_value() {
        let r = circulant_hadamard_bound(2).unwrap();
        assert_eq!(r.value.to_string(), "136");
    }

    #[test]
    fn split_sum_matches_literal_loops() {
        use crate::bounds::partitions::compositions_any_length as x;
        let m = 2u64;
        let (total, units) = (2 * m * m - m, m * m);
        let mut lit = 0u64;
        for h in m..=m * m - 1 {
            for a in (m * m - m) / 2..=(3 * m * m - m) / 2 {
                let mut front = 0u64;
                for d in 0..=h {
                    for a1 in 0..=a {
                        front += x::<u64>(a1, d) * x::<u64>(a - a1, h - d);
                    }
                }
                let mut back = 0u64;
                for e in 0..=units - h {
                    for b1 in 0..=total - a {
                        back += x::<u64>(b1, e) * x::<u64>(total - a - b1, units - h - e);
                    }
                }
                lit += front * back;
            }
        }
        let fast: u64 = split_window_sum(total, units, (m, m * m - 1), ((m * m - m) / 2, (3 * m * m - m) / 2));
        assert_eq!(lit, fast);
    }

    #[test]
    fn one_core() {
        let r = one_core_bound(7).unwrap();
        assert_eq!(r.value, BigUint::from(4u32));
        assert_eq!(r.oracle, Some(2));
        let r = one_core_bound(19).unwrap();
        assert!(r.dominated());
        assert_eq!(core_block_range(19).unwrap(), (2, 3));
        assert!(core_block_range(11).is_err());
        assert!(one_core_bound(9).is_err());
    }

    #[test]
    fn two_core_n5() {
        let r = two_core_bound(5).unwrap();
        assert_eq!(r.value, BigUint::from(18u32));
        assert!(r.dominated());
        assert!(two_core_bound(6).is_err());
    }

    #[test]
    fn goethals_seidel() {
        let r = gs_bound(3, [1, 1, 1, 3]).unwrap();
        assert_eq!(r.params["a"], 3);
        assert_eq!(r.value, BigUint::from(0u32));
        assert!(r.dominated());
        assert!(gs_bound(3, [1, 1, 1, 1]).is_err());
        assert!(gs_bound(4, [2, 2, 2, 2]).is_err());
    }

    #[test]
    fn split_sum_is_generic() {
        let a: u64 = split_window_sum(6, 4, (2, 3), (1, 5));
        let b: BigUint = split_window_sum(6, 4, (2, 3), (1, 5));
        assert_eq!(BigUint::from(a), b);
    }
}
