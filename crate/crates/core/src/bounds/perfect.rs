//! Perfect sequences: which weights a 2-level sequence with small off-peak
//! value can have, and bounds on how many there are.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bounds::general::bound_b;
use crate::bounds::matrices::split_window_sum;
use crate::bounds::{two_level_orbit_count, BoundReport, Method};
use crate::error::{invalid, Result};
use crate::scalar::exact_sqrt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectCandidate {
    pub d: i64,
    pub a: usize,
}

/// All `(d, a)` with `|d| <= 2`, `d = n mod 4` and `(n-1)d + n = (2a - n)^2`.
pub fn perfect_case_params(n: usize) -> Result<Vec<PerfectCandidate>> {
    if n < 2 {
        return Err(invalid("length must be at least 2"));
    }
    let n = n as i64;
    let mut out = vec![];
    for d in -2..=2i64 {
        if (d - n).rem_euclid(4) != 0 {
            continue;
        }
        let Some(s) = exact_sqrt((n - 1) * d + n) else { continue };
        if (n - s) % 2 != 0 {
            continue;
        }
        out.push(PerfectCandidate { d, a: ((n - s) / 2) as usize });
        if s > 0 {
            out.push(PerfectCandidate { d, a: ((n + s) / 2) as usize });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PerfectCase {
    /// `d = 1`, `n = 2u^2 + 2u + 1`, weight `u^2`.
    D1,
    /// `d = 2`, `n = 12u^2 - 16u + 6`, weight `6u^2 - 11u + 5`.
    D2First,
    /// `d = 2`, `n = 12u^2 - 4u + 2`, weight `6u^2 - 5u + 2`.
    D2Second,
}

struct Window {
    n: i64,
    weight: i64,
    units: i64,
    h: (i64, i64),
    a: (i64, i64),
}

fn window(u: i64, case: PerfectCase) -> Window {
    match case {
        PerfectCase::D1 => unreachable!(),
        PerfectCase::D2First => Window {
            n: 12 * u * u - 16 * u + 6,
            weight: 6 * u * u - 11 * u + 5,
            units: 3 * u * u - 4 * u + 1,
            h: (3 * u - 3, 3 * u * u - 4 * u),
            // Both endpoints are integers for every u.
            a: ((3 * u * u - 7 * u + 4) / 2, (9 * u * u - 15 * u + 2) / 2),
        },
        PerfectCase::D2Second => Window {
            n: 12 * u * u - 4 * u + 2,
            weight: 6 * u * u - 5 * u + 2,
            units: 3 * u * u - 2 * u,
            h: (3 * u - 2, 3 * u * u - u + 1),
            a: ((3 * u * u - 4 * u + 3).div_euclid(2), (3 * u * u + 2 * u).div_euclid(2)),
        },
    }
}

/// Bound on perfect sequences in one of the parametrised families.
pub fn perfect_bounds(u: u64, case: PerfectCase) -> Result<BoundReport> {
    let u = u as i64;
    if case == PerfectCase::D1 {
        if u < 1 {
            return Err(invalid("u must be at least 1"));
        }
        let n = (2 * u * u + 2 * u + 1) as usize;
        let mut r = bound_b(n, 1, 1, (u * u) as usize)?;
        r.params.insert("u".into(), u);
        return Ok(r);
    }
    let min_u = if case == PerfectCase::D2First { 2 } else { 1 };
    if u < min_u {
        return Err(invalid(format!("u must be at least {min_u} for {case:?}")));
    }
    let w = window(u, case);
    let value: BigUint =
        split_window_sum(w.weight as u64, w.units as u64, (w.h.0 as u64, w.h.1 as u64), (w.a.0 as u64, w.a.1 as u64));
    let mut r = BoundReport::new(&[("u", u), ("n", w.n), ("a", w.weight)], Method::Refined, value);
    r.notes.push(format!("h in [{}, {}], half weight in [{}, {}]", w.h.0, w.h.1, w.a.0, w.a.1));
    if w.h.1 >= w.units {
        r.notes.push(format!("h above {} contributes nothing", w.units - 1));
    }
    Ok(r.with_oracle(two_level_orbit_count(w.n as usize, w.weight as usize, 2)))
}
