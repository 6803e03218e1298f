//! Orbit-ring dimensions: closed forms against exact counts.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::scalar::{binomial_signed, gcd, is_prime, Rational};
use crate::schur::orbits::necklace_count;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub enumerated: u64,
    pub formula: Option<i64>,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl DimensionReport {
    pub(crate) fn new(enumerated: u64, formula: Option<i64>, notes: Vec<String>) -> Self {
        DimensionReport { enumerated, formula, matches: formula == Some(enumerated as i64), notes }
    }

    pub fn delta(&self) -> Option<i64> {
        self.formula.map(|f| f - self.enumerated as i64)
    }
}

fn to_u64(v: &BigUint) -> Result<u64> {
    v.to_u64().ok_or_else(|| invalid("count exceeds 64 bits"))
}

/// `(2^p + 2p - 2) / p` against the orbit count, for an odd prime `p`.
pub fn dim_sc_prime(p: u64) -> Result<DimensionReport> {
    if p == 2 || !is_prime(p) || p > 61 {
        return Err(invalid(format!("{p} is not an odd prime below 64")));
    }
    let enumerated = to_u64(&necklace_count(p as usize))?;
    let formula = ((1u64 << p) + 2 * p - 2) / p;
    Ok(DimensionReport::new(enumerated, Some(formula as i64), vec![]))
}

fn pow_int(p: i64, e: i64) -> Option<i64> {
    (e >= 0).then(|| p.pow(e as u32))
}

fn binom_opt(n: Option<i64>, k: Option<i64>) -> BigInt {
    match (n, k) {
        (Some(n), Some(k)) => binomial_signed(n, k),
        _ => BigInt::zero(),
    }
}

/// The printed prime-power dimension expression, evaluated exactly.
///
/// The coprime sum over `a` starts at `a = 1` (starting at 2 would break the
/// reduction to the prime case). Binomials with a negative or fractional
/// argument count as zero.
pub fn prime_power_formula(p: i64, m: i64) -> Rational {
    let pm = p.pow(m as u32);
    let frac = |num: BigInt, den: i64| Rational::new(num, BigInt::from(den));
    let mut total = Rational::from_integer(BigInt::from(2));

    let coprime: BigInt = (1..pm).filter(|&a| gcd(a as usize, pm as usize) == 1).map(|a| binomial_signed(pm, a)).sum();
    total += frac(coprime, pm);

    for i in 1..=m {
        let outer = p.pow((m - i + 1) as u32);
        let inner = p.pow((m - i) as u32);
        let s: BigInt =
            (1..inner).filter(|a| a % p != 0).map(|a| binomial_signed(outer, a * p) - binomial_signed(inner, a)).sum();
        total += frac(s, outer);
    }

    for i in 1..=m {
        let outer = p.pow((m - i + 1) as u32);
        let mut s = BigInt::zero();
        for k in 2..=(m - i) {
            for a in 1..p {
                let lead = binom_opt(Some(outer), pow_int(p, k - i + 1).map(|v| a * v));
                let tail: BigInt =
                    (1..=k).map(|j| binom_opt(pow_int(p, m - j - i), pow_int(p, k - j - i).map(|v| a * v))).sum();
                s += lead - tail;
            }
        }
        total += frac(s, outer);
    }
    total
}

/// Orbit count of period `p^m` next to the printed expression.
pub fn dim_sc_prime_power(p: u64, m: u32) -> Result<DimensionReport> {
    if p == 2 || !is_prime(p) || m == 0 {
        return Err(invalid(format!("need an odd prime and m >= 1, got p = {p}, m = {m}")));
    }
    let n = p.checked_pow(m).filter(|&n| n <= 4096).ok_or_else(|| invalid("p^m too large"))?;
    let enumerated = to_u64(&necklace_count(n as usize))?;
    let value = prime_power_formula(p as i64, m as i64);
    let mut notes = vec![format!("formula value {value}")];
    let formula = if value.is_integer() {
        value.to_integer().to_i64()
    } else {
        notes.push("formula value is not an integer".into());
        None
    };
    Ok(DimensionReport::new(enumerated, formula, notes))
}
