//! Exact scalar types used by the counting and dimension code.
//!
//! Everything that counts combinatorial objects is generic over [`Count`], so
//! the same routines run on machine integers (fast, overflow-checked in debug
//! builds) or on [`num_bigint::BigUint`] when values outgrow 128 bits.
//! Formulas that divide before they are known to be integral use [`Rational`].

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Zero};

/// An exact, non-negative counting scalar.
pub trait Count:
    Clone
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + From<u64>
    + Add<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + Send
    + Sync
{
}

impl<T> Count for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Zero
        + One
        + From<u64>
        + Add<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + AddAssign
        + Send
        + Sync
{
}

pub type Rational = Ratio<BigInt>;

/// `n choose k`, zero when `k > n`.
pub fn binomial<T: Count>(n: u64, k: u64) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc * T::from(n - i) / T::from(i + 1);
    }
    acc
}

/// Multinomial coefficient `(sum parts)! / prod(part!)`.
pub fn multinomial<T: Count>(parts: &[u64]) -> T {
    let mut total = 0u64;
    let mut acc = T::one();
    for &p in parts {
        total += p;
        acc = acc * binomial::<T>(total, p);
    }
    acc
}

/// Binomial with the convention used when evaluating printed formulas:
/// negative arguments give zero.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    BigInt::from(binomial::<BigUint>(n as u64, k as u64))
}

pub fn pow2(e: u32) -> BigUint {
    BigUint::one() << e as usize
}

pub fn gcd(a: usize, b: usize) -> usize {
    num_integer::gcd(a, b)
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact integer square root, if `v` is a perfect square.
pub fn exact_sqrt(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    let r = (v as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).find(|s| s * s == v)
}
