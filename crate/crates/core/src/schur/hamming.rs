//! Weight classes `G_n(a)` and their elementwise products.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::sequence::words_of_weight;

fn check_weights(n: usize, a: usize, b: usize) -> Result<()> {
    if a > n || b > n {
        return Err(invalid(format!("weights ({a}, {b}) exceed n = {n}")));
    }
    Ok(())
}

/// Closed-form product of two weight classes, as the set of weights hit.
///
/// Each branch of the closed form covers its own range of `(a, b)`; pairs
/// outside both are handled by swapping the operands.
pub fn hamming_product(n: usize, a: usize, b: usize) -> Result<BTreeSet<usize>> {
    check_weights(n, a, b)?;
    let half = n / 2;
    let first = |a: usize, b: usize| a <= half && a <= b && b <= n - a;
    let second = |a: usize, b: usize| a > half && n - a <= b && b <= a;
    let (a, b) = if first(a, b) || second(a, b) { (a, b) } else { (b, a) };
    if first(a, b) {
        Ok((0..=a).map(|i| n - a - b + 2 * i).collect())
    } else if second(a, b) {
        Ok((0..=n - a).map(|i| a + b - n + 2 * i).collect())
    } else {
        Err(invalid(format!("({a}, {b}) not covered for n = {n}")))
    }
}

/// Weights reached by multiplying every member of `G_n(a)` with every member
/// of `G_n(b)`.
pub fn hamming_product_brute(n: usize, a: usize, b: usize) -> Result<BTreeSet<usize>> {
    check_weights(n, a, b)?;
    let mask = (1u64 << n) - 1;
    let ys: Vec<u64> = words_of_weight(n, b).collect();
    let mut out = BTreeSet::new();
    for x in words_of_weight(n, a) {
        for &y in &ys {
            out.insert((!(x ^ y) & mask).count_ones() as usize);
        }
    }
    Ok(out)
}

/// Bitmask table `t[i][j]` of weights in `G_n(i) G_n(j)`, by brute force.
pub fn product_table(n: usize) -> Vec<Vec<u64>> {
    assert!(n <= 12, "product table is exhaustive; n = {n} too large");
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| hamming_product_brute(n, i, j).expect("in range").into_iter().fold(0u64, |m, w| m | (1 << w)))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    pub n: usize,
    pub even_size: u64,
    pub odd_size: u64,
    pub even_closed: bool,
    pub odd_closed: bool,
}

/// Sizes of the even and odd weight unions and whether each is closed
/// under products.
pub fn even_odd_partition(n: usize) -> Result<ParityReport> {
    if n == 0 || n > 12 {
        return Err(invalid(format!("parity check needs 1 <= n <= 12, got {n}")));
    }
    let table = product_table(n);
    let binom = |k: usize| crate::scalar::binomial::<u64>(n as u64, k as u64);
    let closed = |parity: usize| {
        let members: Vec<usize> = (0..=n).filter(|w| w % 2 == parity).collect();
        members.iter().all(|&i| members.iter().all(|&j| (0..=n).all(|w| table[i][j] >> w & 1 == 0 || w % 2 == parity)))
    };
    Ok(ParityReport {
        n,
        even_size: (0..=n).step_by(2).map(binom).sum(),
        odd_size: (1..=n).step_by(2).map(binom).sum(),
        even_closed: closed(0),
        odd_closed: closed(1),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteSet {
    pub n: usize,
    pub a: usize,
    pub lo: usize,
    pub hi: usize,
    pub members: Vec<usize>,
}

/// The weight classes whose pairwise products all contain `G_n(a)`.
///
/// Members are the weights in `[(n-a)/2, (n+a)/2]` of the same parity as the
/// endpoints; the classes in between never reach `G_n(a)`.
pub fn complete_sh_set(n: usize, a: usize) -> Result<CompleteSet> {
    if a >= n {
        return Err(invalid(format!("need a < n, got a = {a}, n = {n}")));
    }
    if !(n - a).is_multiple_of(2) {
        return Err(invalid(format!("n - a = {} must be even", n - a)));
    }
    let lo = (n - a) / 2;
    let hi = (n + a) / 2;
    Ok(CompleteSet { n, a, lo, hi, members: (lo..=hi).step_by(2).collect() })
}

/// Checks both defining conditions by exhaustive products.
pub fn verify_complete_set(set: &CompleteSet) -> bool {
    let table = product_table(set.n);
    let hits = |i: usize, j: usize| table[i][j] >> set.a & 1 == 1;
    let pairwise = set.members.iter().all(|&i| set.members.iter().all(|&j| hits(i, j)));
    let maximal = (0..=set.n)
        .filter(|b| !set.members.contains(b))
        .all(|b| !(hits(b, b) && set.members.iter().all(|&k| hits(b, k))));
    pairwise && maximal
}
