//! Exhaustive search for nontrivial compatible families.
//!
//! The pool is every nonconstant orbit of weight `2..=n/2`; weight-one
//! orbits only ever form the singleton family, and heavier orbits are
//! negations of pool members. A depth-first walk picks distinct pool members
//! in index order. Each pool member is summarised by its autocorrelation at
//! shifts `1..=n/2` (the rest follow by symmetry). A branch is cut as soon as
//! the chosen set is itself compatible, since every superset would then
//! split, and whenever the remaining picks cannot flatten the running
//! differences `S(k) - S(1)`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::pcoms::catalog::{Catalog, CatalogEntry};
use crate::pcoms::family::{canonical_key, trivial_family_gn1, EquivalenceKey};
use crate::scalar::binomial;
use crate::schur::orbits::enumerate_orbits;
use crate::sequence::BinarySequence;

pub const DEFAULT_MAX_N: usize = 10;
pub const DEFAULT_MAX_Q: usize = 12;
pub const DEFAULT_MAX_NODES: u64 = 2_000_000_000;
/// Hard ceiling on the period; the summary vectors are fixed-size.
pub const HARD_MAX_N: usize = 12;
const H: usize = HARD_MAX_N / 2;

type Vector = [i32; H];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub q_max: usize,
    /// Allow the same orbit more than once.
    pub multiset: bool,
    pub max_n: usize,
    pub max_q: usize,
    pub max_nodes: u64,
    /// Worker threads; 0 uses the global pool.
    pub shards: usize,
}

impl SearchConfig {
    pub fn new(q_max: usize) -> Self {
        SearchConfig {
            q_max,
            multiset: false,
            max_n: DEFAULT_MAX_N,
            max_q: DEFAULT_MAX_Q,
            max_nodes: DEFAULT_MAX_NODES,
            shards: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    pub pool: usize,
    pub estimate: BigUint,
    pub nodes: u64,
    pub compatible_sets: u64,
}

/// Upper bound on the number of subsets the walk may visit.
pub fn estimate_nodes(pool: usize, q_max: usize, multiset: bool) -> BigUint {
    (1..=q_max as u64)
        .map(
            |k| {
                if multiset {
                    binomial::<BigUint>(pool as u64 + k - 1, k)
                } else {
                    binomial::<BigUint>(pool as u64, k)
                }
            },
        )
        .sum()
}

struct Pool {
    h: usize,
    seqs: Vec<BinarySequence>,
    vecs: Vec<Vector>,
    /// Per suffix start, per coordinate: min and max of `v(k) - v(1)`.
    lo: Vec<Vector>,
    hi: Vec<Vector>,
}

impl Pool {
    fn build(n: usize) -> Result<Self> {
        let h = n / 2;
        let seqs: Vec<BinarySequence> =
            enumerate_orbits(n)?.into_iter().filter(|o| (2..=n / 2).contains(&o.weight())).map(|o| o.rep).collect();
        let vecs: Vec<Vector> = seqs
            .iter()
            .map(|x| {
                let mut v = [0; H];
                for (k, slot) in v.iter_mut().enumerate().take(h) {
                    *slot = x.autocorrelation_at(k + 1) as i32;
                }
                v
            })
            .collect();
        let m = seqs.len();
        let mut lo = vec![[i32::MAX; H]; m + 1];
        let mut hi = vec![[i32::MIN; H]; m + 1];
        for i in (0..m).rev() {
            for k in 1..h {
                let d = vecs[i][k] - vecs[i][0];
                lo[i][k] = lo[i + 1][k].min(d);
                hi[i][k] = hi[i + 1][k].max(d);
            }
        }
        Ok(Pool { h, seqs, vecs, lo, hi })
    }

    fn is_flat(&self, s: &Vector) -> bool {
        s[..self.h].iter().all(|&v| v == s[0])
    }

    /// Whether up to `r` further picks from index `start` on can make all
    /// coordinates equal.
    fn reachable(&self, s: &Vector, start: usize, r: usize) -> bool {
        if start >= self.seqs.len() || r == 0 {
            return false;
        }
        let r = r as i32;
        (1..self.h).all(|k| {
            let need = s[0] - s[k];
            let lo = r * self.lo[start][k].min(0);
            let hi = r * self.hi[start][k].max(0);
            lo <= need && need <= hi
        })
    }
}

struct Walk<'a> {
    pool: &'a Pool,
    q_max: usize,
    multiset: bool,
    nodes: u64,
    found: Vec<Vec<usize>>,
}

impl Walk<'_> {
    fn descend(&mut self, chosen: &mut Vec<usize>, sum: &Vector) {
        self.nodes += 1;
        if self.pool.is_flat(sum) {
            self.found.push(chosen.clone());
            return;
        }
        let r = self.q_max - chosen.len();
        let last = *chosen.last().expect("nonempty");
        let start = if self.multiset { last } else { last + 1 };
        if !self.pool.reachable(sum, start, r) {
            return;
        }
        for i in start..self.pool.seqs.len() {
            let mut next = *sum;
            for (slot, v) in next.iter_mut().zip(&self.pool.vecs[i]) {
                *slot += v;
            }
            chosen.push(i);
            self.descend(chosen, &next);
            chosen.pop();
        }
    }
}

/// Whether some proper nonempty sub-multiset of `idx` is already compatible.
fn splits(pool: &Pool, idx: &[usize]) -> bool {
    let q = idx.len();
    (1..(1u32 << q) - 1).filter(|m| m & 1 == 1).any(|mask| {
        let mut s = [0i32; H];
        for (j, &i) in idx.iter().enumerate() {
            if mask >> j & 1 == 1 {
                for (slot, v) in s.iter_mut().zip(&pool.vecs[i]) {
                    *slot += v;
                }
            }
        }
        pool.is_flat(&s)
    })
}

fn constant(pool: &Pool, idx: &[usize]) -> i64 {
    idx.iter().map(|&i| pool.vecs[i][0] as i64).sum()
}

type Found = BTreeMap<(usize, i64, EquivalenceKey), Vec<String>>;

fn keep_min(map: &mut Found, key: (usize, i64, EquivalenceKey), fam: Vec<String>) {
    map.entry(key)
        .and_modify(|cur| {
            if fam < *cur {
                *cur = fam.clone();
            }
        })
        .or_insert(fam);
}

/// Every nontrivial family with at most `cfg.q_max` members, one per
/// equivalence class.
pub fn search_with_stats(n: usize, cfg: &SearchConfig) -> Result<(Catalog, SearchStats)> {
    if n < 2 || n > cfg.max_n.min(HARD_MAX_N) {
        return Err(invalid(format!("n = {n} outside 2..={}", cfg.max_n.min(HARD_MAX_N))));
    }
    if cfg.q_max == 0 || cfg.q_max > cfg.max_q {
        return Err(invalid(format!("q_max = {} outside 1..={}", cfg.q_max, cfg.max_q)));
    }
    let pool = Pool::build(n)?;
    let estimate = estimate_nodes(pool.seqs.len(), cfg.q_max, cfg.multiset);
    if estimate > BigUint::from(cfg.max_nodes) {
        return Err(Error::LimitExceeded {
            reason: format!("node cap {} for n = {n}, q_max = {}", cfg.max_nodes, cfg.q_max),
            estimate: estimate.to_string(),
        });
    }

    let nodes = AtomicU64::new(0);
    let compatible = AtomicU64::new(0);
    let run = || {
        (0..pool.seqs.len())
            .into_par_iter()
            .map(|root| {
                let mut walk = Walk { pool: &pool, q_max: cfg.q_max, multiset: cfg.multiset, nodes: 0, found: vec![] };
                walk.descend(&mut vec![root], &pool.vecs[root]);
                nodes.fetch_add(walk.nodes, Ordering::Relaxed);
                compatible.fetch_add(walk.found.len() as u64, Ordering::Relaxed);
                let mut local = Found::new();
                for idx in walk.found {
                    if splits(&pool, &idx) {
                        continue;
                    }
                    let members: Vec<BinarySequence> = idx.iter().map(|&i| pool.seqs[i].clone()).collect();
                    let mut strings: Vec<String> = members.iter().map(|x| x.to_string()).collect();
                    strings.sort();
                    keep_min(&mut local, (idx.len(), constant(&pool, &idx), canonical_key(&members)), strings);
                }
                local
            })
            .reduce(Found::new, |mut a, b| {
                for (k, v) in b {
                    keep_min(&mut a, k, v);
                }
                a
            })
    };
    let mut found = if cfg.shards > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.shards)
            .build()
            .map_err(|e| invalid(format!("thread pool: {e}")))?
            .install(run)
    } else {
        run()
    };

    let g = trivial_family_gn1(n)?;
    keep_min(&mut found, (1, g.c, g.key()), g.strings());

    let mut entries: BTreeMap<(usize, i64), Vec<Vec<String>>> = BTreeMap::new();
    for ((q, c, _), fam) in found {
        entries.entry((q, c)).or_default().push(fam);
    }
    let entries = entries
        .into_iter()
        .map(|((q, c), mut families)| {
            families.sort();
            CatalogEntry { q, c, families }
        })
        .collect();
    let stats = SearchStats {
        pool: pool.seqs.len(),
        estimate,
        nodes: nodes.into_inner(),
        compatible_sets: compatible.into_inner(),
    };
    Ok((Catalog { n, entries }, stats))
}

pub fn search(n: usize, q_max: usize) -> Result<Catalog> {
    Ok(search_with_stats(n, &SearchConfig::new(q_max))?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(c: &Catalog) -> Vec<(usize, i64, usize)> {
        c.entries.iter().map(|e| (e.q, e.c, e.families.len())).collect()
    }

    #[test]
    fn n4_only_hadamard_row() {
        let c = search(4, 12).unwrap();
        assert_eq!(summary(&c), vec![(1, 0, 1)]);
        assert_eq!(c.entries[0].families[0], vec!["+---"]);
    }

    #[test]
    fn n5_and_n7() {
        assert_eq!(summary(&search(5, 12).unwrap()), vec![(1, 1, 1), (2, -2, 1)]);
        assert_eq!(summary(&search(7, 12).unwrap()), vec![(1, -1, 1), (1, 3, 1), (3, -3, 1), (3, 1, 1)]);
    }

    #[test]
    fn multiset_admits_repeats() {
        let mut cfg = SearchConfig::new(3);
        cfg.multiset = true;
        let (c, _) = search_with_stats(4, &cfg).unwrap();
        assert!(c.entries.iter().any(|e| (e.q, e.c) == (3, -4)));
    }

    #[test]
    fn limits() {
        assert!(search(11, 3).is_err());
        assert!(search(6, 13).is_err());
        let mut cfg = SearchConfig::new(12);
        cfg.max_nodes = 10;
        assert!(matches!(search_with_stats(8, &cfg), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn shards_do_not_change_output() {
        let mut cfg = SearchConfig::new(6);
        let a = search_with_stats(8, &cfg).unwrap().0;
        cfg.shards = 1;
        let b = search_with_stats(8, &cfg).unwrap().0;
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
