//! Circulant orbits `X_C` and their free/symmetric classification.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::scalar::{divisors, euler_phi, pow2};
use crate::sequence::{canonical_bits, BinarySequence};

/// Largest period enumerated exhaustively.
pub const MAX_ENUM_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CirculantOrbit {
    #[serde(with = "seq_string")]
    pub rep: BinarySequence,
    pub size: usize,
    pub free: bool,
    pub sym: bool,
    pub d: usize,
}

pub(crate) mod seq_string {
    use super::BinarySequence;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BinarySequence, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BinarySequence, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

impl CirculantOrbit {
    pub fn of(x: &BinarySequence) -> Self {
        let rep = x.canonical_rotation();
        let d = rep.period();
        CirculantOrbit { size: d, free: d == rep.len() || rep.is_constant(), sym: rep.is_symmetric(), d, rep }
    }

    pub fn n(&self) -> usize {
        self.rep.len()
    }

    pub fn members(&self) -> Vec<BinarySequence> {
        self.rep.rotations()
    }

    pub fn weight(&self) -> usize {
        self.rep.weight()
    }

    /// Constant orbits count as both free and non-free.
    pub fn in_fhat(&self) -> bool {
        self.d < self.n() || self.rep.is_constant()
    }
}

/// Free/non-free and symmetry flags of an orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitClass {
    pub free: bool,
    pub fhat: bool,
    pub d: usize,
    pub symmetric: bool,
}

pub fn classify_orbit(o: &CirculantOrbit) -> OrbitClass {
    OrbitClass { free: o.free, fhat: o.in_fhat(), d: o.d, symmetric: o.sym }
}

/// All orbits of period `n`, sorted by representative.
pub fn enumerate_orbits(n: usize) -> Result<Vec<CirculantOrbit>> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(invalid(format!("orbit enumeration supports 1..={MAX_ENUM_N}, got {n}")));
    }
    let reps: Vec<u64> = (0..1u64 << n).into_par_iter().filter(|&b| canonical_bits(n, b) == b).collect();
    let mut out: Vec<CirculantOrbit> =
        reps.into_par_iter().map(|b| CirculantOrbit::of(&BinarySequence::from_bits(n, b))).collect();
    out.sort();
    Ok(out)
}

/// Orbits of weight `a`.
pub fn orbits_of_weight(n: usize, a: usize) -> Result<Vec<CirculantOrbit>> {
    Ok(enumerate_orbits(n)?.into_iter().filter(|o| o.weight() == a).collect())
}

/// Burnside count of binary necklaces of length `n`.
pub fn necklace_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let total = divisors(n)
        .into_iter()
        .fold(BigUint::zero(), |acc, d| acc + BigUint::from(euler_phi(d)) * pow2((n / d) as u32));
    total / BigUint::from(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FClass {
    Free,
    Fhat(usize),
}

impl FClass {
    fn contains(self, n: usize, x: &BinarySequence) -> bool {
        if x.is_constant() {
            return true;
        }
        match self {
            FClass::Free => x.period() == n,
            FClass::Fhat(d) => x.period() == d,
        }
    }
}

impl std::fmt::Display for FClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FClass::Free => write!(f, "F"),
            FClass::Fhat(d) => write!(f, "Fhat_{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FhatLawReport {
    pub n: usize,
    pub d1: usize,
    pub d2: Option<usize>,
    pub predicted: FClass,
    pub holds: bool,
    pub counterexample: Option<[String; 3]>,
}

fn predict(n: usize, d1: usize, d2: Option<usize>) -> FClass {
    let Some(d2) = d2 else { return FClass::Free };
    let class = |d: usize| if d == n { FClass::Free } else { FClass::Fhat(d) };
    if d1 == d2 {
        class(d1)
    } else if d2 % d1 == 0 {
        class(d2)
    } else if d1.is_multiple_of(d2) {
        class(d1)
    } else if d1 * d2 == n {
        FClass::Free
    } else if n.is_multiple_of(d1 * d2) {
        class(d1 * d2)
    } else {
        class(num_integer::lcm(d1, d2))
    }
}

/// Sequences of period `n` whose smallest period is exactly `d`.
fn exact_period(n: usize, d: usize) -> Vec<BinarySequence> {
    (0..1u64 << n).map(|b| BinarySequence::from_bits(n, b)).filter(|x| !x.is_constant() && x.period() == d).collect()
}

/// Predicted class of `Fhat_{d1} Fhat_{d2}` (or `Fhat_{d1} F` when `d2` is
/// `None`), checked against every product of members. Classes are read with
/// exact smallest period; constants belong to every class.
pub fn fhat_product_law(n: usize, d1: usize, d2: Option<usize>) -> Result<FhatLawReport> {
    if n == 0 || n > 12 {
        return Err(invalid(format!("product law check supports 1..=12, got {n}")));
    }
    let bad = |d: usize| d == 0 || !n.is_multiple_of(d);
    if bad(d1) || d2.is_some_and(bad) {
        return Err(invalid(format!("{d1} and {d2:?} must divide {n}")));
    }
    let predicted = predict(n, d1, d2);
    let xs = exact_period(n, d1);
    let ys = exact_period(n, d2.unwrap_or(n));
    let counterexample = xs.par_iter().find_map_first(|x| {
        ys.iter().find_map(|y| {
            let z = x.product(y).expect("same n");
            (!predicted.contains(n, &z)).then(|| [x.to_string(), y.to_string(), z.to_string()])
        })
    });
    Ok(FhatLawReport { n, d1, d2, predicted, holds: counterexample.is_none(), counterexample })
}

/// A product of two orbit members that leaves the class under test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureWitness {
    pub x: String,
    pub y: String,
    pub shift: usize,
    pub product: String,
}

fn free_reps(n: usize, sym_only: bool) -> Result<Vec<BinarySequence>> {
    if n > 12 {
        return Err(invalid(format!("closure check supports 1..=12, got {n}")));
    }
    Ok(enumerate_orbits(n)?.into_iter().filter(|o| o.free && (!sym_only || o.sym)).map(|o| o.rep).collect())
}

/// First `X C^k Y` outside the class, over orbit pairs from `reps`. With
/// `squares` only `Y = X` is tried.
fn closure_witness(
    reps: &[BinarySequence],
    squares: bool,
    inside: impl Fn(&BinarySequence) -> bool + Sync,
) -> Option<ClosureWitness> {
    reps.par_iter().enumerate().find_map_first(|(i, x)| {
        let ys = if squares { &reps[i..=i] } else { &reps[i..] };
        ys.iter().find_map(|y| {
            (0..x.len()).find_map(|k| {
                let z = x.product(&y.shift(k as isize)).expect("same n");
                (!inside(&z)).then(|| ClosureWitness {
                    x: x.to_string(),
                    y: y.to_string(),
                    shift: k,
                    product: z.to_string(),
                })
            })
        })
    })
}

/// Checks `F F ⊂ F` (or `X_C^2 ⊂ F` with `squares`). Constants are free.
pub fn free_closure(n: usize, squares: bool) -> Result<Option<ClosureWitness>> {
    let reps = free_reps(n, false)?;
    Ok(closure_witness(&reps, squares, |z| FClass::Free.contains(n, z)))
}

/// Checks that products of free symmetric orbits stay free and symmetric.
pub fn sym_free_closure(n: usize, squares: bool) -> Result<Option<ClosureWitness>> {
    let reps = free_reps(n, true)?;
    Ok(closure_witness(&reps, squares, |z| FClass::Free.contains(n, z) && z.is_symmetric()))
}

/// Orbit catalog in its JSON shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCatalog {
    pub n: usize,
    pub orbits: Vec<CirculantOrbit>,
}

/// Orbit counts per weight, used by reports.
pub fn weight_histogram(orbits: &[CirculantOrbit]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for o in orbits {
        *h.entry(o.weight()).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> BinarySequence {
        t.parse().unwrap()
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(enumerate_orbits(5).unwrap().len(), 8);
        assert_eq!(enumerate_orbits(7).unwrap().len(), 20);
        assert_eq!(enumerate_orbits(1).unwrap().len(), 2);
        for n in 1..=12 {
            let orbits = enumerate_orbits(n).unwrap();
            assert_eq!(BigUint::from(orbits.len()), necklace_count(n));
            assert_eq!(orbits.iter().map(|o| o.size).sum::<usize>(), 1 << n);
        }
    }

    #[test]
    fn classification() {
        let c = classify_orbit(&CirculantOrbit::of(&s("+-+-+-")));
        assert_eq!((c.free, c.d, c.symmetric), (false, 2, true));
        let c = classify_orbit(&CirculantOrbit::of(&s("++---")));
        assert!(c.free && c.symmetric && !c.fhat);
        let c = classify_orbit(&CirculantOrbit::of(&BinarySequence::all_plus(4)));
        assert!(c.free && c.fhat);
    }

    #[test]
    fn free_closure_by_parity() {
        for n in [1, 3, 5, 7, 9] {
            assert_eq!(free_closure(n, true).unwrap(), None, "n = {n}");
            assert_eq!(sym_free_closure(n, true).unwrap(), None, "n = {n}");
        }
        for n in [3, 5, 7] {
            assert_eq!(free_closure(n, false).unwrap(), None, "n = {n}");
        }
        let w = free_closure(9, false).unwrap().unwrap();
        assert_eq!(s(&w.product).period(), 3);
        assert!((2..=8).step_by(2).any(|n| free_closure(n, true).unwrap().is_some()));
        let w = free_closure(4, true).unwrap().unwrap();
        assert_eq!(w.product, "+-+-");
    }

    #[test]
    fn sym_product_witness() {
        let x = s("---+---");
        let y = s("+-+++-+");
        assert!(x.is_symmetric() && y.is_symmetric());
        assert!(!x.product(&y.shift(3)).unwrap().is_symmetric());
        assert!(sym_free_closure(7, false).unwrap().is_some());
    }

    #[test]
    fn product_law_examples() {
        let r = fhat_product_law(6, 2, Some(2)).unwrap();
        assert_eq!(r.predicted, FClass::Fhat(2));
        assert!(r.holds);
        let r = fhat_product_law(6, 2, Some(3)).unwrap();
        assert_eq!(r.predicted, FClass::Free);
        assert!(r.holds);
        let r = fhat_product_law(4, 2, None).unwrap();
        assert_eq!(r.predicted, FClass::Free);
        assert!(r.holds);
        let r = fhat_product_law(8, 4, Some(4)).unwrap();
        assert!(!r.holds && r.counterexample.is_some());
        assert!(fhat_product_law(6, 4, None).is_err());
    }

    #[test]
    fn json_shape() {
        let o = CirculantOrbit::of(&s("-++--"));
        assert_eq!(serde_json::to_string(&o).unwrap(), r#"{"rep":"++---","size":5,"free":true,"sym":true,"d":5}"#);
    }
}
