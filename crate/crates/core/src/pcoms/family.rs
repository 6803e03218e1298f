//! Compatible families: orbit lists whose nontrivial autocorrelations sum to
//! a constant.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Error, Result};
use crate::scalar::is_prime;
use crate::sequence::BinarySequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PComSFamily {
    pub n: usize,
    pub q: usize,
    pub c: i64,
    #[serde(with = "member_strings")]
    pub members: Vec<BinarySequence>,
}

mod member_strings {
    use super::BinarySequence;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BinarySequence], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BinarySequence>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|t| t.parse().map_err(serde::de::Error::custom)).collect()
    }
}

impl PComSFamily {
    /// Validates the members and records their constant sum.
    pub fn new(members: Vec<BinarySequence>) -> Result<Self> {
        let (ok, c) = is_pcoms(&members)?;
        let c = match (ok, c) {
            (true, Some(c)) => c,
            _ => return Err(precondition("autocorrelation sum is not constant")),
        };
        Ok(PComSFamily { n: members[0].len(), q: members.len(), c, members })
    }

    pub fn parse(members: &[&str]) -> Result<Self> {
        Self::new(members.iter().map(|t| t.parse()).collect::<Result<_>>()?)
    }

    pub fn strings(&self) -> Vec<String> {
        self.members.iter().map(|x| x.to_string()).collect()
    }

    /// The members laid end to end.
    pub fn concatenation(&self) -> BinarySequence {
        let signs: Vec<bool> = self.members.iter().flat_map(|x| x.signs()).collect();
        BinarySequence::from_signs(&signs).expect("nonempty")
    }

    pub fn key(&self) -> EquivalenceKey {
        canonical_key(&self.members)
    }
}

fn common_period(family: &[BinarySequence]) -> Result<usize> {
    let first = family.first().ok_or_else(|| invalid("empty family"))?;
    let n = first.len();
    if let Some(bad) = family.iter().find(|x| x.len() != n) {
        return Err(Error::PeriodMismatch { expected: n, found: bad.len() });
    }
    Ok(n)
}

/// `sum_i P_{A_i}(k)` for `k = 1..n-1`.
pub fn family_sum(family: &[BinarySequence]) -> Result<Vec<i64>> {
    let n = common_period(family)?;
    Ok((1..n).map(|k| family.iter().map(|x| x.autocorrelation_at(k)).sum()).collect())
}

/// Whether the sum vector is constant, and the constant. Period 1 has no
/// nontrivial shifts and reports `(true, None)`.
pub fn is_pcoms(family: &[BinarySequence]) -> Result<(bool, Option<i64>)> {
    let sums = family_sum(family)?;
    match sums.first() {
        None => Ok((true, None)),
        Some(&c) => {
            let ok = sums.iter().all(|&v| v == c);
            Ok((ok, ok.then_some(c)))
        }
    }
}

/// Least rotation over a sequence, its negation, its reversal and both.
pub fn member_key(x: &BinarySequence) -> BinarySequence {
    let r = x.reverse();
    [x.clone(), x.negate(), r.negate(), r]
        .iter()
        .map(BinarySequence::canonical_rotation)
        .min()
        .expect("four candidates")
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EquivalenceKey(pub Vec<String>);

/// Sorted member keys; equal for families related by per-member negation,
/// reversal, rotation and by reordering.
pub fn canonical_key(family: &[BinarySequence]) -> EquivalenceKey {
    let mut keys: Vec<BinarySequence> = family.iter().map(member_key).collect();
    keys.sort();
    EquivalenceKey(keys.iter().map(|k| k.to_string()).collect())
}

/// A split of the family into two compatible sub-families, if one exists.
///
/// Returned as index lists `(first, rest)`.
pub fn triviality_witness(family: &[BinarySequence]) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let q = family.len();
    common_period(family)?;
    if q < 2 {
        return Ok(None);
    }
    if q > 24 {
        return Err(invalid(format!("split search over {q} members is too large")));
    }
    let n = family[0].len();
    let vecs: Vec<Vec<i64>> = family.iter().map(|x| (1..n).map(|k| x.autocorrelation_at(k)).collect()).collect();
    let full = (1u32 << q) - 1;
    for mask in 1..full {
        // each split is seen twice; keep the side holding member 0
        if mask & 1 == 0 {
            continue;
        }
        let mut sum = vec![0i64; n - 1];
        for (i, v) in vecs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum.iter_mut().zip(v).for_each(|(s, x)| *s += x);
            }
        }
        if sum.iter().all(|&s| s == sum[0]) {
            let inside = (0..q).filter(|i| mask >> i & 1 == 1).collect();
            let outside = (0..q).filter(|i| mask >> i & 1 == 0).collect();
            return Ok(Some((inside, outside)));
        }
    }
    Ok(None)
}

/// True when the family splits into two compatible sub-families.
pub fn is_trivial(family: &[BinarySequence]) -> Result<bool> {
    Ok(triviality_witness(family)?.is_some())
}

pub fn compose(f1: &PComSFamily, f2: &PComSFamily) -> Result<PComSFamily> {
    if f1.n != f2.n {
        return Err(Error::PeriodMismatch { expected: f1.n, found: f2.n });
    }
    let members: Vec<BinarySequence> = f1.members.iter().chain(&f2.members).cloned().collect();
    Ok(PComSFamily { n: f1.n, q: members.len(), c: f1.c + f2.c, members })
}

/// Weight window `[(nq-c)/4, (3nq+c)/4]` for the concatenated family.
pub fn containing_complete_set(f: &PComSFamily) -> (i64, i64) {
    let nq = (f.n * f.q) as i64;
    ((nq - f.c) / 4, (3 * nq + f.c) / 4)
}

/// The single weight-one orbit, compatible with constant `n - 4`.
pub fn trivial_family_gn1(n: usize) -> Result<PComSFamily> {
    if n < 2 {
        return Err(invalid("need n >= 2"));
    }
    let mut signs = vec![false; n];
    signs[0] = true;
    PComSFamily::new(vec![BinarySequence::from_signs(&signs)?])
}

/// Checks by exhaustion that the sequences with constant off-peak value
/// `n - 4` are exactly those of weight 1 or `n - 1`.
pub fn verify_gn1(n: usize) -> Result<bool> {
    if !(2..=20).contains(&n) {
        return Err(invalid(format!("exhaustive check supports 2..=20, got {n}")));
    }
    let target = n as i64 - 4;
    Ok((0..1u64 << n).all(|b| {
        let x = BinarySequence::from_bits(n, b);
        let level = (1..n).all(|k| x.autocorrelation_at(k) == target);
        let w = x.weight();
        level == (w == 1 || w + 1 == n)
    }))
}

/// The decimations `δ_r X`, `r = 1..(p-1)/2`, of a sequence of prime period.
pub fn prime_decimation_family(x: &BinarySequence) -> Result<PComSFamily> {
    let p = x.len();
    if p < 3 || !is_prime(p as u64) {
        return Err(invalid(format!("period {p} is not an odd prime")));
    }
    let a = x.weight();
    if a <= 1 || a >= p {
        return Err(invalid(format!("weight {a} outside 2..{p}")));
    }
    let members = (1..=(p - 1) / 2).map(|r| x.decimate(r)).collect::<Result<Vec<_>>>()?;
    PComSFamily::new(members)
}

/// `2a(a - p) + p(p - 1)/2`.
pub fn prime_decimation_constant(p: usize, a: usize) -> i64 {
    let (p, a) = (p as i64, a as i64);
    2 * a * (a - p) + p * (p - 1) / 2
}

/// Decimation family of the block sequence with `a` leading pluses.
pub fn prime_decimation_family_by_weight(p: usize, a: usize) -> Result<PComSFamily> {
    let signs: Vec<bool> = (0..p).map(|i| i < a).collect();
    prime_decimation_family(&BinarySequence::from_signs(&signs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> BinarySequence {
        t.parse().unwrap()
    }

    #[test]
    fn pcoms_examples() {
        assert_eq!(is_pcoms(&[s("++---"), s("+--+-")]).unwrap(), (true, Some(-2)));
        assert_eq!(is_pcoms(&[s("+----")]).unwrap(), (true, Some(1)));
        assert_eq!(is_pcoms(&[s("++---"), s("++---")]).unwrap(), (false, None));
        assert_eq!(family_sum(&[s("++---"), s("++---")]).unwrap(), vec![2, -6, -6, 2]);
        assert!(family_sum(&[s("++-"), s("++--")]).is_err());
    }

    #[test]
    fn keys() {
        let (a, b) = (s("++---"), s("+--+-"));
        assert_eq!(canonical_key(&[a.clone(), b.clone()]), canonical_key(&[b.negate(), a.reverse()]));
        assert_eq!(canonical_key(&[a.shift(2), b.clone()]), canonical_key(&[a, b]));
        let fams = [["+++-+----", "+-+--++--"], ["+++--+---", "++-+---+-"], ["++---+-+-", "++----++-"]];
        let keys: std::collections::BTreeSet<_> = fams.iter().map(|f| canonical_key(&[s(f[0]), s(f[1])])).collect();
        assert_eq!(keys.len(), 3);
    }

    #[test]
    fn triviality() {
        let f = PComSFamily::parse(&["+-+-----", "+++--+--"]).unwrap();
        assert!(!is_trivial(&f.members).unwrap());
        let g = PComSFamily::parse(&["+----"]).unwrap();
        let gg = compose(&g, &g).unwrap();
        assert_eq!((gg.q, gg.c), (2, 2));
        assert!(is_trivial(&gg.members).unwrap());
        let h = PComSFamily::parse(&["++---", "+--+-"]).unwrap();
        let hk = compose(&h, &h).unwrap();
        assert!(is_pcoms(&hk.members).unwrap().0);
        assert_eq!(triviality_witness(&hk.members).unwrap(), Some((vec![0, 1], vec![2, 3])));
    }

    #[test]
    fn composition_and_windows() {
        let f = compose(&PComSFamily::parse(&["+----"]).unwrap(), &PComSFamily::parse(&["++---", "+--+-"]).unwrap())
            .unwrap();
        assert_eq!((f.n, f.q, f.c), (5, 3, -1));
        assert!(is_pcoms(&f.members).unwrap().0);
        let f = PComSFamily::parse(&["++------", "+--+----", "+++-+---", "+--++-+-"]).unwrap();
        assert_eq!(containing_complete_set(&f), (8, 24));
        let f = PComSFamily::parse(&["+---"]).unwrap();
        assert_eq!(containing_complete_set(&f), (1, 3));
    }

    #[test]
    fn weight_one_families() {
        assert_eq!(trivial_family_gn1(5).unwrap().c, 1);
        assert_eq!(trivial_family_gn1(6).unwrap().c, 2);
        assert_eq!(trivial_family_gn1(4).unwrap().c, 0);
        for n in 2..=12 {
            assert!(verify_gn1(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn decimation_families() {
        let f = prime_decimation_family(&s("++---")).unwrap();
        assert_eq!((f.q, f.c), (2, -2));
        let f = prime_decimation_family_by_weight(7, 3).unwrap();
        assert_eq!((f.q, f.c), (3, -3));
        assert_eq!(prime_decimation_family_by_weight(7, 2).unwrap().c, 1);
        assert_eq!(prime_decimation_constant(7, 2), 1);
        assert!(prime_decimation_family(&s("++----")).is_err());
    }

    #[test]
    fn json_shape() {
        let f = PComSFamily::parse(&["++---", "+--+-"]).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"n":5,"q":2,"c":-2,"members":["++---","+--+-"]}"#);
    }
}
