//! Bit-packed ±1 sequences.
//!
//! A [`BinarySequence`] stores symbol `i` in bit `i % 64` of word `i / 64`,
//! with a set bit meaning `+`. Periods up to 64 fit in a single inline word
//! and take the fast paths; longer periods spill into extra words and go
//! through the generic per-symbol code, which has the same semantics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::scalar::gcd;

type Words = SmallVec<[u64; 1]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    n: usize,
    words: Words,
}

#[inline]
fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BinarySequence {
    /// Builds a sequence from the low `n` bits of `bits` (`1 <= n <= 64`).
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!((1..=64).contains(&n), "from_bits supports 1..=64, got {n}");
        BinarySequence { n, words: smallvec![bits & mask(n)] }
    }

    /// Builds a sequence from symbols, `true` meaning `+`.
    pub fn from_signs(signs: &[bool]) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::EmptySequence);
        }
        let n = signs.len();
        let mut words: Words = smallvec![0; n.div_ceil(64)];
        for (i, &s) in signs.iter().enumerate() {
            if s {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(BinarySequence { n, words })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut signs = Vec::with_capacity(text.len());
        for (pos, ch) in text.chars().enumerate() {
            match ch {
                '+' => signs.push(true),
                '-' => signs.push(false),
                _ => return Err(Error::InvalidChar { ch, pos }),
            }
        }
        Self::from_signs(&signs)
    }

    pub fn all_plus(n: usize) -> Self {
        Self::from_signs(&vec![true; n]).expect("n >= 1")
    }

    pub fn all_minus(n: usize) -> Self {
        Self::from_signs(&vec![false; n]).expect("n >= 1")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; a sequence has at least one symbol.
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    fn native(&self) -> bool {
        self.n <= 64
    }

    /// The packed word for periods up to 64.
    pub fn bits(&self) -> Option<u64> {
        self.native().then(|| self.words[0])
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    /// Symbol `i` as `+1` or `-1`.
    #[inline]
    pub fn sign(&self, i: usize) -> i64 {
        if self.get(i) {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<bool> {
        (0..self.n).map(|i| self.get(i)).collect()
    }

    fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        let signs: Vec<bool> = (0..self.n).map(|j| self.get(f(j))).collect();
        Self::from_signs(&signs).expect("nonempty")
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.n
    }

    pub fn negate(&self) -> Self {
        let mut words = self.words.clone();
        let last = words.len() - 1;
        for w in words.iter_mut() {
            *w = !*w;
        }
        let tail = self.n - 64 * last;
        words[last] &= mask(tail);
        BinarySequence { n: self.n, words }
    }

    pub fn reverse(&self) -> Self {
        if let Some(b) = self.bits() {
            return Self::from_bits(self.n, b.reverse_bits() >> (64 - self.n));
        }
        let n = self.n;
        self.map_indices(|j| n - 1 - j)
    }

    /// `C^i X`: the symbol at position `j` moves to `j + i`.
    pub fn shift(&self, i: isize) -> Self {
        let n = self.n;
        let i = i.rem_euclid(n as isize) as usize;
        if i == 0 {
            return self.clone();
        }
        if let Some(b) = self.bits() {
            return Self::from_bits(n, rotate_bits(n, b, i));
        }
        self.map_indices(|j| (j + n - i) % n)
    }

    /// `(x_{k i mod n})_i`; requires `gcd(k, n) = 1`.
    pub fn decimate(&self, k: usize) -> Result<Self> {
        let n = self.n;
        if gcd(k % n, n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        Ok(self.map_indices(|i| (k * i) % n))
    }

    /// Elementwise product of two ±1 sequences of the same period.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::PeriodMismatch { expected: self.n, found: other.n });
        }
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w = !(*w ^ o);
        }
        let last = out.words.len() - 1;
        out.words[last] &= mask(self.n - 64 * last);
        Ok(out)
    }

    /// `P_X(k)` for a single shift.
    pub fn autocorrelation_at(&self, k: usize) -> i64 {
        let n = self.n;
        let k = k % n;
        if let Some(b) = self.bits() {
            let rot = if k == 0 { b } else { ((b >> k) | (b << (n - k))) & mask(n) };
            return n as i64 - 2 * (b ^ rot).count_ones() as i64;
        }
        (0..n).map(|i| self.sign(i) * self.sign((i + k) % n)).sum()
    }

    pub fn autocorrelation(&self) -> AutocorrelationVector {
        AutocorrelationVector { n: self.n, values: (0..self.n).map(|k| self.autocorrelation_at(k)).collect() }
    }

    /// Smallest `d` with `shift(X, d) == X`; always divides `n`.
    pub fn period(&self) -> usize {
        crate::scalar::divisors(self.n).into_iter().find(|&d| self.shift(d as isize) == *self).unwrap_or(self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        let r = self.reverse();
        (0..self.period()).any(|i| self.shift(i as isize) == r)
    }

    /// Lexicographically least rotation, ordering `+` before `-`.
    pub fn canonical_rotation(&self) -> Self {
        if let Some(b) = self.bits() {
            return Self::from_bits(self.n, canonical_bits(self.n, b));
        }
        (0..self.period()).map(|i| self.shift(i as isize)).min().expect("n >= 1")
    }

    pub fn rotations(&self) -> Vec<Self> {
        (0..self.period()).map(|i| self.shift(i as isize)).collect()
    }
}

/// Sort key of a native word: smaller key means lexicographically smaller
/// string with `+` before `-`.
#[inline]
pub fn lex_key(n: usize, bits: u64) -> u64 {
    (!bits & mask(n)).reverse_bits() >> (64 - n)
}

#[inline]
pub fn rotate_bits(n: usize, bits: u64, i: usize) -> u64 {
    let i = i % n;
    if i == 0 {
        bits
    } else {
        ((bits << i) | (bits >> (n - i))) & mask(n)
    }
}

/// Packed word of the least rotation of `bits`.
pub fn canonical_bits(n: usize, bits: u64) -> u64 {
    let mut best = bits;
    let mut best_key = lex_key(n, bits);
    for i in 1..n {
        let r = rotate_bits(n, bits, i);
        let k = lex_key(n, r);
        if k < best_key {
            best = r;
            best_key = k;
        }
    }
    best
}

impl Ord for BinarySequence {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Some(a), Some(b)) = (self.bits(), other.bits()) {
            if self.n == other.n {
                return lex_key(self.n, a).cmp(&lex_key(self.n, b));
            }
        }
        self.n.cmp(&other.n).then_with(|| {
            for i in 0..self.n {
                match (self.get(i), other.get(i)) {
                    (true, false) => return Ordering::Less,
                    (false, true) => return Ordering::Greater,
                    _ => {}
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BinarySequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.n).map(|i| if self.get(i) { '+' } else { '-' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

impl FromStr for BinarySequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct SeqJson {
    n: usize,
    seq: String,
}

impl Serialize for BinarySequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeqJson { n: self.n, seq: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinarySequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SeqJson::deserialize(d)?;
        let seq = BinarySequence::parse(&raw.seq).map_err(serde::de::Error::custom)?;
        if seq.len() != raw.n {
            return Err(serde::de::Error::custom(Error::PeriodMismatch { expected: raw.n, found: seq.len() }));
        }
        Ok(seq)
    }
}

/// Parses one sequence per line. Blank lines and `#` comments are skipped.
pub fn parse_lines(text: &str) -> Result<Vec<BinarySequence>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(BinarySequence::parse).collect()
}

pub fn format_lines(seqs: &[BinarySequence]) -> String {
    let mut out = String::new();
    for s in seqs {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutocorrelationVector {
    pub n: usize,
    pub values: Vec<i64>,
}

impl AutocorrelationVector {
    /// Values at shifts `1..n`.
    pub fn nontrivial(&self) -> &[i64] {
        &self.values[1..]
    }

    /// The common off-peak value, if every nontrivial shift agrees.
    pub fn two_level(&self) -> Option<i64> {
        let rest = self.nontrivial();
        match rest.first() {
            None => None,
            Some(&d) => rest.iter().all(|&v| v == d).then_some(d),
        }
    }

    pub fn sum_nontrivial(&self) -> i64 {
        self.nontrivial().iter().sum()
    }
}

/// All sequences of period `n <= 64` with the given weight, as packed words.
pub fn words_of_weight(n: usize, a: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 63, "exhaustive word enumeration supports n <= 63");
    let limit = 1u64 << n;
    let first = if a == 0 { 0 } else { (1u64 << a) - 1 };
    let mut next = if a > n { None } else { Some(first) };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack: next word with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    })
}
