//! Dense ±1 matrices and exact Gram checks.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::sequence::BinarySequence;

/// A row-major matrix over `{+1, -1}`; `true` is `+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PMMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl PMMatrix {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PMMatrix { rows, cols, data }
    }

    /// Entries must be `1` or `-1`.
    pub fn from_values(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        if values.len() != rows * cols {
            return Err(invalid(format!("{} values for a {rows}x{cols} matrix", values.len())));
        }
        let data = values
            .iter()
            .map(|&v| match v {
                1 => Ok(true),
                -1 => Ok(false),
                _ => Err(Error::Malformed(format!("entry {v} is not +1 or -1"))),
            })
            .collect::<Result<_>>()?;
        Ok(PMMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[BinarySequence]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::PeriodMismatch { expected: cols, found: r.len() });
        }
        Ok(PMMatrix::from_fn(rows.len(), cols, |i, j| rows[i].get(j)))
    }

    pub fn all_plus(rows: usize, cols: usize) -> Self {
        PMMatrix::from_fn(rows, cols, |_, _| true)
    }

    /// Parses one `+`/`-` row per line; blank lines and `#` comments are
    /// skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = crate::sequence::parse_lines(text)?;
        if rows.is_empty() {
            return Err(Error::Malformed("no rows".into()));
        }
        PMMatrix::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        if self.data[i * self.cols + j] {
            1
        } else {
            -1
        }
    }

    fn row_bits(&self, i: usize) -> &[bool] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_string(&self, i: usize) -> String {
        self.row_bits(i).iter().map(|&b| if b { '+' } else { '-' }).collect()
    }

    pub fn transpose(&self) -> Self {
        PMMatrix::from_fn(self.cols, self.rows, |i, j| self.data[j * self.cols + i])
    }

    pub fn negate(&self) -> Self {
        PMMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|b| !b).collect() }
    }

    /// Right multiplication by the reversal permutation.
    pub fn reverse_cols(&self) -> Self {
        PMMatrix::from_fn(self.rows, self.cols, |i, j| self.data[i * self.cols + self.cols - 1 - j])
    }

    /// Places blocks side by side; all must have the same height.
    pub fn hcat(blocks: &[PMMatrix]) -> Result<Self> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if let Some(b) = blocks.iter().find(|b| b.rows != rows) {
            return Err(invalid(format!("block heights {rows} and {}", b.rows)));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                data.extend_from_slice(b.row_bits(i));
            }
        }
        Ok(PMMatrix { rows, cols, data })
    }

    /// Stacks blocks vertically; all must have the same width.
    pub fn vcat(blocks: &[PMMatrix]) -> Result<Self> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if let Some(b) = blocks.iter().find(|b| b.cols != cols) {
            return Err(invalid(format!("block widths {cols} and {}", b.cols)));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let data = blocks.iter().flat_map(|b| b.data.iter().copied()).collect();
        Ok(PMMatrix { rows, cols, data })
    }

    pub fn grid(blocks: &[Vec<PMMatrix>]) -> Result<Self> {
        let bands: Vec<PMMatrix> = blocks.iter().map(|r| PMMatrix::hcat(r)).collect::<Result<_>>()?;
        PMMatrix::vcat(&bands)
    }

    pub fn inner(&self, i: usize, j: usize) -> i64 {
        let agree = self.row_bits(i).iter().zip(self.row_bits(j)).filter(|(a, b)| a == b).count();
        2 * agree as i64 - self.cols as i64
    }

    /// `M M^t`, exactly.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        (0..self.rows).into_par_iter().map(|i| (0..self.rows).map(|j| self.inner(i, j)).collect()).collect()
    }

    pub fn to_text(&self) -> String {
        (0..self.rows).map(|i| self.row_string(i) + "\n").collect()
    }
}

impl fmt::Display for PMMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    rows: usize,
    cols: usize,
    data: Vec<String>,
}

impl Serialize for PMMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { rows: self.rows, cols: self.cols, data: (0..self.rows).map(|i| self.row_string(i)).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PMMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = Wire::deserialize(d)?;
        if w.data.len() != w.rows {
            return Err(D::Error::custom(format!("{} rows listed, {} declared", w.data.len(), w.rows)));
        }
        let rows: Vec<BinarySequence> =
            w.data.iter().map(|r| r.parse()).collect::<Result<_>>().map_err(D::Error::custom)?;
        let m = PMMatrix::from_rows(&rows).map_err(D::Error::custom)?;
        if m.cols != w.cols {
            return Err(D::Error::custom(format!("rows of length {}, {} declared", m.cols, w.cols)));
        }
        Ok(m)
    }
}

/// A permutation matrix, stored as the column index of the 1 in each row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        (self.0[i] == j) as u8
    }

    /// `M P` for a ±1 matrix `M`.
    pub fn apply_right(&self, m: &PMMatrix) -> Result<PMMatrix> {
        if m.cols() != self.0.len() {
            return Err(invalid(format!("{} columns against order {}", m.cols(), self.0.len())));
        }
        // (M P)[i][j] = sum_k M[i][k] P[k][j] = M[i][k] where P[k] = j.
        let mut inv = vec![0; self.0.len()];
        for (k, &j) in self.0.iter().enumerate() {
            inv[j] = k;
        }
        Ok(PMMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, inv[j]) == 1))
    }
}

/// The back-circulant identity: ones on the anti-diagonal.
pub fn back_circulant_r(n: usize) -> Permutation {
    Permutation((0..n).rev().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramReport {
    pub rows: usize,
    pub cols: usize,
    pub gram: Vec<Vec<i64>>,
    pub is_scaled_identity: bool,
    pub scale: Option<i64>,
    /// First entry, in row order over the upper triangle, that breaks the
    /// expected pattern.
    pub first_failure: Option<(usize, usize, i64)>,
}

impl GramReport {
    pub fn pass(&self) -> bool {
        self.is_scaled_identity
    }
}

/// Compares `M M^t` with `scale I`; `scale` defaults to the column count.
pub fn gram_check(m: &PMMatrix, expected_scale: Option<i64>) -> GramReport {
    let gram = m.gram();
    let s = expected_scale.unwrap_or(m.cols() as i64);
    let mut first_failure = None;
    'outer: for (i, row) in gram.iter().enumerate() {
        for (j, &v) in row.iter().enumerate().skip(i) {
            let want = if i == j { s } else { 0 };
            if v != want {
                first_failure = Some((i, j, v));
                break 'outer;
            }
        }
    }
    let ok = first_failure.is_none();
    GramReport { rows: m.rows(), cols: m.cols(), gram, is_scaled_identity: ok, scale: ok.then_some(s), first_failure }
}

/// `H + H^t = 2I`.
pub fn is_skew(m: &PMMatrix) -> bool {
    m.is_square()
        && (0..m.rows())
            .all(|i| (0..m.cols()).all(|j| if i == j { m.get(i, i) == 1 } else { m.get(i, j) == -m.get(j, i) }))
}

/// A square matrix that passes its Gram check has order 1, 2 or a multiple of 4.
pub fn hadamard_order_ok(m: &PMMatrix) -> bool {
    !m.is_square() || !gram_check(m, None).pass() || m.rows() <= 2 || m.rows().is_multiple_of(4)
}
