//! The partial Hadamard matrices built from the published families.

use crate::error::Result;
use crate::hadamard::construct::{ph_from_pcoms, ph_paired};
use crate::hadamard::matrix::PMMatrix;
use crate::pcoms::PComSFamily;

#[derive(Debug, Clone)]
pub struct PhExample {
    pub name: &'static str,
    pub matrix: PMMatrix,
    pub scale: i64,
}

const SINGLE: &[(&str, &[&str], i64)] = &[
    ("PH1", &["++---", "+--+-"], 12),
    ("PH2", &["++----", "+-+---", "++-+--"], 20),
    ("PH3", &["++-+---"], 8),
    ("PH4", &["+++----", "++--+--", "+-+-+--"], 24),
    ("PH5", &["+-+-----", "+++--+--"], 16),
    ("PH6", &["+-+-----", "++-+----", "++--+---"], 24),
    // Printed across two labels; one family of four blocks.
    ("PH7", &["++------", "+--+----", "+++-+---", "+--++-+-"], 32),
    ("PH9", &["+++-+----", "+-+--++--"], 20),
    ("PH10", &["++++-----", "++---++--", "+--+-+-+-", "++-+--+--"], 40),
    ("PH11", &["+--+-----", "+-+--++--", "++-+---+-", "++----++-", "+++------", "++---+---", "+----+-+-"], 64),
    (
        "PH12",
        &[
            "+++------",
            "++---+---",
            "+----+-+-",
            "++-+-----",
            "+----++--",
            "+--+---+-",
            "+-+--++--",
            "++-+---+-",
            "++----++-",
        ],
        84,
    ),
];

const PH13: (&[&str], &[&str]) = (&["++-----", "+-+----", "+---+--"], &["+++----", "++--+--", "+-+-+--"]);

/// Every example together with the scale its Gram matrix should have.
pub fn ph_examples() -> Result<Vec<PhExample>> {
    let mut out = vec![];
    for &(name, members, scale) in SINGLE {
        out.push(PhExample { name, matrix: ph_from_pcoms(&PComSFamily::parse(members)?)?, scale });
    }
    let (a, b) = (PComSFamily::parse(PH13.0)?, PComSFamily::parse(PH13.1)?);
    out.push(PhExample { name: "PH13", matrix: ph_paired(&a, &b)?, scale: 44 });
    let f = PComSFamily::parse(SINGLE[9].1)?;
    out.push(PhExample { name: "PH14", matrix: ph_paired(&f, &f)?, scale: 128 });
    Ok(out)
}
