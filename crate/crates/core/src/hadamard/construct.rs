//! Hadamard-type arrays assembled from circulant blocks.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Error, Result};
use crate::hadamard::matrix::{gram_check, GramReport, PMMatrix};
use crate::pcoms::PComSFamily;
use crate::sequence::BinarySequence;

/// Row `i` is `x` shifted right by `i`: the second row is `(x_n, x_1, ...)`.
pub fn circulant_from(x: &BinarySequence) -> PMMatrix {
    let n = x.len();
    PMMatrix::from_fn(n, n, |i, j| x.get((j + n - i) % n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreEmbedding {
    pub matrix: PMMatrix,
    /// The core was negated to make the Gram check pass.
    pub negated: bool,
    pub report: GramReport,
}

fn bordered(x: &BinarySequence) -> PMMatrix {
    let p = x.len();
    let core = circulant_from(x);
    PMMatrix::from_fn(p + 1, p + 1, |i, j| i == 0 || j == 0 || core.get(i - 1, j - 1) == 1)
}

/// `[[1, e], [e^t, X_C]]` with an all-plus border. If the core fails as
/// given, its negation is tried; the report says which one was kept.
pub fn one_core_embed(x: &BinarySequence) -> CoreEmbedding {
    let scale = Some(x.len() as i64 + 1);
    let m = bordered(x);
    let report = gram_check(&m, scale);
    if report.pass() {
        return CoreEmbedding { matrix: m, negated: false, report };
    }
    let alt = bordered(&x.negate());
    let alt_report = gram_check(&alt, scale);
    if alt_report.pass() {
        CoreEmbedding { matrix: alt, negated: true, report: alt_report }
    } else {
        CoreEmbedding { matrix: m, negated: false, report }
    }
}

fn same_odd_length(seqs: &[&BinarySequence]) -> Result<usize> {
    let n = seqs[0].len();
    if let Some(s) = seqs.iter().find(|s| s.len() != n) {
        return Err(Error::PeriodMismatch { expected: n, found: s.len() });
    }
    if n < 3 || n.is_multiple_of(2) {
        return Err(precondition(format!("core length {n} must be odd and at least 3")));
    }
    Ok(n)
}

/// `P_A(k) + P_B(k) = -2` for every nontrivial shift.
pub fn two_core_check(a: &BinarySequence, b: &BinarySequence) -> Result<bool> {
    let n = same_odd_length(&[a, b])?;
    Ok((1..n).all(|k| a.autocorrelation_at(k) + b.autocorrelation_at(k) == -2))
}

fn row_sum(x: &BinarySequence) -> i64 {
    2 * x.weight() as i64 - x.len() as i64
}

/// The order-`2n + 2` array with cores `A` and `B`.
///
/// Compatible cores always have row sums `±1`; each is negated if needed so
/// both rows sum to `-1`, which the border rows require.
pub fn two_core_embed(a: &BinarySequence, b: &BinarySequence) -> Result<PMMatrix> {
    let n = same_odd_length(&[a, b])?;
    let fix = |x: &BinarySequence| if row_sum(x) > 0 { x.negate() } else { x.clone() };
    let (ca, cb) = (circulant_from(&fix(a)), circulant_from(&fix(b)));
    let plus = |r, c| PMMatrix::all_plus(r, c);
    let e = plus(1, n);
    let col = plus(n, 1);
    PMMatrix::grid(&[
        vec![plus(1, 1), plus(1, 1), e.clone(), e.clone()],
        vec![plus(1, 1), plus(1, 1).negate(), e.clone(), e.negate()],
        vec![col.clone(), col.clone(), ca.clone(), cb.clone()],
        vec![col.clone(), col.negate(), cb.transpose(), ca.transpose().negate()],
    ])
}

/// The Goethals-Seidel array of four circulants of the same odd length.
pub fn gs_embed(a: &BinarySequence, b: &BinarySequence, c: &BinarySequence, d: &BinarySequence) -> Result<PMMatrix> {
    same_odd_length(&[a, b, c, d])?;
    let [a, b, c, d] = [a, b, c, d].map(circulant_from);
    let r = |m: &PMMatrix| m.reverse_cols();
    let (br, cr, dr) = (r(&b), r(&c), r(&d));
    let (btr, ctr, dtr) = (r(&b.transpose()), r(&c.transpose()), r(&d.transpose()));
    PMMatrix::grid(&[
        vec![a.clone(), br.clone(), cr.clone(), dr.clone()],
        vec![br.negate(), a.clone(), dtr.negate(), ctr.clone()],
        vec![cr.negate(), dtr.clone(), a.clone(), btr.negate()],
        vec![dr.negate(), ctr.negate(), btr.clone(), a.clone()],
    ])
}

/// `|c|` all-plus columns followed by the member circulants, for `c <= 0`.
pub fn ph_from_pcoms(family: &PComSFamily) -> Result<PMMatrix> {
    if family.c > 0 {
        return Err(precondition(format!("constant {} is positive", family.c)));
    }
    let n = family.n;
    let mut blocks = vec![PMMatrix::all_plus(n, family.c.unsigned_abs() as usize)];
    blocks.extend(family.members.iter().map(circulant_from));
    PMMatrix::hcat(&blocks)
}

fn check_pair(f1: &PComSFamily, f2: &PComSFamily) -> Result<()> {
    if (f1.n, f1.q) != (f2.n, f2.q) {
        return Err(invalid(format!("families of shape ({}, {}) and ({}, {})", f1.n, f1.q, f2.n, f2.q)));
    }
    if f1.c + f2.c != -2 {
        return Err(precondition(format!("constants {} and {} do not add up to -2", f1.c, f2.c)));
    }
    Ok(())
}

/// The `2n x (2nq + 2)` array from two families whose constants add up to
/// `-2`. The lower band uses transposed circulants, so the cross terms
/// cancel by commutativity.
pub fn ph_paired(f1: &PComSFamily, f2: &PComSFamily) -> Result<PMMatrix> {
    ph_pair_with(f1, f2, true)
}

/// [`ph_paired`] with untransposed circulants in the lower band.
pub fn ph_paired_untransposed(f1: &PComSFamily, f2: &PComSFamily) -> Result<PMMatrix> {
    ph_pair_with(f1, f2, false)
}

fn ph_pair_with(f1: &PComSFamily, f2: &PComSFamily, transposed: bool) -> Result<PMMatrix> {
    check_pair(f1, f2)?;
    let n = f1.n;
    let e = PMMatrix::all_plus(n, 1);
    let a: Vec<PMMatrix> = f1.members.iter().map(circulant_from).collect();
    let b: Vec<PMMatrix> = f2.members.iter().map(circulant_from).collect();
    let t = |m: &PMMatrix| if transposed { m.transpose() } else { m.clone() };
    let mut top = vec![e.clone(), e.clone()];
    top.extend(a.iter().cloned());
    top.extend(b.iter().cloned());
    let mut bottom = vec![e.clone(), e.negate()];
    bottom.extend(b.iter().map(t));
    bottom.extend(a.iter().map(|m| t(m).negate()));
    PMMatrix::vcat(&[PMMatrix::hcat(&top)?, PMMatrix::hcat(&bottom)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::matrix::{hadamard_order_ok, is_skew};

    fn s(t: &str) -> BinarySequence {
        t.parse().unwrap()
    }

    #[test]
    fn circulant_orientation() {
        let c = circulant_from(&s("+--+-"));
        assert_eq!(c.row_string(0), "+--+-");
        assert_eq!(c.row_string(1), "-+--+");
        let h = circulant_from(&s("+---"));
        let r = gram_check(&h, Some(4));
        assert!(r.pass());
        let g = circulant_from(&s("++-+---")).gram();
        assert!(g
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == if i == j { 7 } else { -1 })));
    }

    #[test]
    fn one_core() {
        for (x, ok) in [("++-+---", true), ("+--", true), ("+----", false)] {
            let e = one_core_embed(&s(x));
            assert_eq!(e.report.pass(), ok, "{x}");
            assert!(hadamard_order_ok(&e.matrix));
        }
        let e = one_core_embed(&s("--+-+++"));
        assert!(e.report.pass() && e.negated);
    }

    #[test]
    fn two_core() {
        let (a, b) = (s("++---"), s("+--+-"));
        assert!(two_core_check(&a, &b).unwrap());
        let h = two_core_embed(&a, &b).unwrap();
        assert!(gram_check(&h, Some(12)).pass());
        assert!(two_core_embed(&a.negate(), &b).map(|h| gram_check(&h, Some(12)).pass()).unwrap());
        assert!(!two_core_check(&a, &a).unwrap());
        assert!(two_core_check(&s("+"), &s("+")).is_err());
        assert!(two_core_check(&s("+-"), &s("+-")).is_err());
    }

    #[test]
    fn goethals_seidel_order_twelve() {
        let (x, y) = (s("+--"), s("+++"));
        let h = gs_embed(&x, &x, &x, &y).unwrap();
        assert!(gram_check(&h, Some(12)).pass());
        assert!(!is_skew(&h));
        let bad = gs_embed(&x, &x, &y, &y).unwrap();
        let r = gram_check(&bad, Some(12));
        assert!(r.first_failure.is_some());
    }

    #[test]
    fn partial_from_family() {
        let f = PComSFamily::parse(&["++---", "+--+-"]).unwrap();
        let m = ph_from_pcoms(&f).unwrap();
        assert_eq!((m.rows(), m.cols()), (5, 12));
        assert!(gram_check(&m, Some(12)).pass());
        let pos = PComSFamily::parse(&["+----"]).unwrap();
        assert!(ph_from_pcoms(&pos).is_err());
    }

    #[test]
    fn paired_needs_transposes() {
        let f1 = PComSFamily::parse(&["++-----", "+-+----", "+---+--"]).unwrap();
        let f2 = PComSFamily::parse(&["+++----", "++--+--", "+-+-+--"]).unwrap();
        let m = ph_paired(&f1, &f2).unwrap();
        assert_eq!((m.rows(), m.cols()), (14, 44));
        assert!(gram_check(&m, Some(44)).pass());
        let lit = ph_paired_untransposed(&f1, &f2).unwrap();
        assert!(!gram_check(&lit, Some(44)).pass());
        assert!(ph_paired(&f1, &f1).is_err());
    }
}
