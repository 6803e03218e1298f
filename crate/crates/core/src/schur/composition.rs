//! Compositions and the alternating product linking them to run vectors.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::runstruct::cyclic_run_vector;
use crate::sequence::BinarySequence;

/// `P ⋄_r Q = (p_1, q_1, ..., p_r, q_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingComposition {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub interleaved: Vec<usize>,
}

impl AlternatingComposition {
    pub fn r(&self) -> usize {
        self.p.len()
    }
}

fn rotate_left(v: &[usize], t: usize) -> Vec<usize> {
    let mut out = v.to_vec();
    if !out.is_empty() {
        let t = t % out.len();
        out.rotate_left(t);
    }
    out
}

pub fn alternating_product(p: &[usize], q: &[usize]) -> Result<AlternatingComposition> {
    if p.len() != q.len() {
        return Err(invalid(format!("part counts differ: {} vs {}", p.len(), q.len())));
    }
    if p.is_empty() || p.iter().chain(q).any(|&x| x == 0) {
        return Err(invalid("compositions need at least one part, all positive"));
    }
    let interleaved = p.iter().zip(q).flat_map(|(&a, &b)| [a, b]).collect();
    Ok(AlternatingComposition { p: p.to_vec(), q: q.to_vec(), interleaved })
}

/// `C̄^t` as a rotation of the interleaved vector, returned split back into
/// its odd and even positions.
pub fn cbar_action(ac: &AlternatingComposition, t: usize) -> AlternatingComposition {
    let rotated = rotate_left(&ac.interleaved, t);
    let p = rotated.iter().step_by(2).copied().collect();
    let q = rotated.iter().skip(1).step_by(2).copied().collect();
    AlternatingComposition { p, q, interleaved: rotated }
}

/// Same result as [`cbar_action`] via the rotations of the two factors.
pub fn cbar_by_factors(ac: &AlternatingComposition, t: usize) -> AlternatingComposition {
    let i = t / 2;
    let (p, q) = if t.is_multiple_of(2) {
        (rotate_left(&ac.p, i), rotate_left(&ac.q, i))
    } else {
        (rotate_left(&ac.q, i), rotate_left(&ac.p, i + 1))
    };
    alternating_product(&p, &q).expect("same lengths")
}

/// Plus runs and minus runs of the cyclic run vector, starting on a plus run.
pub fn partitioned_form(x: &BinarySequence) -> Result<AlternatingComposition> {
    let rv = cyclic_run_vector(x)?;
    let n = x.len();
    let start = (0..n).find(|&i| x.get(i) != x.get((i + n - 1) % n)).expect("nonconstant");
    let lengths = if x.get(start) { rv.lengths } else { rotate_left(&rv.lengths, 1) };
    let p: Vec<usize> = lengths.iter().step_by(2).copied().collect();
    let q: Vec<usize> = lengths.iter().skip(1).step_by(2).copied().collect();
    alternating_product(&p, &q)
}

/// Sequence whose runs are `ac.interleaved`, starting with a plus run.
pub fn from_partitioned(ac: &AlternatingComposition) -> BinarySequence {
    let mut signs = Vec::new();
    for (idx, &len) in ac.interleaved.iter().enumerate() {
        signs.extend(std::iter::repeat_n(idx % 2 == 0, len));
    }
    BinarySequence::from_signs(&signs).expect("nonempty")
}

/// All compositions of `total` into exactly `parts` positive parts.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn rec(rem: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=rem.saturating_sub(left - 1) {
            cur.push(first);
            rec(rem - first, left - 1, cur, out);
            cur.pop();
        }
    }
    if parts > 0 {
        rec(total, parts, &mut cur, &mut out);
    } else if total == 0 {
        out.push(vec![]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interleave_example() {
        let ac = alternating_product(&[3, 1, 1], &[2, 1, 1]).unwrap();
        assert_eq!(ac.interleaved, vec![3, 2, 1, 1, 1, 1]);
        assert!(alternating_product(&[1, 2], &[1]).is_err());
    }

    #[test]
    fn cbar_identities() {
        let ac = alternating_product(&[3, 1, 2, 1], &[2, 4, 1, 1]).unwrap();
        for t in 0..16 {
            assert_eq!(cbar_action(&ac, t), cbar_by_factors(&ac, t), "t = {t}");
        }
        let twice = cbar_action(&cbar_action(&ac, 1), 1);
        assert_eq!(twice.p, rotate_left(&ac.p, 1));
        assert_eq!(twice.q, rotate_left(&ac.q, 1));
    }

    #[test]
    fn partitioned_round_trip() {
        let x: BinarySequence = "+---".parse().unwrap();
        let ac = partitioned_form(&x).unwrap();
        assert_eq!((ac.p.clone(), ac.q.clone()), (vec![1], vec![3]));
        for t in ["+++--+-+-", "-++-+---", "--+-+++-"] {
            let x: BinarySequence = t.parse().unwrap();
            let y = from_partitioned(&partitioned_form(&x).unwrap());
            assert!(x.rotations().contains(&y), "{t}");
        }
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(5, 2).len(), 4);
        assert_eq!(compositions(6, 3).len(), 10);
        assert_eq!(compositions(2, 3).len(), 0);
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
    }
}
