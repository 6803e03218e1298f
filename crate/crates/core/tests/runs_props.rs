use binseq::runstruct::{
    autocorrelation_via_runs, autocorrelation_via_runs_v2, count_run_pattern, orbit_run_length, two_level_profile,
};
use binseq::{BinarySequence, RunPattern};
use proptest::prelude::*;

fn nonconstant(max: usize) -> impl Strategy<Value = BinarySequence> {
    prop::collection::vec(any::<bool>(), 2..=max)
        .prop_map(|v| BinarySequence::from_signs(&v).unwrap())
        .prop_filter("nonconstant", |x| !x.is_constant())
}

proptest! {
    #[test]
    fn single_run_counts(x in nonconstant(70)) {
        let n = x.len();
        let counts: Vec<usize> = (1..=n).map(|j| count_run_pattern(&x, &RunPattern::single(j)).unwrap()).collect();
        prop_assert_eq!(counts.iter().sum::<usize>(), orbit_run_length(&x).unwrap());
        prop_assert_eq!(counts.iter().enumerate().map(|(j, c)| (j + 1) * c).sum::<usize>(), n);
    }

    #[test]
    fn run_formulas_match_direct(x in nonconstant(40)) {
        for k in 1..=x.len() {
            let p = x.autocorrelation_at(k % x.len());
            prop_assert_eq!(autocorrelation_via_runs(&x, k).unwrap(), p);
            prop_assert_eq!(autocorrelation_via_runs_v2(&x, k).unwrap(), p);
        }
    }
}

#[test]
fn two_level_check_is_exact() {
    for n in 3..=13usize {
        for d in -(n as i64)..n as i64 {
            let Ok(prof) = two_level_profile(n, d) else { continue };
            for b in 0..1u64 << n {
                let x = BinarySequence::from_bits(n, b);
                if x.is_constant() {
                    continue;
                }
                let pass = prof.check(&x).unwrap().pass;
                assert_eq!(pass, x.autocorrelation().two_level() == Some(d), "{x} d = {d}");
            }
        }
    }
}
