use binseq::BinarySequence;
use proptest::prelude::*;

fn seq(max: usize) -> impl Strategy<Value = BinarySequence> {
    prop::collection::vec(any::<bool>(), 1..=max).prop_map(|v| BinarySequence::from_signs(&v).unwrap())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #[test]
    fn autocorrelation_basics(x in seq(96)) {
        let n = x.len();
        let p = x.autocorrelation().values;
        prop_assert_eq!(p[0], n as i64);
        for k in 1..n {
            prop_assert_eq!(p[k], p[n - k]);
            prop_assert_eq!((p[k] - n as i64).rem_euclid(4), 0);
        }
        let a = x.weight() as i64;
        prop_assert_eq!(p.iter().sum::<i64>(), (2 * a - n as i64).pow(2));
    }

    #[test]
    fn negate_and_reverse_keep_autocorrelation(x in seq(96)) {
        let p = x.autocorrelation();
        prop_assert_eq!(&x.negate().autocorrelation(), &p);
        prop_assert_eq!(&x.reverse().autocorrelation(), &p);
        prop_assert_eq!(&x.shift(3).autocorrelation(), &p);
    }

    #[test]
    fn decimation(x in seq(40), r in 1usize..40, s in 1usize..40) {
        let n = x.len();
        prop_assume!(gcd(r % n, n) == 1 && gcd(s % n, n) == 1);
        prop_assert_eq!(x.decimate(1).unwrap(), x.clone());
        let y = x.decimate(r).unwrap();
        prop_assert_eq!(y.decimate(s).unwrap(), x.decimate(r * s % n).unwrap());
        for k in 0..n {
            prop_assert_eq!(y.autocorrelation_at(k), x.autocorrelation_at(r * k % n));
        }
    }

    #[test]
    fn text_and_json_round_trip(x in seq(130)) {
        let t = x.to_string();
        prop_assert_eq!(&t.parse::<BinarySequence>().unwrap(), &x);
        let j = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<BinarySequence>(&j).unwrap(), x);
    }

    #[test]
    fn canonical_rotation_is_least(x in seq(20)) {
        let c = x.canonical_rotation();
        prop_assert!(x.rotations().iter().all(|r| c <= *r));
        prop_assert_eq!(c.canonical_rotation(), c.clone());
        prop_assert_eq!(x.shift(5).canonical_rotation(), c);
    }
}

#[test]
fn rejects_bad_input() {
    assert!("+-x".parse::<BinarySequence>().is_err());
    assert!("".parse::<BinarySequence>().is_err());
    let x: BinarySequence = "++--++".parse().unwrap();
    assert!(x.decimate(2).is_err());
}
