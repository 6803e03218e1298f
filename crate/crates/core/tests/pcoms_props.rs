use binseq::pcoms::{is_pcoms, is_trivial, search};
use binseq::runstruct::family_run_profile;
use binseq::BinarySequence;

#[test]
fn found_families_satisfy_run_identities() {
    for n in 4..=8usize {
        let cat = search(n, 8).unwrap();
        for (q, c, fam) in cat.families() {
            let seqs: Vec<BinarySequence> = fam.iter().map(|s| s.parse().unwrap()).collect();
            assert_eq!(seqs.len(), q);
            assert_eq!(is_pcoms(&seqs).unwrap(), (true, Some(c)));
            assert!(!is_trivial(&seqs).unwrap() || q == 1);
            assert_eq!((n as i64 * q as i64 - c).rem_euclid(4), 0);
            let r = family_run_profile(&seqs, c).unwrap();
            assert!(r.pass, "{fam:?}: {:?}", r.violations);
        }
    }
}

#[test]
fn search_is_deterministic() {
    let a = serde_json::to_string(&search(9, 4).unwrap()).unwrap();
    let b = serde_json::to_string(&search(9, 4).unwrap()).unwrap();
    assert_eq!(a, b);
}
