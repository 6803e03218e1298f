//! Catalogs of families, the published reference tables, and diffs
//! between the two.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::pcoms::family::{canonical_key, is_pcoms, triviality_witness, EquivalenceKey, PComSFamily};
use crate::sequence::BinarySequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub q: usize,
    pub c: i64,
    pub families: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn family_count(&self) -> usize {
        self.entries.iter().map(|e| e.families.len()).sum()
    }

    pub fn families(&self) -> impl Iterator<Item = (usize, i64, &Vec<String>)> {
        self.entries.iter().flat_map(|e| e.families.iter().map(move |f| (e.q, e.c, f)))
    }

    pub fn parsed(&self) -> Result<Vec<PComSFamily>> {
        self.families().map(|(_, _, f)| PComSFamily::parse(&f.iter().map(String::as_str).collect::<Vec<_>>())).collect()
    }
}

const GOLDEN_4: &[&[&str]] = &[&["+---"]];
const GOLDEN_5: &[&[&str]] = &[&["+----"], &["++---", "+--+-"]];
const GOLDEN_6: &[&[&str]] = &[&["+-----"], &["++----", "+-+---", "++-+--"]];
const GOLDEN_7: &[&[&str]] =
    &[&["+------"], &["++-+---"], &["++-----", "+-+----", "+---+--"], &["+++----", "++--+--", "+-+-+--"]];
const GOLDEN_8: &[&[&str]] = &[
    &["+-------"],
    &["+-+-----", "+++--+--"],
    &["+-+-----", "++-+----", "++--+---"],
    &["++------", "+--+----", "+++-+---", "+--++-+-"],
    &["+--++-+-", "++---++-", "+++-+---", "++----+-"],
    &["++------", "+-+-----", "+--+----", "+---+---", "++-+----"],
    &["++++----", "++-+--+-", "+++-+---", "+--++-+-", "+++---+-", "+++--+--", "++--+-+-", "++---++-", "+---+---"],
];
const GOLDEN_9: &[&[&str]] = &[
    &["+--------"],
    &["+++-+----", "+-+--++--"],
    &["+++--+---", "++-+---+-"],
    &["++---+-+-", "++----++-"],
    &["++++-----", "++---++--", "+--+-+-+-", "++-+--+--"],
    &["+++------", "+--+-----", "++---+-+-", "+-+--++--"],
    &["++-------", "+-+------", "+--+-----", "+---+----"],
    &["+--+-----", "++-+--+--", "+++------", "++---+---", "+----+-+-"],
    &["++-------", "+-+------", "+---+----", "++-+-----", "+----++--", "+--+---+-"],
    &["+--+-----", "+-+--++--", "++-+---+-", "++----++-", "+++------", "++---+---", "+----+-+-"],
    &["++-+-----", "+----++--", "+--+---+-", "++-+--+--", "+++------", "++---+---", "+----+-+-"],
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
    &[
        "+++------",
        "++---+---",
        "+----+-+-",
        "++-+-----",
        "+----++--",
        "+--+---+-",
        "++----+--",
        "+--+-+---",
        "++-----+-",
        "+--+-----",
    ],
];

/// The published tables for `n = 4..=9`, stored as listed.
pub fn golden_catalog(n: usize) -> Result<Catalog> {
    let raw = match n {
        4 => GOLDEN_4,
        5 => GOLDEN_5,
        6 => GOLDEN_6,
        7 => GOLDEN_7,
        8 => GOLDEN_8,
        9 => GOLDEN_9,
        _ => return Err(invalid(format!("no reference table for n = {n}"))),
    };
    let mut entries: BTreeMap<(usize, i64), Vec<Vec<String>>> = BTreeMap::new();
    for fam in raw {
        let f = PComSFamily::parse(fam)?;
        entries.entry((f.q, f.c)).or_default().push(fam.iter().map(|s| s.to_string()).collect());
    }
    Ok(Catalog { n, entries: entries.into_iter().map(|((q, c), families)| CatalogEntry { q, c, families }).collect() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffItem {
    pub q: usize,
    pub c: i64,
    pub family: Vec<String>,
    /// The listed members really have a constant sum.
    pub valid: bool,
    /// A split into two compatible sub-families, when one exists.
    pub split: Option<(Vec<String>, Vec<String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDiff {
    pub n: usize,
    pub matched: Vec<DiffItem>,
    pub missing: Vec<DiffItem>,
    pub extra: Vec<DiffItem>,
}

impl CatalogDiff {
    pub fn exact(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    /// Every reference family not found is invalid or splits, and every
    /// surplus family is a valid family that does not split.
    pub fn substantiated(&self) -> bool {
        self.missing.iter().all(|d| !d.valid || d.split.is_some())
            && self.extra.iter().all(|d| d.valid && d.split.is_none())
    }
}

fn describe(q: usize, c: i64, fam: &[String]) -> Result<DiffItem> {
    let seqs: Vec<BinarySequence> = fam.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    let (valid, _) = is_pcoms(&seqs)?;
    let split = triviality_witness(&seqs)?.map(|(a, b)| {
        let pick = |ix: Vec<usize>| ix.into_iter().map(|i| fam[i].clone()).collect();
        (pick(a), pick(b))
    });
    Ok(DiffItem { q, c, family: fam.to_vec(), valid, split })
}

fn keyed(c: &Catalog) -> Result<BTreeMap<(usize, i64, EquivalenceKey), Vec<String>>> {
    c.families()
        .map(|(q, cc, f)| {
            let seqs: Vec<BinarySequence> = f.iter().map(|s| s.parse()).collect::<Result<_>>()?;
            Ok(((q, cc, canonical_key(&seqs)), f.clone()))
        })
        .collect()
}

/// Compares a search result against a reference table under equivalence.
pub fn diff_catalogs(found: &Catalog, golden: &Catalog) -> Result<CatalogDiff> {
    if found.n != golden.n {
        return Err(invalid(format!("catalogs for n = {} and n = {}", found.n, golden.n)));
    }
    let f = keyed(found)?;
    let g = keyed(golden)?;
    let fk: BTreeSet<_> = f.keys().cloned().collect();
    let gk: BTreeSet<_> = g.keys().cloned().collect();
    let items = |keys: Vec<&(usize, i64, EquivalenceKey)>, src: &BTreeMap<_, Vec<String>>| {
        keys.into_iter().map(|k| describe(k.0, k.1, &src[k])).collect::<Result<Vec<_>>>()
    };
    Ok(CatalogDiff {
        n: found.n,
        matched: items(gk.intersection(&fk).collect(), &g)?,
        missing: items(gk.difference(&fk).collect(), &g)?,
        extra: items(fk.difference(&gk).collect(), &f)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tables_are_valid() {
        let counts: Vec<usize> = (4..=9).map(|n| golden_catalog(n).unwrap().family_count()).collect();
        assert_eq!(counts, vec![1, 2, 2, 4, 7, 13]);
        let g9 = golden_catalog(9).unwrap();
        let e = g9.entries.iter().find(|e| (e.q, e.c) == (2, -2)).unwrap();
        assert_eq!(e.families.len(), 3);
        let e = g9.entries.iter().find(|e| (e.q, e.c) == (7, -1)).unwrap();
        assert_eq!(e.families.len(), 2);
        assert!(golden_catalog(10).is_err());
    }

    #[test]
    fn self_diff_is_exact() {
        let g = golden_catalog(8).unwrap();
        let d = diff_catalogs(&g, &g).unwrap();
        assert!(d.exact());
        assert_eq!(d.matched.len(), 7);
    }

    #[test]
    fn json_shape() {
        let g = golden_catalog(5).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"n":5,"entries":[{"q":1,"c":1,"families":[["+----"]]},{"q":2,"c":-2,"families":[["++---","+--+-"]]}]}"#
        );
    }
}
