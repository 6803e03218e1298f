//! Periodic compatible families: orbits whose nontrivial autocorrelations
//! add up to a constant.

pub mod catalog;
pub mod family;
pub mod search;

pub use catalog::{diff_catalogs, golden_catalog, Catalog, CatalogDiff, CatalogEntry};
pub use family::{
    canonical_key, compose, containing_complete_set, family_sum, is_pcoms, is_trivial, prime_decimation_family,
    trivial_family_gn1, EquivalenceKey, PComSFamily,
};
pub use search::{search, search_with_stats, SearchConfig};
