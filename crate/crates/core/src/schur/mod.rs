//! The three orbit partitions of `Z_2^n` (weight, rotation, rotation with
//! decimation) and the composition view of rotation orbits.

pub mod composition;
pub mod decimation;
pub mod dimension;
pub mod hamming;
pub mod orbits;

pub use composition::{alternating_product, cbar_action, partitioned_form, AlternatingComposition};
pub use decimation::{decimation_classes, dim_sd, DecimationClass};
pub use dimension::{dim_sc_prime, dim_sc_prime_power, DimensionReport};
pub use hamming::{complete_sh_set, even_odd_partition, hamming_product, hamming_product_brute};
pub use orbits::{
    classify_orbit, enumerate_orbits, fhat_product_law, free_closure, necklace_count, sym_free_closure, CirculantOrbit,
    ClosureWitness,
};
