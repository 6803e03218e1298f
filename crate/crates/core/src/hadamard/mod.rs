//! Hadamard, partial Hadamard and related arrays built from circulants,
//! with exact Gram verification.

pub mod construct;
pub mod examples;
pub mod matrix;

pub use construct::{
    circulant_from, gs_embed, one_core_embed, ph_from_pcoms, ph_paired, two_core_check, two_core_embed, CoreEmbedding,
};
pub use examples::{ph_examples, PhExample};
pub use matrix::{back_circulant_r, gram_check, hadamard_order_ok, is_skew, GramReport, PMMatrix, Permutation};
