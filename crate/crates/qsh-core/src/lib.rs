//! Exact arithmetic for the quasi-shuffle Hopf algebra on integer-indexed
//! words, the non-singular coideal it carries, and the group of transfer
//! characters relating renormalized evaluations.
//!
//! Everything is computed over exact scalars (arbitrary-precision rationals,
//! or rational functions in one variable) and all iteration orders are
//! canonical, so results are bit-for-bit reproducible.

#![no_std]

extern crate alloc;

pub mod characters;
pub mod coideal;
pub mod element;
pub mod error;
pub mod fixtures;
pub mod hopf;
pub mod isomorphism;
pub mod ratfun;
pub mod scalar;
pub mod solve;
pub mod word;

pub use characters::{
    act, char_inverse, check_character, check_infinitesimal, conv_exp, conv_log,
    convolution_product, fit_character, infinitesimal_from_lambda, is_transfer, sample_transfer,
    transfer_between, LinearMap, MapKind, TransferElement,
};
pub use coideal::{
    all_contractions, contract_along, ideal_membership, is_non_singular, n_basis,
    prefix_closure_check, Alphabet, MembershipCertificate, SpanBasis, Window,
};
pub use element::{Element, TensorElement};
pub use error::{Error, Result};
pub use fixtures::{
    bernoulli, ems_t_value, forced_partner, published_value, scheme_table, scheme_value,
    zeta_depth1, Provenance, SchemeName, SchemeTable,
};
pub use hopf::{
    antipode, convolve, coproduct, counit, eulerian_pi1, quasi_shuffle, quasi_shuffle_elem,
    reduced_coproduct, Antipode, Eulerian,
};
pub use isomorphism::{
    check_hoffman_morphism, hoffman_exp, hoffman_log, shuffle, w2_basis_diff, w_dimension, WBasis,
};
pub use ratfun::{Poly, RatFun};
pub use scalar::{Field, Rat};
pub use word::Word;
