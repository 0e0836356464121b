//! Exact computer algebra for multi-Novikov structures.
//!
//! The crate provides, over arbitrary-precision rational scalars:
//!
//! * sparse multi-indices and canonical linear combinations ([`multiidx`],
//!   [`poly`]) together with a generic Leibniz extension of derivations;
//! * free multi-magmatic terms, the rotation correspondence, the
//!   left-leaning/ordered/normal classification and two independent
//!   normal-form algorithms for the free multi-Novikov algebra ([`magnov`]);
//! * general multi-indices with their derivation family, populated
//!   condition and generator expansion ([`genidx`]);
//! * the mixed word algebra behind SPDE multi-indices ([`spdeidx`]);
//! * planar decorated trees modulo the monomial/integral commutation,
//!   grafting, symmetry factors and the tree-to-multi-index morphism
//!   ([`dectree`]).
//!
//! Everything is immutable and pure; no floating point is used anywhere.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod dectree;
pub mod error;
pub mod genidx;
pub mod letter;
pub mod linalg;
pub mod magnov;
pub mod multiidx;
pub mod poly;
pub mod scalar;
pub mod spdeidx;

pub use error::Error;
pub use letter::{Gen, Letter};
pub use multiidx::MultiIdx;
pub use poly::Poly;
pub use scalar::Scalar;
