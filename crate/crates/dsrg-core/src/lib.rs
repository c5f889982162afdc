//! Exact arithmetic for directed strongly regular dihedrants.
//!
//! A dihedrant `Dih(n, X, Y)` is the Cayley graph of the dihedral group of
//! order `2n` with connection set `X ∪ Yτ`, where `X` and `Y` are sets of
//! exponents of the rotation generator. This crate provides the machinery to
//! decide whether such a graph is a directed strongly regular graph (DSRG),
//! to classify all of them with `Y = X`, and to cross-check every answer
//! against independent routes:
//!
//! - [`multiset`]: multisets of residues mod `n` with exact multiplicities,
//!   plus the orbit/subgroup/coset vocabulary of the additive group `Z_n`;
//! - [`ring`]: integer group rings over the cyclic group `C_n` and the
//!   dihedral group `D_n`, with checked (never wrapping) arithmetic;
//! - [`spectrum`]: characters of `C_n`, the Fourier transform on `Z_n`,
//!   Ramanujan sums, orbit decompositions, and coset-structure extraction;
//! - [`verify`]: three independent DSRG verifiers (adjacency oracle,
//!   group-ring identities, spectral identities) and the parameter engine
//!   (feasibility, eigenvalues, complement);
//! - [`catalog`]: generators for the known dihedrant families, the
//!   `Dih(n, X, X)` classifier, and brute-force enumeration oracles.
//!
//! All authoritative accept/reject decisions are made in exact integer
//! arithmetic; floating point appears only in the diagnostic spectral layer,
//! with explicit integer-snapping tolerances.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the `std` feature
//! (on by default) only adds `std::error::Error` impls for the error types.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod catalog;
pub mod dihedrant;
pub mod error;
pub mod multiset;
pub mod numtheory;
pub mod ring;
pub mod spectrum;
pub mod verify;

pub use dihedrant::DihedrantSpec;
pub use error::Error;
pub use multiset::ResidueMultiset;
pub use ring::{CyclicRingElem, DihedralRingElem};
pub use spectrum::SpectrumTable;
pub use verify::{DsrgParams, EigenData, NotDsrg};
