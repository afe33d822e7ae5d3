//! Projective binary linear codes and Boolean functions on GF(2^m).
//!
//! A defining set `D` in GF(2^m) gives the trace code `C_D`; every binary code is
//! such a trace code, and the weight distribution of `C_D` for a set `D` follows
//! from the Walsh spectrum of the characteristic function of `D`. This crate builds
//! both directions and checks each spectral result against brute-force enumeration.
//!
//! Runnable tours of each capability live in `examples/`; the `boolcodes` binary
//! wraps them as a command-line tool.

pub mod bits;
pub mod boolfun;
pub mod catalog;
pub mod cli;
pub mod defining_set;
mod error;
pub mod gf2;
pub mod linear_code;
pub mod report;

pub use bits::BitRow;
pub use boolfun::{BooleanFunction, Classification, SpectralClass, WalshSpectrum};
pub use catalog::CatalogCode;
pub use defining_set::{DefiningSet, SpectralWeightReport};
pub use error::{Error, Result};
pub use gf2::{Basis, Field, FieldElement};
pub use linear_code::{BinaryCode, WeightDistribution};
