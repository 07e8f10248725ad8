//! Exact weight distributions of binary Reed–Muller codes and their cosets.
//!
//! The crate pairs two independent routes for every count it produces:
//! bit-parallel enumeration of codewords, and the MacWilliams /
//! Assmus–Mattson transforms evaluated with exact Krawtchouk values. The
//! [`harness`] module uses both to check statements about balanced words in
//! cosets of `RM(k, m)`.

pub mod bfcore;
mod error;
pub mod harness;
pub mod krawtchouk;
mod limits;
pub mod rmcodes;
mod span;
pub mod spectral;
pub mod transforms;

pub use bfcore::{AnfMonomialSet, Monomial, PointVector, TruthTable, MAX_VARS};
pub use error::{Error, Result};
pub use limits::{Limits, CAP_DIM_ENV};
pub use rmcodes::{RmParams, WeightDistribution};
pub use spectral::WalshSpectrum;
pub use transforms::{CosetDualProfile, CosetSpec};
