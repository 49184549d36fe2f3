//! Structured LDPC codes with parity-check matrices of the form `[C | M]`,
//! where `C` is an m×m circulant of column weight 2 and `M` is a sparse
//! binary matrix of constant column weight r ≥ 3 with no zero row.
//!
//! The crate provides:
//! - construction and sampling of such codes, with alist file I/O (`code`, `alist`),
//! - the natural linear-time accumulator encoder (`encoder`),
//! - closed-form calculators for the packing bounds that parameterize the
//!   search (`bounds`),
//! - a randomized search for certified low-weight codewords built from
//!   quasi-colliding column sums (`search`), plus a text certificate format
//!   that lets a third party re-verify any claimed codeword (`certificate`).

pub mod alist;
pub mod bounds;
pub mod certificate;
pub mod cli;
pub mod code;
pub mod encoder;
pub mod gf2;
pub mod search;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
