//! Exact combinatorics for a family of alternating binomial identities that
//! generalize the hockey stick pattern in Pascal's triangle.
//!
//! The crate builds the underlying objects end to end:
//!
//! * bounded integer compositions and their signs ([`exact`]),
//! * labeled tableaux over those shapes ([`tableau`]),
//! * monotone lattice sequences and their path statistics ([`lattice`]),
//! * labeled lattice sequences and the sign-reversing involution that pairs
//!   opposite-sign elements ([`involution`]),
//! * both closed forms of the identity, verification reports, and OEIS-style
//!   sequence emission ([`identity`]).
//!
//! All arithmetic is exact (arbitrary precision where counts can grow) and
//! every enumeration has a documented deterministic order, so output is
//! stable enough for golden-file tests. With the default `parallel` feature
//! the exhaustive audits fan out over a rayon pool; without it they fall back
//! to a sequential implementation with identical results.

pub mod exact;
pub mod identity;
pub mod involution;
pub mod lattice;
mod par;
pub mod tableau;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
