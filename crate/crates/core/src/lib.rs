//! Natural numbers seen as boolean truth tables.
//!
//! A natural `tt < 2^(2^n)` is the truth table of an `n`-variable boolean
//! function. This crate provides:
//!
//! * [`natbits`]: LSB-first bit lists and 2-adic helpers over [`Nat`].
//! * [`pairing`]: Cantor, Pepis-Kalmar and bit-interleaving bijections
//!   `Nat x Nat <-> Nat`.
//! * [`truthtab`]: variable columns, masks, bitvector if-then-else,
//!   Shannon split/fuse and a pointwise evaluation oracle.
//! * [`bdd`]: binary decision trees built by recursive unpairing, reduced by
//!   trimming identical branches, and evaluated back to their truth table.
//! * [`ranking`]: a bijection between the naturals and the stream of
//!   decision trees over all variable counts.
//! * [`text`] and [`cli`]: the s-expression / JSON formats and the
//!   command-line front end.

pub mod bdd;
pub mod cli;
pub mod error;
pub mod natbits;
pub mod pairing;
pub mod ranking;
pub mod text;
pub mod truthtab;

pub use bdd::{Bdd, Node};
pub use error::{Error, Result};
pub use natbits::Nat;
pub use pairing::PairScheme;
pub use ranking::{RankPair, Variant};

/// Default upper bound on the variable count accepted by operations that
/// materialize `2^(2^nv)`-sized integers.
pub const DEFAULT_MAX_VARS: u32 = 20;
