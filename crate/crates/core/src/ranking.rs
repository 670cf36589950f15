//! Ranking and unranking of decision trees.
//!
//! Naturals are cut into consecutive blocks, one per variable count `k >= 1`.
//! Block `k` starts at `bsum(k-1)` and holds `bsum(k) - bsum(k-1)` entries:
//! 2 for `k = 1` and `2^(2^(k-1))` for `k >= 2`. The local index `r` inside
//! block `k` is used directly as a `k`-variable truth table, so only the
//! tables below `2^(2^(k-1))` (or `{0, 1}` for `k = 1`) are reached. The map
//! is a bijection between `Nat` and that indexed family, not between `Nat`
//! and all `(nv, tt)` pairs.

use num_traits::{One, Zero};

use crate::bdd::{ev_with_limit, plain_bdd_with_limit, plain_inverse_bdd, reduced_bdd_with_limit, Bdd};
use crate::error::{Error, Result};
use crate::natbits::Nat;
use crate::truthtab::check_vars;
use crate::DEFAULT_MAX_VARS;

/// Plain (complete) or reduced trees.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    Plain,
    #[default]
    Reduced,
}

/// Block `k` and the offset `r` inside it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankPair {
    pub k: u32,
    pub r: Nat,
}

// 2^(2^m)
fn tables(m: u32) -> Nat {
    Nat::one() << (1u64 << m)
}

/// `bsum(0) = 0`, `bsum(1) = 2`, `bsum(n) = bsum(n-1) + 2^(2^(n-1))`.
pub fn bsum(n: u32) -> Nat {
    if n == 0 {
        return Nat::zero();
    }
    let mut s = Nat::from(2u8);
    for m in 1..n {
        s += tables(m);
    }
    s
}

/// Number of ranks in block `k >= 1`.
pub fn block_size(k: u32) -> Nat {
    match k {
        0 => Nat::zero(),
        1 => Nat::from(2u8),
        _ => tables(k - 1),
    }
}

/// The smallest `k` with `bsum(k) > n`, and `r = n - bsum(k-1)`.
pub fn to_bsum(n: &Nat) -> RankPair {
    let mut k = 1;
    let mut below = Nat::zero();
    let mut upto = bsum(1);
    while &upto <= n {
        k += 1;
        below = upto.clone();
        upto += tables(k - 1);
    }
    RankPair { k, r: n - below }
}

/// Tree at rank `n` in the stream of complete trees.
pub fn nat2plain_bdd(n: &Nat) -> Result<Bdd> {
    nat2plain_bdd_with_limit(n, DEFAULT_MAX_VARS)
}

pub fn nat2plain_bdd_with_limit(n: &Nat, max_vars: u32) -> Result<Bdd> {
    let RankPair { k, r } = to_bsum(n);
    check_vars(k, max_vars)?;
    plain_bdd_with_limit(k, &r, max_vars)
}

/// Tree at rank `n` in the stream of reduced trees.
pub fn nat2bdd(n: &Nat) -> Result<Bdd> {
    nat2bdd_with_limit(n, DEFAULT_MAX_VARS)
}

pub fn nat2bdd_with_limit(n: &Nat, max_vars: u32) -> Result<Bdd> {
    let RankPair { k, r } = to_bsum(n);
    check_vars(k, max_vars)?;
    reduced_bdd_with_limit(k, &r, max_vars)
}

fn shift_into_block(nv: u32, local: Nat) -> Result<Nat> {
    if nv == 0 {
        return Err(Error::OutOfImage(
            "trees over 0 variables are not enumerated".into(),
        ));
    }
    if local >= block_size(nv) {
        return Err(Error::OutOfImage(format!(
            "local index {local} does not fit block {nv} of size {}",
            block_size(nv)
        )));
    }
    Ok(bsum(nv - 1) + local)
}

/// Inverse of [`nat2plain_bdd`], using the structural code as local index.
pub fn plain_bdd2nat(b: &Bdd) -> Result<Nat> {
    shift_into_block(b.nv(), plain_inverse_bdd(b))
}

/// Inverse of [`nat2bdd`], using boolean evaluation as local index.
pub fn bdd2nat(b: &Bdd) -> Result<Nat> {
    bdd2nat_with_limit(b, DEFAULT_MAX_VARS)
}

pub fn bdd2nat_with_limit(b: &Bdd, max_vars: u32) -> Result<Nat> {
    shift_into_block(b.nv(), ev_with_limit(b, max_vars)?)
}

pub fn unrank(variant: Variant, n: &Nat, max_vars: u32) -> Result<Bdd> {
    match variant {
        Variant::Plain => nat2plain_bdd_with_limit(n, max_vars),
        Variant::Reduced => nat2bdd_with_limit(n, max_vars),
    }
}

pub fn rank(variant: Variant, b: &Bdd, max_vars: u32) -> Result<Nat> {
    match variant {
        Variant::Plain => plain_bdd2nat(b),
        Variant::Reduced => bdd2nat_with_limit(b, max_vars),
    }
}

/// Lazily unranks `from, from+1, ...` for `count` steps.
#[derive(Clone, Debug)]
pub struct Enumerate {
    variant: Variant,
    next: Nat,
    remaining: u64,
    max_vars: u32,
}

impl Iterator for Enumerate {
    type Item = Result<Bdd>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let item = unrank(self.variant, &self.next, self.max_vars);
        self.next += 1u32;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, usize::try_from(self.remaining).ok())
    }
}

pub fn enumerate(variant: Variant, from: &Nat, count: u64) -> Enumerate {
    enumerate_with_limit(variant, from, count, DEFAULT_MAX_VARS)
}

pub fn enumerate_with_limit(variant: Variant, from: &Nat, count: u64, max_vars: u32) -> Enumerate {
    Enumerate {
        variant,
        next: from.clone(),
        remaining: count,
        max_vars,
    }
}
