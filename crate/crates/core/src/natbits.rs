//! Arbitrary-precision naturals and their LSB-first bit lists.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Unbounded natural number. Doubles as a truth table, a pair code and a rank.
pub type Nat = BigUint;

/// Bits of a natural, least significant first.
pub type BitList = Vec<u8>;

/// Canonical LSB-first expansion of `n`; `0` maps to the empty list.
pub fn to_rbits(n: &Nat) -> BitList {
    (0..n.bits()).map(|i| n.bit(i) as u8).collect()
}

/// Inverse of [`to_rbits`]. Trailing (most significant) zeros are accepted.
pub fn from_rbits(bits: &[u8]) -> Result<Nat> {
    let mut n = Nat::zero();
    for (index, &value) in bits.iter().enumerate() {
        match value {
            0 => {}
            1 => n.set_bit(index as u64, true),
            _ => return Err(Error::InvalidBit { index, value }),
        }
    }
    Ok(n)
}

/// Largest `t` such that `2^t` divides `n`.
pub fn two_adic_valuation(n: &Nat) -> Result<u64> {
    n.trailing_zeros().ok_or(Error::UndefinedValuation)
}

/// `n` with every factor of two removed.
pub fn odd_part(n: &Nat) -> Result<Nat> {
    let t = two_adic_valuation(n)?;
    Ok(n >> t)
}
