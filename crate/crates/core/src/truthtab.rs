//! Naturals as `2^nv`-bit truth tables.
//!
//! Row convention: an assignment `a` (with `a[k]` the value of variable `k`)
//! occupies row `p(a) = sum_k (1 - a[k]) * 2^(nv-1-k)`. Equivalently,
//! variable `k` is 1 exactly on the rows whose bit `nv-1-k` is clear. This is
//! the only convention under which the column encodings of [`var_tt`] agree
//! with pointwise evaluation, and it is what [`truth_table_of`] uses.

use num_traits::{One, Zero};

use crate::bdd::{Bdd, Node};
use crate::error::{Error, Result};
use crate::natbits::Nat;
use crate::DEFAULT_MAX_VARS;

pub(crate) fn check_vars(nv: u32, max_vars: u32) -> Result<()> {
    if nv > max_vars {
        Err(Error::TooManyVars { nv, max: max_vars })
    } else {
        Ok(())
    }
}

// 2^(2^nv) - 1 without the guard.
pub(crate) fn mask(nv: u32) -> Nat {
    (Nat::one() << (1u64 << nv)) - 1u32
}

// Column of variable k, for k < nv.
pub(crate) fn column(nv: u32, all_ones: &Nat, k: u32) -> Nat {
    let divisor: Nat = (Nat::one() << (1u64 << (nv - k - 1))) + 1u32;
    all_ones / divisor
}

pub(crate) fn fits(nv: u32, tt: &Nat) -> bool {
    tt.bits() <= 1u64 << nv
}

/// Truth table of the constant `true` on `nv` variables: `2^(2^nv) - 1`.
pub fn all_ones_mask(nv: u32) -> Result<Nat> {
    all_ones_mask_with_limit(nv, DEFAULT_MAX_VARS)
}

pub fn all_ones_mask_with_limit(nv: u32, max_vars: u32) -> Result<Nat> {
    check_vars(nv, max_vars)?;
    Ok(mask(nv))
}

/// Truth table of the projection onto variable `k` among `nv` variables,
/// `(2^(2^nv) - 1) / (2^(2^(nv-k-1)) + 1)`. The division is exact.
pub fn var_tt(nv: u32, k: u32) -> Result<Nat> {
    var_tt_with_limit(nv, k, DEFAULT_MAX_VARS)
}

pub fn var_tt_with_limit(nv: u32, k: u32, max_vars: u32) -> Result<Nat> {
    check_vars(nv, max_vars)?;
    if k >= nv {
        return Err(Error::VarIndexOutOfRange { index: k, nv });
    }
    Ok(column(nv, &mask(nv), k))
}

/// Bitwise if-then-else, `(x & (t ^ e)) ^ e`: three operations.
pub fn ite_tt(x: &Nat, t: &Nat, e: &Nat) -> Nat {
    (x & &(t ^ e)) ^ e
}

/// Splits a table into the halves selected by the top variable.
/// Returns `(hi, lo)`: `lo` is the low `2^(nv-1)` bits, `hi` the high half.
pub fn shannon_split(nv: u32, x: &Nat) -> Result<(Nat, Nat)> {
    shannon_split_with_limit(nv, x, DEFAULT_MAX_VARS)
}

pub fn shannon_split_with_limit(nv: u32, x: &Nat, max_vars: u32) -> Result<(Nat, Nat)> {
    if nv == 0 {
        return Err(Error::CannotSplit);
    }
    check_vars(nv, max_vars)?;
    if !fits(nv, x) {
        return Err(Error::TruthTableOutOfRange { nv });
    }
    let half = 1u64 << (nv - 1);
    let lo = x & &mask(nv - 1);
    let hi = x >> half;
    Ok((hi, lo))
}

/// Inverse of [`shannon_split`]: `hi * 2^(2^(nv-1)) + lo`.
pub fn shannon_fuse(nv: u32, hi: &Nat, lo: &Nat) -> Result<Nat> {
    shannon_fuse_with_limit(nv, hi, lo, DEFAULT_MAX_VARS)
}

pub fn shannon_fuse_with_limit(nv: u32, hi: &Nat, lo: &Nat, max_vars: u32) -> Result<Nat> {
    if nv == 0 {
        return Err(Error::CannotSplit);
    }
    check_vars(nv, max_vars)?;
    if !fits(nv - 1, hi) || !fits(nv - 1, lo) {
        return Err(Error::HalfOverflow { nv });
    }
    Ok((hi << (1u64 << (nv - 1))) | lo)
}

/// Values of the variables, `values[k]` for variable `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    /// The assignment sitting at truth-table row `row` for `nv` variables.
    pub fn from_row(nv: u32, row: u64) -> Self {
        let values = (0..nv).map(|k| (row >> (nv - 1 - k)) & 1 == 0).collect();
        Assignment { values }
    }

    /// Inverse of [`Assignment::from_row`].
    pub fn row(&self) -> u64 {
        let nv = self.values.len() as u32;
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| !v)
            .map(|(k, _)| 1u64 << (nv - 1 - k as u32))
            .sum()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, k: u32) -> bool {
        self.values[k as usize]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }
}

/// Evaluates `b` at a single point by walking the tree.
pub fn semantic_eval(b: &Bdd, a: &Assignment) -> Result<bool> {
    if a.len() != b.nv() as usize {
        return Err(Error::AssignmentLength {
            expected: b.nv() as usize,
            got: a.len(),
        });
    }
    let mut node = b.root();
    loop {
        match node {
            Node::Leaf(bit) => return Ok(*bit),
            Node::Ite { var, then, els } => {
                node = if a.get(*var) { then } else { els };
            }
        }
    }
}

/// Brute-force truth table: one [`semantic_eval`] per row.
pub fn truth_table_of(b: &Bdd) -> Result<Nat> {
    truth_table_of_with_limit(b, DEFAULT_MAX_VARS)
}

pub fn truth_table_of_with_limit(b: &Bdd, max_vars: u32) -> Result<Nat> {
    let nv = b.nv();
    check_vars(nv, max_vars)?;
    let mut tt = Nat::zero();
    for row in 0..(1u64 << nv) {
        if semantic_eval(b, &Assignment::from_row(nv, row))? {
            tt.set_bit(row, true);
        }
    }
    Ok(tt)
}
