//! Bijections between `Nat x Nat` and `Nat`.
//!
//! Every scheme satisfies `pair(unpair(z)) == z` and `unpair(pair(x, y)) == (x, y)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::error::Error;
use crate::natbits::{odd_part, two_adic_valuation, Nat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairScheme {
    Cantor,
    Pepis,
    Bitmerge,
}

impl PairScheme {
    pub const ALL: [PairScheme; 3] = [PairScheme::Cantor, PairScheme::Pepis, PairScheme::Bitmerge];

    pub fn pair(self, x: &Nat, y: &Nat) -> Nat {
        match self {
            PairScheme::Cantor => cantor_pair(x, y),
            PairScheme::Pepis => pepis_pair(x, y),
            PairScheme::Bitmerge => bitmerge_pair(x, y),
        }
    }

    pub fn unpair(self, z: &Nat) -> (Nat, Nat) {
        match self {
            PairScheme::Cantor => cantor_unpair(z),
            PairScheme::Pepis => pepis_unpair(z),
            PairScheme::Bitmerge => bitmerge_unpair(z),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairScheme::Cantor => "cantor",
            PairScheme::Pepis => "pepis",
            PairScheme::Bitmerge => "bitmerge",
        }
    }
}

impl fmt::Display for PairScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PairScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cantor" => Ok(PairScheme::Cantor),
            "pepis" => Ok(PairScheme::Pepis),
            "bitmerge" => Ok(PairScheme::Bitmerge),
            other => Err(Error::Parse(format!("unknown pairing scheme `{other}`"))),
        }
    }
}

/// `(x+y)(x+y+1)/2 + y`
pub fn cantor_pair(x: &Nat, y: &Nat) -> Nat {
    let s = x + y;
    let tri = (&s * (&s + 1u32)) >> 1u32;
    tri + y
}

/// Inverse of [`cantor_pair`], using an exact integer square root so it
/// stays correct for arbitrarily wide `z`.
pub fn cantor_unpair(z: &Nat) -> (Nat, Nat) {
    let disc: Nat = (z << 3u32) + 1u32;
    let w = (disc.sqrt() - 1u32) >> 1u32;
    let tri = (&w * (&w + 1u32)) >> 1u32;
    let y = z - tri;
    let x = w - &y;
    (x, y)
}

/// `2^x * (2y + 1) - 1`
///
/// Panics if `x` does not fit in a `u64`: the result would have more bits
/// than can be addressed.
pub fn pepis_pair(x: &Nat, y: &Nat) -> Nat {
    let shift = x.to_u64().expect("pepis_pair: exponent does not fit in u64");
    let odd: Nat = (y << 1u32) + 1u32;
    (odd << shift) - 1u32
}

/// Inverse of [`pepis_pair`]: `x` is the 2-adic valuation of `z+1` and `y`
/// is half the odd part of `z+1`, rounded down.
pub fn pepis_unpair(z: &Nat) -> (Nat, Nat) {
    let succ: Nat = z + 1u32;
    let x = two_adic_valuation(&succ).expect("z + 1 is non-zero");
    let odd = odd_part(&succ).expect("z + 1 is non-zero");
    (Nat::from(x), odd >> 1u32)
}

// Moves bit i of a 32-bit word to bit 2i.
fn spread(v: u32) -> u64 {
    let mut v = v as u64;
    v = (v | (v << 16)) & 0x0000_ffff_0000_ffff;
    v = (v | (v << 8)) & 0x00ff_00ff_00ff_00ff;
    v = (v | (v << 4)) & 0x0f0f_0f0f_0f0f_0f0f;
    v = (v | (v << 2)) & 0x3333_3333_3333_3333;
    v = (v | (v << 1)) & 0x5555_5555_5555_5555;
    v
}

// Gathers the even bits of a 64-bit word.
fn compact(v: u64) -> u32 {
    let mut v = v & 0x5555_5555_5555_5555;
    v = (v | (v >> 1)) & 0x3333_3333_3333_3333;
    v = (v | (v >> 2)) & 0x0f0f_0f0f_0f0f_0f0f;
    v = (v | (v >> 4)) & 0x00ff_00ff_00ff_00ff;
    v = (v | (v >> 8)) & 0x0000_ffff_0000_ffff;
    v = (v | (v >> 16)) & 0x0000_0000_ffff_ffff;
    v as u32
}

/// Interleaves bits: bit `i` of `x` goes to position `2i` and bit `i` of `y`
/// to position `2i+1` (LSB first). The shorter operand is padded with zeros.
pub fn bitmerge_pair(x: &Nat, y: &Nat) -> Nat {
    if x.is_zero() && y.is_zero() {
        return Nat::zero();
    }
    let xs = x.to_u32_digits();
    let ys = y.to_u32_digits();
    let len = xs.len().max(ys.len());
    let mut out = Vec::with_capacity(2 * len);
    for i in 0..len {
        let xd = xs.get(i).copied().unwrap_or(0);
        let yd = ys.get(i).copied().unwrap_or(0);
        let merged = spread(xd) | (spread(yd) << 1);
        out.push(merged as u32);
        out.push((merged >> 32) as u32);
    }
    Nat::new(out)
}

/// Inverse of [`bitmerge_pair`]: even-position bits form `x`, odd-position
/// bits form `y`.
pub fn bitmerge_unpair(z: &Nat) -> (Nat, Nat) {
    let zs = z.to_u32_digits();
    let mut xs = Vec::with_capacity(zs.len() / 2 + 1);
    let mut ys = Vec::with_capacity(zs.len() / 2 + 1);
    for chunk in zs.chunks(2) {
        let lo = chunk[0] as u64;
        let hi = chunk.get(1).copied().unwrap_or(0) as u64;
        let word = lo | (hi << 32);
        xs.push(compact(word));
        ys.push(compact(word >> 1));
    }
    (Nat::new(xs), Nat::new(ys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::natbits::{from_rbits, to_rbits};
    use proptest::prelude::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    fn pair_of(a: u64, b: u64) -> (Nat, Nat) {
        (nat(a), nat(b))
    }

    // The list-level interleaver, run in the pairing direction only.
    fn bitmix(xs: &[u8], ys: &[u8]) -> Vec<u8> {
        match (xs.split_first(), ys.is_empty()) {
            (Some((x, rest)), _) => {
                let mut out = vec![*x];
                out.extend(bitmix(ys, rest));
                out
            }
            (None, false) => {
                let mut out = vec![0];
                out.extend(bitmix(ys, &[]));
                out
            }
            (None, true) => vec![],
        }
    }

    fn bitmix_pair(x: u64, y: u64) -> Nat {
        from_rbits(&bitmix(&to_rbits(&nat(x)), &to_rbits(&nat(y)))).unwrap()
    }

    #[test]
    fn cantor_examples() {
        assert_eq!(cantor_pair(&nat(0), &nat(0)), nat(0));
        assert_eq!(cantor_pair(&nat(0), &nat(1)), nat(2));
        assert_eq!(cantor_pair(&nat(1), &nat(2)), nat(8));
        assert_eq!(cantor_unpair(&nat(0)), pair_of(0, 0));
        assert_eq!(cantor_unpair(&nat(8)), pair_of(1, 2));
    }

    #[test]
    fn cantor_exact_at_2_pow_200() {
        let z = Nat::from(1u8) << 200u32;
        let (x, y) = cantor_unpair(&z);
        assert_eq!(cantor_pair(&x, &y), z);
    }

    #[test]
    fn cantor_diagonal_walk() {
        // Enumerate diagonals directly: z counts up along x+y = d, y ascending.
        let mut z = 0u64;
        for d in 0u64..60 {
            for y in 0..=d {
                assert_eq!(cantor_unpair(&nat(z)), pair_of(d - y, y));
                z += 1;
            }
        }
    }

    #[test]
    fn pepis_examples() {
        assert_eq!(pepis_pair(&nat(1), &nat(10)), nat(41));
        assert_eq!(pepis_pair(&nat(0), &nat(0)), nat(0));
        assert_eq!(pepis_pair(&nat(2), &nat(1)), nat(11));
        assert_eq!(pepis_unpair(&nat(41)), pair_of(1, 10));
        assert_eq!(pepis_unpair(&nat(0)), pair_of(0, 0));
        assert_eq!(pepis_unpair(&nat(10)), pair_of(0, 5));
    }

    #[test]
    fn pepis_first_argument_doubles() {
        for x in 0u64..32 {
            let a = pepis_pair(&nat(x + 1), &nat(0)) + 1u32;
            let b = (pepis_pair(&nat(x), &nat(0)) + 1u32) * 2u32;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn bitmerge_examples() {
        assert_eq!(bitmerge_pair(&nat(60), &nat(26)), nat(2008));
        assert_eq!(bitmerge_pair(&nat(0), &nat(0)), nat(0));
        assert_eq!(bitmerge_pair(&nat(3), &nat(0)), nat(5));
        assert_eq!(bitmerge_unpair(&nat(2008)), pair_of(60, 26));
        assert_eq!(bitmerge_unpair(&nat(10)), pair_of(0, 3));
        assert_eq!(bitmerge_unpair(&nat(0)), pair_of(0, 0));
    }

    #[test]
    fn bitmerge_table_0_to_15() {
        let table = [
            (0, 0), (1, 0), (0, 1), (1, 1),
            (2, 0), (3, 0), (2, 1), (3, 1),
            (0, 2), (1, 2), (0, 3), (1, 3),
            (2, 2), (3, 2), (2, 3), (3, 3),
        ];
        for (z, &(x, y)) in table.iter().enumerate() {
            assert_eq!(bitmerge_unpair(&nat(z as u64)), pair_of(x, y), "z = {z}");
        }
    }

    #[test]
    fn bitmerge_agrees_with_list_interleaver() {
        for x in 0u64..256 {
            for y in 0u64..256 {
                assert_eq!(bitmerge_pair(&nat(x), &nat(y)), bitmix_pair(x, y));
            }
        }
    }

    #[test]
    fn every_scheme_roundtrips_exhaustively() {
        for scheme in PairScheme::ALL {
            for z in 0u64..(1 << 16) {
                let (x, y) = scheme.unpair(&nat(z));
                assert_eq!(scheme.pair(&x, &y), nat(z), "{scheme} z = {z}");
            }
            for x in 0u64..256 {
                for y in 0u64..256 {
                    let z = scheme.pair(&nat(x), &nat(y));
                    assert_eq!(scheme.unpair(&z), pair_of(x, y), "{scheme} ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn scheme_names_parse() {
        for scheme in PairScheme::ALL {
            assert_eq!(scheme.name().parse::<PairScheme>().unwrap(), scheme);
        }
        assert!("zorder".parse::<PairScheme>().is_err());
    }

    fn bitmerge_width_bound(x: &Nat, y: &Nat) -> bool {
        let w = x.bits().max(y.bits());
        bitmerge_pair(x, y).bits() <= 2 * w
    }

    fn wide_nat() -> impl Strategy<Value = Nat> {
        prop::collection::vec(any::<u32>(), 0..12).prop_map(Nat::new)
    }

    proptest! {
        #[test]
        fn wide_roundtrips(x in wide_nat(), y in wide_nat()) {
            for scheme in [PairScheme::Cantor, PairScheme::Bitmerge] {
                let z = scheme.pair(&x, &y);
                prop_assert_eq!(scheme.unpair(&z), (x.clone(), y.clone()));
            }
            prop_assert!(bitmerge_width_bound(&x, &y));
        }

        #[test]
        fn wide_unpair_roundtrips(z in wide_nat()) {
            for scheme in PairScheme::ALL {
                let (x, y) = scheme.unpair(&z);
                prop_assert_eq!(scheme.pair(&x, &y), z.clone());
            }
        }
    }
}
