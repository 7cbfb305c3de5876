//! Powers of fundamental characters of tame inertia.
//!
//! A niveau-`m` fundamental character `ω_m` has order `l^m - 1`, and the
//! Frobenius of `Q_l` acts on its powers by `e ↦ l·e`. A tame semisimple
//! representation restricted to inertia is therefore a multiset of Frobenius
//! orbits of exponents. We store each orbit by its smallest element at the
//! smallest niveau it lives at, which makes isomorphism of restrictions to
//! inertia plain equality of [`TameInertialType`] values.
//!
//! Non-primitive input (an exponent whose orbit is shorter than its niveau)
//! is never an error: `ω_m^{(l^m-1)/(l^d-1)} = ω_d`, so such an exponent is
//! rewritten at niveau `d` and repeated `m/d` times.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::OddPrime;

/// The power `ω_m^e`, with `0 <= e < l^m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CharExponent {
    pub niveau: u32,
    pub exponent: u64,
}

impl CharExponent {
    pub fn new(l: OddPrime, niveau: u32, exponent: i128) -> Result<Self> {
        let modulus = l.modulus(niveau)?;
        Ok(CharExponent {
            niveau,
            exponent: reduce(exponent, modulus),
        })
    }
}

fn reduce(e: i128, modulus: u64) -> u64 {
    e.rem_euclid(modulus as i128) as u64
}

fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

/// `{ e·l^i mod l^m - 1 : i >= 0 }`.
pub fn frobenius_orbit(l: OddPrime, niveau: u32, e: i128) -> Result<BTreeSet<u64>> {
    let modulus = l.modulus(niveau)?;
    let start = reduce(e, modulus);
    let mut orbit = BTreeSet::new();
    let mut x = start;
    while orbit.insert(x) {
        x = mul_mod(x, l.get(), modulus);
    }
    Ok(orbit)
}

/// Restriction to inertia of `Ind ω_m^e`, as a multiset of primitive pieces.
pub fn decompose_induced(l: OddPrime, niveau: u32, e: i128) -> Result<Vec<CharExponent>> {
    let modulus = l.modulus(niveau)?;
    let orbit = frobenius_orbit(l, niveau, e)?;
    let d = orbit.len() as u32;
    debug_assert_eq!(niveau % d, 0);
    let small = l.modulus(d)?;
    // the orbit has length d, so (l^m - 1)/(l^d - 1) divides every element
    let step = modulus / small;
    let smallest = orbit
        .iter()
        .map(|&x| {
            debug_assert_eq!(x % step, 0);
            x / step
        })
        .min()
        .expect("orbits are non-empty");
    let piece = CharExponent {
        niveau: d,
        exponent: smallest,
    };
    Ok(vec![piece; (niveau / d) as usize])
}

/// Restriction to inertia of a tame semisimple representation, in canonical
/// form: primitive pieces, each the minimal element of its Frobenius orbit,
/// sorted by `(niveau, exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TypeRecord")]
pub struct TameInertialType {
    l: OddPrime,
    pieces: Vec<CharExponent>,
}

/// Unvalidated wire form of a [`TameInertialType`].
#[derive(Debug, Clone, Deserialize)]
pub struct TypeRecord {
    pub l: i64,
    pub pieces: Vec<PieceRecord>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PieceRecord {
    pub niveau: u32,
    pub exponent: i128,
}

impl TryFrom<TypeRecord> for TameInertialType {
    type Error = Error;

    fn try_from(record: TypeRecord) -> Result<Self> {
        let l = OddPrime::new(record.l)?;
        let raw: Vec<(u32, i128)> = record
            .pieces
            .iter()
            .map(|p| (p.niveau, p.exponent))
            .collect();
        canonicalize(l, &raw)
    }
}

impl TameInertialType {
    pub fn l(&self) -> OddPrime {
        self.l
    }

    pub fn pieces(&self) -> &[CharExponent] {
        &self.pieces
    }

    /// Dimension of the underlying representation.
    pub fn dimension(&self) -> usize {
        self.pieces.iter().map(|p| p.niveau as usize).sum()
    }

    /// Largest niveau among the pieces; 0 for the empty type.
    pub fn niveau(&self) -> u32 {
        self.pieces.iter().map(|p| p.niveau).max().unwrap_or(0)
    }

    fn from_raw_pieces(l: OddPrime, raw: impl IntoIterator<Item = (u32, i128)>) -> Result<Self> {
        let mut pieces = Vec::new();
        for (m, e) in raw {
            pieces.extend(decompose_induced(l, m, e)?);
        }
        pieces.sort_unstable();
        Ok(TameInertialType { l, pieces })
    }
}

impl fmt::Display for TameInertialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", p.niveau, p.exponent)?;
        }
        f.write_str("}")
    }
}

/// Canonical form of `⊕ Ind ω_m^e` over the given `(m, e)` list.
pub fn canonicalize(l: OddPrime, raw: &[(u32, i128)]) -> Result<TameInertialType> {
    TameInertialType::from_raw_pieces(l, raw.iter().copied())
}

pub fn types_equal(t1: &TameInertialType, t2: &TameInertialType) -> Result<bool> {
    if t1.l != t2.l {
        return Err(Error::PrimeMismatch(t1.l.get(), t2.l.get()));
    }
    Ok(t1.pieces == t2.pieces)
}

/// The contragredient: every exponent negated.
pub fn dual_type(t: &TameInertialType) -> TameInertialType {
    TameInertialType::from_raw_pieces(
        t.l,
        t.pieces.iter().map(|p| (p.niveau, -(p.exponent as i128))),
    )
    .expect("moduli of an existing type are representable")
}

/// Twist by `ω^k`, using `ω = ω_m^{(l^m-1)/(l-1)}`.
pub fn twist_cyclotomic(t: &TameInertialType, k: i128) -> TameInertialType {
    let l = t.l;
    let k = k.rem_euclid(l.get() as i128 - 1);
    TameInertialType::from_raw_pieces(
        l,
        t.pieces.iter().map(|p| {
            let modulus = l.modulus(p.niveau).expect("representable") as i128;
            let unit = modulus / (l.get() as i128 - 1);
            (p.niveau, p.exponent as i128 + k * unit)
        }),
    )
    .expect("moduli of an existing type are representable")
}
