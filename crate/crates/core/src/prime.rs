//! Odd primes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd prime `l`, checked by trial division at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "u64")]
pub struct OddPrime(u64);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl OddPrime {
    pub fn new(l: i64) -> Result<Self> {
        if l == 2 {
            return Err(Error::EvenPrime);
        }
        if l < 2 || !is_prime(l as u64) {
            return Err(Error::NotPrime(l));
        }
        Ok(OddPrime(l as u64))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `l^m - 1`, the order of the niveau-`m` fundamental character.
    pub fn modulus(self, niveau: u32) -> Result<u64> {
        if niveau == 0 {
            return Err(Error::ZeroNiveau);
        }
        self.0
            .checked_pow(niveau)
            .map(|p| p - 1)
            .ok_or(Error::ModulusOverflow { l: self.0, niveau })
    }

    /// All odd primes in `[lo, hi]`, ascending.
    pub fn range(lo: u64, hi: u64) -> Vec<OddPrime> {
        (lo.max(3)..=hi)
            .filter(|&n| is_prime(n))
            .map(OddPrime)
            .collect()
    }
}

impl TryFrom<i64> for OddPrime {
    type Error = Error;

    fn try_from(l: i64) -> Result<Self> {
        OddPrime::new(l)
    }
}

impl From<OddPrime> for u64 {
    fn from(l: OddPrime) -> u64 {
        l.0
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes_and_two() {
        assert_eq!(OddPrime::new(2), Err(Error::EvenPrime));
        assert_eq!(OddPrime::new(4), Err(Error::NotPrime(4)));
        assert_eq!(OddPrime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(OddPrime::new(-7), Err(Error::NotPrime(-7)));
        assert_eq!(OddPrime::new(9), Err(Error::NotPrime(9)));
        assert!(OddPrime::new(3).is_ok());
        assert!(OddPrime::new(47).is_ok());
    }

    #[test]
    fn prime_range() {
        let ls: Vec<u64> = OddPrime::range(1, 31)
            .into_iter()
            .map(OddPrime::get)
            .collect();
        assert_eq!(ls, vec![3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
        assert!(OddPrime::range(24, 28).is_empty());
    }

    #[test]
    fn modulus_overflow_is_reported() {
        let l = OddPrime::new(7).unwrap();
        assert_eq!(l.modulus(3), Ok(342));
        assert_eq!(l.modulus(0), Err(Error::ZeroNiveau));
        assert!(matches!(l.modulus(40), Err(Error::ModulusOverflow { .. })));
    }
}
