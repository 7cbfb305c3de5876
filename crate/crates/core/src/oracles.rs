//! Reference implementations that share no code path with the library
//! routines they check. Compiled only for tests or with the `oracles`
//! feature.

use crate::prime::OddPrime;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The characters of inertia making up `⊕ Ind ω_m^e`, all written as powers
/// of `ω_M` for `M` the lcm of the niveaux present, sorted.
///
/// A niveau-`m` piece contributes its `m` conjugates
/// `E·l^i mod l^M - 1`, `0 <= i < m`, where `E = e·(l^M-1)/(l^m-1)`.
pub fn conjugate_multiset(l: OddPrime, common_niveau: u32, raw: &[(u32, i128)]) -> Vec<u64> {
    let p = l.get() as u128;
    let big = p.pow(common_niveau) - 1;
    let mut out = Vec::new();
    for &(m, e) in raw {
        assert_eq!(
            common_niveau % m,
            0,
            "niveau {m} does not divide {common_niveau}"
        );
        let small = p.pow(m) - 1;
        let e = e.rem_euclid(small as i128) as u128;
        let mut x = e * (big / small) % big;
        for _ in 0..m {
            out.push(x as u64);
            x = x * p % big;
        }
    }
    out.sort_unstable();
    out
}

/// Whether two raw lists of `(niveau, exponent)` give isomorphic
/// restrictions to inertia.
pub fn isomorphic(l: OddPrime, first: &[(u32, i128)], second: &[(u32, i128)]) -> bool {
    let common = first
        .iter()
        .chain(second)
        .fold(1u32, |acc, &(m, _)| acc / gcd(acc, m) * m);
    conjugate_multiset(l, common, first) == conjugate_multiset(l, common, second)
}

/// `{ e·l^i mod l^m - 1 : 0 <= i < m }` by direct iteration.
pub fn orbit(l: OddPrime, m: u32, e: i128) -> Vec<u64> {
    let modulus = (l.get() as i128).pow(m) - 1;
    let mut out: Vec<u64> = (0..m)
        .map(|i| (e * (l.get() as i128).pow(i)).rem_euclid(modulus) as u64)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Weight equivalence for residue degree one straight from the definition:
/// equal successive differences and `(l-1) | a_n - b_n`.
pub fn equivalent_f1(l: OddPrime, a: &[i64], b: &[i64]) -> bool {
    a.len() == b.len()
        && a.windows(2)
            .zip(b.windows(2))
            .all(|(x, y)| x[0] - x[1] == y[0] - y[1])
        && (a[a.len() - 1] - b[b.len() - 1]) % (l.get() as i64 - 1) == 0
}
