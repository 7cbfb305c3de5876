//! The explicit weight set, at the level of inertia.
//!
//! For a weight `a`, a permutation `σ` and an ordered composition
//! `n = n_1 + ... + n_r`, the tuple `c_j = a_{σ(j)} + n - σ(j)` is cut into
//! consecutive chunks of sizes `n_i`; chunk `(c_0, ..., c_{m-1})` contributes
//! `Ind ω_m^{-(c_0 + l c_1 + ... + l^{m-1} c_{m-1})}` twisted by an unramified
//! character. The twist is invisible on inertia, so membership of `a` in the
//! inertial explicit set of `τ` is a finite search over `(σ, composition)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::OddPrime;
use crate::tame::{frobenius_orbit, CharExponent, TameInertialType};
use crate::weights::{check_global_duality, enumerate_weights, GlobalWeight, LocalWeight};

/// A permutation of `0..n`, as the image list `[σ(0), ..., σ(n-1)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::BadPermutation(n, images));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// All `n!` permutations in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation(current.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

/// An ordered composition of `n` into positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::BadComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// All `2^{n-1}` compositions of `n`.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return Vec::new();
        }
        // bit i of the mask set = cut after position i
        (0u64..1 << (n - 1))
            .map(|mask| {
                let mut parts = Vec::new();
                let mut run = 1;
                for i in 0..n - 1 {
                    if mask >> i & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                Composition(parts)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedExponentTuple(pub Vec<i64>);

/// `c_j = a_{σ(j)} + n - σ(j)` (one-based indices).
pub fn shifted_exponents(a: &LocalWeight, sigma: &Permutation) -> Result<ShiftedExponentTuple> {
    let n = a.rank();
    if sigma.0.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: sigma.0.len(),
        });
    }
    let e = a.entries();
    Ok(ShiftedExponentTuple(
        sigma.0.iter().map(|&s| e[s] + (n - 1 - s) as i64).collect(),
    ))
}

/// `-(c_0 + l c_1 + ... + l^{m-1} c_{m-1})` for each chunk.
fn chunk_exponents(
    l: OddPrime,
    comp: &Composition,
    c: &ShiftedExponentTuple,
) -> Result<Vec<(u32, i128)>> {
    if comp.total() != c.0.len() {
        return Err(Error::RankMismatch {
            expected: comp.total(),
            found: c.0.len(),
        });
    }
    let lp = l.get() as i128;
    let mut rest = c.0.as_slice();
    let mut out = Vec::with_capacity(comp.0.len());
    for &m in &comp.0 {
        let (chunk, tail) = rest.split_at(m);
        rest = tail;
        let value = chunk
            .iter()
            .rev()
            .fold(0i128, |acc, &x| acc * lp + x as i128);
        out.push((m as u32, -value));
    }
    Ok(out)
}

/// Restriction to inertia of `⊕_i nr_{λ_i} ⊗ Ind ω_{n_i}^{e_i}`.
pub fn rho_bar_inertial(
    l: OddPrime,
    comp: &Composition,
    c: &ShiftedExponentTuple,
) -> Result<TameInertialType> {
    crate::tame::canonicalize(l, &chunk_exponents(l, comp, c)?)
}

fn check_type(l: OddPrime, tau: &TameInertialType, a: &LocalWeight) -> Result<()> {
    if tau.l() != l {
        return Err(Error::PrimeMismatch(l.get(), tau.l().get()));
    }
    if tau.dimension() != a.rank() {
        return Err(Error::RankMismatch {
            expected: a.rank(),
            found: tau.dimension(),
        });
    }
    Ok(())
}

/// Whether `a` lies in the inertial explicit weight set of `tau`.
#[allow(non_snake_case)]
pub fn w_explicit_I_contains(l: OddPrime, tau: &TameInertialType, a: &LocalWeight) -> Result<bool> {
    check_type(l, tau, a)?;
    let n = a.rank();
    for sigma in Permutation::all(n) {
        let c = shifted_exponents(a, &sigma)?;
        for comp in Composition::all(n) {
            if &rho_bar_inertial(l, &comp, &c)? == tau {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Canonical weights of rank `n` in the inertial explicit set of `tau`.
#[allow(non_snake_case)]
pub fn w_explicit_I(l: OddPrime, n: usize, tau: &TameInertialType) -> Result<Vec<LocalWeight>> {
    if tau.l() != l {
        return Err(Error::PrimeMismatch(l.get(), tau.l().get()));
    }
    if tau.dimension() != n {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for a in enumerate_weights(l, n) {
        if w_explicit_I_contains(l, tau, &a)? {
            out.push(a);
        }
    }
    Ok(out)
}

/// A set of canonical inertial types, serialized as a sorted array.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CandidateSet(BTreeSet<TameInertialType>);

impl CandidateSet {
    pub fn insert(&mut self, t: TameInertialType) -> bool {
        self.0.insert(t)
    }

    pub fn contains(&self, t: &TameInertialType) -> bool {
        self.0.contains(t)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &TameInertialType> {
        self.0.iter()
    }

    pub fn intersection<'a>(
        &'a self,
        other: &'a CandidateSet,
    ) -> impl Iterator<Item = &'a TameInertialType> {
        self.0.intersection(&other.0)
    }
}

impl FromIterator<TameInertialType> for CandidateSet {
    fn from_iter<I: IntoIterator<Item = TameInertialType>>(iter: I) -> Self {
        CandidateSet(iter.into_iter().collect())
    }
}

/// Every restriction to inertia for which `a` is an explicit weight.
pub fn inertial_candidates(l: OddPrime, a: &LocalWeight) -> CandidateSet {
    let n = a.rank();
    let comps = Composition::all(n);
    let mut out = CandidateSet::default();
    for sigma in Permutation::all(n) {
        let c = shifted_exponents(a, &sigma).expect("permutation has rank n");
        for comp in &comps {
            out.insert(rho_bar_inertial(l, comp, &c).expect("composition of n"));
        }
    }
    out
}

/// Global membership: every supplied place passes the local inertial test.
///
/// Only residue degree one (one weight per place) is supported.
pub fn w_explicit_global_contains(
    l: OddPrime,
    types: &BTreeMap<String, TameInertialType>,
    g: &GlobalWeight,
) -> Result<bool> {
    if !check_global_duality(g)? {
        return Err(Error::DualityViolation);
    }
    for (label, place) in &g.places {
        let tau = types
            .get(label)
            .ok_or_else(|| Error::MissingPlace(label.clone()))?;
        let [a] = place.family.as_slice() else {
            return Err(Error::ResidueDegreeUnsupported(place.family.len() as u32));
        };
        if !w_explicit_I_contains(l, tau, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A semisimple representation of the full decomposition group, recorded as
/// Frobenius orbits of exponents, each carrying the opaque label of its
/// unramified twist. Labels are compared by equality only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledFullType {
    l: OddPrime,
    pieces: Vec<(CharExponent, String)>,
}

impl LabeledFullType {
    /// `⊕_i nr_{λ_i} ⊗ Ind ω_{n_i}^{e_i}` with `λ_i = labels[i]`.
    pub fn new(
        l: OddPrime,
        comp: &Composition,
        labels: &[String],
        c: &ShiftedExponentTuple,
    ) -> Result<Self> {
        if labels.len() != comp.0.len() {
            return Err(Error::RankMismatch {
                expected: comp.0.len(),
                found: labels.len(),
            });
        }
        let mut pieces = Vec::with_capacity(labels.len());
        for ((m, e), label) in chunk_exponents(l, comp, c)?.into_iter().zip(labels) {
            let smallest = *frobenius_orbit(l, m, e)?.first().expect("non-empty");
            pieces.push((
                CharExponent {
                    niveau: m,
                    exponent: smallest,
                },
                label.clone(),
            ));
        }
        pieces.sort();
        Ok(LabeledFullType { l, pieces })
    }

    pub fn pieces(&self) -> &[(CharExponent, String)] {
        &self.pieces
    }

    pub fn restrict_to_inertia(&self) -> TameInertialType {
        let raw: Vec<(u32, i128)> = self
            .pieces
            .iter()
            .map(|(p, _)| (p.niveau, p.exponent as i128))
            .collect();
        crate::tame::canonicalize(self.l, &raw).expect("moduli already validated")
    }
}
