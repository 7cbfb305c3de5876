//! Rank three: Jordan–Hölder factors of `P_a`, genericity, the closed-form
//! list of inertial types for a weight, and the exhaustive check that a
//! generic weight cannot share an inertial type with its companion.

mod cases;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use cases::{
    case_congruence, case_one_region, simplified_form, verify_congruence_case, CaseId, Modulus,
    SimplifiedForm,
};
pub use verify::{
    verify_range, verify_weight_case, Failure, VerificationReport, WeightOutcome, WeightRef,
};

use crate::error::{Error, Result};
use crate::explicit::CandidateSet;
use crate::prime::OddPrime;
use crate::tame::canonicalize;
use crate::weights::LocalWeight;

/// A rank three weight `(a_1, a_2, a_3)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "LocalWeight", into = "LocalWeight")]
pub struct Gl3Weight(LocalWeight);

impl Gl3Weight {
    pub fn new(a1: i64, a2: i64, a3: i64) -> Result<Self> {
        LocalWeight::new(vec![a1, a2, a3]).and_then(Gl3Weight::try_from)
    }

    pub fn a1(&self) -> i64 {
        self.0.entries()[0]
    }

    pub fn a2(&self) -> i64 {
        self.0.entries()[1]
    }

    pub fn a3(&self) -> i64 {
        self.0.entries()[2]
    }

    pub fn as_local(&self) -> &LocalWeight {
        &self.0
    }
}

impl TryFrom<LocalWeight> for Gl3Weight {
    type Error = Error;

    fn try_from(a: LocalWeight) -> Result<Self> {
        if a.rank() != 3 {
            return Err(Error::RankMismatch {
                expected: 3,
                found: a.rank(),
            });
        }
        Ok(Gl3Weight(a))
    }
}

impl From<Gl3Weight> for LocalWeight {
    fn from(a: Gl3Weight) -> LocalWeight {
        a.0
    }
}

impl fmt::Display for Gl3Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a1(), self.a2(), self.a3())
    }
}

fn lp(l: OddPrime) -> i64 {
    l.get() as i64
}

/// `l - 1 <= a_1 - a_3` and `a_1 - a_2, a_2 - a_3 <= l - 2`: the weights for
/// which `P_a` has two Jordan–Hölder factors.
pub fn in_case_one_region(l: OddPrime, a: &Gl3Weight) -> bool {
    let l = lp(l);
    a.a1() - a.a3() >= l - 1 && a.a1() - a.a2() <= l - 2 && a.a2() - a.a3() <= l - 2
}

/// Genericity.
///
/// A weight is non-generic when `a_1 - a_3 = l - 1` with both differences at
/// most `l - 2`, or `a_2 - a_3 = l - 2` with `a_1 - a_2 >= 2`, or
/// `a_1 - a_2 = l - 2` with `a_2 - a_3 >= 2`.
///
/// In refined mode the condition depends on the niveau of the local
/// representation: niveau one only excludes the first configuration, niveau
/// three excludes nothing, and niveau two (or unknown) uses the full test.
pub fn is_generic(l: OddPrime, a: &Gl3Weight, refined: bool, niveau_hint: Option<u32>) -> bool {
    let l = lp(l);
    let (d1, d2) = (a.a1() - a.a2(), a.a2() - a.a3());
    let first = d1 + d2 == l - 1 && d1 <= l - 2 && d2 <= l - 2;
    let second = d2 == l - 2 && d1 >= 2;
    let third = d1 == l - 2 && d2 >= 2;
    match (refined, niveau_hint) {
        (true, Some(1)) => !first,
        (true, Some(3)) => true,
        _ => !(first || second || third),
    }
}

/// `b = (a_3 + l - 2, a_2, a_1 - l + 2)`.
pub fn companion(l: OddPrime, a: &Gl3Weight) -> Result<Gl3Weight> {
    if !in_case_one_region(l, a) {
        return Err(Error::CompanionPrecondition(a.0.entries().to_vec()));
    }
    let l = lp(l);
    Gl3Weight::new(a.a3() + l - 2, a.a2(), a.a1() - l + 2)
}

/// Weights of the Jordan–Hölder factors of `P_a`: `a` itself, followed by
/// the companion when there is one.
pub fn jh_factors(l: OddPrime, a: &Gl3Weight) -> Vec<Gl3Weight> {
    match companion(l, a) {
        Ok(b) => vec![a.clone(), b],
        Err(_) => vec![a.clone()],
    }
}

/// The inertial types for `a`, written out in closed form.
///
/// With `(x, y, z)` ranging over permutations of `(-(a_1+2), -(a_2+1), -a_3)`:
/// `ω^x ⊕ ω^y ⊕ ω^z`; `ω^x ⊕ ω_2^{y+lz} ⊕ ω_2^{ly+z}` when `l+1 ∤ ly+z`; and
/// the niveau-3 orbit of `x + ly + l^2 z` when `l^2+l+1` does not divide it.
/// When `a_1 - a_3 = l - 1` the type `ω^{-(a_1+1)} ⊕ ω^{-(a_2+1)} ⊕ ω^{-(a_3+1)}`
/// is added.
pub fn lemma52_list(l: OddPrime, a: &Gl3Weight) -> CandidateSet {
    let p = l.get() as i128;
    let (a1, a2, a3) = (a.a1() as i128, a.a2() as i128, a.a3() as i128);
    let mut out = CandidateSet::default();
    let ty = |raw: &[(u32, i128)]| canonicalize(l, raw).expect("niveau <= 3 fits");
    if a1 - a3 == p - 1 {
        out.insert(ty(&[(1, -(a1 + 1)), (1, -(a2 + 1)), (1, -(a3 + 1))]));
    }
    let base = [-(a1 + 2), -(a2 + 1), -a3];
    for [i, j, k] in [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ] {
        let (x, y, z) = (base[i], base[j], base[k]);
        out.insert(ty(&[(1, x), (1, y), (1, z)]));
        if (p * y + z) % (p + 1) != 0 {
            out.insert(ty(&[(1, x), (2, y + p * z)]));
        }
        let e3 = x + p * y + p * p * z;
        if e3 % (p * p + p + 1) != 0 {
            out.insert(ty(&[(3, e3)]));
        }
    }
    out
}

/// The eight auxiliary non-congruences used in the elimination argument,
/// in order:
///
/// 1. `a_1 ≢ a_2 (mod l-1)`
/// 2. `a_2 ≢ a_3 (mod l-1)`
/// 3. `a_3 ≢ a_1 + 1 (mod l-1)`
/// 4. `a_1 - a_3 ≢ l - 2 (mod l+1)`
/// 5. `a_1 ≢ a_2 + 1 (mod l-1)`
/// 6. `a_2 ≢ a_3 + 1 (mod l-1)`
/// 7. `a_3 ≢ a_2 + 1 (mod l-1)`
/// 8. `a_2 ≢ a_1 + 1 (mod l-1)`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceFacts {
    pub facts: [bool; 8],
    /// The weight is generic and lies in the case-one region.
    pub precondition: bool,
}

impl CongruenceFacts {
    pub fn all_hold(&self) -> bool {
        self.facts.iter().all(|&f| f)
    }
}

pub fn generic_congruence_facts(l: OddPrime, a: &Gl3Weight) -> CongruenceFacts {
    let p = lp(l);
    let (a1, a2, a3) = (a.a1(), a.a2(), a.a3());
    let ne = |x: i64, y: i64, m: i64| (x - y).rem_euclid(m) != 0;
    CongruenceFacts {
        facts: [
            ne(a1, a2, p - 1),
            ne(a2, a3, p - 1),
            ne(a3, a1 + 1, p - 1),
            ne(a1 - a3, p - 2, p + 1),
            ne(a1, a2 + 1, p - 1),
            ne(a2, a3 + 1, p - 1),
            ne(a3, a2 + 1, p - 1),
            ne(a2, a1 + 1, p - 1),
        ],
        precondition: in_case_one_region(l, a) && is_generic(l, a, false, None),
    }
}
