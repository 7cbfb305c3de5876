//! The niveau-3 congruences of the elimination argument.
//!
//! At niveau three the inertial types for `a` are the orbits of
//! `A_{i} + l A_{j} + l^2 A_{k}` with `A = (a_1+2, a_2+1, a_3)`, and those for
//! the companion `b` are the orbits of the same expression in
//! `B = (a_1-l+2, a_2+1, a_3+l)`. Up to cyclic rotation there are two
//! orderings on each side, and matching one fixed representative on the `a`
//! side against the three Frobenius conjugates of each `b` orbit gives twelve
//! congruences modulo `l^3 - 1`. Each case is stored as the raw pair of slot
//! orderings; the reduced congruence is stored separately and checked against
//! it rather than trusted.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{generic_congruence_facts, is_generic, Gl3Weight};
use crate::error::{Error, Result};
use crate::prime::OddPrime;

/// A niveau-3 case `1..=12` or one of the auxiliary congruences `C1..=C8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum CaseId {
    Niveau3(u8),
    Congruence(u8),
}

impl CaseId {
    pub fn all_niveau3() -> impl Iterator<Item = CaseId> {
        (1..=12).map(CaseId::Niveau3)
    }

    pub fn all_congruences() -> impl Iterator<Item = CaseId> {
        (1..=8).map(CaseId::Congruence)
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownCase(s.to_string());
        let (congruence, digits) = match s.strip_prefix(['C', 'c']) {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let k: u8 = digits.parse().map_err(|_| bad())?;
        match (congruence, k) {
            (false, 1..=12) => Ok(CaseId::Niveau3(k)),
            (true, 1..=8) => Ok(CaseId::Congruence(k)),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for CaseId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CaseId> for String {
    fn from(c: CaseId) -> String {
        c.to_string()
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::Niveau3(k) => write!(f, "{k}"),
            CaseId::Congruence(k) => write!(f, "C{k}"),
        }
    }
}

/// Slot orderings `(i, j, k)` meaning `S_i + l S_j + l^2 S_k`.
type Slots = [usize; 3];

const A_FIRST: Slots = [0, 1, 2];
const A_SECOND: Slots = [0, 2, 1];
const B_SIDES: [Slots; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn raw_sides(case: u8) -> (Slots, Slots) {
    let idx = (case - 1) as usize;
    let left = if idx < 6 { A_FIRST } else { A_SECOND };
    (left, B_SIDES[idx % 6])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modulus {
    /// `l^2 + l + 1`
    Trinomial,
    /// `l^3 - 1`
    Cube,
}

impl Modulus {
    fn value(self, l: i128) -> i128 {
        match self {
            Modulus::Trinomial => l * l + l + 1,
            Modulus::Cube => l * l * l - 1,
        }
    }
}

/// A reduced congruence `form(l, a) ≡ 0 (mod modulus)`.
#[derive(Debug, Clone, Copy)]
pub struct SimplifiedForm {
    pub modulus: Modulus,
    pub text: &'static str,
    form: fn(i128, i128, i128, i128) -> i128,
}

impl SimplifiedForm {
    pub fn holds(&self, l: i128, a1: i128, a2: i128, a3: i128) -> bool {
        (self.form)(l, a1, a2, a3).rem_euclid(self.modulus.value(l)) == 0
    }
}

fn simplified(case: u8) -> SimplifiedForm {
    use Modulus::*;
    macro_rules! f {
        ($m:expr, $text:expr, |$l:ident, $a1:ident, $a2:ident, $a3:ident| $body:expr) => {{
            #[allow(unused_variables)]
            fn form($l: i128, $a1: i128, $a2: i128, $a3: i128) -> i128 {
                $body
            }
            SimplifiedForm {
                modulus: $m,
                text: $text,
                form,
            }
        }};
    }
    match case {
        1 => f!(Cube, "l^2 - 1 ≡ 0 (mod l^3 - 1)", |l, a1, a2, a3| l * l
            - 1),
        2 => f!(
            Trinomial,
            "a2 - a3 + 2 ≡ 0 (mod l^2 + l + 1)",
            |l, a1, a2, a3| a2 - a3 + 2
        ),
        3 => f!(
            Trinomial,
            "a1 - a2 ≡ l (mod l^2 + l + 1)",
            |l, a1, a2, a3| a1 - a2 - l
        ),
        4 => f!(
            Trinomial,
            "l(a1 - a3 + 3) + (a1 - a2 + 2) ≡ 0 (mod l^2 + l + 1)",
            |l, a1, a2, a3| l * (a1 - a3 + 3) + (a1 - a2 + 2)
        ),
        5 => f!(
            Trinomial,
            "(a1 - a3) + l(a2 - a3) + 2 ≡ 0 (mod l^2 + l + 1)",
            |l, a1, a2, a3| (a1 - a3) + l * (a2 - a3) + 2
        ),
        6 => f!(
            Trinomial,
            "(l + 1)(a1 - a3 + 2) + 1 ≡ 0 (mod l^2 + l + 1)",
            |l, a1, a2, a3| (l + 1) * (a1 - a3 + 2) + 1
        ),
        7 => f!(
            Trinomial,
            "l(a2 - a3 + 1) + 1 ≡ 0 (mod l^2 + l + 1)",
            |l, a1, a2, a3| l * (a2 - a3 + 1) + 1
        ),
        8 => f!(Cube, "l^2 - l ≡ 0 (mod l^3 - 1)", |l, a1, a2, a3| l * l
            - l),
        9 => f!(
            Trinomial,
            "l(a2 - a3 + 2) ≡ a1 - a2 (mod l^2 + l + 1)",
            |l, a1, a2, a3| l * (a2 - a3 + 2) - (a1 - a2)
        ),
        10 => f!(
            Trinomial,
            "a1 - a2 + 2 ≡ 0 (mod l^2 + l + 1)",
            |l, a1, a2, a3| a1 - a2 + 2
        ),
        11 => f!(
            Trinomial,
            "a1 - a3 ≡ l - 2 (mod l^2 + l + 1)",
            |l, a1, a2, a3| a1 - a3 - (l - 2)
        ),
        _ => f!(
            Trinomial,
            "l(a1 - a2 + 1) + a1 - a3 + 3 ≡ 0 (mod l^2 + l + 1)",
            |l, a1, a2, a3| l * (a1 - a2 + 1) + a1 - a3 + 3
        ),
    }
}

/// The reduced congruence recorded for niveau-3 case `case`.
pub fn simplified_form(case: u8) -> Option<SimplifiedForm> {
    (1..=12).contains(&case).then(|| simplified(case))
}

fn weighted(slots: Slots, values: [i128; 3], l: i128) -> i128 {
    values[slots[0]] + l * values[slots[1]] + l * l * values[slots[2]]
}

/// Evaluates niveau-3 case `case` at `a`: whether the raw congruence modulo
/// `l^3 - 1` holds, and whether the reduced congruence holds.
pub fn case_congruence(l: OddPrime, case: u8, a: &Gl3Weight) -> Option<(bool, bool)> {
    let simp = simplified_form(case)?;
    let p = l.get() as i128;
    let (a1, a2, a3) = (a.a1() as i128, a.a2() as i128, a.a3() as i128);
    let from_a = [a1 + 2, a2 + 1, a3];
    let from_b = [a1 - p + 2, a2 + 1, a3 + p];
    let (left, right) = raw_sides(case);
    let diff = weighted(left, from_a, p) - weighted(right, from_b, p);
    let raw = diff.rem_euclid(p * p * p - 1) == 0;
    Some((raw, simp.holds(p, a1, a2, a3)))
}

/// Canonical weights (`a_3 ∈ [0, l-2]`) with
/// `1 <= a_1 - a_2, a_2 - a_3 <= l - 2` and `l - 1 <= a_1 - a_3 <= 2l - 4`.
pub fn case_one_region(l: OddPrime) -> impl Iterator<Item = Gl3Weight> {
    let p = l.get() as i64;
    (0..p - 1).flat_map(move |a3| {
        (1..=p - 2).flat_map(move |d2| {
            (1..=p - 2)
                .filter(move |d1| d1 + d2 >= p - 1)
                .map(move |d1| Gl3Weight::new(a3 + d2 + d1, a3 + d2, a3).expect("decreasing"))
        })
    })
}

/// Checks one case over the whole region.
///
/// For a niveau-3 case: the raw congruence has no solution, and with
/// `check_simplification` the reduced congruence agrees with the raw one at
/// every point. For `C1..C8`: the auxiliary non-congruence holds at every
/// region point (restricted to generic weights for `C5..C8`, which are the
/// ones derived from genericity).
pub fn verify_congruence_case(l: OddPrime, case: CaseId, check_simplification: bool) -> bool {
    match case {
        CaseId::Niveau3(k) => case_one_region(l).all(|a| match case_congruence(l, k, &a) {
            Some((raw, simp)) => !raw && (!check_simplification || raw == simp),
            None => false,
        }),
        CaseId::Congruence(k @ 1..=8) => {
            let idx = (k - 1) as usize;
            case_one_region(l)
                .filter(|a| idx < 4 || is_generic(l, a, false, None))
                .all(|a| generic_congruence_facts(l, &a).facts[idx])
        }
        CaseId::Congruence(_) => false,
    }
}
