//! Exhaustive weight elimination over ranges of primes.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    case_one_region, companion, in_case_one_region, is_generic, verify_congruence_case, CaseId,
    Gl3Weight,
};
use crate::explicit::inertial_candidates;
use crate::prime::OddPrime;
use crate::tame::TameInertialType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightOutcome {
    /// `a` has a single Jordan–Hölder factor; nothing to eliminate.
    NotApplicable,
    Disjoint,
    /// The smallest inertial type common to both candidate sets.
    Intersects(TameInertialType),
}

/// Compares the candidate inertial types of `a` with those of its companion.
pub fn verify_weight_case(l: OddPrime, a: &Gl3Weight) -> WeightOutcome {
    common_types(l, a).map_or(WeightOutcome::NotApplicable, |common| {
        common
            .into_iter()
            .next()
            .map_or(WeightOutcome::Disjoint, WeightOutcome::Intersects)
    })
}

fn common_types(l: OddPrime, a: &Gl3Weight) -> Option<Vec<TameInertialType>> {
    if !in_case_one_region(l, a) {
        return None;
    }
    let b = companion(l, a).expect("region checked");
    let ours = inertial_candidates(l, a.as_local());
    let theirs = inertial_candidates(l, b.as_local());
    Some(ours.intersection(&theirs).cloned().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightRef {
    pub l: OddPrime,
    pub weight: Gl3Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    /// A weight whose candidate set meets its companion's.
    Weight {
        l: OddPrime,
        weight: Gl3Weight,
        witness: TameInertialType,
    },
    /// A congruence case with a solution in the region, or a reduced form
    /// that disagrees with its raw congruence.
    Case { l: OddPrime, case: CaseId },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub l_range: [u64; 2],
    pub refined: bool,
    /// Canonical weights in the region examined.
    pub examined: usize,
    /// Of those, how many are generic.
    pub generic: usize,
    /// Weights the check makes no claim about, sorted.
    pub skipped: Vec<WeightRef>,
    /// Sorted.
    pub failures: Vec<Failure>,
    pub pass: bool,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

enum Verdict {
    Clean,
    Skipped,
    Failed(TameInertialType),
}

fn judge(l: OddPrime, a: &Gl3Weight, refined: bool) -> Verdict {
    let common = common_types(l, a).expect("region weights only");
    if !refined {
        if !is_generic(l, a, false, None) {
            return Verdict::Skipped;
        }
        return common
            .into_iter()
            .next()
            .map_or(Verdict::Clean, Verdict::Failed);
    }
    // each shared type is judged against the genericity condition for its niveau
    let mut skipped = false;
    for t in common {
        if is_generic(l, a, true, Some(t.niveau())) {
            return Verdict::Failed(t);
        }
        skipped = true;
    }
    if skipped {
        Verdict::Skipped
    } else {
        Verdict::Clean
    }
}

/// Runs the elimination check for every prime in `[l_min, l_max]`.
///
/// Every canonical weight in the case-one region is examined. In standard
/// mode non-generic weights are skipped and generic ones must have disjoint
/// candidate sets. In refined mode every shared type must be explained by the
/// niveau-dependent genericity condition; weights with such a type are
/// skipped. All niveau-3 cases and auxiliary congruences are checked too.
pub fn verify_range(l_min: u64, l_max: u64, refined: bool) -> VerificationReport {
    let start = Instant::now();
    let primes = OddPrime::range(l_min, l_max);
    let work: Vec<(OddPrime, Gl3Weight)> = primes
        .iter()
        .flat_map(|&l| case_one_region(l).map(move |a| (l, a)))
        .collect();
    let verdicts: Vec<Verdict> = work
        .par_iter()
        .map(|(l, a)| judge(*l, a, refined))
        .collect();

    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    let mut generic = 0;
    for ((l, a), verdict) in work.iter().zip(verdicts) {
        if is_generic(*l, a, false, None) {
            generic += 1;
        }
        match verdict {
            Verdict::Clean => {}
            Verdict::Skipped => skipped.push(WeightRef {
                l: *l,
                weight: a.clone(),
            }),
            Verdict::Failed(witness) => failures.push(Failure::Weight {
                l: *l,
                weight: a.clone(),
                witness,
            }),
        }
    }

    let cases: Vec<(OddPrime, CaseId)> = primes
        .iter()
        .flat_map(|&l| {
            CaseId::all_niveau3()
                .chain(CaseId::all_congruences())
                .map(move |c| (l, c))
        })
        .collect();
    failures.extend(
        cases
            .par_iter()
            .filter(|(l, c)| !verify_congruence_case(*l, *c, true))
            .map(|&(l, case)| Failure::Case { l, case })
            .collect::<Vec<_>>(),
    );

    skipped.sort();
    failures.sort();
    VerificationReport {
        l_range: [l_min, l_max],
        refined,
        examined: work.len(),
        generic,
        pass: failures.is_empty(),
        skipped,
        failures,
        wall_time_ms: start.elapsed().as_millis(),
    }
}
