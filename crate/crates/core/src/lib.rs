//! Exact combinatorics of Serre weights for `GL_n` over `F_l`.
//!
//! The crate is organised bottom-up:
//!
//! * [`prime`] – odd primes and prime ranges.
//! * [`tame`] – powers of fundamental characters of tame inertia, Frobenius
//!   orbits and canonical tame inertial types.
//! * [`weights`] – Serre weights, equivalence, canonical representatives,
//!   Hodge types, lifts and conjugate duality.
//! * [`explicit`] – the inertial explicit weight set and its inverse, the
//!   candidate set of inertial types attached to a weight.
//! * [`gl3`] – the rank three theory: Jordan–Hölder factors, genericity,
//!   the closed-form candidate list and the exhaustive elimination check.
//!
//! All values are immutable and all operations are pure.

pub mod error;
pub mod explicit;
pub mod gl3;
#[cfg(any(test, feature = "oracles"))]
pub mod oracles;
pub mod prime;
pub mod tame;
pub mod weights;

pub use error::{Error, Result};
pub use explicit::{
    inertial_candidates, rho_bar_inertial, shifted_exponents, w_explicit_I, w_explicit_I_contains,
    w_explicit_global_contains, CandidateSet, Composition, LabeledFullType, Permutation,
    ShiftedExponentTuple,
};
pub use gl3::{
    companion, generic_congruence_facts, is_generic, jh_factors, lemma52_list,
    verify_congruence_case, verify_range, verify_weight_case, CaseId, CongruenceFacts, Gl3Weight,
    VerificationReport, WeightOutcome,
};
pub use prime::OddPrime;
pub use tame::{
    canonicalize, decompose_induced, dual_type, frobenius_orbit, twist_cyclotomic, types_equal,
    CharExponent, TameInertialType,
};
pub use weights::{
    canonical_rep, check_global_duality, dual_weight, enumerate_weights, equivalent, hodge_type,
    is_lift, is_serre_weight, GlobalWeight, LocalWeight, Place, ResidueDegree,
};
