use serre_core::gl3::{case_one_region, in_case_one_region};
use serre_core::{
    companion, enumerate_weights, generic_congruence_facts, inertial_candidates, is_generic,
    is_serre_weight, jh_factors, lemma52_list, verify_weight_case, Gl3Weight, OddPrime,
    ResidueDegree, WeightOutcome,
};

fn primes(hi: u64) -> Vec<OddPrime> {
    OddPrime::range(3, hi)
}

#[test]
fn closed_form_list_matches_search_for_small_primes() {
    for l in primes(7) {
        for a in enumerate_weights(l, 3) {
            let a = Gl3Weight::try_from(a).unwrap();
            assert_eq!(
                lemma52_list(l, &a),
                inertial_candidates(l, a.as_local()),
                "l={l} a={a}"
            );
        }
    }
}

#[test]
fn jordan_holder_factors_are_weights() {
    for l in primes(13) {
        for a in enumerate_weights(l, 3) {
            let a = Gl3Weight::try_from(a).unwrap();
            let factors = jh_factors(l, &a);
            for b in &factors {
                assert!(is_serre_weight(
                    l,
                    ResidueDegree::ONE,
                    &[b.as_local().clone()]
                ));
            }
            assert_eq!(factors.len() == 2, in_case_one_region(l, &a));
            if let Ok(b) = companion(l, &a) {
                let span = |w: &Gl3Weight| w.a1() - w.a3();
                assert_eq!(span(&b), 2 * l.get() as i64 - 4 - span(&a));
                assert!(
                    span(&b) <= l.get() as i64 - 3,
                    "companion outside the low range"
                );
            }
        }
    }
}

#[test]
fn auxiliary_congruences_hold_under_their_hypotheses() {
    for l in primes(31) {
        for a in case_one_region(l) {
            let facts = generic_congruence_facts(l, &a);
            // the first four need only the inequalities
            assert!(facts.facts[..4].iter().all(|&f| f), "l={l} a={a}");
            if is_generic(l, &a, false, None) {
                assert!(facts.precondition && facts.all_hold(), "l={l} a={a}");
            }
        }
    }
}

#[test]
fn generic_weights_never_share_a_type_with_their_companion() {
    for l in primes(13) {
        for a in case_one_region(l).filter(|a| is_generic(l, a, false, None)) {
            assert_eq!(
                verify_weight_case(l, &a),
                WeightOutcome::Disjoint,
                "l={l} a={a}"
            );
        }
    }
}

#[test]
fn every_first_clause_weight_meets_its_companion_in_niveau_one() {
    // a_1 - a_3 = l - 1 in the region: the degenerate niveau-2 collapse puts
    // the special niveau-1 type in both candidate sets
    for l in primes(13) {
        for a in case_one_region(l).filter(|a| a.a1() - a.a3() == l.get() as i64 - 1) {
            match verify_weight_case(l, &a) {
                WeightOutcome::Intersects(t) => assert_eq!(t.niveau(), 1),
                other => panic!("l={l} a={a}: {other:?}"),
            }
        }
    }
}
