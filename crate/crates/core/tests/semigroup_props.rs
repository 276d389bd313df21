mod common;

use polydep::engine;
use polydep::semigroup::{
    ams_verdict, contains_degree, enumerate_two_admissible, is_one_admissible, richman_check,
    richman_witness, semigroup_report, span_contains, AdmissibleKind, AdmissibleSequence,
};
use polydep::{Error, FieldSpec};
use proptest::prelude::*;

/// Brute force over all coefficient vectors.
fn reachable_by_enumeration(generators: &[u64], t: u64) -> bool {
    fn go(gens: &[u64], t: u64) -> bool {
        match gens.split_first() {
            None => t == 0,
            Some((&g, rest)) => (0..=t / g).any(|k| go(rest, t - k * g)),
        }
    }
    go(generators, t)
}

proptest! {
    #[test]
    fn membership_matches_enumeration(gens in prop::collection::vec(1u64..=20, 1..=4), t in 1u64..=50) {
        prop_assert_eq!(span_contains(&gens, t), reachable_by_enumeration(&gens, t));
    }

    #[test]
    fn one_admissible_matches_definition(n in 1u64..40, ms in prop::collection::vec(1u64..60, 1..4)) {
        let mut ms = ms;
        ms.sort_unstable_by(|a, b| b.cmp(a));
        ms.dedup();
        let chain = ms.windows(2).all(|w| w[0] % w[1] == 0);
        let ends = n % ms[0] == 0 || ms[0] % n == 0;
        let built = AdmissibleSequence::new(n, ms.clone(), AdmissibleKind::OneAdmissible);
        prop_assert_eq!(built.is_ok(), chain && ends);
        if let Ok(seq) = built {
            prop_assert!(is_one_admissible(&seq));
        }
    }
}

#[test]
fn ams_on_automorphic_pairs() {
    let mut rng = common::rng(31);
    for _ in 0..60 {
        let (f, g) = common::automorphic_pair(&mut rng, 32);
        let v = ams_verdict(&f, &g).unwrap();
        assert!(
            v.generates && v.divisibility == Some(true),
            "f = {f}, g = {g}"
        );
        let (n, m) = (f.deg().unwrap(), g.deg().unwrap());
        assert_eq!(n.max(m) % n.min(m), 0);
    }
}

#[test]
fn richman_invariant_on_random_pairs() {
    let mut rng = common::rng(32);
    let q = FieldSpec::rationals();
    let mut applicable = 0;
    for _ in 0..150 {
        let (f, g) = common::pair(&mut rng, q, 10);
        let r = engine::run(&f, &g, q).unwrap();
        let report = semigroup_report(&r).unwrap();
        let d0 = r.shape().gcd(0);
        match richman_witness(&r) {
            Ok(w) => {
                applicable += 1;
                assert!(contains_degree(&report, d0));
                assert!(w.fexp >= 0, "f = {f}, g = {g}");
                let (n, m0) = (r.shape().n(), r.shape().degree(0) as u64);
                assert_eq!(n.min(m0), d0);
                assert!(richman_check(&r).unwrap());
            }
            Err(Error::PreconditionFailed(_)) => assert!(!contains_degree(&report, d0)),
            Err(e) => panic!("{e}"),
        }
    }
    assert!(applicable > 0);
}

#[test]
fn semigroup_generators_positive_and_ams_consistent() {
    let mut rng = common::rng(33);
    let q = FieldSpec::rationals();
    for _ in 0..60 {
        let (f, g) = common::pair(&mut rng, q, 10);
        let report = semigroup_report(&engine::run(&f, &g, q).unwrap()).unwrap();
        assert!(report.generators.iter().all(|&x| x > 0));
        assert_eq!(report.contains_one, contains_degree(&report, 1));
        assert_eq!(report.ams_divisibility.is_some(), report.contains_one);
    }
}

#[test]
fn two_admissible_structure() {
    for seq in enumerate_two_admissible(200) {
        let ms = seq.ms();
        assert_eq!(*ms.last().unwrap(), 2);
        assert_eq!(seq.n() % 2, 1);
        assert!(ms
            .windows(2)
            .all(|w| w[0] % w[1] == 0 && (w[0] / w[1]) % 2 == 1));
        assert_eq!(seq.n() % (ms[0] / 2), 0);
        assert!(
            AdmissibleSequence::new(seq.n(), ms.to_vec(), AdmissibleKind::TwoAdmissible).is_ok()
        );
        assert!(!is_one_admissible(&seq) || seq.n() % ms[0] == 0 || ms[0] % seq.n() == 0);
    }
}

#[test]
fn char_p_refused() {
    let f5 = FieldSpec::prime(5).unwrap();
    let z = polydep::UniPoly::z(f5);
    assert!(matches!(
        ams_verdict(&z, &z),
        Err(Error::WrongCharacteristic { .. })
    ));
}
