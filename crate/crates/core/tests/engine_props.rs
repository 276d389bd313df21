mod common;

use std::collections::BTreeSet;

use polydep::engine::{self, ChainShape, EngineConfig};
use polydep::oracle::substitute;
use polydep::{FieldSpec, UniPoly};
use proptest::prelude::*;

fn check_run(f: &UniPoly, g: &UniPoly, field: FieldSpec) {
    let config = EngineConfig {
        record_residuals: true,
        ..EngineConfig::default()
    };
    let r = engine::run_with(f, g, field, &config).unwrap();
    let ctx = format!("f = {f}, g = {g} over {field}");
    assert!(substitute(&r.relation, f, g).unwrap().is_zero(), "{ctx}");
    assert!(r.relation.is_monic_in_g(), "{ctx}");
    assert!(r.relation.is_polynomial(), "{ctx}");
    assert_eq!(
        r.relation.deg_g().finite().unwrap() as u64 * r.final_gcd(),
        r.n(),
        "{ctx}"
    );
    assert!(r.chain.len() as u64 <= r.shape().n(), "{ctx}");

    assert_eq!(
        &engine::degree_chain(f, g, field).unwrap(),
        r.shape(),
        "{ctx}"
    );
    let (pivot, partner) = (r.pivot(), r.partner());
    for step in &r.chain {
        let image = substitute(&step.symbolic, pivot, partner).unwrap();
        assert_eq!(image, step.image, "{ctx}");
        assert_eq!(image.zdeg().unwrap(), step.degree, "{ctx}");
        let gdeg = step.symbolic.deg_g().finite().unwrap() as u64;
        assert_eq!(gdeg, r.shape().g_degree_of(step.index), "{ctx}");
    }
    for snap in &r.residuals {
        let image = substitute(&snap.symbolic, pivot, partner).unwrap();
        assert_eq!(image, snap.image, "{ctx}: residual at step {}", snap.step);
    }
    for w in r.trace.windows(2) {
        if w[0].step == w[1].step {
            assert!(w[1].degree_before < w[0].degree_before, "{ctx}");
        }
    }
    if field.characteristic() == 0 {
        assert!(r.chain_is_polynomial(), "{ctx}");
    }
    if r.polynomiality_expected() {
        assert!(r.chain_is_polynomial(), "{ctx}");
    }
}

#[test]
fn random_pairs_all_fields() {
    let mut rng = common::rng(11);
    for field in common::fields() {
        for _ in 0..30 {
            let (f, g) = common::pair(&mut rng, field, 8);
            check_run(&f, &g, field);
        }
    }
}

#[test]
fn frozen_nine_six_two() {
    let q = FieldSpec::rationals();
    let f = UniPoly::from_i64s(q, &[0, 6, 0, 0, 0, 6, 0, 0, 0, 1]);
    let g = UniPoly::from_i64s(q, &[0, 0, 4, 0, 0, 0, 1]);
    let r = engine::run(&f, &g, q).unwrap();
    let expected = polydep::Laurent2::from_i64_terms(
        q,
        &[
            (0, 9, 1),
            (0, 7, 24),
            (0, 5, 192),
            (0, 3, 576),
            (0, 1, 576),
            (6, 0, -1),
            (4, 3, 3),
            (4, 1, 24),
            (2, 6, -3),
            (2, 4, -48),
            (2, 2, -192),
            (2, 0, -64),
        ],
    );
    assert_eq!(r.relation, expected);
    assert_eq!(r.m_sequence(), vec![6, 2]);
    assert_eq!(r.chain[1].symbolic.to_string(), "g^3 + 8*g - f^2");
    assert_eq!(
        r.chain[1].image.numerator(),
        &UniPoly::from_i64s(q, &[0, 0, -4])
    );
}

#[test]
fn char_p_polynomial_when_p_misses_gcd() {
    let mut rng = common::rng(12);
    for p in [2u64, 3, 5, 7] {
        let field = FieldSpec::prime(p).unwrap();
        let mut seen = 0;
        while seen < 15 {
            let (f, g) = common::pair(&mut rng, field, 9);
            let (n, m) = (f.deg().unwrap() as u64, g.deg().unwrap() as u64);
            if num_gcd(n, m).is_multiple_of(p) {
                continue;
            }
            seen += 1;
            let r = engine::run(&f, &g, field).unwrap();
            assert!(r.polynomiality_expected());
            assert!(r.chain_is_polynomial(), "f = {f}, g = {g} over {field}");
        }
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// Exhaustive checks on the f-free standard monomials of every prefix.
fn check_standard_monomials(shape: &ChainShape) {
    let n = shape.n() as i64;
    for s in 0..shape.len() {
        let basis = shape.standard_basis(s);
        let ds = shape.gcd(s) as i64;
        let size: u64 = (0..=s).map(|k| shape.exponent(k)).product();
        assert_eq!(basis.len() as u64, size);
        assert_eq!(size as i64, n / ds);

        let residues: BTreeSet<i64> = basis
            .iter()
            .map(|b| shape.monomial_degree(b).rem_euclid(n))
            .collect();
        assert_eq!(residues.len(), basis.len(), "degrees not distinct mod n");
        let multiples: BTreeSet<i64> = (0..n / ds).map(|k| k * ds).collect();
        assert_eq!(residues, multiples);

        let gdegs: BTreeSet<u64> = basis.iter().map(|b| shape.monomial_g_degree(b)).collect();
        let expected: BTreeSet<u64> = (0..size).collect();
        assert_eq!(gdegs, expected, "g-degrees not a bijection");

        for target in (-3 * n..=3 * n).filter(|t| t % ds == 0) {
            let mono = shape.std_monomial_of_degree(s, target).unwrap();
            assert_eq!(shape.monomial_degree(&mono), target);
            assert!(mono
                .gexps
                .iter()
                .zip(0..)
                .all(|(&j, k)| (j as u64) < shape.exponent(k)));
        }
    }
}

#[test]
fn standard_monomials_of_engine_chains() {
    let mut rng = common::rng(13);
    for field in common::fields() {
        for _ in 0..20 {
            let (f, g) = common::pair(&mut rng, field, 12);
            let r = engine::run(&f, &g, field).unwrap();
            check_standard_monomials(r.shape());
        }
    }
}

fn shape_strategy() -> impl Strategy<Value = ChainShape> {
    (2u64..=24, prop::collection::vec(-30i64..=30, 1..=4)).prop_filter_map(
        "valid chain",
        |(n, ms)| {
            let mut d = n;
            let mut kept = Vec::new();
            for m in ms {
                if m == 0 {
                    continue;
                }
                let next = num_gcd(d, m.unsigned_abs());
                if next < d || kept.is_empty() {
                    kept.push(m);
                    d = next;
                }
            }
            if kept.is_empty() {
                return None;
            }
            ChainShape::new(n, kept).ok()
        },
    )
}

proptest! {
    #[test]
    fn standard_monomials_of_random_shapes(shape in shape_strategy()) {
        check_standard_monomials(&shape);
    }

    #[test]
    fn undivisible_degree_rejected(shape in shape_strategy(), t in -60i64..60) {
        let s = shape.len() - 1;
        let ds = shape.gcd(s) as i64;
        prop_assert_eq!(shape.std_monomial_of_degree(s, t).is_ok(), t % ds == 0);
    }
}
