//! Random inputs shared by the integration suites.
#![allow(dead_code)]

use polydep::laurent::{Laurent2, Monomial};
use polydep::scalar::{FieldSpec, Scalar};
use polydep::unipoly::UniPoly;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fields() -> Vec<FieldSpec> {
    let mut out = vec![FieldSpec::rationals()];
    for p in [2, 3, 5, 7] {
        out.push(FieldSpec::prime(p).unwrap());
    }
    out
}

/// Small integer or, over `Q`, occasionally a fraction.
pub fn scalar(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
    let num = rng.gen_range(-5i64..=5);
    if field.characteristic() == 0 && rng.gen_bool(0.2) {
        let den = rng.gen_range(2i64..=4);
        field.from_i64(num).try_div(&field.from_i64(den)).unwrap()
    } else {
        field.from_i64(num)
    }
}

pub fn nonzero_scalar(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
    loop {
        let c = scalar(rng, field);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn poly_of_degree(rng: &mut impl Rng, field: FieldSpec, degree: usize, monic: bool) -> UniPoly {
    let mut coeffs: Vec<Scalar> = (0..degree)
        .map(|_| {
            if rng.gen_bool(0.4) {
                field.zero()
            } else {
                scalar(rng, field)
            }
        })
        .collect();
    coeffs.push(if monic {
        field.one()
    } else {
        nonzero_scalar(rng, field)
    });
    UniPoly::new(field, coeffs)
}

/// Nonconstant pair with degrees in `1..=max_degree`.
pub fn pair(rng: &mut impl Rng, field: FieldSpec, max_degree: usize) -> (UniPoly, UniPoly) {
    let monic = rng.gen_bool(0.5);
    let n = rng.gen_range(1..=max_degree);
    let m = rng.gen_range(1..=max_degree);
    (
        poly_of_degree(rng, field, n, monic),
        poly_of_degree(rng, field, m, monic),
    )
}

/// Pair with `deg f + deg g <= max_total`.
pub fn pair_with_total(
    rng: &mut impl Rng,
    field: FieldSpec,
    max_total: usize,
) -> (UniPoly, UniPoly) {
    let monic = rng.gen_bool(0.5);
    let n = rng.gen_range(1..max_total);
    let m = rng.gen_range(1..=max_total - n);
    (
        poly_of_degree(rng, field, n, monic),
        poly_of_degree(rng, field, m, monic),
    )
}

/// Pair generating `K[z]`: start from `(z, c)` and apply
/// `(u, v) -> (v + r(u), u)` with `deg r` in `1..=4`, keeping degrees at most
/// `max_degree`.
pub fn automorphic_pair(rng: &mut impl Rng, max_degree: usize) -> (UniPoly, UniPoly) {
    let field = FieldSpec::rationals();
    let mut u = UniPoly::z(field);
    let mut v = UniPoly::constant(scalar(rng, field));
    let moves = rng.gen_range(2..=6);
    for _ in 0..moves {
        let du = u.deg().unwrap_or(0).max(1);
        let max_r = (max_degree / du).min(4);
        if max_r == 0 {
            break;
        }
        let dr = rng.gen_range(1..=max_r);
        let expected = (dr * du).max(v.deg().unwrap_or(0));
        // redraw when the top terms of v and r(u) cancel
        let next = loop {
            let r = poly_of_degree(rng, field, dr, false);
            let next = &v + &r.compose(&u);
            if next.deg() == Some(expected) {
                break next;
            }
        };
        v = u;
        u = next;
    }
    if v.deg().unwrap_or(0) == 0 {
        v = &v + &UniPoly::z(field);
    }
    if rng.gen_bool(0.5) {
        (u, v)
    } else {
        (v, u)
    }
}

/// Random element of `K[f, f^-1, g]`.
pub fn laurent(rng: &mut impl Rng, field: FieldSpec) -> Laurent2 {
    let terms = rng.gen_range(1..=5);
    let mut out = Laurent2::zero(field);
    while out.is_zero() {
        out = Laurent2::from_terms(
            field,
            (0..terms).map(|_| {
                (
                    Monomial::new(rng.gen_range(-3i64..=3), rng.gen_range(0u32..=3)),
                    nonzero_scalar(rng, field),
                )
            }),
        );
    }
    out
}

/// Random element with leading `g`-coefficient 1.
pub fn monic_laurent(rng: &mut impl Rng, field: FieldSpec) -> Laurent2 {
    let body = laurent(rng, field);
    let top = match body.deg_g().finite() {
        Some(d) => d as u32 + 1,
        None => 1,
    };
    body.try_add(&Laurent2::term(field.one(), Monomial::new(0, top)))
        .unwrap()
}
