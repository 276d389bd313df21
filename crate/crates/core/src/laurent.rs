//! The algebra `L = K[f, f^-1, g]` in which chain elements and relations
//! are written, with its monomial order and the gap function.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};
use crate::unipoly::{write_term, Degree};

/// `f^fexp * g^gexp`. The derived order compares `gexp` first and then
/// `fexp`, which is the monomial order used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub gexp: u32,
    pub fexp: i64,
}

impl Monomial {
    pub fn new(fexp: i64, gexp: u32) -> Self {
        Monomial { gexp, fexp }
    }

    pub fn one() -> Self {
        Monomial { gexp: 0, fexp: 0 }
    }

    pub fn is_negative(&self) -> bool {
        self.fexp < 0
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            gexp: self.gexp + other.gexp,
            fexp: self.fexp + other.fexp,
        }
    }

    /// `self / other` as a formal monomial ratio.
    pub fn ratio(self, other: Monomial) -> MonomialRatio {
        MonomialRatio {
            dg: self.gexp as i64 - other.gexp as i64,
            df: self.fexp - other.fexp,
        }
    }

    fn render(&self) -> String {
        let f = match self.fexp {
            0 => None,
            1 => Some("f".to_string()),
            e => Some(format!("f^{e}")),
        };
        let g = match self.gexp {
            0 => None,
            1 => Some("g".to_string()),
            e => Some(format!("g^{e}")),
        };
        match (f, g) {
            (None, None) => String::new(),
            (Some(f), None) => f,
            (None, Some(g)) => g,
            (Some(f), Some(g)) => format!("{f}*{g}"),
        }
    }
}

/// A monomial with possibly negative `g` exponent, ordered like [`Monomial`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialRatio {
    pub dg: i64,
    pub df: i64,
}

impl MonomialRatio {
    pub fn pow(self, k: i64) -> MonomialRatio {
        MonomialRatio {
            dg: self.dg * k,
            df: self.df * k,
        }
    }
}

/// `Infinite` exceeds every finite ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gap {
    Finite(MonomialRatio),
    Infinite,
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gap::Infinite => write!(f, "inf"),
            Gap::Finite(r) => match (r.df, r.dg) {
                (0, 0) => write!(f, "1"),
                (df, 0) => write!(f, "f^{df}"),
                (0, dg) => write!(f, "g^{dg}"),
                (df, dg) => write!(f, "f^{df}*g^{dg}"),
            },
        }
    }
}

/// Finitely supported element of `K[f, f^-1, g]`. No zero coefficients
/// are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent2 {
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Laurent2 {
    pub fn zero(field: FieldSpec) -> Self {
        Laurent2 {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::term(field.one(), Monomial::one())
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut l = Self::zero(c.field());
        if !c.is_zero() {
            l.terms.insert(m, c);
        }
        l
    }

    /// The variable `f`.
    pub fn f(field: FieldSpec) -> Self {
        Self::term(field.one(), Monomial::new(1, 0))
    }

    /// The variable `g`.
    pub fn g(field: FieldSpec) -> Self {
        Self::term(field.one(), Monomial::new(0, 1))
    }

    pub fn from_terms(
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut l = Self::zero(field);
        for (m, c) in terms {
            l.add_term(m, &c);
        }
        l
    }

    /// Integer coefficients given as `(fexp, gexp, coeff)`.
    pub fn from_i64_terms(field: FieldSpec, terms: &[(i64, u32, i64)]) -> Self {
        Self::from_terms(
            field,
            terms
                .iter()
                .map(|&(fe, ge, c)| (Monomial::new(fe, ge), field.from_i64(c))),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Scalar {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn deg_g(&self) -> Degree {
        match self.terms.keys().next_back() {
            None => Degree::NegInfinity,
            Some(m) => Degree::Finite(m.gexp as i64),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = &*existing + c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check(&self, other: &Laurent2) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn try_add(&self, other: &Laurent2) -> Result<Laurent2> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Laurent2) -> Result<Laurent2> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Laurent2) -> Result<Laurent2> {
        self.check(other)?;
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.entry(ma.mul(*mb))
                    .or_insert_with(|| self.field.zero())
                    .add_mul_assign(ca, cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Laurent2 {
            field: self.field,
            terms: acc,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Laurent2 {
        if c.is_zero() {
            return Laurent2::zero(self.field);
        }
        Laurent2 {
            field: self.field,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Scalar, m: Monomial) -> Laurent2 {
        if c.is_zero() {
            return Laurent2::zero(self.field);
        }
        Laurent2 {
            field: self.field,
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Laurent2 {
        let mut acc = Laurent2::one(self.field);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn largest_monomial(&self) -> Result<Monomial> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::ZeroElement)
    }

    /// Largest monomial with a negative `f` exponent, if any.
    pub fn largest_negative_monomial(&self) -> Option<Monomial> {
        self.terms.keys().rev().find(|m| m.is_negative()).copied()
    }

    /// Largest monomial divided by largest negative monomial; `Infinite`
    /// when there is no negative monomial.
    pub fn gap(&self) -> Result<Gap> {
        let top = self.largest_monomial()?;
        Ok(match self.largest_negative_monomial() {
            None => Gap::Infinite,
            Some(neg) => Gap::Finite(top.ratio(neg)),
        })
    }

    /// True iff every `f` exponent is non-negative. Zero is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.fexp >= 0)
    }

    /// Coefficient of the top power of `g`, as an element of `K[f, f^-1]`
    /// keyed by `f` exponent.
    pub fn g_leading_coefficient(&self) -> Vec<(i64, Scalar)> {
        let Some(top) = self.terms.keys().next_back().map(|m| m.gexp) else {
            return Vec::new();
        };
        self.terms
            .range(Monomial::new(i64::MIN, top)..)
            .map(|(m, c)| (m.fexp, c.clone()))
            .collect()
    }

    /// Monic in `g`: the top `g` power carries exactly the coefficient 1.
    pub fn is_monic_in_g(&self) -> bool {
        let lc = self.g_leading_coefficient();
        lc.len() == 1 && lc[0].0 == 0 && lc[0].1.is_one()
    }

    /// Exchanges the roles of `f` and `g`. Only defined for polynomials.
    pub fn transpose(&self) -> Result<Laurent2> {
        if !self.is_polynomial() {
            return Err(Error::PreconditionFailed(
                "only polynomials in f and g can be transposed".into(),
            ));
        }
        Ok(Laurent2 {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.gexp as i64, m.fexp as u32), c.clone()))
                .collect(),
        })
    }
}

impl Add<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: &Laurent2) -> Laurent2 {
        self.try_add(rhs).expect("laurent field mismatch")
    }
}

impl Sub<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: &Laurent2) -> Laurent2 {
        self.try_sub(rhs).expect("laurent field mismatch")
    }
}

impl Mul<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        self.try_mul(rhs).expect("laurent field mismatch")
    }
}

impl Neg for &Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        Laurent2 {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Laurent2 {
    /// Renders the terms sorted by `key`, largest first.
    pub fn render_by<K: Ord>(&self, key: impl Fn(&Monomial) -> K) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(key(m)));
        let mut out = String::new();
        for (m, c) in terms {
            let first = out.is_empty();
            write_term(&mut out, first, c, &m.render());
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render() {
            r if r.is_empty() => f.write_str("1"),
            r => f.write_str(&r),
        }
    }
}

impl fmt::Display for Laurent2 {
    /// Terms in descending monomial order, e.g. `g^2 - f^3 - f^-1*g`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_by(|m| *m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(terms: &[(i64, u32, i64)]) -> Laurent2 {
        Laurent2::from_i64_terms(FieldSpec::rationals(), terms)
    }

    fn f2(terms: &[(i64, u32, i64)]) -> Laurent2 {
        Laurent2::from_i64_terms(FieldSpec::prime(2).unwrap(), terms)
    }

    #[test]
    fn ring_examples() {
        let h = q(&[(0, 2, 1), (3, 0, -1)]);
        assert_eq!(h.pow(2), q(&[(0, 4, 1), (3, 2, -2), (6, 0, 1)]));
        assert_eq!(&q(&[(-1, 1, 1)]) * &q(&[(1, 0, 1)]), q(&[(0, 1, 1)]));
        assert!((&h + &-&h).is_zero());
        assert!(h.try_add(&f2(&[(0, 0, 1)])).is_err());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(q(&[(0, 1, 1)]).pow(3), q(&[(0, 3, 1)]));
        let h = f2(&[(0, 2, 1), (3, 0, 1), (-1, 1, 1)]);
        assert_eq!(h.pow(2), f2(&[(0, 4, 1), (6, 0, 1), (-2, 2, 1)]));
        assert_eq!(h.pow(1), h);
        assert_eq!(h.pow(0), Laurent2::one(h.field()));
    }

    #[test]
    fn largest_monomial_examples() {
        let p = q(&[(0, 4, 1), (3, 2, -2), (6, 0, 1), (2, 1, -4), (1, 0, -1)]);
        assert_eq!(p.largest_monomial().unwrap(), Monomial::new(0, 4));
        assert_eq!(
            q(&[(6, 0, 1), (1, 0, -1)]).largest_monomial().unwrap(),
            Monomial::new(6, 0)
        );
        assert_eq!(
            q(&[(-1, 1, 1), (5, 0, 1)]).largest_monomial().unwrap(),
            Monomial::new(-1, 1)
        );
        assert_eq!(q(&[]).largest_monomial(), Err(Error::ZeroElement));
    }

    #[test]
    fn gap_examples() {
        assert_eq!(q(&[(0, 2, 1), (3, 0, -1)]).gap().unwrap(), Gap::Infinite);
        assert_eq!(
            q(&[(-1, 1, 1)]).gap().unwrap(),
            Gap::Finite(MonomialRatio { dg: 0, df: 0 })
        );
        let h = f2(&[(0, 2, 1), (3, 0, 1), (-1, 1, 1)]);
        assert_eq!(
            h.gap().unwrap(),
            Gap::Finite(MonomialRatio { dg: 1, df: 1 })
        );
        assert_eq!(h.gap().unwrap().to_string(), "f^1*g^1");
        assert_eq!(q(&[]).gap(), Err(Error::ZeroElement));
        assert!(Gap::Finite(MonomialRatio { dg: 100, df: 100 }) < Gap::Infinite);
    }

    #[test]
    fn polynomiality_examples() {
        assert!(q(&[(0, 4, 1), (3, 2, -2), (6, 0, 1), (2, 1, -4), (1, 0, -1)]).is_polynomial());
        assert!(!f2(&[(0, 2, 1), (3, 0, 1), (-1, 1, 1)]).is_polynomial());
        assert!(q(&[]).is_polynomial());
    }

    #[test]
    fn rendering() {
        let p = q(&[(0, 4, 1), (3, 2, -2), (6, 0, 1), (2, 1, -4), (1, 0, -1)]);
        assert_eq!(p.to_string(), "g^4 - 2*f^3*g^2 - 4*f^2*g + f^6 - f");
        assert_eq!(
            f2(&[(0, 2, 1), (3, 0, 1), (-1, 1, 1)]).to_string(),
            "g^2 + f^-1*g + f^3"
        );
        assert_eq!(q(&[(0, 0, -3)]).to_string(), "-3");
        let weighted = p.render_by(|m| (4 * m.fexp + 6 * m.gexp as i64, m.gexp));
        assert_eq!(weighted, "g^4 - 2*f^3*g^2 + f^6 - 4*f^2*g - f");
        assert_eq!(Monomial::new(-1, 2).to_string(), "f^-1*g^2");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn monic_and_transpose() {
        let p = q(&[(0, 2, 1), (3, 0, -1)]);
        assert!(p.is_monic_in_g());
        let t = p.transpose().unwrap();
        assert_eq!(t, q(&[(2, 0, 1), (0, 3, -1)]));
        assert!(!t.is_monic_in_g());
        assert!(q(&[(-1, 1, 1)]).transpose().is_err());
    }

    fn laurent(field: FieldSpec) -> impl Strategy<Value = Laurent2> {
        prop::collection::vec((-3i64..4, 0u32..4, -3i64..4), 1..6)
            .prop_map(move |t| Laurent2::from_i64_terms(field, &t))
    }

    /// Monic in `g` of g-degree `top`, with lower terms arbitrary.
    fn monic(field: FieldSpec) -> impl Strategy<Value = Laurent2> {
        (
            1u32..4,
            prop::collection::vec((-3i64..4, 0u32..4, -3i64..4), 0..5),
        )
            .prop_map(move |(top, t)| {
                let lower: Vec<_> = t.into_iter().map(|(fe, ge, c)| (fe, ge % top, c)).collect();
                &Laurent2::from_i64_terms(field, &lower)
                    + &Laurent2::term(field.one(), Monomial::new(0, top))
            })
    }

    proptest! {
        #[test]
        fn gap_of_product(a in laurent(FieldSpec::rationals()), b in laurent(FieldSpec::rationals())) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let ab = &a * &b;
            prop_assert!(ab.gap().unwrap() >= a.gap().unwrap().min(b.gap().unwrap()));
            let fa = &a * &Laurent2::f(a.field());
            prop_assert!(fa.gap().unwrap() >= a.gap().unwrap());
        }

        #[test]
        fn gap_of_power_char0(h in monic(FieldSpec::rationals()), d in 1u64..6) {
            prop_assert_eq!(h.pow(d).gap().unwrap(), h.gap().unwrap());
        }

        #[test]
        fn gap_of_power_char3(h in monic(FieldSpec::prime(3).unwrap()), d in 1u64..10) {
            let mut alpha = 0;
            let mut rest = d;
            while rest % 3 == 0 { rest /= 3; alpha += 1; }
            let expected = match h.gap().unwrap() {
                Gap::Infinite => Gap::Infinite,
                Gap::Finite(r) => Gap::Finite(r.pow(3i64.pow(alpha))),
            };
            prop_assert_eq!(h.pow(d).gap().unwrap(), expected);
            prop_assert!(expected >= h.gap().unwrap());
        }

        #[test]
        fn multiplication_laws(
            a in laurent(FieldSpec::rationals()),
            b in laurent(FieldSpec::rationals()),
            c in laurent(FieldSpec::rationals()),
            e in 0u64..4,
        ) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            let mut iter = Laurent2::one(a.field());
            for _ in 0..e { iter = &iter * &a; }
            prop_assert_eq!(a.pow(e), iter);
        }
    }
}
