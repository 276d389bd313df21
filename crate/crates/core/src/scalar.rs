//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Every [`Scalar`] knows the field it lives in. Arithmetic through the
//! operator traits panics when the two operands belong to different fields;
//! the `try_*` methods report [`Error::FieldMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Kind selector used when building a field from loose parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Rationals,
    Prime(u64),
}

/// A validated coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

/// Moduli are kept below 2^32 so residue products fit in a `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_MODULUS {
            return Err(Error::PreconditionFailed(format!(
                "modulus {p} exceeds {MAX_MODULUS}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(Kind::Prime(p)))
    }

    pub fn make(kind: FieldKind, modulus: Option<u64>) -> Result<Self> {
        match kind {
            FieldKind::Rationals => Ok(Self::rationals()),
            FieldKind::PrimeField => Self::prime(modulus.ok_or(Error::MissingModulus)?),
        }
    }

    pub fn kind(&self) -> FieldKind {
        match self.0 {
            Kind::Rationals => FieldKind::Rationals,
            Kind::Prime(_) => FieldKind::PrimeField,
        }
    }

    /// 0 for the rationals, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) => p,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(v.into()))),
            Kind::Prime(p) => Scalar(Repr::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            }),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(v.clone()))),
            Kind::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar(Repr::Residue {
                    value: r.to_u64().expect("residue below modulus"),
                    modulus: p,
                })
            }
        }
    }

    /// Maps `num/den` into the field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.0 {
            Kind::Rationals => Ok(Scalar(Repr::Rational(BigRational::new(
                num.clone(),
                den.clone(),
            )))),
            Kind::Prime(_) => {
                let d = self.from_bigint(den);
                if d.is_zero() {
                    return Err(Error::CoefficientNotInField(format!("{num}/{den}")));
                }
                Ok(self.from_bigint(num).try_div(&d)?)
            }
        }
    }

    /// Parses `a`, `-a` or `a/b` into the field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Syntax {
            position: 0,
            message: format!("invalid scalar {text:?}"),
        };
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_negative() {
            return Err(bad());
        }
        self.from_ratio(&num, &den)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => write!(f, "q"),
            Kind::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `q` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" {
            return Ok(Self::rationals());
        }
        match s.strip_prefix("fp:") {
            Some("") => Err(Error::MissingModulus),
            Some(p) => {
                let p: u64 = p.parse().map_err(|_| Error::Syntax {
                    position: 3,
                    message: format!("invalid modulus {p:?}"),
                })?;
                Self::prime(p)
            }
            None => Err(Error::Syntax {
                position: 0,
                message: format!("unknown field {s:?}, expected `q` or `fp:<p>`"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An element of a [`FieldSpec`] in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Rational(_) => FieldSpec::rationals(),
            Repr::Residue { modulus, .. } => FieldSpec(Kind::Prime(modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// The rational value, if this is an element of `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r),
            Repr::Residue { .. } => None,
        }
    }

    /// The canonical residue in `[0, p)`, if this is an element of `F_p`.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(*value),
        }
    }

    /// True for negative rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(&self.0, Repr::Rational(r) if r.is_negative())
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(Error::FieldMismatch(a, b))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(r) => Scalar(Repr::Rational(r.recip())),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        })
    }

    pub fn pow(&self, exp: u64) -> Scalar {
        match &self.0 {
            Repr::Rational(r) => {
                let e = i32::try_from(exp).expect("exponent fits in i32");
                Scalar(Repr::Rational(r.pow(e)))
            }
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: pow_mod(*value, exp, *modulus),
                modulus: *modulus,
            }),
        }
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, exp: i64) -> Result<Scalar> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Rational(r) => Scalar(Repr::Rational(-r)),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            }),
        }
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                Scalar(Repr::Residue {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                })
            }
            _ => unreachable!("field checked by caller"),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                Scalar(Repr::Residue {
                    value: a * b % modulus,
                    modulus: *modulus,
                })
            }
            _ => unreachable!("field checked by caller"),
        }
    }

    /// `self += a * b`, the inner loop of every polynomial product.
    pub(crate) fn add_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut self.0, &a.0, &b.0) {
            (Repr::Rational(acc), Repr::Rational(x), Repr::Rational(y)) => {
                *acc += x * y;
            }
            (
                Repr::Residue { value, modulus },
                Repr::Residue { value: x, .. },
                Repr::Residue { value: y, .. },
            ) => {
                *value = (*value + x * y % *modulus) % *modulus;
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.check(rhs).expect("scalar field mismatch");
                self.$inner(rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

impl Scalar {
    fn sub_unchecked(&self, other: &Scalar) -> Scalar {
        self.add_unchecked(&other.neg_ref())
    }
}

forward_binop!(Add, add, add_unchecked);
forward_binop!(Sub, sub, sub_unchecked);
forward_binop!(Mul, mul, mul_unchecked);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
