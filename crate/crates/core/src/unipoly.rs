//! Dense polynomials in `K[z]` and the ring `K[z, f(z)^-1]` of fractions
//! whose denominators are powers of one fixed polynomial `f`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Degree of a polynomial or rational function. `NegInfinity` belongs to
/// zero and sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `z^i`.
/// The last stored coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        let mut p = UniPoly { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, power: usize) -> Self {
        let field = c.field();
        if c.is_zero() {
            return Self::zero(field);
        }
        let mut coeffs = vec![field.zero(); power + 1];
        coeffs[power] = c;
        UniPoly { field, coeffs }
    }

    /// The indeterminate `z`.
    pub fn z(field: FieldSpec) -> Self {
        Self::monomial(field.one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            l => Degree::Finite(l as i64 - 1),
        }
    }

    /// Degree as an index; `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    fn check(&self, other: &UniPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn try_add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn try_mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = &*c + s;
        }
        UniPoly::new(self.field, coeffs)
    }

    fn mul_unchecked(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_mul_assign(a, b);
            }
        }
        UniPoly::new(self.field, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut exp: u64) -> UniPoly {
        let mut acc = UniPoly::one(self.field);
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

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check(divisor)?;
        let dd = divisor.deg().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].inv()?;
        let Some(sd) = self.deg().filter(|&sd| sd >= dd) else {
            return Ok((UniPoly::zero(self.field), self.clone()));
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((
            UniPoly::new(self.field, quot),
            UniPoly::new(self.field, rem),
        ))
    }

    /// `self(inner(z))`.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.try_add(rhs).expect("polynomial field mismatch")
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.try_sub(rhs).expect("polynomial field mismatch")
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.try_mul(rhs).expect("polynomial field mismatch")
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Writes `c` times the monomial `var` (already rendered, possibly empty)
/// as a signed term. Shared by the polynomial printers.
pub(crate) fn write_term(out: &mut String, first: bool, c: &Scalar, var: &str) {
    let negative = c.is_negative();
    let magnitude = if negative { -c } else { c.clone() };
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    if var.is_empty() {
        out.push_str(&magnitude.to_string());
    } else if magnitude.is_one() {
        out.push_str(var);
    } else {
        out.push_str(&magnitude.to_string());
        out.push('*');
        out.push_str(var);
    }
}

impl fmt::Display for UniPoly {
    /// Descending powers, e.g. `z^6 - z` or `1/2*z^3 - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let first = out.is_empty();
            write_term(&mut out, first, c, &var);
        }
        f.write_str(&out)
    }
}

/// An element `num / f^fpow` of `K[z, f^-1]`, kept with `f` removed from
/// the numerator as long as a denominator power remains.
#[derive(Clone, Debug)]
pub struct FImage {
    num: UniPoly,
    fpow: u32,
    base: Arc<UniPoly>,
}

impl PartialEq for FImage {
    fn eq(&self, other: &Self) -> bool {
        self.fpow == other.fpow && self.num == other.num && self.same_base(other)
    }
}

impl Eq for FImage {}

impl FImage {
    /// Builds and normalizes `num / base^fpow`.
    pub fn new(num: UniPoly, fpow: u32, base: Arc<UniPoly>) -> Result<Self> {
        if base.deg().unwrap_or(0) < 1 {
            return Err(Error::ConstantInput);
        }
        if num.field() != base.field() {
            return Err(Error::FieldMismatch(num.field(), base.field()));
        }
        let mut img = FImage { num, fpow, base };
        img.normalize();
        Ok(img)
    }

    pub fn from_poly(p: UniPoly, base: Arc<UniPoly>) -> Result<Self> {
        Self::new(p, 0, base)
    }

    pub fn zero(base: Arc<UniPoly>) -> Self {
        FImage {
            num: UniPoly::zero(base.field()),
            fpow: 0,
            base,
        }
    }

    pub fn one(base: Arc<UniPoly>) -> Self {
        FImage {
            num: UniPoly::one(base.field()),
            fpow: 0,
            base,
        }
    }

    /// `f^k` for any integer `k`.
    pub fn base_power(k: i64, base: Arc<UniPoly>) -> Self {
        if k >= 0 {
            FImage {
                num: base.pow(k as u64),
                fpow: 0,
                base,
            }
        } else {
            FImage {
                num: UniPoly::one(base.field()),
                fpow: k.unsigned_abs() as u32,
                base,
            }
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.fpow = 0;
            return;
        }
        while self.fpow > 0 {
            let (q, r) = self
                .num
                .divrem(&self.base)
                .expect("base is a nonconstant polynomial");
            if !r.is_zero() {
                break;
            }
            self.num = q;
            self.fpow -= 1;
        }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn fpow(&self) -> u32 {
        self.fpow
    }

    pub fn base(&self) -> &Arc<UniPoly> {
        &self.base
    }

    pub fn field(&self) -> FieldSpec {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn base_deg(&self) -> i64 {
        self.base.deg().expect("nonconstant base") as i64
    }

    pub fn degree(&self) -> Degree {
        match self.num.degree() {
            Degree::NegInfinity => Degree::NegInfinity,
            Degree::Finite(d) => Degree::Finite(d - self.fpow as i64 * self.base_deg()),
        }
    }

    /// z-degree: numerator degree minus denominator degree.
    pub fn zdeg(&self) -> Result<i64> {
        self.degree().finite().ok_or(Error::ZeroHasNoDegree)
    }

    /// Leading coefficient of the expansion at infinity, i.e.
    /// `lc(num) / lc(f)^fpow`.
    pub fn leading_coefficient(&self) -> Result<Scalar> {
        let lc = self
            .num
            .leading_coefficient()
            .ok_or(Error::ZeroHasNoDegree)?;
        if self.fpow == 0 {
            return Ok(lc.clone());
        }
        let lf = self.base.leading_coefficient().expect("nonconstant base");
        lc.try_div(&lf.pow(self.fpow as u64))
    }

    fn same_base(&self, other: &FImage) -> bool {
        Arc::ptr_eq(&self.base, &other.base) || *self.base == *other.base
    }

    fn check(&self, other: &FImage) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        if !self.same_base(other) {
            return Err(Error::FImageBaseMismatch);
        }
        Ok(())
    }

    /// Numerator raised to the common denominator `f^target`.
    fn lifted(&self, target: u32) -> UniPoly {
        if target == self.fpow {
            self.num.clone()
        } else {
            &self.num * &self.base.pow((target - self.fpow) as u64)
        }
    }

    pub fn try_add(&self, other: &FImage) -> Result<FImage> {
        self.check(other)?;
        let fpow = self.fpow.max(other.fpow);
        let mut img = FImage {
            num: &self.lifted(fpow) + &other.lifted(fpow),
            fpow,
            base: Arc::clone(&self.base),
        };
        img.normalize();
        Ok(img)
    }

    pub fn try_sub(&self, other: &FImage) -> Result<FImage> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &FImage) -> Result<FImage> {
        self.check(other)?;
        let mut img = FImage {
            num: &self.num * &other.num,
            fpow: self.fpow + other.fpow,
            base: Arc::clone(&self.base),
        };
        img.normalize();
        Ok(img)
    }

    pub fn scale(&self, c: &Scalar) -> FImage {
        FImage {
            num: self.num.scale(c),
            fpow: if c.is_zero() { 0 } else { self.fpow },
            base: Arc::clone(&self.base),
        }
    }

    pub fn pow(&self, exp: u64) -> FImage {
        let mut img = FImage {
            num: self.num.pow(exp),
            fpow: self.fpow * exp as u32,
            base: Arc::clone(&self.base),
        };
        img.normalize();
        img
    }
}

impl Add<&FImage> for &FImage {
    type Output = FImage;
    fn add(self, rhs: &FImage) -> FImage {
        self.try_add(rhs).expect("incompatible rational functions")
    }
}

impl Sub<&FImage> for &FImage {
    type Output = FImage;
    fn sub(self, rhs: &FImage) -> FImage {
        self.try_sub(rhs).expect("incompatible rational functions")
    }
}

impl Mul<&FImage> for &FImage {
    type Output = FImage;
    fn mul(self, rhs: &FImage) -> FImage {
        self.try_mul(rhs).expect("incompatible rational functions")
    }
}

impl Neg for &FImage {
    type Output = FImage;
    fn neg(self) -> FImage {
        FImage {
            num: -&self.num,
            fpow: self.fpow,
            base: Arc::clone(&self.base),
        }
    }
}

impl fmt::Display for FImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.fpow {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({}) / f", self.num),
            k => write!(f, "({}) / f^{k}", self.num),
        }
    }
}
