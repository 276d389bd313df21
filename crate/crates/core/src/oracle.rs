//! Checks that do not go through the reduction engine: direct substitution,
//! the Sylvester resultant `Res_z(f(z) - x, g(z) - y)`, and a rank
//! certificate that no dependence of smaller `g`-degree exists.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::engine::DependenceResult;
use crate::error::{Error, Result};
use crate::laurent::{Laurent2, Monomial};
use crate::scalar::{FieldSpec, Scalar};
use crate::unipoly::{write_term, FImage, UniPoly};

/// Oracle routines are meant for `deg f + deg g` up to this bound.
pub const ORACLE_DEGREE_CAP: usize = 40;

/// `x^x * y^y`; ordered by `y` first, then `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiMonomial {
    pub y: u32,
    pub x: u32,
}

impl BiMonomial {
    pub fn new(x: u32, y: u32) -> Self {
        BiMonomial { y, x }
    }

    fn divides(&self, other: &BiMonomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

/// Element of `K[x, y]`; `x` stands for `f` and `y` for `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    field: FieldSpec,
    terms: BTreeMap<BiMonomial, Scalar>,
}

impl BivarPoly {
    pub fn zero(field: FieldSpec) -> Self {
        BivarPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(c: Scalar, x: u32, y: u32) -> Self {
        let mut p = Self::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(BiMonomial::new(x, y), c);
        }
        p
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field.one())
    }

    pub fn x(field: FieldSpec) -> Self {
        Self::term(field.one(), 1, 0)
    }

    pub fn y(field: FieldSpec) -> Self {
        Self::term(field.one(), 0, 1)
    }

    /// Integer coefficients given as `(xexp, yexp, coeff)`.
    pub fn from_i64_terms(field: FieldSpec, terms: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::zero(field);
        for &(x, y, c) in terms {
            p.add_term(BiMonomial::new(x, y), &field.from_i64(c));
        }
        p
    }

    /// Lossless for Laurent elements without negative `f` powers.
    pub fn from_laurent(l: &Laurent2) -> Result<Self> {
        if !l.is_polynomial() {
            return Err(Error::PreconditionFailed(format!(
                "{l} has negative powers of f"
            )));
        }
        let mut p = Self::zero(l.field());
        for (m, c) in l.terms() {
            p.terms
                .insert(BiMonomial::new(m.fexp as u32, m.gexp), c.clone());
        }
        Ok(p)
    }

    pub fn to_laurent(&self) -> Laurent2 {
        Laurent2::from_terms(
            self.field,
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x as i64, m.y), c.clone())),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BiMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: u32, y: u32) -> Scalar {
        self.terms
            .get(&BiMonomial::new(x, y))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    fn leading(&self) -> Option<(&BiMonomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: BiMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = &*e + c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        BivarPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one(self.field);
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

    /// `self / divisor` when the division is exact, `None` otherwise.
    pub fn div_exact(&self, divisor: &BivarPoly) -> Result<Option<BivarPoly>> {
        if self.field != divisor.field {
            return Err(Error::FieldMismatch(self.field, divisor.field));
        }
        let (dm, dc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dc_inv = dc.inv()?;
        let mut rest = self.clone();
        let mut quot = Self::zero(self.field);
        while let Some((rm, rc)) = rest.leading() {
            if !dm.divides(rm) {
                return Ok(None);
            }
            let tm = BiMonomial::new(rm.x - dm.x, rm.y - dm.y);
            let tc = rc * &dc_inv;
            for (m, c) in &divisor.terms {
                rest.add_term(BiMonomial::new(m.x + tm.x, m.y + tm.y), &-(c * &tc));
            }
            quot.add_term(tm, &tc);
        }
        Ok(Some(quot))
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        assert_eq!(self.field, rhs.field, "bivariate field mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        self + &-rhs
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        assert_eq!(self.field, rhs.field, "bivariate field mismatch");
        let mut acc: BTreeMap<BiMonomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                acc.entry(BiMonomial::new(ma.x + mb.x, ma.y + mb.y))
                    .or_insert_with(|| self.field.zero())
                    .add_mul_assign(ca, cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BivarPoly {
            field: self.field,
            terms: acc,
        }
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let var = [("x", m.x), ("y", m.y)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            let first = out.is_empty();
            write_term(&mut out, first, c, &var);
        }
        f.write_str(&out)
    }
}

/// `P(f(z), g(z))` as an element of `K[z, f^-1]`.
pub fn substitute(p: &Laurent2, f: &UniPoly, g: &UniPoly) -> Result<FImage> {
    for q in [f, g] {
        if q.field() != p.field() {
            return Err(Error::FieldMismatch(p.field(), q.field()));
        }
    }
    let base = Arc::new(f.clone());
    let gimg = FImage::from_poly(g.clone(), Arc::clone(&base))?;
    let mut gpowers = vec![FImage::one(Arc::clone(&base))];
    let mut acc = FImage::zero(Arc::clone(&base));
    for (m, c) in p.terms() {
        while gpowers.len() <= m.gexp as usize {
            let next = gpowers.last().expect("nonempty").try_mul(&gimg)?;
            gpowers.push(next);
        }
        let term = FImage::base_power(m.fexp, Arc::clone(&base))
            .try_mul(&gpowers[m.gexp as usize])?
            .scale(c);
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

/// Sylvester matrix of `f(z) - x` and `g(z) - y` with respect to `z`.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> Result<Vec<Vec<BivarPoly>>> {
    let field = f.field();
    if g.field() != field {
        return Err(Error::FieldMismatch(field, g.field()));
    }
    let n = f.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)?;
    let m = g.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)?;
    // coefficient lists from the top power down, constant term shifted by x or y
    let lift = |p: &UniPoly, var: BivarPoly| -> Vec<BivarPoly> {
        let d = p.deg().expect("nonconstant");
        (0..=d)
            .map(|i| {
                let c = BivarPoly::constant(p.coeff(d - i));
                if i == d {
                    &c - &var
                } else {
                    c
                }
            })
            .collect()
    };
    let fc = lift(f, BivarPoly::x(field));
    let gc = lift(g, BivarPoly::y(field));
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, count) in [(&fc, m), (&gc, n)] {
        for shift in 0..count {
            let mut row = vec![BivarPoly::zero(field); size];
            for (j, c) in coeffs.iter().enumerate() {
                row[shift + j] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Fraction-free (Bareiss) elimination; every division is exact.
pub fn determinant_bareiss(matrix: &[Vec<BivarPoly>], field: FieldSpec) -> BivarPoly {
    let size = matrix.len();
    if size == 0 {
        return BivarPoly::one(field);
    }
    let mut a: Vec<Vec<BivarPoly>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = BivarPoly::one(field);
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BivarPoly::zero(field),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("fields agree")
                    .expect("Bareiss division is exact");
            }
            a[i][k] = BivarPoly::zero(field);
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Laplace expansion along the first row. Exponential; for cross-checks on
/// small matrices only.
pub fn determinant_cofactor(matrix: &[Vec<BivarPoly>], field: FieldSpec) -> BivarPoly {
    let size = matrix.len();
    if size == 0 {
        return BivarPoly::one(field);
    }
    if size == 1 {
        return matrix[0][0].clone();
    }
    let mut acc = BivarPoly::zero(field);
    for col in 0..size {
        if matrix[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BivarPoly>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &matrix[0][col] * &determinant_cofactor(&minor, field);
        acc = if col % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// `Res_z(f(z) - x, g(z) - y)`.
pub fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> Result<BivarPoly> {
    let matrix = sylvester_matrix(f, g)?;
    Ok(determinant_bareiss(&matrix, f.field()))
}

/// `R = c * P^d` for some nonzero scalar `c`. Characteristic 0 only.
pub fn check_resultant_power(p: &BivarPoly, r: &BivarPoly, d: u32) -> Result<bool> {
    let ch = p.field().characteristic();
    if ch != 0 {
        return Err(Error::WrongCharacteristic {
            expected: 0,
            actual: ch,
        });
    }
    if p.field() != r.field() {
        return Err(Error::FieldMismatch(p.field(), r.field()));
    }
    let pd = p.pow(d);
    let (Some((pm, pc)), Some((rm, rc))) = (pd.leading(), r.leading()) else {
        return Ok(false);
    };
    if pm != rm {
        return Ok(false);
    }
    let c = rc.try_div(pc)?;
    Ok(pd.scale(&c) == *r)
}

/// `P` divides `R` exactly in `K[x, y]`.
pub fn divides(p: &BivarPoly, r: &BivarPoly) -> Result<bool> {
    Ok(r.div_exact(p)?.is_some())
}

/// Rank of a matrix over its field by Gaussian elimination.
pub fn rank(rows: &[Vec<Scalar>]) -> Result<usize> {
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv()?;
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] * &inv;
            for j in c..cols {
                let t = &factor * &a[r][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    Ok(r)
}

/// Large primes used to certify full rank of a rational matrix: a nonzero
/// minor modulo `p` is nonzero over `Q`.
const CERTIFICATE_PRIMES: [u64; 2] = [4294967291, 2147483647];

fn reduce_poly(p: &UniPoly, modulus: u64) -> Option<Vec<u64>> {
    let fp = FieldSpec::prime(modulus).ok()?;
    p.coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational()?;
            fp.from_ratio(r.numer(), r.denom()).ok()?.as_residue()
        })
        .collect()
}

fn mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y % p) % p;
        }
    }
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Column rank of a matrix given column-wise over `F_p`.
fn column_rank_mod(mut cols: Vec<Vec<u64>>, p: u64) -> usize {
    let height = cols.iter().map(Vec::len).max().unwrap_or(0);
    for c in &mut cols {
        c.resize(height, 0);
    }
    // pivots[row] = index of the reduced column owning that row
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; height];
    let mut rank = 0;
    for mut col in cols {
        for row in 0..height {
            if col[row] == 0 {
                continue;
            }
            match &pivots[row] {
                Some(piv) => {
                    let factor = col[row];
                    for (x, y) in col.iter_mut().zip(piv) {
                        *x = (*x + p - factor * y % p) % p;
                    }
                }
                None => {
                    let inv = inv_mod(col[row], p);
                    for x in col.iter_mut() {
                        *x = *x * inv % p;
                    }
                    pivots[row] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Columns `f^i g^j`, `i <= imax`, `j < k`, built by repeated multiplication.
fn dependence_columns_mod(f: &[u64], g: &[u64], imax: usize, k: u32, p: u64) -> Vec<Vec<u64>> {
    let mut cols = Vec::new();
    let mut gj = vec![1u64];
    for _ in 0..k {
        let mut col = gj.clone();
        for i in 0..=imax {
            if i > 0 {
                col = mul_mod(&col, f, p);
            }
            cols.push(col.clone());
        }
        gj = mul_mod(&gj, g, p);
    }
    cols
}

/// True iff there is no nonzero `sum c_{ij} f^i g^j = 0` with `j < k` and
/// `i <= deg g`.
pub fn minimality_certificate(f: &UniPoly, g: &UniPoly, k: u32) -> Result<bool> {
    let field = f.field();
    if g.field() != field {
        return Err(Error::FieldMismatch(field, g.field()));
    }
    let n = f.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)?;
    let m = g.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)?;
    if k as usize > n * m {
        return Err(Error::PreconditionFailed(format!(
            "k = {k} exceeds deg f * deg g = {}",
            n * m
        )));
    }
    let unknowns = (m + 1) * k as usize;
    if let Some(p) = field.modulus() {
        let residues = |q: &UniPoly| -> Vec<u64> {
            q.coeffs()
                .iter()
                .map(|c| c.as_residue().unwrap_or(0))
                .collect()
        };
        let cols = dependence_columns_mod(&residues(f), &residues(g), m, k, p);
        return Ok(column_rank_mod(cols, p) == unknowns);
    }
    for p in CERTIFICATE_PRIMES {
        if let (Some(fr), Some(gr)) = (reduce_poly(f, p), reduce_poly(g, p)) {
            if column_rank_mod(dependence_columns_mod(&fr, &gr, m, k, p), p) == unknowns {
                return Ok(true);
            }
        }
    }
    let mut columns = Vec::with_capacity(unknowns);
    let mut gj = UniPoly::one(field);
    for _ in 0..k {
        let mut col = gj.clone();
        for i in 0..=m {
            if i > 0 {
                col = &col * f;
            }
            columns.push(col.clone());
        }
        gj = &gj * g;
    }
    let height = columns.iter().filter_map(UniPoly::deg).max().unwrap_or(0) + 1;
    // rows are z-powers, columns are unknowns
    let rows: Vec<Vec<Scalar>> = (0..height)
        .map(|t| columns.iter().map(|c| c.coeff(t)).collect())
        .collect();
    Ok(rank(&rows)? == unknowns)
}

/// Outcome of running every oracle against one engine result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub substitution_vanishes: bool,
    /// `Res = c * P^{d_s}` in characteristic 0, `P | Res` otherwise.
    pub resultant_consistent: bool,
    pub minimal: bool,
}

impl OracleReport {
    pub fn all_pass(&self) -> bool {
        self.substitution_vanishes && self.resultant_consistent && self.minimal
    }
}

pub fn certify(result: &DependenceResult) -> Result<OracleReport> {
    let (f, g) = (&result.f, &result.g);
    let degrees = f.deg().unwrap_or(0) + g.deg().unwrap_or(0);
    if degrees > ORACLE_DEGREE_CAP {
        return Err(Error::PreconditionFailed(format!(
            "deg f + deg g = {degrees} exceeds the oracle cap {ORACLE_DEGREE_CAP}"
        )));
    }
    let substitution_vanishes = substitute(&result.relation, f, g)?.is_zero();
    let p = BivarPoly::from_laurent(&result.relation)?;
    let res = sylvester_resultant(f, g)?;
    let resultant_consistent = if result.field.characteristic() == 0 {
        check_resultant_power(&p, &res, result.final_gcd() as u32)?
    } else {
        divides(&p, &res)?
    };
    let k = result.relation.deg_g().finite().unwrap_or(0) as u32;
    let minimal = minimality_certificate(f, g, k)?;
    Ok(OracleReport {
        substitution_vanishes,
        resultant_consistent,
        minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(q(), c)
    }

    fn bi(t: &[(u32, u32, i64)]) -> BivarPoly {
        BivarPoly::from_i64_terms(q(), t)
    }

    #[test]
    fn substitute_examples() {
        let p = Laurent2::from_i64_terms(
            q(),
            &[(0, 4, 1), (3, 2, -2), (6, 0, 1), (2, 1, -4), (1, 0, -1)],
        );
        assert!(
            substitute(&p, &poly(&[0, 0, 0, 0, 1]), &poly(&[0, -1, 0, 0, 0, 0, 1]))
                .unwrap()
                .is_zero()
        );
        let gf = Laurent2::from_i64_terms(q(), &[(0, 1, 1), (1, 0, -1)]);
        assert!(substitute(&gf, &poly(&[0, 0, 1]), &poly(&[0, 0, 1]))
            .unwrap()
            .is_zero());
        let img = substitute(&Laurent2::g(q()), &poly(&[0, 0, 1]), &poly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(img.numerator(), &poly(&[0, 0, 0, 1]));
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(
            substitute(&Laurent2::g(f2), &poly(&[0, 1]), &poly(&[0, 1])),
            Err(Error::FieldMismatch(_, _))
        ));
    }

    fn proportional(a: &BivarPoly, b: &BivarPoly) -> bool {
        check_resultant_power(a, b, 1).unwrap()
    }

    #[test]
    fn resultant_examples() {
        // (z^2, z^3) -> ±(y^2 - x^3), checked against cofactor expansion too
        let m = sylvester_matrix(&poly(&[0, 0, 1]), &poly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(m.len(), 5);
        let r = determinant_bareiss(&m, q());
        assert_eq!(r, determinant_cofactor(&m, q()));
        assert!(proportional(&bi(&[(0, 2, 1), (3, 0, -1)]), &r));
        // (z^2, z^2) -> ±(y - x)^2
        let r = sylvester_resultant(&poly(&[0, 0, 1]), &poly(&[0, 0, 1])).unwrap();
        assert!(check_resultant_power(&bi(&[(0, 1, 1), (1, 0, -1)]), &r, 2).unwrap());
        // (z, z) -> ±(y - x)
        let r = sylvester_resultant(&poly(&[0, 1]), &poly(&[0, 1])).unwrap();
        assert!(proportional(&bi(&[(0, 1, 1), (1, 0, -1)]), &r));
    }

    #[test]
    fn resultant_power_examples() {
        let cusp = bi(&[(0, 2, 1), (3, 0, -1)]);
        assert!(check_resultant_power(&cusp, &-&cusp, 1).unwrap());
        let line = bi(&[(0, 1, 1), (1, 0, -1)]);
        assert!(check_resultant_power(&line, &line.pow(2), 2).unwrap());
        assert!(!check_resultant_power(&line, &cusp, 1).unwrap());
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(check_resultant_power(&BivarPoly::one(f3), &BivarPoly::one(f3), 1).is_err());
    }

    #[test]
    fn minimality_examples() {
        let (f, g) = (poly(&[0, 0, 1]), poly(&[0, 0, 0, 1]));
        assert!(minimality_certificate(&f, &g, 2).unwrap());
        assert!(!minimality_certificate(&f, &g, 3).unwrap());
        assert!(minimality_certificate(&poly(&[0, 1]), &poly(&[0, 1]), 1).unwrap());
        assert!(!minimality_certificate(&poly(&[0, 1]), &poly(&[0, 1]), 2).is_ok());
    }

    #[test]
    fn division() {
        let a = bi(&[(1, 0, 1), (0, 1, 1)]);
        let b = bi(&[(2, 0, 1), (0, 1, -1)]);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&a).unwrap(), Some(b.clone()));
        assert_eq!((&ab + &BivarPoly::one(q())).div_exact(&a).unwrap(), None);
        assert!(divides(&a, &ab).unwrap());
    }

    #[test]
    fn laurent_conversion() {
        let l = Laurent2::from_i64_terms(q(), &[(0, 2, 1), (3, 0, -1)]);
        let b = BivarPoly::from_laurent(&l).unwrap();
        assert_eq!(b, bi(&[(0, 2, 1), (3, 0, -1)]));
        assert_eq!(b.to_laurent(), l);
        assert!(BivarPoly::from_laurent(&Laurent2::from_i64_terms(q(), &[(-1, 1, 1)])).is_err());
        assert_eq!(b.to_string(), "y^2 - x^3");
    }
}
