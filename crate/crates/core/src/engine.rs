//! Degree-reduction algorithm for the monic irreducible dependence
//! `P(f, g) = 0`.
//!
//! Starting from `g_0 = g`, step `s` raises `g_s` to the power
//! `a_s = d_{s-1} / d_s` and repeatedly cancels the leading term of the
//! residual with the unique `s`-standard monomial of the same z-degree.
//! The step ends either with a residual whose degree is not divisible by
//! `d_s` (the next chain element `g_{s+1}`) or with zero, in which case the
//! accumulated symbolic residual is the relation.
//!
//! Every residual is carried twice: symbolically in `K[f, f^-1, g]` and as
//! a function of `z` in `K[z, f^-1]`. The z-side drives the reduction, the
//! symbolic side records what was subtracted.

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::laurent::{Laurent2, Monomial};
use crate::scalar::{FieldSpec, Scalar};
use crate::unipoly::{FImage, UniPoly};

/// Degree data of a chain: `n = deg f` and `m_0, ..., m_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainShape {
    n: u64,
    degrees: Vec<i64>,
    gcds: Vec<u64>,
}

impl ChainShape {
    /// Fails unless every `m_i` with `i >= 1` is indivisible by `d_{i-1}`.
    pub fn new(n: u64, degrees: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ConstantInput);
        }
        let mut gcds = Vec::with_capacity(degrees.len());
        let mut prev = n;
        for (i, &m) in degrees.iter().enumerate() {
            let d = prev.gcd(&m.unsigned_abs());
            if (i > 0 && d == prev) || m == 0 {
                return Err(Error::PreconditionFailed(format!(
                    "degree m_{i} = {m} is divisible by d_{} = {prev}",
                    i as i64 - 1
                )));
            }
            gcds.push(d);
            prev = d;
        }
        Ok(ChainShape { n, degrees, gcds })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `m_i`.
    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// `d_i`.
    pub fn gcd(&self, i: usize) -> u64 {
        self.gcds[i]
    }

    pub fn gcds(&self) -> &[u64] {
        &self.gcds
    }

    /// `d_{i-1}`, with `d_{-1} = n`.
    pub fn gcd_before(&self, i: usize) -> u64 {
        if i == 0 {
            self.n
        } else {
            self.gcds[i - 1]
        }
    }

    /// `a_i = d_{i-1} / d_i`.
    pub fn exponent(&self, i: usize) -> u64 {
        self.gcd_before(i) / self.gcds[i]
    }

    pub fn exponents(&self) -> Vec<u64> {
        (0..self.len()).map(|i| self.exponent(i)).collect()
    }

    /// `deg_g(g_k) = a_0 ... a_{k-1}`.
    pub fn g_degree_of(&self, k: usize) -> u64 {
        (0..k).map(|i| self.exponent(i)).product()
    }

    /// The unique `s`-standard monomial of z-degree `target`, found by
    /// solving for `j_s`, then `j_{s-1}`, and so on down the chain.
    pub fn std_monomial_of_degree(&self, s: usize, target: i64) -> Result<StdMonomial> {
        let ds = self.gcds[s];
        if target.rem_euclid(ds as i64) != 0 {
            return Err(Error::NotDivisible {
                degree: target,
                divisor: ds,
            });
        }
        let mut rest = target;
        let mut gexps = vec![0u32; s + 1];
        for k in (0..=s).rev() {
            let modulus = self.gcd_before(k) as i64;
            let m = self.degrees[k];
            let j = (0..self.exponent(k))
                .find(|&j| (rest - j as i64 * m).rem_euclid(modulus) == 0)
                .ok_or_else(|| {
                    Error::InvariantViolation(format!(
                        "no exponent for g_{k} reaches degree {target}"
                    ))
                })?;
            gexps[k] = j as u32;
            rest -= j as i64 * m;
        }
        Ok(StdMonomial {
            fexp: rest / self.n as i64,
            gexps,
        })
    }

    /// z-degree `fexp * n + sum j_k m_k`.
    pub fn monomial_degree(&self, mono: &StdMonomial) -> i64 {
        mono.fexp * self.n as i64
            + mono
                .gexps
                .iter()
                .zip(&self.degrees)
                .map(|(&j, &m)| j as i64 * m)
                .sum::<i64>()
    }

    /// g-degree `sum j_k deg_g(g_k)`.
    pub fn monomial_g_degree(&self, mono: &StdMonomial) -> u64 {
        mono.gexps
            .iter()
            .enumerate()
            .map(|(k, &j)| j as u64 * self.g_degree_of(k))
            .sum()
    }

    /// All `f`-free `s`-standard monomials.
    pub fn standard_basis(&self, s: usize) -> Vec<StdMonomial> {
        let mut out = vec![StdMonomial {
            fexp: 0,
            gexps: Vec::new(),
        }];
        for k in 0..=s {
            out = out
                .into_iter()
                .flat_map(|m| {
                    (0..self.exponent(k) as u32).map(move |j| {
                        let mut next = m.clone();
                        next.gexps.push(j);
                        next
                    })
                })
                .collect();
        }
        out
    }
}

/// `f^fexp * g_0^j_0 * ... * g_s^j_s` with `0 <= j_k < a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StdMonomial {
    pub fexp: i64,
    pub gexps: Vec<u32>,
}

impl StdMonomial {
    pub fn is_f_free(&self) -> bool {
        self.fexp == 0
    }
}

/// One element `g_i` of the chain.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainStep {
    pub index: usize,
    /// `g_i` as an element of `K[f, f^-1, g]`.
    pub symbolic: Laurent2,
    /// `g_i(f(z), g(z))`.
    pub image: FImage,
    /// `m_i`, the z-degree of the image.
    pub degree: i64,
    /// `d_i = gcd(n, m_0, ..., m_i)`.
    pub gcd: u64,
    /// `a_i = d_{i-1} / d_i`.
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionEvent {
    pub step: usize,
    pub degree_before: i64,
    pub monomial: StdMonomial,
    pub coefficient: Scalar,
}

/// Residual after a reduction, kept only when requested.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualSnapshot {
    pub step: usize,
    pub symbolic: Laurent2,
    pub image: FImage,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StepOutcome {
    NewChainElement(ChainStep),
    Relation(Laurent2),
}

#[derive(Clone, Debug, Default)]
pub struct EngineConfig {
    /// Overrides the default per-step reduction cap.
    pub max_reductions_per_step: Option<usize>,
    pub record_residuals: bool,
    /// Track only z-images; chain elements and the relation stay zero.
    pub images_only: bool,
}

/// Default cap: `4 (n + |m_0| + 2)(n + 2)` reductions per step. Reaching
/// it means a bug, not a property of the input.
pub fn default_reduction_cap(n: u64, m0: i64) -> usize {
    let n = n as usize;
    4 * (n + m0.unsigned_abs() as usize + 2) * (n + 2)
}

/// Incremental construction of the chain for a fixed pair.
#[derive(Debug)]
pub struct ChainBuilder {
    field: FieldSpec,
    base: Arc<UniPoly>,
    n: u64,
    steps: Vec<ChainStep>,
    shape: ChainShape,
    sym_powers: Vec<Vec<Laurent2>>,
    img_powers: Vec<Vec<FImage>>,
    trace: Vec<ReductionEvent>,
    residuals: Vec<ResidualSnapshot>,
    relation: Option<Laurent2>,
    cap: usize,
    record_residuals: bool,
    symbolic: bool,
}

impl ChainBuilder {
    /// Starts the chain with `g_0 = g`.
    pub fn new(f: &UniPoly, g: &UniPoly, config: &EngineConfig) -> Result<Self> {
        if f.field() != g.field() {
            return Err(Error::FieldMismatch(f.field(), g.field()));
        }
        let n = f.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)? as u64;
        let m0 = g.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)? as i64;
        let field = f.field();
        let base = Arc::new(f.clone());
        let mut builder = ChainBuilder {
            field,
            base: Arc::clone(&base),
            n,
            steps: Vec::new(),
            shape: ChainShape::new(n, Vec::new())?,
            sym_powers: Vec::new(),
            img_powers: Vec::new(),
            trace: Vec::new(),
            residuals: Vec::new(),
            relation: None,
            cap: config
                .max_reductions_per_step
                .unwrap_or_else(|| default_reduction_cap(n, m0)),
            record_residuals: config.record_residuals,
            symbolic: !config.images_only,
        };
        let g0 = if builder.symbolic {
            Laurent2::g(field)
        } else {
            Laurent2::zero(field)
        };
        builder.push_element(g0, FImage::from_poly(g.clone(), base)?)?;
        Ok(builder)
    }

    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    pub fn shape(&self) -> &ChainShape {
        &self.shape
    }

    pub fn trace(&self) -> &[ReductionEvent] {
        &self.trace
    }

    pub fn relation(&self) -> Option<&Laurent2> {
        self.relation.as_ref()
    }

    fn push_element(&mut self, symbolic: Laurent2, image: FImage) -> Result<ChainStep> {
        let degree = image.zdeg()?;
        let mut degrees = self.shape.degrees().to_vec();
        degrees.push(degree);
        self.shape = ChainShape::new(self.n, degrees)?;
        let index = self.steps.len();
        let exponent = self.shape.exponent(index);
        let mut sym = vec![Laurent2::one(self.field)];
        let mut img = vec![FImage::one(Arc::clone(&self.base))];
        for j in 1..exponent as usize {
            if self.symbolic {
                sym.push(&sym[j - 1] * &symbolic);
            }
            img.push(&img[j - 1] * &image);
        }
        self.sym_powers.push(sym);
        self.img_powers.push(img);
        let step = ChainStep {
            index,
            symbolic,
            image,
            degree,
            gcd: self.shape.gcd(index),
            exponent,
        };
        self.steps.push(step.clone());
        Ok(step)
    }

    /// Symbolic form and z-image of a standard monomial.
    pub fn materialize(&self, mono: &StdMonomial) -> (Laurent2, FImage) {
        let mut sym = if self.symbolic {
            Laurent2::term(self.field.one(), Monomial::new(mono.fexp, 0))
        } else {
            Laurent2::zero(self.field)
        };
        let mut img = FImage::base_power(mono.fexp, Arc::clone(&self.base));
        for (k, &j) in mono.gexps.iter().enumerate() {
            if j > 0 {
                if self.symbolic {
                    sym = &sym * &self.sym_powers[k][j as usize];
                }
                img = &img * &self.img_powers[k][j as usize];
            }
        }
        (sym, img)
    }

    /// Leading coefficient of a monomial's image from chain data alone.
    fn monomial_lc(&self, mono: &StdMonomial) -> Result<Scalar> {
        let lf = self.base.leading_coefficient().expect("nonconstant f");
        let mut lc = lf.powi(mono.fexp)?;
        for (k, &j) in mono.gexps.iter().enumerate() {
            lc = &lc * &self.steps[k].image.leading_coefficient()?.pow(j as u64);
        }
        Ok(lc)
    }

    /// Runs step `s` (the last chain element) to completion.
    pub fn reduce_step(&mut self) -> Result<StepOutcome> {
        if self.relation.is_some() {
            return Err(Error::PreconditionFailed(
                "the chain already ended in a relation".into(),
            ));
        }
        let s = self.steps.len() - 1;
        let gs = &self.steps[s];
        let a = gs.exponent as usize;
        let ds = gs.gcd as i64;
        let mut sym = if self.symbolic {
            &self.sym_powers[s][a - 1] * &gs.symbolic
        } else {
            Laurent2::zero(self.field)
        };
        let mut img = &self.img_powers[s][a - 1] * &gs.image;
        if self.record_residuals {
            self.residuals.push(ResidualSnapshot {
                step: s,
                symbolic: sym.clone(),
                image: img.clone(),
            });
        }
        let mut previous: Option<i64> = None;
        let mut count = 0usize;
        loop {
            if img.is_zero() {
                self.relation = Some(sym.clone());
                return Ok(StepOutcome::Relation(sym));
            }
            let degree = img.zdeg()?;
            if previous.is_some_and(|p| degree >= p) {
                return Err(Error::InvariantViolation(format!(
                    "step {s}: degree did not decrease below {}",
                    previous.unwrap_or_default()
                )));
            }
            if degree.rem_euclid(ds) != 0 {
                return self
                    .push_element(sym, img)
                    .map(StepOutcome::NewChainElement);
            }
            if count >= self.cap {
                return Err(Error::IterationCapExceeded {
                    step: s,
                    cap: self.cap,
                });
            }
            let mono = self.shape.std_monomial_of_degree(s, degree)?;
            let (msym, mimg) = self.materialize(&mono);
            let mlc = mimg.leading_coefficient()?;
            if mimg.zdeg()? != degree || mlc != self.monomial_lc(&mono)? {
                return Err(Error::InvariantViolation(format!(
                    "step {s}: standard monomial {mono:?} does not match degree {degree}"
                )));
            }
            let k = img.leading_coefficient()?.try_div(&mlc)?;
            img = &img - &mimg.scale(&k);
            if self.symbolic {
                sym = &sym - &msym.scale(&k);
            }
            self.trace.push(ReductionEvent {
                step: s,
                degree_before: degree,
                monomial: mono,
                coefficient: k,
            });
            if self.record_residuals {
                self.residuals.push(ResidualSnapshot {
                    step: s,
                    symbolic: sym.clone(),
                    image: img.clone(),
                });
            }
            previous = Some(degree);
            count += 1;
        }
    }
}

/// Everything one run produces.
#[derive(Clone, Debug)]
pub struct DependenceResult {
    pub field: FieldSpec,
    /// The inputs in caller order.
    pub f: UniPoly,
    pub g: UniPoly,
    /// True when the chain was built with the roles of `f` and `g` exchanged.
    pub swapped: bool,
    /// Chain elements, written in the roles the chain was built with.
    pub chain: Vec<ChainStep>,
    /// `P` in caller roles: monic in `g`, `P(f, g) = 0`.
    pub relation: Laurent2,
    /// The relation as produced by the chain, before any role exchange.
    pub chain_relation: Laurent2,
    pub trace: Vec<ReductionEvent>,
    pub residuals: Vec<ResidualSnapshot>,
    shape: ChainShape,
}

impl DependenceResult {
    /// `deg f` of the caller's `f`.
    pub fn n(&self) -> u64 {
        self.f.deg().expect("nonconstant") as u64
    }

    pub fn shape(&self) -> &ChainShape {
        &self.shape
    }

    /// Polynomial playing the role of `f` in the chain.
    pub fn pivot(&self) -> &UniPoly {
        if self.swapped {
            &self.g
        } else {
            &self.f
        }
    }

    pub fn partner(&self) -> &UniPoly {
        if self.swapped {
            &self.f
        } else {
            &self.g
        }
    }

    pub fn m_sequence(&self) -> Vec<i64> {
        self.shape.degrees().to_vec()
    }

    pub fn d_sequence(&self) -> Vec<u64> {
        self.shape.gcds().to_vec()
    }

    pub fn a_sequence(&self) -> Vec<u64> {
        self.shape.exponents()
    }

    /// `d_s`, the degree of `K(z)` over `K(f, g)`.
    pub fn final_gcd(&self) -> u64 {
        *self.shape.gcds().last().expect("chain is never empty")
    }

    pub fn chain_is_polynomial(&self) -> bool {
        self.chain.iter().all(|c| c.symbolic.is_polynomial())
    }

    /// True when the chain is guaranteed to stay inside `K[f, g]`: always
    /// in characteristic 0, and in characteristic `p` when `p` does not
    /// divide `d_0 = gcd(n, m)`. Then `g_0` is a polynomial and every later
    /// exponent `a_i` divides `d_0`, so powers do not shrink the gap.
    pub fn polynomiality_expected(&self) -> bool {
        let p = self.field.characteristic();
        p == 0 || !self.shape.gcd(0).is_multiple_of(p)
    }
}

/// Every chain element lies in `K[f, g]`; only meaningful in
/// characteristic 0.
pub fn assert_char0_polynomiality(result: &DependenceResult) -> Result<bool> {
    let p = result.field.characteristic();
    if p != 0 {
        return Err(Error::WrongCharacteristic {
            expected: 0,
            actual: p,
        });
    }
    Ok(result.chain_is_polynomial())
}

/// Exchange roles when `p` divides `deg g` but not `deg f`.
fn should_swap(field: FieldSpec, n: u64, m: u64) -> bool {
    let p = field.characteristic();
    p != 0 && m.is_multiple_of(p) && !n.is_multiple_of(p)
}

/// Degrees of the chain only, without symbolic bookkeeping. Much cheaper
/// than [`run`] when the coefficients grow large.
pub fn degree_chain(f: &UniPoly, g: &UniPoly, field: FieldSpec) -> Result<ChainShape> {
    for p in [f, g] {
        if p.field() != field {
            return Err(Error::FieldMismatch(field, p.field()));
        }
    }
    let n = f.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)? as u64;
    let m = g.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)? as u64;
    let swapped = should_swap(field, n, m);
    let (pivot, partner, pivot_degree) = if swapped { (g, f, m) } else { (f, g, n) };
    let config = EngineConfig {
        images_only: true,
        ..EngineConfig::default()
    };
    let mut builder = ChainBuilder::new(pivot, partner, &config)?;
    while let StepOutcome::NewChainElement(_) = builder.reduce_step()? {
        if builder.steps().len() as u64 > pivot_degree {
            return Err(Error::InvariantViolation(format!(
                "chain longer than {pivot_degree} elements"
            )));
        }
    }
    Ok(builder.shape().clone())
}

pub fn run(f: &UniPoly, g: &UniPoly, field: FieldSpec) -> Result<DependenceResult> {
    run_with(f, g, field, &EngineConfig::default())
}

pub fn run_with(
    f: &UniPoly,
    g: &UniPoly,
    field: FieldSpec,
    config: &EngineConfig,
) -> Result<DependenceResult> {
    if config.images_only {
        return Err(Error::PreconditionFailed(
            "a relation needs symbolic tracking; use degree_chain for degrees only".into(),
        ));
    }
    for p in [f, g] {
        if p.field() != field {
            return Err(Error::FieldMismatch(field, p.field()));
        }
    }
    let n = f.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)? as u64;
    let m = g.deg().filter(|&d| d >= 1).ok_or(Error::ConstantInput)? as u64;
    let swapped = should_swap(field, n, m);
    let (pivot, partner) = if swapped { (g, f) } else { (f, g) };
    let pivot_degree = if swapped { m } else { n };

    let mut builder = ChainBuilder::new(pivot, partner, config)?;
    let chain_relation = loop {
        match builder.reduce_step()? {
            StepOutcome::Relation(p) => break p,
            StepOutcome::NewChainElement(_) => {
                if builder.steps().len() as u64 > pivot_degree {
                    return Err(Error::InvariantViolation(format!(
                        "chain longer than {pivot_degree} elements"
                    )));
                }
            }
        }
    };

    if !chain_relation.is_polynomial() {
        return Err(Error::InvariantViolation(format!(
            "relation has negative powers of f: {chain_relation}"
        )));
    }
    let relation = if swapped {
        normalize_monic(&chain_relation.transpose()?)?
    } else {
        normalize_monic(&chain_relation)?
    };
    let shape = builder.shape().clone();
    let ds = *shape.gcds().last().expect("nonempty chain");
    match relation.deg_g().finite() {
        Some(k) if k as u64 * ds == n => {}
        other => {
            return Err(Error::InvariantViolation(format!(
                "deg_g P = {other:?} but n / d_s = {n} / {ds}"
            )))
        }
    }
    let ChainBuilder {
        steps,
        trace,
        residuals,
        ..
    } = builder;
    Ok(DependenceResult {
        field,
        f: f.clone(),
        g: g.clone(),
        swapped,
        chain: steps,
        relation,
        chain_relation,
        trace,
        residuals,
        shape,
    })
}

/// Divides by the leading `g`-coefficient, which must be a constant.
fn normalize_monic(p: &Laurent2) -> Result<Laurent2> {
    let lc = p.g_leading_coefficient();
    match lc.as_slice() {
        [(0, c)] if c.is_one() => Ok(p.clone()),
        [(0, c)] => Ok(p.scale(&c.inv()?)),
        _ => Err(Error::InvariantViolation(format!(
            "relation is not monic in g up to a constant: {p}"
        ))),
    }
}
