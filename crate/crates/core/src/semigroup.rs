//! Degree semigroups of `K[f, g]` in characteristic 0 and the admissible
//! degree sequences built from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::{self, ChainShape, DependenceResult};
use crate::error::{Error, Result};
use crate::scalar::FieldSpec;
use crate::unipoly::UniPoly;

/// Generators `(n, m_0, ..., m_s)` of the degree semigroup and facts read
/// off from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub generators: Vec<u64>,
    pub contains_one: bool,
    pub min_positive: u64,
    pub ams_applicable: bool,
    /// `n | m_0` or `m_0 | n`; present only when `ams_applicable`.
    pub ams_divisibility: Option<bool>,
}

fn require_char0(field: FieldSpec) -> Result<()> {
    match field.characteristic() {
        0 => Ok(()),
        actual => Err(Error::WrongCharacteristic {
            expected: 0,
            actual,
        }),
    }
}

/// Whether `t` is a non-negative integer combination of `generators`.
pub fn span_contains(generators: &[u64], t: u64) -> bool {
    let t = t as usize;
    let mut reachable = vec![false; t + 1];
    reachable[0] = true;
    for v in 1..=t {
        reachable[v] = generators
            .iter()
            .any(|&g| g >= 1 && g as usize <= v && reachable[v - g as usize]);
    }
    reachable[t]
}

pub fn semigroup_report(result: &DependenceResult) -> Result<SemigroupReport> {
    require_char0(result.field)?;
    report_from_shape(result.shape())
}

/// Report computed from the degrees of a characteristic 0 chain.
pub fn report_from_shape(shape: &ChainShape) -> Result<SemigroupReport> {
    let n = shape.n();
    let mut generators = vec![n];
    for &m in shape.degrees() {
        if m <= 0 {
            return Err(Error::InvariantViolation(format!(
                "non-positive degree {m} in a characteristic 0 chain"
            )));
        }
        generators.push(m as u64);
    }
    let min_positive = *generators.iter().min().expect("nonempty");
    let contains_one = min_positive == 1;
    let m0 = generators[1];
    Ok(SemigroupReport {
        contains_one,
        min_positive,
        ams_applicable: contains_one,
        ams_divisibility: contains_one.then(|| m0 % n == 0 || n.is_multiple_of(m0)),
        generators,
    })
}

pub fn contains_degree(report: &SemigroupReport, t: u64) -> bool {
    span_contains(&report.generators, t)
}

/// `K[f, g] = K[z]` and, when it holds, whether one degree divides the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AmsVerdict {
    pub n: u64,
    pub m: u64,
    pub generates: bool,
    pub divisibility: Option<bool>,
}

impl fmt::Display for AmsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = if self.generates { "yes" } else { "no" };
        write!(f, "K[f,g] = K[z]: {yes_no}")?;
        if let Some(d) = self.divisibility {
            let (lo, hi) = (self.n.min(self.m), self.n.max(self.m));
            let sep = if d { "|" } else { "does not divide" };
            write!(f, "; divisibility: {lo} {sep} {hi}")?;
        }
        Ok(())
    }
}

pub fn ams_verdict(f: &UniPoly, g: &UniPoly) -> Result<AmsVerdict> {
    require_char0(f.field())?;
    let report = report_from_shape(&engine::degree_chain(f, g, f.field())?)?;
    let verdict = AmsVerdict {
        n: f.deg().unwrap_or(0) as u64,
        m: g.deg().unwrap_or(0) as u64,
        generates: report.contains_one,
        divisibility: report.ams_divisibility,
    };
    if verdict.divisibility == Some(false) {
        return Err(Error::InvariantViolation(format!(
            "K[f,g] = K[z] with degrees {:?} not dividing each other",
            &report.generators[..2]
        )));
    }
    Ok(verdict)
}

/// `d_0 = a*m_0 + b*n` with `0 <= a < n/d_0`, the exponents of the unique
/// standard monomial `f^b g^a` of degree `d_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RichmanWitness {
    pub d0: u64,
    pub gexp: u32,
    pub fexp: i64,
}

pub fn richman_witness(result: &DependenceResult) -> Result<RichmanWitness> {
    let report = semigroup_report(result)?;
    let d0 = result.shape().gcd(0);
    if !contains_degree(&report, d0) {
        return Err(Error::PreconditionFailed(format!(
            "d_0 = {d0} is not in the span of {:?}",
            report.generators
        )));
    }
    let mono = result.shape().std_monomial_of_degree(0, d0 as i64)?;
    Ok(RichmanWitness {
        d0,
        gexp: mono.gexps[0],
        fexp: mono.fexp,
    })
}

/// If the degree-`d_0` standard monomial is a polynomial, then `d_0` is
/// `n` or `m_0`.
pub fn richman_check(result: &DependenceResult) -> Result<bool> {
    let w = richman_witness(result)?;
    let n = result.shape().n();
    let m0 = result.shape().degree(0) as u64;
    Ok(w.fexp < 0 || n == w.d0 || m0 == w.d0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdmissibleKind {
    OneAdmissible,
    TwoAdmissible,
}

/// Degree sequence `n; m_0 > ... > m_{t+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AdmissibleSequence {
    n: u64,
    ms: Vec<u64>,
    kind: AdmissibleKind,
}

impl AdmissibleSequence {
    pub fn new(n: u64, ms: Vec<u64>, kind: AdmissibleKind) -> Result<Self> {
        let label = format!("{n}; {ms:?}");
        let invalid = |msg: &str| Err(Error::InvalidSequence(format!("{label}: {msg}")));
        if n == 0 || ms.is_empty() || ms.contains(&0) {
            return invalid("entries must be positive");
        }
        if ms.windows(2).any(|w| w[0] <= w[1]) {
            return invalid("m must strictly decrease");
        }
        let seq = AdmissibleSequence { n, ms, kind };
        match kind {
            AdmissibleKind::OneAdmissible if !is_one_admissible(&seq) => {
                invalid("divisibility chain fails")
            }
            AdmissibleKind::TwoAdmissible if !seq.matches_two_form() => {
                invalid("not of the closed two-admissible form")
            }
            _ => Ok(seq),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn ms(&self) -> &[u64] {
        &self.ms
    }

    pub fn kind(&self) -> AdmissibleKind {
        self.kind
    }

    fn matches_two_form(&self) -> bool {
        let odd_factor = |a: u64, b: u64| a.is_multiple_of(b) && (a / b) % 2 == 1 && a / b >= 3;
        let ms = &self.ms;
        ms.len() >= 2
            && *ms.last().expect("nonempty") == 2
            && ms.windows(2).all(|w| odd_factor(w[0], w[1]))
            && ms[0].is_multiple_of(2)
            && odd_factor(self.n, ms[0] / 2)
    }
}

impl fmt::Display for AdmissibleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.ms.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", self.n, ms.join(", "))
    }
}

/// Every `m_i / m_{i+1}` is an integer and one of `n`, `m_0` divides the other.
pub fn is_one_admissible(seq: &AdmissibleSequence) -> bool {
    let (n, m0) = (seq.n, seq.ms[0]);
    (m0 % n == 0 || n % m0 == 0) && seq.ms.windows(2).all(|w| w[0] % w[1] == 0)
}

/// Odd factors `(2b_t + 1), ..., (2b_{-1} + 1)` with product at most `bound`.
fn odd_factor_lists(bound: u64, out: &mut Vec<Vec<u64>>, prefix: &mut Vec<u64>, product: u64) {
    if prefix.len() >= 2 {
        out.push(prefix.clone());
    }
    let mut factor = 3;
    while product * factor <= bound {
        prefix.push(factor);
        odd_factor_lists(bound, out, prefix, product * factor);
        prefix.pop();
        factor += 2;
    }
}

/// All two-admissible sequences with `n <= max_n`, sorted by `(n, m_0, ...)`.
pub fn enumerate_two_admissible(max_n: u64) -> Vec<AdmissibleSequence> {
    let mut lists = Vec::new();
    odd_factor_lists(max_n, &mut lists, &mut Vec::new(), 1);
    let mut out: Vec<AdmissibleSequence> = lists
        .into_iter()
        .map(|factors| {
            // factors[0] = 2b_t + 1, ..., last = 2b_{-1} + 1
            let n = factors.iter().product();
            let mut ms = vec![2u64];
            for &c in &factors[..factors.len() - 1] {
                ms.push(ms.last().expect("nonempty") * c);
            }
            ms.reverse();
            AdmissibleSequence {
                n,
                ms,
                kind: AdmissibleKind::TwoAdmissible,
            }
        })
        .collect();
    out.sort();
    out.dedup();
    out
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

    fn report(f: &[i64], g: &[i64]) -> SemigroupReport {
        semigroup_report(&engine::run(&poly(f), &poly(g), q()).unwrap()).unwrap()
    }

    #[test]
    fn report_examples() {
        let r = report(&[0, 0, 0, 0, 1], &[0, -1, 0, 0, 0, 0, 1]);
        assert_eq!(r.generators, vec![4, 6, 7]);
        assert!(!r.contains_one);
        assert_eq!(r.min_positive, 4);
        assert_eq!(r.ams_divisibility, None);

        let r = report(&[0, 1, 1], &[0, 1]);
        assert_eq!(r.generators, vec![2, 1]);
        assert!(r.contains_one && r.ams_applicable);
        assert_eq!(r.ams_divisibility, Some(true));

        let r = report(&[0, 6, 0, 0, 0, 6, 0, 0, 0, 1], &[0, 0, 4, 0, 0, 0, 1]);
        assert_eq!(r.generators, vec![9, 6, 2]);
        assert!(!r.contains_one);
        assert_eq!(r.min_positive, 2);
        assert!(!contains_degree(&r, 1));

        let f2 = FieldSpec::prime(2).unwrap();
        let res = engine::run(&UniPoly::z(f2), &UniPoly::z(f2), f2).unwrap();
        assert!(matches!(
            semigroup_report(&res),
            Err(Error::WrongCharacteristic { .. })
        ));
    }

    #[test]
    fn membership_examples() {
        assert!(!span_contains(&[2, 3], 1));
        assert!(span_contains(&[2, 3], 7));
        assert!(!span_contains(&[9, 6, 2], 3));
        assert!(span_contains(&[9, 6, 2], 11));
    }

    #[test]
    fn ams_examples() {
        let v = ams_verdict(&poly(&[0, 0, 1]), &poly(&[0, 0, 0, 1])).unwrap();
        assert_eq!((v.generates, v.divisibility), (false, None));
        let v = ams_verdict(&poly(&[0, 1, 1]), &poly(&[0, 1])).unwrap();
        assert_eq!((v.generates, v.divisibility), (true, Some(true)));
        assert_eq!(v.to_string(), "K[f,g] = K[z]: yes; divisibility: 1 | 2");
        let v = ams_verdict(&poly(&[0, 1]), &poly(&[1, -3, 0, 0, 0, 1])).unwrap();
        assert_eq!((v.generates, v.divisibility), (true, Some(true)));
    }

    #[test]
    fn richman_examples() {
        let run = |f: &[i64], g: &[i64]| engine::run(&poly(f), &poly(g), q()).unwrap();
        assert!(richman_check(&run(&[0, 0, 1], &[0, 1, 0, 0, 1])).unwrap());
        let w = richman_witness(&run(&[0, 0, 1], &[0, 1, 0, 0, 1])).unwrap();
        assert_eq!((w.d0, w.gexp, w.fexp), (2, 0, 1));
        let r = run(&[1, 0, 0, 2, 0, 0, 1], &[0, 0, 0, 1]);
        assert!(richman_check(&r).unwrap());
        let w = richman_witness(&r).unwrap();
        assert_eq!((w.d0, w.gexp, w.fexp), (3, 1, 0));
        assert!(matches!(
            richman_check(&run(&[0, 0, 0, 0, 1], &[0, -1, 0, 0, 0, 0, 1])),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn two_admissible_examples() {
        let seq = |n, ms: &[u64]| {
            AdmissibleSequence::new(n, ms.to_vec(), AdmissibleKind::TwoAdmissible).unwrap()
        };
        assert!(enumerate_two_admissible(8).is_empty());
        assert_eq!(enumerate_two_admissible(9), vec![seq(9, &[6, 2])]);
        let up_to_15 = enumerate_two_admissible(15);
        assert!(up_to_15.contains(&seq(15, &[6, 2])));
        assert!(up_to_15.contains(&seq(15, &[10, 2])));
        assert_eq!(up_to_15.len(), 3);
        assert!(enumerate_two_admissible(30).contains(&seq(27, &[18, 6, 2])));
        assert!(AdmissibleSequence::new(9, vec![4, 2], AdmissibleKind::TwoAdmissible).is_err());
        assert!(AdmissibleSequence::new(9, vec![2, 6], AdmissibleKind::TwoAdmissible).is_err());
    }

    #[test]
    fn one_admissible_examples() {
        let raw = |n, ms: &[u64]| AdmissibleSequence {
            n,
            ms: ms.to_vec(),
            kind: AdmissibleKind::OneAdmissible,
        };
        assert!(!is_one_admissible(&raw(4, &[6, 3, 1])));
        assert!(is_one_admissible(&raw(4, &[12, 6, 3, 1])));
        assert!(!is_one_admissible(&raw(9, &[6, 2])));
        assert!(AdmissibleSequence::new(4, vec![6, 3, 1], AdmissibleKind::OneAdmissible).is_err());
        assert_eq!(raw(9, &[6, 2]).to_string(), "(9; 6, 2)");
    }
}
