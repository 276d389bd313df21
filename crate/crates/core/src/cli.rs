//! Command-line front end: polynomial parsing, subcommands, text and JSON
//! reports.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::engine::{self, DependenceResult, EngineConfig, StdMonomial};
use crate::error::{Error, Result};
use crate::laurent::{Laurent2, Monomial};
use crate::oracle::{self, ORACLE_DEGREE_CAP};
use crate::scalar::{FieldSpec, Scalar};
use crate::semigroup::{self, AdmissibleKind, AdmissibleSequence, SemigroupReport};
use crate::unipoly::UniPoly;

pub const SCHEMA_VERSION: &str = "1";

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: usize = 100_000;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "polydep",
    version,
    about = "Algebraic dependence of two univariate polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the irreducible relation P(f, g) = 0 and the degree chain.
    Depend(PairArgs),
    /// Check that the relation vanishes, reading it back from its JSON form.
    Verify(VerifyArgs),
    /// Degree semigroup generated by deg f and the chain degrees.
    Semigroup(PairArgs),
    /// Whether K[f,g] = K[z], and if so whether deg f, deg g divide each other.
    Ams(PairArgs),
    /// The standard monomial of degree gcd(deg f, deg g).
    Richman(PairArgs),
    /// List two-admissible degree sequences, or compare a pair against one.
    Admissible(AdmissibleArgs),
    /// Substitution, resultant and minimality checks.
    Oracle(PairArgs),
    /// Run one command per line of a file ("-" for stdin).
    Batch(BatchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// "q" or "fp:<prime>".
    #[arg(long, default_value = "q")]
    pub field: FieldSpec,
    #[arg(long)]
    pub json: bool,
    /// Include every reduction in the report.
    #[arg(long)]
    pub trace: bool,
    /// Reductions allowed per chain step.
    #[arg(long)]
    pub max_steps: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(allow_hyphen_values = true)]
    pub f: String,
    #[arg(allow_hyphen_values = true)]
    pub g: String,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// JSON report to check instead of computing one ("-" for stdin).
    #[arg(long, conflicts_with_all = ["f", "g"])]
    pub report: Option<PathBuf>,
    #[arg(allow_hyphen_values = true, required_unless_present = "report")]
    pub f: Option<String>,
    #[arg(allow_hyphen_values = true, required_unless_present = "report")]
    pub g: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct AdmissibleArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 30)]
    pub max_n: u64,
    /// Degree sequence "n,m_0,...,m_t" to compare the pair's degrees with.
    #[arg(long, requires = "f")]
    pub target: Option<String>,
    #[arg(allow_hyphen_values = true, requires = "g")]
    pub f: Option<String>,
    #[arg(allow_hyphen_values = true)]
    pub g: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct BatchArgs {
    pub file: PathBuf,
}

/// Parses `[c][*][z[^k]]` terms joined by `+` and `-`; whitespace is ignored.
pub fn parse_polynomial(text: &str, field: FieldSpec) -> Result<UniPoly> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = PolyParser {
        chars,
        pos: 0,
        end: text.len(),
    };
    let mut coeffs: Vec<Scalar> = Vec::new();
    let mut first = true;
    while first || !p.done() {
        let negative = match p.peek() {
            Some('+') => {
                p.pos += 1;
                false
            }
            Some('-') => {
                p.pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(p.error("expected '+' or '-'")),
        };
        first = false;
        let (c, power) = p.term(field)?;
        let c = if negative { -&c } else { c };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, field.zero());
        }
        coeffs[power] = &coeffs[power] + &c;
    }
    Ok(UniPoly::new(field, coeffs))
}

struct PolyParser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl PolyParser {
    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error(&self, message: &str) -> Error {
        let found = self
            .peek()
            .map_or("end of input".to_string(), |c| format!("'{c}'"));
        Error::Syntax {
            position: self.offset(),
            message: format!("{message}, found {found}"),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            self.chars[start..self.pos]
                .iter()
                .map(|&(_, c)| c)
                .collect()
        })
    }

    fn term(&mut self, field: FieldSpec) -> Result<(Scalar, usize)> {
        let coeff_at = self.offset();
        let coeff = match self.digits() {
            Some(num) => {
                let text = if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self
                        .digits()
                        .ok_or_else(|| self.error("expected denominator"))?;
                    format!("{num}/{den}")
                } else {
                    num
                };
                let c = field.parse_scalar(&text).map_err(|e| match e {
                    Error::DivisionByZero => Error::Syntax {
                        position: coeff_at,
                        message: "zero denominator".to_string(),
                    },
                    other => other,
                })?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                    if self.peek() != Some('z') {
                        return Err(self.error("expected 'z' after '*'"));
                    }
                }
                Some(c)
            }
            None => None,
        };
        if self.peek() != Some('z') {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.error("expected a coefficient or 'z'")),
            };
        }
        self.pos += 1;
        let power = if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.offset();
            let digits = self
                .digits()
                .ok_or_else(|| self.error("expected an exponent"))?;
            match digits.parse::<usize>() {
                Ok(k) if k <= MAX_EXPONENT => k,
                _ => {
                    return Err(Error::Syntax {
                        position: at,
                        message: format!("exponent above {MAX_EXPONENT}"),
                    })
                }
            }
        } else {
            1
        };
        Ok((coeff.unwrap_or_else(|| field.one()), power))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub fexp: i64,
    pub gexp: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonMonomial {
    pub fexp: i64,
    pub gexps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEvent {
    pub step: usize,
    pub degree_before: i64,
    pub monomial: JsonMonomial,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: String,
    pub field: String,
    pub f: String,
    pub g: String,
    pub n: u64,
    pub swapped: bool,
    pub m_sequence: Vec<i64>,
    pub d_sequence: Vec<u64>,
    pub a_sequence: Vec<u64>,
    /// Sorted by `(gexp, fexp)`, largest first.
    pub relation: Vec<JsonTerm>,
    pub trace: Vec<JsonEvent>,
    pub verdicts: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupReport>,
}

impl JsonReport {
    pub fn from_result(result: &DependenceResult, trace: bool) -> Self {
        JsonReport {
            schema_version: SCHEMA_VERSION.to_string(),
            field: result.field.to_string(),
            f: result.f.to_string(),
            g: result.g.to_string(),
            n: result.n(),
            swapped: result.swapped,
            m_sequence: result.m_sequence(),
            d_sequence: result.d_sequence(),
            a_sequence: result.a_sequence(),
            relation: result
                .relation
                .terms()
                .rev()
                .map(|(m, c)| JsonTerm {
                    fexp: m.fexp,
                    gexp: m.gexp,
                    coeff: c.to_string(),
                })
                .collect(),
            trace: if trace {
                result
                    .trace
                    .iter()
                    .map(|e| JsonEvent {
                        step: e.step,
                        degree_before: e.degree_before,
                        monomial: JsonMonomial {
                            fexp: e.monomial.fexp,
                            gexps: e.monomial.gexps.clone(),
                        },
                        coeff: e.coefficient.to_string(),
                    })
                    .collect()
            } else {
                Vec::new()
            },
            verdicts: BTreeMap::new(),
            semigroup: None,
        }
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.parse()
    }

    /// The pair and relation carried by the report, rebuilt from its strings.
    pub fn decode(&self) -> Result<(UniPoly, UniPoly, Laurent2)> {
        let field = self.field_spec()?;
        let f = parse_polynomial(&self.f, field)?;
        let g = parse_polynomial(&self.g, field)?;
        let mut terms = Vec::with_capacity(self.relation.len());
        for t in &self.relation {
            terms.push((Monomial::new(t.fexp, t.gexp), field.parse_scalar(&t.coeff)?));
        }
        Ok((f, g, Laurent2::from_terms(field, terms)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The relation with terms ordered by z-degree `n*i + m*j`, then by `g`-degree.
pub fn render_relation(result: &DependenceResult) -> String {
    let n = result.f.deg().unwrap_or(0) as i64;
    let m = result.g.deg().unwrap_or(0) as i64;
    result
        .relation
        .render_by(|mono| (n * mono.fexp + m * mono.gexp as i64, mono.gexp))
}

fn render_std_monomial(mono: &StdMonomial) -> String {
    let mut parts = Vec::new();
    if mono.fexp != 0 {
        parts.push(if mono.fexp == 1 {
            "f".to_string()
        } else {
            format!("f^{}", mono.fexp)
        });
    }
    for (k, &j) in mono.gexps.iter().enumerate() {
        match j {
            0 => {}
            1 => parts.push(format!("g_{k}")),
            _ => parts.push(format!("g_{k}^{j}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn bool_word(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_word(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn config(common: &Common) -> EngineConfig {
    EngineConfig {
        max_reductions_per_step: common.max_steps,
        ..EngineConfig::default()
    }
}

fn parse_pair(common: &Common, f: &str, g: &str) -> Result<(UniPoly, UniPoly)> {
    Ok((
        parse_polynomial(f, common.field)?,
        parse_polynomial(g, common.field)?,
    ))
}

fn run_pair(args: &PairArgs) -> Result<DependenceResult> {
    let (f, g) = parse_pair(&args.common, &args.f, &args.g)?;
    engine::run_with(&f, &g, args.common.field, &config(&args.common))
}

fn text_report(result: &DependenceResult, trace: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("field: {}\n", result.field));
    out.push_str(&format!("f = {}\n", result.f));
    out.push_str(&format!("g = {}\n", result.g));
    if result.swapped {
        out.push_str("roles swapped: chain built from g\n");
    }
    out.push_str(&format!("P = {}\n", render_relation(result)));
    out.push_str(&format!("m-sequence: {}\n", join(&result.m_sequence())));
    out.push_str(&format!("d-sequence: {}\n", join(&result.d_sequence())));
    out.push_str(&format!("a-sequence: {}\n", join(&result.a_sequence())));
    for step in &result.chain {
        out.push_str(&format!(
            "g_{} = {}  [image {}, degree {}]\n",
            step.index, step.symbolic, step.image, step.degree
        ));
    }
    if trace {
        for e in &result.trace {
            out.push_str(&format!(
                "reduce step {}: degree {}, subtract {} * {}\n",
                e.step,
                e.degree_before,
                e.coefficient,
                render_std_monomial(&e.monomial)
            ));
        }
    }
    out
}

fn depend(args: &PairArgs, out: &mut dyn Write) -> Result<()> {
    let result = run_pair(args)?;
    let text = if args.common.json {
        JsonReport::from_result(&result, args.common.trace).to_json() + "\n"
    } else {
        text_report(&result, args.common.trace)
    };
    write_out(out, &text)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::PreconditionFailed(format!("cannot write output: {e}")))
}

fn read_source(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    let outcome = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    outcome
        .map_err(|e| Error::PreconditionFailed(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    let json = match &args.report {
        Some(path) => read_source(path)?,
        None => {
            let pair = PairArgs {
                common: args.common.clone(),
                f: args.f.clone().unwrap_or_default(),
                g: args.g.clone().unwrap_or_default(),
            };
            JsonReport::from_result(&run_pair(&pair)?, false).to_json()
        }
    };
    let report: JsonReport = serde_json::from_str(&json)
        .map_err(|e| Error::PreconditionFailed(format!("malformed report: {e}")))?;
    let (f, g, relation) = report.decode()?;
    if relation.is_zero() {
        return Err(Error::PreconditionFailed(
            "report carries no relation".to_string(),
        ));
    }
    let vanishes = oracle::substitute(&relation, &f, &g)?.is_zero();
    let mut report = report;
    report
        .verdicts
        .insert("substitution_vanishes".to_string(), vanishes);
    let text = if args.common.json {
        report.to_json() + "\n"
    } else {
        format!("P = {relation}\nP(f, g) = 0: {}\n", bool_word(vanishes))
    };
    write_out(out, &text)?;
    Ok(vanishes)
}

fn semigroup_cmd(args: &PairArgs, out: &mut dyn Write) -> Result<()> {
    let result = run_pair(args)?;
    let report = semigroup::semigroup_report(&result)?;
    let text = if args.common.json {
        let mut json = JsonReport::from_result(&result, args.common.trace);
        json.verdicts
            .insert("contains_one".into(), report.contains_one);
        json.verdicts
            .insert("ams_applicable".into(), report.ams_applicable);
        if let Some(d) = report.ams_divisibility {
            json.verdicts.insert("ams_divisibility".into(), d);
        }
        json.semigroup = Some(report);
        json.to_json() + "\n"
    } else {
        let mut text = format!(
            "generators: {}\ncontains 1: {}\nmin positive: {}\nams applicable: {}\n",
            join(&report.generators),
            bool_word(report.contains_one),
            report.min_positive,
            bool_word(report.ams_applicable)
        );
        if let Some(d) = report.ams_divisibility {
            text.push_str(&format!("ams divisibility: {}\n", bool_word(d)));
        }
        text
    };
    write_out(out, &text)
}

fn ams(args: &PairArgs, out: &mut dyn Write) -> Result<()> {
    let (f, g) = parse_pair(&args.common, &args.f, &args.g)?;
    let verdict = semigroup::ams_verdict(&f, &g)?;
    let text = if args.common.json {
        serde_json::to_string_pretty(&verdict).expect("verdict serializes") + "\n"
    } else {
        format!("{verdict}\n")
    };
    write_out(out, &text)
}

fn richman(args: &PairArgs, out: &mut dyn Write) -> Result<bool> {
    let result = run_pair(args)?;
    let witness = semigroup::richman_witness(&result)?;
    let holds = semigroup::richman_check(&result)?;
    let text = if args.common.json {
        let mut json = JsonReport::from_result(&result, args.common.trace);
        json.verdicts.insert("richman".into(), holds);
        json.verdicts
            .insert("monomial_is_polynomial".into(), witness.fexp >= 0);
        json.to_json() + "\n"
    } else {
        format!(
            "d_0 = {}\nmonomial of degree d_0: f^{}*g^{}\nrichman: {}\n",
            witness.d0,
            witness.fexp,
            witness.gexp,
            pass_word(holds)
        )
    };
    write_out(out, &text)?;
    Ok(holds)
}

fn parse_target(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidSequence(format!("bad entry {t:?} in target {text:?}")))
        })
        .collect()
}

fn admissible(args: &AdmissibleArgs, out: &mut dyn Write) -> Result<bool> {
    if let (Some(f), Some(g)) = (&args.f, &args.g) {
        let (f, g) = parse_pair(&args.common, f, g)?;
        let result = engine::run_with(&f, &g, args.common.field, &config(&args.common))?;
        let report = semigroup::semigroup_report(&result)?;
        let matches = match &args.target {
            Some(t) => Some(parse_target(t)? == report.generators),
            None => None,
        };
        let mut text = format!("degrees: {}\n", join(&report.generators));
        if report.generators.len() >= 2 {
            let (n, ms) = (report.generators[0], report.generators[1..].to_vec());
            for (label, kind) in [
                ("one-admissible", AdmissibleKind::OneAdmissible),
                ("two-admissible", AdmissibleKind::TwoAdmissible),
            ] {
                let ok = AdmissibleSequence::new(n, ms.clone(), kind).is_ok();
                text.push_str(&format!("{label}: {}\n", bool_word(ok)));
            }
        }
        if let Some(m) = matches {
            text.push_str(&format!("matches target: {}\n", bool_word(m)));
        }
        write_out(out, &text)?;
        return Ok(matches.unwrap_or(true));
    }
    let list = semigroup::enumerate_two_admissible(args.max_n);
    let text = if args.common.json {
        serde_json::to_string_pretty(&list).expect("sequences serialize") + "\n"
    } else {
        list.iter().map(|s| format!("{s}\n")).collect()
    };
    write_out(out, &text)?;
    Ok(true)
}

fn oracle_cmd(args: &PairArgs, out: &mut dyn Write) -> Result<bool> {
    let (f, g) = parse_pair(&args.common, &args.f, &args.g)?;
    let total = f.deg().unwrap_or(0) + g.deg().unwrap_or(0);
    if total > ORACLE_DEGREE_CAP {
        return Err(Error::PreconditionFailed(format!(
            "deg f + deg g = {total} exceeds the oracle cap {ORACLE_DEGREE_CAP}"
        )));
    }
    let result = engine::run_with(&f, &g, args.common.field, &config(&args.common))?;
    let report = oracle::certify(&result)?;
    let resultant_label = if result.field.characteristic() == 0 {
        "resultant is a power of P"
    } else {
        "P divides resultant"
    };
    let text = if args.common.json {
        let mut json = JsonReport::from_result(&result, args.common.trace);
        json.verdicts
            .insert("substitution_vanishes".into(), report.substitution_vanishes);
        json.verdicts
            .insert("resultant_consistent".into(), report.resultant_consistent);
        json.verdicts.insert("minimal".into(), report.minimal);
        json.to_json() + "\n"
    } else {
        format!(
            "{}: P(f, g) = 0\n{}: {resultant_label}\n{}: no relation of smaller g-degree\n",
            pass_word(report.substitution_vanishes),
            pass_word(report.resultant_consistent),
            pass_word(report.minimal)
        )
    };
    write_out(out, &text)?;
    Ok(report.all_pass())
}

fn batch(args: &BatchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let text = read_source(&args.file)?;
    let mut worst = EXIT_OK;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words = shlex::split(line).ok_or_else(|| Error::Syntax {
            position: 0,
            message: format!("line {}: unbalanced quotes", lineno + 1),
        })?;
        let code = match Cli::try_parse_from(std::iter::once("polydep".to_string()).chain(words)) {
            Ok(Cli {
                command: Command::Batch(_),
            }) => {
                let _ = writeln!(err, "line {}: nested batch is not allowed", lineno + 1);
                EXIT_INPUT
            }
            Ok(cli) => execute(&cli, out, err),
            Err(e) => {
                let _ = writeln!(err, "line {}: {e}", lineno + 1);
                EXIT_INPUT
            }
        };
        worst = worst.max(code);
    }
    Ok(worst)
}

/// Maps an error to its exit code: invariant failures are internal, the rest
/// are input problems.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::IterationCapExceeded { .. } | Error::InvariantViolation(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn describe(command: &Command) -> String {
    let pair =
        |name: &str, a: &PairArgs| format!("{name} --field {} {:?} {:?}", a.common.field, a.f, a.g);
    match command {
        Command::Depend(a) => pair("depend", a),
        Command::Semigroup(a) => pair("semigroup", a),
        Command::Ams(a) => pair("ams", a),
        Command::Richman(a) => pair("richman", a),
        Command::Oracle(a) => pair("oracle", a),
        Command::Verify(a) => format!("verify --field {} {:?} {:?}", a.common.field, a.f, a.g),
        Command::Admissible(a) => format!("admissible --max-n {} {:?} {:?}", a.max_n, a.f, a.g),
        Command::Batch(a) => format!("batch {}", a.file.display()),
    }
}

/// Runs one parsed command and returns its exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let outcome: Result<u8> = match &cli.command {
        Command::Depend(a) => depend(a, out).map(|_| EXIT_OK),
        Command::Semigroup(a) => semigroup_cmd(a, out).map(|_| EXIT_OK),
        Command::Ams(a) => ams(a, out).map(|_| EXIT_OK),
        Command::Verify(a) => verify(a, out).map(|ok| if ok { EXIT_OK } else { EXIT_INPUT }),
        Command::Richman(a) => richman(a, out).map(|ok| if ok { EXIT_OK } else { EXIT_INTERNAL }),
        Command::Admissible(a) => {
            admissible(a, out).map(|ok| if ok { EXIT_OK } else { EXIT_INPUT })
        }
        Command::Oracle(a) => oracle_cmd(a, out).map(|ok| if ok { EXIT_OK } else { EXIT_INTERNAL }),
        Command::Batch(a) => batch(a, out, err),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            let _ = writeln!(err, "error: {e}");
            if code == EXIT_INTERNAL {
                let _ = writeln!(err, "request: {}", describe(&cli.command));
                let _ = writeln!(err, "{e:#?}");
            }
            code
        }
    }
}
