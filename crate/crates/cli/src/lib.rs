//! Command-line front end.
//!
//! Subcommands: `check`, `diagram`, `factor` and `corpus`. Exit codes:
//! `0` ran (any verdict), `1` usage or input error, `2` parse error, `3` the
//! oracle contradicted a verdict under `--verify`, `4` corpus expectations
//! did not match.

pub mod corpus;
pub mod parse;
pub mod render;
pub mod report;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use irreducible_core::criteria::{dumas_check_with_diagram, replay, run_all_at_prime};
use irreducible_core::primes::is_prime_u64;
use irreducible_core::{
    auto_check, build_diagram, kronecker_factor, verify_verdict, AutoConfig, Criterion, CriterionVerdict,
    IntegerPolynomial, OracleLimits, VerdictKind,
};
use num_bigint::BigInt;
use serde::Serialize;

use crate::parse::{parse_coefficients, parse_polynomial, ParseError};
use crate::report::CheckOutput;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONTRADICTION: i32 = 3;
pub const EXIT_CORPUS_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "irreducible", version, about = "Irreducibility criteria for integer polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one criterion, every criterion at one prime, or the automatic search.
    Check(CheckArgs),
    /// Print the Newton diagram at a prime.
    Diagram(DiagramArgs),
    /// Factor with the brute-force oracle.
    Factor(FactorArgs),
    /// Run a JSON-lines regression corpus.
    Corpus(CorpusArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct PolyInput {
    /// Polynomial expression, e.g. "x^4 + 12".
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Ascending coefficients a0,a1,...,an.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
}

impl PolyInput {
    fn source(&self) -> String {
        self.poly.clone().or_else(|| self.coeffs.clone()).unwrap_or_default()
    }

    fn parse(&self) -> Result<IntegerPolynomial, ParseError> {
        match (&self.poly, &self.coeffs) {
            (Some(p), _) => parse_polynomial(p),
            (None, Some(c)) => parse_coefficients(c),
            (None, None) => unreachable!("clap enforces one input"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum CriterionArg {
    Eisenstein,
    ReversedEisenstein,
    Generalized,
    Dumas,
    K2Structure,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Criterion {
        match c {
            CriterionArg::Eisenstein => Criterion::Eisenstein,
            CriterionArg::ReversedEisenstein => Criterion::ReversedEisenstein,
            CriterionArg::Generalized => Criterion::Generalized,
            CriterionArg::Dumas => Criterion::Dumas,
            CriterionArg::K2Structure => Criterion::K2Structure,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// Largest degree the oracle accepts.
    #[arg(long, default_value_t = 8)]
    pub max_degree: usize,
    /// Divisor-tuple budget per factor-degree search.
    #[arg(long, default_value_t = 1_000_000)]
    pub budget: u64,
}

impl OracleArgs {
    fn limits(&self) -> OracleLimits {
        OracleLimits { max_degree: self.max_degree, budget: self.budget, ..OracleLimits::default() }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: PolyInput,
    /// Prime to test at. Required with --criterion.
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, value_enum, conflicts_with = "auto")]
    pub criterion: Option<CriterionArg>,
    /// Exponent for the generalized criterion.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Apply the criterion to f(x + shift).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub shift: i64,
    /// Search shifts, primes and criteria automatically (the default without --prime).
    #[arg(long, conflicts_with = "prime")]
    pub auto: bool,
    /// Cross-check the verdict with the factorization oracle.
    #[arg(long)]
    pub verify: bool,
    /// Print one JSON document instead of text.
    #[arg(long)]
    pub json: bool,
    /// Divide out x^m before running criteria.
    #[arg(long)]
    pub strip_x: bool,
    /// Trial-division bound for candidate primes in auto mode.
    #[arg(long, default_value_t = 1_000_000)]
    pub trial_bound: u64,
    /// Largest |shift| tried in auto mode.
    #[arg(long, default_value_t = 5)]
    pub shift_bound: u64,
    /// Largest k tried for the generalized criterion.
    #[arg(long, default_value_t = 8)]
    pub max_k: u32,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DiagramArgs {
    #[command(flatten)]
    pub input: PolyInput,
    #[arg(long)]
    pub prime: u64,
    /// Also write an SVG rendering to this path.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub strip_x: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct FactorArgs {
    #[command(flatten)]
    pub input: PolyInput,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    #[arg(long)]
    pub file: PathBuf,
    /// Also cross-check every verdict with the oracle.
    #[arg(long)]
    pub verify: bool,
}

/// Failure that ends a command early, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure { code: EXIT_PARSE, message: e.to_string() }
    }
}

impl From<irreducible_core::Error> for Failure {
    fn from(e: irreducible_core::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command, writing the report
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a, out),
        Command::Diagram(a) => cmd_diagram(a, out),
        Command::Factor(a) => cmd_factor(a, out),
        Command::Corpus(a) => corpus::run_corpus(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn check_prime_arg(p: u64) -> Result<(), Failure> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Failure::usage(format!("{p} is not prime")))
    }
}

/// Parses the input and applies `--strip-x`, rejecting zero polynomials and
/// (without stripping) zero constant terms.
fn prepare(input: &PolyInput, strip_x: bool) -> Result<(IntegerPolynomial, usize), Failure> {
    let f = input.parse()?;
    if f.is_zero() {
        return Err(irreducible_core::Error::ZeroPolynomial.into());
    }
    let (m, g) = if strip_x { f.strip_x() } else { (0, f) };
    if g.constant_term() == BigInt::from(0) {
        return Err(Failure::usage("constant term is zero; pass --strip-x to divide out x^m"));
    }
    Ok((g, m))
}

fn best_of(attempts: &[CriterionVerdict]) -> Option<CriterionVerdict> {
    attempts
        .iter()
        .find(|v| v.is_irreducible())
        .or_else(|| attempts.iter().find(|v| v.kind == VerdictKind::IrreducibleOrTwoEisensteinHalves))
        .cloned()
}

/// Runs `check` and returns the report without printing it.
pub fn evaluate_check(a: &CheckArgs) -> Result<CheckOutput, Failure> {
    let start = Instant::now();
    let (f, stripped_x) = prepare(&a.input, a.strip_x)?;
    f.positive_degree()?;
    if let Some(p) = a.prime {
        check_prime_arg(p)?;
    }
    let mut diagram = None;
    let mut incomplete = Vec::new();
    let (mode, verdict, attempts) = match (a.criterion, a.prime) {
        (Some(_), None) => return Err(Failure::usage("--criterion requires --prime")),
        (Some(c), Some(p)) => {
            let c = Criterion::from(c);
            if c == Criterion::Dumas {
                let g = f.shift(&BigInt::from(a.shift));
                let (mut v, d) = dumas_check_with_diagram(&g, p)?;
                v.shift = a.shift;
                diagram = Some(d);
                ("criterion", v.clone(), vec![v])
            } else {
                let k = (c == Criterion::Generalized).then_some(a.k);
                let v = replay(&f, c, p, k, a.shift)?;
                ("criterion", v.clone(), vec![v])
            }
        }
        (None, Some(p)) => {
            let g = f.shift(&BigInt::from(a.shift));
            let mut attempts = Vec::new();
            run_all_at_prime(&g, p, a.max_k, false, &mut attempts)?;
            for v in &mut attempts {
                v.shift = a.shift;
            }
            let verdict = best_of(&attempts).unwrap_or_else(|| {
                CriterionVerdict::inconclusive(irreducible_core::InconclusiveReason::NothingApplied {
                    attempts: attempts.len(),
                })
            });
            ("prime", verdict, attempts)
        }
        (None, None) => {
            let config = AutoConfig { trial_bound: a.trial_bound, shift_bound: a.shift_bound, max_k: a.max_k };
            let report = auto_check(&f, &config)?;
            incomplete = report.incomplete_shifts;
            ("auto", report.verdict, report.attempts)
        }
    };
    let oracle = a.verify.then(|| verify_verdict(&f, &verdict, &a.oracle.limits()));
    Ok(CheckOutput {
        source: a.input.source(),
        polynomial: f,
        stripped_x,
        mode,
        verdict,
        attempts,
        diagram,
        oracle,
        prime_search_incomplete: incomplete,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = evaluate_check(a)?;
    if a.json {
        let doc = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
        let _ = writeln!(out, "{doc}");
    } else {
        let _ = write!(out, "{}", report.to_text());
    }
    Ok(report.exit_code())
}

fn cmd_diagram(a: &DiagramArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    check_prime_arg(a.prime)?;
    let (f, stripped) = prepare(&a.input, a.strip_x)?;
    let d = build_diagram(&f, a.prime)?;
    if let Some(path) = &a.svg {
        std::fs::write(path, render::svg(&d))
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if a.json {
        let doc = serde_json::to_string_pretty(&report::DiagramJson::from(&d)).expect("diagram serializes");
        let _ = writeln!(out, "{doc}");
    } else {
        let _ = writeln!(out, "Newton diagram of {f} at p = {}", a.prime);
        if stripped > 0 {
            let _ = writeln!(out, "(x^{stripped} stripped)");
        }
        let _ = write!(out, "{}", render::ascii(&d));
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct FactorJson {
    input: String,
    outcome: &'static str,
    sign: Option<i8>,
    content: Option<String>,
    factors: Vec<(String, u32)>,
    irreducible: Option<bool>,
    error: Option<String>,
}

fn cmd_factor(a: &FactorArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let f = a.input.parse()?;
    if f.is_zero() {
        return Err(irreducible_core::Error::ZeroPolynomial.into());
    }
    let result = kronecker_factor(&f, &a.oracle.limits());
    if a.json {
        let doc = match &result {
            Ok(r) => FactorJson {
                input: f.to_string(),
                outcome: "factored",
                sign: Some(r.sign),
                content: Some(r.content.to_string()),
                factors: r.factors.iter().map(|(g, m)| (g.to_string(), *m)).collect(),
                irreducible: Some(r.is_irreducible()),
                error: None,
            },
            Err(e) => FactorJson {
                input: f.to_string(),
                outcome: "oracle_inapplicable",
                sign: None,
                content: None,
                factors: Vec::new(),
                irreducible: None,
                error: Some(e.to_string()),
            },
        };
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializes"));
    } else {
        match &result {
            Ok(r) => {
                let _ = writeln!(out, "{f} = {r}");
                let status = match r.factor_count() {
                    0 => "constant",
                    1 => "irreducible",
                    _ => "reducible",
                };
                let _ = writeln!(out, "{status}");
            }
            Err(e) => {
                let _ = writeln!(out, "oracle inapplicable: {e}");
            }
        }
    }
    Ok(EXIT_OK)
}
