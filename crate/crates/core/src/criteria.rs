//! Prime-divisibility irreducibility criteria.
//!
//! Every check is a sufficient condition: it either proves irreducibility (or,
//! for [`k2_structure_check`] on even degree, the weaker two-halves dichotomy)
//! or returns [`VerdictKind::Inconclusive`] with the first hypothesis that failed.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::newton::{build_diagram, NewtonDiagram};
use crate::poly::{check_prime, valuation, IntegerPolynomial, Valuation};
use crate::primes::trial_factor;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    Eisenstein,
    ReversedEisenstein,
    Generalized,
    Dumas,
    K2Structure,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::Eisenstein,
        Criterion::ReversedEisenstein,
        Criterion::Generalized,
        Criterion::Dumas,
        Criterion::K2Structure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Eisenstein => "eisenstein",
            Criterion::ReversedEisenstein => "reversed_eisenstein",
            Criterion::Generalized => "generalized",
            Criterion::Dumas => "dumas",
            Criterion::K2Structure => "k2_structure",
        }
    }

    pub fn from_name(name: &str) -> Option<Criterion> {
        Criterion::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictKind {
    Inconclusive,
    /// Irreducible, or a product of exactly two Eisenstein factors of degree `n/2`.
    IrreducibleOrTwoEisensteinHalves,
    Irreducible,
}

impl VerdictKind {
    pub fn name(self) -> &'static str {
        match self {
            VerdictKind::Irreducible => "irreducible",
            VerdictKind::IrreducibleOrTwoEisensteinHalves => "irreducible_or_two_eisenstein_halves",
            VerdictKind::Inconclusive => "inconclusive",
        }
    }

    pub fn from_name(name: &str) -> Option<VerdictKind> {
        [
            VerdictKind::Irreducible,
            VerdictKind::IrreducibleOrTwoEisensteinHalves,
            VerdictKind::Inconclusive,
        ]
        .into_iter()
        .find(|k| k.name() == name)
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a criterion did not fire. Indices refer to the polynomial as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InconclusiveReason {
    /// `p | a_n`.
    LeadingCoefficientDivisible,
    /// `p | a_0` (reversed form).
    ConstantTermDivisible,
    /// `p^power` does not divide `a_index`.
    CoefficientNotDivisible { index: usize, power: u32 },
    /// `p^power | a_0`.
    ConstantTermTooDivisible { power: u32 },
    /// `p^power | a_n` (reversed form).
    LeadingCoefficientTooDivisible { power: u32 },
    /// `gcd(k, n) > 1`.
    NotCoprime { k: u32, degree: usize, gcd: u64 },
    /// The Newton diagram is not a single simple segment.
    DiagramShape { segments: usize, simple_segments: usize },
    /// Candidate search found no prime for any shift tried.
    NoCandidatePrime,
    /// Nothing fired in automatic mode.
    NothingApplied { attempts: usize },
}

impl fmt::Display for InconclusiveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use InconclusiveReason::*;
        match self {
            LeadingCoefficientDivisible => f.write_str("p divides the leading coefficient"),
            ConstantTermDivisible => f.write_str("p divides the constant term"),
            CoefficientNotDivisible { index, power: 1 } => {
                write!(f, "p does not divide a_{index}")
            }
            CoefficientNotDivisible { index, power } => {
                write!(f, "p^{power} does not divide a_{index}")
            }
            ConstantTermTooDivisible { power } => write!(f, "p^{power} divides the constant term"),
            LeadingCoefficientTooDivisible { power } => {
                write!(f, "p^{power} divides the leading coefficient")
            }
            NotCoprime { k, degree, gcd } => {
                write!(f, "gcd(k={k}, n={degree}) = {gcd}, coprimality required")
            }
            DiagramShape { segments, simple_segments } => write!(
                f,
                "Newton diagram has {segments} segment(s), {simple_segments} simple; need exactly one simple segment"
            ),
            NoCandidatePrime => f.write_str("no candidate prime divides a_0 or a_n"),
            NothingApplied { attempts } => write!(f, "no criterion fired in {attempts} attempt(s)"),
        }
    }
}

/// Outcome of one criterion run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub kind: VerdictKind,
    pub criterion: Option<Criterion>,
    pub witness_prime: Option<u64>,
    /// Exponent parameter for the generalized and `k = 2` criteria.
    pub k: Option<u32>,
    /// `n / 2`, set only on the dichotomy verdict.
    pub half_degree: Option<usize>,
    /// The substitution `x -> x + shift` the criterion was applied after.
    pub shift: i64,
    pub reason: Option<InconclusiveReason>,
}

impl CriterionVerdict {
    fn fired(criterion: Criterion, p: u64, k: Option<u32>) -> Self {
        CriterionVerdict {
            kind: VerdictKind::Irreducible,
            criterion: Some(criterion),
            witness_prime: Some(p),
            k,
            half_degree: None,
            shift: 0,
            reason: None,
        }
    }

    fn failed(criterion: Criterion, p: u64, k: Option<u32>, reason: InconclusiveReason) -> Self {
        CriterionVerdict {
            kind: VerdictKind::Inconclusive,
            criterion: Some(criterion),
            witness_prime: Some(p),
            k,
            half_degree: None,
            shift: 0,
            reason: Some(reason),
        }
    }

    pub fn inconclusive(reason: InconclusiveReason) -> Self {
        CriterionVerdict {
            kind: VerdictKind::Inconclusive,
            criterion: None,
            witness_prime: None,
            k: None,
            half_degree: None,
            shift: 0,
            reason: Some(reason),
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.kind == VerdictKind::Irreducible
    }

    fn with_shift(mut self, shift: i64) -> Self {
        self.shift = shift;
        self
    }
}

impl fmt::Display for CriterionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if let Some(c) = self.criterion {
            write!(f, " [{c}")?;
            if let Some(p) = self.witness_prime {
                write!(f, " p={p}")?;
            }
            if let Some(k) = self.k {
                write!(f, " k={k}")?;
            }
            if self.shift != 0 {
                write!(f, " shift={}", self.shift)?;
            }
            f.write_str("]")?;
        }
        if let Some(h) = self.half_degree {
            write!(f, " halves of degree {h}")?;
        }
        if let Some(r) = &self.reason {
            write!(f, ": {r}")?;
        }
        Ok(())
    }
}

fn val(a: &BigInt, p: u64) -> Result<Valuation> {
    valuation(a, p)
}

/// Eisenstein: `p ∤ a_n`, `p | a_i` for `i < n`, `p^2 ∤ a_0`.
pub fn eisenstein_check(f: &IntegerPolynomial, p: u64) -> Result<CriterionVerdict> {
    check_prime(p)?;
    let n = f.positive_degree()?;
    let coeffs = f.coeffs();
    let c = Criterion::Eisenstein;
    if val(&coeffs[n], p)?.at_least(1) {
        return Ok(CriterionVerdict::failed(c, p, None, InconclusiveReason::LeadingCoefficientDivisible));
    }
    for (i, a) in coeffs[..n].iter().enumerate() {
        if !val(a, p)?.at_least(1) {
            let reason = InconclusiveReason::CoefficientNotDivisible { index: i, power: 1 };
            return Ok(CriterionVerdict::failed(c, p, None, reason));
        }
    }
    if val(&coeffs[0], p)?.at_least(2) {
        let reason = InconclusiveReason::ConstantTermTooDivisible { power: 2 };
        return Ok(CriterionVerdict::failed(c, p, None, reason));
    }
    Ok(CriterionVerdict::fired(c, p, None))
}

/// Eisenstein with the roles of `a_0` and `a_n` exchanged, i.e. Eisenstein on
/// the reversed polynomial `x^n f(1/x)`.
pub fn reversed_eisenstein_check(f: &IntegerPolynomial, p: u64) -> Result<CriterionVerdict> {
    check_prime(p)?;
    let n = f.positive_degree()?;
    let reversed = f.reverse()?;
    let mut verdict = eisenstein_check(&reversed, p)?;
    verdict.criterion = Some(Criterion::ReversedEisenstein);
    verdict.reason = verdict.reason.map(|r| match r {
        InconclusiveReason::LeadingCoefficientDivisible => InconclusiveReason::ConstantTermDivisible,
        InconclusiveReason::CoefficientNotDivisible { index, power } => {
            InconclusiveReason::CoefficientNotDivisible { index: n - index, power }
        }
        InconclusiveReason::ConstantTermTooDivisible { power } => {
            InconclusiveReason::LeadingCoefficientTooDivisible { power }
        }
        other => other,
    });
    Ok(verdict)
}

/// `gcd(k, n) = 1`, `p ∤ a_n`, `p^k | a_j` for `j < n` and `p^(k+1) ∤ a_0`.
/// Its Newton diagram is then the single simple segment `(0,k) -> (n,0)`.
pub fn generalized_check(f: &IntegerPolynomial, p: u64, k: u32) -> Result<CriterionVerdict> {
    check_prime(p)?;
    if k == 0 {
        return Err(Error::InvalidExponent(k));
    }
    let n = f.positive_degree()?;
    let c = Criterion::Generalized;
    let g = (n as u64).gcd(&(k as u64));
    if g != 1 {
        let reason = InconclusiveReason::NotCoprime { k, degree: n, gcd: g };
        return Ok(CriterionVerdict::failed(c, p, Some(k), reason));
    }
    let k64 = k as u64;
    let vals = f
        .coeffs()
        .iter()
        .map(|a| val(a, p))
        .collect::<Result<Vec<_>>>()?;
    if vals[n].at_least(1) {
        return Ok(CriterionVerdict::failed(c, p, Some(k), InconclusiveReason::LeadingCoefficientDivisible));
    }
    if let Some(i) = vals[..n].iter().position(|v| !v.at_least(k64)) {
        let reason = InconclusiveReason::CoefficientNotDivisible { index: i, power: k };
        return Ok(CriterionVerdict::failed(c, p, Some(k), reason));
    }
    if vals[0].at_least(k64 + 1) {
        let reason = InconclusiveReason::ConstantTermTooDivisible { power: k + 1 };
        return Ok(CriterionVerdict::failed(c, p, Some(k), reason));
    }
    Ok(CriterionVerdict::fired(c, p, Some(k)))
}

/// Dumas: the Newton diagram at `p` is exactly one simple segment.
pub fn dumas_check(f: &IntegerPolynomial, p: u64) -> Result<CriterionVerdict> {
    dumas_check_with_diagram(f, p).map(|(v, _)| v)
}

/// [`dumas_check`] that also hands back the diagram it inspected.
pub fn dumas_check_with_diagram(
    f: &IntegerPolynomial,
    p: u64,
) -> Result<(CriterionVerdict, NewtonDiagram)> {
    let diagram = build_diagram(f, p)?;
    let verdict = if diagram.is_single_simple_segment() {
        CriterionVerdict::fired(Criterion::Dumas, p, None)
    } else {
        let reason = InconclusiveReason::DiagramShape {
            segments: diagram.segments.len(),
            simple_segments: diagram.segments.iter().filter(|s| s.simple).count(),
        };
        CriterionVerdict::failed(Criterion::Dumas, p, None, reason)
    };
    Ok((verdict, diagram))
}

/// `k = 2` structure check. If `p ∤ a_n`, `p | a_i` for `i < n`,
/// `p^2 | a_j` for `j <= n/2` and `p^3 ∤ a_0`, then `f` is irreducible for odd
/// `n`, and for even `n` it is irreducible or the product of two Eisenstein
/// polynomials of degree `n/2`.
pub fn k2_structure_check(f: &IntegerPolynomial, p: u64) -> Result<CriterionVerdict> {
    check_prime(p)?;
    let n = f.positive_degree()?;
    let c = Criterion::K2Structure;
    let vals = f
        .coeffs()
        .iter()
        .map(|a| val(a, p))
        .collect::<Result<Vec<_>>>()?;
    let fail = |reason| Ok(CriterionVerdict::failed(c, p, Some(2), reason));
    if vals[n].at_least(1) {
        return fail(InconclusiveReason::LeadingCoefficientDivisible);
    }
    if let Some(i) = vals[..n].iter().position(|v| !v.at_least(1)) {
        return fail(InconclusiveReason::CoefficientNotDivisible { index: i, power: 1 });
    }
    if let Some(j) = vals[..=n / 2].iter().position(|v| !v.at_least(2)) {
        return fail(InconclusiveReason::CoefficientNotDivisible { index: j, power: 2 });
    }
    if vals[0].at_least(3) {
        return fail(InconclusiveReason::ConstantTermTooDivisible { power: 3 });
    }
    let mut verdict = CriterionVerdict::fired(c, p, Some(2));
    if n % 2 == 0 {
        verdict.kind = VerdictKind::IrreducibleOrTwoEisensteinHalves;
        verdict.half_degree = Some(n / 2);
    }
    Ok(verdict)
}

/// Primes dividing `a_0` or `a_n`, found by trial division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePrimes {
    pub primes: Vec<u64>,
    /// `false` if some cofactor of `a_0` or `a_n` was left unfactored.
    pub complete: bool,
}

/// Any diagram that is a single segment of nonzero slope needs `p | a_0` or
/// `p | a_n`, so those primes are the only useful candidates.
pub fn candidate_primes(f: &IntegerPolynomial, trial_bound: u64) -> Result<CandidatePrimes> {
    let lead = f.leading().ok_or(Error::ZeroPolynomial)?;
    let constant = f.constant_term();
    if constant.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let a = trial_factor(&constant, trial_bound);
    let b = trial_factor(lead, trial_bound);
    let complete = a.is_complete() && b.is_complete();
    let mut primes = a.primes;
    primes.extend(b.primes);
    primes.sort_unstable();
    primes.dedup();
    Ok(CandidatePrimes { primes, complete })
}

/// Search bounds for [`auto_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutoConfig {
    pub trial_bound: u64,
    pub shift_bound: u64,
    pub max_k: u32,
}

impl Default for AutoConfig {
    fn default() -> Self {
        AutoConfig { trial_bound: 1_000_000, shift_bound: 5, max_k: 8 }
    }
}

/// Every attempt made by [`auto_check`] plus the verdict it settled on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: CriterionVerdict,
    pub attempts: Vec<CriterionVerdict>,
    /// Shifts whose candidate-prime search left an unfactored cofactor.
    pub incomplete_shifts: Vec<i64>,
    /// Shifts skipped because `f(shift) = 0`.
    pub root_shifts: Vec<i64>,
}

/// `0, 1, -1, 2, -2, ...` up to `|c| <= bound`.
pub fn shift_order(bound: u64) -> impl Iterator<Item = i64> {
    let bound = bound.min(i64::MAX as u64) as i64;
    std::iter::once(0).chain((1..=bound).flat_map(|c| [c, -c]))
}

/// Every criterion at prime `p`, in the fixed order eisenstein, reversed
/// eisenstein, generalized (`k = 1..=max_k` with `gcd(k, n) = 1`), dumas, `k = 2`
/// structure. Stops after the first irreducible verdict when `stop_early`.
pub fn run_all_at_prime(
    f: &IntegerPolynomial,
    p: u64,
    max_k: u32,
    stop_early: bool,
    out: &mut Vec<CriterionVerdict>,
) -> Result<bool> {
    let n = f.positive_degree()?;
    let mut push = |v: CriterionVerdict| {
        let hit = v.is_irreducible();
        out.push(v);
        hit && stop_early
    };
    if push(eisenstein_check(f, p)?) || push(reversed_eisenstein_check(f, p)?) {
        return Ok(true);
    }
    for k in 1..=max_k {
        if (k as u64).gcd(&(n as u64)) != 1 {
            continue;
        }
        if push(generalized_check(f, p, k)?) {
            return Ok(true);
        }
    }
    Ok(push(dumas_check(f, p)?) || push(k2_structure_check(f, p)?))
}

/// Tries every criterion at every candidate prime of `f(x + c)` for shifts
/// `c = 0, 1, -1, ...`, returning the first irreducible verdict. Without one,
/// the first dichotomy verdict is reported, else `Inconclusive`.
pub fn auto_check(f: &IntegerPolynomial, config: &AutoConfig) -> Result<CheckReport> {
    f.positive_degree()?;
    let mut attempts = Vec::new();
    let mut incomplete_shifts = Vec::new();
    let mut root_shifts = Vec::new();
    let mut any_prime = false;
    for c in shift_order(config.shift_bound) {
        let g = f.shift(&BigInt::from(c));
        if g.constant_term().is_zero() {
            root_shifts.push(c);
            continue;
        }
        let candidates = candidate_primes(&g, config.trial_bound)?;
        if !candidates.complete {
            incomplete_shifts.push(c);
        }
        for &p in &candidates.primes {
            any_prime = true;
            let from = attempts.len();
            let hit = run_all_at_prime(&g, p, config.max_k, true, &mut attempts)?;
            for v in &mut attempts[from..] {
                v.shift = c;
            }
            if hit {
                let verdict = attempts.last().cloned().expect("hit implies an attempt");
                return Ok(CheckReport { verdict, attempts, incomplete_shifts, root_shifts });
            }
        }
    }
    let verdict = attempts
        .iter()
        .find(|v| v.kind == VerdictKind::IrreducibleOrTwoEisensteinHalves)
        .cloned()
        .unwrap_or_else(|| {
            let reason = if any_prime {
                InconclusiveReason::NothingApplied { attempts: attempts.len() }
            } else {
                InconclusiveReason::NoCandidatePrime
            };
            CriterionVerdict::inconclusive(reason)
        });
    Ok(CheckReport { verdict, attempts, incomplete_shifts, root_shifts })
}

/// Re-runs a single criterion on `f(x + shift)`. Used to replay a recorded verdict.
pub fn replay(
    f: &IntegerPolynomial,
    criterion: Criterion,
    p: u64,
    k: Option<u32>,
    shift: i64,
) -> Result<CriterionVerdict> {
    let g = f.shift(&BigInt::from(shift));
    let v = match criterion {
        Criterion::Eisenstein => eisenstein_check(&g, p)?,
        Criterion::ReversedEisenstein => reversed_eisenstein_check(&g, p)?,
        Criterion::Generalized => generalized_check(&g, p, k.unwrap_or(1))?,
        Criterion::Dumas => dumas_check(&g, p)?,
        Criterion::K2Structure => k2_structure_check(&g, p)?,
    };
    Ok(v.with_shift(shift))
}
