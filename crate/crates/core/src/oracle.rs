//! Brute-force factorization over the integers, used as ground truth.
//!
//! Linear factors come from the rational root test; higher-degree factors from
//! Kronecker's method: a degree-`d` factor `g` of `f` satisfies `g(t) | f(t)` at
//! every integer `t`, so interpolating through every tuple of divisors of
//! `f(t_0), ..., f(t_d)` finds it. Degrees are searched in increasing order, so
//! each factor found is irreducible.
//!
//! The search is exhaustive within its budget. Running out of budget is an
//! error, never an irreducibility claim.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::criteria::{eisenstein_check, CriterionVerdict, VerdictKind};
use crate::poly::{check_prime, valuation, IntegerPolynomial};
use crate::primes::divisors;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_degree: usize,
    pub max_abs_coeff: BigInt,
    /// Search nodes (partial divisor tuples) allowed per factor-degree search.
    pub budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_degree: 8,
            max_abs_coeff: BigInt::from(10u64.pow(12)),
            budget: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the oracle limit {max}")]
    DegreeLimit { degree: usize, max: usize },
    #[error("coefficient {coeff} exceeds the oracle limit {max} in absolute value")]
    CoefficientLimit { coeff: BigInt, max: BigInt },
    #[error("search budget exhausted after {steps} divisor tuples while looking for a degree-{degree} factor")]
    BudgetExceeded { degree: usize, steps: u64 },
}

/// `f = sign * content * prod(factor_i ^ mult_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    /// `+1` or `-1`.
    pub sign: i8,
    /// Positive gcd of the input's coefficients.
    pub content: BigInt,
    /// Primitive irreducible factors with positive leading coefficient, sorted
    /// by degree and then by ascending coefficient sequence.
    pub factors: Vec<(IntegerPolynomial, u32)>,
    pub input_degree: usize,
}

impl FactorizationResult {
    pub fn reconstruct(&self) -> IntegerPolynomial {
        let unit = IntegerPolynomial::constant(&self.content * BigInt::from(self.sign));
        self.factors
            .iter()
            .fold(unit, |acc, (g, m)| &acc * &g.pow(*m))
    }

    /// Nonconstant irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// Not a product of two nonconstant integer polynomials.
    pub fn is_irreducible(&self) -> bool {
        self.factor_count() == 1
    }

    /// Factors repeated by multiplicity, in canonical order.
    pub fn expanded(&self) -> Vec<IntegerPolynomial> {
        self.factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.clone(), *m as usize))
            .collect()
    }
}

impl fmt::Display for FactorizationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = &self.content * BigInt::from(self.sign);
        let mut parts = Vec::new();
        if !unit.is_one() || self.factors.is_empty() {
            parts.push(unit.to_string());
        }
        for (g, m) in &self.factors {
            if *m == 1 {
                parts.push(format!("({g})"));
            } else {
                parts.push(format!("({g})^{m}"));
            }
        }
        f.write_str(&parts.join(" * "))
    }
}

fn canonical_cmp(a: &IntegerPolynomial, b: &IntegerPolynomial) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

fn normalize_sign(g: IntegerPolynomial) -> IntegerPolynomial {
    if g.leading().is_some_and(Signed::is_negative) {
        -&g
    } else {
        g
    }
}

/// Distinct rational roots of `f`, ascending. Requires `a_0 != 0`.
pub fn rational_roots(f: &IntegerPolynomial) -> crate::Result<Vec<BigRational>> {
    let n = f.degree().ok_or(crate::Error::ZeroPolynomial)?;
    let a0 = f.constant_term();
    if a0.is_zero() {
        return Err(crate::Error::ZeroConstantTerm);
    }
    let an = f.leading().expect("nonzero polynomial").clone();
    let mut roots = Vec::new();
    if n == 0 {
        return Ok(roots);
    }
    let dens = divisors(&an);
    for num in divisors(&a0) {
        for den in &dens {
            if !num.gcd(den).is_one() {
                continue;
            }
            for num in [num.clone(), -&num] {
                // q^n f(p/q) = sum a_i p^i q^(n-i)
                let mut total = BigInt::zero();
                let mut pw_num = BigInt::one();
                for (i, a) in f.coeffs().iter().enumerate() {
                    total += a * &pw_num * den.pow((n - i) as u32);
                    pw_num *= &num;
                }
                if total.is_zero() {
                    roots.push(BigRational::new(num, den.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Factors `f` completely into irreducibles over the integers.
///
/// Powers of `x` are split off first, then linear factors from rational roots,
/// then Kronecker's search for each degree `2..=n/2`. Reconstruction of the
/// input from the result is asserted on every call.
pub fn kronecker_factor(
    f: &IntegerPolynomial,
    limits: &OracleLimits,
) -> Result<FactorizationResult, OracleError> {
    let n = f.degree().ok_or(OracleError::ZeroPolynomial)?;
    if n > limits.max_degree {
        return Err(OracleError::DegreeLimit { degree: n, max: limits.max_degree });
    }
    if let Some(c) = f.coeffs().iter().find(|c| c.abs() > limits.max_abs_coeff) {
        return Err(OracleError::CoefficientLimit { coeff: c.clone(), max: limits.max_abs_coeff.clone() });
    }
    let lead = f.leading().expect("nonzero polynomial");
    let sign: i8 = if lead.is_negative() { -1 } else { 1 };
    let content = f.content();
    let mut rest = f.div_scalar_exact(&(&content * BigInt::from(sign)));
    let mut found: Vec<IntegerPolynomial> = Vec::new();

    let (m, stripped) = rest.strip_x();
    found.extend(std::iter::repeat_n(IntegerPolynomial::x(), m));
    rest = stripped;

    if rest.degree().unwrap_or(0) >= 1 {
        for root in rational_roots(&rest).expect("x powers were stripped") {
            let linear = IntegerPolynomial::linear(root.denom().clone(), -root.numer().clone());
            while let Some(q) = rest.div_exact(&linear) {
                found.push(linear.clone());
                rest = q;
            }
        }
    }

    let mut d = 2;
    while rest.degree().unwrap_or(0) >= 2 * d {
        match find_factor_of_degree(&rest, d, limits.budget)? {
            Some(g) => {
                while let Some(q) = rest.div_exact(&g) {
                    found.push(g.clone());
                    rest = q;
                }
            }
            None => d += 1,
        }
    }
    if rest.degree().unwrap_or(0) >= 1 {
        found.push(rest.clone());
        rest = IntegerPolynomial::constant(BigInt::one());
    }
    assert!(rest.degree() == Some(0) && rest.coeffs()[0].is_one(), "leftover must be 1");

    found.sort_by(canonical_cmp);
    let mut factors: Vec<(IntegerPolynomial, u32)> = Vec::new();
    for g in found {
        match factors.last_mut() {
            Some((h, m)) if *h == g => *m += 1,
            _ => factors.push((g, 1)),
        }
    }
    let result = FactorizationResult { sign, content, factors, input_degree: n };
    assert_eq!(&result.reconstruct(), f, "oracle factorization must reconstruct its input");
    assert_eq!(
        result.factors.iter().map(|(g, m)| g.degree().unwrap() * *m as usize).sum::<usize>(),
        n
    );
    Ok(result)
}

/// `0, 1, -1, 2, -2, ...`, skipping roots of `f`.
fn evaluation_points(f: &IntegerPolynomial, count: usize) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(count);
    let mut t: i64 = 0;
    while out.len() < count {
        let bt = BigInt::from(t);
        let y = f.evaluate(&bt);
        if !y.is_zero() {
            out.push((bt, y));
        }
        t = if t <= 0 { 1 - t } else { -t };
    }
    out
}

struct Search<'a> {
    f: &'a IntegerPolynomial,
    lead: BigInt,
    nodes: Vec<BigInt>,
    /// Signed divisor candidates for each node.
    choices: Vec<Vec<BigInt>>,
    /// A point outside the interpolation nodes, used to reject candidates cheaply.
    probe: (BigInt, BigInt),
    /// Newton-form coefficients of the current partial interpolant.
    newton: Vec<BigInt>,
    steps: u64,
    budget: u64,
    degree: usize,
}

impl Search<'_> {
    fn interpolant_at(&self, upto: usize, x: &BigInt) -> BigInt {
        // Newton form: c_0 + c_1 (x - x_0) + ... evaluated by nested multiplication.
        let mut acc = BigInt::zero();
        for j in (0..upto).rev() {
            acc = acc * (x - &self.nodes[j]) + &self.newton[j];
        }
        acc
    }

    fn to_monomial(&self) -> IntegerPolynomial {
        let mut poly = IntegerPolynomial::constant(self.newton[self.degree].clone());
        for j in (0..self.degree).rev() {
            let linear = IntegerPolynomial::linear(BigInt::one(), -self.nodes[j].clone());
            poly = &(&poly * &linear) + &IntegerPolynomial::constant(self.newton[j].clone());
        }
        poly
    }

    fn descend(&mut self, depth: usize) -> Result<Option<IntegerPolynomial>, OracleError> {
        if depth > self.degree {
            let top = &self.newton[self.degree];
            if top.is_zero() || !(&self.lead % top).is_zero() {
                return Ok(None);
            }
            let g_probe = self.interpolant_at(self.degree + 1, &self.probe.0);
            if g_probe.is_zero() || !(&self.probe.1 % &g_probe).is_zero() {
                return Ok(None);
            }
            let g = self.to_monomial();
            return Ok(self.f.div_exact(&g).map(|_| normalize_sign(g)));
        }
        let x = self.nodes[depth].clone();
        let denom: BigInt = self.nodes[..depth].iter().map(|xi| &x - xi).product();
        let base = self.interpolant_at(depth, &x);
        for i in 0..self.choices[depth].len() {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(OracleError::BudgetExceeded { degree: self.degree, steps: self.steps - 1 });
            }
            // Divided differences of an integer polynomial at integer nodes are integers.
            let (c, r) = (&self.choices[depth][i] - &base).div_rem(&denom);
            if !r.is_zero() {
                continue;
            }
            self.newton[depth] = c;
            if let Some(g) = self.descend(depth + 1)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }
}

/// Smallest-degree search step: a factor of exact degree `d`, or `None`.
/// `f` must have no integer roots at the evaluation points used (guaranteed
/// after rational-root removal) and degree at least `2d`.
fn find_factor_of_degree(
    f: &IntegerPolynomial,
    d: usize,
    budget: u64,
) -> Result<Option<IntegerPolynomial>, OracleError> {
    let points = evaluation_points(f, d + 2);
    let (probe, points) = points.split_last().expect("d + 2 >= 2 points");
    let mut choices = Vec::with_capacity(d + 1);
    for (j, (_, y)) in points.iter().enumerate() {
        let divs = divisors(y);
        let signed: Vec<BigInt> = if j == 0 {
            // g and -g are the same factor up to sign: fix g(t_0) > 0.
            divs
        } else {
            divs.into_iter().flat_map(|v| [v.clone(), -v]).collect()
        };
        choices.push(signed);
    }
    let mut search = Search {
        f,
        lead: f.leading().expect("nonzero").clone(),
        nodes: points.iter().map(|(t, _)| t.clone()).collect(),
        choices,
        probe: probe.clone(),
        newton: vec![BigInt::zero(); d + 1],
        steps: 0,
        budget,
        degree: d,
    };
    search.descend(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationOutcome {
    Consistent,
    Contradiction(String),
    OracleInapplicable(String),
}

impl VerificationOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            VerificationOutcome::Consistent => "consistent",
            VerificationOutcome::Contradiction(_) => "contradiction",
            VerificationOutcome::OracleInapplicable(_) => "oracle_inapplicable",
        }
    }

    pub fn is_contradiction(&self) -> bool {
        matches!(self, VerificationOutcome::Contradiction(_))
    }
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationOutcome::Consistent => f.write_str("consistent"),
            VerificationOutcome::Contradiction(d) => write!(f, "CONTRADICTION: {d}"),
            VerificationOutcome::OracleInapplicable(d) => write!(f, "oracle inapplicable: {d}"),
        }
    }
}

/// Checks a verdict produced for `f` against the oracle's factorization of
/// `f(x + shift)`.
pub fn verify_verdict(
    f: &IntegerPolynomial,
    v: &CriterionVerdict,
    limits: &OracleLimits,
) -> VerificationOutcome {
    if v.kind == VerdictKind::Inconclusive {
        return VerificationOutcome::Consistent;
    }
    let g = f.shift(&BigInt::from(v.shift));
    let result = match kronecker_factor(&g, limits) {
        Ok(r) => r,
        Err(e) => return VerificationOutcome::OracleInapplicable(e.to_string()),
    };
    if result.is_irreducible() {
        return VerificationOutcome::Consistent;
    }
    if v.kind == VerdictKind::Irreducible {
        return VerificationOutcome::Contradiction(format!(
            "claimed irreducible, but {g} = {result}"
        ));
    }
    let n = g.degree().unwrap_or(0);
    let Some(p) = v.witness_prime else {
        return VerificationOutcome::Contradiction("dichotomy verdict without a witness prime".into());
    };
    let halves = result.expanded();
    let shape_ok = halves.len() == 2
        && n.is_multiple_of(2)
        && halves.iter().all(|h| h.degree() == Some(n / 2))
        && v.half_degree == Some(n / 2);
    let eisenstein_ok = halves
        .iter()
        .all(|h| eisenstein_check(h, p).is_ok_and(|e| e.is_irreducible()));
    if shape_ok && eisenstein_ok {
        VerificationOutcome::Consistent
    } else {
        VerificationOutcome::Contradiction(format!(
            "dichotomy at p={p} requires two Eisenstein factors of degree {}, but {g} = {result}",
            n / 2
        ))
    }
}

/// For `f` with `p ∤ a_n` and `p | a_i` (`i < n`) and a factorization into at
/// least two nonconstant factors: is every non-leading coefficient of every
/// factor divisible by `p`?
pub fn check_factor_divisibility(
    f: &IntegerPolynomial,
    p: u64,
    result: &FactorizationResult,
) -> crate::Result<bool> {
    check_prime(p)?;
    let n = f.positive_degree()?;
    let coeffs = f.coeffs();
    if valuation(&coeffs[n], p)?.at_least(1) {
        return Err(crate::Error::Precondition("p divides the leading coefficient"));
    }
    for a in &coeffs[..n] {
        if !valuation(a, p)?.at_least(1) {
            return Err(crate::Error::Precondition("p does not divide every non-leading coefficient"));
        }
    }
    if result.factor_count() < 2 || &result.reconstruct() != f {
        return Err(crate::Error::Precondition("result is not a nontrivial factorization of f"));
    }
    let pb = BigInt::from(p);
    Ok(result.factors.iter().all(|(g, _)| {
        let k = g.degree().unwrap_or(0);
        g.coeffs()[..k].iter().all(|c| (c % &pb).is_zero())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{k2_structure_check, Criterion};

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn factor(c: &[i64]) -> FactorizationResult {
        kronecker_factor(&p(c), &OracleLimits::default()).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_roots(&p(&[-4, 0, 1])).unwrap(), vec![r(-2, 1), r(2, 1)]);
        assert!(rational_roots(&p(&[12, 0, 0, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&p(&[-8, 0, 0, 1])).unwrap(), vec![r(2, 1)]);
        assert_eq!(rational_roots(&p(&[-1, 0, 4])).unwrap(), vec![r(-1, 2), r(1, 2)]);
        assert_eq!(rational_roots(&p(&[0, 1])), Err(crate::Error::ZeroConstantTerm));
    }

    #[test]
    fn factors_example_two() {
        let res = factor(&[150, 50, 25, 5, 1]);
        assert_eq!(res.factors, vec![(p(&[10, 0, 1]), 1), (p(&[15, 5, 1]), 1)]);
        assert_eq!(res.sign, 1);
        assert!(res.content.is_one());
    }

    #[test]
    fn classic_shapes() {
        assert!(factor(&[25, 0, 1]).is_irreducible());
        assert_eq!(factor(&[-9, 0, 1]).factors, vec![(p(&[-3, 1]), 1), (p(&[3, 1]), 1)]);
        assert_eq!(factor(&[-27, 0, 0, 1]).factors, vec![(p(&[-3, 1]), 1), (p(&[9, 3, 1]), 1)]);
        assert!(factor(&[12, 0, 0, 0, 1]).is_irreducible());
        // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
        assert_eq!(factor(&[4, 0, 0, 0, 1]).factors, vec![(p(&[2, -2, 1]), 1), (p(&[2, 2, 1]), 1)]);
    }

    #[test]
    fn content_sign_and_powers() {
        let res = factor(&[0, 0, -6, -6]);
        assert_eq!(res.sign, -1);
        assert_eq!(res.content, BigInt::from(6));
        assert_eq!(res.factors, vec![(p(&[0, 1]), 2), (p(&[1, 1]), 1)]);
        let res = factor(&[1, 2, 1]);
        assert_eq!(res.factors, vec![(p(&[1, 1]), 2)]);
        let res = factor(&[4, 0, 4, 0, 1]);
        assert_eq!(res.factors, vec![(p(&[2, 0, 1]), 2)]);
        let res = factor(&[-1, 0, 4]);
        assert_eq!(res.factors, vec![(p(&[-1, 2]), 1), (p(&[1, 2]), 1)]);
        assert!(factor(&[7]).factors.is_empty());
    }

    #[test]
    fn limits_are_errors() {
        let limits = OracleLimits { max_degree: 3, ..Default::default() };
        assert!(matches!(
            kronecker_factor(&p(&[1, 0, 0, 0, 1]), &limits),
            Err(OracleError::DegreeLimit { degree: 4, max: 3 })
        ));
        let limits = OracleLimits { budget: 3, ..Default::default() };
        assert!(matches!(
            kronecker_factor(&p(&[150, 50, 25, 5, 1]), &limits),
            Err(OracleError::BudgetExceeded { degree: 2, .. })
        ));
        assert_eq!(kronecker_factor(&p(&[]), &limits), Err(OracleError::ZeroPolynomial));
    }

    #[test]
    fn sextic_into_cubics() {
        // (x^3 + 2x + 7)(x^3 - x^2 + 5)
        let g = p(&[7, 2, 0, 1]);
        let h = p(&[5, 0, -1, 1]);
        let res = kronecker_factor(&(&g * &h), &OracleLimits::default()).unwrap();
        assert_eq!(res.expanded(), vec![h, g]);
    }

    #[test]
    fn verification() {
        let limits = OracleLimits::default();
        let f = p(&[12, 0, 0, 0, 1]);
        let v = eisenstein_check(&f, 3).unwrap();
        assert_eq!(verify_verdict(&f, &v, &limits), VerificationOutcome::Consistent);

        let f = p(&[150, 50, 25, 5, 1]);
        let v = k2_structure_check(&f, 5).unwrap();
        assert_eq!(verify_verdict(&f, &v, &limits), VerificationOutcome::Consistent);

        let f = p(&[-4, 0, 1]);
        let mut planted = eisenstein_check(&f, 2).unwrap();
        planted.kind = VerdictKind::Irreducible;
        planted.reason = None;
        assert_eq!(planted.criterion, Some(Criterion::Eisenstein));
        assert!(verify_verdict(&f, &planted, &limits).is_contradiction());

        let v = eisenstein_check(&f, 2).unwrap();
        assert_eq!(verify_verdict(&f, &v, &limits), VerificationOutcome::Consistent);
    }

    #[test]
    fn divisibility_probe_examples() {
        for (c, q) in [(&[-4, 0, 1][..], 2), (&[150, 50, 25, 5, 1][..], 5), (&[-27, 0, 0, 1][..], 3)] {
            let f = p(c);
            let res = kronecker_factor(&f, &OracleLimits::default()).unwrap();
            assert_eq!(check_factor_divisibility(&f, q, &res), Ok(true));
        }
        let f = p(&[-1, 0, 1]);
        let res = kronecker_factor(&f, &OracleLimits::default()).unwrap();
        assert!(check_factor_divisibility(&f, 2, &res).is_err());
    }

    #[test]
    fn display_factorization() {
        assert_eq!(factor(&[0, 0, -6, -6]).to_string(), "-6 * (x)^2 * (x + 1)");
        assert_eq!(factor(&[150, 50, 25, 5, 1]).to_string(), "(x^2 + 10) * (x^2 + 5x + 15)");
    }
}
