//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// p-adic valuation of an integer. `Infinite` is the valuation of zero and
/// compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `true` when `p^e` divides the valued integer.
    pub fn at_least(self, e: u64) -> bool {
        match self {
            Valuation::Finite(v) => v >= e,
            Valuation::Infinite => true,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Largest `e` with `p^e | a`, ignoring sign. Primality of `p` is not checked,
/// only `p >= 2`.
pub fn valuation(a: &BigInt, p: u64) -> Result<Valuation> {
    if p < 2 {
        return Err(Error::InvalidPrime(p));
    }
    if a.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    let mut rest = a.abs();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return Ok(Valuation::Finite(e));
        }
        rest = q;
        e += 1;
    }
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p < 2 {
        Err(Error::InvalidPrime(p))
    } else {
        Ok(())
    }
}

/// `f(x) = a_n x^n + ... + a_1 x + a_0` with exact integer coefficients.
///
/// Coefficients are stored ascending by power, so `coeffs()[i]` is `a_i`.
/// Trailing zeros are trimmed on construction; the zero polynomial has an
/// empty coefficient vector and no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `scale * x + offset`.
    pub fn linear(scale: BigInt, offset: BigInt) -> Self {
        Self::new(vec![offset, scale])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// `a_i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Degree, rejecting the zero polynomial and constants.
    pub fn positive_degree(&self) -> Result<usize> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::DegreeTooSmall { degree: 0 }),
            Some(n) => Ok(n),
        }
    }

    /// `x^n f(1/x)`: coefficient sequence reversed. Requires `a_0 != 0` so the
    /// degree is preserved.
    pub fn reverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Self::new(self.coeffs.iter().rev().cloned().collect()))
    }

    /// Number of leading factors of `x`, i.e. the index of the first nonzero coefficient.
    pub fn x_power(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^m` with `m` maximal; returns `(m, f / x^m)`.
    pub fn strip_x(&self) -> (usize, Self) {
        let m = self.x_power();
        (m, Self::new(self.coeffs[m.min(self.coeffs.len())..].to_vec()))
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % d).is_zero());
                    c / d
                })
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(Signed::abs).max().unwrap_or_default()
    }

    /// Horner evaluation at `t`.
    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `g(t) = f(t + c)` by binomial expansion:
    /// `g_j = sum_{i >= j} a_i * C(i, j) * c^(i - j)`.
    pub fn shift(&self, c: &BigInt) -> Self {
        let n = self.coeffs.len();
        let mut powers = Vec::with_capacity(n);
        let mut pw = BigInt::one();
        for _ in 0..n {
            powers.push(pw.clone());
            pw *= c;
        }
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut binom = BigInt::one();
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                *slot += a * &binom * &powers[i - j];
                binom = binom * (i - j) / (j + 1);
            }
        }
        Self::new(out)
    }

    /// Exact division over the integers: `Some(q)` iff `self = q * divisor`
    /// with `q` integral.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dn = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree()?;
        if n < dn {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dn + 1];
        for k in (0..=n - dn).rev() {
            let top = &rem[k + dn];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(BigInt::one()), |acc, _| &acc * self)
    }
}

/// Product of two nonzero polynomials; `deg(fg) = deg f + deg g`.
pub fn multiply(f: &IntegerPolynomial, g: &IntegerPolynomial) -> Result<IntegerPolynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f * g)
}

/// `f(t + c)`, rejecting the zero polynomial.
pub fn shift_substitute(f: &IntegerPolynomial, c: &BigInt) -> Result<IntegerPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.shift(c))
}

pub fn evaluate(f: &IntegerPolynomial, t: &BigInt) -> BigInt {
    f.evaluate(t)
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Descending-power rendering, e.g. `x^4 + 5x^3 - 2x + 150`. The output is
/// accepted back by the CLI expression parser.
impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
