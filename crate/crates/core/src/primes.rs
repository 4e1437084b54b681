//! Small-integer number theory: primality for `u64`, trial division and divisor lists.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Outcome of trial division of `|n|` by every candidate up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialFactorization {
    /// Distinct prime factors found, ascending.
    pub primes: Vec<u64>,
    /// Part of `|n|` left after removing the found primes. `1` when complete.
    pub cofactor: BigInt,
}

impl TrialFactorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }
}

/// Trial-divides `|n|` by `2, 3, 5, ..., bound`. A leftover below `bound^2`
/// is necessarily prime and is reported as a found prime when it fits in a `u64`.
/// `n = 0` has no meaningful factorization and returns an empty, complete result.
pub fn trial_factor(n: &BigInt, bound: u64) -> TrialFactorization {
    let mut rest = n.abs();
    let mut primes = Vec::new();
    if rest.is_zero() {
        return TrialFactorization { primes, cofactor: BigInt::one() };
    }
    let mut d: u64 = 2;
    while d <= bound {
        let bd = BigInt::from(d);
        if &bd * &bd > rest {
            break;
        }
        let (q, r) = rest.div_rem(&bd);
        if r.is_zero() {
            primes.push(d);
            rest = q;
            loop {
                let (q, r) = rest.div_rem(&bd);
                if !r.is_zero() {
                    break;
                }
                rest = q;
            }
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if !rest.is_one() {
        let bd = BigInt::from(d);
        if &bd * &bd > rest {
            if let Some(last) = rest.to_u64() {
                primes.push(last);
                rest = BigInt::one();
            }
        }
    }
    TrialFactorization { primes, cofactor: rest }
}

/// Full prime factorization of `|n|` with multiplicities, by trial division.
/// Intended for the desk-scale values the oracle produces.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut rest = n.abs();
    let mut out = Vec::new();
    if rest.is_zero() {
        return out;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { 1 } else { 2 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

/// Positive divisors of `|n|`, ascending. Empty for `n = 0`.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let current = divs.len();
        let mut pw = BigInt::one();
        for _ in 0..e {
            pw *= &p;
            for i in 0..current {
                let d = &divs[i] * &pw;
                divs.push(d);
            }
        }
    }
    divs.sort();
    divs
}
