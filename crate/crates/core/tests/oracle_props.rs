mod common;

use common::{eisenstein_poly, divisible_factor, random_poly};
use irreducible_core::{
    check_factor_divisibility, k2_structure_check, kronecker_factor, rational_roots, verify_verdict,
    IntegerPolynomial, OracleLimits, VerdictKind, VerificationOutcome,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_poly() -> impl Strategy<Value = IntegerPolynomial> {
    (prop::collection::vec(-12i64..=12, 1..4), 1i64..=4).prop_map(|(mut c, lead)| {
        c.push(lead);
        IntegerPolynomial::from_i64s(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_are_split(g in small_poly(), h in small_poly()) {
        let f = &g * &h;
        let res = kronecker_factor(&f, &OracleLimits::default()).unwrap();
        prop_assert_eq!(res.reconstruct(), f.clone());
        let nonconstant = [&g, &h].iter().filter(|q| q.degree().unwrap() > 0).count() as u32;
        prop_assert!(res.factor_count() >= nonconstant);
        for (q, _) in &res.factors {
            let again = kronecker_factor(q, &OracleLimits::default()).unwrap();
            prop_assert!(again.is_irreducible());
            prop_assert_eq!(&again.factors[0].0, q);
        }
    }

    #[test]
    fn rational_roots_are_roots(g in small_poly()) {
        prop_assume!(g.constant_term() != BigInt::from(0));
        for r in rational_roots(&g).unwrap() {
            let lin = IntegerPolynomial::linear(r.denom().clone(), -r.numer().clone());
            prop_assert!(g.div_exact(&lin).is_some());
        }
    }
}

#[test]
fn irreducible_factor_degrees_are_brute_force_minimal() {
    // For every factor found, no monic quadratic with small coefficients divides it.
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..40 {
        let f = random_poly(&mut rng, 4, 9, true);
        if f.constant_term() == BigInt::from(0) {
            continue;
        }
        let res = kronecker_factor(&f, &OracleLimits::default()).unwrap();
        for (q, _) in &res.factors {
            if q.degree() != Some(4) {
                continue;
            }
            // A monic quartic with |coeff| <= 9 can only have monic quadratic factors with
            // constant dividing a_0; the middle coefficient is then bounded by root size.
            for b in -30i64..=30 {
                for c in -9i64..=9 {
                    if c == 0 {
                        continue;
                    }
                    let cand = IntegerPolynomial::from_i64s(&[c, b, 1]);
                    assert!(q.div_exact(&cand).is_none(), "{q} divisible by {cand}");
                }
            }
        }
    }
}

#[test]
fn factors_inherit_divisibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let limits = OracleLimits::default();
    let mut checked = 0;
    while checked < 320 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let (dg, dh) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let g = divisible_factor(&mut rng, dg, p);
        let h = divisible_factor(&mut rng, dh, p);
        let f = &g * &h;
        let res = kronecker_factor(&f, &limits).unwrap();
        assert_eq!(check_factor_divisibility(&f, p, &res), Ok(true), "{f} = {res} at {p}");
        checked += 1;
    }
}

#[test]
fn products_of_two_eisenstein_halves_are_consistent_dichotomies() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let limits = OracleLimits::default();
    let mut checked = 0;
    while checked < 120 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let d = rng.gen_range(1..=3);
        let f = &eisenstein_poly(&mut rng, d, p) * &eisenstein_poly(&mut rng, d, p);
        let v = k2_structure_check(&f, p).unwrap();
        if v.kind == VerdictKind::Inconclusive {
            // p^2 | a_j for j <= n/2 can fail for d >= 2; only count instances meeting it.
            continue;
        }
        assert_eq!(v.kind, VerdictKind::IrreducibleOrTwoEisensteinHalves);
        assert_eq!(v.half_degree, Some(d));
        assert_eq!(verify_verdict(&f, &v, &limits), VerificationOutcome::Consistent, "{f}");
        checked += 1;
    }
}
