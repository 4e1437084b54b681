mod common;

use common::{eisenstein_poly, gcd, generalized_instance, random_poly};
use irreducible_core::criteria::run_all_at_prime;
use irreducible_core::{
    auto_check, build_diagram, eisenstein_check, generalized_check, k2_structure_check, kronecker_factor,
    reversed_eisenstein_check, verify_verdict, AutoConfig, DiagramVertex, InconclusiveReason,
    IntegerPolynomial, OracleLimits, VerdictKind, VerificationOutcome,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly_with_constant() -> impl Strategy<Value = IntegerPolynomial> {
    (prop::collection::vec(-200i64..=200, 1..7), 1i64..=60).prop_map(|(mut c, lead)| {
        if c[0] == 0 {
            c[0] = 18;
        }
        c.push(lead);
        IntegerPolynomial::from_i64s(&c)
    })
}

proptest! {
    #[test]
    fn k1_is_eisenstein(f in poly_with_constant(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let e = eisenstein_check(&f, p).unwrap();
        let g = generalized_check(&f, p, 1).unwrap();
        prop_assert_eq!(e.kind, g.kind);
        prop_assert_eq!(e.reason, g.reason);
    }

    #[test]
    fn reversal_duality(f in poly_with_constant(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let r = reversed_eisenstein_check(&f, p).unwrap();
        let e = eisenstein_check(&f.reverse().unwrap(), p).unwrap();
        prop_assert_eq!(r.kind, e.kind);
    }

    #[test]
    fn odd_degree_k2_agrees_with_generalized(f in poly_with_constant(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let n = f.degree().unwrap();
        let g = generalized_check(&f, p, 2).unwrap();
        let k2 = k2_structure_check(&f, p).unwrap();
        if g.is_irreducible() {
            prop_assert!(n % 2 == 1);
            prop_assert_eq!(k2.kind, VerdictKind::Irreducible);
        }
        if n % 2 == 0 {
            prop_assert!(!g.is_irreducible());
        }
    }
}

#[test]
fn k1_equivalence_on_shaped_inputs() {
    // Random inputs rarely satisfy Eisenstein, so also test near-Eisenstein shapes.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..500 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let deg = rng.gen_range(1..=6);
        let mut f = eisenstein_poly(&mut rng, deg, p);
        if rng.gen_bool(0.5) {
            let mut c = f.clone().into_coeffs();
            let i = rng.gen_range(0..c.len());
            c[i] += rng.gen_range(-3..=3) * p as i64;
            f = IntegerPolynomial::new(c);
        }
        if f.degree().unwrap_or(0) == 0 {
            continue;
        }
        let e = eisenstein_check(&f, p).unwrap();
        let g = generalized_check(&f, p, 1).unwrap();
        assert_eq!((e.kind, &e.reason), (g.kind, &g.reason), "{f} at {p}");
    }
}

#[test]
fn generalized_hypotheses_give_one_simple_segment() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    while checked < 250 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let k = rng.gen_range(1..=6u32);
        let n = rng.gen_range(1..=9usize);
        if gcd(n as u64, k as u64) != 1 {
            continue;
        }
        let f = generalized_instance(&mut rng, n, p, k);
        assert!(generalized_check(&f, p, k).unwrap().is_irreducible(), "{f} p={p} k={k}");
        let d = build_diagram(&f, p).unwrap();
        assert_eq!(d.segments.len(), 1, "{f}");
        assert_eq!(d.segments[0].start, DiagramVertex::new(0, k as u64));
        assert_eq!(d.segments[0].end, DiagramVertex::new(n, 0));
        assert!(d.segments[0].simple);
        checked += 1;
    }
}

#[test]
fn k3_instance_with_degree_coprime_to_three() {
    // x^5 + 8x + 8 at p = 2 is covered by the k = 3 case and is irreducible.
    let f = IntegerPolynomial::from_i64s(&[8, 8, 0, 0, 0, 1]);
    assert!(generalized_check(&f, 2, 3).unwrap().is_irreducible());
    assert!(kronecker_factor(&f, &OracleLimits::default()).unwrap().is_irreducible());
    // Degree divisible by 3: x^3 - 8 = (x - 2)(x^2 + 2x + 4) must not fire.
    let g = IntegerPolynomial::from_i64s(&[-8, 0, 0, 1]);
    let v = generalized_check(&g, 2, 3).unwrap();
    assert_eq!(v.reason, Some(InconclusiveReason::NotCoprime { k: 3, degree: 3, gcd: 3 }));
}

#[test]
fn k4_instance_with_odd_degree() {
    // x^3 + 81x^2 + 81 at p = 3 (k = 4, n = 3).
    let f = IntegerPolynomial::from_i64s(&[81, 0, 81, 1]);
    assert!(generalized_check(&f, 3, 4).unwrap().is_irreducible());
    assert!(kronecker_factor(&f, &OracleLimits::default()).unwrap().is_irreducible());
    // n = 2 shares a factor with 4: x^2 - 16 = (x - 4)(x + 4).
    let g = IntegerPolynomial::from_i64s(&[-16, 0, 1]);
    assert!(!generalized_check(&g, 2, 4).unwrap().is_irreducible());
    // n = 4 as well: x^4 - 16 = (x - 2)(x + 2)(x^2 + 4).
    let h = IntegerPolynomial::from_i64s(&[-16, 0, 0, 0, 1]);
    assert!(!generalized_check(&h, 2, 4).unwrap().is_irreducible());
}

fn reducible_corpus() -> Vec<IntegerPolynomial> {
    let mut corpus = Vec::new();
    for p in [2i64, 3, 5, 7] {
        corpus.push(IntegerPolynomial::from_i64s(&[-p * p, 0, 1]));
        corpus.push(IntegerPolynomial::from_i64s(&[-p * p * p, 0, 0, 1]));
    }
    corpus.push(IntegerPolynomial::from_i64s(&[150, 50, 25, 5, 1]));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let (dg, dh) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let g = eisenstein_poly(&mut rng, dg, p);
        let h = eisenstein_poly(&mut rng, dh, p);
        corpus.push(&g * &h);
    }
    corpus
}

#[test]
fn auto_never_claims_irreducible_on_reducible_corpus() {
    let cfg = AutoConfig::default();
    for f in reducible_corpus() {
        assert!(!kronecker_factor(&f, &OracleLimits::default()).unwrap().is_irreducible());
        let r = auto_check(&f, &cfg).unwrap();
        assert!(!r.verdict.is_irreducible(), "{f}: {}", r.verdict);
        assert!(r.attempts.iter().all(|v| !v.is_irreducible()), "{f}");
    }
}

#[test]
fn all_verdicts_agree_with_oracle_on_random_quartics() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let limits = OracleLimits::default();
    for _ in 0..300 {
        let (deg, monic) = (rng.gen_range(1..=4), rng.gen_bool(0.5));
        let mut f = random_poly(&mut rng, deg, 60, monic);
        if f.constant_term() == 0.into() {
            f = &f + &IntegerPolynomial::from_i64s(&[30]);
        }
        if f.positive_degree().is_err() {
            continue;
        }
        let candidates = irreducible_core::candidate_primes(&f, 1000).unwrap();
        let mut verdicts = Vec::new();
        for &p in &candidates.primes {
            run_all_at_prime(&f, p, 8, false, &mut verdicts).unwrap();
        }
        verdicts.push(auto_check(&f, &AutoConfig::default()).unwrap().verdict);
        for v in &verdicts {
            let outcome = verify_verdict(&f, v, &limits);
            assert_eq!(outcome, VerificationOutcome::Consistent, "{f}: {v}");
        }
    }
}
