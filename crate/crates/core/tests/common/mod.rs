//! Test-only oracles and generators, shared with the CLI acceptance suite.
#![allow(dead_code)]

use std::cmp::Ordering;

use irreducible_core::{DiagramVertex, IntegerPolynomial};
use num_bigint::BigInt;
use rand::Rng;

/// `v` relative to the line through `a` and `b`, by cross product.
fn side(a: DiagramVertex, b: DiagramVertex, v: DiagramVertex) -> Ordering {
    let (ax, ay) = (a.index as i128, a.val as i128);
    let (bx, by) = (b.index as i128, b.val as i128);
    let (vx, vy) = (v.index as i128, v.val as i128);
    // cross((b - a), (v - a)) > 0 means v is to the left, i.e. above for bx > ax.
    let cross = (bx - ax) * (vy - ay) - (by - ay) * (vx - ax);
    cross.cmp(&0)
}

/// Lower hull edges by brute force: `(a, b)` is an edge iff no vertex lies
/// strictly below its line and every vertex on the line lies between `a` and `b`.
pub fn naive_lower_hull(vertices: &[DiagramVertex]) -> Vec<(DiagramVertex, DiagramVertex)> {
    let mut edges = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            let mut ok = true;
            for &v in vertices {
                match side(a, b, v) {
                    Ordering::Less => ok = false,
                    Ordering::Equal if v.index < a.index || v.index > b.index => ok = false,
                    _ => {}
                }
                if !ok {
                    break;
                }
            }
            if ok {
                edges.push((a, b));
            }
        }
    }
    edges.sort();
    edges
}

/// Integer points on the closed segment, found by scanning every column.
pub fn enumerate_lattice_points(a: DiagramVertex, b: DiagramVertex) -> Vec<(usize, u64)> {
    let mut out = Vec::new();
    let di = (b.index - a.index) as i64;
    let dv = b.val as i64 - a.val as i64;
    for x in a.index..=b.index {
        let num = (x - a.index) as i64 * dv;
        if num % di == 0 {
            out.push((x, (a.val as i64 + num / di) as u64));
        }
    }
    out
}

/// Sorted vertex set with indices `0` and `degree` always present.
pub fn random_vertices(rng: &mut impl Rng, max_degree: usize, max_val: u64) -> Vec<DiagramVertex> {
    let n = rng.gen_range(1..=max_degree);
    let density = rng.gen_range(0.05..1.0);
    let mut out = Vec::new();
    for i in 0..=n {
        if i == 0 || i == n || rng.gen_bool(density) {
            out.push(DiagramVertex::new(i, rng.gen_range(0..=max_val)));
        }
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn nonzero(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

fn unit_mod(rng: &mut impl Rng, p: i64, bound: i64) -> i64 {
    loop {
        let v = nonzero(rng, bound);
        if v % p != 0 {
            return v;
        }
    }
}

/// Random `f` of degree `n` with `p ∤ a_n`, `p^k | a_j` (`j < n`), `p^(k+1) ∤ a_0`.
pub fn generalized_instance(rng: &mut impl Rng, n: usize, p: u64, k: u32) -> IntegerPolynomial {
    let pk = BigInt::from(p).pow(k);
    let pi = p as i64;
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(&pk * unit_mod(rng, pi, 12));
    for _ in 1..n {
        coeffs.push(&pk * rng.gen_range(-4i64..=4));
    }
    coeffs.push(BigInt::from(unit_mod(rng, pi, 9)));
    IntegerPolynomial::new(coeffs)
}

/// Random Eisenstein polynomial at `p` of degree `d`.
pub fn eisenstein_poly(rng: &mut impl Rng, d: usize, p: u64) -> IntegerPolynomial {
    let pi = p as i64;
    let mut coeffs = vec![pi * unit_mod(rng, pi, 6)];
    for _ in 1..d {
        coeffs.push(pi * rng.gen_range(-4i64..=4));
    }
    coeffs.push(unit_mod(rng, pi, 5).abs());
    IntegerPolynomial::from_i64s(&coeffs)
}

/// Random `g` with `p ∤ lead(g)` and `p | ` every other coefficient, constant
/// possibly highly divisible (zero excluded).
pub fn divisible_factor(rng: &mut impl Rng, d: usize, p: u64) -> IntegerPolynomial {
    let pi = p as i64;
    let mut coeffs = vec![pi * nonzero(rng, 6)];
    for _ in 1..d {
        coeffs.push(pi * rng.gen_range(-4i64..=4));
    }
    coeffs.push(unit_mod(rng, pi, 5));
    IntegerPolynomial::from_i64s(&coeffs)
}

pub fn random_poly(rng: &mut impl Rng, degree: usize, bound: i64, monic: bool) -> IntegerPolynomial {
    let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    coeffs.push(if monic { 1 } else { nonzero(rng, bound) });
    IntegerPolynomial::from_i64s(&coeffs)
}
