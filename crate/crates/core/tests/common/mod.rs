//! Independent oracles and random inputs shared by the integration tests.
//!
//! Nothing here calls the code under test for the quantity being checked:
//! determinants come from Laplace expansion, partitions from a bounded
//! exhaustive search, the Invert transform from its coefficient recurrence.

#![allow(dead_code)]

use invseries::ring::{int, rat};
use invseries::series::TruncatedSeries;
use invseries::{MPoly, QSequence, Rational, Ring, Var};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 4`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn int_sequence(rng: &mut impl Rng, len: usize, lo: i64, hi: i64) -> QSequence {
    QSequence::new((0..len).map(|_| int(rng.gen_range(lo..=hi))).collect()).unwrap()
}

/// A sparse polynomial with up to `max_terms` terms in the given variables,
/// exponents below 3.
pub fn random_mpoly(rng: &mut impl Rng, vars: &[&str], max_terms: usize) -> MPoly {
    let mut p = MPoly::zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let mut term = MPoly::constant(small_rational(rng));
        for v in vars {
            term *= &MPoly::named(v).pow(rng.gen_range(0..3));
        }
        p += &term;
    }
    p
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det<R: Ring>(m: &[Vec<R>]) -> R {
    match m.len() {
        0 => R::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].clone() * &cofactor_det(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

/// All multiplicity vectors `(ν_1 … ν_m)` with `Σ jν_j = m`, found by
/// scanning the full box `0 ≤ ν_j ≤ m/j`. Trailing zeros trimmed.
pub fn brute_partitions(m: u32) -> Vec<Vec<u32>> {
    let m = m as usize;
    let bounds: Vec<usize> = (1..=m).map(|j| m / j).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; m];
    loop {
        let weight: usize = cur
            .iter()
            .enumerate()
            .map(|(i, &v)| (i + 1) * v as usize)
            .sum();
        if weight == m {
            let mut v = cur.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
        }
        // odometer increment over the box
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            if (cur[i] as usize) < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// `b = I(a)` from the `t^{n+1}` coefficient of `(1 + tA)(1 - tB) = 1`:
/// `b_n = a_n - Σ_{i<n} a_i b_{n-1-i}`.
pub fn invert_by_recurrence<R: Ring>(a: &[R]) -> Vec<R> {
    let mut b: Vec<R> = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        let mut v = a[n].clone();
        for i in 0..n {
            v -= &(a[i].clone() * &b[n - 1 - i]);
        }
        b.push(v);
    }
    b
}

/// `Σ c_i v^i` as a polynomial, for multiplying series through `MPoly`.
pub fn series_as_poly(s: &TruncatedSeries<Rational>) -> MPoly {
    let v = MPoly::var(s.var());
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| v.pow(i as u32).scale_by(c))
        .fold(MPoly::zero(), |acc, t| acc + t)
}

/// Coefficients `0..=order` of a univariate polynomial in `v`.
pub fn poly_coeffs(p: &MPoly, v: Var, order: usize) -> Vec<Rational> {
    let cs = p.coefficients_in(v);
    (0..=order)
        .map(|i| {
            cs.get(i)
                .map(|c| c.as_constant().expect("univariate"))
                .unwrap_or_else(Rational::zero)
        })
        .collect()
}

pub fn random_series(rng: &mut impl Rng, var: Var, order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(var, order, |_| small_rational(rng))
}
