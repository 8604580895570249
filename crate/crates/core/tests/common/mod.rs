//! Test-side oracles, independent of the library's closed forms.

#![allow(dead_code)]

use bookhopf::{BookAlgebra, CycScalar, CyclotomicField, Monomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
    G,
}

impl Letter {
    fn rank(self) -> u8 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
            Letter::G => 2,
        }
    }
}

pub fn word(m: Monomial) -> Vec<Letter> {
    let mut w = vec![Letter::X; m.b as usize];
    w.extend(std::iter::repeat_n(Letter::Y, m.c as usize));
    w.extend(std::iter::repeat_n(Letter::G, m.a as usize));
    w
}

/// Normalizes `m1 · m2` by bubbling letters into x < y < g order one
/// adjacent swap at a time, using only
/// `g·x → q x·g`, `g·y → q^{-s} y·g`, `y·x → q^{s} x·y`.
/// Returns the `q`-exponent mod `p` and the normal monomial, or `None`
/// if the product vanishes by `x^p = y^p = 0`.
pub fn rewrite_product(p: u32, s: u32, m1: Monomial, m2: Monomial) -> Option<(u32, Monomial)> {
    let mut w = word(m1);
    w.extend(word(m2));
    let (p, s) = (p as i64, s as i64);
    let mut exponent: i64 = 0;
    while let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k].rank() > w[k + 1].rank()) {
        exponent += match (w[k], w[k + 1]) {
            (Letter::G, Letter::X) => 1,
            (Letter::G, Letter::Y) => -s,
            (Letter::Y, Letter::X) => s,
            _ => unreachable!(),
        };
        w.swap(k, k + 1);
    }
    let count = |l: Letter| w.iter().filter(|&&c| c == l).count() as i64;
    let (b, c, a) = (count(Letter::X), count(Letter::Y), count(Letter::G));
    if b >= p || c >= p {
        return None;
    }
    Some((
        exponent.rem_euclid(p) as u32,
        Monomial::new(b as u8, c as u8, (a % p) as u8),
    ))
}

/// Integer polynomial in `q`, low degree first.
pub type QPoly = Vec<i64>;

/// Gaussian binomial `[n, k]_q` by the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn gaussian_binomial(n: usize, k: usize) -> QPoly {
    let mut row: Vec<QPoly> = vec![vec![1]];
    for m in 1..=n {
        let mut next = vec![vec![0]; m + 1];
        for j in 0..=m {
            let mut acc = vec![0i64; m * m + 1];
            if j >= 1 {
                for (d, c) in row[j - 1].iter().enumerate() {
                    acc[d] += c;
                }
            }
            if j < m {
                for (d, c) in row[j].iter().enumerate() {
                    acc[d + j] += c;
                }
            }
            while acc.len() > 1 && *acc.last().unwrap() == 0 {
                acc.pop();
            }
            next[j] = acc;
        }
        row = next;
    }
    if k > n {
        vec![0]
    } else {
        row[k].clone()
    }
}

/// Evaluates `poly` at `q^step` in `Q(ζ_p)`.
pub fn eval_qpoly(field: CyclotomicField, poly: &QPoly, step: i64) -> CycScalar {
    poly.iter().enumerate().fold(field.zero(), |acc, (d, &c)| {
        acc + field.from_int(c) * field.root_power(step * d as i64)
    })
}

pub fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

pub fn basis_pairs(h: &BookAlgebra) -> impl Iterator<Item = (Monomial, Monomial)> + '_ {
    h.basis()
        .flat_map(move |m1| h.basis().map(move |m2| (m1, m2)))
}

pub fn random_monomial(rng: &mut ChaCha8Rng, p: u32) -> Monomial {
    Monomial::from_index(p, rng.gen_range(0..(p * p * p) as usize))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All `(p, s)` with `p ∈ {3, 5, 7}`, `s ∈ 1..p`.
pub fn admissible_parameters() -> impl Iterator<Item = (u32, u32)> {
    [3u32, 5, 7]
        .into_iter()
        .flat_map(|p| (1..p).map(move |s| (p, s)))
}
