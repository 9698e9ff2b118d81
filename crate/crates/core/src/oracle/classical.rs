//! Classical orthogonal polynomials by their three-term recurrences.
//!
//! Deliberately independent of the hypergeometric builders: these are the
//! second route in every cross-check.

use crate::numerics::{int, QPoly, Rational};

/// Generalized Laguerre `L_n^α(x)` with exact coefficients.
pub fn laguerre_poly(n: usize, alpha: &Rational) -> QPoly {
    // (k+1) L_{k+1} = (2k + 1 + α - x) L_k - (k + α) L_{k-1}
    let mut prev = QPoly::zero();
    let mut cur = QPoly::one();
    for k in 0..n {
        let kk = int(k as i64);
        let lin = QPoly::linear(&kk * int(2) + int(1) + alpha, int(-1));
        let next = (&(&lin * &cur) - &prev.scale(&(&kk + alpha))).scale(&(int(1) / (&kk + int(1))));
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_0^α(x), …, L_n^α(x)` at a rational point.
pub fn laguerre_values(n: usize, alpha: &Rational, x: &Rational) -> Vec<Rational> {
    let mut out = vec![int(1)];
    if n >= 1 {
        out.push(int(1) + alpha - x);
    }
    for k in 1..n {
        let kk = int(k as i64);
        let next = ((&kk * int(2) + int(1) + alpha - x) * &out[k] - (&kk + alpha) * &out[k - 1])
            / (&kk + int(1));
        out.push(next);
    }
    out
}

pub fn laguerre_f64(n: usize, alpha: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite `H_n(x)`.
pub fn hermite_poly(n: usize) -> QPoly {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    let two_x = QPoly::linear(int(0), int(2));
    let mut prev = QPoly::zero();
    let mut cur = QPoly::one();
    for k in 0..n {
        let next = &(&two_x * &cur) - &prev.scale(&int(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

pub fn hermite_f64(n: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}
