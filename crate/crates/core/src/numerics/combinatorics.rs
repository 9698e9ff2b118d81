use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeff, Poly, QPoly, Rational};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Rising factorial `(a)_k = a(a+1)⋯(a+k-1)` of a rational.
pub fn pochhammer_rational(a: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| {
        acc * (a + Rational::from_integer(BigInt::from(j)))
    })
}

/// `∏_{j<k} (s + shift + j)` as a polynomial in `s`.
pub fn pochhammer_poly(shift: &Rational, k: usize) -> QPoly {
    rising_linear(&Rational::one(), shift, k)
}

/// `∏_{j<k} (slope·s + intercept + j)` over any coefficient ring.
pub fn rising_linear<R: Coeff>(slope: &R, intercept: &R, k: usize) -> Poly<R> {
    (0..k).fold(Poly::one(), |acc, j| {
        let factor = Poly::linear(intercept.clone() + &R::from_int(j as i64), slope.clone());
        &acc * &factor
    })
}

/// Row `k` of the signed Stirling numbers of the first kind, `s(k, 0..=k)`.
pub fn stirling_row(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..k {
        // s(m+1, j) = s(m, j-1) - m·s(m, j)
        let mut next = vec![BigInt::zero(); m + 2];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] -= BigInt::from(m) * v;
        }
        row = next;
    }
    row
}

/// Signed Stirling number of the first kind `s(k, j)`; zero outside `0 ≤ j ≤ k`.
pub fn stirling_first(k: i64, j: i64) -> Rational {
    if k < 0 || j < 0 || j > k {
        return Rational::zero();
    }
    Rational::from_integer(stirling_row(k as usize)[j as usize].clone())
}

/// `C(top, k) = (top - k + 1)_k / k!` for rational `top`.
pub fn binomial_rational(top: &Rational, k: usize) -> Rational {
    let start = top - Rational::from_integer(BigInt::from(k)) + Rational::one();
    pochhammer_rational(&start, k) / Rational::from_integer(factorial(k))
}
