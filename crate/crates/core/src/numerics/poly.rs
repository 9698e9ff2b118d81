use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Coeff, Rational};

/// Dense univariate polynomial; `coeffs[k]` multiplies `s^k`.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list and `degree` is `len - 1` otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

pub type QPoly = Poly<Rational>;

impl<R: Coeff> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c0 + c1·s`
    pub fn linear(c0: R, c1: R) -> Self {
        Poly::new(vec![c0, c1])
    }

    /// The variable `s` itself.
    pub fn var() -> Self {
        Poly::linear(R::zero(), R::one())
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.clone() * &R::from_int(k as i64))
                .collect(),
        )
    }

    /// Horner evaluation inside the coefficient ring.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, a| acc * x + a)
    }

    /// `P(c1·s + c0)`.
    pub fn compose_linear(&self, c1: &R, c0: &R) -> Self {
        self.compose(&Poly::linear(c0.clone(), c1.clone()))
    }

    /// `P(Q(s))`.
    pub fn compose(&self, inner: &Poly<R>) -> Self {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, a| {
            &(&acc * inner) + &Poly::constant(a.clone())
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Poly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(R, &R) -> R) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| f(self.coeff(k), &other.coeff(k))).collect())
    }
}

impl<R: Coeff> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Coeff> One for Poly<R> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<R: Coeff> Add<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<R: Coeff> Sub<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<R: Coeff> Mul<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<R: Coeff> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Coeff> $tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
        impl<R: Coeff> $tr<&Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &Poly<R>) -> Poly<R> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Coeff> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Coeff> Coeff for Poly<R> {
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(R::from_rational(q))
    }
}

impl QPoly {
    /// Exact division with remainder over ℚ.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Scaled to leading coefficient 1; the zero polynomial is returned as is.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => QPoly::zero(),
        }
    }

    /// Polynomials with every odd (or every even) coefficient zero.
    pub fn parity(&self) -> Option<Parity> {
        let odd_zero = self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero);
        let even_zero = self.coeffs.iter().step_by(2).all(Zero::is_zero);
        match (odd_zero, even_zero) {
            (true, _) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }

    /// Write with the given variable name, ascending powers: `1 - 2 s + 2 s^2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let body = match k {
                0 => mag.to_string(),
                _ => {
                    let power = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if mag.is_one() {
                        power
                    } else {
                        format!("{mag} {power}")
                    }
                }
            };
            out.push_str(&body);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("s"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat, GaussRat};

    fn q(cs: &[i64]) -> QPoly {
        QPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn derivative_of_linear_is_constant() {
        assert_eq!(q(&[1, -2]).derivative(), q(&[-2]));
        assert!(q(&[5]).derivative().is_zero());
        assert_eq!(q(&[1, 2, 3]).derivative().degree(), Some(1));
    }

    #[test]
    fn reflection_substitution() {
        // 1 - 2(1 - s) = 2s - 1
        let p = q(&[1, -2]);
        assert_eq!(p.compose_linear(&int(-1), &int(1)), q(&[-1, 2]));
    }

    #[test]
    fn quadratic_vanishes_at_gaussian_root() {
        // 2s^2 - 2s + 1 at s = 1/2 + i/2; roots from the quadratic formula.
        let p = q(&[1, -2, 2]).map(GaussRat::from_rational);
        let z = GaussRat::new(rat(1, 2), rat(1, 2));
        assert!(p.eval(&z).is_zero());
        assert!(!p.eval(&GaussRat::new(rat(1, 2), rat(1, 3))).is_zero());
    }

    #[test]
    fn division_reconstructs_dividend() {
        let a = q(&[3, 0, -1, 4, 2]);
        let b = q(&[1, 1, 3]);
        let (qt, r) = a.div_rem(&b);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(&(&qt * &b) + &r, a);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = QPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(&q(&[1, 1]) - &q(&[1, 1]), QPoly::zero());
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(q(&[1, -2]).to_string(), "1 - 2 s");
        assert_eq!(q(&[1, -2, 2]).to_string(), "1 - 2 s + 2 s^2");
        assert_eq!(
            QPoly::new(vec![int(0), rat(-4, 3), int(1)]).to_string(),
            "-4/3 s + s^2"
        );
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn parity_detection() {
        assert_eq!(q(&[1, 0, -2]).parity(), Some(Parity::Even));
        assert_eq!(q(&[0, -2]).parity(), Some(Parity::Odd));
        assert_eq!(q(&[1, -2]).parity(), None);
    }
}
