//! Exact arithmetic kernel.
//!
//! Everything downstream (series, Gamma normal forms, zero certificates) is
//! built on the types here: arbitrary-precision rationals, the ring of
//! finite sums `q·(√2)^δ·π^{b/2}`, Gaussian rationals, `ℚ(√2)`, and dense
//! univariate polynomials over any of them.

mod combinatorics;
mod gauss;
mod half;
mod poly;
mod scalar;
mod sqrt2;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use combinatorics::{
    binomial_rational, factorial, pochhammer_poly, pochhammer_rational, rising_linear,
    stirling_first, stirling_row,
};
pub use gauss::GaussRat;
pub use half::HalfInteger;
pub use poly::{Parity, Poly, QPoly};
pub use scalar::ExactScalar;
pub use sqrt2::Sqrt2Value;
pub use sturm::{
    poly_gcd, squarefree_part, sturm_isolate, RootInterval, SignEvaluator, SturmChain,
};

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Coefficient ring for [`Poly`].
///
/// Every ring used here contains ℚ, so `from_rational` is the canonical
/// embedding.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_int(k: i64) -> Self {
        Self::from_rational(&int(k))
    }
}

impl Coeff for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Parse `"p/q"`, `"p"` or a finite decimal such as `"-0.25"` exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Ok(q) = text.parse::<Rational>() {
        return Some(q);
    }
    let (sign, body) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.')?;
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    Some(Rational::new(digits * sign, scale))
}

/// Exact rational image of a finite double.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Implements the owned/borrowed arithmetic operator matrix for a ring
/// type that provides `add_ref`, `sub_ref`, `mul_ref` and `neg_ref`.
macro_rules! ring_ops {
    ($t:ty) => {
        impl<'a, 'b> std::ops::Add<&'b $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'b $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl<'a> std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl std::ops::Add<$t> for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                self.add_ref(&rhs)
            }
        }
        impl<'a, 'b> std::ops::Sub<&'b $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'b $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl std::ops::Sub<$t> for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                self.sub_ref(&rhs)
            }
        }
        impl<'a, 'b> std::ops::Mul<&'b $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'b $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl std::ops::Mul<$t> for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                self.mul_ref(&rhs)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl<'a> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
    };
}
pub(crate) use ring_ops;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("7/3"), Some(rat(7, 3)));
        assert_eq!(parse_rational("-1/2"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("0"), Some(int(0)));
        assert_eq!(parse_rational("-0.25"), Some(rat(-1, 4)));
        assert_eq!(parse_rational("2.5"), Some(rat(5, 2)));
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
    }

    #[test]
    fn float_embedding_is_exact() {
        assert_eq!(rational_from_f64(0.5), Some(rat(1, 2)));
        assert_eq!(rational_from_f64(-3.0), Some(int(-3)));
        assert_eq!(to_f64(&rat(1, 4)), 0.25);
    }
}
