use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{ring_ops, to_f64, Coeff, Rational};

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRat {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `i^k`, with negative `k` allowed.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussRat::one(),
            1 => GaussRat::i(),
            2 => -GaussRat::one(),
            _ => -GaussRat::i(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    fn add_ref(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn neg_ref(&self) -> Self {
        GaussRat {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

ring_ops!(GaussRat);

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::real(Rational::one())
    }
}

impl Coeff for GaussRat {
    fn from_rational(q: &Rational) -> Self {
        GaussRat::real(q.clone())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}
