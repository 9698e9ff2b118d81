use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ring_ops, to_f64, Coeff, Rational};

/// Element of the ring of finite sums `q·(√2)^δ·π^{b/2}` with `q ∈ ℚ`,
/// `δ ∈ {0, 1}` and `b ∈ ℤ`.
///
/// Integer powers of two live in `q`, so `(δ, b)` keys a basis over ℚ and
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExactScalar {
    terms: BTreeMap<(u8, i64), Rational>,
}

impl ExactScalar {
    pub fn from_rational(q: Rational) -> Self {
        Self::monomial(q, false, 0)
    }

    /// `q·(√2)^δ·π^{b/2}`.
    pub fn monomial(q: Rational, sqrt2: bool, pi_half_exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert((sqrt2 as u8, pi_half_exponent), q);
        }
        ExactScalar { terms }
    }

    /// `2^{k/2}` for any integer `k`.
    pub fn two_pow_half(k: i64) -> Self {
        let whole = k.div_euclid(2);
        let odd = k.rem_euclid(2) == 1;
        Self::monomial(pow2(whole), odd, 0)
    }

    /// `π^{b/2}`.
    pub fn pi_pow_half(b: i64) -> Self {
        Self::monomial(Rational::one(), false, b)
    }

    pub fn sqrt2() -> Self {
        Self::two_pow_half(1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((bool, i64), &Rational)> {
        self.terms.iter().map(|(&(d, b), q)| ((d == 1, b), q))
    }

    /// The rational coefficient when the scalar is a plain rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Inverse of a single-term scalar. Sums of two or more terms are not
    /// invertible inside this representation.
    pub fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(d, b), q) = self.terms.iter().next()?;
        // (√2)^{-1} = √2 / 2
        let coeff = if d == 1 {
            q.recip() / Rational::from_integer(BigInt::from(2))
        } else {
            q.recip()
        };
        Some(Self::monomial(coeff, d == 1, -b))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::from_rational(Rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&(d, b), q)| {
                let root = if d == 1 { SQRT_2 } else { 1.0 };
                to_f64(q) * root * PI.powf(b as f64 / 2.0)
            })
            .sum()
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (key, q) in &other.terms {
            let entry = terms.entry(*key).or_insert_with(Rational::zero);
            *entry += q;
            if entry.is_zero() {
                terms.remove(key);
            }
        }
        ExactScalar { terms }
    }

    fn neg_ref(&self) -> Self {
        ExactScalar {
            terms: self.terms.iter().map(|(k, q)| (*k, -q)).collect(),
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = ExactScalar::default();
        for (&(d1, b1), q1) in &self.terms {
            for (&(d2, b2), q2) in &other.terms {
                let mut q = q1 * q2;
                if d1 == 1 && d2 == 1 {
                    q *= Rational::from_integer(BigInt::from(2));
                }
                out = out.add_ref(&Self::monomial(q, (d1 ^ d2) == 1, b1 + b2));
            }
        }
        out
    }
}

fn pow2(k: i64) -> Rational {
    let p = Rational::from_integer(num_traits::pow(BigInt::from(2), k.unsigned_abs() as usize));
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

ring_ops!(ExactScalar);

impl Zero for ExactScalar {
    fn zero() -> Self {
        ExactScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl Coeff for ExactScalar {
    fn from_rational(q: &Rational) -> Self {
        ExactScalar::from_rational(q.clone())
    }
}

impl From<Rational> for ExactScalar {
    fn from(q: Rational) -> Self {
        ExactScalar::from_rational(q)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(d, b), q)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if q.is_negative() { " - " } else { " + " })?;
            } else if q.is_negative() {
                f.write_str("-")?;
            }
            write!(f, "{}", q.abs())?;
            if d == 1 {
                f.write_str("·√2")?;
            }
            match b {
                0 => {}
                b if b % 2 == 0 => write!(f, "·π^{}", b / 2)?,
                b => write!(f, "·π^({b}/2)")?,
            }
        }
        Ok(())
    }
}
