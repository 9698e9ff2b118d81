use std::f64::consts::SQRT_2;

use num_traits::{One, Zero};

use super::{ring_ops, to_f64, Coeff, Rational};

/// `a + b√2` in the field ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sqrt2Value {
    pub a: Rational,
    pub b: Rational,
}

impl Sqrt2Value {
    pub fn new(a: Rational, b: Rational) -> Self {
        Sqrt2Value { a, b }
    }

    pub fn sqrt2() -> Self {
        Sqrt2Value::new(Rational::zero(), Rational::one())
    }

    pub fn rational(a: Rational) -> Self {
        Sqrt2Value::new(a, Rational::zero())
    }

    /// Field inverse `(a - b√2)/(a² - 2b²)`; `None` only for zero.
    pub fn inv(&self) -> Option<Self> {
        let two = Rational::from_integer(2.into());
        let norm = &self.a * &self.a - &two * &self.b * &self.b;
        if norm.is_zero() {
            return None;
        }
        Some(Sqrt2Value::new(&self.a / &norm, -(&self.b / &norm)))
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * SQRT_2
    }

    fn add_ref(&self, o: &Self) -> Self {
        Sqrt2Value::new(&self.a + &o.a, &self.b + &o.b)
    }

    fn sub_ref(&self, o: &Self) -> Self {
        Sqrt2Value::new(&self.a - &o.a, &self.b - &o.b)
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let two = Rational::from_integer(2.into());
        Sqrt2Value::new(
            &self.a * &o.a + two * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }

    fn neg_ref(&self) -> Self {
        Sqrt2Value::new(-&self.a, -&self.b)
    }
}

ring_ops!(Sqrt2Value);

impl Zero for Sqrt2Value {
    fn zero() -> Self {
        Sqrt2Value::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Sqrt2Value {
    fn one() -> Self {
        Sqrt2Value::rational(Rational::one())
    }
}

impl Coeff for Sqrt2Value {
    fn from_rational(q: &Rational) -> Self {
        Sqrt2Value::rational(q.clone())
    }
}
