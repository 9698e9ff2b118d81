use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;

use super::Rational;

/// Exact half-integer `k/2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct HalfInteger {
    pub twice_value: i64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { twice_value: 0 };
    pub const HALF: HalfInteger = HalfInteger { twice_value: 1 };

    pub fn from_twice(twice_value: i64) -> Self {
        HalfInteger { twice_value }
    }

    pub fn from_int(k: i64) -> Self {
        HalfInteger { twice_value: 2 * k }
    }

    pub fn is_integer(&self) -> bool {
        self.twice_value % 2 == 0
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.twice_value), BigInt::from(2))
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger::from_twice(self.twice_value + rhs.twice_value)
    }
}

impl From<HalfInteger> for Rational {
    fn from(h: HalfInteger) -> Rational {
        h.to_rational()
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice_value / 2)
        } else {
            write!(f, "{}/2", self.twice_value)
        }
    }
}
