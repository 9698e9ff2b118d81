//! Terminating Gauss hypergeometric series as exact polynomials.
//!
//! With a numerator parameter `-n` the series `₂F₁(-n, b; c; z)` has `n + 1`
//! terms, so it is exact in rational arithmetic even at `z = 2`, far outside
//! the disc of convergence. When `b` is linear in `s` the result is a
//! polynomial in `s` of degree `n`.

use num_traits::{One, Zero};

use crate::error::{MellinError, Result};
use crate::numerics::{int, Coeff, Poly, QPoly, Rational};

/// `slope·s + intercept`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub slope: Rational,
    pub intercept: Rational,
}

impl LinearForm {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        LinearForm { slope, intercept }
    }

    pub fn constant(c: Rational) -> Self {
        LinearForm::new(Rational::zero(), c)
    }

    pub fn to_poly(&self) -> QPoly {
        QPoly::linear(self.intercept.clone(), self.slope.clone())
    }

    /// `c - self`, the second parameter after a Pfaff transformation.
    pub fn reflect(&self, c: &Rational) -> LinearForm {
        LinearForm::new(-&self.slope, c - &self.intercept)
    }
}

/// `₂F₁(-n, b; c; z)` with `b` linear in `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Terminating2F1 {
    pub n: usize,
    pub b: LinearForm,
    pub c: Rational,
    pub z: Rational,
}

impl Terminating2F1 {
    /// Argument `z = 2`, the only value the Mellin factors need.
    pub fn at_two(n: usize, b: LinearForm, c: Rational) -> Self {
        Terminating2F1 { n, b, c, z: int(2) }
    }

    /// Accepts a general first numerator parameter and rejects anything that
    /// does not terminate; non-terminating series at `z = 2` would need
    /// analytic continuation.
    pub fn with_numerator(a: &Rational, b: LinearForm, c: Rational, z: Rational) -> Result<Self> {
        if !a.is_integer() || a > &Rational::zero() {
            return Err(MellinError::Domain(format!(
                "numerator parameter {a} is not a nonpositive integer; series does not terminate"
            )));
        }
        let n = usize::try_from(-a.to_integer())
            .map_err(|_| MellinError::Domain(format!("numerator parameter {a} too large")))?;
        Ok(Terminating2F1 { n, b, c, z })
    }

    pub fn check_poles(&self) -> Result<()> {
        check_denominator(self.n, &self.c)
    }
}

fn check_denominator(n: usize, c: &Rational) -> Result<()> {
    for k in 0..n {
        if (c + int(k as i64)).is_zero() {
            return Err(MellinError::DenominatorPole {
                param: c.to_string(),
                term: k + 1,
            });
        }
    }
    Ok(())
}

/// Sum of the terminating series over an arbitrary coefficient ring, built by
/// accumulating the term ratio `(k - n)(b + k)z / ((c + k)(k + 1))`.
pub(crate) fn terminating_series<R: Coeff>(
    n: usize,
    b_intercept: &R,
    b_slope: &R,
    c: &Rational,
    z: &R,
) -> Result<Poly<R>> {
    check_denominator(n, c)?;
    let mut term = Poly::<R>::one();
    let mut sum = term.clone();
    for k in 0..n {
        let kk = int(k as i64);
        let scalar = (&kk - int(n as i64)) / ((c + &kk) * (&kk + Rational::one()));
        let b_plus_k = Poly::linear(
            b_intercept.clone() + &R::from_rational(&kk),
            b_slope.clone(),
        );
        term = (&term * &b_plus_k).scale(&(R::from_rational(&scalar) * z));
        sum = &sum + &term;
    }
    Ok(sum)
}

/// The series as an exact polynomial in `s`.
pub fn hyp2f1_poly(series: &Terminating2F1) -> Result<QPoly> {
    terminating_series(
        series.n,
        &series.b.intercept,
        &series.b.slope,
        &series.c,
        &series.z,
    )
}

/// `₂F₁(-n, b; c; z)` at a rational `b`.
pub fn hyp2f1_value(n: usize, b: &Rational, c: &Rational, z: &Rational) -> Result<Rational> {
    let p = terminating_series(n, b, &Rational::zero(), c, z)?;
    Ok(p.coeff(0))
}

/// `₂F₁(-n, b; c; 2) = (-1)^n ₂F₁(-n, c - b; c; 2)` as a polynomial identity.
pub fn pfaff_terminating_check(n: usize, b: &LinearForm, c: &Rational) -> Result<bool> {
    let lhs = hyp2f1_poly(&Terminating2F1::at_two(n, b.clone(), c.clone()))?;
    let rhs = hyp2f1_poly(&Terminating2F1::at_two(n, b.reflect(c), c.clone()))?;
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    Ok((&lhs - &rhs.scale(&sign)).is_zero())
}

/// Both orderings of `₂F₁(-n, -m; c; 2)`; equal by symmetry of the
/// numerator parameters.
pub fn symmetry_reciprocity_core(n: usize, m: usize, c: &Rational) -> Result<(Rational, Rational)> {
    let two = int(2);
    let nm = hyp2f1_value(n, &-int(m as i64), c, &two)?;
    let mn = hyp2f1_value(m, &-int(n as i64), c, &two)?;
    Ok((nm, mn))
}

/// Leading coefficient `(-n)_n slope^n z^n / ((c)_n n!)` predicted for
/// [`hyp2f1_poly`].
pub fn predicted_leading(series: &Terminating2F1) -> Rational {
    use crate::numerics::{factorial, pochhammer_rational};
    let n = series.n;
    let num = pochhammer_rational(&-int(n as i64), n)
        * num_traits::pow(series.b.slope.clone(), n)
        * num_traits::pow(series.z.clone(), n);
    num / (pochhammer_rational(&series.c, n) * Rational::from_integer(factorial(n)))
}
