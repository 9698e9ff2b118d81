//! Gamma normal form for Mellin transforms.
//!
//! A [`GammaForm`] is the product
//!
//! ```text
//! scalar · 2^{a·s + b} · π^{c·s + d} · Γ(g·s + h) · poly(s)
//! ```
//!
//! Shifting the argument `s ↦ s + k` changes the Gamma argument by `g·k`;
//! `Γ(z + 1) = zΓ(z)` moves integer parts of that change into the
//! polynomial. Two forms can therefore be compared (or added) exactly as
//! soon as their exponential slopes, Gamma scale and the fractional class of
//! the Gamma shift agree: both sides are lowered to the smaller shift and the
//! remaining polynomials over [`ExactScalar`] are compared coefficientwise.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{MellinError, Result};
use crate::numerics::{
    int, rational_from_f64, rising_linear, to_f64, Coeff, ExactScalar, GaussRat, Poly, QPoly,
    Rational,
};
use crate::oracle::gamma::complex_gamma;

/// Exponent `slope·s + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpLinear {
    pub slope: Rational,
    pub intercept: Rational,
}

impl ExpLinear {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        ExpLinear { slope, intercept }
    }

    pub fn zero() -> Self {
        ExpLinear::new(Rational::zero(), Rational::zero())
    }

    fn add(&self, other: &ExpLinear) -> ExpLinear {
        ExpLinear::new(
            &self.slope + &other.slope,
            &self.intercept + &other.intercept,
        )
    }

    fn substitute(&self, a: &Rational, b: &Rational) -> ExpLinear {
        ExpLinear::new(&self.slope * a, &self.intercept + &self.slope * b)
    }

    /// Splits off the largest multiple of 1/2 from the intercept, returning it
    /// in half units; the residual intercept lies in `[0, 1/2)`.
    fn fold_half_units(&self) -> (i64, ExpLinear) {
        let twice = &self.intercept * int(2);
        let k = twice.floor().to_integer();
        let k = i64::try_from(k).expect("exponent intercept out of range");
        let residual = &self.intercept - Rational::new(BigInt::from(k), BigInt::from(2));
        (k, ExpLinear::new(self.slope.clone(), residual))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaForm {
    pub scalar: ExactScalar,
    pub two_exp: ExpLinear,
    pub pi_exp: ExpLinear,
    /// `g` in `Γ(g·s + h)`; 1 for Laguerre transforms, 1/2 for Hermite.
    pub gamma_scale: Rational,
    pub gamma_shift: Rational,
    pub poly: QPoly,
}

/// Everything two forms must share before their polynomials can be compared.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Header {
    two_exp: ExpLinear,
    pi_exp: ExpLinear,
    gamma_scale: Rational,
    shift_class: Rational,
}

impl GammaForm {
    pub fn new(
        scalar: ExactScalar,
        two_exp: ExpLinear,
        pi_exp: ExpLinear,
        gamma_scale: Rational,
        gamma_shift: Rational,
        poly: QPoly,
    ) -> Self {
        GammaForm {
            scalar,
            two_exp,
            pi_exp,
            gamma_scale,
            gamma_shift,
            poly,
        }
    }

    /// Canonical representative: half-integer parts of the exponential
    /// intercepts folded into the scalar, Gamma shift lowered into `[0, 1)`
    /// when it is nonnegative. Idempotent.
    pub fn normalized(&self) -> GammaForm {
        let (two_k, two_exp) = self.two_exp.fold_half_units();
        let (pi_k, pi_exp) = self.pi_exp.fold_half_units();
        let scalar =
            &(&self.scalar * &ExactScalar::two_pow_half(two_k)) * &ExactScalar::pi_pow_half(pi_k);
        let excess = self.gamma_shift.floor();
        let mut out = GammaForm {
            scalar,
            two_exp,
            pi_exp,
            gamma_scale: self.gamma_scale.clone(),
            gamma_shift: self.gamma_shift.clone(),
            poly: self.poly.clone(),
        };
        if excess > Rational::zero() {
            let base = &self.gamma_shift - &excess;
            let k = excess
                .to_integer()
                .try_into()
                .expect("gamma shift out of range");
            out.poly = &out.poly * &rising_linear(&self.gamma_scale, &base, k);
            out.gamma_shift = base;
        }
        out
    }

    fn header(&self) -> Header {
        Header {
            two_exp: self.two_exp.clone(),
            pi_exp: self.pi_exp.clone(),
            gamma_scale: self.gamma_scale.clone(),
            shift_class: &self.gamma_shift - self.gamma_shift.floor(),
        }
    }

    /// `scalar · poly · (g·s + base)_k` with `k = shift - base`, i.e. the
    /// polynomial multiplying `Γ(g·s + base)`.
    fn content_at(&self, base: &Rational) -> Poly<ExactScalar> {
        let k: usize = (&self.gamma_shift - base)
            .to_integer()
            .try_into()
            .expect("base must not exceed the gamma shift");
        let rising = rising_linear(&self.gamma_scale, base, k);
        (&self.poly * &rising).map(|c| &self.scalar * &ExactScalar::from_rational(c.clone()))
    }

    /// `s ↦ a·s + b`.
    pub fn substitute(&self, a: &Rational, b: &Rational) -> GammaForm {
        GammaForm {
            scalar: self.scalar.clone(),
            two_exp: self.two_exp.substitute(a, b),
            pi_exp: self.pi_exp.substitute(a, b),
            gamma_scale: &self.gamma_scale * a,
            gamma_shift: &self.gamma_shift + &self.gamma_scale * b,
            poly: self.poly.compose_linear(a, b),
        }
    }

    /// `s ↦ s + k`.
    pub fn shift_arg(&self, k: i64) -> GammaForm {
        self.substitute(&Rational::one(), &int(k))
    }

    pub fn mul_poly(&self, p: &QPoly) -> GammaForm {
        GammaForm {
            poly: &self.poly * p,
            ..self.clone()
        }
    }

    pub fn mul_scalar(&self, c: &ExactScalar) -> GammaForm {
        GammaForm {
            scalar: &self.scalar * c,
            ..self.clone()
        }
    }

    pub fn mul_rational(&self, c: &Rational) -> GammaForm {
        self.mul_scalar(&ExactScalar::from_rational(c.clone()))
    }

    pub fn neg(&self) -> GammaForm {
        self.mul_rational(&int(-1))
    }

    /// Multiply by `2^{two} · π^{pi}`.
    pub fn mul_exp(&self, two: &ExpLinear, pi: &ExpLinear) -> GammaForm {
        GammaForm {
            two_exp: self.two_exp.add(two),
            pi_exp: self.pi_exp.add(pi),
            ..self.clone()
        }
    }

    /// Exact value equality. Errors if the headers are incompatible.
    pub fn same_value(&self, other: &GammaForm) -> Result<bool> {
        Ok(residual(std::slice::from_ref(self), std::slice::from_ref(other))?.is_zero())
    }

    /// Numeric value at a complex point. The polynomial factor is evaluated
    /// exactly at the rational image of `s` before rounding.
    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        let exact_s = GaussRat::new(
            rational_from_f64(s.re).ok_or_else(|| non_finite(s))?,
            rational_from_f64(s.im).ok_or_else(|| non_finite(s))?,
        );
        let poly = self
            .poly
            .map(GaussRat::from_rational)
            .eval(&exact_s)
            .to_complex();
        let lin = |e: &ExpLinear| s * to_f64(&e.slope) + to_f64(&e.intercept);
        let two = (lin(&self.two_exp) * LN_2).exp();
        let pi = (lin(&self.pi_exp) * PI.ln()).exp();
        let g = complex_gamma(s * to_f64(&self.gamma_scale) + to_f64(&self.gamma_shift))?;
        Ok(self.scalar.to_f64() * two * pi * g * poly)
    }
}

fn non_finite(s: Complex64) -> MellinError {
    MellinError::Domain(format!("non-finite s = {s}"))
}

/// `Σ lhs - Σ rhs` as the polynomial multiplying a common
/// `2^{…}π^{…}Γ(g·s + base)`. Zero exactly when the identity holds.
pub fn residual(lhs: &[GammaForm], rhs: &[GammaForm]) -> Result<Poly<ExactScalar>> {
    let terms: Vec<(bool, GammaForm)> = lhs
        .iter()
        .map(|f| (true, f.normalized()))
        .chain(rhs.iter().map(|f| (false, f.normalized())))
        .collect();
    let Some((_, first)) = terms.first() else {
        return Ok(Poly::zero());
    };
    let header = first.header();
    for (_, f) in &terms {
        let h = f.header();
        if h != header {
            return Err(MellinError::Structural(format!(
                "incompatible Gamma normal forms: {h:?} vs {header:?}"
            )));
        }
    }
    let base = terms
        .iter()
        .map(|(_, f)| f.gamma_shift.clone())
        .min()
        .expect("nonempty");
    Ok(terms.iter().fold(Poly::zero(), |acc, (positive, f)| {
        let c = f.content_at(&base);
        if *positive {
            &acc + &c
        } else {
            &acc - &c
        }
    }))
}

/// Human-readable residual for failure reports.
pub fn display_residual(p: &Poly<ExactScalar>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("({c}) s^{k}"))
        .collect::<Vec<_>>()
        .join(" + ")
}
