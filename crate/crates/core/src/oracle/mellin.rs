//! Direct Mellin quadrature `∫₀^∞ x^{σ-1} h(x) dx` for entire, exponentially
//! decaying `h`.
//!
//! Near the origin `x^{σ-1}` can be nearly singular (`Re σ` as small as
//! 0.05 in the tested grid), so the first Taylor terms of `h` are integrated
//! analytically, `Σ h_k/(σ+k)`, and only the smooth remainder goes through
//! Gauss–Kronrod on `(0, 1]`. Past `x = 1` the integrand is integrated on a
//! finite interval chosen where it has decayed below double precision.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::classical::{hermite_f64, hermite_poly, laguerre_f64, laguerre_poly};
use super::quad::{integrate, QuadOptions};
use crate::error::{MellinError, Result};
use crate::numerics::{factorial, int, to_f64, Rational};

/// Real integrand `h` of a Mellin transform.
pub trait MellinIntegrand {
    fn value(&self, x: f64) -> f64;
    /// First `terms` Taylor coefficients at the origin.
    fn taylor(&self, terms: usize) -> Vec<f64>;
    /// Typical decay length, used to size the initial partition of `[1, X]`.
    fn scale(&self) -> f64;
}

/// Subtracted terms leave a remainder vanishing like `x^{Re σ + K - 1}` with
/// `Re σ + K ≥ SMOOTHNESS`.
const SMOOTHNESS: f64 = 6.0;
/// Extra Taylor terms used to evaluate the remainder without cancellation.
const SERIES_EXTRA: usize = 30;
const SERIES_CUTOFF: f64 = 0.5;

pub fn mellin_integral<I: MellinIntegrand>(integrand: &I, sigma: Complex64) -> Result<Complex64> {
    if !(sigma.re > 0.0) || !sigma.im.is_finite() {
        return Err(MellinError::Domain(format!(
            "Mellin integral diverges at the origin: Re σ = {} ≤ 0",
            sigma.re
        )));
    }
    let k = (SMOOTHNESS - sigma.re).ceil().max(0.0) as usize;
    let taylor = integrand.taylor(k + SERIES_EXTRA);
    let head = &taylor[..k];
    let analytic: Complex64 = head
        .iter()
        .enumerate()
        .map(|(j, h)| *h / (sigma + j as f64))
        .sum();

    let power = |x: f64| ((sigma - 1.0) * x.ln()).exp();
    let remainder = |x: f64| -> f64 {
        if x < SERIES_CUTOFF {
            taylor[k..].iter().rev().fold(0.0, |acc, c| acc * x + c) * x.powi(k as i32)
        } else {
            integrand.value(x) - head.iter().rev().fold(0.0, |acc, c| acc * x + c)
        }
    };
    let opts = QuadOptions {
        abs_tol: 1e-16,
        rel_tol: 1e-12,
        max_intervals: 4000,
    };
    let near = integrate(|x| power(x) * remainder(x), 0.0, 1.0, 4, opts)?;

    let far_fn = |x: f64| power(x) * integrand.value(x);
    let scale = integrand.scale();
    let reference = near.l1.max(analytic.norm()).max(far_fn(1.0).norm());
    let mut x = 1.0;
    let mut steps = 0usize;
    let mut quiet = 0;
    while quiet < 3 {
        x += scale;
        steps += 1;
        let v = far_fn(x).norm();
        quiet = if v < 1e-20 * reference { quiet + 1 } else { 0 };
        if steps > 100_000 {
            return Err(MellinError::Domain("integrand does not decay".into()));
        }
    }
    let far_opts = QuadOptions {
        abs_tol: 1e-13 * reference,
        ..opts
    };
    let far = integrate(far_fn, 1.0, x, steps, far_opts)?;
    Ok(analytic + near.value + far.value)
}

fn exp_series(rate: &Rational, terms: usize) -> Vec<Rational> {
    // e^{rate·x}
    (0..terms)
        .map(|k| num_traits::pow(rate.clone(), k) / Rational::from_integer(factorial(k)))
        .collect()
}

fn truncated_product(a: &[Rational], b: &[Rational], terms: usize) -> Vec<Rational> {
    (0..terms)
        .map(|k| {
            (0..=k)
                .filter(|&j| j < a.len() && k - j < b.len())
                .map(|j| &a[j] * &b[k - j])
                .sum()
        })
        .collect()
}

/// `e^{-x/(2c)} L_n^α(x/c)` with rational `c > 0`; `c = 1` is the Laguerre
/// transform, other values come from hydrogenic radial functions.
pub struct LaguerreIntegrand {
    n: usize,
    alpha: Rational,
    alpha_f: f64,
    dilation: Rational,
    dilation_f: f64,
}

impl LaguerreIntegrand {
    pub fn new(n: usize, alpha: &Rational, dilation: &Rational) -> Self {
        LaguerreIntegrand {
            n,
            alpha: alpha.clone(),
            alpha_f: to_f64(alpha),
            dilation: dilation.clone(),
            dilation_f: to_f64(dilation),
        }
    }
}

impl MellinIntegrand for LaguerreIntegrand {
    fn value(&self, x: f64) -> f64 {
        let u = x / self.dilation_f;
        let e = (-0.5 * u).exp();
        if e == 0.0 {
            return 0.0;
        }
        e * laguerre_f64(self.n, self.alpha_f, u)
    }

    fn taylor(&self, terms: usize) -> Vec<f64> {
        let inv = int(1) / &self.dilation;
        let lag = laguerre_poly(self.n, &self.alpha).compose_linear(&inv, &int(0));
        let exp = exp_series(&(-&inv / int(2)), terms);
        truncated_product(lag.coeffs(), &exp, terms)
            .iter()
            .map(to_f64)
            .collect()
    }

    fn scale(&self) -> f64 {
        2.0 * self.dilation_f
    }
}

/// `2 f_n(x) = 2 (8π)^{-n/2} H_n(√(2π) x) e^{-πx²}`.
pub struct HermiteIntegrand {
    n: usize,
}

impl HermiteIntegrand {
    pub fn new(n: usize) -> Self {
        HermiteIntegrand { n }
    }

    fn norm(&self) -> f64 {
        2.0 * (8.0 * PI).powf(-(self.n as f64) / 2.0)
    }
}

impl MellinIntegrand for HermiteIntegrand {
    fn value(&self, x: f64) -> f64 {
        let e = (-PI * x * x).exp();
        if e == 0.0 {
            return 0.0;
        }
        self.norm() * hermite_f64(self.n, (2.0 * PI).sqrt() * x) * e
    }

    fn taylor(&self, terms: usize) -> Vec<f64> {
        let root = (2.0 * PI).sqrt();
        let h: Vec<f64> = hermite_poly(self.n)
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| to_f64(c) * root.powi(j as i32))
            .collect();
        let mut gauss = vec![0.0; terms];
        let mut term = 1.0;
        for k in 0..terms.div_ceil(2) {
            if 2 * k < terms {
                gauss[2 * k] = term;
            }
            term *= -PI / (k + 1) as f64;
        }
        (0..terms)
            .map(|k| {
                self.norm()
                    * (0..=k.min(h.len().saturating_sub(1)))
                        .map(|j| h[j] * gauss[k - j])
                        .sum::<f64>()
            })
            .collect()
    }

    fn scale(&self) -> f64 {
        0.5
    }
}

/// `∫₀^∞ x^{s+α/2-1} e^{-x/2} L_n^α(x) dx` by quadrature.
pub fn mellin_quadrature_laguerre(n: usize, alpha: &Rational, s: Complex64) -> Result<Complex64> {
    let sigma = s + to_f64(alpha) / 2.0;
    if !(sigma.re > 0.0) {
        return Err(MellinError::Domain(format!(
            "Re(s + α/2) = {} ≤ 0: Laguerre Mellin integral diverges",
            sigma.re
        )));
    }
    mellin_integral(&LaguerreIntegrand::new(n, alpha, &int(1)), sigma)
}

/// `2∫₀^∞ f_n(x) x^{s-1} dx` by quadrature.
pub fn mellin_quadrature_hermite(n: usize, s: Complex64) -> Result<Complex64> {
    if !(s.re > 0.0) {
        return Err(MellinError::Domain(format!(
            "Re s = {} ≤ 0: Hermite Mellin integral diverges",
            s.re
        )));
    }
    mellin_integral(&HermiteIntegrand::new(n), s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn laguerre_trivial_values() {
        let v = mellin_quadrature_laguerre(0, &int(0), c(1.0, 0.0)).unwrap();
        assert!((v - c(2.0, 0.0)).norm() < 1e-12);
        let v = mellin_quadrature_laguerre(1, &int(0), c(2.0, 0.0)).unwrap();
        assert!((v - c(-12.0, 0.0)).norm() < 1e-11);
    }

    #[test]
    fn laguerre_small_sigma() {
        // n = 0, α = -1/2: 2^σ Γ(σ) at σ = s - 1/4 = 0.05
        let s = c(0.3, 0.0);
        let v = mellin_quadrature_laguerre(0, &rat(-1, 2), s).unwrap();
        let sigma = c(0.05, 0.0);
        let exact = (sigma * 2f64.ln()).exp() * super::super::gamma::complex_gamma(sigma).unwrap();
        assert!((v - exact).norm() < 1e-10 * exact.norm(), "{v} vs {exact}");
    }

    #[test]
    fn hermite_trivial_values() {
        let v = mellin_quadrature_hermite(0, c(1.0, 0.0)).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-12);
        let v = mellin_quadrature_hermite(2, c(1.0, 0.0)).unwrap();
        assert!((v - c(1.0 / (4.0 * PI), 0.0)).norm() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            mellin_quadrature_laguerre(2, &int(0), c(0.0, 1.0)),
            Err(MellinError::Domain(_))
        ));
        assert!(matches!(
            mellin_quadrature_laguerre(2, &rat(1, 2), c(-0.25, 0.0)),
            Err(MellinError::Domain(_))
        ));
        assert!(matches!(
            mellin_quadrature_hermite(1, c(-0.1, 0.0)),
            Err(MellinError::Domain(_))
        ));
    }

    #[test]
    fn taylor_matches_values() {
        let lag = LaguerreIntegrand::new(4, &rat(1, 2), &rat(3, 2));
        let her = HermiteIntegrand::new(5);
        for x in [0.05, 0.2, 0.4] {
            for (t, v) in [
                (lag.taylor(40), lag.value(x)),
                (her.taylor(40), her.value(x)),
            ] {
                let series: f64 = t.iter().rev().fold(0.0, |acc, c| acc * x + c);
                assert!((series - v).abs() < 1e-13, "x = {x}: {series} vs {v}");
            }
        }
    }
}
