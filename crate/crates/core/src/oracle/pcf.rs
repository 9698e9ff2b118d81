//! Parabolic cylinder functions through Kummer's confluent series, and the
//! Hermite generating-function check
//! `Σ M_n(s) tⁿ/n! = 2 (2π)^{-s/2} Γ(s) D_{-s}(-t/√(2π))`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{complex_gamma, recip_gamma};
use crate::error::{MellinError, Result};
use crate::hermite::build_hermite_m;

const MAX_TERMS: usize = 10_000;

/// `₁F₁(a; b; x)` by its Taylor series.
pub fn hyp1f1(a: Complex64, b: f64, x: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * x / ((b + kf) * (kf + 1.0));
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            quiet += 1;
            if quiet >= 2 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
        if term.norm() == 0.0 {
            return Ok(sum);
        }
    }
    Err(MellinError::NonConvergence { terms: MAX_TERMS })
}

/// `₁F₁(a; b; x)` through Kummer's first transformation,
/// `eˣ ₁F₁(b-a; b; -x)`.
pub fn hyp1f1_kummer(a: Complex64, b: f64, x: f64) -> Result<Complex64> {
    Ok(x.exp() * hyp1f1(b - a, b, -x)?)
}

/// Even and odd parts in `z` of `D_ν(z)`:
/// `2^{ν/2} e^{-z²/4} [√π/Γ((1-ν)/2) ₁F₁(-ν/2; 1/2; z²/2)]` and
/// `2^{ν/2} e^{-z²/4} [(z/√2)(-2√π)/Γ(-ν/2) ₁F₁((1-ν)/2; 3/2; z²/2)]`.
pub fn parabolic_cylinder_parts(nu: Complex64, z: f64) -> Result<(Complex64, Complex64)> {
    parts_with(nu, z, hyp1f1)
}

fn parts_with(
    nu: Complex64,
    z: f64,
    f: impl Fn(Complex64, f64, f64) -> Result<Complex64>,
) -> Result<(Complex64, Complex64)> {
    let pre = (nu * (2f64.ln() / 2.0)).exp() * (-z * z / 4.0).exp();
    let x = z * z / 2.0;
    let even = PI.sqrt() * recip_gamma((1.0 - nu) / 2.0) * f(-nu / 2.0, 0.5, x)?;
    let odd = z / 2f64.sqrt()
        * (-2.0 * PI.sqrt())
        * recip_gamma(-nu / 2.0)
        * f((1.0 - nu) / 2.0, 1.5, x)?;
    Ok((pre * even, pre * odd))
}

/// `D_ν(z)`.
pub fn parabolic_cylinder(nu: Complex64, z: f64) -> Result<Complex64> {
    let (e, o) = parabolic_cylinder_parts(nu, z)?;
    Ok(e + o)
}

/// `D_ν(z)` with both confluent series routed through Kummer's
/// transformation; agrees with [`parabolic_cylinder`] to rounding.
pub fn parabolic_cylinder_kummer(nu: Complex64, z: f64) -> Result<Complex64> {
    let (e, o) = parts_with(nu, z, hyp1f1_kummer)?;
    Ok(e + o)
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct GfResidual {
    /// `|Σ - closed form| / |closed form|`.
    pub residual: f64,
    /// Same for the even-in-`t` parts alone.
    pub even_residual: f64,
    /// Number of terms actually summed, possibly more than requested.
    pub terms: usize,
    /// Size of the last term relative to the closed form.
    pub truncation: f64,
}

const TRUNCATION_TOL: f64 = 1e-12;
const MAX_GF_TERMS: usize = 200;

/// `2 (2π)^{-s/2} Γ(s)`.
fn gf_prefactor(s: Complex64) -> Result<Complex64> {
    Ok(2.0 * (-s / 2.0 * (2.0 * PI).ln()).exp() * complex_gamma(s)?)
}

/// Compare the truncated series with the closed form. Starts with `terms`
/// terms and extends the sum while its last term is still significant.
pub fn generating_function_check(s: Complex64, t: f64, terms: usize) -> Result<GfResidual> {
    if !(s.re > 0.0) {
        return Err(MellinError::Domain(format!("Re s = {} ≤ 0", s.re)));
    }
    let pre = gf_prefactor(s)?;
    let z = -t / (2.0 * PI).sqrt();
    let (even_d, odd_d) = parabolic_cylinder_parts(-s, z)?;
    let closed = pre * (even_d + odd_d);
    let closed_even = pre * even_d;

    let mut sum = Complex64::new(0.0, 0.0);
    let mut even_sum = Complex64::new(0.0, 0.0);
    let mut coeff = 1.0; // tⁿ/n!
    let mut last = Complex64::new(0.0, 0.0);
    let mut n = 0;
    let mut target = terms.max(1);
    loop {
        while n <= target {
            last = build_hermite_m(n).eval(s)? * coeff;
            sum += last;
            if n % 2 == 0 {
                even_sum += last;
            }
            n += 1;
            coeff *= t / n as f64;
        }
        let truncation = last.norm() / closed.norm();
        if truncation <= TRUNCATION_TOL || t == 0.0 || target >= MAX_GF_TERMS {
            return Ok(GfResidual {
                residual: (sum - closed).norm() / closed.norm(),
                even_residual: (even_sum - closed_even).norm() / closed_even.norm(),
                terms: n,
                truncation,
            });
        }
        target += 10;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn closed_form_values() {
        let d = parabolic_cylinder(c(0.0, 0.0), 1.0).unwrap();
        assert!((d - c((-0.25f64).exp(), 0.0)).norm() < 1e-15);
        let d = parabolic_cylinder(c(-1.0, 0.0), 0.0).unwrap();
        assert!((d - c((PI / 2.0).sqrt(), 0.0)).norm() < 1e-14);
        // D_1(z) = z e^{-z²/4}
        let d = parabolic_cylinder(c(1.0, 0.0), 0.7).unwrap();
        assert!((d - c(0.7 * (-0.49f64 / 4.0).exp(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn kummer_invariance() {
        // 20 scattered points, deterministic
        for k in 0..20 {
            let f = k as f64;
            let nu = c(
                -4.0 + 7.0 * ((f * 0.618) % 1.0),
                -4.0 + 8.0 * ((f * 0.414 + 0.2) % 1.0),
            );
            let z = -3.0 + 6.0 * ((f * 0.732 + 0.1) % 1.0);
            let a = parabolic_cylinder(nu, z).unwrap();
            let b = parabolic_cylinder_kummer(nu, z).unwrap();
            assert!((a - b).norm() <= 1e-10 * a.norm(), "nu = {nu}, z = {z}");
        }
    }

    #[test]
    fn generating_function_examples() {
        let r = generating_function_check(c(1.0, 0.0), 0.0, 40).unwrap();
        assert!(r.residual < 1e-12);
        let r = generating_function_check(c(1.0, 0.0), 0.3, 40).unwrap();
        assert!(r.residual < 1e-6, "{r:?}");
        let r = generating_function_check(c(0.5, 3.0), -0.4, 40).unwrap();
        assert!(r.residual < 1e-6, "{r:?}");
        assert!(r.even_residual < 1e-6, "{r:?}");
    }

    #[test]
    fn unscaled_argument_fails() {
        // The unscaled argument -2t does not reproduce the series.
        let s = c(1.3, 0.0);
        let t = 0.3;
        let pre = gf_prefactor(s).unwrap();
        let wrong = pre * parabolic_cylinder(-s, -2.0 * t).unwrap();
        let good = generating_function_check(s, t, 40).unwrap();
        let sum_estimate = pre * parabolic_cylinder(-s, -t / (2.0 * PI).sqrt()).unwrap();
        assert!(good.residual < 1e-6);
        assert!((wrong - sum_estimate).norm() > 1e-3 * sum_estimate.norm());
    }

    #[test]
    fn non_positive_real_part_rejected() {
        assert!(generating_function_check(c(-0.5, 1.0), 0.1, 40).is_err());
    }
}
