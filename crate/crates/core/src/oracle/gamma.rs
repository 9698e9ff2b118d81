//! Complex Gamma function (Lanczos, g = 7) with reflection.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{MellinError, Result};

const G: f64 = 7.0;
const COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Closer than this to a nonpositive integer counts as a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Distance to the nearest pole of Γ, if that pole is the closest integer.
fn pole_distance(z: Complex64) -> Option<f64> {
    let k = z.re.round();
    (k <= 0.0).then(|| (z - Complex64::new(k, 0.0)).norm())
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    // Valid for Re z ≥ 1/2.
    let z = z - 1.0;
    let mut x = Complex64::new(COEFFS[0], 0.0);
    for (i, c) in COEFFS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `Γ(z)`. Errors within [`POLE_TOLERANCE`] of a pole.
pub fn complex_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(MellinError::Domain(format!(
            "non-finite Gamma argument {z}"
        )));
    }
    if let Some(d) = pole_distance(z) {
        if d < POLE_TOLERANCE {
            return Err(MellinError::NearPole {
                re: z.re,
                im: z.im,
                distance: d,
            });
        }
    }
    if z.re < 0.5 {
        // Γ(z)Γ(1-z) = π / sin(πz)
        let s = (PI * z).sin();
        return Ok(PI / (s * ln_gamma_right(1.0 - z).exp()));
    }
    Ok(ln_gamma_right(z).exp())
}

/// `1/Γ(z)`, entire: exactly zero at the poles of Γ.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    match complex_gamma(z) {
        Ok(g) => 1.0 / g,
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn factorials() {
        let mut f = 1.0;
        for n in 1..20 {
            let g = complex_gamma(c(n as f64, 0.0)).unwrap();
            assert!((g.re / f - 1.0).abs() < 1e-13, "n = {n}");
            assert!(g.im.abs() < 1e-13 * f);
            f *= n as f64;
        }
    }

    #[test]
    fn half_integers() {
        let g = complex_gamma(c(0.5, 0.0)).unwrap();
        assert!((g.re - PI.sqrt()).abs() < 1e-14);
        let g = complex_gamma(c(-0.5, 0.0)).unwrap();
        assert!((g.re + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn modulus_on_critical_line() {
        // |Γ(1/2 + it)|² = π / cosh(πt)
        for t in [0.3, 2.0, 7.5, 20.0] {
            let g = complex_gamma(c(0.5, t)).unwrap();
            let expected = PI / (PI * t).cosh();
            assert!((g.norm_sqr() / expected - 1.0).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn recurrence_in_complex_plane() {
        for z in [c(0.3, 1.7), c(-2.4, 0.9), c(4.1, -6.0)] {
            let lhs = complex_gamma(z + 1.0).unwrap();
            let rhs = z * complex_gamma(z).unwrap();
            assert!((lhs - rhs).norm() < 1e-13 * rhs.norm());
        }
    }

    #[test]
    fn poles() {
        for k in 0..5 {
            let z = c(-(k as f64), 0.0);
            assert!(matches!(
                complex_gamma(z),
                Err(MellinError::NearPole { .. })
            ));
            assert_eq!(recip_gamma(z), c(0.0, 0.0));
        }
        assert!(complex_gamma(c(-1.0 + 1e-6, 0.0)).is_ok());
    }
}
