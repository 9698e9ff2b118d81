//! D-dimensional hydrogenic radial functions
//! `ψ(r) = r^ℓ e^{-r/η} L_{n-ℓ-1}^{2ℓ+D-2}(2r/η)`, normalisation constant 1.
//!
//! Substituting `u = 2r/η` in `∫₀^∞ r^{s+D/2-2} ψ(r) dr` gives
//! `(η/2)^{s+α/2} M_{n-ℓ-1}^α(s)` with `α = 2ℓ+D-2`, so the zeros are those
//! of a Laguerre Mellin factor.

use num_complex::Complex64;
use serde::Serialize;

use super::mellin::{mellin_integral, LaguerreIntegrand};
use crate::error::{MellinError, Result};
use crate::laguerre::{build_m, build_p};
use crate::numerics::{int, rat, to_f64, QPoly, Rational};
use crate::zeros::{certify_zeros, critical_line_poly, Family, ZeroCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HydrogenState {
    pub n_principal: u32,
    pub ell: u32,
    pub dim: u32,
}

impl HydrogenState {
    pub fn new(n_principal: u32, ell: u32, dim: u32) -> Result<Self> {
        if n_principal == 0 {
            return Err(MellinError::InvalidState(
                "principal quantum number must be ≥ 1".into(),
            ));
        }
        if ell >= n_principal {
            return Err(MellinError::InvalidState(format!(
                "ℓ = {ell} must be below n = {n_principal}"
            )));
        }
        if dim < 2 {
            return Err(MellinError::InvalidState(format!(
                "dimension {dim} must be ≥ 2"
            )));
        }
        Ok(HydrogenState {
            n_principal,
            ell,
            dim,
        })
    }

    /// `n + (D-3)/2`.
    pub fn eta(&self) -> Rational {
        int(self.n_principal as i64) + rat(self.dim as i64 - 3, 2)
    }

    pub fn alpha_eff(&self) -> Rational {
        int(2 * self.ell as i64 + self.dim as i64 - 2)
    }

    pub fn degree_eff(&self) -> usize {
        (self.n_principal - self.ell - 1) as usize
    }

    /// Real part of `s` must exceed this for the radial integral to converge.
    pub fn convergence_abscissa(&self) -> f64 {
        1.0 - self.ell as f64 - self.dim as f64 / 2.0
    }

    fn check_s(&self, s: Complex64) -> Result<()> {
        if s.re > self.convergence_abscissa() {
            Ok(())
        } else {
            Err(MellinError::Domain(format!(
                "Re s = {} must exceed {} for this state",
                s.re,
                self.convergence_abscissa()
            )))
        }
    }
}

/// Closed form `(η/2)^{s+α/2} M_N^α(s)`.
pub fn hydrogen_mellin(state: &HydrogenState, s: Complex64) -> Result<Complex64> {
    state.check_s(s)?;
    let alpha = state.alpha_eff();
    let m = build_m(state.degree_eff(), &alpha)?.eval(s)?;
    let half_eta = to_f64(&state.eta()) / 2.0;
    Ok(m * ((s + to_f64(&alpha) / 2.0) * half_eta.ln()).exp())
}

/// Polynomial factor `P_N^α(s)` carrying all the zeros.
pub fn hydrogen_mellin_factor(state: &HydrogenState) -> Result<QPoly> {
    build_p(state.degree_eff(), &state.alpha_eff())
}

/// `∫₀^∞ r^{s+D/2-2} ψ(r) dr` by direct quadrature of the radial function.
pub fn hydrogen_quadrature(state: &HydrogenState, s: Complex64) -> Result<Complex64> {
    state.check_s(s)?;
    let dilation = state.eta() / int(2);
    let integrand = LaguerreIntegrand::new(state.degree_eff(), &state.alpha_eff(), &dilation);
    let sigma = s + state.ell as f64 + state.dim as f64 / 2.0 - 1.0;
    mellin_integral(&integrand, sigma)
}

/// Zero certificate of the factor, delegated to the Laguerre family.
pub fn hydrogen_certificate(state: &HydrogenState) -> Result<ZeroCertificate> {
    let cp = critical_line_poly(
        Family::Laguerre,
        state.degree_eff(),
        Some(&state.alpha_eff()),
    )?;
    certify_zeros(&cp)
}

#[cfg(test)]
mod tests {
    use super::*;

    const STATES: [(u32, u32, u32); 6] = [
        (1, 0, 3),
        (2, 0, 3),
        (3, 1, 3),
        (2, 0, 2),
        (4, 1, 5),
        (3, 0, 9),
    ];

    #[test]
    fn invalid_states() {
        assert!(matches!(
            HydrogenState::new(0, 0, 3),
            Err(MellinError::InvalidState(_))
        ));
        assert!(matches!(
            HydrogenState::new(2, 2, 3),
            Err(MellinError::InvalidState(_))
        ));
        assert!(matches!(
            HydrogenState::new(2, 0, 1),
            Err(MellinError::InvalidState(_))
        ));
    }

    #[test]
    fn effective_parameters() {
        let st = HydrogenState::new(4, 1, 5).unwrap();
        assert_eq!(st.eta(), int(5));
        assert_eq!(st.alpha_eff(), int(5));
        assert_eq!(st.degree_eff(), 2);
        let st = HydrogenState::new(2, 0, 2).unwrap();
        assert_eq!(st.eta(), rat(3, 2));
    }

    #[test]
    fn factor_examples() {
        let ground = hydrogen_mellin_factor(&HydrogenState::new(1, 0, 3).unwrap()).unwrap();
        assert_eq!(ground, QPoly::one());
        let p = hydrogen_mellin_factor(&HydrogenState::new(2, 0, 3).unwrap()).unwrap();
        assert_eq!(p, QPoly::new(vec![int(1), int(-2)]));
    }

    #[test]
    fn ground_state_in_closed_form() {
        // ψ = e^{-r}: ∫ r^{s-1/2} e^{-r} dr = Γ(s + 1/2)
        let st = HydrogenState::new(1, 0, 3).unwrap();
        let s = Complex64::new(1.5, 0.0);
        let v = hydrogen_mellin(&st, s).unwrap();
        assert!((v.re - 1.0).abs() < 1e-12 && v.im.abs() < 1e-12, "{v}");
    }

    #[test]
    fn states_certify_and_match_quadrature() {
        let samples = [
            Complex64::new(0.7, 0.0),
            Complex64::new(1.2, 2.0),
            Complex64::new(0.8, -4.0),
        ];
        for (n, l, d) in STATES {
            let st = HydrogenState::new(n, l, d).unwrap();
            let cert = hydrogen_certificate(&st).unwrap();
            assert_eq!(cert.count, st.degree_eff());
            assert!(cert.squarefree);
            for s in samples {
                let exact = hydrogen_mellin(&st, s).unwrap();
                let quad = hydrogen_quadrature(&st, s).unwrap();
                let rel = (exact - quad).norm() / exact.norm();
                assert!(rel < 1e-8, "state ({n},{l},{d}) s = {s}: {exact} vs {quad}");
            }
        }
    }

    #[test]
    fn divergent_point_rejected() {
        let st = HydrogenState::new(2, 0, 3).unwrap();
        assert!(hydrogen_mellin(&st, Complex64::new(-0.6, 0.0)).is_err());
        assert!(hydrogen_quadrature(&st, Complex64::new(-0.6, 0.0)).is_err());
    }
}
