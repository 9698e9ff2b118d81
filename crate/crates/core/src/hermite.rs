//! Mellin transforms of the Hermite functions
//! `f_n(x) = (8π)^{-n/2} H_n(√(2π) x) e^{-πx²}`, `M_n(s) = 2∫₀^∞ f_n x^{s-1} dx`.
//!
//! Even degree `n = 2m`: `M_n = π^{-s/2} Γ(s/2) p_m(s)` with
//! `p_m = (8π)^{-m} (-1)^m (2m)!/m! · G_m(s)`, `G_m = ₂F₁(-m, s/2; 1/2; 2)`.
//!
//! Odd degree `n = 2m+1`: the `Γ(s/2+1/2)/Γ(s/2)` ratio is absorbed into the
//! Gamma factor, `M_n = π^{-s/2} Γ((s+1)/2) c_m H_m(s)` with
//! `H_m = ₂F₁(-m, s/2+1/2; 3/2; 2)` and
//! `c_m = 2^{5/2}(8π)^{-m-1/2}(-1)^m (m+1/2)(2m)!/m!`.
//!
//! Every transform therefore lives in the gamma-parity normal form
//! `scalar · π^{-s/2} · Γ((s+ε)/2) · poly(s)`.

use num_traits::{One, Zero};

use crate::error::{MellinError, Result};
use crate::gamma_form::{residual, ExpLinear, GammaForm};
use crate::hyp2f1::{hyp2f1_poly, LinearForm, Terminating2F1};
use crate::laguerre::build_m;
use crate::numerics::{
    factorial, int, pochhammer_rational, rat, ExactScalar, Parity, QPoly, Rational, Sqrt2Value,
};
use crate::oracle::classical::{hermite_poly, laguerre_poly};
use crate::relations::RelationReport;

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `G_m(s) = ₂F₁(-m, s/2; 1/2; 2)`.
pub fn reduced_even(m: usize) -> QPoly {
    hyp2f1_poly(&Terminating2F1::at_two(
        m,
        LinearForm::new(rat(1, 2), int(0)),
        rat(1, 2),
    ))
    .expect("c = 1/2 has no denominator poles")
}

/// `H_m(s) = ₂F₁(-m, s/2 + 1/2; 3/2; 2)`.
pub fn reduced_odd(m: usize) -> QPoly {
    hyp2f1_poly(&Terminating2F1::at_two(
        m,
        LinearForm::new(rat(1, 2), rat(1, 2)),
        rat(3, 2),
    ))
    .expect("c = 3/2 has no denominator poles")
}

/// `(8π)^{-m} (-1)^m (2m)!/m!`.
pub fn even_prefactor(m: usize) -> ExactScalar {
    let q = sign(m) * fact(2 * m) / (fact(m) * num_traits::pow(int(8), m));
    ExactScalar::monomial(q, false, -2 * m as i64)
}

/// `2^{5/2}(8π)^{-m-1/2}(-1)^m (m+1/2)(2m)!/m!`, which reduces to
/// `2^{1-3m} π^{-m-1/2} (-1)^m (m+1/2)(2m)!/m!`.
pub fn odd_prefactor(m: usize) -> ExactScalar {
    let five_halves = ExactScalar::two_pow_half(5);
    let eight_pi = ExactScalar::two_pow_half(-(6 * m as i64 + 3))
        * ExactScalar::pi_pow_half(-(2 * m as i64 + 1));
    let q = sign(m) * (int(m as i64) + rat(1, 2)) * fact(2 * m) / fact(m);
    &(&five_halves * &eight_pi) * &ExactScalar::from_rational(q)
}

/// `p_m(s)` as prefactor and reduced polynomial.
pub fn build_p_even(m: usize) -> (ExactScalar, QPoly) {
    (even_prefactor(m), reduced_even(m))
}

fn parity_form(scalar: ExactScalar, shift: Rational, poly: QPoly) -> GammaForm {
    GammaForm::new(
        scalar,
        ExpLinear::zero(),
        ExpLinear::new(rat(-1, 2), int(0)),
        rat(1, 2),
        shift,
        poly,
    )
}

/// `M_{2m+1}(s)` in gamma-parity normal form.
pub fn build_p_odd(m: usize) -> GammaForm {
    parity_form(odd_prefactor(m), rat(1, 2), reduced_odd(m))
}

/// `M_n(s)` for either parity.
pub fn build_hermite_m(n: usize) -> GammaForm {
    let m = n / 2;
    if n % 2 == 0 {
        let (c, p) = build_p_even(m);
        parity_form(c, int(0), p)
    } else {
        build_p_odd(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteMellin {
    pub n: usize,
    pub parity: Parity,
    pub reduced_poly: QPoly,
    pub prefactor: ExactScalar,
    pub gamma_form: GammaForm,
}

impl HermiteMellin {
    pub fn new(n: usize) -> Self {
        let m = n / 2;
        let (parity, reduced_poly, prefactor) = if n % 2 == 0 {
            (Parity::Even, reduced_even(m), even_prefactor(m))
        } else {
            (Parity::Odd, reduced_odd(m), odd_prefactor(m))
        };
        HermiteMellin {
            n,
            parity,
            reduced_poly,
            prefactor,
            gamma_form: build_hermite_m(n),
        }
    }
}

/// `M_n(s)` rebuilt from the Laguerre transform with `α = ∓1/2` by the
/// substitution `y = 2πx²`:
/// `M_{2m}(s) = (8π)^{-m}(-1)^m 4^m m! (2π)^{-s/2} M_m^{-1/2}(s/2 + 1/4)` and
/// `M_{2m+1}(s) = (8π)^{-m-1/2}(-1)^m 2^{2m+1} m! (2π)^{-s/2} M_m^{1/2}(s/2 + 1/4)`.
pub fn hermite_via_laguerre(n: usize) -> Result<GammaForm> {
    let m = n / 2;
    let odd = n % 2 == 1;
    let alpha = if odd { rat(1, 2) } else { rat(-1, 2) };
    let lag = build_m(m, &alpha)?.substitute(&rat(1, 2), &rat(1, 4));
    let eight_pi_twice = -(2 * m as i64) - odd as i64;
    let eight_pi =
        ExactScalar::two_pow_half(3 * eight_pi_twice) * ExactScalar::pi_pow_half(eight_pi_twice);
    let q = sign(m) * num_traits::pow(int(2), 2 * m + odd as usize) * fact(m);
    let scalar = &eight_pi * &ExactScalar::from_rational(q);
    let two_pi = ExpLinear::new(rat(-1, 2), int(0));
    Ok(lag
        .mul_scalar(&scalar)
        .mul_exp(&two_pi, &two_pi)
        .normalized())
}

/// Where the two polynomial bridges first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeMismatch {
    pub parity: Parity,
    pub index: usize,
    pub hermite_side: Rational,
    pub laguerre_side: Rational,
}

/// `H_{2m}(√x) = (-1)^m 4^m m! L_m^{-1/2}(x)` and
/// `H_{2m+1}(√x)/√x = (-1)^m 2^{2m+1} m! L_m^{1/2}(x)`, coefficientwise.
pub fn bridge_check(m: usize) -> std::result::Result<(), BridgeMismatch> {
    for (parity, deg, alpha) in [
        (Parity::Even, 2 * m, rat(-1, 2)),
        (Parity::Odd, 2 * m + 1, rat(1, 2)),
    ] {
        let h = hermite_poly(deg);
        let offset = deg % 2;
        let scale = sign(m) * num_traits::pow(int(2), deg) * fact(m);
        let l = laguerre_poly(m, &alpha).scale(&scale);
        for k in 0..=m {
            let hermite_side = h.coeff(2 * k + offset);
            let laguerre_side = l.coeff(k);
            if hermite_side != laguerre_side {
                return Err(BridgeMismatch {
                    parity,
                    index: k,
                    hermite_side,
                    laguerre_side,
                });
            }
        }
        // The Hermite side must have no coefficients of the other parity.
        if (0..=deg).any(|j| j % 2 != offset && !h.coeff(j).is_zero()) {
            return Err(BridgeMismatch {
                parity,
                index: usize::MAX,
                hermite_side: int(1),
                laguerre_side: int(0),
            });
        }
    }
    Ok(())
}

/// The parity-normal-form transform agrees exactly with the Laguerre route.
pub fn gamma_bridge_check(n: usize) -> Result<bool> {
    build_hermite_m(n).same_value(&hermite_via_laguerre(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HermiteSymmetryReport {
    pub n: usize,
    pub m: usize,
    /// `p_k(s) = (-1)^k p_k(1-s)` for `k ∈ {n, m}`.
    pub even_functional: bool,
    /// `H_k(s) = (-1)^k H_k(1-s)` for `k ∈ {n, m}`.
    pub odd_functional: bool,
    /// `c_m p_n(-2m) = c_n p_m(-2n)` with `c_k = (8π)^{-k}(-1)^k (2k)!/k!`.
    pub even_reciprocity: bool,
    /// `H_n(-2m-1) = H_m(-2n-1)`.
    pub odd_reciprocity: bool,
}

impl HermiteSymmetryReport {
    pub fn all_hold(&self) -> bool {
        self.even_functional && self.odd_functional && self.even_reciprocity && self.odd_reciprocity
    }
}

fn reflects(p: &QPoly, k: usize) -> bool {
    p == &p.compose_linear(&int(-1), &int(1)).scale(&sign(k))
}

pub fn hermite_functional_reciprocity(n: usize, m: usize) -> HermiteSymmetryReport {
    let even_functional = [n, m].iter().all(|&k| reflects(&reduced_even(k), k));
    let odd_functional = [n, m].iter().all(|&k| reflects(&reduced_odd(k), k));
    let p_at = |k: usize, x: i64| {
        let (c, g) = build_p_even(k);
        &c * &ExactScalar::from_rational(g.eval(&int(x)))
    };
    let lhs = &even_prefactor(m) * &p_at(n, -2 * m as i64);
    let rhs = &even_prefactor(n) * &p_at(m, -2 * n as i64);
    let odd_lhs = reduced_odd(n).eval(&int(-2 * m as i64 - 1));
    let odd_rhs = reduced_odd(m).eval(&int(-2 * n as i64 - 1));
    HermiteSymmetryReport {
        n,
        m,
        even_functional,
        odd_functional,
        even_reciprocity: lhs == rhs,
        odd_reciprocity: odd_lhs == odd_rhs,
    }
}

/// Gegenbauer `C_k^λ(√2)` in ℚ(√2) by the three-term recurrence.
pub fn gegenbauer_sqrt2(k: usize, lambda: &Rational) -> Sqrt2Value {
    let x = Sqrt2Value::sqrt2();
    let r = |q: Rational| Sqrt2Value::rational(q);
    let mut prev = Sqrt2Value::one();
    if k == 0 {
        return prev;
    }
    let mut cur = &x * &r(lambda * int(2));
    for j in 2..=k {
        let jj = int(j as i64);
        let a = &(&x * &r(int(2) * (&jj + lambda - int(1)))) * &cur;
        let b = &r(&jj + lambda * int(2) - int(2)) * &prev;
        let next = &(&a - &b) * &r(int(1) / &jj);
        prev = cur;
        cur = next;
    }
    cur
}

/// `G_m(s) = (-1)^m (s/2) B(s/2-m, m+1) C_{2m}^{s/2-m}(√2)` and the
/// equivalent `p_m(s) = (8π)^{-m} (2m)! C_{2m}^{s/2-m}(√2) / (s/2-m)_m`,
/// both exactly in ℚ(√2) at a rational sample point.
pub fn gegenbauer_check(m: usize, s: &Rational) -> Result<bool> {
    let lambda = s / int(2) - int(m as i64);
    let beta_den = pochhammer_rational(&lambda, m + 1);
    if beta_den.is_zero() {
        return Err(MellinError::DenominatorPole {
            param: lambda.to_string(),
            term: m + 1,
        });
    }
    let c = gegenbauer_sqrt2(2 * m, &lambda);
    let g = Sqrt2Value::rational(reduced_even(m).eval(s));

    let beta = fact(m) / beta_den;
    let beta_form = &c * &Sqrt2Value::rational(sign(m) * (s / int(2)) * beta);

    // (8π)^{-m} cancels from both sides of the second form.
    let ratio_den = pochhammer_rational(&lambda, m);
    let ratio_lhs = &g * &Sqrt2Value::rational(sign(m) / fact(m));
    let ratio_rhs = &c * &Sqrt2Value::rational(int(1) / ratio_den);
    Ok(g == beta_form && ratio_lhs == ratio_rhs)
}

/// The two shift recursions for `M_n`, derived from
/// `H_n(u) = 2u H_{n-1}(u) - 2(n-1) H_{n-2}(u)` and `H_n = H'_{n+1}/(2(n+1))`:
///
/// `M_n(s) = M_{n-1}(s+1) - (n-1)/(4π) M_{n-2}(s)` for `n ≥ 2`, and
/// `M_n(s) = (2π/(n+1)) M_{n+1}(s+1) - ((s-1)/(n+1)) M_{n+1}(s-1)`.
pub fn hermite_recursions(n: usize) -> Result<RelationReport> {
    let mut report = RelationReport::default();
    let m = build_hermite_m;
    if n >= 2 {
        let c = ExactScalar::monomial(-int(n as i64 - 1) / int(4), false, -2);
        let lhs = [m(n)];
        let rhs = [m(n - 1).shift_arg(1), m(n - 2).mul_scalar(&c)];
        report.push_scalar_residual("three_term", n, &residual(&lhs, &rhs)?);
    }
    let np1 = int(n as i64 + 1);
    let two_pi = ExactScalar::monomial(int(2) / &np1, false, 2);
    let lin = QPoly::linear(int(1) / &np1, int(-1) / &np1);
    let lhs = [m(n)];
    let rhs = [
        m(n + 1).shift_arg(1).mul_scalar(&two_pi),
        m(n + 1).shift_arg(-1).mul_poly(&lin),
    ];
    report.push_scalar_residual("derivative", n, &residual(&lhs, &rhs)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::mellin::mellin_quadrature_hermite;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn low_order_factors() {
        let (c, p) = build_p_even(0);
        assert_eq!(c, ExactScalar::one());
        assert_eq!(p, QPoly::one());
        let (c, p) = build_p_even(1);
        assert_eq!(p, QPoly::new(vec![int(1), int(-2)]));
        assert_eq!(c, ExactScalar::monomial(rat(-2, 8), false, -2));
        assert_eq!(
            reduced_even(2),
            QPoly::new(vec![int(1), rat(-4, 3), rat(4, 3)])
        );
        assert_eq!(reduced_odd(0), QPoly::one());
        assert_eq!(reduced_odd(1), QPoly::new(vec![rat(1, 3), rat(-2, 3)]));
    }

    #[test]
    fn odd_prefactor_is_free_of_sqrt2() {
        for m in 0..8 {
            assert!(odd_prefactor(m).terms().all(|((sqrt2, _), _)| !sqrt2));
        }
        // m = 0: 2^{5/2}(8π)^{-1/2}/2 = π^{-1/2}
        assert_eq!(odd_prefactor(0), ExactScalar::pi_pow_half(-1));
    }

    #[test]
    fn first_odd_transform_matches_quadrature() {
        let exact = build_p_odd(0).eval(Complex64::new(1.0, 0.0)).unwrap();
        assert!((exact - Complex64::new(1.0 / PI, 0.0)).norm() < 1e-14);
        let quad = mellin_quadrature_hermite(1, Complex64::new(1.0, 0.0)).unwrap();
        assert!((exact - quad).norm() < 1e-12);
    }

    #[test]
    fn closed_forms_match_quadrature() {
        let samples = [
            Complex64::new(1.3, 2.0),
            Complex64::new(0.4, -1.0),
            Complex64::new(2.6, 5.0),
        ];
        for n in 0..=14 {
            for s in samples {
                let exact = build_hermite_m(n).eval(s).unwrap();
                let quad = mellin_quadrature_hermite(n, s).unwrap();
                assert!(
                    (exact - quad).norm() < 1e-8 * exact.norm(),
                    "n = {n}, s = {s}: {exact} vs {quad}"
                );
            }
        }
    }

    #[test]
    fn bridges_hold() {
        for m in 0..=12 {
            assert_eq!(bridge_check(m), Ok(()), "m = {m}");
        }
        for n in 0..=24 {
            assert!(gamma_bridge_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn bridge_detects_wrong_constant() {
        // Doubling the odd prefactor must break the Laguerre route.
        let wrong = build_p_odd(2).mul_rational(&int(2));
        assert!(!wrong.same_value(&hermite_via_laguerre(5).unwrap()).unwrap());
    }

    #[test]
    fn symmetries_on_grid() {
        assert!(reflects(&reduced_even(1), 1));
        for n in 0..=16 {
            for m in 0..=16 {
                let r = hermite_functional_reciprocity(n, m);
                assert!(r.all_hold(), "{r:?}");
            }
        }
    }

    #[test]
    fn gegenbauer_examples() {
        assert!(gegenbauer_check(0, &int(3)).unwrap());
        // m = 1, s = 6: λ = 2, C_2^2(√2) = 2·2·3·2 - 2 = 22
        assert_eq!(gegenbauer_sqrt2(2, &int(2)), Sqrt2Value::rational(int(22)));
        assert!(gegenbauer_check(1, &int(6)).unwrap());
        for m in 0..=10i64 {
            for s in [int(2 * m + 2), int(2 * m + 4), int(2 * m) + rat(2, 3)] {
                assert!(
                    gegenbauer_check(m as usize, &s).unwrap(),
                    "m = {m}, s = {s}"
                );
            }
        }
    }

    #[test]
    fn gegenbauer_pole_rejected() {
        // λ = s/2 - m = 0 makes the Beta denominator vanish.
        assert!(matches!(
            gegenbauer_check(2, &int(4)),
            Err(MellinError::DenominatorPole { .. })
        ));
    }

    #[test]
    fn recursions_hold() {
        for n in 0..=20 {
            let r = hermite_recursions(n).unwrap();
            assert!(
                r.all_hold(),
                "n = {n}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
            assert_eq!(r.outcomes.len(), if n >= 2 { 2 } else { 1 });
        }
    }

    #[test]
    fn wrong_recursion_constants_fail() {
        // Coefficient 1/√(2π) on M_{n-1}(s+1), n = 2.
        let inv_sqrt_2pi = &ExactScalar::two_pow_half(-1) * &ExactScalar::pi_pow_half(-1);
        let quarter_pi = ExactScalar::monomial(rat(-1, 4), false, -2);
        let lhs = [build_hermite_m(2)];
        let rhs = [
            build_hermite_m(1).shift_arg(1).mul_scalar(&inv_sqrt_2pi),
            build_hermite_m(0).mul_scalar(&quarter_pi),
        ];
        assert!(matches!(residual(&lhs, &rhs), Ok(r) if !r.is_zero()));
        // Overall constant 1/(4(n+1)) instead of 2π/(n+1), n = 0.
        let lhs = [build_hermite_m(0)];
        let rhs = [
            build_hermite_m(1).shift_arg(1).mul_rational(&rat(1, 4)),
            build_hermite_m(1)
                .shift_arg(-1)
                .mul_poly(&QPoly::linear(int(1), int(-1)))
                .mul_scalar(&ExactScalar::monomial(rat(1, 8), false, -2)),
        ];
        assert!(!residual(&lhs, &rhs).unwrap().is_zero());
    }

    #[test]
    fn zeroth_transform_is_completed_zeta_factor() {
        let v = build_hermite_m(0).eval(Complex64::new(2.0, 0.0)).unwrap();
        assert!((v - Complex64::new(1.0 / PI, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn normal_form_is_idempotent() {
        for n in 0..10 {
            let f = build_hermite_m(n).shift_arg(3).normalized();
            assert_eq!(f.normalized(), f);
        }
    }

    proptest! {
        #[test]
        fn gegenbauer_random_samples(m in 0usize..8, p in -30i64..30, d in 1i64..7) {
            let s = rat(p, d);
            match gegenbauer_check(m, &s) {
                Ok(ok) => prop_assert!(ok),
                Err(MellinError::DenominatorPole { .. }) => {}
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}
