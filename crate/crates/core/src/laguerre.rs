//! Mellin transforms of the Laguerre functions `x^{α/2} e^{-x/2} L_n^α(x)`.
//!
//! The transform is `2^{s+α/2} Γ(s+α/2) P_n^α(s)` with
//! `P_n^α(s) = ((1+α)_n/n!) ₂F₁(-n, s+α/2; α+1; 2)`, a polynomial of degree
//! `n` with rational coefficients whenever `α` is rational. Every identity
//! below is checked as an exact polynomial (or Gamma normal form) equality.

use num_traits::{One, Zero};

use crate::error::{MellinError, Result};
use crate::gamma_form::{residual, ExpLinear, GammaForm};
use crate::hyp2f1::{hyp2f1_poly, terminating_series, LinearForm, Terminating2F1};
use crate::numerics::{
    binomial_rational, factorial, int, pochhammer_poly, pochhammer_rational, rat, rising_linear,
    stirling_first, Coeff, ExactScalar, GaussRat, Poly, QPoly, Rational,
};
use crate::oracle::classical::laguerre_values;
use crate::relations::RelationReport;

pub fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha <= &int(-1) {
        return Err(MellinError::Domain(format!(
            "alpha = {alpha} must exceed -1"
        )));
    }
    Ok(())
}

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

/// `(1+α)_n / n!`
fn normalizer(n: usize, alpha: &Rational) -> Rational {
    pochhammer_rational(&(alpha + int(1)), n) / fact(n)
}

/// The polynomial factor `P_n^α(s)`.
pub fn build_p(n: usize, alpha: &Rational) -> Result<QPoly> {
    check_alpha(alpha)?;
    let b = LinearForm::new(int(1), alpha / int(2));
    let f = hyp2f1_poly(&Terminating2F1::at_two(n, b, alpha + int(1)))?;
    Ok(f.scale(&normalizer(n, alpha)))
}

/// `M_n^α(s) = 2^{s+α/2} Γ(s+α/2) P_n^α(s)` in Gamma normal form.
pub fn build_m(n: usize, alpha: &Rational) -> Result<GammaForm> {
    let p = build_p(n, alpha)?;
    Ok(gamma_form_from_p(alpha, p))
}

fn gamma_form_from_p(alpha: &Rational, p: QPoly) -> GammaForm {
    let half = alpha / int(2);
    GammaForm::new(
        ExactScalar::one(),
        ExpLinear::new(int(1), half.clone()),
        ExpLinear::zero(),
        int(1),
        half,
        p,
    )
    .normalized()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerreMellin {
    pub n: usize,
    pub alpha: Rational,
    pub p: QPoly,
    pub gamma_form: GammaForm,
}

impl LaguerreMellin {
    pub fn new(n: usize, alpha: &Rational) -> Result<Self> {
        let p = build_p(n, alpha)?;
        let gamma_form = gamma_form_from_p(alpha, p.clone());
        Ok(LaguerreMellin {
            n,
            alpha: alpha.clone(),
            p,
            gamma_form,
        })
    }
}

/// `P_n^α(s) = (-1)^n P_n^α(1-s)`.
pub fn functional_equation_check(n: usize, alpha: &Rational) -> Result<bool> {
    let p = build_p(n, alpha)?;
    let reflected = p.compose_linear(&int(-1), &int(1)).scale(&sign(n));
    Ok(p == reflected)
}

/// `((1+α)_m/m!) P_n^α(-m-α/2) = ((1+α)_n/n!) P_m^α(-n-α/2)`.
pub fn reciprocity_check(n: usize, m: usize, alpha: &Rational) -> Result<bool> {
    let half = alpha / int(2);
    let at = |k: usize| -int(k as i64) - &half;
    let lhs = normalizer(m, alpha) * build_p(n, alpha)?.eval(&at(m));
    let rhs = normalizer(n, alpha) * build_p(m, alpha)?.eval(&at(n));
    Ok(lhs == rhs)
}

/// Closed-form derivative
/// `((1+α)_n/n!) Σ_k ((-n)_k/(1+α)_k) (2^k/k!) Σ_{j<k} ∏_{i<k, i≠j} (s+α/2+i)`,
/// i.e. `(s+α/2)_k Σ_j 1/(s+α/2+j)` written without division.
pub fn derivative_formula(n: usize, alpha: &Rational) -> Result<QPoly> {
    check_alpha(alpha)?;
    let half = alpha / int(2);
    let one_plus = alpha + int(1);
    let mut total = QPoly::zero();
    for k in 1..=n {
        let coeff = pochhammer_rational(&-int(n as i64), k) / pochhammer_rational(&one_plus, k)
            * num_traits::pow(int(2), k)
            / fact(k);
        let inner = (0..k).fold(QPoly::zero(), |acc, j| {
            let prod = (0..k).filter(|&i| i != j).fold(QPoly::one(), |p, i| {
                &p * &QPoly::linear(&half + int(i as i64), int(1))
            });
            &acc + &prod
        });
        total = &total + &inner.scale(&coeff);
    }
    Ok(total.scale(&normalizer(n, alpha)))
}

pub fn derivative_formula_check(n: usize, alpha: &Rational) -> Result<bool> {
    Ok(derivative_formula(n, alpha)? == build_p(n, alpha)?.derivative())
}

/// Expansion through signed Stirling numbers of the first kind.
pub fn stirling_form(n: usize, alpha: &Rational) -> Result<QPoly> {
    check_alpha(alpha)?;
    let shifted = QPoly::linear(alpha / int(2), int(1));
    let one_plus = alpha + int(1);
    let mut total = QPoly::zero();
    for k in 0..=n {
        let coeff = pochhammer_rational(&-int(n as i64), k) / pochhammer_rational(&one_plus, k)
            * num_traits::pow(int(2), k)
            / fact(k);
        let inner = (0..=k).fold(QPoly::zero(), |acc, j| {
            let c = sign(k + j) * stirling_first(k as i64, j as i64);
            &acc + &shifted.pow(j).scale(&c)
        });
        total = &total + &inner.scale(&coeff);
    }
    Ok(total.scale(&normalizer(n, alpha)))
}

pub fn stirling_form_check(n: usize, alpha: &Rational) -> Result<bool> {
    Ok(stirling_form(n, alpha)? == build_p(n, alpha)?)
}

/// Coefficient of `t^n` in the product of the two binomial series:
/// `Σ_ℓ (α/2-s+1)_ℓ (α/2+s)_{n-ℓ} (-1)^{n-ℓ} / (ℓ!(n-ℓ)!)`.
pub fn gf_convolution(n: usize, alpha: &Rational) -> Result<QPoly> {
    check_alpha(alpha)?;
    let half = alpha / int(2);
    let mut total = QPoly::zero();
    for l in 0..=n {
        // (α/2 - s + 1)_ℓ: rising factorial in -s
        let left = rising_linear(&int(-1), &(&half + int(1)), l);
        let right = pochhammer_poly(&half, n - l);
        let c = sign(n - l) / (fact(l) * fact(n - l));
        total = &total + &(&left * &right).scale(&c);
    }
    Ok(total)
}

pub fn gf_convolution_check(n: usize, alpha: &Rational) -> Result<bool> {
    Ok(gf_convolution(n, alpha)? == build_p(n, alpha)?)
}

/// `L_m^β(2x) = Σ_n C(β+m, m-n) 2^n (-1)^{m-n} L_n^β(x)` at a rational point.
pub fn scaling_identity_check(m: usize, beta: &Rational, x: &Rational) -> bool {
    let at_x = laguerre_values(m, beta, x);
    let at_2x = laguerre_values(m, beta, &(x * int(2)));
    let rhs: Rational = (0..=m)
        .map(|n| {
            binomial_rational(&(beta + int(m as i64)), m - n)
                * num_traits::pow(int(2), n)
                * sign(m - n)
                * &at_x[n]
        })
        .sum();
    at_2x[m] == rhs
}

/// Both sides of the first two recursions for `M_n^α`, in Gamma normal form.
fn gamma_recursions(n: usize, alpha: &Rational, report: &mut RelationReport) -> Result<()> {
    let half = alpha / int(2);
    let m = |k: usize| build_m(k, alpha);
    // ½[M_n(s) + M_{n+1}(s)] = (α/2+s-1)[M_{n+1}(s-1) - M_n(s-1)]
    let factor = QPoly::linear(&half - int(1), int(1));
    let lhs = [
        m(n)?.mul_rational(&rat(1, 2)),
        m(n + 1)?.mul_rational(&rat(1, 2)),
    ];
    let rhs = [
        m(n + 1)?.shift_arg(-1).mul_poly(&factor),
        m(n)?.shift_arg(-1).mul_poly(&factor).neg(),
    ];
    report.push_scalar_residual("gamma_sum_shift", n, &residual(&lhs, &rhs)?);

    if n >= 1 {
        // [1 + (α/2+s)/n] M_n(s) = (1/2n) M_n(s+1) + (1 + α/n) M_{n-1}(s)
        let nn = int(n as i64);
        let lead = QPoly::linear(int(1) + &half / &nn, int(1) / &nn);
        let lhs = [m(n)?.mul_poly(&lead)];
        let rhs = [
            m(n)?.shift_arg(1).mul_rational(&(int(1) / (int(2) * &nn))),
            m(n - 1)?.mul_rational(&(int(1) + alpha / &nn)),
        ];
        report.push_scalar_residual("gamma_three_term", n, &residual(&lhs, &rhs)?);
    }
    Ok(())
}

/// The polynomial recursions obtained from the Gamma-form ones by removing
/// the common factor `2^{s+α/2-1} Γ(s+α/2-1)` (resp. `2^{s+α/2} Γ(s+α/2)`).
pub fn polynomial_recursion_residuals(
    n: usize,
    alpha: &Rational,
) -> Result<Vec<(&'static str, QPoly)>> {
    let half = alpha / int(2);
    let p = |k: usize| build_p(k, alpha);
    let down = |q: QPoly| q.compose_linear(&int(1), &int(-1));
    let up = |q: QPoly| q.compose_linear(&int(1), &int(1));

    // (s+α/2-1)[P_n(s) + P_{n+1}(s)] = (α/2+s-1)[P_{n+1}(s-1) - P_n(s-1)]
    let factor = QPoly::linear(&half - int(1), int(1));
    let lhs = &factor * &(&p(n)? + &p(n + 1)?);
    let rhs = &factor * &(&down(p(n + 1)?) - &down(p(n)?));
    let mut out = vec![("poly_sum_shift", &lhs - &rhs)];

    if n >= 1 {
        // [1 + (α/2+s)/n] P_n(s) = (1/n)(s+α/2) P_n(s+1) + (1 + α/n) P_{n-1}(s)
        let nn = int(n as i64);
        let lead = QPoly::linear(int(1) + &half / &nn, int(1) / &nn);
        let lhs = &lead * &p(n)?;
        let shifted = QPoly::linear(&half / &nn, int(1) / &nn);
        let rhs = &(&shifted * &up(p(n)?)) + &p(n - 1)?.scale(&(int(1) + alpha / &nn));
        out.push(("poly_three_term", &lhs - &rhs));
    }
    Ok(out)
}

/// All four recursions at degree `n`. Structural mismatches between Gamma
/// normal forms are errors; failing identities are reported with their
/// residuals.
pub fn recursion_checks(n: usize, alpha: &Rational) -> Result<RelationReport> {
    let mut report = RelationReport::default();
    gamma_recursions(n, alpha, &mut report)?;
    for (name, r) in polynomial_recursion_residuals(n, alpha)? {
        report.push_poly_residual(name, n, &r);
    }
    Ok(report)
}

/// Symmetric Meixner–Pollaczek polynomial `P_n^{(λ)}(x; π/2)` as a
/// polynomial in `x` over the Gaussian rationals:
/// `((2λ)_n/n!) iⁿ ₂F₁(-n, λ+ix; 2λ; 2)`.
pub fn meixner_pollaczek(n: usize, lambda: &Rational) -> Result<Poly<GaussRat>> {
    if lambda <= &Rational::zero() {
        return Err(MellinError::Domain(format!(
            "lambda = {lambda} must be positive"
        )));
    }
    let two_lambda = lambda * int(2);
    let series = terminating_series(
        n,
        &GaussRat::real(lambda.clone()),
        &GaussRat::i(),
        &two_lambda,
        &GaussRat::real(int(2)),
    )?;
    let c = pochhammer_rational(&two_lambda, n) / fact(n);
    Ok(series.scale(&(GaussRat::i_pow(n as i64) * &GaussRat::real(c))))
}

/// `P_n^α(s) = (-i)ⁿ P_n^{((1+α)/2)}(i/2 - is; π/2)` over ℚ(i).
pub fn meixner_pollaczek_check(n: usize, alpha: &Rational) -> Result<bool> {
    let lambda = (alpha + int(1)) / int(2);
    let mp = meixner_pollaczek(n, &lambda)?;
    let half_i = GaussRat::new(Rational::zero(), rat(1, 2));
    let substituted = mp.compose_linear(&-GaussRat::i(), &half_i);
    let rhs = substituted.scale(&GaussRat::i_pow(-(n as i64)));
    let lhs = build_p(n, alpha)?.map(GaussRat::from_rational);
    Ok(lhs == rhs)
}
