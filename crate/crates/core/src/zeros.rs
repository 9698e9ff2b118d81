//! Critical-line certification of the polynomial factors.
//!
//! On `s = 1/2 + it` the functional equation `P(s) = ±P(1-s)` makes the
//! factor purely real (even degree) or purely imaginary (odd degree), so it
//! equals `i^ε ρ(t)` for a real polynomial `ρ` of the same degree. All zeros
//! of the factor lie on the critical line exactly when `ρ` has as many
//! distinct real roots as its degree; Sturm counting decides that, and
//! `gcd(ρ, ρ') = 1` proves simplicity.

use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{MellinError, Result};
use crate::hermite::{reduced_even, reduced_odd};
use crate::laguerre::build_p;
use crate::numerics::{
    int, poly_gcd, rat, rational_from_f64, to_f64, Coeff, GaussRat, Parity, QPoly, Rational,
    RootInterval, SignEvaluator, SturmChain,
};
use crate::oracle::gamma::complex_gamma;
use crate::oracle::quad::{integrate, QuadOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Laguerre,
    HermiteEven,
    HermiteOddReduced,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Laguerre => "laguerre",
            Family::HermiteEven => "hermite_even",
            Family::HermiteOddReduced => "hermite_odd_reduced",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    Real,
    Imaginary,
}

/// The factor whose zeros are certified: `P_n^α`, `G_n` or `H_n`.
pub fn factor_poly(family: Family, n: usize, alpha: Option<&Rational>) -> Result<QPoly> {
    match family {
        Family::Laguerre => {
            let alpha =
                alpha.ok_or_else(|| MellinError::Domain("laguerre family needs alpha".into()))?;
            build_p(n, alpha)
        }
        Family::HermiteEven => Ok(reduced_even(n)),
        Family::HermiteOddReduced => Ok(reduced_odd(n)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalLinePoly {
    pub family: Family,
    pub n: usize,
    pub alpha: Option<Rational>,
    pub rho: QPoly,
    pub part: Part,
}

/// Split `p(1/2 + it)` into real and imaginary polynomials in `t`.
pub fn critical_line_parts(p: &QPoly) -> (QPoly, QPoly) {
    let on_line = p
        .map(GaussRat::from_rational)
        .compose_linear(&GaussRat::i(), &GaussRat::real(rat(1, 2)));
    let re = QPoly::new(on_line.coeffs().iter().map(|c| c.re.clone()).collect());
    let im = QPoly::new(on_line.coeffs().iter().map(|c| c.im.clone()).collect());
    (re, im)
}

/// Build `ρ` for a factor polynomial already in hand.
pub fn critical_line_from_factor(
    family: Family,
    n: usize,
    alpha: Option<Rational>,
    factor: &QPoly,
) -> Result<CriticalLinePoly> {
    let (re, im) = critical_line_parts(factor);
    let (part, rho, discarded) = if n % 2 == 0 {
        (Part::Real, re, im)
    } else {
        (Part::Imaginary, im, re)
    };
    if !discarded.is_zero() {
        return Err(MellinError::Structural(format!(
            "{family} n = {n}: discarded part {discarded} is not zero; the functional equation fails"
        )));
    }
    Ok(CriticalLinePoly {
        family,
        n,
        alpha,
        rho,
        part,
    })
}

pub fn critical_line_poly(
    family: Family,
    n: usize,
    alpha: Option<&Rational>,
) -> Result<CriticalLinePoly> {
    let factor = factor_poly(family, n, alpha)?;
    let alpha = (family == Family::Laguerre)
        .then(|| alpha.cloned())
        .flatten();
    critical_line_from_factor(family, n, alpha, &factor)
}

fn ser_opt_rational<S: Serializer>(
    q: &Option<Rational>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => ser.serialize_str(&q.to_string()),
        None => ser.serialize_none(),
    }
}

fn ser_poly<S: Serializer>(p: &QPoly, ser: S) -> std::result::Result<S::Ok, S::Error> {
    crate::serde_rational::serialize_vec(p.coeffs(), ser)
}

fn ser_roots<S: Serializer>(roots: &[f64], ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(roots.iter().map(|r| r.to_string()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroCertificate {
    pub family: Family,
    pub n: usize,
    #[serde(serialize_with = "ser_opt_rational")]
    pub alpha: Option<Rational>,
    pub part: Part,
    pub degree: usize,
    #[serde(serialize_with = "ser_poly")]
    pub rho: QPoly,
    pub intervals: Vec<RootInterval>,
    pub squarefree: bool,
    pub count: usize,
    /// Roots in `t`; the zeros of the factor are `s = 1/2 + it`.
    #[serde(serialize_with = "ser_roots")]
    pub refined_roots: Vec<f64>,
    /// `max |ρ(t)| / (|ρ'(t)| max(1, |t|))` over the refined roots, exact.
    pub max_scaled_residual: f64,
    pub symmetric: bool,
}

/// Relative width after which exact bisection hands over to Newton steps.
const BISECT_WIDTH: f64 = 1e-9;
const RESIDUAL_LIMIT: f64 = 1e-10;

/// Floating root inside an isolating interval of a simple root: exact
/// sign bisection, then Newton steps evaluated in exact arithmetic and
/// rounded to double, kept only while they stay inside the bracket.
fn refine_root(rho: &SignEvaluator, d_rho: &SignEvaluator, iv: &RootInterval) -> f64 {
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    // The left endpoint may be a root belonging to the previous interval,
    // so orient the bisection by the sign at the right endpoint.
    let hi_sign = rho.sign(&hi);
    if hi_sign == 0 {
        return to_f64(&hi);
    }
    let scale = |lo: &Rational, hi: &Rational| to_f64(lo).abs().max(to_f64(hi).abs()).max(1.0);
    while to_f64(&(&hi - &lo)) > BISECT_WIDTH * scale(&lo, &hi) {
        let mid = (&lo + &hi) / int(2);
        match rho.sign(&mid) {
            0 => return to_f64(&mid),
            s if s == hi_sign => hi = mid,
            _ => lo = mid,
        }
    }
    let mut t = to_f64(&((&lo + &hi) / int(2)));
    for _ in 0..4 {
        let Some(x) = rational_from_f64(t) else { break };
        let d = d_rho.value(&x);
        if d.is_zero() {
            break;
        }
        let next = &x - rho.value(&x) / d;
        if !(lo <= next && next <= hi) {
            break;
        }
        let next = to_f64(&next);
        if next == t {
            break;
        }
        t = next;
    }
    t
}

fn scaled_residual(rho: &SignEvaluator, d_rho: &SignEvaluator, t: f64) -> f64 {
    let Some(x) = rational_from_f64(t) else {
        return f64::INFINITY;
    };
    let d = to_f64(&d_rho.value(&x)).abs();
    if d == 0.0 {
        return f64::INFINITY;
    }
    to_f64(&rho.value(&x)).abs() / (d * t.abs().max(1.0))
}

/// Exact certificate that every zero of the factor is simple and on the
/// critical line. Fails with [`MellinError::Certification`] otherwise.
pub fn certify_zeros(cp: &CriticalLinePoly) -> Result<ZeroCertificate> {
    let rho = &cp.rho;
    if rho.is_zero() {
        return Err(MellinError::ZeroPolynomial);
    }
    let degree = rho.degree().unwrap_or(0);
    let chain = SturmChain::new(rho)?;
    let intervals = chain.isolate();
    let d_rho = rho.derivative();
    let squarefree = degree == 0 || poly_gcd(rho, &d_rho).degree() == Some(0);
    let count = intervals.len();
    if !squarefree || count != degree {
        return Err(MellinError::Certification(format!(
            "{} n = {}: {count} distinct real roots for degree {degree}, squarefree = {squarefree}",
            cp.family, cp.n
        )));
    }
    let (fast, fast_d) = (SignEvaluator::new(rho), SignEvaluator::new(&d_rho));
    let refined_roots: Vec<f64> = intervals
        .iter()
        .map(|iv| refine_root(&fast, &fast_d, iv))
        .collect();
    let max_scaled_residual = refined_roots
        .iter()
        .map(|&t| scaled_residual(&fast, &fast_d, t))
        .fold(0.0, f64::max);
    if max_scaled_residual > RESIDUAL_LIMIT {
        return Err(MellinError::Certification(format!(
            "{} n = {}: refined root residual {max_scaled_residual:e} above {RESIDUAL_LIMIT:e}",
            cp.family, cp.n
        )));
    }
    let symmetric = match rho.parity() {
        Some(Parity::Even) => cp.n % 2 == 0,
        Some(Parity::Odd) => cp.n % 2 == 1,
        None => false,
    };
    Ok(ZeroCertificate {
        family: cp.family,
        n: cp.n,
        alpha: cp.alpha.clone(),
        part: cp.part,
        degree,
        rho: rho.clone(),
        intervals,
        squarefree,
        count,
        refined_roots,
        max_scaled_residual,
        symmetric,
    })
}

/// Strict interlacing of the zeros of consecutive degrees `n` and `n+1`.
///
/// The isolating intervals of `ρ_{n+1}` are refined until none contains a
/// root of `ρ_n`; then `ρ_n` must take strictly alternating signs at their
/// right endpoints. With `n+1` points and `n` sign changes, each gap holds
/// exactly one of the `n` roots of `ρ_n`.
pub fn interlacing_check(family: Family, n: usize, alpha: Option<&Rational>) -> Result<bool> {
    let low = critical_line_poly(family, n, alpha)?;
    let high = critical_line_poly(family, n + 1, alpha)?;
    certify_zeros(&low)?;
    let high_cert = certify_zeros(&high)?;
    if poly_gcd(&low.rho, &high.rho).degree() != Some(0) {
        return Ok(false);
    }
    let low_chain = SturmChain::new(&low.rho)?;
    let high_chain = SturmChain::new(&high.rho)?;
    let low_signs = SignEvaluator::new(&low.rho);
    let mut signs = Vec::with_capacity(high_cert.intervals.len());
    for iv in &high_cert.intervals {
        let mut iv = iv.clone();
        let mut rounds = 0;
        while low_chain.count(&iv.lo, &iv.hi) > 0 {
            rounds += 1;
            if rounds > 256 {
                return Err(MellinError::Certification(format!(
                    "{family} n = {n}: isolating intervals keep overlapping"
                )));
            }
            iv = high_chain.refine(&iv, &(iv.width() / int(2)));
        }
        signs.push(low_signs.sign(&iv.hi));
    }
    Ok(signs.iter().all(|&s| s != 0) && signs.windows(2).all(|w| w[0] == -w[1]))
}

fn eval_complex(p: &QPoly, s: Complex64) -> Complex64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * s + to_f64(c))
}

/// `∫ P_n(1/2+it) conj(P_m(1/2+it)) 2^{α+1} |Γ(1/2+α/2+it)|² dt` over a
/// window `(-T, T)` wide enough that the Gamma decay makes the tail
/// negligible.
pub fn orthogonality_quadrature(n: usize, m: usize, alpha: &Rational) -> Result<Complex64> {
    let pn = build_p(n, alpha)?;
    let pm = build_p(m, alpha)?;
    let a = to_f64(alpha);
    let weight = |t: f64| -> Result<f64> {
        let g = complex_gamma(Complex64::new(0.5 + a / 2.0, t))?;
        Ok(2f64.powf(a + 1.0) * g.norm_sqr())
    };
    let integrand = |t: f64| {
        let s = Complex64::new(0.5, t);
        let w = weight(t).unwrap_or(0.0);
        eval_complex(&pn, s) * eval_complex(&pm, s).conj() * w
    };
    let peak = (0..40)
        .map(|k| integrand(k as f64 * 0.25).norm())
        .fold(0.0, f64::max);
    let mut window = 10.0;
    while integrand(window).norm() > 1e-18 * peak || integrand(-window).norm() > 1e-18 * peak {
        window *= 1.5;
        if window > 1e4 {
            return Err(MellinError::Domain(
                "orthogonality weight does not decay".into(),
            ));
        }
    }
    let opts = QuadOptions {
        abs_tol: 1e-13 * peak,
        rel_tol: 1e-12,
        max_intervals: 20_000,
    };
    Ok(integrate(integrand, -window, window, (2.0 * window) as usize, opts)?.value)
}

/// `2π Γ(n+α+1)/n!`, the diagonal value by Parseval.
pub fn orthogonality_norm(n: usize, alpha: &Rational) -> Result<f64> {
    let g = complex_gamma(Complex64::new(n as f64 + to_f64(alpha) + 1.0, 0.0))?;
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    Ok(2.0 * std::f64::consts::PI * g.re / fact)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lag(n: usize, a: &Rational) -> CriticalLinePoly {
        critical_line_poly(Family::Laguerre, n, Some(a)).unwrap()
    }

    #[test]
    fn low_degree_rho() {
        let c = lag(1, &rat(3, 2));
        assert_eq!(c.rho, QPoly::new(vec![int(0), int(-2)]));
        assert_eq!(c.part, Part::Imaginary);
        let c = lag(2, &int(0));
        assert_eq!(c.rho, QPoly::new(vec![rat(1, 2), int(0), int(-2)]));
        assert_eq!(lag(0, &int(1)).rho, QPoly::one());
    }

    #[test]
    fn certificate_examples() {
        let cert = certify_zeros(&lag(2, &int(0))).unwrap();
        assert_eq!(cert.count, 2);
        assert!((cert.refined_roots[0] + 0.5).abs() < 1e-12);
        assert!((cert.refined_roots[1] - 0.5).abs() < 1e-12);
        let cert = certify_zeros(&lag(0, &int(1))).unwrap();
        assert!(cert.intervals.is_empty() && cert.refined_roots.is_empty());
    }

    #[test]
    fn certificate_grid() {
        for a in [rat(-1, 2), int(0), rat(1, 2), int(1), rat(5, 2)] {
            for n in 0..=20 {
                let cert = certify_zeros(&lag(n, &a)).unwrap();
                assert_eq!(cert.count, n);
                assert!(cert.squarefree && cert.symmetric);
                for (iv, r) in cert.intervals.iter().zip(&cert.refined_roots) {
                    let lo = to_f64(&iv.lo);
                    let hi = to_f64(&iv.hi);
                    assert!(lo <= *r && *r <= hi, "{r} outside ({lo}, {hi}]");
                }
                assert!(cert.intervals.windows(2).all(|w| w[0].hi <= w[1].lo));
            }
        }
        for m in 0..=12 {
            for fam in [Family::HermiteEven, Family::HermiteOddReduced] {
                let cert = certify_zeros(&critical_line_poly(fam, m, None).unwrap()).unwrap();
                assert_eq!(cert.count, m);
            }
        }
    }

    #[test]
    fn off_line_zeros_fail_certification() {
        // (s-1/2)² + 1 has zeros at 1/2 ± i, on the line: fine.
        let on = QPoly::new(vec![rat(5, 4), int(-1), int(1)]);
        let cp = critical_line_from_factor(Family::Laguerre, 2, None, &on).unwrap();
        assert!(certify_zeros(&cp).is_ok());
        // (s-1/2)² - 1 has zeros at -1/2 and 3/2, off the line.
        let off = QPoly::new(vec![rat(-3, 4), int(-1), int(1)]);
        let cp = critical_line_from_factor(Family::Laguerre, 2, None, &off).unwrap();
        assert!(matches!(
            certify_zeros(&cp),
            Err(MellinError::Certification(_))
        ));
        // A double zero on the line is not simple.
        let double = QPoly::new(vec![rat(1, 4), int(-1), int(1)]);
        let cp = critical_line_from_factor(Family::Laguerre, 2, None, &double).unwrap();
        assert!(matches!(
            certify_zeros(&cp),
            Err(MellinError::Certification(_))
        ));
    }

    #[test]
    fn broken_functional_equation_is_structural() {
        let p = QPoly::new(vec![int(1), int(1)]);
        assert!(matches!(
            critical_line_from_factor(Family::Laguerre, 1, None, &p),
            Err(MellinError::Structural(_))
        ));
    }

    #[test]
    fn interlacing_grid() {
        assert!(interlacing_check(Family::Laguerre, 0, Some(&int(0))).unwrap());
        assert!(interlacing_check(Family::Laguerre, 1, Some(&int(0))).unwrap());
        for a in [rat(-1, 2), int(0), int(1)] {
            for n in 0..=19 {
                assert!(
                    interlacing_check(Family::Laguerre, n, Some(&a)).unwrap(),
                    "n = {n}, alpha = {a}"
                );
            }
        }
        for m in 0..12 {
            assert!(interlacing_check(Family::HermiteEven, m, None).unwrap());
            assert!(interlacing_check(Family::HermiteOddReduced, m, None).unwrap());
        }
    }

    #[test]
    fn orthogonality_small_cases() {
        let a = int(0);
        let d = orthogonality_quadrature(0, 0, &a).unwrap();
        assert!(d.re > 0.0 && d.im.abs() < 1e-12 * d.re);
        assert!((d.re / orthogonality_norm(0, &a).unwrap() - 1.0).abs() < 1e-9);
        let off = orthogonality_quadrature(1, 0, &a).unwrap();
        assert!(off.norm() < 1e-6 * d.re);
    }

    #[test]
    fn certificate_serializes_rationals_as_strings() {
        let cert = certify_zeros(&lag(2, &rat(1, 2))).unwrap();
        let v: serde_json::Value = serde_json::to_value(&cert).unwrap();
        assert_eq!(v["family"], "laguerre");
        assert_eq!(v["alpha"], "1/2");
        assert!(v["intervals"][0]["lo"].is_string());
        let v = serde_json::to_value(certify_zeros(&lag(2, &int(0))).unwrap()).unwrap();
        assert_eq!(v["refined_roots"][1], "0.5");
        assert_eq!(v["rho"], serde_json::json!(["1/2", "0", "-2"]));
    }
}
