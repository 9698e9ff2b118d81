//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p mellin-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mellin_core::hermite::{
    build_hermite_m, hermite_functional_reciprocity, hermite_recursions, reduced_even, reduced_odd,
};
use mellin_core::laguerre::{
    build_m, build_p, derivative_formula_check, functional_equation_check, gf_convolution_check,
    reciprocity_check, recursion_checks, stirling_form_check,
};
use mellin_core::numerics::{int, rat, QPoly, Rational};
use mellin_core::oracle::{
    generating_function_check, hydrogen_mellin, hydrogen_quadrature, mellin_quadrature_hermite,
    mellin_quadrature_laguerre, HydrogenState,
};
use mellin_core::zeros::{
    certify_zeros, critical_line_poly, interlacing_check, orthogonality_norm,
    orthogonality_quadrature, Family,
};
use num_complex::Complex64;

type Outcome = Result<String, String>;

fn alpha_set() -> Vec<Rational> {
    vec![rat(-1, 2), int(0), rat(1, 2), int(1), rat(3, 2), rat(7, 3)]
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn reflects(p: &QPoly, k: usize) -> bool {
    let sign = if k % 2 == 0 { int(1) } else { int(-1) };
    p == &p.compose_linear(&int(-1), &int(1)).scale(&sign)
}

fn functional_equations() -> Outcome {
    let mut checked = 0;
    for a in alpha_set() {
        for n in 0..=24 {
            ensure(
                functional_equation_check(n, &a).map_err(|e| e.to_string())?,
                || format!("P_{n}^{a}(s) != (-1)^n P_{n}^{a}(1-s)"),
            )?;
            checked += 1;
        }
    }
    for m in 0..=12 {
        ensure(reflects(&reduced_even(m), m), || {
            format!("p_{m}(s) != (-1)^m p_{m}(1-s)")
        })?;
        ensure(reflects(&reduced_odd(m), m), || {
            format!("odd reduced factor {m} is not reflective")
        })?;
        checked += 2;
    }
    Ok(format!("{checked} polynomials"))
}

fn reciprocity() -> Outcome {
    for a in alpha_set() {
        for n in 0..=16 {
            for m in 0..=16 {
                ensure(
                    reciprocity_check(n, m, &a).map_err(|e| e.to_string())?,
                    || format!("Laguerre reciprocity n={n} m={m} alpha={a}"),
                )?;
            }
        }
    }
    for n in 0..=16 {
        for m in 0..=16 {
            let r = hermite_functional_reciprocity(n, m);
            ensure(r.odd_reciprocity, || {
                format!("H_{n}(-2·{m}-1) != H_{m}(-2·{n}-1)")
            })?;
            if n <= 12 && m <= 12 {
                ensure(r.even_reciprocity, || {
                    format!("even Hermite reciprocity n={n} m={m}")
                })?;
            }
        }
    }
    Ok("Laguerre 17x17 per alpha, even Hermite 13x13, odd Hermite 17x17".into())
}

fn expansions() -> Outcome {
    for a in alpha_set() {
        for n in 0..=16 {
            let e = |x: mellin_core::MellinError| x.to_string();
            ensure(derivative_formula_check(n, &a).map_err(e)?, || {
                format!("derivative n={n} alpha={a}")
            })?;
            ensure(stirling_form_check(n, &a).map_err(e)?, || {
                format!("Stirling n={n} alpha={a}")
            })?;
            ensure(gf_convolution_check(n, &a).map_err(e)?, || {
                format!("convolution n={n} alpha={a}")
            })?;
        }
    }
    Ok("n <= 16 over the alpha set".into())
}

fn recursions() -> Outcome {
    let mut identities = 0;
    for a in alpha_set() {
        for n in 0..=20 {
            let report = recursion_checks(n, &a).map_err(|e| e.to_string())?;
            if let Some(f) = report.failures().next() {
                return Err(format!("{} n={n} alpha={a}: {:?}", f.relation, f.residual));
            }
            identities += report.outcomes.len();
        }
    }
    for n in 0..=20 {
        let report = hermite_recursions(n).map_err(|e| e.to_string())?;
        if let Some(f) = report.failures().next() {
            return Err(format!("{} n={n}: {:?}", f.relation, f.residual));
        }
        identities += report.outcomes.len();
    }
    Ok(format!("{identities} exact identities"))
}

fn certify(family: Family, n: usize, alpha: Option<&Rational>) -> Result<usize, String> {
    let cp = critical_line_poly(family, n, alpha).map_err(|e| e.to_string())?;
    let cert = certify_zeros(&cp).map_err(|e| format!("{family} n={n}: {e}"))?;
    ensure(cert.squarefree && cert.count == cert.degree, || {
        format!(
            "{family} n={n}: {} of {} roots on the line",
            cert.count, cert.degree
        )
    })?;
    Ok(cert.count)
}

fn zero_certification() -> Outcome {
    let mut roots = 0;
    let mut families: Vec<(Family, usize, Option<Rational>)> =
        [rat(-1, 2), int(0), rat(1, 2), int(1), rat(5, 2)]
            .into_iter()
            .map(|a| (Family::Laguerre, 20, Some(a)))
            .collect();
    families.push((Family::HermiteEven, 12, None));
    families.push((Family::HermiteOddReduced, 12, None));
    for (family, top, alpha) in &families {
        for n in 0..=*top {
            roots += certify(*family, n, alpha.as_ref())?;
            if n < *top {
                let ok =
                    interlacing_check(*family, n, alpha.as_ref()).map_err(|e| e.to_string())?;
                ensure(ok, || {
                    format!("{family} n={n} alpha={alpha:?}: zeros do not interlace")
                })?;
            }
        }
    }
    Ok(format!("{roots} simple zeros certified"))
}

fn samples() -> Vec<Complex64> {
    let mut out = Vec::new();
    for re in [0.3, 1.0, 2.6] {
        for im in [0.0, 1.0, -1.0, 5.0, -5.0] {
            out.push(Complex64::new(re, im));
        }
    }
    out
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm()
}

fn oracle_agreement() -> Outcome {
    let mut worst = 0.0f64;
    for a in [rat(-1, 2), int(0), rat(1, 2), int(2)] {
        for n in 0..=10 {
            let m = build_m(n, &a).map_err(|e| e.to_string())?;
            for s in samples() {
                let exact = m.eval(s).map_err(|e| e.to_string())?;
                let quad = mellin_quadrature_laguerre(n, &a, s).map_err(|e| e.to_string())?;
                let e = rel(exact, quad);
                ensure(e < 1e-8, || {
                    format!("Laguerre n={n} alpha={a} s={s}: {exact} vs {quad}")
                })?;
                worst = worst.max(e);
            }
        }
    }
    for n in 0..=14 {
        let m = build_hermite_m(n);
        for s in samples() {
            let exact = m.eval(s).map_err(|e| e.to_string())?;
            let quad = mellin_quadrature_hermite(n, s).map_err(|e| e.to_string())?;
            let e = rel(exact, quad);
            ensure(e < 1e-8, || {
                format!("Hermite n={n} s={s}: {exact} vs {quad}")
            })?;
            worst = worst.max(e);
        }
    }
    Ok(format!("max relative error {worst:.1e}"))
}

fn hydrogen() -> Outcome {
    let mut worst = 0.0f64;
    for (n, l, d) in [
        (1, 0, 3),
        (2, 0, 3),
        (3, 1, 3),
        (2, 0, 2),
        (4, 1, 5),
        (3, 0, 9),
    ] {
        let st = HydrogenState::new(n, l, d).map_err(|e| e.to_string())?;
        for s in samples() {
            let exact = hydrogen_mellin(&st, s).map_err(|e| e.to_string())?;
            let quad = hydrogen_quadrature(&st, s).map_err(|e| e.to_string())?;
            let e = rel(exact, quad);
            ensure(e < 1e-8, || {
                format!("state ({n},{l},{d}) s={s}: {exact} vs {quad}")
            })?;
            worst = worst.max(e);
        }
        let count = certify(Family::Laguerre, st.degree_eff(), Some(&st.alpha_eff()))?;
        ensure(count == (n - l - 1) as usize, || {
            format!("state ({n},{l},{d}): {count} zeros")
        })?;
    }
    Ok(format!("6 states, max relative error {worst:.1e}"))
}

fn generating_function() -> Outcome {
    let mut worst = 0.0f64;
    for s in [
        Complex64::new(0.7, 0.0),
        Complex64::new(1.3, 0.0),
        Complex64::new(2.4, 0.0),
        Complex64::new(0.5, 3.0),
    ] {
        for t in [-0.5, -0.3, -0.1, 0.1, 0.3, 0.5] {
            let r = generating_function_check(s, t, 40).map_err(|e| e.to_string())?;
            ensure(r.residual < 1e-6, || {
                format!("s={s} t={t}: residual {:e}", r.residual)
            })?;
            worst = worst.max(r.residual);
        }
    }
    Ok(format!("max residual {worst:.1e}"))
}

fn orthogonality() -> Outcome {
    let mut worst = 0.0f64;
    for a in [int(0), rat(1, 2)] {
        let norms: Vec<f64> = (0..=8)
            .map(|n| orthogonality_norm(n, &a))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for n in 0..=8 {
            for m in 0..=8 {
                let v = orthogonality_quadrature(n, m, &a).map_err(|e| e.to_string())?;
                let scale = (norms[n] * norms[m]).sqrt();
                if n == m {
                    ensure((v.re - norms[n]).abs() < 1e-6 * norms[n], || {
                        format!("diagonal n={n} alpha={a}: {v} vs {}", norms[n])
                    })?;
                } else {
                    ensure(v.norm() < 1e-6 * scale, || {
                        format!("<P_{n}, P_{m}> alpha={a} = {v}")
                    })?;
                    worst = worst.max(v.norm() / scale);
                }
            }
        }
    }
    Ok(format!("max off-diagonal ratio {worst:.1e}"))
}

fn specific_values() -> Outcome {
    let one_minus_2s = QPoly::new(vec![int(1), int(-2)]);
    for a in alpha_set().into_iter().chain([int(2), rat(5, 2)]) {
        let p = build_p(1, &a).map_err(|e| e.to_string())?;
        ensure(p == one_minus_2s, || format!("P_1^{a} = {p}"))?;
    }
    let p2 = build_p(2, &int(0)).map_err(|e| e.to_string())?;
    ensure(p2 == QPoly::new(vec![int(1), int(-2), int(2)]), || {
        format!("P_2^0 = {p2}")
    })?;
    let cp = critical_line_poly(Family::Laguerre, 2, Some(&int(0))).map_err(|e| e.to_string())?;
    let cert = certify_zeros(&cp).map_err(|e| e.to_string())?;
    ensure(cert.refined_roots == [-0.5, 0.5], || {
        format!("P_2^0 roots at t = {:?}", cert.refined_roots)
    })?;
    let m0 = build_hermite_m(0)
        .eval(Complex64::new(2.0, 0.0))
        .map_err(|e| e.to_string())?;
    let expected = 1.0 / std::f64::consts::PI;
    ensure(
        (m0.re - expected).abs() < 1e-12 && m0.im.abs() < 1e-12,
        || format!("M_0(2) = {m0}"),
    )?;
    Ok("P_1 = 1 - 2s, P_2^0 roots 1/2 ± i/2, M_0(2) = 1/pi".into())
}

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "AC1 functional equations",
            limit: Some(Duration::from_secs(10)),
            run: functional_equations,
        },
        Criterion {
            name: "AC2 reciprocity",
            limit: Some(Duration::from_secs(10)),
            run: reciprocity,
        },
        Criterion {
            name: "AC3 expansions",
            limit: None,
            run: expansions,
        },
        Criterion {
            name: "AC4 recursions",
            limit: None,
            run: recursions,
        },
        Criterion {
            name: "AC5 zero certification",
            limit: Some(Duration::from_secs(60)),
            run: zero_certification,
        },
        Criterion {
            name: "AC6 oracle agreement",
            limit: None,
            run: oracle_agreement,
        },
        Criterion {
            name: "AC7 hydrogen",
            limit: None,
            run: hydrogen,
        },
        Criterion {
            name: "AC8 generating function",
            limit: None,
            run: generating_function,
        },
        Criterion {
            name: "AC9 orthogonality",
            limit: None,
            run: orthogonality,
        },
        Criterion {
            name: "AC10 specific values",
            limit: None,
            run: specific_values,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:<26} {:>8.2?}  {detail}", c.name, elapsed),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:<26} {:>8.2?}  {detail}", c.name, elapsed);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
