//! Verification suites. Each suite expands its grid into independent cases;
//! cases run in parallel and are reported in construction order.

use std::fmt::Write as _;

use mellin_core::hermite::build_hermite_m;
use mellin_core::hermite::{
    bridge_check, gamma_bridge_check, gegenbauer_check, hermite_functional_reciprocity,
    hermite_recursions,
};
use mellin_core::hyp2f1::{pfaff_terminating_check, LinearForm};
use mellin_core::laguerre::{
    build_m, derivative_formula_check, functional_equation_check, gf_convolution_check,
    meixner_pollaczek_check, reciprocity_check, recursion_checks, scaling_identity_check,
    stirling_form_check,
};
use mellin_core::numerics::{int, Rational};
use mellin_core::oracle::{
    generating_function_check, hydrogen_mellin, hydrogen_quadrature, mellin_quadrature_hermite,
    mellin_quadrature_laguerre, HydrogenState,
};
use mellin_core::relations::RelationReport;
use mellin_core::zeros::{
    certify_zeros, critical_line_poly, interlacing_check, orthogonality_norm,
    orthogonality_quadrature, Family,
};
use mellin_core::MellinError;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::grid::{points, rationals, Grid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Laguerre,
    Hermite,
    Zeros,
    Oracle,
    Gf,
}

impl Suite {
    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Laguerre,
                Suite::Hermite,
                Suite::Zeros,
                Suite::Oracle,
                Suite::Gf,
            ],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Laguerre => "laguerre",
            Suite::Hermite => "hermite",
            Suite::Zeros => "zeros",
            Suite::Oracle => "oracle",
            Suite::Gf => "gf",
        }
    }
}

/// What a failing case means for the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Identity,
    Certification,
    Numeric,
}

type Check = Box<dyn Fn() -> Result<(), String> + Send + Sync>;

struct Case {
    key: String,
    kind: Kind,
    check: Check,
}

impl Case {
    fn new(
        key: String,
        kind: Kind,
        check: impl Fn() -> Result<(), String> + Send + Sync + 'static,
    ) -> Case {
        Case {
            key,
            kind,
            check: Box::new(check),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub suite: &'static str,
    pub case: String,
    pub kind: Kind,
    pub passed: bool,
    /// Residual or error message for failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

/// Outcome of `verify`. Wall time is deliberately absent so reports from
/// repeated runs compare byte for byte; it is printed separately.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub suite: &'static str,
    pub seed: u64,
    pub cases_run: usize,
    pub suites: Vec<SuiteSummary>,
    pub failures: Vec<CaseResult>,
    #[serde(skip)]
    pub results: Vec<CaseResult>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run(suite: Suite, grid: &Grid, tol: Option<f64>) -> Result<RunReport, String> {
    let mut results = Vec::new();
    let mut suites = Vec::new();
    for member in suite.members() {
        let cases = build_cases(member, grid, tol)?;
        let name = member.name();
        let outcome: Vec<CaseResult> = cases
            .into_par_iter()
            .map(|case| {
                let r = (case.check)();
                CaseResult {
                    suite: name,
                    case: case.key,
                    kind: case.kind,
                    passed: r.is_ok(),
                    detail: r.err(),
                }
            })
            .collect();
        suites.push(SuiteSummary {
            name,
            cases: outcome.len(),
            failures: outcome.iter().filter(|c| !c.passed).count(),
        });
        results.extend(outcome);
    }
    Ok(RunReport {
        suite: suite.name(),
        seed: grid.seed,
        cases_run: results.len(),
        suites,
        failures: results.iter().filter(|c| !c.passed).cloned().collect(),
        results,
    })
}

fn build_cases(suite: Suite, grid: &Grid, tol: Option<f64>) -> Result<Vec<Case>, String> {
    Ok(match suite {
        Suite::All => unreachable!("expanded by members()"),
        Suite::Laguerre => laguerre_cases(grid)?,
        Suite::Hermite => hermite_cases(grid)?,
        Suite::Zeros => zeros_cases(grid)?,
        Suite::Oracle => oracle_cases(grid, tol.unwrap_or(grid.oracle.tol))?,
        Suite::Gf => gf_cases(grid, tol.unwrap_or(grid.gf.tol)),
    })
}

fn err(e: MellinError) -> String {
    e.to_string()
}

fn holds(ok: Result<bool, MellinError>, what: &str) -> Result<(), String> {
    match ok {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("{what} does not hold")),
        Err(e) => Err(err(e)),
    }
}

fn relations(report: Result<RelationReport, MellinError>) -> Result<(), String> {
    let report = report.map_err(err)?;
    let mut msg = String::new();
    for f in report.failures() {
        let _ = write!(
            msg,
            "{} (n = {}): residual {}; ",
            f.relation,
            f.n,
            f.residual.as_deref().unwrap_or("?")
        );
    }
    if msg.is_empty() {
        Ok(())
    } else {
        Err(msg.trim_end_matches("; ").to_string())
    }
}

fn laguerre_cases(grid: &Grid) -> Result<Vec<Case>, String> {
    let g = &grid.laguerre;
    let alphas = rationals(&g.alphas)?;
    let betas = rationals(&g.scaling_betas)?;
    let xs = rationals(&g.scaling_points)?;
    let mut cases = Vec::new();
    for alpha in &alphas {
        for n in 0..=g.max_n {
            let a = alpha.clone();
            cases.push(Case::new(
                format!("functional n={n} alpha={a}"),
                Kind::Identity,
                move || holds(functional_equation_check(n, &a), "P(s) = (-1)^n P(1-s)"),
            ));
            let a = alpha.clone();
            cases.push(Case::new(
                format!("derivative n={n} alpha={a}"),
                Kind::Identity,
                move || holds(derivative_formula_check(n, &a), "derivative expansion"),
            ));
            let a = alpha.clone();
            cases.push(Case::new(
                format!("stirling n={n} alpha={a}"),
                Kind::Identity,
                move || holds(stirling_form_check(n, &a), "Stirling expansion"),
            ));
            let a = alpha.clone();
            cases.push(Case::new(
                format!("convolution n={n} alpha={a}"),
                Kind::Identity,
                move || {
                    holds(
                        gf_convolution_check(n, &a),
                        "generating-function convolution",
                    )
                },
            ));
            let a = alpha.clone();
            cases.push(Case::new(
                format!("recursions n={n} alpha={a}"),
                Kind::Identity,
                move || relations(recursion_checks(n, &a)),
            ));
            let a = alpha.clone();
            cases.push(Case::new(
                format!("meixner_pollaczek n={n} alpha={a}"),
                Kind::Identity,
                move || holds(meixner_pollaczek_check(n, &a), "Meixner-Pollaczek rotation"),
            ));
            let a = alpha.clone();
            cases.push(Case::new(
                format!("pfaff n={n} alpha={a}"),
                Kind::Identity,
                move || {
                    let b = LinearForm::new(int(1), &a / int(2));
                    holds(
                        pfaff_terminating_check(n, &b, &(&a + int(1))),
                        "Pfaff transformation",
                    )
                },
            ));
        }
        for n in 0..=g.reciprocity_max {
            let a = alpha.clone();
            let top = g.reciprocity_max;
            cases.push(Case::new(
                format!("reciprocity n={n} alpha={a}"),
                Kind::Identity,
                move || {
                    for m in 0..=top {
                        holds(
                            reciprocity_check(n, m, &a),
                            &format!("reciprocity with m = {m}"),
                        )?;
                    }
                    Ok(())
                },
            ));
        }
    }
    for m in 0..=g.max_n {
        let (betas, xs) = (betas.clone(), xs.clone());
        cases.push(Case::new(
            format!("scaling m={m}"),
            Kind::Identity,
            move || {
                for b in &betas {
                    for x in &xs {
                        if !scaling_identity_check(m, b, x) {
                            return Err(format!("scaling identity fails at beta = {b}, x = {x}"));
                        }
                    }
                }
                Ok(())
            },
        ));
    }
    Ok(cases)
}

fn hermite_cases(grid: &Grid) -> Result<Vec<Case>, String> {
    let g = &grid.hermite;
    let points = rationals(&g.gegenbauer_points)?;
    let mut cases = Vec::new();
    for n in 0..=g.max_n {
        cases.push(Case::new(
            format!("laguerre_bridge n={n}"),
            Kind::Identity,
            move || {
                holds(
                    gamma_bridge_check(n),
                    "Hermite transform equals its Laguerre reduction",
                )
            },
        ));
        cases.push(Case::new(
            format!("recursions n={n}"),
            Kind::Identity,
            move || relations(hermite_recursions(n)),
        ));
    }
    for m in 0..=g.max_m {
        cases.push(Case::new(
            format!("polynomial_bridge m={m}"),
            Kind::Identity,
            move || bridge_check(m).map_err(|b| format!("{b:?}")),
        ));
        let top = g.max_m;
        cases.push(Case::new(
            format!("functional_reciprocity n={m}"),
            Kind::Identity,
            move || {
                for k in 0..=top {
                    let r = hermite_functional_reciprocity(m, k);
                    if !r.all_hold() {
                        return Err(format!("{r:?}"));
                    }
                }
                Ok(())
            },
        ));
        let pts = points.clone();
        cases.push(Case::new(
            format!("gegenbauer m={m}"),
            Kind::Identity,
            move || {
                for s in &pts {
                    holds(
                        gegenbauer_check(m, s),
                        &format!("Gegenbauer form at s = {s}"),
                    )?;
                }
                Ok(())
            },
        ));
    }
    for n in 0..=g.odd_reciprocity_max {
        let top = g.odd_reciprocity_max;
        cases.push(Case::new(
            format!("odd_reciprocity n={n}"),
            Kind::Identity,
            move || {
                for m in 0..=top {
                    if !hermite_functional_reciprocity(n, m).odd_reciprocity {
                        return Err(format!("H_n(-2m-1) != H_m(-2n-1) at m = {m}"));
                    }
                }
                Ok(())
            },
        ));
    }
    Ok(cases)
}

fn certify(family: Family, n: usize, alpha: Option<Rational>) -> Result<(), String> {
    let cp = critical_line_poly(family, n, alpha.as_ref()).map_err(err)?;
    let cert = certify_zeros(&cp).map_err(err)?;
    if cert.count != cert.degree || !cert.squarefree {
        return Err(format!(
            "{} roots on the line for degree {}",
            cert.count, cert.degree
        ));
    }
    Ok(())
}

fn zeros_cases(grid: &Grid) -> Result<Vec<Case>, String> {
    let g = &grid.zeros;
    let mut cases = Vec::new();
    let alphas = rationals(&g.alphas)?;
    let mut families: Vec<(Family, usize, Option<Rational>)> = alphas
        .into_iter()
        .map(|a| (Family::Laguerre, g.max_n, Some(a)))
        .collect();
    families.push((Family::HermiteEven, g.hermite_max_m, None));
    families.push((Family::HermiteOddReduced, g.hermite_max_m, None));
    for (family, top, alpha) in families {
        let tag = alpha
            .as_ref()
            .map(|a| format!(" alpha={a}"))
            .unwrap_or_default();
        for n in 0..=top {
            let a = alpha.clone();
            cases.push(Case::new(
                format!("certify {family} n={n}{tag}"),
                Kind::Certification,
                move || certify(family, n, a.clone()),
            ));
            if n < top {
                let a = alpha.clone();
                cases.push(Case::new(
                    format!("interlace {family} n={n}{tag}"),
                    Kind::Certification,
                    move || holds(interlacing_check(family, n, a.as_ref()), "interlacing"),
                ));
            }
        }
    }
    Ok(cases)
}

fn rel_err(exact: Complex64, approx: Complex64) -> f64 {
    (exact - approx).norm() / exact.norm().max(f64::MIN_POSITIVE)
}

/// Fails at the first sample whose relative error reaches `tol`.
fn agree(
    samples: &[Complex64],
    tol: f64,
    f: impl Fn(Complex64) -> Result<(Complex64, Complex64), MellinError>,
) -> Result<(), String> {
    for &s in samples {
        let (exact, quad) = f(s).map_err(err)?;
        let e = rel_err(exact, quad);
        if !(e < tol) {
            return Err(format!(
                "s = {s}: closed form {exact}, quadrature {quad}, relative error {e:e}"
            ));
        }
    }
    Ok(())
}

fn oracle_cases(grid: &Grid, tol: f64) -> Result<Vec<Case>, String> {
    let g = &grid.oracle;
    let mut samples = points(&g.samples);
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    for _ in 0..g.random_samples {
        // Rounded so the points print compactly and reproduce exactly.
        let re = (rng.gen_range(0.3..3.0) * 1000.0f64).round() / 1000.0;
        let im = (rng.gen_range(-5.0..5.0) * 1000.0f64).round() / 1000.0;
        samples.push(Complex64::new(re, im));
    }
    let mut cases = Vec::new();
    for alpha in rationals(&g.alphas)? {
        for n in 0..=g.laguerre_max_n {
            let (a, pts) = (alpha.clone(), samples.clone());
            cases.push(Case::new(
                format!("laguerre n={n} alpha={a}"),
                Kind::Numeric,
                move || {
                    let m = build_m(n, &a).map_err(err)?;
                    agree(&pts, tol, |s| {
                        Ok((m.eval(s)?, mellin_quadrature_laguerre(n, &a, s)?))
                    })
                },
            ));
        }
    }
    for n in 0..=g.hermite_max_n {
        let pts = samples.clone();
        cases.push(Case::new(
            format!("hermite n={n}"),
            Kind::Numeric,
            move || {
                let m = build_hermite_m(n);
                agree(&pts, tol, |s| {
                    Ok((m.eval(s)?, mellin_quadrature_hermite(n, s)?))
                })
            },
        ));
    }
    for [n, l, d] in g.hydrogen_states.iter().copied() {
        let pts = samples.clone();
        cases.push(Case::new(
            format!("hydrogen n={n} l={l} D={d}"),
            Kind::Numeric,
            move || {
                let st = HydrogenState::new(n, l, d).map_err(err)?;
                agree(&pts, tol, |s| {
                    Ok((hydrogen_mellin(&st, s)?, hydrogen_quadrature(&st, s)?))
                })?;
                certify(Family::Laguerre, st.degree_eff(), Some(st.alpha_eff()))
            },
        ));
    }
    for alpha in rationals(&g.orthogonality_alphas)? {
        for n in 0..=g.orthogonality_max_n {
            let a = alpha.clone();
            let top = g.orthogonality_max_n;
            cases.push(Case::new(
                format!("orthogonality n={n} alpha={a}"),
                Kind::Numeric,
                move || {
                    let diag = orthogonality_norm(n, &a).map_err(err)?;
                    let d = orthogonality_quadrature(n, n, &a).map_err(err)?;
                    if rel_err(Complex64::new(diag, 0.0), d) > 1e-6 {
                        return Err(format!("diagonal {d} against norm {diag}"));
                    }
                    for m in (n + 1)..=top {
                        let other = orthogonality_norm(m, &a).map_err(err)?;
                        let v = orthogonality_quadrature(n, m, &a).map_err(err)?;
                        if v.norm() > 1e-6 * (diag * other).sqrt() {
                            return Err(format!("<P_{n}, P_{m}> = {v}"));
                        }
                    }
                    Ok(())
                },
            ));
        }
    }
    Ok(cases)
}

fn gf_cases(grid: &Grid, tol: f64) -> Vec<Case> {
    let g = &grid.gf;
    let mut cases = Vec::new();
    for s in points(&g.s) {
        for &t in &g.t {
            let terms = g.terms;
            cases.push(Case::new(
                format!("generating_function s={s} t={t}"),
                Kind::Numeric,
                move || {
                    let r = generating_function_check(s, t, terms).map_err(err)?;
                    if r.residual < tol && r.even_residual < tol {
                        Ok(())
                    } else {
                        Err(format!(
                            "residual {:e}, even part {:e}",
                            r.residual, r.even_residual
                        ))
                    }
                },
            ));
        }
    }
    cases
}
