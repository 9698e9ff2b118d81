//! `mellin`: closed-form Mellin transforms of Laguerre and Hermite functions,
//! their verification suites and critical-line zero certificates.

mod grid;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mellin_core::hermite::{build_hermite_m, reduced_even, reduced_odd};
use mellin_core::laguerre::{build_m, build_p};
use mellin_core::numerics::{parse_rational, QPoly, Rational};
use mellin_core::oracle::{
    generating_function_check, hydrogen_mellin, hydrogen_mellin_factor, hydrogen_quadrature,
    mellin_quadrature_hermite, mellin_quadrature_laguerre, HydrogenState,
};
use mellin_core::zeros::{certify_zeros, critical_line_poly, Family, ZeroCertificate};
use mellin_core::MellinError;
use num_complex::Complex64;
use serde::Serialize;

use grid::Grid;
use suites::Suite;

const EXIT_VERIFY: u8 = 1;
const EXIT_CERTIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "mellin",
    version,
    about = "Exact Mellin transforms of Laguerre and Hermite functions"
)]
struct Cli {
    /// Emit JSON
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV with a header row
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the polynomial factor of a transform
    Poly(FamilyArgs),
    /// Certify that the zeros of a factor are simple and on Re s = 1/2
    Zeros(FamilyArgs),
    /// Run verification suites
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Seed for randomly drawn sample points
        #[arg(long)]
        seed: Option<u64>,
        /// TOML grid overriding the built-in defaults
        #[arg(long)]
        grid: Option<PathBuf>,
        /// Tolerance for the numeric suites
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Hydrogenic radial transform: factor, zeros and a quadrature check
    Hydrogen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long = "D")]
        dim: u32,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Compare a closed form with direct quadrature at one point
    OracleCompare {
        #[arg(value_enum)]
        family: OracleFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg, default_value = "0", allow_hyphen_values = true)]
        alpha: Rational,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Check the Hermite generating function against D_{-s}
    GfCheck {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, default_value_t = 40)]
        terms: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFamily {
    Laguerre,
    /// Full index n; even n gives p_{n/2}, odd n the reduced odd factor
    Hermite,
    Hydrogen,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleFamily {
    Laguerre,
    Hermite,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: PolyFamily,
    /// Degree, Hermite index, or principal quantum number for hydrogen
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long = "D")]
    dim: Option<u32>,
}

#[derive(Args)]
struct PointArgs {
    /// Real part of s
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    re: f64,
    /// Imaginary part of s
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    im: f64,
}

impl PointArgs {
    fn s(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("expected a rational such as 1/2, got {text:?}"))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<MellinError> for Failure {
    fn from(e: MellinError) -> Failure {
        let code = match e {
            MellinError::Domain(_)
            | MellinError::InvalidState(_)
            | MellinError::DenominatorPole { .. } => EXIT_USAGE,
            MellinError::Certification(_) => EXIT_CERTIFY,
            _ => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let format = match (cli.json, cli.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    };
    let outcome = match cli.command {
        Command::Poly(args) => cmd_poly(&args, format),
        Command::Zeros(args) => cmd_zeros(&args, format),
        Command::Verify {
            suite,
            seed,
            grid,
            tol,
        } => cmd_verify(suite, seed, grid, tol, format),
        Command::Hydrogen {
            n,
            l,
            dim,
            point,
            tol,
        } => cmd_hydrogen(n, l, dim, point.s(), tol, format),
        Command::OracleCompare {
            family,
            n,
            alpha,
            point,
            tol,
        } => cmd_oracle_compare(family, n, &alpha, point.s(), tol, format),
        Command::GfCheck {
            point,
            t,
            terms,
            tol,
        } => cmd_gf(point.s(), t, terms, tol, format),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn hydrogen_state(args: &FamilyArgs) -> Result<HydrogenState, Failure> {
    let (Some(l), Some(d)) = (args.l, args.dim) else {
        return Err(Failure::usage("hydrogen needs --l and --D"));
    };
    let n = u32::try_from(args.n).map_err(|_| Failure::usage("--n too large"))?;
    Ok(HydrogenState::new(n, l, d)?)
}

fn alpha_of(args: &FamilyArgs) -> Result<&Rational, Failure> {
    args.alpha
        .as_ref()
        .ok_or_else(|| Failure::usage("laguerre needs --alpha"))
}

fn factor(args: &FamilyArgs) -> Result<QPoly, Failure> {
    Ok(match args.family {
        PolyFamily::Laguerre => build_p(args.n, alpha_of(args)?)?,
        PolyFamily::Hermite if args.n % 2 == 0 => reduced_even(args.n / 2),
        PolyFamily::Hermite => reduced_odd(args.n / 2),
        PolyFamily::Hydrogen => hydrogen_mellin_factor(&hydrogen_state(args)?)?,
    })
}

#[derive(Serialize)]
struct Coeffs {
    #[serde(serialize_with = "ser_coeffs")]
    coeffs: QPoly,
}

fn ser_coeffs<S: serde::Serializer>(p: &QPoly, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(p.coeffs().iter().map(|c| c.to_string()))
}

fn cmd_poly(args: &FamilyArgs, format: Format) -> Outcome {
    let p = factor(args)?;
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", json(&Coeffs { coeffs: p })),
        Format::Csv => {
            println!("power,coeff");
            for (k, c) in p.coeffs().iter().enumerate() {
                println!("{k},{c}");
            }
        }
    }
    Ok(0)
}

fn certificate(args: &FamilyArgs) -> Result<ZeroCertificate, Failure> {
    let cp = match args.family {
        PolyFamily::Laguerre => {
            critical_line_poly(Family::Laguerre, args.n, Some(alpha_of(args)?))?
        }
        PolyFamily::Hermite if args.n % 2 == 0 => {
            critical_line_poly(Family::HermiteEven, args.n / 2, None)?
        }
        PolyFamily::Hermite => critical_line_poly(Family::HermiteOddReduced, args.n / 2, None)?,
        PolyFamily::Hydrogen => {
            let st = hydrogen_state(args)?;
            critical_line_poly(Family::Laguerre, st.degree_eff(), Some(&st.alpha_eff()))?
        }
    };
    Ok(certify_zeros(&cp)?)
}

fn print_certificate(cert: &ZeroCertificate, format: Format) {
    match format {
        Format::Json => println!("{}", json(cert)),
        Format::Csv => {
            println!("index,t,lo,hi");
            for (k, (t, iv)) in cert.refined_roots.iter().zip(&cert.intervals).enumerate() {
                println!("{k},{t},{},{}", iv.lo, iv.hi);
            }
        }
        Format::Text => {
            let alpha = cert
                .alpha
                .as_ref()
                .map(|a| format!(" alpha={a}"))
                .unwrap_or_default();
            println!(
                "{} n={}{alpha}: {} simple zero{} on Re s = 1/2 (degree {}, max scaled residual {:e})",
                cert.family,
                cert.n,
                cert.count,
                if cert.count == 1 { "" } else { "s" },
                cert.degree,
                cert.max_scaled_residual
            );
            for (t, iv) in cert.refined_roots.iter().zip(&cert.intervals) {
                println!("t = {t}    in ({}, {}]", iv.lo, iv.hi);
            }
        }
    }
}

fn cmd_zeros(args: &FamilyArgs, format: Format) -> Outcome {
    let cert = certificate(args)?;
    print_certificate(&cert, format);
    Ok(0)
}

fn cmd_verify(
    suite: Suite,
    seed: Option<u64>,
    path: Option<PathBuf>,
    tol: Option<f64>,
    format: Format,
) -> Outcome {
    let mut grid = match path {
        Some(p) => Grid::load(&p).map_err(Failure::usage)?,
        None => Grid::default_grid(),
    };
    if let Some(seed) = seed {
        grid.seed = seed;
    }
    let start = Instant::now();
    let report = suites::run(suite, &grid, tol).map_err(Failure::usage)?;
    eprintln!(
        "{} cases in {:.2} s",
        report.cases_run,
        start.elapsed().as_secs_f64()
    );
    match format {
        Format::Json => println!("{}", json(&report)),
        Format::Csv => {
            println!("suite,case,kind,passed,detail");
            for r in &report.results {
                let detail = r.detail.as_deref().unwrap_or("").replace('"', "\"\"");
                println!(
                    "{},\"{}\",{},{},\"{detail}\"",
                    r.suite,
                    r.case,
                    json(&r.kind).trim_matches('"'),
                    r.passed
                );
            }
        }
        Format::Text => {
            for s in &report.suites {
                println!(
                    "{:<10} {:>5} cases  {:>3} failures",
                    s.name, s.cases, s.failures
                );
            }
            for f in &report.failures {
                println!(
                    "FAIL [{}] {}: {}",
                    f.suite,
                    f.case,
                    f.detail.as_deref().unwrap_or("")
                );
            }
        }
    }
    Ok(if report.passed() { 0 } else { EXIT_VERIFY })
}

#[derive(Serialize)]
struct Comparison {
    s_re: f64,
    s_im: f64,
    closed_form: [f64; 2],
    quadrature: [f64; 2],
    relative_error: f64,
    passed: bool,
}

impl Comparison {
    fn new(s: Complex64, exact: Complex64, quad: Complex64, tol: f64) -> Comparison {
        let relative_error = (exact - quad).norm() / exact.norm().max(f64::MIN_POSITIVE);
        Comparison {
            s_re: s.re,
            s_im: s.im,
            closed_form: [exact.re, exact.im],
            quadrature: [quad.re, quad.im],
            relative_error,
            passed: relative_error < tol,
        }
    }

    fn print(&self, format: Format) {
        match format {
            Format::Json => println!("{}", json(self)),
            Format::Csv => {
                println!("s_re,s_im,closed_re,closed_im,quad_re,quad_im,relative_error,passed");
                println!(
                    "{},{},{},{},{},{},{:e},{}",
                    self.s_re,
                    self.s_im,
                    self.closed_form[0],
                    self.closed_form[1],
                    self.quadrature[0],
                    self.quadrature[1],
                    self.relative_error,
                    self.passed
                );
            }
            Format::Text => self.print_text(),
        }
    }

    fn print_text(&self) {
        let c = |v: [f64; 2]| Complex64::new(v[0], v[1]);
        println!("s            = {}", Complex64::new(self.s_re, self.s_im));
        println!("closed form  = {:.15e}", c(self.closed_form));
        println!("quadrature   = {:.15e}", c(self.quadrature));
        println!("relative err = {:e}", self.relative_error);
    }
}

fn cmd_oracle_compare(
    family: OracleFamily,
    n: usize,
    alpha: &Rational,
    s: Complex64,
    tol: f64,
    format: Format,
) -> Outcome {
    let (exact, quad) = match family {
        OracleFamily::Laguerre => (
            build_m(n, alpha)?.eval(s)?,
            mellin_quadrature_laguerre(n, alpha, s)?,
        ),
        OracleFamily::Hermite => (
            build_hermite_m(n).eval(s)?,
            mellin_quadrature_hermite(n, s)?,
        ),
    };
    let cmp = Comparison::new(s, exact, quad, tol);
    cmp.print(format);
    Ok(if cmp.passed { 0 } else { EXIT_VERIFY })
}

#[derive(Serialize)]
struct HydrogenReport {
    state: HydrogenState,
    eta: String,
    alpha_eff: String,
    degree_eff: usize,
    #[serde(serialize_with = "ser_coeffs")]
    factor: QPoly,
    comparison: Comparison,
    certificate: ZeroCertificate,
}

fn cmd_hydrogen(n: u32, l: u32, dim: u32, s: Complex64, tol: f64, format: Format) -> Outcome {
    let state = HydrogenState::new(n, l, dim)?;
    let cp = critical_line_poly(
        Family::Laguerre,
        state.degree_eff(),
        Some(&state.alpha_eff()),
    )?;
    let report = HydrogenReport {
        state,
        eta: state.eta().to_string(),
        alpha_eff: state.alpha_eff().to_string(),
        degree_eff: state.degree_eff(),
        factor: hydrogen_mellin_factor(&state)?,
        comparison: Comparison::new(
            s,
            hydrogen_mellin(&state, s)?,
            hydrogen_quadrature(&state, s)?,
            tol,
        ),
        certificate: certify_zeros(&cp)?,
    };
    match format {
        Format::Json => println!("{}", json(&report)),
        Format::Csv => report.comparison.print(Format::Csv),
        Format::Text => {
            println!(
                "n={n} l={l} D={dim}: eta = {}, alpha = {}, degree {}",
                report.eta, report.alpha_eff, report.degree_eff
            );
            println!("factor       = {}", report.factor);
            report.comparison.print_text();
            print_certificate(&report.certificate, Format::Text);
        }
    }
    Ok(if report.comparison.passed {
        0
    } else {
        EXIT_VERIFY
    })
}

#[derive(Serialize)]
struct GfReport {
    s_re: f64,
    s_im: f64,
    t: f64,
    residual: f64,
    even_residual: f64,
    terms: usize,
    truncation: f64,
    passed: bool,
}

fn cmd_gf(s: Complex64, t: f64, terms: usize, tol: f64, format: Format) -> Outcome {
    let r = generating_function_check(s, t, terms)?;
    let report = GfReport {
        s_re: s.re,
        s_im: s.im,
        t,
        residual: r.residual,
        even_residual: r.even_residual,
        terms: r.terms,
        truncation: r.truncation,
        passed: r.residual < tol && r.even_residual < tol,
    };
    match format {
        Format::Json => println!("{}", json(&report)),
        Format::Csv => {
            println!("s_re,s_im,t,residual,even_residual,terms,truncation,passed");
            println!(
                "{},{},{},{:e},{:e},{},{:e},{}",
                s.re, s.im, t, r.residual, r.even_residual, r.terms, r.truncation, report.passed
            );
        }
        Format::Text => {
            println!(
                "s = {s}, t = {t}: residual {:e} (even part {:e}) with {} terms",
                r.residual, r.even_residual, r.terms
            );
        }
    }
    Ok(if report.passed { 0 } else { EXIT_VERIFY })
}
