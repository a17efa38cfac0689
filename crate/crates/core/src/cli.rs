//! Command-line front end.
//!
//! [`run`] parses arguments and returns the exit code together with what
//! would go to stdout and stderr, so the binary is a thin wrapper and tests
//! can drive every command in-process.
//!
//! Exit codes: 0 success, 1 runtime error, 2 bad arguments, 3 oracle
//! mismatch, 4 mathematical violation found.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::bohr::{self, BoundedFamily, FamilyKind};
use crate::condensator::{level_boundary, ContinuumSpec, DEFAULT_SAMPLES};
use crate::error::Error;
use crate::estimates::{self, GRID_POINTS};
use crate::faber::{self, default_sample_radius, ContourRule};
use crate::output::{fmt17, fmt6, to_json, SCHEMA_VERSION};
use crate::series::LaurentTail;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

/// Largest accepted disagreement between the two constructions of `F_n`.
pub const ORACLE_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "bohr-faber", version, about = "Faber polynomials, Green level sets and Bohr sums")]
pub struct Cli {
    /// segment:a,b | disc:re,im,r | custom:@file.json
    #[arg(long, global = true, default_value = "segment:-1,1")]
    pub continuum: String,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Boundary samples used by norms, quadratures and level sets.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Faber polynomials F_0 … F_N.
    Faber {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Compare against the Cauchy integral over a level curve.
        #[arg(long)]
        check_contour: bool,
        /// Level of the comparison contour.
        #[arg(long = "contour-level", default_value_t = 2.0)]
        contour_level: f64,
    },
    /// Samples of the level curve |Φ| = R.
    Levelset {
        #[arg(long = "R")]
        level: f64,
        /// Number of points; defaults to --samples.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Sufficient Bohr radius of [-1, 1].
    BohrRadius {
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Bohr-sum campaign over a family of bounded functions.
    Verify {
        #[arg(long = "R", default_value_t = 5.2)]
        level: f64,
        /// polynomial | moebius | faber
        #[arg(long, default_value = "polynomial")]
        family: String,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0.01)]
        margin: f64,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Margins of the sufficient conditions at level R, or a grid search.
    Estimates {
        #[arg(long = "R")]
        level: Option<f64>,
        #[arg(long, default_value_t = estimates::DEFAULT_EPS0)]
        eps0: f64,
        #[arg(long, default_value_t = estimates::DEFAULT_N_MAX)]
        n_max: usize,
        /// Argument of Φ(a) for the reference point a.
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Search the geometric level grid instead of a single R.
        #[arg(long)]
        grid: bool,
    },
    /// Faber coefficients of a function from samples on |w| = r.
    Coeffs {
        #[arg(long = "R")]
        level: f64,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        /// faber:N | const:re[,im] | poly:c0,c1,… | exp
        #[arg(long, default_value = "exp")]
        function: String,
        /// Sample radius; defaults to √R.
        #[arg(long)]
        radius: Option<f64>,
    },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }

    fn error(err: Error) -> Outcome {
        Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

fn parse_numbers(kind: &str, body: &str, names: &[&str]) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = body.split(',').map(str::trim).collect();
    if parts.len() != names.len() {
        return Err(format!(
            "{kind}: expected {} comma-separated fields ({}), got {}",
            names.len(),
            names.join(","),
            parts.len()
        ));
    }
    parts
        .iter()
        .zip(names)
        .map(|(p, name)| {
            p.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("{kind}: field '{name}' is not a finite number: {p:?}"))
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Real(f64),
    Pair([f64; 2]),
}

impl Scalar {
    fn complex(&self) -> Complex64 {
        match self {
            Scalar::Real(x) => Complex64::new(*x, 0.0),
            Scalar::Pair([re, im]) => Complex64::new(*re, *im),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CustomFile {
    gamma: f64,
    #[serde(default)]
    gamma0: Option<Scalar>,
    #[serde(default)]
    tail: Vec<Scalar>,
    #[serde(default)]
    inverse: Option<CustomInverse>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CustomInverse {
    lead: f64,
    #[serde(default)]
    c0: Option<Scalar>,
    #[serde(default)]
    tail: Vec<Scalar>,
}

/// Parses the JSON presentation `{gamma, gamma0, tail, inverse?}`.
pub fn parse_custom_json(text: &str) -> Result<ContinuumSpec, String> {
    let file: CustomFile =
        serde_json::from_str(text).map_err(|e| format!("custom: invalid JSON: {e}"))?;
    let zero = Complex64::new(0.0, 0.0);
    let map = LaurentTail::new(
        Complex64::new(file.gamma, 0.0),
        file.gamma0.map_or(zero, |s| s.complex()),
        file.tail.iter().map(Scalar::complex).collect(),
    );
    let inverse = file.inverse.map(|inv| {
        LaurentTail::new(
            Complex64::new(inv.lead, 0.0),
            inv.c0.map_or(zero, |s| s.complex()),
            inv.tail.iter().map(Scalar::complex).collect(),
        )
    });
    ContinuumSpec::custom(map, inverse).map_err(|e| format!("custom: {e}"))
}

/// Parses `segment:a,b`, `disc:re,im,r` or `custom:@file.json`.
pub fn parse_continuum(s: &str) -> Result<ContinuumSpec, String> {
    let (kind, body) = s
        .split_once(':')
        .ok_or_else(|| format!("continuum {s:?}: expected kind:fields"))?;
    match kind {
        "segment" => {
            let v = parse_numbers(kind, body, &["a", "b"])?;
            ContinuumSpec::segment(v[0], v[1]).map_err(|e| format!("segment: {e}"))
        }
        "disc" => {
            let v = parse_numbers(kind, body, &["re", "im", "r"])?;
            ContinuumSpec::disc(Complex64::new(v[0], v[1]), v[2]).map_err(|e| format!("disc: {e}"))
        }
        "custom" => {
            let path = body
                .strip_prefix('@')
                .ok_or_else(|| "custom: field 'file' must be written @path".to_string())?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("custom: cannot read {path}: {e}"))?;
            parse_custom_json(&text)
        }
        other => Err(format!("continuum: unknown kind {other:?} (segment, disc, custom)")),
    }
}

/// A test function given on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum TestFunction {
    Faber(usize),
    Constant(Complex64),
    Monomials(Vec<f64>),
    Exp,
}

pub fn parse_function(s: &str) -> Result<TestFunction, String> {
    let (kind, body) = s.split_once(':').unwrap_or((s, ""));
    match kind {
        "faber" => body
            .parse()
            .map(TestFunction::Faber)
            .map_err(|_| format!("function faber: field 'n' is not an index: {body:?}")),
        "const" => {
            let v: Vec<&str> = body.split(',').collect();
            let names = if v.len() == 1 { &["re"][..] } else { &["re", "im"][..] };
            let x = parse_numbers("function const", body, names)?;
            Ok(TestFunction::Constant(Complex64::new(x[0], x.get(1).copied().unwrap_or(0.0))))
        }
        "poly" => {
            let n = body.split(',').count();
            let names: Vec<String> = (0..n).map(|k| format!("c{k}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            Ok(TestFunction::Monomials(parse_numbers("function poly", body, &refs)?))
        }
        "exp" => Ok(TestFunction::Exp),
        other => Err(format!("function: unknown kind {other:?} (faber, const, poly, exp)")),
    }
}

fn envelope(command: &str, spec: &ContinuumSpec, body: Value) -> Value {
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "continuum": spec.label(),
    });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, body) {
        dst.extend(src);
    }
    v
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let spec = match parse_continuum(&cli.continuum) {
        Ok(s) => s,
        Err(msg) => return Outcome::usage(format!("error: {msg}\n")),
    };
    if cli.samples < 8 {
        return Outcome::usage("error: --samples must be at least 8\n");
    }
    let result = match &cli.command {
        Command::Faber { n_max, check_contour, contour_level } => {
            cmd_faber(&cli, &spec, *n_max, *check_contour, *contour_level)
        }
        Command::Levelset { level, m } => cmd_levelset(&cli, &spec, *level, m.unwrap_or(cli.samples)),
        Command::BohrRadius { tol } => cmd_bohr_radius(&cli, &spec, *tol),
        Command::Verify { level, family, count, margin, max_degree } => {
            cmd_verify(&cli, &spec, *level, family, *count, *margin, *max_degree)
        }
        Command::Estimates { level, eps0, n_max, theta, grid } => {
            cmd_estimates(&cli, &spec, *level, *eps0, *n_max, *theta, *grid)
        }
        Command::Coeffs { level, n_max, function, radius } => {
            cmd_coeffs(&cli, &spec, *level, *n_max, function, *radius)
        }
    };
    match result {
        Ok(outcome) => outcome,
        Err(CmdError::Usage(msg)) => Outcome::usage(format!("error: {msg}\n")),
        Err(CmdError::Run(e)) => Outcome::error(e),
    }
}

enum CmdError {
    Usage(String),
    Run(Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> CmdError {
        CmdError::Run(e)
    }
}

type CmdResult = Result<Outcome, CmdError>;

fn ok(stdout: String) -> CmdResult {
    Ok(Outcome { code: EXIT_OK, stdout, stderr: String::new() })
}

fn json_line(v: &Value) -> String {
    let mut s = to_json(v);
    s.push('\n');
    s
}

fn complex_text(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt6(z.re)
    } else {
        format!("{}{}{}i", fmt6(z.re), if z.im < 0.0 { "-" } else { "+" }, fmt6(z.im.abs()))
    }
}

/// Deterministic probe points inside `Ω_r`: half in `Ω_r ∖ K`, half on `K`.
fn contour_probes(spec: &ContinuumSpec, r: f64, count: usize, seed: u64) -> Result<Vec<Complex64>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let theta: f64 = rng.random_range(0.0..TAU);
            let rho = if i % 2 == 0 {
                1.0 + (r - 1.0) * rng.random_range(0.05..0.8)
            } else {
                spec.boundary_radius()
            };
            spec.curve_point(rho, theta)
        })
        .collect()
}

fn cmd_faber(cli: &Cli, spec: &ContinuumSpec, n_max: usize, check: bool, r: f64) -> CmdResult {
    let polys = faber::faber_polys(spec, n_max);
    let delta = if check {
        if !(r > 1.0) {
            return Err(CmdError::Usage(format!("--contour-level {r} must exceed 1")));
        }
        let rule = ContourRule::new(spec, r, cli.samples.max(4 * n_max + 64))?;
        let mut worst: f64 = 0.0;
        for z in contour_probes(spec, r, 16, cli.seed)? {
            let vals = rule.faber_all(z, n_max)?;
            for (p, v) in polys.iter().zip(vals) {
                worst = worst.max(crate::dd::cabs(p.eval_dd(crate::dd::cdd(z)) - v));
            }
        }
        Some(worst)
    } else {
        None
    };
    let mut out = String::new();
    match cli.output {
        OutputFormat::Json => {
            let mut body = json!({
                "polys": polys.iter().map(|p| p.to_json_value()).collect::<Vec<_>>(),
            });
            if let Some(d) = delta {
                body["contour_check"] = json!({
                    "level": r,
                    "samples": cli.samples.max(4 * n_max + 64),
                    "max_delta": d,
                    "tolerance": ORACLE_TOL,
                });
            }
            out = json_line(&envelope("faber", spec, body));
        }
        OutputFormat::Csv => {
            out.push_str("n,k,re,im\n");
            for p in &polys {
                for (k, c) in p.coeffs.iter().enumerate() {
                    let _ = writeln!(out, "{},{k},{},{}", p.n, fmt17(c.re), fmt17(c.im));
                }
            }
        }
        OutputFormat::Text => {
            for p in &polys {
                let coeffs: Vec<String> = p.coeffs.iter().map(|c| complex_text(*c)).collect();
                let _ = writeln!(out, "F_{}: [{}]", p.n, coeffs.join(", "));
            }
            if let Some(d) = delta {
                let _ = writeln!(out, "contour check: max delta {} at level {}", fmt6(d), fmt6(r));
            }
        }
    }
    let mut outcome = Outcome { code: EXIT_OK, stdout: out, stderr: String::new() };
    if let Some(d) = delta {
        if !(d <= ORACLE_TOL) {
            outcome.code = EXIT_ORACLE;
            outcome.stderr = format!("oracle mismatch: max delta {d:e} exceeds {ORACLE_TOL:e}\n");
        }
    }
    Ok(outcome)
}

fn cmd_levelset(cli: &Cli, spec: &ContinuumSpec, level: f64, m: usize) -> CmdResult {
    let ls = level_boundary(spec, level, m).map_err(|e| match e {
        Error::Domain(msg) => CmdError::Usage(msg),
        other => CmdError::Run(other),
    })?;
    match cli.output {
        OutputFormat::Csv => ok(ls.to_csv()),
        OutputFormat::Json => {
            let points: Vec<Value> = ls
                .points
                .iter()
                .enumerate()
                .map(|(j, p)| json!([ls.theta(j), p.re, p.im]))
                .collect();
            ok(json_line(&envelope(
                "levelset",
                spec,
                json!({"R": level, "m": m, "arc_length": ls.arc_length, "points": points}),
            )))
        }
        OutputFormat::Text => {
            let mut out = format!("level {} m {} arc length {}\n", fmt6(level), m, fmt6(ls.arc_length));
            for (j, p) in ls.points.iter().enumerate() {
                let _ = writeln!(out, "{} {} {}", fmt6(ls.theta(j)), fmt6(p.re), fmt6(p.im));
            }
            ok(out)
        }
    }
}

fn cmd_bohr_radius(cli: &Cli, spec: &ContinuumSpec, tol: f64) -> CmdResult {
    if !(tol >= 1e-10 && tol.is_finite()) {
        return Err(CmdError::Usage(format!("--tol {tol} must be a number >= 1e-10")));
    }
    let r = bohr::segment_bohr_radius(tol)?;
    match cli.output {
        OutputFormat::Json => ok(json_line(&envelope(
            "bohr-radius",
            spec,
            json!({
                "radius": r.radius,
                "eccentricity": r.eccentricity,
                "bracket": [r.bracket.0, r.bracket.1],
                "iterations": r.iterations,
                "tol": tol,
                "literature": {
                    "radius": bohr::LITERATURE_RADIUS,
                    "eccentricity": bohr::LITERATURE_ECCENTRICITY,
                },
            }),
        ))),
        OutputFormat::Csv => ok(format!(
            "radius,eccentricity,lo,hi,iterations\n{},{},{},{},{}\n",
            fmt17(r.radius),
            fmt17(r.eccentricity),
            fmt17(r.bracket.0),
            fmt17(r.bracket.1),
            r.iterations
        )),
        OutputFormat::Text => ok(format!(
            "R0 {}\neccentricity {}\nbracket [{}, {}]\niterations {}\nliterature R0 {} (eccentricity {})\n",
            fmt6(r.radius),
            fmt6(r.eccentricity),
            fmt6(r.bracket.0),
            fmt6(r.bracket.1),
            r.iterations,
            fmt6(bohr::LITERATURE_RADIUS),
            fmt6(bohr::LITERATURE_ECCENTRICITY)
        )),
    }
}

fn cmd_verify(
    cli: &Cli,
    spec: &ContinuumSpec,
    level: f64,
    family: &str,
    count: usize,
    margin: f64,
    max_degree: usize,
) -> CmdResult {
    let kind: FamilyKind = family.parse().map_err(|e: Error| CmdError::Usage(e.to_string()))?;
    if !(level > 1.0 && level.is_finite()) {
        return Err(CmdError::Usage(format!("--R {level} must exceed 1")));
    }
    if !(margin > 0.0 && margin < 1.0) {
        return Err(CmdError::Usage(format!("--margin {margin} must lie in (0, 1)")));
    }
    let mut fam = BoundedFamily::new(kind, cli.seed, count);
    fam.margin = margin;
    fam.max_degree = max_degree;
    let report = bohr::bohr_verify(spec, level, &fam)?;
    let code = if report.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
    let stdout = match cli.output {
        OutputFormat::Json => {
            let body = serde_json::to_value(&report).expect("plain data");
            json_line(&envelope("verify", spec, body))
        }
        OutputFormat::Csv => {
            let mut out = String::from("index,sum\n");
            for v in &report.violations {
                let _ = writeln!(out, "{},{}", v.index, fmt17(v.sum));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "{} functions on level {}: {} violation(s)\n",
                report.count,
                fmt6(level),
                report.violations.len()
            );
            if let Some(s) = report.min_slack {
                let _ = writeln!(out, "min slack {}", fmt6(s));
            }
            for v in &report.violations {
                let _ = writeln!(out, "violation #{}: sum {}", v.index, fmt6(v.sum));
            }
            if report.evidence_only {
                out.push_str("no violation found (evidence only)\n");
            }
            out
        }
    };
    Ok(Outcome { code, stdout, stderr: String::new() })
}

fn cmd_estimates(
    cli: &Cli,
    spec: &ContinuumSpec,
    level: Option<f64>,
    eps0: f64,
    n_max: usize,
    theta: f64,
    grid: bool,
) -> CmdResult {
    if !(eps0 > 0.0 && eps0.is_finite()) {
        return Err(CmdError::Usage(format!("--eps0 {eps0} must be positive")));
    }
    let (report, r_star) = if grid {
        {
            let g = estimates::thm31_grid_search(spec, eps0, theta, n_max, GRID_POINTS)?;
            (g.report, Some(g.r_star))
        }
    } else {
        let level = level.ok_or_else(|| CmdError::Usage("--R is required unless --grid is given".into()))?;
        if !(level > 1.0 + eps0) {
            return Err(CmdError::Usage(format!("--R {level} must exceed 1 + eps0 = {}", 1.0 + eps0)));
        }
        (estimates::thm31_conditions(spec, level, eps0, theta, n_max)?, None)
    };
    let stdout = match cli.output {
        OutputFormat::Csv => estimates::margins_csv(&report.rows),
        OutputFormat::Json => {
            let mut body = serde_json::to_value(&report).expect("plain data");
            body["eps0"] = json!(eps0);
            if let Some(r) = r_star {
                body["r_star"] = json!(r);
            }
            json_line(&envelope("estimates", spec, body))
        }
        OutputFormat::Text => {
            let mut out = String::new();
            if let Some(r) = r_star {
                let _ = writeln!(out, "smallest grid level R* {}", fmt6(r));
            }
            let _ = writeln!(out, "R {} r {} C {} ({})", fmt6(report.level), fmt6(report.r), fmt6(report.c), report.label);
            for row in &report.rows {
                let _ = writeln!(
                    out,
                    "n {:>3} ({:<3}) lhs {} rhs {} margin {}",
                    row.n,
                    row.condition.label(),
                    fmt6(row.lhs),
                    fmt6(row.rhs),
                    fmt6(row.margin)
                );
            }
            let _ = writeln!(
                out,
                "tail from n = {}: q {} k {} {}",
                report.tail.n,
                fmt6(report.tail.q),
                fmt6(report.tail.k_ratio),
                if report.tail.holds { "holds" } else { "fails" }
            );
            let _ = writeln!(out, "all conditions {}", if report.all_hold { "hold" } else { "do not hold" });
            out
        }
    };
    ok(stdout)
}

fn cmd_coeffs(
    cli: &Cli,
    spec: &ContinuumSpec,
    level: f64,
    n_max: usize,
    function: &str,
    radius: Option<f64>,
) -> CmdResult {
    let f = parse_function(function).map_err(CmdError::Usage)?;
    if !(level > 1.0 && level.is_finite()) {
        return Err(CmdError::Usage(format!("--R {level} must exceed 1")));
    }
    let r = radius.unwrap_or_else(|| default_sample_radius(level));
    if !(r > 1.0 && r <= level) {
        return Err(CmdError::Usage(format!("--radius {r} must lie in (1, R]")));
    }
    if 4 * n_max > cli.samples {
        return Err(CmdError::Usage(format!(
            "--n-max {n_max} needs --samples of at least {}",
            4 * n_max
        )));
    }
    let eval: Box<dyn Fn(Complex64) -> Complex64> = match f {
        TestFunction::Faber(n) => {
            let p = faber::faber_polys(spec, n).pop().expect("n + 1 polynomials");
            Box::new(move |z| p.eval(z))
        }
        TestFunction::Constant(c) => Box::new(move |_| c),
        TestFunction::Monomials(cs) => {
            let cs: Vec<Complex64> = cs.into_iter().map(|x| Complex64::new(x, 0.0)).collect();
            Box::new(move |z| faber::eval_monomial(&cs, z))
        }
        TestFunction::Exp => Box::new(|z: Complex64| z.exp()),
    };
    let samples = faber::sample_on_circle(spec, eval, r, cli.samples)?;
    let mut series = faber::faber_coeffs(&samples, spec, r, n_max)?;
    series.level = level;
    let stderr = if series.aliasing_risk {
        format!("warning: |a_N| exceeds {:e} of the largest coefficient; raise --n-max\n", faber::ALIASING_RATIO)
    } else {
        String::new()
    };
    let stdout = match cli.output {
        OutputFormat::Json => {
            let mut body = series.to_json_value();
            body["radius"] = json!(r);
            body["aliasing_risk"] = json!(series.aliasing_risk);
            json_line(&envelope("coeffs", spec, body))
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,re,im\n");
            for (n, a) in series.coeffs.iter().enumerate() {
                let _ = writeln!(out, "{n},{},{}", fmt17(a.re), fmt17(a.im));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for (n, a) in series.coeffs.iter().enumerate() {
                let _ = writeln!(out, "a_{n} {}", complex_text(*a));
            }
            out
        }
    };
    Ok(Outcome { code: EXIT_OK, stdout, stderr })
}
