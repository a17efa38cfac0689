//! Bohr sums, coefficient bounds and falsification campaigns.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::condensator::{eccentricity, refine_on_circle, ContinuumSpec, SupDomain, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::faber::{faber_coeffs, faber_polys, FaberPoly, FaberSeries, SeriesEvaluator};

/// Sufficient radius for `[-1, 1]` reported in the literature by a
/// different method; kept for annotation only.
pub const LITERATURE_RADIUS: f64 = 5.1573;
/// Eccentricity matching [`LITERATURE_RADIUS`].
pub const LITERATURE_ECCENTRICITY: f64 = 0.3738;

/// Default bracket of the radius bisection.
pub const RADIUS_BRACKET: (f64, f64) = (1.01, 64.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Holds,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BohrReport {
    #[serde(rename = "K")]
    pub continuum: String,
    #[serde(rename = "R")]
    pub level: f64,
    pub sum: f64,
    /// `|a_n| ‖F_n‖_K`
    pub terms: Vec<f64>,
    pub slack: f64,
    pub verdict: Verdict,
}

/// `‖F_0‖_K … ‖F_N‖_K` by boundary sampling.
pub fn faber_norms(spec: &ContinuumSpec, polys: &[FaberPoly], m: usize) -> Result<Vec<f64>> {
    polys
        .iter()
        .map(|p| {
            if p.n == 0 {
                Ok(1.0)
            } else {
                crate::condensator::sup_of(|z| p.eval(z), SupDomain::Continuum(spec), m)
                    .map(|s| s.value)
            }
        })
        .collect()
}

fn report_from_norms(f: &FaberSeries, norms: &[f64]) -> BohrReport {
    let terms: Vec<f64> = f.coeffs.iter().zip(norms).map(|(a, nrm)| a.norm() * nrm).collect();
    let sum: f64 = terms.iter().sum();
    BohrReport {
        continuum: f.spec.label(),
        level: f.level,
        sum,
        terms,
        slack: 1.0 - sum,
        verdict: if sum < 1.0 { Verdict::Holds } else { Verdict::Violated },
    }
}

/// `Σ |a_n| ‖F_n‖_K` for `f = Σ a_n F_n`.
pub fn bohr_sum(f: &FaberSeries) -> Result<BohrReport> {
    let polys = faber_polys(&f.spec, f.order());
    let norms = faber_norms(&f.spec, &polys, DEFAULT_SAMPLES)?;
    Ok(report_from_norms(f, &norms))
}

/// `φ(R) = Σ_{n≥1} 4 / (Rⁿ - R⁻ⁿ)`.
pub fn phi_of_r(level: f64) -> Result<f64> {
    if !(level > 1.0 + 1e-6) || !level.is_finite() {
        return Err(Error::Domain(format!("φ needs R > 1 + 1e-6, got {level}")));
    }
    let mut sum = 0.0;
    let mut pow = 1.0;
    loop {
        pow *= level;
        let term = 4.0 / (pow - 1.0 / pow);
        sum += term;
        if term < 1e-15 * sum {
            return Ok(sum);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BohrRadius {
    pub radius: f64,
    pub eccentricity: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
}

/// Root of `φ(R) = 1` on the default bracket.
pub fn segment_bohr_radius(tol: f64) -> Result<BohrRadius> {
    segment_bohr_radius_in(RADIUS_BRACKET.0, RADIUS_BRACKET.1, tol)
}

/// Bisection for `φ(R) = 1` on `[lo, hi]` down to width `tol`.
pub fn segment_bohr_radius_in(lo: f64, hi: f64, tol: f64) -> Result<BohrRadius> {
    if !(tol >= 1e-10) || !tol.is_finite() {
        return Err(Error::Domain(format!("tolerance {tol} must be at least 1e-10")));
    }
    let (mut a, mut b) = (lo, hi);
    if !(phi_of_r(a)? > 1.0 && phi_of_r(b)? < 1.0) {
        return Err(Error::Domain(format!("[{lo}, {hi}] does not bracket φ(R) = 1")));
    }
    let mut iterations = 0;
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if phi_of_r(mid)? > 1.0 {
            a = mid;
        } else {
            b = mid;
        }
        iterations += 1;
    }
    let radius = 0.5 * (a + b);
    Ok(BohrRadius {
        radius,
        eccentricity: eccentricity(radius)?,
        bracket: (lo, hi),
        iterations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundMode {
    /// `re f > 0`: `|a_n| ≤ 2 re(a₀) / (Rⁿ - R⁻ⁿ)`.
    Caratheodory,
    /// `|f| < 1`, `a₀ ≥ 0`: `|a_n| ≤ 2 (1 - a₀) / (Rⁿ - R⁻ⁿ)`.
    Bohr,
}

/// `bound_n - |a_n|` for `n = 1..=N`, given `a₀` already real.
pub fn coefficient_margins(coeffs: &[Complex64], level: f64, mode: BoundMode) -> Vec<f64> {
    let a0 = coeffs.first().map_or(0.0, |a| a.re);
    let numer = match mode {
        BoundMode::Caratheodory => 2.0 * a0,
        BoundMode::Bohr => 2.0 * (1.0 - a0),
    };
    let mut pow = 1.0;
    coeffs
        .iter()
        .skip(1)
        .map(|a| {
            pow *= level;
            numer / (pow - 1.0 / pow) - a.norm()
        })
        .collect()
}

/// Rotates `f` so that `a₀ ≥ 0`.
pub fn rotation_normalized(f: &FaberSeries) -> FaberSeries {
    match f.coeffs.first() {
        Some(a0) if a0.norm() > 0.0 => {
            let mut g = f.scaled(Complex64::from_polar(1.0, -a0.arg()));
            g.coeffs[0] = Complex64::new(g.coeffs[0].norm(), 0.0);
            g
        }
        _ => f.clone(),
    }
}

/// Coefficient bounds for a function on the segment's `Ω_R`, with the
/// hypotheses checked on `∂Ω_R`.
pub fn coeff_bound_check(f: &FaberSeries, level: f64, mode: BoundMode) -> Result<Vec<f64>> {
    if !matches!(f.spec, ContinuumSpec::Segment { .. }) {
        return Err(Error::WrongKind(f.spec.label()));
    }
    if !(level > 1.0) {
        return Err(Error::Domain(format!("level {level} must exceed 1")));
    }
    let g = match mode {
        BoundMode::Bohr => rotation_normalized(f),
        BoundMode::Caratheodory => f.clone(),
    };
    let eval = g.evaluator();
    let m = DEFAULT_SAMPLES;
    for j in 0..m {
        let w = Complex64::from_polar(level, TAU * j as f64 / m as f64);
        let v = eval.eval(f.spec.psi(w)?);
        let bad = match mode {
            BoundMode::Caratheodory => v.re <= 0.0,
            BoundMode::Bohr => v.norm() >= 1.0,
        };
        if bad {
            return Err(Error::PreconditionViolated {
                point: w,
                reason: match mode {
                    BoundMode::Caratheodory => format!("re f = {} is not positive", v.re),
                    BoundMode::Bohr => format!("|f| = {} is not below 1", v.norm()),
                },
            });
        }
    }
    Ok(coefficient_margins(&g.coeffs, level, mode))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    ScaledPolynomial,
    MoebiusComposite,
    RandomFaberSeries,
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "polynomial" | "scaled-polynomial" => Ok(FamilyKind::ScaledPolynomial),
            "moebius" | "moebius-composite" => Ok(FamilyKind::MoebiusComposite),
            "faber" | "random-faber-series" => Ok(FamilyKind::RandomFaberSeries),
            _ => Err(Error::Domain(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundedFamily {
    pub kind: FamilyKind,
    pub seed: u64,
    pub count: usize,
    /// Functions are normalized to sup `1/(1 + margin)` on `∂Ω_R`.
    pub margin: f64,
    pub max_degree: usize,
    /// Range swept by the Möbius parameter.
    pub moebius_range: (f64, f64),
}

impl BoundedFamily {
    pub fn new(kind: FamilyKind, seed: u64, count: usize) -> BoundedFamily {
        BoundedFamily {
            kind,
            seed,
            count,
            margin: 0.01,
            max_degree: 6,
            moebius_range: (0.8, 0.99),
        }
    }
}

const MOEBIUS_GRID: usize = 20;
const CERTIFY_SAMPLES: usize = 4 * DEFAULT_SAMPLES;

/// Number of Faber terms kept for a non-polynomial function on `Ω_R`.
pub fn series_terms(level: f64) -> usize {
    ((16.0 * 10f64.ln() / level.ln()).ceil() as usize).clamp(8, 40)
}

fn sup_on_level(
    spec: &ContinuumSpec,
    level: f64,
    g: impl Fn(Complex64) -> Complex64,
    m: usize,
) -> Result<f64> {
    let (_, v) = refine_on_circle(|t| Ok(g(spec.curve_point(level, t)?).norm()), m, true)?;
    Ok(v)
}

fn normal_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn random_coeffs(
    rng: &mut ChaCha8Rng,
    degree: usize,
    level: f64,
    with_constant: bool,
) -> Vec<Complex64> {
    let mut scale = 1.0;
    (0..=degree)
        .map(|n| {
            let a = normal_complex(rng) * scale;
            scale /= level;
            if n == 0 && !with_constant {
                Complex64::new(0.0, 0.0)
            } else {
                a
            }
        })
        .collect()
}

/// Scales `coeffs` so the sampled sup over `∂Ω_R` is `1/(1 + margin)`.
fn normalize(
    spec: &ContinuumSpec,
    level: f64,
    coeffs: Vec<Complex64>,
    polys: &[FaberPoly],
    margin: f64,
) -> Result<FaberSeries> {
    let f = FaberSeries::new(spec.clone(), level, coeffs);
    let eval = f.evaluator_with(polys);
    let sup = sup_on_level(spec, level, |z| eval.eval(z), DEFAULT_SAMPLES)?;
    if sup == 0.0 {
        return Ok(f);
    }
    Ok(f.scaled(Complex64::new(1.0 / ((1.0 + margin) * sup), 0.0)))
}

fn moebius(a: f64, u: Complex64) -> Complex64 {
    (a - u) / (1.0 - a * u)
}

fn moebius_parameter(family: &BoundedFamily, index: usize) -> f64 {
    let (lo, hi) = family.moebius_range;
    lo + (hi - lo) * (index % MOEBIUS_GRID) as f64 / (MOEBIUS_GRID - 1) as f64
}

/// Checks `sup_{∂Ω_R} |f| ≤ 1 - margin/2` on a finer sampling.
pub fn certify(f: &FaberSeries, eval: &SeriesEvaluator, margin: f64) -> Result<f64> {
    let sup = sup_on_level(&f.spec, f.level, |z| eval.eval(z), CERTIFY_SAMPLES)?;
    let limit = 1.0 - 0.5 * margin;
    if sup > limit {
        return Err(Error::CertificationFailed { sup, limit });
    }
    Ok(sup)
}

/// Deterministic family of functions bounded by 1 on `Ω_R`.
pub fn gen_bounded(
    spec: &ContinuumSpec,
    level: f64,
    family: &BoundedFamily,
) -> Result<Vec<FaberSeries>> {
    if !(level > 1.0) || !level.is_finite() {
        return Err(Error::Domain(format!("level {level} must exceed 1")));
    }
    if !(family.margin > 0.0 && family.margin < 1.0) {
        return Err(Error::Domain(format!("margin {} must lie in (0, 1)", family.margin)));
    }
    let max_degree = family.max_degree.max(1);
    let terms = series_terms(level);
    let polys = faber_polys(spec, max_degree.max(terms));
    let mut rng = ChaCha8Rng::seed_from_u64(family.seed);
    let mut out = Vec::with_capacity(family.count);
    for index in 0..family.count {
        let f = match family.kind {
            FamilyKind::ScaledPolynomial => {
                let degree = rng.random_range(0..=max_degree);
                let coeffs = random_coeffs(&mut rng, degree, level, true);
                normalize(spec, level, coeffs, &polys, family.margin)?
            }
            FamilyKind::RandomFaberSeries => {
                let rho: f64 = rng.random_range(0.3..0.95);
                let mut scale = 1.0;
                let coeffs: Vec<Complex64> = (0..=terms)
                    .map(|_| {
                        let modulus: f64 = rng.random_range(0.0..1.0);
                        let phase: f64 = rng.random_range(0.0..TAU);
                        let a = Complex64::from_polar(modulus * scale, phase);
                        scale *= rho / level;
                        a
                    })
                    .collect();
                normalize(spec, level, coeffs, &polys, family.margin)?
            }
            FamilyKind::MoebiusComposite => {
                let degree = rng.random_range(1..=max_degree);
                let inner = random_coeffs(&mut rng, degree, level, false);
                let g = normalize(spec, level, inner, &polys, family.margin)?;
                let geval = g.evaluator_with(&polys);
                let a = moebius_parameter(family, index);
                let m = 4 * DEFAULT_SAMPLES;
                let r = level;
                let samples = crate::faber::sample_on_circle(
                    spec,
                    |z| moebius(a, geval.eval(z)),
                    r,
                    m,
                )?;
                let mut f = faber_coeffs(&samples, spec, r, terms)?;
                f.level = level;
                let eval = f.evaluator_with(&polys);
                let sup = sup_on_level(spec, level, |z| eval.eval(z), DEFAULT_SAMPLES)?;
                let target = 1.0 / (1.0 + family.margin);
                if sup > target {
                    f = f.scaled(Complex64::new(target / sup, 0.0));
                }
                f
            }
        };
        certify(&f, &f.evaluator_with(&polys), family.margin)?;
        out.push(f);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub sum: f64,
    pub coeffs: Vec<Complex64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignReport {
    #[serde(rename = "K")]
    pub continuum: String,
    #[serde(rename = "R")]
    pub level: f64,
    pub family: BoundedFamily,
    pub count: usize,
    pub min_slack: Option<f64>,
    pub max_sum: Option<f64>,
    pub violations: Vec<Violation>,
    /// Set when nothing was found: a clean campaign is evidence, not proof.
    pub evidence_only: bool,
}

/// Runs the Bohr sum over a generated family.
pub fn bohr_verify(
    spec: &ContinuumSpec,
    level: f64,
    family: &BoundedFamily,
) -> Result<CampaignReport> {
    let functions = gen_bounded(spec, level, family)?;
    let order = functions.iter().map(|f| f.order()).max().unwrap_or(0);
    let polys = faber_polys(spec, order);
    let norms = faber_norms(spec, &polys, DEFAULT_SAMPLES)?;
    let mut violations = Vec::new();
    let mut min_slack: Option<f64> = None;
    let mut max_sum: Option<f64> = None;
    for (index, f) in functions.iter().enumerate() {
        let report = report_from_norms(f, &norms);
        min_slack = Some(min_slack.map_or(report.slack, |s| s.min(report.slack)));
        max_sum = Some(max_sum.map_or(report.sum, |s| s.max(report.sum)));
        if report.verdict == Verdict::Violated {
            violations.push(Violation {
                index,
                sum: report.sum,
                coeffs: f.coeffs.clone(),
            });
        }
    }
    Ok(CampaignReport {
        continuum: spec.label(),
        level,
        family: family.clone(),
        count: functions.len(),
        min_slack,
        max_sum,
        evidence_only: violations.is_empty(),
        violations,
    })
}
