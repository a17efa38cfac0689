//! Faber polynomials, remainders and Faber coefficients.
//!
//! `F_n` is the polynomial part of `Φⁿ` at infinity and `E_n = Φⁿ - F_n`.
//! Polynomials come from Laurent arithmetic; the contour rule in
//! [`ContourRule`] is an independent route through the Cauchy integral over
//! `∂Ω_r`, and is also how remainders are computed.
//!
//! Values of `F_n` near `∂Ω_r` are of size `rⁿ` while the monomial
//! coefficients can be much larger, so evaluation is carried out in
//! double-double through the affine change of variable to the base
//! continuum (the unit disc or `[-1, 1]`).

use num_complex::{Complex, Complex64};
use rustfft::FftPlanner;
use serde::Serialize;

use crate::condensator::{joukowski_inverse_series, ContinuumSpec};
use crate::dd::{cabs, cdd, horner, horner_dd, root_of_unity, to_c64, CDd, Dd};
use crate::error::{Error, Result};
use crate::series::{default_depth, laurent_mul, split_parts, GradedLaurent, LaurentTail};

/// Default sample count of the contour rule.
pub const DEFAULT_CONTOUR_SAMPLES: usize = 1024;

/// Threshold on `|a_N| / max|a_n|` above which a coefficient vector is
/// flagged as possibly aliased.
pub const ALIASING_RATIO: f64 = 1e-6;

fn dzero() -> CDd {
    Complex::new(Dd::ZERO, Dd::ZERO)
}

fn done() -> CDd {
    Complex::new(Dd::ONE, Dd::ZERO)
}

/// How `z` is mapped to the base variable before evaluation.
#[derive(Clone, Debug, PartialEq)]
enum Transport {
    /// Base polynomial evaluated at `z` itself.
    Identity,
    /// Base polynomial evaluated at `αz + β`.
    Affine { alpha: CDd, beta: CDd },
}

impl Transport {
    fn of(spec: &ContinuumSpec) -> Transport {
        match spec {
            ContinuumSpec::Disc { center, radius } => {
                let inv = Dd::ONE / Dd::new(*radius);
                let c = cdd(*center);
                Transport::Affine {
                    alpha: Complex::new(inv, Dd::ZERO),
                    beta: -Complex::new(c.re * inv, c.im * inv),
                }
            }
            ContinuumSpec::Segment { a, b } if *a == -1.0 && *b == 1.0 => Transport::Identity,
            ContinuumSpec::Segment { a, b } => {
                let width = Dd::new(*b) - Dd::new(*a);
                Transport::Affine {
                    alpha: Complex::new(Dd::new(2.0) / width, Dd::ZERO),
                    beta: Complex::new(-(Dd::new(*a) + Dd::new(*b)) / width, Dd::ZERO),
                }
            }
            ContinuumSpec::Custom(_) => Transport::Identity,
        }
    }

    fn apply(&self, z: CDd) -> CDd {
        match self {
            Transport::Identity => z,
            Transport::Affine { alpha, beta } => alpha * z + beta,
        }
    }

    /// Monomial coefficients of `p(αz + β)` from those of `p`.
    fn compose(&self, base: &[CDd]) -> Vec<CDd> {
        match self {
            Transport::Identity => base.to_vec(),
            Transport::Affine { alpha, beta } => {
                let mut out: Vec<CDd> = vec![dzero(); base.len()];
                let mut deg = 0;
                for b in base.iter().rev() {
                    // out = out * (αz + β) + b
                    let mut next = vec![dzero(); base.len()];
                    for k in 0..=deg {
                        next[k] += out[k] * beta;
                        if k + 1 < next.len() {
                            next[k + 1] += out[k] * alpha;
                        }
                    }
                    next[0] += *b;
                    out = next;
                    deg = (deg + 1).min(base.len() - 1);
                }
                out
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FaberPoly {
    pub n: usize,
    /// Monomial coefficients `c₀ … c_n`.
    pub coeffs: Vec<Complex64>,
    /// Expected leading coefficient `γⁿ`.
    pub gamma_n: f64,
    base: Vec<CDd>,
    transport: Transport,
}

#[derive(Serialize)]
struct FaberPolyJson<'a> {
    n: usize,
    gamma: f64,
    coeffs: &'a [Complex64],
}

impl FaberPoly {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.n]
    }

    pub fn eval_dd(&self, z: CDd) -> CDd {
        horner_dd(&self.base, self.transport.apply(z))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        to_c64(self.eval_dd(cdd(z)))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(FaberPolyJson {
            n: self.n,
            gamma: self.gamma_n,
            coeffs: &self.coeffs,
        })
        .expect("plain data")
    }
}

/// Polynomial parts of `Φ⁰ … Φ^N` for a map given by Laurent data, by
/// successive multiplication with truncation at `depth`.
pub fn laurent_faber(map: &LaurentTail, n_max: usize, depth: usize) -> Vec<Vec<Complex64>> {
    let phi = map.with_depth(depth).to_graded();
    let mut power = GradedLaurent::constant(Complex64::new(1.0, 0.0));
    let mut out = vec![vec![Complex64::new(1.0, 0.0)]];
    for _ in 1..=n_max {
        power = laurent_mul(&power, &phi, depth);
        out.push(split_parts(&power).0);
    }
    out
}

/// `F_0 … F_N` for `K`.
pub fn faber_polys(spec: &ContinuumSpec, n_max: usize) -> Vec<FaberPoly> {
    let transport = Transport::of(spec);
    let gamma = spec.gamma();
    let bases: Vec<Vec<CDd>> = match spec {
        ContinuumSpec::Disc { .. } => (0..=n_max)
            .map(|n| {
                let mut b = vec![dzero(); n + 1];
                b[n] = done();
                b
            })
            .collect(),
        ContinuumSpec::Segment { .. } => {
            let depth = default_depth(n_max);
            laurent_faber(&joukowski_inverse_series(depth), n_max, depth)
                .into_iter()
                .map(|p| p.into_iter().map(cdd).collect())
                .collect()
        }
        ContinuumSpec::Custom(_) => {
            let depth = default_depth(n_max);
            laurent_faber(&spec.exterior_map(depth), n_max, depth)
                .into_iter()
                .map(|p| p.into_iter().map(cdd).collect())
                .collect()
        }
    };
    bases
        .into_iter()
        .enumerate()
        .map(|(n, base)| {
            let coeffs = transport.compose(&base).into_iter().map(to_c64).collect();
            FaberPoly {
                n,
                coeffs,
                gamma_n: gamma.powi(n as i32),
                base,
                transport: transport.clone(),
            }
        })
        .collect()
}

/// Trapezoid rule on `|w| = r` for Cauchy integrals over `∂Ω_r`.
///
/// With `t = Ψ(w)` the integral `(1/2πi)∮ Φⁿ(t)/(t - z) dt` becomes the
/// mean over the nodes of `wⁿ⁺¹ Ψ'(w)/(Ψ(w) - z)`. Nodes and weights are
/// kept in double-double.
#[derive(Clone, Debug)]
pub struct ContourRule {
    spec: ContinuumSpec,
    r: f64,
    /// `(w_j, Ψ(w_j), w_j Ψ'(w_j) / m)`
    nodes: Vec<(CDd, CDd, CDd)>,
}

impl ContourRule {
    pub fn new(spec: &ContinuumSpec, r: f64, m: usize) -> Result<ContourRule> {
        if !(r > 1.0 && r.is_finite()) {
            return Err(Error::Domain(format!("contour level {r} must exceed 1")));
        }
        if m < 4 {
            return Err(Error::Domain(format!("need at least 4 nodes, got {m}")));
        }
        let inv_m = Dd::ONE / Dd::new(m as f64);
        let rd = Dd::new(r);
        let nodes = (0..m)
            .map(|j| {
                let om = root_of_unity(j, m);
                let w = Complex::new(om.re * rd, om.im * rd);
                let psi = spec.psi_dd(w)?;
                let wt = w * spec.psi_prime_dd(w)?;
                Ok((w, psi, Complex::new(wt.re * inv_m, wt.im * inv_m)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ContourRule {
            spec: spec.clone(),
            r,
            nodes,
        })
    }

    pub fn level(&self) -> f64 {
        self.r
    }

    pub fn samples(&self) -> usize {
        self.nodes.len()
    }

    /// `(1/2πi)∮ Φⁿ(t)/(t - z) dt` for `n = 0..=n_max`, without checks.
    fn cauchy_all(&self, z: CDd, n_max: usize) -> Vec<CDd> {
        let mut acc = vec![dzero(); n_max + 1];
        for (w, psi, wt) in &self.nodes {
            let g = wt / (psi - z);
            let mut term = g;
            for a in acc.iter_mut() {
                *a += term;
                term *= w;
            }
        }
        acc
    }

    /// `F_0(z) … F_N(z)` for `z ∈ Ω_r`.
    pub fn faber_all(&self, z: Complex64, n_max: usize) -> Result<Vec<CDd>> {
        if !self.spec.contains(z) && self.spec.level_of(z)? >= self.r {
            return Err(Error::PointOutsideLevel { point: z, level: self.r });
        }
        Ok(self.cauchy_all(cdd(z), n_max))
    }

    /// `E_0(z) … E_N(z)` for `z` outside the closure of `Ω_r`.
    pub fn remainder_all(&self, z: Complex64, n_max: usize) -> Result<Vec<CDd>> {
        if self.spec.contains(z) || self.spec.level_of(z)? <= self.r {
            return Err(Error::PointInsideLevel { point: z, level: self.r });
        }
        Ok(self.cauchy_all(cdd(z), n_max).into_iter().map(|v| -v).collect())
    }
}

/// `F_n(z)` through the Cauchy integral over `∂Ω_r`.
pub fn faber_contour(
    spec: &ContinuumSpec,
    n: usize,
    z: Complex64,
    r: f64,
    m: usize,
) -> Result<Complex64> {
    let rule = ContourRule::new(spec, r, m)?;
    Ok(to_c64(rule.faber_all(z, n)?[n]))
}

/// `E_n(z) = Φⁿ(z) - F_n(z)` through the Cauchy integral over `∂Ω_r`.
pub fn faber_remainder(
    spec: &ContinuumSpec,
    n: usize,
    z: Complex64,
    r: f64,
    m: usize,
) -> Result<Complex64> {
    let rule = ContourRule::new(spec, r, m)?;
    Ok(to_c64(rule.remainder_all(z, n)?[n]))
}

/// `Φⁿ(z)` in double-double.
pub fn phi_pow_dd(spec: &ContinuumSpec, z: Complex64, n: usize) -> Result<CDd> {
    Ok(spec.phi_dd(cdd(z))?.powu(n as u32))
}

/// Samples `f(Ψ(r e^{2πij/m}))`, `j = 0..m`.
pub fn sample_on_circle(
    spec: &ContinuumSpec,
    f: impl Fn(Complex64) -> Complex64,
    r: f64,
    m: usize,
) -> Result<Vec<Complex64>> {
    (0..m)
        .map(|j| {
            let w = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / m as f64);
            Ok(f(spec.psi(w)?))
        })
        .collect()
}

/// A function `Σ a_n F_n` on `Ω_R`.
#[derive(Clone, Debug, PartialEq)]
pub struct FaberSeries {
    pub spec: ContinuumSpec,
    pub level: f64,
    pub coeffs: Vec<Complex64>,
    pub aliasing_risk: bool,
}

#[derive(Serialize)]
struct FaberSeriesJson<'a> {
    #[serde(rename = "R")]
    level: f64,
    coeffs: &'a [Complex64],
}

impl FaberSeries {
    pub fn new(spec: ContinuumSpec, level: f64, coeffs: Vec<Complex64>) -> FaberSeries {
        FaberSeries {
            spec,
            level,
            coeffs,
            aliasing_risk: false,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn scaled(&self, s: Complex64) -> FaberSeries {
        FaberSeries {
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
            ..self.clone()
        }
    }

    /// Collapses the series into one polynomial for repeated evaluation.
    pub fn evaluator(&self) -> SeriesEvaluator {
        self.evaluator_with(&faber_polys(&self.spec, self.order()))
    }

    /// As [`FaberSeries::evaluator`] with precomputed `F_0 … F_M`, `M ≥ N`.
    pub fn evaluator_with(&self, polys: &[FaberPoly]) -> SeriesEvaluator {
        assert!(polys.len() >= self.coeffs.len(), "not enough Faber polynomials");
        let transport = Transport::of(&self.spec);
        let len = self.coeffs.len().max(1);
        let mut base = vec![dzero(); len];
        for (a, p) in self.coeffs.iter().zip(polys) {
            let a = cdd(*a);
            for (k, c) in p.base.iter().enumerate() {
                base[k] += a * c;
            }
        }
        SeriesEvaluator { base, transport }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.evaluator().eval(z)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(FaberSeriesJson {
            level: self.level,
            coeffs: &self.coeffs,
        })
        .expect("plain data")
    }
}

/// A Faber series collapsed into a single polynomial in the base variable.
#[derive(Clone, Debug)]
pub struct SeriesEvaluator {
    base: Vec<CDd>,
    transport: Transport,
}

impl SeriesEvaluator {
    pub fn eval_dd(&self, z: CDd) -> CDd {
        horner_dd(&self.base, self.transport.apply(z))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        to_c64(self.eval_dd(cdd(z)))
    }
}

/// Faber coefficients `a_0 … a_N` from `m` equispaced samples of `f∘Ψ` on
/// `|w| = r`: `a_n` is the coefficient of `wⁿ` of `f∘Ψ` on the annulus.
pub fn faber_coeffs(
    samples: &[Complex64],
    spec: &ContinuumSpec,
    r: f64,
    n_max: usize,
) -> Result<FaberSeries> {
    let m = samples.len();
    if !(r > 1.0 && r.is_finite()) {
        return Err(Error::Domain(format!("sample radius {r} must exceed 1")));
    }
    if m == 0 || 4 * n_max > m {
        return Err(Error::Domain(format!("N = {n_max} needs at least {} samples, got {m}", 4 * n_max)));
    }
    let mut buf = samples.to_vec();
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let mut scale = 1.0 / m as f64;
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for x in buf.iter().take(n_max + 1) {
        coeffs.push(x * scale);
        scale /= r;
    }
    let peak = coeffs.iter().map(|a| a.norm()).fold(0.0, f64::max);
    let aliasing_risk = n_max > 0 && coeffs[n_max].norm() > ALIASING_RATIO * peak;
    Ok(FaberSeries {
        spec: spec.clone(),
        level: r,
        coeffs,
        aliasing_risk,
    })
}

/// Default sample radius for coefficient extraction on `Ω_R`.
pub fn default_sample_radius(level: f64) -> f64 {
    level.sqrt()
}

/// `|F_n(Ψ(w)) - (wⁿ + w⁻ⁿ)|` for a segment, in double-double.
pub fn target_identity_residual(spec: &ContinuumSpec, n: usize, w: Complex64) -> Result<f64> {
    if !matches!(spec, ContinuumSpec::Segment { .. }) {
        return Err(Error::WrongKind(spec.label()));
    }
    if n == 0 {
        return Err(Error::Domain("the identity is stated for n >= 1".into()));
    }
    if !(w.norm() > 1.0) {
        return Err(Error::InsideUnitDisc(w));
    }
    let poly = faber_polys(spec, n).pop().expect("n + 1 polynomials");
    let wd = cdd(w);
    let z = spec.psi_dd(wd)?;
    let wn = wd.powu(n as u32);
    let rhs = wn + done() / wn;
    Ok(cabs(poly.eval_dd(z) - rhs))
}

pub fn target_identity_check(spec: &ContinuumSpec, n: usize, w: Complex64, tol: f64) -> Result<bool> {
    Ok(target_identity_residual(spec, n, w)? < tol)
}

/// `(max_{z∈L} |F_n(z)|)^{1/n}`.
pub fn norm_root(spec: &ContinuumSpec, probe: &[Complex64], n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("norm root needs n >= 1".into()));
    }
    if let Some(z) = probe.iter().find(|z| spec.contains(**z)) {
        return Err(Error::PointInsideK(*z));
    }
    let poly = faber_polys(spec, n).pop().expect("n + 1 polynomials");
    let sup = probe.iter().map(|z| poly.eval(*z).norm()).fold(0.0, f64::max);
    Ok(sup.powf(1.0 / n as f64))
}

/// Monomial evaluation in double-double of plain coefficients.
pub fn eval_monomial(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    to_c64(horner(coeffs, cdd(z)))
}
