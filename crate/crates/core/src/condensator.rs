//! Continua, their exterior maps and the Green level sets around them.
//!
//! Every continuum `K` comes with `Φ`, the conformal map of the exterior of
//! `K` onto `|w| > 1` fixing infinity with `Φ'(∞) = γ > 0`, and its inverse
//! `Ψ`. The level set `Ω_R = {|Φ| < R} ∪ K` is bounded by the curve
//! `θ ↦ Ψ(R e^{iθ})`, which is how every boundary in this module is
//! sampled.

use std::f64::consts::TAU;

use num_complex::{Complex, Complex64};
use serde::{Deserialize, Serialize};

use crate::dd::{cdd, to_c64, CDd, Dd};
use crate::error::{Error, Result};
use crate::series::LaurentTail;

/// Default sample count for norms, lengths and distances.
pub const DEFAULT_SAMPLES: usize = 1024;

/// Distance below which a point counts as lying on `K`.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

/// Radius offset used to sample a custom continuum just outside `∂K`.
const CUSTOM_BOUNDARY_OFFSET: f64 = 1e-9;

const ARC_MAX_DOUBLINGS: usize = 12;
const ARC_REL_TOL: f64 = 1e-8;

/// A custom continuum presented by the Laurent data of `Φ`, optionally with
/// the Laurent data of `Ψ` (which converges on all of `|w| > 1`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CustomMap {
    pub map: LaurentTail,
    pub inverse: Option<LaurentTail>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ContinuumSpec {
    Disc { center: Complex64, radius: f64 },
    Segment { a: f64, b: f64 },
    Custom(CustomMap),
}

fn is_real_positive(c: Complex64) -> bool {
    c.re > 0.0 && c.im.abs() <= 1e-14 * c.re && c.re.is_finite()
}

impl ContinuumSpec {
    pub fn disc(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) || !center.re.is_finite() || !center.im.is_finite()
        {
            return Err(Error::InvalidContinuum(format!("disc radius {radius} must be positive")));
        }
        Ok(ContinuumSpec::Disc { center, radius })
    }

    pub fn unit_disc() -> Self {
        ContinuumSpec::Disc {
            center: Complex64::new(0.0, 0.0),
            radius: 1.0,
        }
    }

    pub fn segment(a: f64, b: f64) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidContinuum(format!("segment needs a < b, got [{a}, {b}]")));
        }
        Ok(ContinuumSpec::Segment { a, b })
    }

    /// The segment `[-1, 1]`.
    pub fn unit_segment() -> Self {
        ContinuumSpec::Segment { a: -1.0, b: 1.0 }
    }

    pub fn custom(map: LaurentTail, inverse: Option<LaurentTail>) -> Result<Self> {
        if !is_real_positive(map.lead) {
            return Err(Error::InvalidContinuum(format!(
                "leading coefficient of Φ must be real positive, got {}",
                map.lead
            )));
        }
        if let Some(inv) = &inverse {
            if !is_real_positive(inv.lead) {
                return Err(Error::InvalidContinuum(format!(
                    "leading coefficient of Ψ must be real positive, got {}",
                    inv.lead
                )));
            }
            if (inv.lead.re * map.lead.re - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidContinuum(
                    "leading coefficients of Φ and Ψ are not reciprocal".into(),
                ));
            }
        }
        Ok(ContinuumSpec::Custom(CustomMap { map, inverse }))
    }

    /// `γ = Φ'(∞)`, the reciprocal of the logarithmic capacity.
    pub fn gamma(&self) -> f64 {
        match self {
            ContinuumSpec::Disc { radius, .. } => 1.0 / radius,
            ContinuumSpec::Segment { a, b } => 4.0 / (b - a),
            ContinuumSpec::Custom(c) => c.map.lead.re,
        }
    }

    pub fn capacity(&self) -> f64 {
        1.0 / self.gamma()
    }

    pub fn label(&self) -> String {
        match self {
            ContinuumSpec::Disc { center, radius } => {
                format!("disc:{},{},{}", center.re, center.im, radius)
            }
            ContinuumSpec::Segment { a, b } => format!("segment:{a},{b}"),
            ContinuumSpec::Custom(_) => "custom".to_string(),
        }
    }

    /// `(α, β)` with `u = αz + β` sending the segment onto `[-1, 1]`.
    fn segment_affine(a: f64, b: f64) -> (f64, f64) {
        (2.0 / (b - a), -(a + b) / (b - a))
    }

    /// Laurent data of `Φ` truncated at `depth`.
    pub fn exterior_map(&self, depth: usize) -> LaurentTail {
        match self {
            ContinuumSpec::Disc { center, radius } => LaurentTail::new(
                Complex64::new(1.0 / radius, 0.0),
                -center / radius,
                vec![Complex64::new(0.0, 0.0); depth],
            ),
            ContinuumSpec::Segment { a, b } => {
                let base = joukowski_inverse_series(depth);
                if *a == -1.0 && *b == 1.0 {
                    base
                } else {
                    let (alpha, beta) = Self::segment_affine(*a, *b);
                    base.compose_affine(alpha, beta, depth)
                }
            }
            ContinuumSpec::Custom(c) => c.map.with_depth(depth.max(c.map.depth())),
        }
    }

    /// Membership test with tolerance [`MEMBERSHIP_TOL`]; points within the
    /// tolerance of `∂K` count as inside.
    pub fn contains(&self, z: Complex64) -> bool {
        match self {
            ContinuumSpec::Segment { a, b } => {
                z.im.abs() <= MEMBERSHIP_TOL
                    && z.re >= a - MEMBERSHIP_TOL
                    && z.re <= b + MEMBERSHIP_TOL
            }
            ContinuumSpec::Disc { center, radius } => {
                (z - center).norm() <= radius * (1.0 + MEMBERSHIP_TOL)
            }
            ContinuumSpec::Custom(_) => match self.phi_unchecked(z) {
                Ok(w) => w.norm() <= 1.0 + MEMBERSHIP_TOL,
                Err(_) => true,
            },
        }
    }

    /// `Φ(z)` for `z ∉ K`.
    pub fn phi(&self, z: Complex64) -> Result<Complex64> {
        if self.contains(z) {
            return Err(Error::PointInsideK(z));
        }
        self.phi_unchecked(z)
    }

    fn phi_unchecked(&self, z: Complex64) -> Result<Complex64> {
        match self {
            ContinuumSpec::Disc { center, radius } => Ok((z - center) / radius),
            ContinuumSpec::Segment { a, b } => {
                let (alpha, beta) = Self::segment_affine(*a, *b);
                Ok(joukowski_inverse(alpha * z + beta))
            }
            ContinuumSpec::Custom(c) => match &c.inverse {
                None => Ok(c.map.eval(z)),
                Some(inv) => invert_custom(inv, &c.map, z),
            },
        }
    }

    /// `Ψ(w)` for `|w| > 1`.
    pub fn psi(&self, w: Complex64) -> Result<Complex64> {
        if !(w.norm() > 1.0) {
            return Err(Error::InsideUnitDisc(w));
        }
        self.psi_raw(w)
    }

    /// `Ψ(w)` without the `|w| > 1` guard; used on `|w| = 1` to trace `∂K`.
    pub(crate) fn psi_raw(&self, w: Complex64) -> Result<Complex64> {
        match self {
            ContinuumSpec::Disc { center, radius } => Ok(center + w * *radius),
            ContinuumSpec::Segment { a, b } => {
                Ok((w + w.inv()) * (0.25 * (b - a)) + 0.5 * (a + b))
            }
            ContinuumSpec::Custom(c) => match &c.inverse {
                Some(inv) => Ok(inv.eval(w)),
                None => {
                    let map = &c.map;
                    let guess = (w - map.c0) / map.lead;
                    newton_solve(|t| map.eval(t), |t| map.derivative(t), w, guess, |_| true)
                        .or_else(|| {
                            continuation_solve(
                                |t| map.eval(t),
                                |t| map.derivative(t),
                                w,
                                |s| (s * w - map.c0) / map.lead,
                            )
                        })
                        .ok_or(Error::NonConvergent { what: "inverse of Φ series" })
                }
            },
        }
    }

    pub fn psi_prime(&self, w: Complex64) -> Result<Complex64> {
        match self {
            ContinuumSpec::Disc { radius, .. } => Ok(Complex64::new(*radius, 0.0)),
            ContinuumSpec::Segment { a, b } => Ok((1.0 - (w * w).inv()) * (0.25 * (b - a))),
            ContinuumSpec::Custom(c) => match &c.inverse {
                Some(inv) => Ok(inv.derivative(w)),
                None => {
                    let t = self.psi_raw(w)?;
                    Ok(c.map.derivative(t).inv())
                }
            },
        }
    }

    pub(crate) fn psi_dd(&self, w: CDd) -> Result<CDd> {
        match self {
            ContinuumSpec::Disc { center, radius } => {
                Ok(cdd(*center) + w * Complex::new(Dd::new(*radius), Dd::ZERO))
            }
            ContinuumSpec::Segment { a, b } => {
                let j = w + w.inv();
                let s = Dd::new(0.25) * Dd::new(b - a);
                Ok(Complex::new(j.re * s, j.im * s) + cdd(Complex64::new(0.5 * (a + b), 0.0)))
            }
            ContinuumSpec::Custom(c) => match &c.inverse {
                Some(inv) => Ok(tail_eval_dd(inv, w)),
                None => {
                    // One Newton step on Φ(t) = w from the f64 inverse.
                    let t0 = cdd(self.psi_raw(to_c64(w))?);
                    let res = tail_eval_dd(&c.map, t0) - w;
                    Ok(t0 - res / tail_derivative_dd(&c.map, t0))
                }
            },
        }
    }

    pub(crate) fn psi_prime_dd(&self, w: CDd) -> Result<CDd> {
        match self {
            ContinuumSpec::Disc { radius, .. } => Ok(Complex::new(Dd::new(*radius), Dd::ZERO)),
            ContinuumSpec::Segment { a, b } => {
                let one = Complex::new(Dd::ONE, Dd::ZERO);
                let d = one - (w * w).inv();
                let s = Dd::new(0.25) * Dd::new(b - a);
                Ok(Complex::new(d.re * s, d.im * s))
            }
            ContinuumSpec::Custom(c) => match &c.inverse {
                Some(inv) => Ok(tail_derivative_dd(inv, w)),
                None => {
                    let t = self.psi_dd(w)?;
                    Ok(tail_derivative_dd(&c.map, t).inv())
                }
            },
        }
    }

    /// `Φ(z)` carried to double-double accuracy.
    pub(crate) fn phi_dd(&self, z: CDd) -> Result<CDd> {
        let z64 = to_c64(z);
        match self {
            ContinuumSpec::Disc { center, radius } => {
                let r = Complex::new(Dd::new(*radius), Dd::ZERO);
                Ok((z - cdd(*center)) / r)
            }
            ContinuumSpec::Custom(CustomMap { map, inverse: None }) => {
                if self.contains(z64) {
                    return Err(Error::PointInsideK(z64));
                }
                Ok(tail_eval_dd(map, z))
            }
            _ => {
                let w0 = cdd(self.phi(z64)?);
                let res = self.psi_dd(w0)? - z;
                Ok(w0 - res / self.psi_prime_dd(w0)?)
            }
        }
    }

    /// `g_K(z) = log|Φ(z)|`.
    pub fn green(&self, z: Complex64) -> Result<f64> {
        Ok(self.phi(z)?.norm().ln())
    }

    /// `|Φ(z)|`, with zero reported for points of `K`.
    pub fn level_of(&self, z: Complex64) -> Result<f64> {
        if self.contains(z) {
            return Ok(0.0);
        }
        Ok(self.phi_unchecked(z)?.norm())
    }

    /// The continuum `closure(Ω_R)` as a custom spec: `Φ̃ = Φ/R`, `Ψ̃(w) = Ψ(Rw)`.
    pub fn level_continuum(&self, level: f64, depth: usize) -> Result<ContinuumSpec> {
        if !(level > 1.0) {
            return Err(Error::Domain(format!("level {level} must exceed 1")));
        }
        let map = self.exterior_map(depth).scaled(1.0 / level);
        let inverse = match self {
            ContinuumSpec::Disc { center, radius } => Some(LaurentTail::new(
                Complex64::new(radius * level, 0.0),
                *center,
                vec![],
            )),
            ContinuumSpec::Segment { a, b } => Some(LaurentTail::new(
                Complex64::new(0.25 * (b - a) * level, 0.0),
                Complex64::new(0.5 * (a + b), 0.0),
                vec![Complex64::new(0.25 * (b - a) / level, 0.0)],
            )),
            ContinuumSpec::Custom(c) => c.inverse.as_ref().map(|inv| {
                let mut scale = 1.0;
                LaurentTail::new(
                    inv.lead * level,
                    inv.c0,
                    inv.tail
                        .iter()
                        .map(|t| {
                            scale /= level;
                            t * scale
                        })
                        .collect(),
                )
            }),
        };
        ContinuumSpec::custom(map, inverse)
    }

    /// Point of the curve `θ ↦ Ψ(ρ e^{iθ})`. At `ρ = 1` this traces `∂K`
    /// (for the segment, `θ ↦ cos θ` up to the affine map).
    pub(crate) fn curve_point(&self, rho: f64, theta: f64) -> Result<Complex64> {
        self.psi_raw(Complex64::from_polar(rho, theta))
    }

    /// Radius at which `∂K` itself is traced.
    pub(crate) fn boundary_radius(&self) -> f64 {
        match self {
            ContinuumSpec::Custom(_) => 1.0 + CUSTOM_BOUNDARY_OFFSET,
            _ => 1.0,
        }
    }
}

/// Laurent data of `z + √(z²-1)`, the exterior map of `[-1, 1]`.
pub fn joukowski_inverse_series(depth: usize) -> LaurentTail {
    let mut tail = vec![Complex64::new(0.0, 0.0); depth];
    let mut binom = 1.0;
    let mut k = 1;
    while 2 * k - 1 <= depth {
        binom *= (0.5 - (k - 1) as f64) / k as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        tail[2 * k - 2] = Complex64::new(sign * binom, 0.0);
        k += 1;
    }
    LaurentTail::new(Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0), tail)
}

/// `u + √(u²-1)` on the branch with modulus > 1.
fn joukowski_inverse(u: Complex64) -> Complex64 {
    let s = (u * u - 1.0).sqrt();
    let p = u + s;
    let m = u - s;
    if p.norm() >= m.norm() {
        p
    } else {
        m
    }
}

fn tail_eval_dd(t: &LaurentTail, z: CDd) -> CDd {
    let u = z.inv();
    let mut acc: CDd = Complex::new(Dd::ZERO, Dd::ZERO);
    for c in t.tail.iter().rev() {
        acc = (acc + cdd(*c)) * u;
    }
    cdd(t.lead) * z + cdd(t.c0) + acc
}

fn tail_derivative_dd(t: &LaurentTail, z: CDd) -> CDd {
    let u = z.inv();
    let mut acc: CDd = Complex::new(Dd::ZERO, Dd::ZERO);
    for (k, c) in t.tail.iter().enumerate().rev() {
        acc = (acc + cdd(*c * (k as f64 + 1.0))) * u;
    }
    cdd(t.lead) - acc * u
}

/// Damped Newton iteration for `f(x) = target`, keeping iterates admissible.
fn newton_solve(
    f: impl Fn(Complex64) -> Complex64,
    df: impl Fn(Complex64) -> Complex64,
    target: Complex64,
    x0: Complex64,
    admissible: impl Fn(Complex64) -> bool,
) -> Option<Complex64> {
    let tol = 1e-14 * target.norm().max(1.0);
    let mut x = x0;
    if !admissible(x) || !x.re.is_finite() || !x.im.is_finite() {
        return None;
    }
    let mut res = (f(x) - target).norm();
    for _ in 0..80 {
        if res <= tol {
            return Some(x);
        }
        let step = (f(x) - target) / df(x);
        if !step.re.is_finite() || !step.im.is_finite() {
            return None;
        }
        let mut lambda = 1.0;
        let mut accepted = false;
        while lambda > 1e-8 {
            let xn = x - step * lambda;
            let rn = (f(xn) - target).norm();
            if admissible(xn) && rn < res {
                x = xn;
                res = rn;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (res <= 1e-10 * target.norm().max(1.0)).then_some(x)
}

/// Newton continuation from a far point where `guess` is accurate down to
/// the actual target.
fn continuation_solve(
    f: impl Fn(Complex64) -> Complex64,
    df: impl Fn(Complex64) -> Complex64,
    target: Complex64,
    guess: impl Fn(f64) -> Complex64,
) -> Option<Complex64> {
    const STEPS: usize = 48;
    let far = 64.0;
    let mut x = guess(far);
    for i in 0..=STEPS {
        let s = far.powf(1.0 - i as f64 / STEPS as f64);
        let t = target * s;
        x = newton_solve(&f, &df, t, x, |_| true)?;
    }
    Some(x)
}

/// `Φ(z)` for a custom map presented through its inverse: solves
/// `Ψ(w) = z` on `|w| > 1`.
fn invert_custom(inv: &LaurentTail, map: &LaurentTail, z: Complex64) -> Result<Complex64> {
    let outside = |w: Complex64| w.norm() > 1.0;
    let series_guess = map.eval(z);
    let direct = if outside(series_guess) {
        newton_solve(|w| inv.eval(w), |w| inv.derivative(w), z, series_guess, outside)
    } else {
        None
    };
    let center = -map.c0 / map.lead;
    direct
        .or_else(|| {
            // March in from far along the ray from the centre of K.
            let dir = z - center;
            const STEPS: usize = 48;
            let far = 64.0 * (1.0 + 1.0 / map.lead.re) / dir.norm().max(1e-300);
            let far = far.max(1.0);
            let mut w = map.lead * (dir * far);
            for i in 0..=STEPS {
                let s = far.powf(1.0 - i as f64 / STEPS as f64);
                let zt = center + dir * s;
                w = newton_solve(|w| inv.eval(w), |w| inv.derivative(w), zt, w, outside)?;
            }
            Some(w)
        })
        .ok_or(Error::PointInsideK(z))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LevelSet {
    pub spec: ContinuumSpec,
    pub level: f64,
    /// `points[j] = Ψ(R e^{2πij/m})`.
    pub points: Vec<Complex64>,
    pub arc_length: f64,
}

impl LevelSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn theta(&self, j: usize) -> f64 {
        TAU * j as f64 / self.points.len() as f64
    }

    /// CSV dump `theta,re,im` at 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,re,im\n");
        for (j, p) in self.points.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{}\n",
                crate::output::fmt17(self.theta(j)),
                crate::output::fmt17(p.re),
                crate::output::fmt17(p.im)
            ));
        }
        out
    }
}

fn check_level(r: f64) -> Result<()> {
    if r > 1.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("level {r} must be a finite number > 1")))
    }
}

/// Samples `∂Ω_R` at `m` equispaced angles.
pub fn level_boundary(spec: &ContinuumSpec, level: f64, m: usize) -> Result<LevelSet> {
    check_level(level)?;
    if m < 4 {
        return Err(Error::Domain(format!("need at least 4 samples, got {m}")));
    }
    let points = (0..m)
        .map(|j| spec.psi(Complex64::from_polar(level, TAU * j as f64 / m as f64)))
        .collect::<Result<Vec<_>>>()?;
    let arc_length = arc_length(spec, level, m)?;
    Ok(LevelSet {
        spec: spec.clone(),
        level,
        points,
        arc_length,
    })
}

/// `2R / (1 + R²)`, the eccentricity of the segment's level ellipse.
pub fn eccentricity(level: f64) -> Result<f64> {
    check_level(level)?;
    Ok(2.0 * level / (1.0 + level * level))
}

/// Length of `∂Ω_r`: trapezoid rule for `∮ |Ψ'(re^{iθ})| r dθ`, doubling `m`
/// until two successive values agree to 1e-8 relative.
pub fn arc_length(spec: &ContinuumSpec, r: f64, m: usize) -> Result<f64> {
    check_level(r)?;
    let trapezoid = |m: usize| -> Result<f64> {
        let mut sum = 0.0;
        for j in 0..m {
            let w = Complex64::from_polar(r, TAU * j as f64 / m as f64);
            sum += spec.psi_prime(w)?.norm();
        }
        Ok(sum * r * TAU / m as f64)
    };
    let mut m = m.max(1);
    let mut prev = trapezoid(m)?;
    for _ in 0..ARC_MAX_DOUBLINGS {
        m *= 2;
        let cur = trapezoid(m)?;
        if (cur - prev).abs() <= ARC_REL_TOL * cur.abs() {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NonConvergent { what: "arc length" })
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the minimum of `f` on `[lo, hi]`.
pub(crate) fn golden_min(
    f: impl Fn(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
) -> Result<(f64, f64)> {
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..80 {
        if (hi - lo).abs() < 1e-14 {
            break;
        }
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 < f2 { (x1, f1) } else { (x2, f2) })
}

/// Extremum of `f` along `θ ∈ [0, 2π)`: `m` equispaced samples plus one
/// golden-section pass around the best sample. Returns `(θ, value)`.
pub(crate) fn refine_on_circle(
    f: impl Fn(f64) -> Result<f64>,
    m: usize,
    maximize: bool,
) -> Result<(f64, f64)> {
    let sign = if maximize { -1.0 } else { 1.0 };
    let h = TAU / m as f64;
    let mut best = (0.0, f64::INFINITY);
    for j in 0..m {
        let theta = h * j as f64;
        let v = sign * f(theta)?;
        if v < best.1 {
            best = (theta, v);
        }
    }
    let refined = golden_min(|t| Ok(sign * f(t)?), best.0 - h, best.0 + h)?;
    let (theta, v) = if refined.1 < best.1 { refined } else { best };
    Ok((theta.rem_euclid(TAU), sign * v))
}

/// `dist(z, ∂Ω_r)` by sampling with golden-section refinement.
pub fn dist_to_level(spec: &ContinuumSpec, z: Complex64, r: f64, m: usize) -> Result<f64> {
    check_level(r)?;
    let (_, d) = refine_on_circle(|t| Ok((z - spec.curve_point(r, t)?).norm()), m, false)?;
    Ok(d)
}

/// Distance from `z` to the continuum itself.
pub fn dist_to_continuum(spec: &ContinuumSpec, z: Complex64, m: usize) -> Result<f64> {
    match spec {
        ContinuumSpec::Segment { a, b } => {
            let x = z.re.clamp(*a, *b);
            Ok((z - Complex64::new(x, 0.0)).norm())
        }
        ContinuumSpec::Disc { center, radius } => Ok(((z - center).norm() - radius).max(0.0)),
        ContinuumSpec::Custom(_) => {
            if spec.contains(z) {
                return Ok(0.0);
            }
            let rho = spec.boundary_radius();
            let (_, d) =
                refine_on_circle(|t| Ok((z - spec.curve_point(rho, t)?).norm()), m, false)?;
            Ok(d)
        }
    }
}

/// `dist(∂Ω_inner, ∂Ω_outer)` for `1 < inner < outer`.
pub fn level_gap(spec: &ContinuumSpec, inner: f64, outer: f64, m: usize) -> Result<f64> {
    check_level(inner)?;
    if !(outer > inner) {
        return Err(Error::Domain(format!("outer level {outer} must exceed {inner}")));
    }
    let (_, d) = refine_on_circle(
        |t| dist_to_level(spec, spec.curve_point(outer, t)?, inner, m),
        m,
        false,
    )?;
    Ok(d)
}

/// `dist(K, ∂Ω_r)`.
pub fn continuum_gap(spec: &ContinuumSpec, r: f64, m: usize) -> Result<f64> {
    check_level(r)?;
    let (_, d) =
        refine_on_circle(|t| dist_to_continuum(spec, spec.curve_point(r, t)?, m), m, false)?;
    Ok(d)
}

/// Where a sup norm is taken.
#[derive(Clone, Copy, Debug)]
pub enum SupDomain<'a> {
    /// The continuum itself, traced through `∂K`.
    Continuum(&'a ContinuumSpec),
    /// A level curve `∂Ω_R` (enough for `closure(Ω_R)` by the maximum principle).
    Level(&'a LevelSet),
}

impl SupDomain<'_> {
    fn curve(&self) -> (&ContinuumSpec, f64) {
        match self {
            SupDomain::Continuum(spec) => (spec, spec.boundary_radius()),
            SupDomain::Level(ls) => (&ls.spec, ls.level),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupNorm {
    pub value: f64,
    pub samples: usize,
    /// Where the maximum was found.
    pub argmax: Complex64,
}

/// Sup of `|g|` over a domain for an arbitrary evaluator.
pub fn sup_of(
    g: impl Fn(Complex64) -> Complex64,
    domain: SupDomain<'_>,
    m: usize,
) -> Result<SupNorm> {
    let (spec, rho) = domain.curve();
    let (theta, value) = refine_on_circle(|t| Ok(g(spec.curve_point(rho, t)?).norm()), m, true)?;
    Ok(SupNorm {
        value,
        samples: m,
        argmax: spec.curve_point(rho, theta)?,
    })
}

/// Sup norm of the polynomial `Σ p_k z^k` over `K` or a level curve.
pub fn sup_norm(p: &[Complex64], domain: SupDomain<'_>, m: usize) -> Result<SupNorm> {
    sup_of(|z| to_c64(crate::dd::horner(p, cdd(z))), domain, m)
}
