//! Bounds on Faber polynomials and remainders over a Green condensator, and
//! the sufficient conditions for the Bohr property built from them.
//!
//! Bounds come in two flavours: `literal` uses `rⁿ lg(∂Ω_r) / dist`, and
//! `normalized` divides by `2π`, matching the Cauchy normalization of the
//! integral formulas. Only the normalized forms are sharp enough to assert.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::condensator::{
    arc_length, continuum_gap, dist_to_level, level_gap, sup_of, ContinuumSpec, SupDomain,
    DEFAULT_SAMPLES,
};
use crate::dd::{cabs, cdd, to_c64};
use crate::error::{Error, Result};
use crate::faber::{faber_polys, ContourRule, FaberPoly, DEFAULT_CONTOUR_SAMPLES};

/// Contraction constant of the sufficient conditions.
pub const DEFAULT_C: f64 = 1.0 / 6.0;
/// Default collar `ε₀`; the inner level is `1 + ε₀`.
pub const DEFAULT_EPS0: f64 = 0.25;
/// Highest index checked explicitly.
pub const DEFAULT_N_MAX: usize = 32;
/// Upper end of the grid searched for a threshold level.
pub const GRID_MAX: f64 = 256.0;
/// Points of the geometric grid.
pub const GRID_POINTS: usize = 96;

/// Everything the bounds need about `(K, r, R, a)`.
#[derive(Clone, Debug)]
pub struct EstimateContext {
    pub spec: ContinuumSpec,
    /// Inner level `r = 1 + ε₀`.
    pub r: f64,
    /// Outer level `R`.
    pub level: f64,
    /// `lg(∂Ω_r)`
    pub lg_r: f64,
    /// Reference point on `∂Ω_R`.
    pub a: Complex64,
    /// Argument of `Φ(a)`.
    pub theta_a: f64,
    pub c: f64,
    pub m: usize,
    pub polys: Vec<FaberPoly>,
    rule: ContourRule,
}

impl EstimateContext {
    pub fn new(
        spec: &ContinuumSpec,
        r: f64,
        level: f64,
        theta_a: f64,
        n_max: usize,
    ) -> Result<EstimateContext> {
        if !(r > 1.0 && level > r) {
            return Err(Error::Domain(format!("need 1 < r < R, got r = {r}, R = {level}")));
        }
        let m = DEFAULT_SAMPLES;
        Ok(EstimateContext {
            spec: spec.clone(),
            r,
            level,
            lg_r: arc_length(spec, r, m)?,
            a: spec.psi(Complex64::from_polar(level, theta_a))?,
            theta_a,
            c: DEFAULT_C,
            m,
            polys: faber_polys(spec, n_max + 1),
            rule: ContourRule::new(spec, r, DEFAULT_CONTOUR_SAMPLES)?,
        })
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    fn poly(&self, n: usize) -> Result<&FaberPoly> {
        self.polys
            .get(n)
            .ok_or_else(|| Error::Domain(format!("index {n} exceeds the context's {}", self.n_max())))
    }

    /// `a_n ∈ ∂Ω_R` with `Φ(a_n) = e^{iπ/n} Φ(a)`, so that `Φ(a_n)ⁿ = -Φ(a)ⁿ`.
    pub fn theta_point(&self, n: usize) -> Result<Complex64> {
        if n == 0 {
            return Err(Error::Domain("θ-points are defined for n >= 1".into()));
        }
        self.spec
            .psi(Complex64::from_polar(self.level, self.theta_a + PI / n as f64))
    }

    /// `|Φ(a_n)ⁿ + Φ(a)ⁿ| / Rⁿ`, computed in double-double.
    pub fn theta_identity_residual(&self, n: usize) -> Result<f64> {
        let an = self.theta_point(n)?;
        let lhs = self.spec.phi_dd(cdd(an))?.powu(n as u32);
        let rhs = self.spec.phi_dd(cdd(self.a))?.powu(n as u32);
        Ok(cabs(lhs + rhs) / self.level.powi(n as i32))
    }

    fn remainder(&self, z: Complex64, n: usize) -> Result<Complex64> {
        Ok(to_c64(self.rule.remainder_all(z, n)?[n]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RemainderBound {
    pub literal: f64,
    pub normalized: f64,
    pub actual: f64,
}

/// `|E_n(z)| ≤ rⁿ lg(∂Ω_r) / (2π dist(z, ∂Ω_r))` for `z` outside `Ω̄_r`.
pub fn en_bound(ctx: &EstimateContext, n: usize, z: Complex64) -> Result<RemainderBound> {
    if ctx.spec.contains(z) || ctx.spec.level_of(z)? <= ctx.r {
        return Err(Error::PointInsideLevel { point: z, level: ctx.r });
    }
    let dist = dist_to_level(&ctx.spec, z, ctx.r, ctx.m)?;
    let literal = ctx.r.powi(n as i32) * ctx.lg_r / dist;
    Ok(RemainderBound {
        literal,
        normalized: literal / TAU,
        actual: ctx.remainder(z, n)?.norm(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LevelBounds {
    /// `(r/R)ⁿ lg / dist`
    pub q: f64,
    pub upper: f64,
    /// Present only when `q < 1`.
    pub lower: Option<f64>,
    pub upper_normalized: f64,
    pub lower_normalized: Option<f64>,
    pub actual: f64,
}

/// `Rⁿ(1 - q) ≤ |F_n(z)| ≤ Rⁿ(1 + q)` on `∂Ω_R`.
pub fn fn_bounds(ctx: &EstimateContext, n: usize, z: Complex64) -> Result<LevelBounds> {
    let modulus = ctx.spec.level_of(z)?;
    if (modulus - ctx.level).abs() > 1e-9 * ctx.level.max(1.0) {
        return Err(Error::NotOnLevel {
            point: z,
            level: ctx.level,
            modulus,
        });
    }
    let dist = dist_to_level(&ctx.spec, z, ctx.r, ctx.m)?;
    let rn = ctx.level.powi(n as i32);
    let q = (ctx.r / ctx.level).powi(n as i32) * ctx.lg_r / dist;
    let qn = q / TAU;
    Ok(LevelBounds {
        q,
        upper: rn * (1.0 + q),
        lower: (q < 1.0).then_some(rn * (1.0 - q)),
        upper_normalized: rn * (1.0 + qn),
        lower_normalized: (qn < 1.0).then_some(rn * (1.0 - qn)),
        actual: ctx.poly(n)?.eval(z).norm(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ContinuumBound {
    pub literal: f64,
    pub normalized: f64,
    pub actual: f64,
}

/// `|F_n(z)| ≤ rⁿ lg(∂Ω_r) / (2π dist(z, ∂Ω_r))` for `z ∈ K`.
pub fn fk_bound(ctx: &EstimateContext, n: usize, z: Complex64) -> Result<ContinuumBound> {
    if !ctx.spec.contains(z) {
        return Err(Error::PointOutsideK(z));
    }
    let dist = dist_to_level(&ctx.spec, z, ctx.r, ctx.m)?;
    let literal = ctx.r.powi(n as i32) * ctx.lg_r / dist;
    Ok(ContinuumBound {
        literal,
        normalized: literal / TAU,
        actual: ctx.poly(n)?.eval(z).norm(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Ineq11 {
    /// `|F_n(a_n) - F_n(a)|`
    pub witness: f64,
    /// Sampled `sup_{∂Ω_R} |F_n - F_n(a)|`, at least the witness.
    pub sup: f64,
    /// `1.5 Rⁿ`
    pub rhs: f64,
    /// `2Rⁿ - |E_n(a)| - |E_n(a_n)|`
    pub chain: f64,
    pub holds: bool,
}

fn shifted_sup(ctx: &EstimateContext, poly: &FaberPoly, fa: Complex64) -> Result<f64> {
    // Maximum principle: the sup over the closed level set is attained on ∂Ω_R.
    let (_, v) = crate::condensator::refine_on_circle(
        |t| Ok((poly.eval(ctx.spec.curve_point(ctx.level, t)?) - fa).norm()),
        ctx.m,
        true,
    )?;
    Ok(v)
}

/// `sup_{Ω̄_R} |F_n - F_n(a)| ≥ (3/2) Rⁿ`.
pub fn ineq11_check(ctx: &EstimateContext, n: usize) -> Result<Ineq11> {
    let poly = ctx.poly(n)?;
    let fa = poly.eval(ctx.a);
    let an = ctx.theta_point(n)?;
    let witness = (poly.eval(an) - fa).norm();
    let sup = shifted_sup(ctx, poly, fa)?.max(witness);
    let rn = ctx.level.powi(n as i32);
    let chain = 2.0 * rn - ctx.remainder(ctx.a, n)?.norm() - ctx.remainder(an, n)?.norm();
    Ok(Ineq11 {
        witness,
        sup,
        rhs: 1.5 * rn,
        chain,
        holds: sup >= 1.5 * rn,
    })
}

/// Hypotheses of the abstract Bohr lemma for a basis `φ_n` with shifts
/// `ε_n`: `sup|φ_n - ε_n| ≤ C ‖φ_n‖` and `|ε_n| ≤ (1 - C) ‖φ_n‖`.
pub fn lemma33_check(
    norms: &[f64],
    shift_norms: &[f64],
    eps: &[Complex64],
    c: f64,
) -> Result<bool> {
    if norms.len() != shift_norms.len() {
        return Err(Error::LengthMismatch(norms.len(), shift_norms.len()));
    }
    if norms.len() != eps.len() {
        return Err(Error::LengthMismatch(norms.len(), eps.len()));
    }
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::Domain(format!("C = {c} must lie in (0, 1)")));
    }
    const SLACK: f64 = 1e-12;
    Ok(norms
        .iter()
        .zip(shift_norms)
        .zip(eps)
        .all(|((nrm, shift), e)| *shift <= c * nrm + SLACK && e.norm() <= (1.0 - c) * nrm + SLACK))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// `sup_K |F_n| ≤ C S_n`
    #[serde(rename = "9'")]
    Nine,
    /// `|F_n(a)| ≤ (1 - C) S_n`
    #[serde(rename = "10'")]
    Ten,
    /// `S_n ≥ (3/2) Rⁿ`
    #[serde(rename = "11")]
    Eleven,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::Nine => "9'",
            Condition::Ten => "10'",
            Condition::Eleven => "11",
        }
    }
}

/// One row of a margin table; `margin > 0` means the condition holds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MarginRow {
    pub n: usize,
    pub condition: Condition,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

/// Bounds that settle every `n > N_max` at once.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TailCheck {
    pub n: usize,
    /// `(r/R)ⁿ lg / (2π dist(∂Ω_r, ∂Ω_R))`
    pub q: f64,
    /// `(r/R)ⁿ lg / (2π dist(K, ∂Ω_r))`
    pub k_ratio: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Thm31Report {
    #[serde(rename = "R")]
    pub level: f64,
    pub r: f64,
    pub c: f64,
    pub n_max: usize,
    pub rows: Vec<MarginRow>,
    pub tail: TailCheck,
    pub all_hold: bool,
    pub label: &'static str,
}

const REPORT_LABEL: &str = "numerical sufficient-condition check";

/// Norms `sup_K |F_n|` for `n = 0..=N`.
fn continuum_norms(spec: &ContinuumSpec, polys: &[FaberPoly], m: usize) -> Result<Vec<f64>> {
    polys
        .iter()
        .map(|p| sup_of(|z| p.eval(z), SupDomain::Continuum(spec), m).map(|s| s.value))
        .collect()
}

fn thm31_with_norms(ctx: &EstimateContext, k_norms: &[f64], n_max: usize) -> Result<Thm31Report> {
    let mut rows = Vec::with_capacity(3 * n_max);
    for n in 1..=n_max {
        let poly = ctx.poly(n)?;
        let fa = poly.eval(ctx.a);
        let witness = (poly.eval(ctx.theta_point(n)?) - fa).norm();
        let s = shifted_sup(ctx, poly, fa)?.max(witness);
        let rn = ctx.level.powi(n as i32);
        let nine = (k_norms[n], ctx.c * s);
        let ten = (fa.norm(), (1.0 - ctx.c) * s);
        rows.push(MarginRow { n, condition: Condition::Nine, lhs: nine.0, rhs: nine.1, margin: nine.1 - nine.0 });
        rows.push(MarginRow { n, condition: Condition::Ten, lhs: ten.0, rhs: ten.1, margin: ten.1 - ten.0 });
        rows.push(MarginRow { n, condition: Condition::Eleven, lhs: s, rhs: 1.5 * rn, margin: s - 1.5 * rn });
    }
    let tail = tail_check(ctx, n_max + 1)?;
    let all_hold = tail.holds && rows.iter().all(|r| r.margin > 0.0);
    Ok(Thm31Report {
        level: ctx.level,
        r: ctx.r,
        c: ctx.c,
        n_max,
        rows,
        tail,
        all_hold,
        label: REPORT_LABEL,
    })
}

/// For `n ≥ n0` the normalized bounds give `S_n ≥ 2Rⁿ(1 - q)`,
/// `|F_n(a)| ≤ Rⁿ(1 + q)` and `sup_K|F_n| ≤ Rⁿ k`, with `q` and `k`
/// decreasing in `n`; the three conditions then follow from
/// `2(1 - q) ≥ 3/2`, `1 + q ≤ 2(1 - C)(1 - q)` and `k ≤ 2C(1 - q)` at `n0`.
pub fn tail_check(ctx: &EstimateContext, n0: usize) -> Result<TailCheck> {
    let ratio = (ctx.r / ctx.level).powi(n0 as i32) * ctx.lg_r / TAU;
    let q = ratio / level_gap(&ctx.spec, ctx.r, ctx.level, ctx.m)?;
    let k_ratio = ratio / continuum_gap(&ctx.spec, ctx.r, ctx.m)?;
    let c = ctx.c;
    let holds = q < 1.0
        && 2.0 * (1.0 - q) >= 1.5
        && 1.0 + q <= 2.0 * (1.0 - c) * (1.0 - q)
        && k_ratio <= 2.0 * c * (1.0 - q);
    Ok(TailCheck { n: n0, q, k_ratio, holds })
}

/// Margins of the three conditions at level `R` with collar `ε₀`.
pub fn thm31_conditions(
    spec: &ContinuumSpec,
    level: f64,
    eps0: f64,
    theta_a: f64,
    n_max: usize,
) -> Result<Thm31Report> {
    if !(eps0 > 0.0) || !(level > 1.0 + eps0) {
        return Err(Error::Domain(format!("need ε₀ > 0 and R > 1 + ε₀, got ε₀ = {eps0}, R = {level}")));
    }
    let ctx = EstimateContext::new(spec, 1.0 + eps0, level, theta_a, n_max)?;
    let norms = continuum_norms(spec, &ctx.polys, ctx.m)?;
    thm31_with_norms(&ctx, &norms, n_max)
}

/// Geometric grid on `[1 + 2ε₀, 256]`.
pub fn level_grid(eps0: f64, points: usize) -> Vec<f64> {
    let lo: f64 = 1.0 + 2.0 * eps0;
    let ratio = (GRID_MAX / lo).powf(1.0 / (points - 1) as f64);
    (0..points).map(|i| if i + 1 == points { GRID_MAX } else { lo * ratio.powi(i as i32) }).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridResult {
    pub r_star: f64,
    pub grid_index: usize,
    pub report: Thm31Report,
}

/// Smallest grid level where every condition holds for `n ≤ N_max` and the
/// tail check passes.
pub fn thm31_grid_search(
    spec: &ContinuumSpec,
    eps0: f64,
    theta_a: f64,
    n_max: usize,
    points: usize,
) -> Result<GridResult> {
    if !(eps0 > 0.0) || points < 2 {
        return Err(Error::Domain("grid search needs ε₀ > 0 and at least 2 points".into()));
    }
    let grid = level_grid(eps0, points);
    let polys = faber_polys(spec, n_max + 1);
    let norms = continuum_norms(spec, &polys, DEFAULT_SAMPLES)?;
    for (grid_index, &level) in grid.iter().enumerate() {
        let ctx = EstimateContext::new(spec, 1.0 + eps0, level, theta_a, n_max)?;
        let report = thm31_with_norms(&ctx, &norms, n_max)?;
        if report.all_hold {
            return Ok(GridResult { r_star: level, grid_index, report });
        }
    }
    Err(Error::GridExhausted { lo: grid[0], hi: GRID_MAX })
}

/// `(ρ₁/ρ + f₀) / (1 + f₀ ρ₁/ρ)`.
pub fn schwarz_bound(rho1: f64, rho: f64, f0: f64) -> Result<f64> {
    if !(rho1 > 0.0 && rho1 <= rho) || !(0.0..=1.0).contains(&f0) {
        return Err(Error::Domain(format!(
            "need 0 < ρ₁ ≤ ρ and f₀ ∈ [0, 1], got ρ₁ = {rho1}, ρ = {rho}, f₀ = {f0}"
        )));
    }
    let t = rho1 / rho;
    Ok((t + f0) / (1.0 + f0 * t))
}

/// Margin table as CSV `n,condition,lhs,rhs,margin`.
pub fn margins_csv(rows: &[MarginRow]) -> String {
    use crate::output::fmt17;
    let mut out = String::from("n,condition,lhs,rhs,margin\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            r.condition.label(),
            fmt17(r.lhs),
            fmt17(r.rhs),
            fmt17(r.margin)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn seg_ctx(r: f64, level: f64) -> EstimateContext {
        EstimateContext::new(&ContinuumSpec::unit_segment(), r, level, 0.3, 12).unwrap()
    }

    #[test]
    fn remainder_bound_examples() {
        let ctx = seg_ctx(2.0, 6.0);
        let seg = ContinuumSpec::unit_segment();
        let z = seg.psi(c(5.0, 0.0)).unwrap();
        let b = en_bound(&ctx, 4, z).unwrap();
        assert!(b.actual <= b.normalized && b.normalized <= b.literal);
        let b0 = en_bound(&ctx, 0, z).unwrap();
        assert!(b0.actual < 1e-20);
        let b5 = en_bound(&ctx, 5, z).unwrap();
        let b6 = en_bound(&ctx, 6, z).unwrap();
        assert!((b6.literal / b5.literal - 2.0).abs() < 1e-12);
        assert!(matches!(en_bound(&ctx, 2, c(1.2, 0.0)), Err(Error::PointInsideLevel { .. })));
    }

    #[test]
    fn level_bounds_on_the_disc_are_exact() {
        let disc = ContinuumSpec::unit_disc();
        let ctx = EstimateContext::new(&disc, 1.5, 4.0, 0.0, 8).unwrap();
        let z = Complex64::from_polar(4.0, 1.0);
        for n in 1..=8 {
            let b = fn_bounds(&ctx, n, z).unwrap();
            assert!((b.actual - 4f64.powi(n as i32)).abs() < 1e-12 * b.actual);
            assert!(b.lower_normalized.unwrap() <= b.actual && b.actual <= b.upper_normalized);
        }
    }

    #[test]
    fn level_bounds_for_the_segment() {
        let ctx = seg_ctx(2.0, 6.0);
        let z = ContinuumSpec::unit_segment().psi(Complex64::from_polar(6.0, 0.9)).unwrap();
        let b = fn_bounds(&ctx, 3, z).unwrap();
        assert!(b.lower_normalized.unwrap() <= b.actual && b.actual <= b.upper_normalized);
        assert!(b.actual <= b.upper);
        assert!(matches!(fn_bounds(&ctx, 3, c(9.0, 0.0)), Err(Error::NotOnLevel { .. })));
    }

    #[test]
    fn lower_bound_absent_when_q_large() {
        let ctx = seg_ctx(1.25, 1.3);
        let z = ContinuumSpec::unit_segment().psi(Complex64::from_polar(1.3, 0.2)).unwrap();
        let b = fn_bounds(&ctx, 1, z).unwrap();
        assert!(b.q >= 1.0 && b.lower.is_none());
    }

    #[test]
    fn continuum_bound_examples() {
        let seg = ContinuumSpec::unit_segment();
        let ctx = EstimateContext::new(&seg, 1.5, 3.0, 0.0, 8).unwrap();
        let b = fk_bound(&ctx, 5, c(0.0, 0.0)).unwrap();
        assert!(b.actual < 1e-14 && b.actual <= b.normalized);
        let ctx = EstimateContext::new(&seg, 2.0, 3.0, 0.0, 8).unwrap();
        let b = fk_bound(&ctx, 3, c(1.0, 0.0)).unwrap();
        assert!((b.actual - 2.0).abs() < 1e-14 && b.actual <= b.normalized);
        let b = fk_bound(&ctx, 0, c(0.5, 0.0)).unwrap();
        assert!(b.actual <= b.normalized);
        assert!(matches!(fk_bound(&ctx, 1, c(2.0, 0.0)), Err(Error::PointOutsideK(_))));
    }

    #[test]
    fn ineq11_examples() {
        let r = ineq11_check(&seg_ctx(1.25, 8.0), 2).unwrap();
        assert!(r.holds && r.witness >= r.chain - 1e-7 * 64.0);
        let big = ineq11_check(&seg_ctx(1.25, 100.0), 1).unwrap();
        assert!(big.holds && (big.sup / 200.0 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn theta_identity() {
        let ctx = seg_ctx(1.25, 8.0);
        for n in 1..=12 {
            assert!(ctx.theta_identity_residual(n).unwrap() < 1e-12);
        }
    }

    #[test]
    fn lemma33_examples() {
        let norms = [1.0, 2.0, 4.0];
        let shifts = [0.1, 0.2, 0.3];
        let zero = [c(0.0, 0.0); 3];
        assert!(lemma33_check(&norms, &shifts, &zero, 1.0 / 6.0).unwrap());
        let eps = [c(0.2, 0.0), c(0.4, 0.0), c(0.8, 0.0)];
        assert!(!lemma33_check(&norms, &[0.0; 3], &eps, 0.9).unwrap());
        assert_eq!(lemma33_check(&norms, &shifts[..2], &zero, 0.5), Err(Error::LengthMismatch(3, 2)));
    }

    #[test]
    fn schwarz_examples() {
        assert!((schwarz_bound(1.0, 4.0, 0.0).unwrap() - 0.25).abs() < 1e-15);
        assert!((schwarz_bound(1.0, 4.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((schwarz_bound(2.0, 2.0, 0.3).unwrap() - 1.0).abs() < 1e-15);
        assert!(schwarz_bound(3.0, 2.0, 0.3).is_err());
        assert!(schwarz_bound(1.0, 2.0, 1.5).is_err());
    }

    #[test]
    fn grid_is_geometric() {
        let g = level_grid(0.25, 5);
        assert!((g[0] - 1.5).abs() < 1e-15 && g[4] == GRID_MAX);
        assert!((g[2] / g[1] - g[1] / g[0]).abs() < 1e-12);
    }

    #[test]
    fn conditions_fail_gracefully_near_the_collar() {
        let r = thm31_conditions(&ContinuumSpec::unit_segment(), 1.3, 0.25, 0.0, 4).unwrap();
        assert!(!r.all_hold);
        assert!(thm31_conditions(&ContinuumSpec::unit_segment(), 1.2, 0.25, 0.0, 4).is_err());
    }

    #[test]
    fn margin_csv_shape() {
        let r = thm31_conditions(&ContinuumSpec::unit_segment(), 8.0, 0.25, 0.0, 2).unwrap();
        let csv = margins_csv(&r.rows);
        assert!(csv.starts_with("n,condition,lhs,rhs,margin\n"));
        assert_eq!(csv.lines().count(), 1 + 6);
    }
}
