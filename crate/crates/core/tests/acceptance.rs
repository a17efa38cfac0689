#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Acceptance checks, one per criterion. Run with
//! `cargo test -p bohr-faber --test acceptance -- --nocapture` to see the
//! pass/fail lines.

use std::f64::consts::TAU;
use std::process::Command;
use std::time::Instant;

use bohr_faber::bohr::{
    bohr_verify, coeff_bound_check, gen_bounded, phi_of_r, segment_bohr_radius, BoundMode,
    BoundedFamily, FamilyKind,
};
use bohr_faber::condensator::{arc_length, dist_to_level};
use bohr_faber::dd::{cabs, cdd, to_c64};
use bohr_faber::estimates::{thm31_grid_search, EstimateContext, GRID_POINTS};
use bohr_faber::faber::{
    faber_polys, norm_root, phi_pow_dd, target_identity_residual, ContourRule, FaberSeries,
    DEFAULT_CONTOUR_SAMPLES,
};
use bohr_faber::ContinuumSpec;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(name: &str, x: f64, lo: f64, hi: f64) -> Result<(), String> {
    if (lo..=hi).contains(&x) {
        Ok(())
    } else {
        Err(format!("{name} = {x} outside [{lo}, {hi}]"))
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let r = segment_bohr_radius(1e-6).map_err(err)?;
    let elapsed = start.elapsed().as_secs_f64();
    within("R0", r.radius, 5.1279, 5.1289)?;
    within("eccentricity", r.eccentricity, 0.37560, 0.37580)?;
    if elapsed >= 1.0 {
        return Err(format!("took {elapsed:.3} s"));
    }
    Ok(format!("R0 = {:.6}, eccentricity = {:.6}, {:.1} ms", r.radius, r.eccentricity, elapsed * 1e3))
}

/// `Σ ‖F_n‖ · 2/(Rⁿ - R⁻ⁿ)` with the segment norms measured by sampling
/// `2 cos(nθ)`, summed far past double-precision convergence.
fn phi_oracle(level: f64) -> f64 {
    (1..2000)
        .map(|n| {
            let norm = (0..=720)
                .map(|k| (2.0 * (n as f64 * k as f64 * std::f64::consts::PI / 720.0).cos()).abs())
                .fold(0.0, f64::max);
            let rn = level.powi(n);
            norm * 2.0 / (rn - 1.0 / rn)
        })
        .sum()
}

fn criterion_2() -> Check {
    let mut detail = Vec::new();
    for (level, lo, hi) in [(5.0, 1.030, 1.037), (5.2, 0.979, 0.985), (10.0, 0.4483, 0.4487)] {
        let value = phi_of_r(level).map_err(err)?;
        let oracle = phi_oracle(level);
        within(&format!("φ({level})"), value, lo, hi)?;
        if (value - oracle).abs() > 1e-12 * oracle {
            return Err(format!("φ({level}) = {value} but direct summation gives {oracle}"));
        }
        detail.push(format!("φ({level}) = {value:.5}"));
    }
    let (lo, hi) = (1.05f64, 50.0f64);
    let grid: Vec<f64> = (1..=100).map(|k| lo + (hi - lo) * k as f64 / 101.0).collect();
    let values: Vec<f64> = grid.iter().map(|&r| phi_of_r(r)).collect::<Result<_, _>>().map_err(err)?;
    if let Some(k) = values.windows(2).position(|w| !(w[1] < w[0])) {
        return Err(format!("φ not decreasing between {} and {}", grid[k], grid[k + 1]));
    }
    Ok(detail.join(", ") + ", strictly decreasing on 100 points")
}

fn criterion_3() -> Check {
    let spec = ContinuumSpec::unit_segment();
    let polys = faber_polys(&spec, 24);
    if polys[0].coeffs != vec![c(1.0, 0.0)] {
        return Err(format!("F_0 = {:?}", polys[0].coeffs));
    }
    let mut worst: f64 = 0.0;
    for k in 0..1000 {
        let x = -1.0 + 2.0 * k as f64 / 999.0;
        let (mut t0, mut t1) = (1.0, x);
        for (n, p) in polys.iter().enumerate().skip(1) {
            if n > 1 {
                (t0, t1) = (t1, 2.0 * x * t1 - t0);
            }
            worst = worst.max((p.eval(c(x, 0.0)) - c(2.0 * t1, 0.0)).norm());
        }
    }
    if worst < 1e-9 {
        Ok(format!("max |F_n - 2T_n| = {worst:.2e} for n ≤ 24, F_0 = 1"))
    } else {
        Err(format!("max |F_n - 2T_n| = {worst:e}"))
    }
}

fn criterion_4() -> Check {
    let spec = ContinuumSpec::unit_segment();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let w = Complex64::from_polar(rng.random_range(1.1..4.0), rng.random_range(0.0..TAU));
        for n in 1..=16 {
            worst = worst.max(target_identity_residual(&spec, n, w).map_err(err)?);
        }
    }
    if worst < 1e-8 {
        Ok(format!("max residual {worst:.2e} over 100 points, n ≤ 16"))
    } else {
        Err(format!("max residual {worst:e}"))
    }
}

struct Catalog {
    name: &'static str,
    spec: ContinuumSpec,
    /// A point of `K` from two uniform parameters.
    inside: Box<dyn Fn(f64, f64) -> Complex64>,
}

fn catalog() -> Vec<Catalog> {
    let seg = ContinuumSpec::unit_segment();
    let level2 = seg.level_continuum(2.0, 96).expect("level continuum");
    let center = c(0.5, -0.25);
    vec![
        Catalog {
            name: "[-1,1]",
            spec: ContinuumSpec::unit_segment(),
            inside: Box::new(|s, _| c(-1.0 + 2.0 * s, 0.0)),
        },
        Catalog {
            name: "[0,3]",
            spec: ContinuumSpec::segment(0.0, 3.0).unwrap(),
            inside: Box::new(|s, _| c(3.0 * s, 0.0)),
        },
        Catalog {
            name: "unit disc",
            spec: ContinuumSpec::unit_disc(),
            inside: Box::new(|s, t| Complex64::from_polar(0.99 * s.sqrt(), TAU * t)),
        },
        Catalog {
            name: "disc(0.5-0.25i, 1.5)",
            spec: ContinuumSpec::disc(center, 1.5).unwrap(),
            inside: Box::new(move |s, t| center + Complex64::from_polar(1.49 * s.sqrt(), TAU * t)),
        },
        Catalog {
            name: "closure of segment Ω_2",
            spec: level2,
            inside: Box::new(move |s, t| {
                ContinuumSpec::unit_segment()
                    .psi(Complex64::from_polar(1.0 + 0.95 * s, TAU * t))
                    .unwrap()
            }),
        },
    ]
}

fn criterion_5() -> Check {
    let n_max = 24;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst_poly: f64 = 0.0;
    let mut worst_r: f64 = 0.0;
    for entry in catalog() {
        let polys = faber_polys(&entry.spec, n_max);
        let rules: Vec<ContourRule> = [1.5, 2.0, 3.0]
            .iter()
            .map(|&r| ContourRule::new(&entry.spec, r, DEFAULT_CONTOUR_SAMPLES))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for i in 0..50 {
            let z = if i % 5 == 0 {
                (entry.inside)(rng.random(), rng.random())
            } else {
                let w = Complex64::from_polar(rng.random_range(1.0..1.4), rng.random_range(0.0..TAU));
                entry.spec.psi(w).map_err(err)?
            };
            let by_rule: Vec<_> = rules
                .iter()
                .map(|rule| rule.faber_all(z, n_max))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            for (n, p) in polys.iter().enumerate() {
                let direct = p.eval_dd(cdd(z));
                let d = cabs(direct - by_rule[0][n]);
                if !(d < 1e-7) {
                    return Err(format!("{}: n = {n}, z = {z}: |Δ| = {d:e}", entry.name));
                }
                worst_poly = worst_poly.max(d);
                for other in &by_rule[1..] {
                    let d = cabs(other[n] - by_rule[0][n]);
                    if !(d < 1e-8) {
                        return Err(format!("{}: n = {n}, z = {z}: r-dependence {d:e}", entry.name));
                    }
                    worst_r = worst_r.max(d);
                }
            }
        }
    }
    Ok(format!("5 continua: max |Δ| = {worst_poly:.2e}, max r-variation = {worst_r:.2e}"))
}

fn criterion_6() -> Check {
    let r = 1.5;
    let n_max = 16;
    let m = DEFAULT_CONTOUR_SAMPLES;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst_identity: f64 = 0.0;
    let mut worst_ratio: f64 = 0.0;
    let specs = [
        ContinuumSpec::unit_segment(),
        ContinuumSpec::segment(0.0, 3.0).unwrap(),
        ContinuumSpec::disc(c(0.5, -0.25), 1.5).unwrap(),
    ];
    for spec in &specs {
        let polys = faber_polys(spec, n_max);
        let rule = ContourRule::new(spec, r, m).map_err(err)?;
        let lg = arc_length(spec, r, m).map_err(err)?;
        for _ in 0..20 {
            let w = Complex64::from_polar(rng.random_range(1.7..4.0), rng.random_range(0.0..TAU));
            let z = spec.psi(w).map_err(err)?;
            let rem = rule.remainder_all(z, n_max).map_err(err)?;
            let dist = dist_to_level(spec, z, r, m).map_err(err)?;
            for (n, p) in polys.iter().enumerate() {
                let phin = phi_pow_dd(spec, z, n).map_err(err)?;
                let d = cabs(phin - p.eval_dd(cdd(z)) - rem[n]);
                if !(d < 1e-7) {
                    return Err(format!("{}: n = {n}, z = {z}: identity off by {d:e}", spec.label()));
                }
                worst_identity = worst_identity.max(d);
                let bound = r.powi(n as i32) * lg / (TAU * dist);
                let e = to_c64(rem[n]).norm();
                if !(e <= bound) {
                    return Err(format!("{}: n = {n}, z = {z}: |E_n| = {e} > {bound}", spec.label()));
                }
                worst_ratio = worst_ratio.max(e / bound);
            }
        }
    }
    Ok(format!(
        "identity within {worst_identity:.2e}, max |E_n|/bound = {worst_ratio:.3}"
    ))
}

fn criterion_7() -> Check {
    let spec = ContinuumSpec::unit_segment();
    let mut checked = 0;
    let mut worst = f64::INFINITY;
    for (i, (kind, level)) in [
        (FamilyKind::ScaledPolynomial, 2.0),
        (FamilyKind::MoebiusComposite, 2.0),
        (FamilyKind::RandomFaberSeries, 3.0),
        (FamilyKind::ScaledPolynomial, 5.2),
        (FamilyKind::MoebiusComposite, 5.2),
    ]
    .into_iter()
    .enumerate()
    {
        let family = BoundedFamily::new(kind, 70 + i as u64, 40);
        for f in gen_bounded(&spec, level, &family).map_err(err)? {
            let bohr_margins = coeff_bound_check(&f, level, BoundMode::Bohr).map_err(err)?;
            let mut shifted = f.coeffs.clone();
            shifted[0] += 1.0;
            let g = FaberSeries::new(spec.clone(), level, shifted);
            let cara_margins = coeff_bound_check(&g, level, BoundMode::Caratheodory).map_err(err)?;
            for m in bohr_margins.iter().chain(&cara_margins) {
                if !(*m >= -1e-9) {
                    return Err(format!("{kind:?} at R = {level}: margin {m:e}"));
                }
                worst = worst.min(*m);
            }
            checked += 1;
        }
    }
    if checked != 200 {
        return Err(format!("only {checked} functions generated"));
    }
    Ok(format!("{checked} functions, smallest margin {worst:.3e}"))
}

fn criterion_8() -> Check {
    let disc = ContinuumSpec::unit_disc();
    let family = BoundedFamily::new(FamilyKind::MoebiusComposite, 8, 200);
    let at3 = bohr_verify(&disc, 3.0, &family).map_err(err)?;
    if !at3.violations.is_empty() {
        return Err(format!("{} violations at R = 3", at3.violations.len()));
    }
    let at25 = bohr_verify(&disc, 2.5, &family).map_err(err)?;
    if at25.violations.is_empty() {
        return Err("no violation at R = 2.5".into());
    }
    Ok(format!(
        "R = 3: max sum {:.4}; R = 2.5: {} violations, max sum {:.4}",
        at3.max_sum.unwrap_or(0.0),
        at25.violations.len(),
        at25.max_sum.unwrap_or(0.0)
    ))
}

fn criterion_9() -> Check {
    let spec = ContinuumSpec::unit_segment();
    let base = faber_polys(&spec, 12);
    let mut worst: f64 = 0.0;
    for level in [2.0, 4.0] {
        let scaled = spec.level_continuum(level, 96).map_err(err)?;
        for (p, q) in base.iter().zip(faber_polys(&scaled, 12)) {
            let s = level.powi(-(p.n as i32));
            let scale = p.coeffs.iter().map(|a| a.norm() * s).fold(0.0, f64::max);
            for (a, b) in p.coeffs.iter().zip(&q.coeffs) {
                let rel = (a * s - b).norm() / scale;
                if !(rel < 1e-8) {
                    return Err(format!("R = {level}, n = {}: relative error {rel:e}", p.n));
                }
                worst = worst.max(rel);
            }
        }
    }
    Ok(format!("max relative error {worst:.2e} for R ∈ {{2, 4}}, n ≤ 12"))
}

fn criterion_10() -> Check {
    let spec = ContinuumSpec::unit_segment();
    let root = norm_root(&spec, &[c(2.0, 0.0)], 40).map_err(err)?;
    let target = 2.0 + 3f64.sqrt();
    let rel = (root - target).abs() / target;
    if rel < 0.05 {
        Ok(format!("‖F_40‖^(1/40) = {root:.6}, Φ(2) = {target:.6}, rel {rel:.2e}"))
    } else {
        Err(format!("relative gap {rel}"))
    }
}

fn criterion_11() -> Check {
    let spec = ContinuumSpec::unit_segment();
    let grid = thm31_grid_search(&spec, 0.25, 0.0, 32, GRID_POINTS).map_err(err)?;
    let report = &grid.report;
    if !grid.r_star.is_finite() {
        return Err("non-finite R*".into());
    }
    if report.n_max != 32 || report.rows.iter().any(|row| !(row.margin > 0.0)) {
        return Err("a margin is not positive".into());
    }
    if !report.tail.holds || !report.all_hold {
        return Err("tail check failed".into());
    }
    let ctx = EstimateContext::new(&spec, report.r, report.level, 0.0, 32).map_err(err)?;
    let mut worst: f64 = 0.0;
    for n in 1..=32 {
        worst = worst.max(ctx.theta_identity_residual(n).map_err(err)?);
    }
    if !(worst < 1e-9) {
        return Err(format!("θ identity residual {worst:e}"));
    }
    Ok(format!(
        "R* = {:.4} (grid index {}), {} positive margins, θ residual {worst:.2e}",
        grid.r_star,
        grid.grid_index,
        report.rows.len()
    ))
}

fn criterion_12() -> Check {
    let args = ["verify", "--seed", "7", "--count", "100", "--output", "json"];
    let bin = env!("CARGO_BIN_EXE_bohr-faber");
    let runs: Vec<Vec<u8>> = (0..2)
        .map(|_| Command::new(bin).args(args).output().map(|o| o.stdout))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    if runs[0].is_empty() || runs[0] != runs[1] {
        return Err("binary runs differ".into());
    }
    let in_process = bohr_faber::cli::run(std::iter::once("bohr-faber").chain(args));
    if in_process.stdout.as_bytes() != runs[0].as_slice() {
        return Err("in-process run differs from the binary".into());
    }
    Ok(format!("{} identical bytes", runs[0].len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("segment Bohr radius", criterion_1),
        ("φ evaluation", criterion_2),
        ("Chebyshev identity", criterion_3),
        ("target-coordinate identity", criterion_4),
        ("contour equivalence", criterion_5),
        ("remainder identity and bound", criterion_6),
        ("coefficient bounds", criterion_7),
        ("classical disc radius", criterion_8),
        ("scaling relation", criterion_9),
        ("norm-root limit", criterion_10),
        ("sufficient-condition grid", criterion_11),
        ("determinism", criterion_12),
    ];
    let mut failed = Vec::new();
    println!();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2} s]", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why} [{secs:.2} s]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
