#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::TAU;

use bohr_faber::bohr::{bohr_sum, phi_of_r, segment_bohr_radius_in};
use bohr_faber::condensator::{arc_length, eccentricity};
use bohr_faber::estimates::{
    en_bound, fk_bound, fn_bounds, ineq11_check, schwarz_bound, EstimateContext,
};
use bohr_faber::faber::{faber_polys, FaberSeries};
use bohr_faber::series::{laurent_mul, laurent_pow, split_parts};
use bohr_faber::{ContinuumSpec, GradedLaurent};
use num_complex::Complex64;
use proptest::prelude::*;

fn catalog(i: usize) -> ContinuumSpec {
    match i % 5 {
        0 => ContinuumSpec::unit_segment(),
        1 => ContinuumSpec::segment(0.0, 3.0).unwrap(),
        2 => ContinuumSpec::unit_disc(),
        3 => ContinuumSpec::disc(Complex64::new(0.5, -0.25), 1.5).unwrap(),
        _ => ContinuumSpec::unit_segment().level_continuum(2.0, 96).unwrap(),
    }
}

fn in_k(i: usize, theta: f64, t: f64) -> Complex64 {
    match i % 5 {
        0 => Complex64::new(theta.cos(), 0.0),
        1 => Complex64::new(1.5 + 1.5 * theta.cos(), 0.0),
        2 => Complex64::from_polar(t, theta),
        3 => Complex64::new(0.5, -0.25) + Complex64::from_polar(1.5 * t, theta),
        _ => outside(&ContinuumSpec::unit_segment(), 1.0 + t, theta),
    }
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn series(top: usize, depth: usize) -> impl Strategy<Value = GradedLaurent> {
    prop::collection::vec(complex(), top + depth + 1)
        .prop_map(move |c| GradedLaurent::new(top, depth, c))
}

fn outside(spec: &ContinuumSpec, rho: f64, theta: f64) -> Complex64 {
    spec.psi(Complex64::from_polar(rho, theta)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn faber_leading_coefficient_is_gamma_power(i in 0usize..5, n in 0usize..=20) {
        let spec = catalog(i);
        let p = &faber_polys(&spec, n)[n];
        let want = spec.gamma().powi(n as i32);
        prop_assert!((p.leading() - want).norm() <= 1e-12 * want);

        let map = spec.exterior_map(48).to_graded();
        let (poly, _) = split_parts(&laurent_pow(&map, n, 48));
        prop_assert!((poly[n] - want).norm() <= 1e-12 * want);
    }

    #[test]
    fn laurent_product_commutes_and_associates(
        a in series(2, 6), b in series(1, 6), c in series(3, 6)
    ) {
        let depth = 6;
        let ab = laurent_mul(&a, &b, depth);
        let ba = laurent_mul(&b, &a, depth);
        let left = laurent_mul(&ab, &c, depth);
        let right = laurent_mul(&a, &laurent_mul(&b, &c, depth), depth);
        for k in -(depth as i64)..=6 {
            prop_assert!((ab.coeff(k) - ba.coeff(k)).norm() < 1e-12);
        }
        // Dropped tail terms of an intermediate product reach exponents up
        // to the top degree of the remaining factor.
        for k in -(depth as i64) + 3..=6 {
            prop_assert!((left.coeff(k) - right.coeff(k)).norm() < 1e-10);
        }
    }

    #[test]
    fn deeper_truncation_keeps_shallow_coefficients(
        a in series(2, 12), b in series(2, 12), shallow in 1usize..8
    ) {
        let coarse = laurent_mul(&a, &b, shallow);
        let fine = laurent_mul(&a, &b, 12);
        for k in -(shallow as i64)..=4 {
            prop_assert!((coarse.coeff(k) - fine.coeff(k)).norm() < 1e-12);
        }
    }

    #[test]
    fn phi_inverts_psi(i in 0usize..5, rho in 1.05..6.0f64, theta in 0.0..TAU) {
        let spec = catalog(i);
        let w = Complex64::from_polar(rho, theta);
        let back = spec.phi(spec.psi(w).unwrap()).unwrap();
        prop_assert!((back - w).norm() < 1e-9, "{} {w} -> {back}", spec.label());
    }

    #[test]
    fn green_increases_along_rays(i in 0usize..4, theta in 0.0..TAU) {
        let spec = catalog(i);
        let mut last = 0.0;
        for k in 1..40 {
            let g = spec.green(outside(&spec, 1.0 + 0.1 * k as f64, theta)).unwrap();
            prop_assert!(g > last);
            last = g;
        }
    }

    #[test]
    fn disc_arc_length_is_circumference(r in 1.01..8.0f64) {
        let l = arc_length(&ContinuumSpec::unit_disc(), r, 1024).unwrap();
        prop_assert!((l - TAU * r).abs() <= 1e-9 * TAU * r);
    }

    #[test]
    fn segment_faber_has_parity(n in 0usize..=30) {
        let p = &faber_polys(&ContinuumSpec::unit_segment(), n)[n];
        for (k, c) in p.coeffs.iter().enumerate() {
            if (n + k) % 2 == 1 {
                prop_assert!(c.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn scaling_to_a_level_continuum(
        level in 1.5..5.0f64, n in 0usize..=12, rho in 1.0..3.0f64, theta in 0.0..TAU
    ) {
        let spec = ContinuumSpec::unit_segment();
        let scaled = spec.level_continuum(level, 96).unwrap();
        let p = &faber_polys(&spec, n)[n];
        let q = &faber_polys(&scaled, n)[n];
        let z = outside(&spec, rho, theta);
        let want = p.eval(z) * level.powi(-(n as i32));
        prop_assert!((q.eval(z) - want).norm() <= 1e-8 * want.norm().max(1e-300));
    }

    #[test]
    fn bohr_sum_is_homogeneous(
        coeffs in prop::collection::vec(complex(), 1..10), lambda in complex(), level in 1.5..6.0f64
    ) {
        let f = FaberSeries::new(ContinuumSpec::unit_segment(), level, coeffs);
        let base = bohr_sum(&f).unwrap().sum;
        let scaled = bohr_sum(&f.scaled(lambda)).unwrap().sum;
        prop_assert!((scaled - lambda.norm() * base).abs() <= 1e-12 * (1.0 + scaled.abs()));
    }

    #[test]
    fn schwarz_bound_is_monotone(t1 in 0.01..1.0f64, dt in 0.0..0.5f64, f1 in 0.0..1.0f64, df in 0.0..0.5f64) {
        let t2 = (t1 + dt).min(1.0);
        let f2 = (f1 + df).min(1.0);
        let b = schwarz_bound(t1, 1.0, f1).unwrap();
        prop_assert!(schwarz_bound(t2, 1.0, f1).unwrap() >= b - 1e-15);
        prop_assert!(schwarz_bound(t1, 1.0, f2).unwrap() >= b - 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn estimates_respect_normalized_bounds(
        i in 0usize..5, n in 0usize..=20, theta in 0.0..TAU, t in 0.0..1.0f64
    ) {
        let spec = catalog(i);
        let ctx = EstimateContext::new(&spec, 1.5, 2.5, 0.3, 20).unwrap();

        let far = outside(&spec, 1.8 + 2.0 * t, theta);
        let e = en_bound(&ctx, n, far).unwrap();
        prop_assert!(e.actual <= e.normalized * (1.0 + 1e-9));
        prop_assert!(e.normalized <= e.literal);

        let on_level = outside(&spec, 2.5, theta);
        let l = fn_bounds(&ctx, n, on_level).unwrap();
        prop_assert!(l.actual <= l.upper_normalized * (1.0 + 1e-9));
        if let Some(lower) = l.lower_normalized {
            prop_assert!(l.actual >= lower * (1.0 - 1e-9));
        }

        let k = fk_bound(&ctx, n, in_k(i, theta, t)).unwrap();
        prop_assert!(k.actual <= k.normalized * (1.0 + 1e-9));
    }

    #[test]
    fn witness_chain_holds(n in 1usize..=16, theta_a in 0.0..TAU, level in 2.5..6.0f64) {
        let spec = ContinuumSpec::unit_segment();
        let ctx = EstimateContext::new(&spec, 1.0 + 0.5 * (level - 1.0), level, theta_a, 16).unwrap();
        let w = ineq11_check(&ctx, n).unwrap();
        prop_assert!(w.witness >= w.chain - 1e-7 * level.powi(n as i32));
        prop_assert!(w.sup >= w.witness);
    }
}

#[test]
fn phi_and_eccentricity_decrease() {
    let grid: Vec<f64> = (0..100).map(|k| 1.05 + (50.0 - 1.05) * k as f64 / 99.0).collect();
    for pair in grid.windows(2) {
        assert!(phi_of_r(pair[1]).unwrap() < phi_of_r(pair[0]).unwrap());
    }
    let grid: Vec<f64> = (0..100).map(|k| 1.01 + 0.5 * k as f64).collect();
    for pair in grid.windows(2) {
        assert!(eccentricity(pair[1]).unwrap() < eccentricity(pair[0]).unwrap());
    }
}

#[test]
fn radius_does_not_depend_on_bracket() {
    let tol = 1e-8;
    let wide = segment_bohr_radius_in(1.01, 64.0, tol).unwrap();
    let narrow = segment_bohr_radius_in(2.0, 16.0, tol).unwrap();
    assert!((wide.radius - narrow.radius).abs() <= tol);
}

#[test]
fn positive_powers_are_pure() {
    // F_n(Ψ(w)) = wⁿ + (negative powers) on |w| = 2.
    let m = 256;
    for spec in (0..5).map(catalog) {
        let polys = faber_polys(&spec, 16);
        for (n, p) in polys.iter().enumerate() {
            let vals: Vec<Complex64> = (0..m)
                .map(|j| p.eval(outside(&spec, 2.0, TAU * j as f64 / m as f64)))
                .collect();
            for k in 1..=16 {
                let ck: Complex64 = vals
                    .iter()
                    .enumerate()
                    .map(|(j, v)| v * Complex64::from_polar(1.0, -TAU * (j * k) as f64 / m as f64))
                    .sum::<Complex64>()
                    / (m as f64 * 2f64.powi(k as i32));
                let want = if k == n { 1.0 } else { 0.0 };
                assert!((ck - want).norm() < 1e-8, "{} n={n} k={k}: {ck}", spec.label());
            }
        }
    }
}
