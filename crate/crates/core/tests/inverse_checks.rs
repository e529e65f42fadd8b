//! The inverse estimate over a battery of spaces and functions, the
//! telescoping equality cases, and the empirical rate-transfer rule,
//! including its logarithmic boundary.

use num_complex::Complex64;
use std::f64::consts::PI;
use trigapprox::inverse::{classify_rates, inverse_bound, inverse_bound_alpha};
use trigapprox::orlicz::{NormKind, OrliczEntry, OrliczFamily};
use trigapprox::smoothness::Multiplier;
use trigapprox::spectrum::{CoefficientRule, Spectrum};

#[test]
fn inverse_holds_over_a_mixed_battery() {
    let window = 24;
    let specs = vec![
        Spectrum::from_rule(&CoefficientRule::Geometric { ratio: 0.85 }, window).unwrap(),
        Spectrum::from_rule(&CoefficientRule::PowerDecay { s: 1.0 }, window).unwrap(),
        Spectrum::from_rule(
            &CoefficientRule::Lacunary {
                amplitudes: vec![1.0, 0.4, 0.16, 0.064],
            },
            window,
        )
        .unwrap(),
    ];
    let families = vec![
        OrliczFamily::lp(window, 1.0).unwrap(),
        OrliczFamily::lp(window, 2.0).unwrap(),
        OrliczFamily::from_entries(
            window,
            (-(window as i64)..=window as i64)
                .map(|k| {
                    OrliczEntry::power(1.0 + k.unsigned_abs() as f64 / window as f64, 1.0).unwrap()
                })
                .collect(),
        )
        .unwrap(),
    ];
    for alpha in [0.5, 1.0, 2.0] {
        let phi = Multiplier::classical(alpha).unwrap();
        for family in &families {
            for spec in &specs {
                for n in [1usize, 2, 4, 8] {
                    for kind in [NormKind::Luxemburg, NormKind::Orlicz] {
                        let rep = inverse_bound(family, spec, &phi, n, PI, kind, 256).unwrap();
                        assert!(
                            rep.pass,
                            "alpha = {alpha}, n = {n}, {kind:?}: lhs = {}, rhs = {}",
                            rep.modulus.value, rep.rhs
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn telescoping_equality_at_every_degree() {
    // Single frequency k0 with n = k0 turns the bound into an equality for
    // any order: both sides are phi(tau) * |c|.
    let window = 12;
    for alpha in [1.0, 2.0] {
        let phi = Multiplier::classical(alpha).unwrap();
        for k0 in [1i64, 4, 9] {
            let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * window + 1];
            coeffs[(k0 + window as i64) as usize] = Complex64::new(0.0, 1.7);
            let spec = Spectrum::from_coeffs(window, coeffs).unwrap();
            let family = OrliczFamily::lp(window, 2.0).unwrap();
            let rep = inverse_bound(
                &family,
                &spec,
                &phi,
                k0 as usize,
                PI,
                NormKind::Luxemburg,
                256,
            )
            .unwrap();
            let expected = 2.0f64.powf(alpha) * 1.7;
            assert!(
                (rep.rhs - expected).abs() < 1e-9,
                "alpha = {alpha}, k0 = {k0}: rhs = {}",
                rep.rhs
            );
            assert!(rep.slack.abs() <= 1e-9 * rep.rhs, "slack = {}", rep.slack);
        }
    }
}

#[test]
fn alpha_corollary_scales_as_stated() {
    // Delta at n: rhs = alpha (2 pi / n)^alpha * n^{alpha-1} * n-term sum.
    let window = 10;
    let family = OrliczFamily::lp(window, 2.0).unwrap();
    for (alpha, n) in [(1.0, 4usize), (2.0, 3), (0.5, 5)] {
        let spec = Spectrum::from_rule(&CoefficientRule::Delta { k0: n as i64 }, window).unwrap();
        let rep = inverse_bound_alpha(&family, &spec, alpha, n, NormKind::Luxemburg, 256).unwrap();
        let sum: f64 = (1..=n).map(|nu| (nu as f64).powf(alpha - 1.0)).sum();
        let expected = alpha * (2.0 * PI / n as f64).powf(alpha) * sum;
        assert!(
            (rep.rhs - expected).abs() < 1e-12,
            "alpha = {alpha}: rhs = {} vs {expected}",
            rep.rhs
        );
        assert!(rep.pass);
        assert!(
            (rep.modulus.value - 2.0f64.powf(alpha)).abs() < 1e-8,
            "alpha = {alpha}: lhs = {}",
            rep.modulus.value
        );
    }
}

#[test]
fn rate_transfer_below_at_and_above_the_order() {
    // |c_k| = |k|^{-s} gives E_n ~ n^{-(s - 1/2)} in l2. Against order
    // alpha = 1 the modulus exponent should be min(beta, 1), with the
    // logarithmic flag raised exactly at beta = 1.
    let window = 1024;
    let family = OrliczFamily::lp(window, 2.0).unwrap();
    let ns = [8, 11, 16, 23, 32, 45, 64, 91, 128];
    for (s, want_beta, want_log) in [(1.0, 0.5, false), (1.5, 1.0, true), (2.0, 1.5, false)] {
        let spec = Spectrum::from_rule(&CoefficientRule::PowerDecay { s }, window).unwrap();
        let rep = classify_rates(&family, &spec, 1.0, &ns, NormKind::Luxemburg, 2048).unwrap();
        assert!(
            (rep.e_slope - want_beta).abs() < 0.1,
            "s = {s}: e_slope = {}",
            rep.e_slope
        );
        assert_eq!(rep.log_flag, want_log, "s = {s}: e_slope = {}", rep.e_slope);
        assert!(
            rep.pass,
            "s = {s}: omega slope {} vs predicted {} (deviation {})",
            rep.omega_slope, rep.predicted_slope, rep.deviation
        );
    }
}
