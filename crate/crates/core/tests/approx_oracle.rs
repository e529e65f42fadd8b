//! The tail-norm formula for best approximation, checked against a blind
//! search: coordinate descent over the real and imaginary parts of every
//! polynomial coefficient, started from zero, with a shrinking step. The
//! search must land on the tail norm — and can never beat it, since the
//! projection is optimal in any coordinate-monotone norm.

use num_complex::Complex64;
use trigapprox::approx::best_approx;
use trigapprox::orlicz::{sequence_norm, NormKind, OrliczEntry, OrliczFamily};
use trigapprox::spectrum::{CoefficientRule, Spectrum};

fn descend(family: &OrliczFamily, spec: &Spectrum, n: usize, kind: NormKind) -> f64 {
    let window = spec.window();
    let dim = 2 * n - 1; // coefficients k = -(n-1) ..= n-1
    let mut poly = vec![Complex64::new(0.0, 0.0); dim];
    let objective = |poly: &[Complex64]| -> f64 {
        let mut coeffs: Vec<Complex64> = spec.iter().map(|(_, c)| c).collect();
        for (i, &t) in poly.iter().enumerate() {
            let k = i as i64 - (n as i64 - 1);
            coeffs[(k + window as i64) as usize] -= t;
        }
        let diff = Spectrum::from_coeffs(window, coeffs).unwrap();
        sequence_norm(family, &diff, kind).unwrap()
    };
    let mut best = objective(&poly);
    let mut step = spec.support().iter().map(|&(_, m)| m).fold(0.1, f64::max);
    for _ in 0..400 {
        let mut improved = false;
        for i in 0..dim {
            for (dr, di) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                let saved = poly[i];
                poly[i] += Complex64::new(dr, di);
                let v = objective(&poly);
                if v < best - 1e-15 {
                    best = v;
                    improved = true;
                } else {
                    poly[i] = saved;
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < 1e-9 {
                break;
            }
        }
    }
    best
}

fn check(family: &OrliczFamily, spec: &Spectrum, n: usize, kind: NormKind) {
    let tail = best_approx(family, spec, n, kind).unwrap();
    let searched = descend(family, spec, n, kind);
    assert!(
        searched >= tail - 1e-9,
        "search beat the projection: {searched} < {tail}"
    );
    assert!(
        (searched - tail).abs() <= 1e-4 * tail.max(1.0),
        "search stalled at {searched}, tail norm is {tail}"
    );
}

#[test]
fn geometric_spectrum_power_family() {
    let family = OrliczFamily::lp(6, 1.5).unwrap();
    let spec = Spectrum::from_rule(&CoefficientRule::Geometric { ratio: 0.7 }, 6).unwrap();
    check(&family, &spec, 3, NormKind::Luxemburg);
}

#[test]
fn mixed_exponent_family() {
    let entries = (-5i64..=5)
        .map(|k| OrliczEntry::power(if k.rem_euclid(2) == 0 { 2.0 } else { 1.5 }, 1.0).unwrap())
        .collect();
    let family = OrliczFamily::from_entries(5, entries).unwrap();
    let spec = Spectrum::from_rule(&CoefficientRule::Geometric { ratio: 0.5 }, 5).unwrap();
    check(&family, &spec, 2, NormKind::Luxemburg);
}

#[test]
fn amemiya_norm_route() {
    let family = OrliczFamily::lp(5, 3.0).unwrap();
    let spec = Spectrum::from_rule(&CoefficientRule::PowerDecay { s: 1.0 }, 5).unwrap();
    check(&family, &spec, 3, NormKind::Orlicz);
}

#[test]
fn complex_coefficients_change_nothing() {
    // Rotating coefficient phases must leave E_n invariant; the oracle
    // search should still land on the same tail value.
    let family = OrliczFamily::lp(4, 2.0).unwrap();
    let base = Spectrum::from_rule(&CoefficientRule::Geometric { ratio: 0.6 }, 4).unwrap();
    let rotated = Spectrum::from_coeffs(
        4,
        base.iter()
            .map(|(k, c)| c * Complex64::new(0.0, 0.3 * k as f64).exp())
            .collect(),
    )
    .unwrap();
    let e_base = best_approx(&family, &base, 2, NormKind::Luxemburg).unwrap();
    let e_rot = best_approx(&family, &rotated, 2, NormKind::Luxemburg).unwrap();
    assert!((e_base - e_rot).abs() < 1e-12);
    check(&family, &rotated, 2, NormKind::Luxemburg);
}
