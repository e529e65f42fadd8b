//! Structural invariants under randomized inputs: norm axioms, the
//! two-norm sandwich, projection identities, and modulus bounds.

use num_complex::Complex64;
use proptest::prelude::*;
use trigapprox::approx::best_approx_sequence;
use trigapprox::orlicz::{modular, sequence_norm, NormKind, OrliczEntry, OrliczFamily};
use trigapprox::smoothness::{modulus, Multiplier};
use trigapprox::spectrum::Spectrum;

fn arb_instance() -> impl Strategy<Value = (OrliczFamily, Spectrum)> {
    (0usize..=3).prop_flat_map(|w| {
        let len = 2 * w + 1;
        (
            prop::collection::vec((prop_oneof![Just(1.0f64), 1.0f64..3.0], 0.25f64..2.0), len),
            prop::collection::vec((0.0f64..2.0, -3.1f64..3.1), len),
        )
            .prop_map(move |(pw, cs)| {
                let entries = pw
                    .iter()
                    .map(|&(p, wt)| OrliczEntry::power(p, wt).unwrap())
                    .collect();
                let family = OrliczFamily::from_entries(w, entries).unwrap();
                let coeffs = cs
                    .iter()
                    .map(|&(m, ph)| Complex64::from_polar(m, ph))
                    .collect();
                let spec = Spectrum::from_coeffs(w, coeffs).unwrap();
                (family, spec)
            })
    })
}

proptest! {
    #[test]
    fn sandwich_and_homogeneity((family, spec) in arb_instance(), t in 0.1f64..8.0) {
        let lux = sequence_norm(&family, &spec, NormKind::Luxemburg).unwrap();
        let orl = sequence_norm(&family, &spec, NormKind::Orlicz).unwrap();
        prop_assert!(lux <= orl * (1.0 + 1e-9) + 1e-12);
        prop_assert!(orl <= 2.0 * lux * (1.0 + 1e-9) + 1e-12);

        let scaled = spec.scaled(t);
        for kind in [NormKind::Luxemburg, NormKind::Orlicz] {
            let base = sequence_norm(&family, &spec, kind).unwrap();
            let big = sequence_norm(&family, &scaled, kind).unwrap();
            prop_assert!(
                (big - t * base).abs() <= 1e-8 * (t * base).max(1e-9),
                "kind {:?}: {} vs {}", kind, big, t * base
            );
        }
    }

    #[test]
    fn coordinate_monotonicity((family, spec) in arb_instance(), bump in 0.1f64..1.5) {
        let w = spec.window();
        let k = 0i64.max(-(w as i64)); // bump the center coefficient
        let mut coeffs: Vec<Complex64> = spec.iter().map(|(_, c)| c).collect();
        let idx = (k + w as i64) as usize;
        let m0 = coeffs[idx].norm();
        coeffs[idx] = Complex64::new(m0 + bump, 0.0);
        let bigger = Spectrum::from_coeffs(w, coeffs).unwrap();
        for kind in [NormKind::Luxemburg, NormKind::Orlicz] {
            let a = sequence_norm(&family, &spec, kind).unwrap();
            let b = sequence_norm(&family, &bigger, kind).unwrap();
            prop_assert!(b >= a - 1e-9 * a.max(1.0), "{:?}: {} < {}", kind, b, a);
        }
    }

    #[test]
    fn modular_at_the_luxemburg_norm((family, spec) in arb_instance()) {
        let lux = sequence_norm(&family, &spec, NormKind::Luxemburg).unwrap();
        if lux > 0.0 {
            let rho = modular(&family, &spec, lux).unwrap();
            prop_assert!(rho <= 1.0 + 1e-8, "modular at the norm is {}", rho);
            // Shrinking the scale by 1% must push the modular to 1 or above.
            let rho_tight = modular(&family, &spec, lux * 0.99).unwrap();
            prop_assert!(rho_tight >= 1.0 - 1e-8, "norm is not tight: {}", rho_tight);
        }
    }

    #[test]
    fn projection_splits_exactly((_f, spec) in arb_instance(), n_off in 0usize..3) {
        let w = spec.window();
        let n = (1 + n_off).min(w + 1);
        let head = spec.partial_sum(n).unwrap();
        let tail = spec.tail(n).unwrap();
        let sum = head.add(&tail).unwrap();
        for (k, c) in spec.iter() {
            prop_assert_eq!(sum.coeff(k), c);
        }
        // Supports are disjoint.
        for (k, _) in head.support() {
            prop_assert!(k.unsigned_abs() < n as u64);
        }
        for (k, _) in tail.support() {
            prop_assert!(k.unsigned_abs() >= n as u64);
        }
    }

    #[test]
    fn approximation_errors_decrease((family, spec) in arb_instance()) {
        let w = spec.window();
        for kind in [NormKind::Luxemburg, NormKind::Orlicz] {
            let es = best_approx_sequence(&family, &spec, w + 1, kind).unwrap();
            for pair in es.windows(2) {
                prop_assert!(pair[1] <= pair[0] * (1.0 + 1e-9) + 1e-12);
            }
            prop_assert!(es[w] == 0.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn modulus_monotone_and_bounded(
        (family, spec) in arb_instance(),
        alpha in prop_oneof![Just(1.0f64), Just(2.0f64)],
        d1 in 0.2f64..1.5,
        scale in 1.1f64..3.0,
    ) {
        let phi = Multiplier::classical(alpha).unwrap();
        let d2 = (d1 * scale).min(std::f64::consts::PI);
        let kind = NormKind::Luxemburg;
        let m1 = modulus(&family, &spec, &phi, d1, kind, 128).unwrap();
        let m2 = modulus(&family, &spec, &phi, d2, kind, 128).unwrap();
        prop_assert!(m1.value <= m2.value * (1.0 + 1e-9) + 1e-12);
        let norm = sequence_norm(&family, &spec, kind).unwrap();
        prop_assert!(
            m2.value <= phi.bound() * norm * (1.0 + 1e-9) + 1e-12,
            "modulus {} vs cap {}", m2.value, phi.bound() * norm
        );
    }
}
