//! Best approximation by trigonometric polynomials of degree `< n`.
//!
//! With coefficient-wise (solid) norms the projection onto degrees `< n` is
//! optimal, so the approximation error is exactly the norm of the
//! coefficient tail `|k| >= n`:
//!
//! ```text
//! E_n(f) = inf_{deg T < n} || f - T || = || (c_k)_{|k| >= n} ||
//! ```
//!
//! Zeroing any retained coefficient can only increase a coordinate-monotone
//! norm, and the tail is untouchable by any competitor. The oracle test
//! suite re-derives `E_n` by direct minimization over polynomial
//! coefficients to pin this down numerically.

use crate::error::Result;
use crate::orlicz::{sequence_norm, NormKind, OrliczFamily};
use crate::spectrum::Spectrum;

/// `E_n(f)`: the norm of the tail `|k| >= n`. Requires `1 <= n <= window + 1`
/// (at `n = window + 1` the tail is empty and `E_n = 0`).
pub fn best_approx(
    family: &OrliczFamily,
    spec: &Spectrum,
    n: usize,
    kind: NormKind,
) -> Result<f64> {
    family.check_window(spec)?;
    let tail = spec.tail(n)?;
    sequence_norm(family, &tail, kind)
}

/// `E_1, ..., E_{n_max}` in one pass.
pub fn best_approx_sequence(
    family: &OrliczFamily,
    spec: &Spectrum,
    n_max: usize,
    kind: NormKind,
) -> Result<Vec<f64>> {
    (1..=n_max)
        .map(|n| best_approx(family, spec, n, kind))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn geometric(window: usize, ratio: f64) -> Spectrum {
        let coeffs = (-(window as i64)..=window as i64)
            .map(|k| Complex64::new(ratio.powi(k.unsigned_abs() as i32), 0.0))
            .collect();
        Spectrum::from_coeffs(window, coeffs).unwrap()
    }

    #[test]
    fn l2_tail_closed_form() {
        // |c_k| = r^{|k|} truncated at the window edge K:
        // E_n^2 = 2 sum_{k=n}^{K} r^{2k} = 2 (q^n - q^{K+1}) / (1 - q), q = r^2.
        let family = OrliczFamily::lp(8, 2.0).unwrap();
        let s = geometric(8, 0.5);
        let q = 0.25f64;
        for n in 1..=8 {
            let want = (2.0 * (q.powi(n as i32) - q.powi(9)) / (1.0 - q)).sqrt();
            let got = best_approx(&family, &s, n, NormKind::Luxemburg).unwrap();
            assert!((got - want).abs() < 1e-12, "n = {n}: {got} vs {want}");
        }
    }

    #[test]
    fn full_degree_tail_is_zero() {
        let family = OrliczFamily::lp(4, 1.5).unwrap();
        let s = geometric(4, 0.7);
        let e = best_approx(&family, &s, 5, NormKind::Luxemburg).unwrap();
        assert_eq!(e, 0.0);
    }

    #[test]
    fn sequence_is_nonincreasing() {
        let family = OrliczFamily::lp(6, 3.0).unwrap();
        let s = geometric(6, 0.8);
        for kind in [NormKind::Luxemburg, NormKind::Orlicz] {
            let es = best_approx_sequence(&family, &s, 7, kind).unwrap();
            for w in es.windows(2) {
                assert!(w[1] <= w[0] + 1e-14);
            }
            assert_eq!(es.len(), 7);
            assert_eq!(*es.last().unwrap(), 0.0);
        }
    }

    #[test]
    fn degree_out_of_range_rejected() {
        let family = OrliczFamily::lp(3, 2.0).unwrap();
        let s = geometric(3, 0.5);
        assert!(best_approx(&family, &s, 0, NormKind::Luxemburg).is_err());
        assert!(best_approx(&family, &s, 5, NormKind::Luxemburg).is_err());
    }
}
