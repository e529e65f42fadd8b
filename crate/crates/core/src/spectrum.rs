//! Two-sided Fourier coefficient windows and the rules that generate them.
//!
//! A [`Spectrum`] holds the 2K+1 coefficients `c_k`, `|k| <= K`, of a
//! trigonometric polynomial. Everything downstream (norms, moduli, best
//! approximations) consumes coefficients only, so the window *is* the
//! function: requests beyond it fail loudly instead of truncating silently.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Coefficients `c_k` for `|k| <= window`, stored low-to-high
/// (`coeffs[i]` holds `k = i - window`).
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    window: usize,
    coeffs: Vec<Complex64>,
}

/// Closed-form coefficient rules accepted by [`Spectrum::from_rule`].
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientRule {
    /// `c_{k0} = 1`, everything else zero.
    Delta { k0: i64 },
    /// `c_k = ratio^{|k|}`, `0 < ratio < 1`.
    Geometric { ratio: f64 },
    /// `c_k = |k|^{-s}` for `k != 0`, `c_0 = 0`, `s > 0`.
    PowerDecay { s: f64 },
    /// `c_{2^j} = c_{-2^j} = amplitudes[j]`, everything else zero.
    Lacunary { amplitudes: Vec<f64> },
    /// Coefficients given verbatim, low-to-high; length must be `2*window+1`.
    Explicit { coeffs: Vec<Complex64> },
}

impl Spectrum {
    /// Wrap explicit coefficients. `coeffs.len()` must equal `2*window + 1`
    /// and every entry must be finite.
    pub fn from_coeffs(window: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != 2 * window + 1 {
            return Err(Error::Config(format!(
                "coefficient vector has {} entries but window {} needs {}",
                coeffs.len(),
                window,
                2 * window + 1
            )));
        }
        if let Some(i) = coeffs
            .iter()
            .position(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::Domain(format!(
                "non-finite coefficient at k = {}",
                i as i64 - window as i64
            )));
        }
        Ok(Spectrum { window, coeffs })
    }

    /// The all-zero window.
    pub fn zeros(window: usize) -> Self {
        Spectrum {
            window,
            coeffs: vec![Complex64::new(0.0, 0.0); 2 * window + 1],
        }
    }

    /// Build a window from a closed-form rule.
    pub fn from_rule(rule: &CoefficientRule, window: usize) -> Result<Self> {
        let mut s = Spectrum::zeros(window);
        match rule {
            CoefficientRule::Delta { k0 } => {
                if k0.unsigned_abs() as usize > window {
                    return Err(Error::Config(format!(
                        "delta position k0 = {k0} outside window {window}"
                    )));
                }
                *s.coeff_mut(*k0) = Complex64::new(1.0, 0.0);
            }
            CoefficientRule::Geometric { ratio } => {
                if !(*ratio > 0.0 && *ratio < 1.0) {
                    return Err(Error::Config(format!(
                        "geometric ratio must lie in (0, 1), got {ratio}"
                    )));
                }
                for k in -(window as i64)..=window as i64 {
                    *s.coeff_mut(k) = Complex64::new(ratio.powi(k.unsigned_abs() as i32), 0.0);
                }
            }
            CoefficientRule::PowerDecay { s: expo } => {
                if *expo <= 0.0 || expo.is_nan() {
                    return Err(Error::Config(format!(
                        "power-decay exponent must be positive, got {expo}"
                    )));
                }
                for k in -(window as i64)..=window as i64 {
                    if k != 0 {
                        *s.coeff_mut(k) =
                            Complex64::new((k.unsigned_abs() as f64).powf(-expo), 0.0);
                    }
                }
            }
            CoefficientRule::Lacunary { amplitudes } => {
                for (j, a) in amplitudes.iter().enumerate() {
                    if !a.is_finite() {
                        return Err(Error::Domain(format!("non-finite lacunary amplitude {j}")));
                    }
                    let k = 1i64
                        .checked_shl(j as u32)
                        .filter(|k| *k as usize <= window)
                        .ok_or_else(|| {
                            Error::Config(format!(
                                "lacunary frequency 2^{j} does not fit in window {window}"
                            ))
                        })?;
                    *s.coeff_mut(k) = Complex64::new(*a, 0.0);
                    *s.coeff_mut(-k) = Complex64::new(*a, 0.0);
                }
            }
            CoefficientRule::Explicit { coeffs } => {
                return Spectrum::from_coeffs(window, coeffs.clone());
            }
        }
        Ok(s)
    }

    /// Coefficients of a uniformly sampled function by the rectangle rule,
    /// `c_k = N^{-1} sum_j f(x_j) e^{-ik x_j}`, `x_j = 2 pi j / N`.
    ///
    /// Exact on trigonometric polynomials of degree <= window provided
    /// `N >= 2*window + 2`; fewer samples alias and are refused.
    pub fn from_samples(samples: &[Complex64], window: usize) -> Result<Self> {
        let n = samples.len();
        if n < 2 * window + 2 {
            return Err(Error::Domain(format!(
                "aliasing: {n} samples cannot resolve window {window} (need at least {})",
                2 * window + 2
            )));
        }
        if let Some(j) = samples
            .iter()
            .position(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::Domain(format!("non-finite sample at index {j}")));
        }
        let mut s = Spectrum::zeros(window);
        let step = 2.0 * PI / n as f64;
        for k in -(window as i64)..=window as i64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &f) in samples.iter().enumerate() {
                let angle = -(k as f64) * step * j as f64;
                acc += f * Complex64::new(angle.cos(), angle.sin());
            }
            *s.coeff_mut(k) = acc / n as f64;
        }
        Ok(s)
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Coefficient at `k`. Panics if `|k| > window`; validated entry points
    /// exist for every operation that takes `k` from outside.
    pub fn coeff(&self, k: i64) -> Complex64 {
        self.coeffs[self.index(k)]
    }

    pub fn abs(&self, k: i64) -> f64 {
        self.coeff(k).norm()
    }

    fn index(&self, k: i64) -> usize {
        assert!(
            k.unsigned_abs() as usize <= self.window,
            "coefficient index {k} outside window {}",
            self.window
        );
        (k + self.window as i64) as usize
    }

    fn coeff_mut(&mut self, k: i64) -> &mut Complex64 {
        let i = self.index(k);
        &mut self.coeffs[i]
    }

    /// `(k, c_k)` pairs, low-to-high.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let w = self.window as i64;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 - w, c))
    }

    /// `(k, |c_k|)` for the nonzero coefficients only.
    pub fn support(&self) -> Vec<(i64, f64)> {
        self.iter()
            .filter_map(|(k, c)| {
                let m = c.norm();
                (m != 0.0).then_some((k, m))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// Same window, every coefficient multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Spectrum {
        Spectrum {
            window: self.window,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Coefficient-wise sum; windows must match.
    pub fn add(&self, other: &Spectrum) -> Result<Spectrum> {
        if self.window != other.window {
            return Err(Error::Config(format!(
                "window mismatch: {} vs {}",
                self.window, other.window
            )));
        }
        Ok(Spectrum {
            window: self.window,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n < 1 || n > self.window + 1 {
            return Err(Error::Domain(format!(
                "degree n = {n} outside [1, {}] for window {}",
                self.window + 1,
                self.window
            )));
        }
        Ok(())
    }

    /// Coefficients of the partial sum of degree `n - 1`: `|k| >= n` zeroed.
    /// Requires `1 <= n <= window + 1`; the window itself never shrinks.
    pub fn partial_sum(&self, n: usize) -> Result<Spectrum> {
        self.check_degree(n)?;
        let mut s = self.clone();
        for k in -(self.window as i64)..=self.window as i64 {
            if k.unsigned_abs() as usize >= n {
                *s.coeff_mut(k) = Complex64::new(0.0, 0.0);
            }
        }
        Ok(s)
    }

    /// The complement of [`Spectrum::partial_sum`]: `|k| <= n - 1` zeroed.
    pub fn tail(&self, n: usize) -> Result<Spectrum> {
        self.check_degree(n)?;
        let mut s = self.clone();
        for k in -(self.window as i64)..=self.window as i64 {
            if (k.unsigned_abs() as usize) < n {
                *s.coeff_mut(k) = Complex64::new(0.0, 0.0);
            }
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn from_coeffs_rejects_wrong_length() {
        assert!(matches!(
            Spectrum::from_coeffs(2, vec![c(1.0); 4]),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn delta_places_single_coefficient() {
        let s = Spectrum::from_rule(&CoefficientRule::Delta { k0: -3 }, 4).unwrap();
        assert_eq!(s.abs(-3), 1.0);
        assert_eq!(s.support().len(), 1);
    }

    #[test]
    fn delta_outside_window_is_config_error() {
        assert!(matches!(
            Spectrum::from_rule(&CoefficientRule::Delta { k0: 5 }, 4),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn geometric_symmetric_and_decaying() {
        let s = Spectrum::from_rule(&CoefficientRule::Geometric { ratio: 0.5 }, 3).unwrap();
        assert_eq!(s.abs(0), 1.0);
        assert_eq!(s.abs(2), 0.25);
        assert_eq!(s.abs(-2), 0.25);
    }

    #[test]
    fn power_decay_zeroes_origin() {
        let s = Spectrum::from_rule(&CoefficientRule::PowerDecay { s: 1.0 }, 3).unwrap();
        assert_eq!(s.abs(0), 0.0);
        assert_eq!(s.abs(3), 1.0 / 3.0);
    }

    #[test]
    fn lacunary_needs_room() {
        let rule = CoefficientRule::Lacunary {
            amplitudes: vec![1.0, 0.5, 0.25],
        };
        assert!(Spectrum::from_rule(&rule, 4).is_ok());
        assert!(matches!(
            Spectrum::from_rule(&rule, 3),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn partial_sum_plus_tail_reconstructs() {
        let s = Spectrum::from_rule(&CoefficientRule::Geometric { ratio: 0.7 }, 5).unwrap();
        for n in 1..=6 {
            let rebuilt = s.partial_sum(n).unwrap().add(&s.tail(n).unwrap()).unwrap();
            assert_eq!(rebuilt, s);
        }
    }

    #[test]
    fn degree_bounds_enforced() {
        let s = Spectrum::zeros(4);
        assert!(s.partial_sum(0).is_err());
        assert!(s.partial_sum(6).is_err());
        assert!(s.tail(5).is_ok());
    }

    #[test]
    fn sampling_exact_on_band_limited_input() {
        // f(x) = 2 cos(3x) + i sin(x) sampled well above the Nyquist floor.
        let w = 4;
        let n = 16;
        let samples: Vec<Complex64> = (0..n)
            .map(|j| {
                let x = 2.0 * PI * j as f64 / n as f64;
                Complex64::new(2.0 * (3.0 * x).cos(), x.sin())
            })
            .collect();
        let s = Spectrum::from_samples(&samples, w).unwrap();
        assert!((s.coeff(3) - c(1.0)).norm() < 1e-12);
        assert!((s.coeff(-3) - c(1.0)).norm() < 1e-12);
        assert!((s.coeff(1) - Complex64::new(0.5, 0.0)).norm() < 1e-12);
        assert!((s.coeff(-1) - Complex64::new(-0.5, 0.0)).norm() < 1e-12);
        assert!(s.abs(0) < 1e-12 && s.abs(2) < 1e-12);
    }

    #[test]
    fn sampling_refuses_aliasing() {
        let samples = vec![c(1.0); 9];
        assert!(matches!(
            Spectrum::from_samples(&samples, 4),
            Err(Error::Domain(_))
        ));
    }
}
