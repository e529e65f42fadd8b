//! Inverse estimates and the constructive description of smoothness
//! classes.
//!
//! The inverse bound turns the approximation history into a modulus bound:
//! for `phi` nondecreasing on `[0, tau]` whose global maximum sits at
//! `tau`,
//!
//! ```text
//! omega_phi(f, tau/n) <= sum_{nu=1}^{n} (phi(tau nu / n) - phi(tau (nu-1)/n)) E_nu(f),
//! ```
//!
//! with constant exactly one; single-frequency functions turn it into an
//! equality, which the tests pin to nine digits. For the classical
//! multiplier of order `alpha` the increments telescope into
//!
//! ```text
//! omega_alpha(f, pi/n) <= alpha (2 pi / n)^alpha sum_{nu<=n} nu^{alpha-1} E_nu(f).
//! ```
//!
//! Put direct and inverse together and the class of functions with
//! `omega_alpha(f, delta) = O(w(delta))` is exactly the class with
//! `E_n = O(w(1/n))` — provided the majorant `w` keeps the partial sums
//! `sum_{v<=n} v^{alpha-1} w(1/v)` of order `n^alpha w(1/n)`. That growth
//! condition is checked empirically, and `w(t) = t^alpha` genuinely fails
//! it (the sums pick up a logarithm), so the equivalence test refuses that
//! boundary case rather than pretending.

use std::sync::Arc;

use crate::approx::{best_approx, best_approx_sequence};
use crate::error::{Error, Result};
use crate::numeric::fit_slope;
use crate::orlicz::{NormKind, OrliczFamily};
use crate::smoothness::{modulus, ModulusValue, Multiplier, MIN_H_GRID};
use crate::spectrum::Spectrum;
use crate::tol::{CONDITION_B_RATIO, GROWTH_RATIO, INVERSE_SLACK_REL, LOG_FLAG_BAND, SLOPE_BAND};

/// Both sides of the inverse inequality.
#[derive(Debug, Clone)]
pub struct InverseReport {
    pub modulus: ModulusValue,
    pub rhs: f64,
    pub slack: f64,
    pub pass: bool,
    /// `E_1 .. E_n`, as consumed by the right-hand side.
    pub e_sequence: Vec<f64>,
}

/// The structural hypothesis on `phi`: nondecreasing on `[0, tau]`, global
/// maximum at `tau`. Violations are reported with the offending points.
fn check_inverse_hypothesis(phi: &Multiplier, tau: f64) -> Result<()> {
    if tau <= 0.0 || !tau.is_finite() {
        return Err(Error::Domain(format!("tau must be positive, got {tau}")));
    }
    let scale = phi.bound().max(1.0);
    let grid = 512;
    let mut t_prev = 0.0;
    let mut v_prev = phi.eval(0.0);
    for i in 1..=grid {
        let t = tau * i as f64 / grid as f64;
        let v = phi.eval(t);
        if v < v_prev - 1e-9 * scale {
            return Err(Error::Hypothesis(format!(
                "phi is not nondecreasing on [0, {tau:.6}]: phi({t_prev:.6}) = {v_prev:.6e} \
                 but phi({t:.6}) = {v:.6e}"
            )));
        }
        t_prev = t;
        v_prev = v;
    }
    let at_tau = phi.eval(tau);
    let probe = 2048;
    let half_width = 4.0 * std::f64::consts::PI;
    for i in 0..=probe {
        let t = -half_width + 2.0 * half_width * i as f64 / probe as f64;
        let v = phi.eval(t);
        if v > at_tau + 1e-9 * scale {
            return Err(Error::Hypothesis(format!(
                "phi({t:.6}) = {v:.6e} exceeds phi(tau) = {at_tau:.6e}, so the maximum is \
                 not at tau = {tau:.6}"
            )));
        }
    }
    Ok(())
}

/// Check `omega_phi(f, tau/n) <= sum (phi-increments) * E_nu` and report
/// the slack.
pub fn inverse_bound(
    family: &OrliczFamily,
    spec: &Spectrum,
    phi: &Multiplier,
    n: usize,
    tau: f64,
    kind: NormKind,
    h_grid: usize,
) -> Result<InverseReport> {
    if n == 0 {
        return Err(Error::Domain("degree n must be at least 1".into()));
    }
    check_inverse_hypothesis(phi, tau)?;
    let e_sequence = best_approx_sequence(family, spec, n, kind)?;
    let mut rhs = 0.0;
    let mut prev = phi.eval(0.0);
    for (nu, e) in e_sequence.iter().enumerate() {
        let cur = phi.eval(tau * (nu + 1) as f64 / n as f64);
        rhs += (cur - prev) * e;
        prev = cur;
    }
    let om = modulus(family, spec, phi, tau / n as f64, kind, h_grid)?;
    let slack = rhs - om.value;
    let pass = slack >= -INVERSE_SLACK_REL * rhs.max(om.value);
    Ok(InverseReport {
        modulus: om,
        rhs,
        slack,
        pass,
        e_sequence,
    })
}

/// The order-`alpha` corollary: `omega_alpha(f, pi/n)` against
/// `alpha (2 pi / n)^alpha sum nu^{alpha-1} E_nu`.
pub fn inverse_bound_alpha(
    family: &OrliczFamily,
    spec: &Spectrum,
    alpha: f64,
    n: usize,
    kind: NormKind,
    h_grid: usize,
) -> Result<InverseReport> {
    if n == 0 {
        return Err(Error::Domain("degree n must be at least 1".into()));
    }
    let phi = Multiplier::classical(alpha)?;
    let pi = std::f64::consts::PI;
    let e_sequence = best_approx_sequence(family, spec, n, kind)?;
    let sum: f64 = e_sequence
        .iter()
        .enumerate()
        .map(|(nu, e)| ((nu + 1) as f64).powf(alpha - 1.0) * e)
        .sum();
    let rhs = alpha * (2.0 * pi / n as f64).powf(alpha) * sum;
    let om = modulus(family, spec, &phi, pi / n as f64, kind, h_grid)?;
    let slack = rhs - om.value;
    let pass = slack >= -INVERSE_SLACK_REL * rhs.max(om.value);
    Ok(InverseReport {
        modulus: om,
        rhs,
        slack,
        pass,
        e_sequence,
    })
}

/// A modulus majorant on `[0, 1]`: continuous, nondecreasing, positive off
/// zero, vanishing at zero.
#[derive(Clone)]
pub enum Majorant {
    /// `w(t) = t^r`, `r > 0`.
    Power {
        r: f64,
    },
    /// `w(t) = t^r (1 + 1/r - ln t)`: behaves like `t^r |ln t|` near zero
    /// but stays nondecreasing all the way to `t = 1`.
    PowerLog {
        r: f64,
    },
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl std::fmt::Debug for Majorant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Majorant::Power { r } => write!(f, "Majorant::Power {{ r: {r} }}"),
            Majorant::PowerLog { r } => write!(f, "Majorant::PowerLog {{ r: {r} }}"),
            Majorant::Custom(_) => write!(f, "Majorant::Custom(..)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MajorantReport {
    pub valid: bool,
    pub failures: Vec<String>,
}

impl Majorant {
    pub fn eval(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        match self {
            Majorant::Power { r } => t.powf(*r),
            Majorant::PowerLog { r } => t.powf(*r) * (1.0 + 1.0 / r - t.ln()),
            Majorant::Custom(f) => f(t),
        }
    }

    /// Probe the majorant contract on `(0, 1]`.
    pub fn validate(&self, grid: usize) -> Result<MajorantReport> {
        if grid < 64 {
            return Err(Error::Domain(format!(
                "validation grid must have at least 64 points, got {grid}"
            )));
        }
        if let Majorant::Power { r } | Majorant::PowerLog { r } = self {
            if *r <= 0.0 || !r.is_finite() {
                return Err(Error::Config(format!(
                    "majorant exponent must be positive, got {r}"
                )));
            }
        }
        let mut failures = Vec::new();
        let mut prev = 0.0f64;
        let mut prev_t = 0.0f64;
        let scale = self.eval(1.0).abs().max(1.0);
        for i in 1..=grid {
            let t = i as f64 / grid as f64;
            let v = self.eval(t);
            if !v.is_finite() || v <= 0.0 {
                failures.push(format!("w({t:.6}) = {v:.3e} is not positive"));
                break;
            }
            if v < prev - 1e-12 * scale {
                failures.push(format!(
                    "w not nondecreasing: w({prev_t:.6}) = {prev:.6e} but w({t:.6}) = {v:.6e}"
                ));
                break;
            }
            prev = v;
            prev_t = t;
        }
        if failures.is_empty() && self.eval(1e-8) > 0.9 * self.eval(1.0) {
            failures.push("w does not appear to vanish as t -> 0+".into());
        }
        Ok(MajorantReport {
            valid: failures.is_empty(),
            failures,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundednessVerdict {
    Bounded,
    Growing,
}

/// Depth of the partial-sum scan used by [`class_membership`]. Deep enough
/// that algebraically converging profiles flatten under the 1.05 ratio
/// gate while logarithmic growth (ratio ~1.13 here) stays visible.
pub const CONDITION_B_SCAN: usize = 65_536;

/// Empirical profile of `R(n) = sum_{v<=n} v^{alpha-1} w(1/v) / (n^alpha w(1/n))`.
#[derive(Debug, Clone)]
pub struct ConditionB {
    pub alpha: f64,
    pub n_max: usize,
    /// `(n, R(n))` at geometrically spaced checkpoints.
    pub profile: Vec<(usize, f64)>,
    /// `R(n_max) / R(n_max / 4)`; a ratio near one means the profile has
    /// flattened.
    pub ratio: f64,
    pub verdict: BoundednessVerdict,
}

/// Decide whether the majorant keeps `R(n)` bounded, by scanning the exact
/// partial sums up to `n_max` (at least 16).
pub fn check_condition_b(majorant: &Majorant, alpha: f64, n_max: usize) -> Result<ConditionB> {
    if alpha <= 0.0 || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    if n_max < 16 {
        return Err(Error::Domain(format!(
            "condition scan needs n_max >= 16, got {n_max}"
        )));
    }
    let report = majorant.validate(256)?;
    if !report.valid {
        return Err(Error::Hypothesis(format!(
            "majorant violates its contract: {}",
            report.failures.join("; ")
        )));
    }
    let mut checkpoints: Vec<usize> = Vec::new();
    let mut n = n_max;
    while n >= 4 {
        checkpoints.push(n);
        n /= 2;
    }
    checkpoints.reverse();

    let r_at = |n: usize, partial: f64| -> f64 {
        partial / ((n as f64).powf(alpha) * majorant.eval(1.0 / n as f64))
    };
    let mut profile = Vec::with_capacity(checkpoints.len());
    let mut partial = 0.0f64;
    let mut r_quarter = 0.0f64;
    let quarter = n_max / 4;
    let mut next = 0usize;
    for v in 1..=n_max {
        let vf = v as f64;
        partial += vf.powf(alpha - 1.0) * majorant.eval(1.0 / vf);
        if v == quarter {
            r_quarter = r_at(v, partial);
        }
        if next < checkpoints.len() && v == checkpoints[next] {
            profile.push((v, r_at(v, partial)));
            next += 1;
        }
    }
    let r_full = profile.last().expect("n_max is a checkpoint").1;
    let ratio = r_full / r_quarter;
    let verdict = if ratio < CONDITION_B_RATIO {
        BoundednessVerdict::Bounded
    } else {
        BoundednessVerdict::Growing
    };
    Ok(ConditionB {
        alpha,
        n_max,
        profile,
        ratio,
        verdict,
    })
}

/// One side of the class equivalence: a ratio profile over `n` and its
/// growth classification.
#[derive(Debug, Clone)]
pub struct SideProfile {
    /// `(n, ratio)` pairs; the ratio is the measured quantity over
    /// `w(1/n)`.
    pub ratios: Vec<(usize, f64)>,
    /// Mean of the last quarter over mean of the first quarter.
    pub growth: f64,
    pub bounded: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipVerdict {
    /// `E_n = O(w(1/n))` and `omega_alpha(f, 1/n) = O(w(1/n))` both hold.
    BothBounded,
    /// Both ratios grow: the function sits outside the class, seen
    /// consistently from both sides.
    BothGrowing,
    /// The two sides disagree — the equivalence failed on this instance.
    Inconsistent,
}

#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub e_side: SideProfile,
    pub omega_side: SideProfile,
    pub verdict: MembershipVerdict,
    pub condition_b: ConditionB,
}

fn growth_of(vals: &[f64]) -> f64 {
    let q = (vals.len() / 4).max(1);
    let first: f64 = vals[..q].iter().sum::<f64>() / q as f64;
    let last: f64 = vals[vals.len() - q..].iter().sum::<f64>() / q as f64;
    if first <= 0.0 {
        // A vanishing head with a live tail is unambiguous growth.
        if last > 0.0 {
            f64::INFINITY
        } else {
            0.0
        }
    } else {
        last / first
    }
}

/// Test class membership from both ends: the approximation side
/// `E_n / w(1/n)` and the smoothness side `omega_alpha(f, 1/n) / w(1/n)`,
/// for `n = 1 ..= n_max`. The verdicts must agree when the growth
/// condition on `w` holds; the scan refuses majorants that fail it.
pub fn class_membership(
    family: &OrliczFamily,
    spec: &Spectrum,
    majorant: &Majorant,
    alpha: f64,
    n_max: usize,
    kind: NormKind,
    h_grid: usize,
) -> Result<MembershipReport> {
    if n_max < 8 {
        return Err(Error::Domain(format!(
            "membership scan needs n_max >= 8, got {n_max}"
        )));
    }
    // Scan far: bounded majorants like t^{0.8} at alpha = 1 flatten only
    // at rate n^{-0.2}, and a short scan mistakes them for growing.
    let scan = CONDITION_B_SCAN;
    let condition_b = check_condition_b(majorant, alpha, scan)?;
    if condition_b.verdict != BoundednessVerdict::Bounded {
        return Err(Error::Hypothesis(format!(
            "the majorant fails the growth condition: R({scan})/R({}) = {:.4}; the class \
             equivalence is not guaranteed for it",
            scan / 4,
            condition_b.ratio
        )));
    }
    let phi = Multiplier::classical(alpha)?;
    let mut e_ratios = Vec::with_capacity(n_max);
    let mut o_ratios = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let w = majorant.eval(1.0 / n as f64);
        let e = best_approx(family, spec, n, kind)?;
        let om = modulus(family, spec, &phi, 1.0 / n as f64, kind, h_grid)?;
        e_ratios.push((n, e / w));
        o_ratios.push((n, om.value / w));
    }
    let e_vals: Vec<f64> = e_ratios.iter().map(|&(_, r)| r).collect();
    let o_vals: Vec<f64> = o_ratios.iter().map(|&(_, r)| r).collect();
    let e_growth = growth_of(&e_vals);
    let o_growth = growth_of(&o_vals);
    let e_bounded = e_growth < GROWTH_RATIO;
    let o_bounded = o_growth < GROWTH_RATIO;
    let verdict = match (e_bounded, o_bounded) {
        (true, true) => MembershipVerdict::BothBounded,
        (false, false) => MembershipVerdict::BothGrowing,
        _ => MembershipVerdict::Inconsistent,
    };
    Ok(MembershipReport {
        e_side: SideProfile {
            ratios: e_ratios,
            growth: e_growth,
            bounded: e_bounded,
        },
        omega_side: SideProfile {
            ratios: o_ratios,
            growth: o_growth,
            bounded: o_bounded,
        },
        verdict,
        condition_b,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct RatePoint {
    pub n: usize,
    pub e: f64,
    pub omega: f64,
}

/// Empirical check of the rate-transfer rule: `E_n ~ n^{-beta}` should give
/// `omega_alpha(f, t) ~ t^{min(beta, alpha)}`, with an extra logarithm
/// exactly at `beta = alpha`.
#[derive(Debug, Clone)]
pub struct RateReport {
    pub points: Vec<RatePoint>,
    /// Fitted decay exponent of `E_n`.
    pub e_slope: f64,
    /// Fitted decay exponent of `omega_alpha(f, 1/n)`.
    pub omega_slope: f64,
    /// `min(e_slope, alpha)`.
    pub predicted_slope: f64,
    /// Whether the fit landed in the logarithmic boundary band
    /// `|e_slope - alpha| < 0.05`.
    pub log_flag: bool,
    /// `|omega_slope - predicted_slope|`.
    pub deviation: f64,
    pub pass: bool,
}

/// Fit decay exponents of `E_n` and `omega_alpha(f, 1/n)` over the given
/// degrees (at least six, strictly increasing; the two smallest are
/// excluded from the fits as warm-up). Degrees where `E_n` vanishes are
/// refused — a log fit cannot see them.
pub fn classify_rates(
    family: &OrliczFamily,
    spec: &Spectrum,
    alpha: f64,
    ns: &[usize],
    kind: NormKind,
    h_grid_base: usize,
) -> Result<RateReport> {
    if ns.len() < 6 {
        return Err(Error::Domain(format!(
            "rate fit needs at least 6 degrees, got {}",
            ns.len()
        )));
    }
    if ns.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("degrees must be strictly increasing".into()));
    }
    if alpha <= 0.0 || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    let phi = Multiplier::classical(alpha)?;
    let mut points = Vec::with_capacity(ns.len());
    for &n in ns {
        let e = best_approx(family, spec, n, kind)?;
        if e <= 0.0 {
            return Err(Error::Domain(format!(
                "E_{n} = 0: the spectrum is a polynomial at this degree and has no decay \
                 rate to classify"
            )));
        }
        let h_grid = (h_grid_base / n).max(MIN_H_GRID);
        let om = modulus(family, spec, &phi, 1.0 / n as f64, kind, h_grid)?;
        points.push(RatePoint {
            n,
            e,
            omega: om.value,
        });
    }
    let fit = &points[2..];
    let xs: Vec<f64> = fit.iter().map(|p| (1.0 / p.n as f64).ln()).collect();
    let e_ys: Vec<f64> = fit.iter().map(|p| p.e.ln()).collect();
    let o_ys: Vec<f64> = fit.iter().map(|p| p.omega.ln()).collect();
    let e_slope = fit_slope(&xs, &e_ys);
    let omega_slope = fit_slope(&xs, &o_ys);
    let predicted_slope = e_slope.min(alpha);
    let log_flag = (e_slope - alpha).abs() < LOG_FLAG_BAND;
    let deviation = (omega_slope - predicted_slope).abs();
    let pass = deviation <= SLOPE_BAND;
    Ok(RateReport {
        points,
        e_slope,
        omega_slope,
        predicted_slope,
        log_flag,
        deviation,
        pass,
    })
}
