//! Musielak-Orlicz machinery over coefficient windows: modulars, the
//! Luxemburg and Orlicz (Amemiya) norms, Young conjugates, and dual
//! feasibility.
//!
//! A family assigns one Orlicz function `M_k` to each index `|k| <= K`:
//!
//! ```text
//! modular(f, a)   = sum_k M_k(|c_k| / a)
//! luxemburg(f)    = inf { a > 0 : modular(f, a) <= 1 }
//! orlicz(f)       = inf_{kappa > 0} (1 + sum_k M_k(kappa |c_k|)) / kappa
//! ```
//!
//! The two norms sandwich each other: `luxemburg <= orlicz <= 2 luxemburg`.
//!
//! Families whose entries are all power-kind with a single exponent admit
//! closed forms for both norms; the dispatchers use them and the generic
//! search routes stay public so the closed forms can be cross-checked.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numeric::golden_min;
use crate::spectrum::Spectrum;
use crate::tol::{DUAL_FEAS_SLACK, NORM_SEARCH_REL, SEARCH_ITER_CAP};

/// One Orlicz function: convex, nondecreasing on `[0, inf)`, zero at zero.
#[derive(Clone)]
pub enum OrliczEntry {
    /// `M(u) = weight * u^exponent`, `exponent >= 1`, `weight >= 0`.
    Power { exponent: f64, weight: f64 },
    /// Arbitrary callable satisfying the same contract (not validated;
    /// callers own the convexity promise).
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl std::fmt::Debug for OrliczEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrliczEntry::Power { exponent, weight } => {
                write!(f, "Power {{ exponent: {exponent}, weight: {weight} }}")
            }
            OrliczEntry::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

impl OrliczEntry {
    pub fn power(exponent: f64, weight: f64) -> Result<Self> {
        if exponent < 1.0 || !exponent.is_finite() {
            return Err(Error::Config(format!(
                "power exponent must be >= 1, got {exponent}"
            )));
        }
        if weight < 0.0 || !weight.is_finite() {
            return Err(Error::Config(format!(
                "power weight must be >= 0, got {weight}"
            )));
        }
        Ok(OrliczEntry::Power { exponent, weight })
    }

    pub fn eval(&self, u: f64) -> f64 {
        debug_assert!(u >= 0.0);
        match self {
            OrliczEntry::Power { exponent, weight } => {
                if *weight == 0.0 {
                    0.0
                } else {
                    weight * pow_nonneg(u, *exponent)
                }
            }
            OrliczEntry::Custom(f) => f(u),
        }
    }
}

/// `u^p` with fast paths for the exponents the suite leans on.
#[inline]
pub(crate) fn pow_nonneg(u: f64, p: f64) -> f64 {
    if p == 1.0 {
        u
    } else if p == 2.0 {
        u * u
    } else if p == 3.0 {
        u * u * u
    } else {
        u.powf(p)
    }
}

/// A window-indexed family of Orlicz functions.
#[derive(Debug, Clone)]
pub struct OrliczFamily {
    window: usize,
    entries: Vec<OrliczEntry>,
}

impl OrliczFamily {
    /// Same entry at every index.
    pub fn broadcast(window: usize, entry: OrliczEntry) -> Self {
        OrliczFamily {
            window,
            entries: vec![entry; 2 * window + 1],
        }
    }

    /// `M_k(u) = weight * u^exponent` for every `k`.
    pub fn power(window: usize, exponent: f64, weight: f64) -> Result<Self> {
        Ok(Self::broadcast(
            window,
            OrliczEntry::power(exponent, weight)?,
        ))
    }

    /// The plain `l_p` family `M_k(u) = u^p`, whose Luxemburg norm is the
    /// `l_p` norm exactly.
    pub fn lp(window: usize, p: f64) -> Result<Self> {
        Self::power(window, p, 1.0)
    }

    /// The scaled power family `M_k(u) = (p^{-1/p} q^{-1/q})^p u^p`
    /// (plain `u` when `p = 1`), whose *Orlicz* norm is the `l_p` norm.
    pub fn scaled_power(window: usize, p: f64) -> Result<Self> {
        Self::power(window, p, scaled_power_weight(p)?)
    }

    /// Per-index entries, low-to-high; length must be `2*window + 1`.
    pub fn from_entries(window: usize, entries: Vec<OrliczEntry>) -> Result<Self> {
        if entries.len() != 2 * window + 1 {
            return Err(Error::Config(format!(
                "entry vector has {} functions but window {} needs {}",
                entries.len(),
                window,
                2 * window + 1
            )));
        }
        Ok(OrliczFamily { window, entries })
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Entry for index `k`; panics outside the window (validated call sites
    /// go through [`OrliczFamily::check_window`] first).
    pub fn entry(&self, k: i64) -> &OrliczEntry {
        assert!(
            k.unsigned_abs() as usize <= self.window,
            "family index {k} outside window {}",
            self.window
        );
        &self.entries[(k + self.window as i64) as usize]
    }

    pub fn eval(&self, k: i64, u: f64) -> f64 {
        self.entry(k).eval(u)
    }

    /// The sequence window must fit inside the family window.
    pub fn check_window(&self, spec: &Spectrum) -> Result<()> {
        if spec.window() > self.window {
            return Err(Error::Config(format!(
                "coefficient window {} exceeds family window {}",
                spec.window(),
                self.window
            )));
        }
        Ok(())
    }

    /// `Some(p)` when every entry is power-kind with the same exponent
    /// (weights may differ) — the case with closed-form norms.
    pub fn uniform_power_exponent(&self) -> Option<f64> {
        let mut shared = None;
        for e in &self.entries {
            match e {
                OrliczEntry::Power { exponent, .. } => match shared {
                    None => shared = Some(*exponent),
                    Some(p) if p == *exponent => {}
                    Some(_) => return None,
                },
                OrliczEntry::Custom(_) => return None,
            }
        }
        shared
    }

    fn power_weight(&self, k: i64) -> f64 {
        match self.entry(k) {
            OrliczEntry::Power { weight, .. } => *weight,
            OrliczEntry::Custom(_) => unreachable!("uniform power path on custom entry"),
        }
    }
}

/// Weight that makes the Orlicz norm of the power-`p` family equal `l_p`.
pub fn scaled_power_weight(p: f64) -> Result<f64> {
    if p < 1.0 || !p.is_finite() {
        return Err(Error::Config(format!("exponent must be >= 1, got {p}")));
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    let q = p / (p - 1.0);
    Ok((p.powf(-1.0 / p) * q.powf(-1.0 / q)).powf(p))
}

/// Which of the two norms to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    Luxemburg,
    Orlicz,
}

/// `sum_k M_k(|c_k| / a)` for `a > 0`.
pub fn modular(family: &OrliczFamily, spec: &Spectrum, a: f64) -> Result<f64> {
    if a <= 0.0 || !a.is_finite() {
        return Err(Error::Domain(format!(
            "modular scale must be positive, got {a}"
        )));
    }
    family.check_window(spec)?;
    Ok(modular_pairs(family, &spec.support(), a))
}

fn modular_pairs(family: &OrliczFamily, pairs: &[(i64, f64)], a: f64) -> f64 {
    let mut total = 0.0;
    for &(k, m) in pairs {
        total += family.eval(k, m / a);
    }
    total
}

/// Luxemburg norm. Dispatches to the closed form for uniform-exponent power
/// families, otherwise to [`luxemburg_norm_bisect`].
pub fn luxemburg_norm(family: &OrliczFamily, spec: &Spectrum) -> Result<f64> {
    family.check_window(spec)?;
    sparse_norm(family, &spec.support(), NormKind::Luxemburg)
}

/// Orlicz norm through the Amemiya form. Dispatches to the closed form for
/// uniform-exponent power families, otherwise to [`orlicz_norm_amemiya`].
pub fn orlicz_norm(family: &OrliczFamily, spec: &Spectrum) -> Result<f64> {
    family.check_window(spec)?;
    sparse_norm(family, &spec.support(), NormKind::Orlicz)
}

pub fn sequence_norm(family: &OrliczFamily, spec: &Spectrum, kind: NormKind) -> Result<f64> {
    match kind {
        NormKind::Luxemburg => luxemburg_norm(family, spec),
        NormKind::Orlicz => orlicz_norm(family, spec),
    }
}

/// Norm of a sparse `(k, |c_k|)` list. The moduli sweep calls this thousands
/// of times, so it avoids materializing a `Spectrum` per evaluation.
pub(crate) fn sparse_norm(
    family: &OrliczFamily,
    pairs: &[(i64, f64)],
    kind: NormKind,
) -> Result<f64> {
    if pairs.iter().all(|&(_, m)| m == 0.0) {
        return Ok(0.0);
    }
    if let Some(p) = family.uniform_power_exponent() {
        let s: f64 = pairs
            .iter()
            .map(|&(k, m)| family.power_weight(k) * pow_nonneg(m, p))
            .sum();
        if s == 0.0 {
            return Ok(0.0);
        }
        return Ok(match kind {
            // modular(a) = a^{-p} s  =>  norm = s^{1/p}
            NormKind::Luxemburg => s.powf(1.0 / p),
            // min_kappa (1 + s kappa^p)/kappa, attained at
            // kappa = ((p-1) s)^{-1/p}; the limit kappa -> inf for p = 1.
            NormKind::Orlicz => {
                if p == 1.0 {
                    s
                } else {
                    (p / (p - 1.0)) * ((p - 1.0) * s).powf(1.0 / p)
                }
            }
        });
    }
    match kind {
        NormKind::Luxemburg => luxemburg_bisect_pairs(family, pairs),
        NormKind::Orlicz => amemiya_pairs(family, pairs),
    }
}

/// Generic Luxemburg route: bracket the unit-modular level by doubling and
/// halving, then bisect (geometric midpoints) to relative width
/// [`NORM_SEARCH_REL`]. Returns the feasible (upper) end of the bracket, so
/// `modular(f, norm) <= 1` always holds for the result.
pub fn luxemburg_norm_bisect(family: &OrliczFamily, spec: &Spectrum) -> Result<f64> {
    family.check_window(spec)?;
    let pairs = spec.support();
    if pairs.is_empty() {
        return Ok(0.0);
    }
    luxemburg_bisect_pairs(family, &pairs)
}

fn offending_index(family: &OrliczFamily, pairs: &[(i64, f64)], a: f64) -> i64 {
    pairs
        .iter()
        .map(|&(k, m)| (k, family.eval(k, m / a)))
        .max_by(|x, y| x.1.total_cmp(&y.1))
        .map(|(k, _)| k)
        .unwrap_or(0)
}

fn luxemburg_bisect_pairs(family: &OrliczFamily, pairs: &[(i64, f64)]) -> Result<f64> {
    // Feasible side: grow a until the modular drops to 1.
    let mut hi = 1.0;
    let mut steps = 0;
    while modular_pairs(family, pairs, hi) > 1.0 {
        hi *= 2.0;
        steps += 1;
        if steps > SEARCH_ITER_CAP {
            return Err(Error::NonConvergence(format!(
                "modular stayed above 1 out to a = {hi:.3e}; index k = {} dominates",
                offending_index(family, pairs, hi)
            )));
        }
    }
    // Infeasible side: shrink until the modular exceeds 1.
    let mut lo = hi;
    let mut steps = 0;
    loop {
        let cand = lo / 2.0;
        let m = modular_pairs(family, pairs, cand);
        if m > 1.0 {
            lo = cand;
            break;
        }
        lo = cand;
        hi = cand;
        steps += 1;
        if steps > SEARCH_ITER_CAP {
            if m == 0.0 {
                // Weights vanish on the support; the infimum is genuinely 0.
                return Ok(0.0);
            }
            return Err(Error::NonConvergence(format!(
                "modular stayed at or below 1 down to a = {cand:.3e}; index k = {} dominates",
                offending_index(family, pairs, cand)
            )));
        }
    }
    for _ in 0..SEARCH_ITER_CAP {
        if hi - lo <= NORM_SEARCH_REL * hi {
            break;
        }
        let mid = (lo * hi).sqrt();
        if modular_pairs(family, pairs, mid) <= 1.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Generic Orlicz route: minimize `g(t) = e^{-t} (1 + modular at kappa = e^t)`
/// by bracket expansion plus golden-section over `t = ln kappa`.
pub fn orlicz_norm_amemiya(family: &OrliczFamily, spec: &Spectrum) -> Result<f64> {
    family.check_window(spec)?;
    let pairs = spec.support();
    if pairs.is_empty() {
        return Ok(0.0);
    }
    amemiya_pairs(family, &pairs)
}

fn amemiya_pairs(family: &OrliczFamily, pairs: &[(i64, f64)]) -> Result<f64> {
    let g = |t: f64| -> f64 {
        let kappa = t.exp();
        if kappa == 0.0 || !kappa.is_finite() {
            return f64::INFINITY;
        }
        let mut sum = 1.0;
        for &(k, m) in pairs {
            sum += family.eval(k, kappa * m);
            if !sum.is_finite() {
                return f64::INFINITY;
            }
        }
        sum / kappa
    };

    // Center the initial bracket where kappa * max|c| = 1.
    let m_max = pairs.iter().map(|&(_, m)| m).fold(0.0, f64::max);
    let t0 = -m_max.ln();
    let (mut a, mut m, mut b) = (t0 - 1.0, t0, t0 + 1.0);
    let (mut ga, mut gm, mut gb) = (g(a), g(m), g(b));
    let mut step = 1.0;
    let mut expansions = 0;
    while gb < gm {
        a = m;
        ga = gm;
        m = b;
        gm = gb;
        step *= 2.0;
        b = m + step;
        gb = g(b);
        expansions += 1;
        if expansions > SEARCH_ITER_CAP {
            return Err(Error::NonConvergence(
                "Amemiya objective kept decreasing as kappa grew".into(),
            ));
        }
    }
    step = 1.0;
    let mut expansions = 0;
    while ga < gm {
        b = m;
        m = a;
        gm = ga;
        step *= 2.0;
        a = m - step;
        ga = g(a);
        expansions += 1;
        if expansions > SEARCH_ITER_CAP {
            return Err(Error::NonConvergence(
                "Amemiya objective kept decreasing as kappa shrank".into(),
            ));
        }
    }
    let (_, best) = golden_min(g, a, b, NORM_SEARCH_REL, SEARCH_ITER_CAP);
    Ok(best.min(gm))
}

/// Value of a Young conjugate, with infinity as an explicit marker rather
/// than a float overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConjugateValue {
    Finite(f64),
    Infinite,
}

impl ConjugateValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, ConjugateValue::Finite(_))
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            ConjugateValue::Finite(v) => Some(*v),
            ConjugateValue::Infinite => None,
        }
    }
}

/// Young conjugate `conj(M_k)(v) = sup_{u >= 0} (u v - M_k(u))` for `v >= 0`.
///
/// Power entries use closed forms:
/// `M(u) = w u^p, p > 1  =>  conj(v) = v^q / (q (p w)^{q-1})` with `1/p + 1/q = 1`;
/// `M(u) = w u  =>  0 for v <= w, +inf beyond`. Custom entries fall back to a
/// concave maximization with an adaptive bracket; an objective still rising at
/// astronomically large `u` reports `Infinite`.
pub fn conjugate(family: &OrliczFamily, k: i64, v: f64) -> Result<ConjugateValue> {
    if v < 0.0 || !v.is_finite() {
        return Err(Error::Domain(format!(
            "conjugate argument must be finite and >= 0, got {v}"
        )));
    }
    if k.unsigned_abs() as usize > family.window() {
        return Err(Error::Config(format!(
            "index {k} outside family window {}",
            family.window()
        )));
    }
    match family.entry(k) {
        OrliczEntry::Power {
            exponent: p,
            weight: w,
        } => {
            if *w == 0.0 {
                return Ok(if v == 0.0 {
                    ConjugateValue::Finite(0.0)
                } else {
                    ConjugateValue::Infinite
                });
            }
            if *p == 1.0 {
                return Ok(if v <= *w {
                    ConjugateValue::Finite(0.0)
                } else {
                    ConjugateValue::Infinite
                });
            }
            let q = p / (p - 1.0);
            Ok(ConjugateValue::Finite(
                pow_nonneg(v, q) / (q * (p * w).powf(q - 1.0)),
            ))
        }
        OrliczEntry::Custom(f) => {
            if v == 0.0 {
                return Ok(ConjugateValue::Finite(0.0));
            }
            let obj = |u: f64| u * v - f(u);
            let mut hi = 1.0;
            loop {
                if obj(2.0 * hi) <= obj(hi) {
                    break;
                }
                hi *= 2.0;
                if hi > 1e150 {
                    return Ok(ConjugateValue::Infinite);
                }
            }
            let (_, best) =
                crate::numeric::golden_max(obj, 0.0, 2.0 * hi, 2.0 * hi * 1e-13, SEARCH_ITER_CAP);
            Ok(ConjugateValue::Finite(best.max(0.0)))
        }
    }
}

/// Outcome of testing a dual vector `lambda` against a coefficient window.
#[derive(Debug, Clone, Copy)]
pub struct DualFeasibility {
    /// `sum_k conj(M_k)(lambda_k) <= 1 + DUAL_FEAS_SLACK`?
    pub feasible: bool,
    /// The constraint sum (infinite when any conjugate is).
    pub constraint: f64,
    /// `sum_k lambda_k |c_k|` — a certified lower bound for the Orlicz norm
    /// whenever `feasible` holds.
    pub value: f64,
}

/// Evaluate the dual objective `sum lambda_k |c_k|` and its feasibility.
/// Infeasible vectors come back flagged, never silently.
///
/// `lambda` is indexed like the spectrum, low-to-high over its window.
pub fn dual_feasible_value(
    family: &OrliczFamily,
    spec: &Spectrum,
    lambda: &[f64],
) -> Result<DualFeasibility> {
    family.check_window(spec)?;
    if lambda.len() != 2 * spec.window() + 1 {
        return Err(Error::Config(format!(
            "lambda has {} entries but the window {} needs {}",
            lambda.len(),
            spec.window(),
            2 * spec.window() + 1
        )));
    }
    if let Some(i) = lambda.iter().position(|l| !l.is_finite() || *l < 0.0) {
        return Err(Error::Domain(format!(
            "lambda entry at position {i} must be finite and >= 0"
        )));
    }
    let w = spec.window() as i64;
    let mut constraint = 0.0f64;
    let mut value = 0.0f64;
    for (i, &l) in lambda.iter().enumerate() {
        let k = i as i64 - w;
        value += l * spec.abs(k);
        if constraint.is_finite() {
            match conjugate(family, k, l)? {
                ConjugateValue::Finite(c) => constraint += c,
                ConjugateValue::Infinite => constraint = f64::INFINITY,
            }
        }
    }
    Ok(DualFeasibility {
        feasible: constraint <= 1.0 + DUAL_FEAS_SLACK,
        constraint,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn spec_of(window: usize, vals: &[(i64, f64)]) -> Spectrum {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * window + 1];
        for &(k, v) in vals {
            coeffs[(k + window as i64) as usize] = Complex64::new(v, 0.0);
        }
        Spectrum::from_coeffs(window, coeffs).unwrap()
    }

    /// M_0(u) = u, M_{+-1}(u) = u^2.
    fn linear_square_family() -> OrliczFamily {
        OrliczFamily::from_entries(
            1,
            vec![
                OrliczEntry::power(2.0, 1.0).unwrap(),
                OrliczEntry::power(1.0, 1.0).unwrap(),
                OrliczEntry::power(2.0, 1.0).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn modular_mixed_example() {
        // c_0 = c_1 = 1, a = 2: 1/2 + 1/4 = 0.75.
        let f = linear_square_family();
        let s = spec_of(1, &[(0, 1.0), (1, 1.0)]);
        assert!((modular(&f, &s, 2.0).unwrap() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn modular_rejects_nonpositive_scale() {
        let f = linear_square_family();
        let s = spec_of(1, &[(0, 1.0)]);
        assert!(matches!(modular(&f, &s, 0.0), Err(Error::Domain(_))));
        assert!(matches!(modular(&f, &s, -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn luxemburg_golden_ratio_instance() {
        // 1/a + 1/a^2 = 1 at the golden ratio.
        let f = linear_square_family();
        let s = spec_of(1, &[(0, 1.0), (1, 1.0)]);
        let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
        let got = luxemburg_norm_bisect(&f, &s).unwrap();
        assert!((got - golden).abs() < 1e-9 * golden);
    }

    #[test]
    fn zero_sequence_short_circuits() {
        let f = linear_square_family();
        let s = Spectrum::zeros(1);
        assert_eq!(luxemburg_norm(&f, &s).unwrap(), 0.0);
        assert_eq!(orlicz_norm(&f, &s).unwrap(), 0.0);
    }

    #[test]
    fn window_mismatch_is_config_error() {
        let f = OrliczFamily::lp(1, 2.0).unwrap();
        let s = Spectrum::zeros(3);
        assert!(matches!(luxemburg_norm(&f, &s), Err(Error::Config(_))));
    }

    #[test]
    fn lp_family_luxemburg_matches_lp_norm() {
        let f = OrliczFamily::lp(2, 2.0).unwrap();
        let s = spec_of(2, &[(-2, 3.0), (0, 4.0)]);
        assert!((luxemburg_norm(&f, &s).unwrap() - 5.0).abs() < 1e-12);
        // Same value out of the generic bisection route.
        assert!((luxemburg_norm_bisect(&f, &s).unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn scaled_power_orlicz_matches_lp_norm() {
        for p in [1.0, 1.5, 2.0, 3.0] {
            let f = OrliczFamily::scaled_power(2, p).unwrap();
            let s = spec_of(2, &[(-1, 1.0), (1, 2.0), (2, 0.5)]);
            let lp = (1.0f64.powf(p) + 2.0f64.powf(p) + 0.5f64.powf(p)).powf(1.0 / p);
            let closed = orlicz_norm(&f, &s).unwrap();
            let searched = orlicz_norm_amemiya(&f, &s).unwrap();
            assert!((closed - lp).abs() < 1e-10 * lp, "closed form p={p}");
            assert!((searched - lp).abs() < 1e-8 * lp, "search route p={p}");
        }
    }

    #[test]
    fn scaled_power_weight_for_p2_is_quarter() {
        assert!((scaled_power_weight(2.0).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn conjugate_closed_forms() {
        // M(u) = u^2/4 -> conj(v) = v^2.
        let f = OrliczFamily::power(0, 2.0, 0.25).unwrap();
        let got = conjugate(&f, 0, 3.0).unwrap().finite().unwrap();
        assert!((got - 9.0).abs() < 1e-12, "got {got}");
        // Young pair p = 3: M(u) = u^3/3 -> conj(v) = v^{3/2}/(3/2).
        let f = OrliczFamily::power(0, 3.0, 1.0 / 3.0).unwrap();
        let got = conjugate(&f, 0, 1.0).unwrap().finite().unwrap();
        assert!((got - 2.0 / 3.0).abs() < 1e-12);
        // Linear M(u) = u: 0 up to v = 1, infinite beyond.
        let f = OrliczFamily::lp(0, 1.0).unwrap();
        assert_eq!(conjugate(&f, 0, 1.0).unwrap(), ConjugateValue::Finite(0.0));
        assert_eq!(
            conjugate(&f, 0, 1.0 + 1e-12).unwrap(),
            ConjugateValue::Infinite
        );
    }

    #[test]
    fn conjugate_custom_matches_closed_form() {
        // Same u^2/4 supplied as a callable; numeric route within 1e-8.
        let f = OrliczFamily::broadcast(0, OrliczEntry::Custom(Arc::new(|u: f64| u * u / 4.0)));
        let got = conjugate(&f, 0, 3.0).unwrap().finite().unwrap();
        assert!((got - 9.0).abs() < 1e-7);
    }

    #[test]
    fn conjugate_rejects_negative_argument() {
        let f = OrliczFamily::lp(0, 2.0).unwrap();
        assert!(matches!(conjugate(&f, 0, -0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn dual_feasible_value_l2_pair() {
        // l_2-normalized lambda = (3/5, 4/5) against |c| = (3, 4) in the
        // scaled-power p=2 family: sum conj = (9+16)/25 = 1, value = 5.
        let f = OrliczFamily::scaled_power(1, 2.0).unwrap();
        let s = spec_of(1, &[(0, 3.0), (1, 4.0)]);
        let got = dual_feasible_value(&f, &s, &[0.0, 0.6, 0.8]).unwrap();
        assert!(got.feasible);
        assert!((got.constraint - 1.0).abs() < 1e-12);
        assert!((got.value - 5.0).abs() < 1e-12);
        // And the Orlicz norm agrees with the attained dual value.
        assert!((orlicz_norm(&f, &s).unwrap() - 5.0).abs() < 1e-10);
    }

    #[test]
    fn dual_infeasible_is_flagged_not_silent() {
        let f = OrliczFamily::lp(0, 1.0).unwrap();
        let s = spec_of(0, &[(0, 2.0)]);
        let got = dual_feasible_value(&f, &s, &[1.5]).unwrap();
        assert!(!got.feasible);
        assert!(got.constraint.is_infinite());
    }

    #[test]
    fn sandwich_on_a_mixed_family() {
        let f = linear_square_family();
        let s = spec_of(1, &[(-1, 0.3), (0, 1.7), (1, 0.9)]);
        let lux = luxemburg_norm(&f, &s).unwrap();
        let orl = orlicz_norm(&f, &s).unwrap();
        assert!(lux <= orl * (1.0 + 1e-9));
        assert!(orl <= 2.0 * lux * (1.0 + 1e-9));
    }
}
