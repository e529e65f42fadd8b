//! Pinned numeric tolerances, in one place so tests and the suite agree with
//! the implementation about what "equal" means.
//!
//! Each constant notes why that particular magnitude and not a stricter one.

/// Relative tolerance for the Luxemburg bracketing bisection and the
/// golden-section search over log kappa in the Amemiya form. Both searches
/// halve (or golden-shrink) a bracket, so 1e-13 costs ~45-65 iterations and
/// keeps reported norms honest to about twelve displayed digits.
pub const NORM_SEARCH_REL: f64 = 1e-13;

/// Iteration cap for every bracketing/bisection/golden-section loop. A healthy
/// search finishes in well under 100 iterations; hitting the cap means the
/// objective is not behaving (reported as non-convergence, never silently).
pub const SEARCH_ITER_CAP: usize = 200;

/// Slack allowed when testing dual feasibility `sum conj(M_k)(lambda_k) <= 1`.
/// Conjugates of power entries are closed-form (exact); the slack only absorbs
/// accumulation error across terms.
pub const DUAL_FEAS_SLACK: f64 = 1e-9;

/// Direct estimate: PASS iff `rhs - e_n >= -DIRECT_SLACK_REL * rhs`. The
/// right-hand side is built from a certified *lower* bound of the modulus, so
/// a tiny negative slack can be legitimate; anything past 1e-4 of the RHS is a
/// real violation.
pub const DIRECT_SLACK_REL: f64 = 1e-4;

/// Inverse estimate: both sides are computed from the same coefficient data,
/// so only rounding separates them; 1e-9 relative is generous for f64.
pub const INVERSE_SLACK_REL: f64 = 1e-9;

/// Condition (B_alpha) verdict: BOUNDED iff `R(n_max) / R(n_max/4) < 1.05`.
/// A convergent R ratio drifts by O(1/n); a log-divergent one exceeds 1.3 at
/// n_max = 256, so 1.05 separates the two regimes with margin on both sides.
pub const CONDITION_B_RATIO: f64 = 1.05;

/// Class-membership growth test: a ratio sequence counts as bounded when the
/// mean of its last quarter stays below 1.2x the mean of its first quarter.
/// Genuine growth over the [8,128] range shows up as a factor >= 1.5.
pub const GROWTH_RATIO: f64 = 1.2;

/// Log-factor flag: raised when the fitted decay exponent sits within 0.05 of
/// alpha. Fit noise on clean power data stays under 0.03; distinct rate
/// classes differ by at least 0.2.
pub const LOG_FLAG_BAND: f64 = 0.05;

/// Slope agreement band for the rate table (fitted vs. predicted exponents).
/// Covers the sqrt(log) drift of the modulus in the boundary class, which
/// probes put at ~0.10 over the fitted n-range.
pub const SLOPE_BAND: f64 = 0.15;

/// Relative threshold below which an I-functional value counts as vanished
/// (the measure is degenerate and certifies no constant).
pub const I_DEGENERATE_REL: f64 = 1e-10;
