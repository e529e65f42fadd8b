//! Scalar search kernels and small fitting helpers shared by the norm,
//! modulus, and classification code.

/// 1/phi, the golden-section shrink factor.
const INVPHI: f64 = 0.618_033_988_749_894_9;

/// Minimize a unimodal function on `[a, b]` by golden-section search.
///
/// `tol` is an absolute bracket-width target; the loop also stops after
/// `cap` shrinks. Returns the best probed `(x, f(x))`.
pub fn golden_min<F: FnMut(f64) -> f64>(
    mut f: F,
    mut a: f64,
    mut b: f64,
    tol: f64,
    cap: usize,
) -> (f64, f64) {
    debug_assert!(a <= b);
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..cap {
        if (b - a) <= tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Maximize a unimodal function on `[a, b]`; see [`golden_min`].
pub fn golden_max<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    cap: usize,
) -> (f64, f64) {
    let (x, neg) = golden_min(|t| -f(t), a, b, tol, cap);
    (x, -neg)
}

/// Least-squares slope of `ys` against `xs`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_min_finds_parabola_vertex() {
        let (x, fx) = golden_min(|t| (t - 1.25) * (t - 1.25) + 3.0, -10.0, 10.0, 1e-12, 200);
        assert!((x - 1.25).abs() < 1e-6);
        assert!((fx - 3.0).abs() < 1e-12);
    }

    #[test]
    fn golden_max_finds_sine_peak() {
        let (x, fx) = golden_max(|t| t.sin(), 0.0, std::f64::consts::PI, 1e-12, 200);
        assert!((x - std::f64::consts::FRAC_PI_2).abs() < 1e-6);
        assert!((fx - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fit_slope_recovers_line() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys = [5.0, 3.0, 1.0, -1.0];
        assert!((fit_slope(&xs, &ys) + 2.0).abs() < 1e-12);
    }
}
