//! Shared fixtures for the criterion benchmarks: one dense spectrum and a few
//! families at a size that makes kernel differences visible without making
//! `cargo bench` a coffee break.

use trigapprox::{CoefficientRule, OrliczEntry, OrliczFamily, Spectrum};

pub const WINDOW: usize = 256;

pub fn dense_spectrum() -> Spectrum {
    Spectrum::from_rule(&CoefficientRule::Geometric { ratio: 0.97 }, WINDOW).unwrap()
}

pub fn l2_family() -> OrliczFamily {
    OrliczFamily::lp(WINDOW, 2.0).unwrap()
}

/// Forces the bisection path: exponent varies with the index, so the uniform
/// closed form does not apply.
pub fn graded_family() -> OrliczFamily {
    let entries = (0..2 * WINDOW + 1)
        .map(|i| {
            let k = (i as i64 - WINDOW as i64).unsigned_abs() as f64;
            OrliczEntry::power(1.0 + k / WINDOW as f64, 1.0).unwrap()
        })
        .collect();
    OrliczFamily::from_entries(WINDOW, entries).unwrap()
}
