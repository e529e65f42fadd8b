//! Sequence-space approximation theory over Fourier coefficients.
//!
//! A function enters as its two-sided coefficient window; a space is a
//! per-coefficient family of Orlicz-type entries. On top of that sit the
//! two norms ([`orlicz`]), best approximation by degree ([`approx`]),
//! generalized smoothness moduli ([`smoothness`]), Jackson-type constants
//! with their extremal measures and near-extremal functions ([`jackson`]),
//! and the inverse estimates with the constructive class description
//! ([`inverse`]).
//!
//! Everything downstream of a [`Spectrum`] and an [`OrliczFamily`] is
//! deterministic: identical inputs give identical bytes out, which the
//! command-line front end relies on for reproducible reports.

pub mod approx;
pub mod error;
pub mod inverse;
pub mod jackson;
pub mod numeric;
pub mod orlicz;
mod simplex;
pub mod smoothness;
pub mod spectrum;
pub mod tol;

pub use approx::{best_approx, best_approx_sequence};
pub use error::{Error, Result};
pub use inverse::{
    check_condition_b, class_membership, classify_rates, inverse_bound, inverse_bound_alpha,
    BoundednessVerdict, ConditionB, InverseReport, Majorant, MajorantReport, MembershipReport,
    MembershipVerdict, RatePoint, RateReport, SideProfile,
};
pub use jackson::{
    i_functional, ratio_upper_bound, sharp_constant_lp, sharpness_search, verify_direct,
    ConstantSource, DirectCheck, DirectForm, DirectReport, DiscreteMeasure, IFunctionalValue,
    LpDiagnostics, MeasureBound, SharpConstant, SharpnessResult,
};
pub use orlicz::{
    conjugate, dual_feasible_value, luxemburg_norm, modular, orlicz_norm, sequence_norm,
    ConjugateValue, DualFeasibility, NormKind, OrliczEntry, OrliczFamily,
};
pub use smoothness::{generalized_difference, modulus, ModulusValue, Multiplier, MultiplierReport};
pub use spectrum::{CoefficientRule, Spectrum};
