//! Exact wall-and-chamber computations for Bridgeland stability on P³ along
//! the slice β = 0, for twisted Chern characters `(−R, 0, D, 0)`.
//!
//! Everything here is exact rational arithmetic; floating point appears only in
//! [`slope::TiltSlope::to_f64`] and [`Rational::to_f64`], which exist for display.

pub mod asymptotics;
pub mod chern;
pub mod error;
pub mod instanton;
pub mod quiver;
pub mod rational;
pub mod slope;
pub mod walls;

pub use asymptotics::{
    check_quotient, check_sub_equal_slope, check_subsheaf_qe, lambda_diff_expansion, threshold,
    vert_theorem_report, AsymptoticSign, ConditionReport, ConditionStatus, LeadingOrder, Mode,
    TheoremInput, TheoremReport, ValidityInterval,
};
pub use chern::{bogomolov, dual_shift2, integrality_beta0, shift, twist, ChernCharacter};
pub use error::{Error, Result};
pub use instanton::{gieseker_outer_check, instanton_char, kernel_char, monad_crosscheck, monad_wall_alpha2};
pub use quiver::{
    chern_from_dims, dim_vector, innermost_chamber, region_verdict, theta, DimensionVector,
    InnermostChamber, Region, RegionVerdict, ThetaWeight,
};
pub use rational::{q, Rational};
pub use slope::{
    central_charge, delta, lambda, lambda_at, mu, nu, q_form, q_form_at, q_form_closed, rho, rho_at,
    SlicePoint, SlopeValue, TiltSlope,
};
pub use walls::{
    degenerate_c0, dual_family, enumerate, enumerate_with, max_alpha0, max_alpha0_of, wall_curve_samples,
    CandidateStatus, DegenerateCandidate, EnumerateOptions, Enumeration, HomVanishing, RankGroup,
    WallCandidate, WallFamily,
};

/// Library version, reported in every wall report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
