//! Asymptotic error theory for Gauss–Legendre quadrature of integrands with
//! an interior power or logarithmic singularity.
//!
//! The crate predicts the leading term of the quadrature remainder
//! `R_n[f] = ∫f − Σ ω_j f(x_j)` from the jump of `f` across the vertical
//! branch cut through the singular point, bounds the coefficient of that term
//! in closed form, recommends quadrature sizes that minimise it, and adds the
//! prediction back to the raw quadrature as a correction.
//!
//! Everything here is pure computation and builds without `std`; sweeps,
//! file formats and the command line live in the `singquad` crate.

#![no_std]
#![forbid(unsafe_code)]
// When any crate in the graph links std (tests, or num-traits with `std`),
// std's inherent float methods shadow the `Float` imports.
#![allow(unused_imports)]

extern crate alloc;

mod error;
pub mod corrected;
pub mod gauss;
pub mod integrate;
pub mod legendre;
pub mod oracle;
pub mod predictor;
pub mod singularity;
pub mod special;
pub mod sum;

pub use corrected::{corrected_integral, corrected_integral_with_rule, CorrectedResult};
pub use error::{Error, Result};
pub use gauss::{apply_rule, compute_rule, remainder, QuadratureRule};
pub use legendre::{AsymptoticDomain, ComplexValue, XiCoordinate};
pub use oracle::{exact_integral, split_adaptive, ExactIntegral, IntegralMethod};
pub use predictor::{
    coefficient_bounds, leading_term, log_case_leading, log_envelope, power_case_coefficient,
    power_case_leading, predict, predicted_order, psi0_integral, psi0_solve, recommend_n,
    AffineLine, CoefficientBounds, ErrorPrediction, HigherOrder, LogEnvelope, OrderPrediction,
    PredictorConfig,
};
pub use singularity::{Envelope, Family, GeneralJump, HolderClass, Phase, SingularIntegrand};
