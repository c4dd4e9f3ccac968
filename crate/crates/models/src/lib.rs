//! Concrete metric models in which the GJMS machinery becomes commutative.
//!
//! [`EinsteinModel`] treats operators as polynomials in a formal Laplacian
//! `Delta` with coefficients in the formal dimension `n` and the Einstein
//! constant `lambda`. [`SchoutenModel`] fixes a constant symmetric Schouten
//! matrix of a locally conformally flat metric, so every derivative term
//! vanishes and only power traces and the formal `n` remain.
//!
//! Both feed a [`ConstantData`] (the values `mu_2N = M_2N(1)` and the
//! holographic coefficients `w_2k`) into the shared Q-curvature routines.

mod bar;
mod comparison;
mod constant;
mod double;
mod einstein;
mod error;
mod param;
mod round;
mod schouten;

pub use bar::bar_series_checks;
pub use comparison::Comparison;
pub use constant::ConstantData;
pub use double::double_metric_checks;
pub use einstein::{sphere_eigenvalue_oracle, EinsteinModel};
pub use error::ModelError;
pub use param::{dimension, laplacian, lambda, Param};
pub use round::{sum_round_sides, sum_round_check};
pub use schouten::{einstein_agreement, SchoutenModel};
