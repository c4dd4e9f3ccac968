//! Truncated even power series.
//!
//! A [`TruncatedSeries`] stores `c_0, ..., c_K` for `Σ c_k r^{2k}` over any
//! [`Ring`](gjms_exact::Ring): rationals, polynomials in formal parameters,
//! or square rational matrices. [`BiSeries`] is the bivariate analogue in
//! `r^2` and `s^2`. Only even series are needed, so odd powers never occur.

mod bi;
mod matrix;
mod uni;

pub use bi::BiSeries;
pub use matrix::Matrix;
pub use uni::{det_series, SeriesError, TruncatedSeries};
