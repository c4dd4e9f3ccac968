//! Residue-family polynomials `D_2N` in the shifted variable
//! `μ = λ + n/2 - N`.
//!
//! [`build_direct`] assembles `D_2N` coefficient by coefficient from the
//! Taylor data of `eta`, `tau` and the quadratic quotients of `pi`;
//! [`build_closed`] sums the three closed families (pure P, pure Pbar,
//! mixed). The two are independent constructions and serve as each
//! other's oracle. The checks in [`checks`] cover the factorizations at the
//! `2N` special points, the reflection symmetry and the first two
//! coefficients.

mod build;
pub mod checks;
pub mod scalar;

pub use build::{build_closed, build_direct, family, normalizer};
