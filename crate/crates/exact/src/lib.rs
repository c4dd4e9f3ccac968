//! Exact scalar arithmetic and a small commutative polynomial toolkit.
//!
//! Everything here is exact: rationals are arbitrary precision and reduced,
//! polynomials are sparse maps from monomials to rationals. There is no
//! floating point anywhere in this crate.

mod error;
mod poly;
mod rational;
mod ring;
pub mod univariate;

pub use error::ExactError;
pub use poly::{EvalPoint, Monomial, Poly, Var};
pub use rational::{binomial, factorial, int, parse_rational, rat, Rational};
pub use ring::Ring;
