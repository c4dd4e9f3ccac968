//! Free noncommutative algebra of two-sided operator words.
//!
//! A [`Word`] `(I, J)` stands for `P_{2I_1}...P_{2I_r} i* Pbar_{2J_1}...Pbar_{2J_s}`,
//! where either side may be empty; the empty/empty word is the bare
//! restriction `i*`, which plays the role of the identity. [`NCSum`] is a
//! finite linear combination of words and [`MuPoly`] a polynomial in the
//! spectral variable with [`NCSum`] coefficients.

mod mupoly;
mod sum;
mod word;

pub use mupoly::MuPoly;
pub use sum::NCSum;
pub use word::{Word, WordError};
