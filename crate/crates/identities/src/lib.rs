//! The building-block operators `M_2N`, the inversion formula, the
//! subset-sum lemma behind it, and the polynomial `pi_2N(μ)` written in
//! terms of GJMS compositions.

mod lemma1;
mod operators;
mod pi_poly;

pub use lemma1::{lemma1_closed_form, lemma1_sum, random_instance, Lemma1Error, Lemma1Instance};
pub use operators::{build_m, build_m_bar, expand_inversion, inversion_residual, m_product, p_word};
pub use pi_poly::{build_pi_poly, pi_poly_subleading_prediction};
