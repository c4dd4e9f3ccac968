use gjms_compositions::{enumerate, mcoeff, ncoeff, Composition};
use gjms_exact::Rational;
use gjms_ncalg::{NCSum, Word};
use num_traits::One;

/// The single word `P_{2N}` with coefficient one.
pub fn p_word(order: u32) -> NCSum {
    NCSum::term(Word::left(&Composition::single(order)), Rational::one())
}

/// `M_{2N} = Σ_{|I|=N} m_I P_{2I}`.
pub fn build_m(order: u32) -> NCSum {
    let mut out = NCSum::zero();
    for comp in enumerate(order).expect("order must be positive") {
        out.add_term(Word::left(&comp), mcoeff(&comp));
    }
    out
}

/// `Mbar_{2N} = Σ_{|J|=N} m_J i* Pbar_{2J}`, the same sum over Pbar-words.
pub fn build_m_bar(order: u32) -> NCSum {
    build_m(order).swap()
}

/// `M_{2I_1} ∘ ... ∘ M_{2I_r}` expanded in the free algebra.
pub fn m_product(comp: &Composition) -> NCSum {
    comp.entries()
        .iter()
        .map(|&part| build_m(part))
        .reduce(|acc, next| acc.compose(&next).expect("P-words always compose"))
        .expect("compositions are nonempty")
}

/// `Σ_{|I|=N} n_I M_{2I}`, fully expanded into GJMS words.
pub fn expand_inversion(order: u32) -> NCSum {
    let parts: Vec<NCSum> = (1..=order).map(build_m).collect();
    let mut out = NCSum::zero();
    for comp in enumerate(order).expect("order must be positive") {
        let product = comp.entries()[1..].iter().fold(parts[comp.first() as usize - 1].clone(), |acc, &part| {
            acc.compose(&parts[part as usize - 1]).expect("P-words always compose")
        });
        out.add_scaled(&product, &ncoeff(&comp));
    }
    out
}

/// `Σ n_I M_{2I} - P_{2N}`; zero exactly when the inversion formula holds.
pub fn inversion_residual(order: u32) -> NCSum {
    expand_inversion(order).sub(&p_word(order))
}
