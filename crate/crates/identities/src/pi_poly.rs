use gjms_compositions::{enumerate, mcoeff};
use gjms_exact::univariate::{build_falling, coeffs_padded, exact_divide_by_linear};
use gjms_exact::{binomial, factorial, int, Rational};
use gjms_ncalg::{MuPoly, NCSum, Word};

use crate::build_m;

/// `pi_{2N}(μ) = 1/(N-1)! Σ_{|I|=N} b_N(μ)/(μ - (N - I_1)) m_I P_{2I}`,
/// with every quotient carried out exactly.
pub fn build_pi_poly(order: u32) -> MuPoly {
    assert!(order >= 1, "order must be positive");
    let falling = build_falling(order);
    let norm = Rational::from_integer(factorial(order as u64 - 1));
    let mut out = MuPoly::zero();
    for comp in enumerate(order).expect("order is positive") {
        let root = int((order - comp.first()) as i64);
        let quotient = exact_divide_by_linear(&falling, &root).expect("N - I_1 is a root of b_N");
        let scalars: Vec<Rational> = coeffs_padded(&quotient, order as usize).into_iter().map(|c| c / &norm).collect();
        out.add_scalar_times(&scalars, &NCSum::term(Word::left(&comp), mcoeff(&comp)));
    }
    out
}

/// Predicted value of `(N-2)!` times the `μ^{N-2}` coefficient of
/// `pi_{2N}(μ)`:
///
/// ```text
/// -(N/2) M_{2N} - Σ_{k=1}^{N-1} C(N-2, N-1-k) C(N-1, N-1-k) M_{2k} M_{2N-2k}
/// ```
pub fn pi_poly_subleading_prediction(order: u32) -> NCSum {
    assert!(order >= 2, "the sub-leading coefficient needs N >= 2");
    let n = order as u64;
    let mut out = build_m(order).scale_rational(&-Rational::new(n.into(), 2.into()));
    for k in 1..order {
        let j = (order - 1 - k) as u64;
        let weight = Rational::from_integer(binomial(n - 2, j) * binomial(n - 1, j));
        let product = build_m(k).compose(&build_m(order - k)).expect("P-words always compose");
        out.add_scaled(&product, &-weight);
    }
    out
}
