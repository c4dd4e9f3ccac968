use gjms_compositions::{enumerate, mcoeff, Composition};
use gjms_exact::univariate::{build_eta, build_pi, build_tau, coeffs_padded, exact_divide_by_linear};
use gjms_exact::{factorial, int, rat, Rational};
use gjms_ncalg::{MuPoly, NCSum, Word};
use num_traits::{One, Zero};

use crate::scalar::divide_by_quadratic;

/// `(-1)^N 2^{2N-1} / (2N-1)!`, the common prefactor of all three families.
pub fn normalizer(order: u32) -> Rational {
    let sign = if order.is_multiple_of(2) { int(1) } else { int(-1) };
    let two = Rational::from_integer(num_traits::pow(2.into(), 2 * order as usize - 1));
    sign * two / Rational::from_integer(factorial(2 * order as u64 - 1))
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

/// `N!(N-1)! / (|I|!(|I|-1)! |J|!(|J|-1)!)`.
fn mixed_weight(order: u32, left: u32, right: u32) -> Rational {
    fact(order) * fact(order - 1) / (fact(left) * fact(left - 1) * fact(right) * fact(right - 1))
}

/// All splittings `|I| + |J| = N` with both sides nonempty.
fn mixed_pairs(order: u32) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for left_size in 1..order {
        for left in enumerate(left_size).expect("positive") {
            for right in enumerate(order - left_size).expect("positive") {
                out.push((left.clone(), right));
            }
        }
    }
    out
}

fn word_sum(word: Word, coeff: Rational) -> NCSum {
    NCSum::term(word, coeff)
}

/// Closed form: with `c` the [`normalizer`],
///
/// ```text
/// D_2N(μ) = - c Σ_{|I|=N} pi(μ)/(μ - (N - I_1)) m_I P_{2I}
///           + c Σ_{|J|=N} pi(μ)/(μ + N + 1/2 - J_r) m_J i* Pbar_{2J}
///           - c Σ_{|I|+|J|=N} N!(N-1)!/(|I|!(|I|-1)!|J|!(|J|-1)!)
///                 · pi(μ)/((μ - (N - I_1))(μ + N + 1/2 - J_r)) m_I m_J P_{2I} i* Pbar_{2J}
/// ```
///
/// with every quotient taken exactly.
pub fn build_closed(order: u32) -> MuPoly {
    assert!(order >= 1, "order must be positive");
    let len = 2 * order as usize;
    let pi = build_pi(order);
    let c = normalizer(order);
    let left_root = |comp: &Composition| int((order - comp.first()) as i64);
    let right_root = |comp: &Composition| Rational::from_integer(comp.last().into()) - int(order as i64) - rat(1, 2);
    let mut out = MuPoly::zero();
    for comp in enumerate(order).expect("positive") {
        let m = mcoeff(&comp);
        let q = exact_divide_by_linear(&pi, &left_root(&comp)).expect("N - I_1 is a root of pi");
        out.add_scalar_times(&coeffs_padded(&q, len), &word_sum(Word::left(&comp), -&c * &m));
        let q = exact_divide_by_linear(&pi, &right_root(&comp)).expect("J_r - N - 1/2 is a root of pi");
        out.add_scalar_times(&coeffs_padded(&q, len), &word_sum(Word::right(&comp), &c * &m));
    }
    for (left, right) in mixed_pairs(order) {
        let weight = mixed_weight(order, left.size(), right.size());
        let coeff = -&c * weight * mcoeff(&left) * mcoeff(&right);
        let q = exact_divide_by_linear(&pi, &left_root(&left)).expect("root");
        let q = exact_divide_by_linear(&q, &right_root(&right)).expect("distinct root");
        out.add_scalar_times(&coeffs_padded(&q, len), &word_sum(Word::new(Some(&left), Some(&right)), coeff));
    }
    out
}

/// Direct form `D_2N(μ) = Σ_{k=1}^{2N} d^{(k)} μ^{2N-k}`, with the
/// multiplicity of each word in `d^{(k)}` given by truncated Horner sums of
/// `eta` (pure P), of `tau` (pure Pbar) and by the coefficients of
/// `pi(x)/((x - N + a)(x + N - b + 1/2))` (mixed).
pub fn build_direct(order: u32) -> MuPoly {
    assert!(order >= 1, "order must be positive");
    let len = 2 * order as usize;
    let eta = coeffs_padded(&build_eta(order), len);
    let tau = coeffs_padded(&build_tau(order), len);
    let pi = coeffs_padded(&build_pi(order), len + 1);
    let c = normalizer(order);
    let mut out = MuPoly::zero();

    for comp in enumerate(order).expect("positive") {
        let m = mcoeff(&comp);

        // Pure P: word (a, I) with t = |I|.
        let t = int((order - comp.first()) as i64);
        let mut scalars = vec![Rational::zero(); len];
        for k in 1..=len {
            let mut s = Rational::zero();
            for j in 0..k {
                s += &eta[len - j - 1] * pow(&t, k - 1 - j);
            }
            scalars[len - k] = s;
        }
        out.add_scalar_times(&scalars, &word_sum(Word::left(&comp), -&c * &m));

        // Pure Pbar: word (I, b) with y = -|I| - 1/2.
        let y = -int((order - comp.last()) as i64) - rat(1, 2);
        let mut scalars = vec![Rational::zero(); len];
        for k in 1..=len {
            let mut s = Rational::zero();
            for j in 0..k {
                s += &tau[len - j - 1] * pow(&y, k - 1 - j);
            }
            for j in 0..k.saturating_sub(1) {
                s += &tau[len - j - 1] * pow(&y, k - 2 - j) * rat(1, 2);
            }
            scalars[len - k] = s;
        }
        out.add_scalar_times(&scalars, &word_sum(Word::right(&comp), &c * &m));
    }

    for (left, right) in mixed_pairs(order) {
        let a = int(left.first() as i64);
        let b = int(right.last() as i64);
        let n = int(order as i64);
        // (x - N + a)(x + N - b + 1/2) = x^2 + p x + q
        let r1 = &n - &a;
        let r2 = &b - &n - rat(1, 2);
        let quadratic = [&r1 * &r2, -(&r1 + &r2), Rational::one()];
        let quotient = divide_by_quadratic(&pi, &quadratic);
        let weight = mixed_weight(order, left.size(), right.size());
        let base = -&c * weight * mcoeff(&left) * mcoeff(&right);
        out.add_scalar_times(&quotient, &word_sum(Word::new(Some(&left), Some(&right)), base));
    }
    out
}

fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// `D_0 = i*` and `D_2N` for `N >= 1` (closed form).
pub fn family(order: u32) -> MuPoly {
    if order == 0 {
        MuPoly::constant(NCSum::term(Word::identity(), Rational::one()))
    } else {
        build_closed(order)
    }
}
