//! The univariate polynomials behind the residue-family construction.
//!
//! All of them live in the variable `x` (see [`x`]). The product
//!
//! ```text
//! pi_{2N}(x) = x(x-1)...(x-N+1) * (x+1/2)(x+3/2)...(x+N-1/2)
//! ```
//!
//! has the integer roots `0..N-1` and the half-integer roots
//! `-1/2..-N+1/2`; `eta` and `tau` are its quotients by the linear factors
//! at `0` and `-1/2`, and `b_N` is the falling factorial.

use num_traits::{One, Zero};

use crate::{int, rat, ExactError, Poly, Rational, Var};

/// The default indeterminate of this module.
pub fn x() -> Var {
    Var::new("x")
}

fn linear(root: &Rational) -> Poly {
    Poly::from_coeffs(x(), &[-root.clone(), Rational::one()])
}

fn product_of_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Poly {
    roots.into_iter().fold(Poly::one(), |acc, r| &acc * &linear(r))
}

/// Integer roots `0, 1, ..., N-1`.
pub fn integer_roots(order: u32) -> Vec<Rational> {
    (0..order as i64).map(int).collect()
}

/// Half-integer roots `-1/2, -3/2, ..., -N+1/2`.
pub fn half_integer_roots(order: u32) -> Vec<Rational> {
    (0..order as i64).map(|k| rat(-(2 * k + 1), 2)).collect()
}

/// `pi_{2N}`; the order zero case is the constant 1.
pub fn build_pi(order: u32) -> Poly {
    let roots: Vec<Rational> = integer_roots(order).into_iter().chain(half_integer_roots(order)).collect();
    product_of_roots(&roots)
}

/// `eta_{2N}(x) = pi_{2N}(x) / x`.
pub fn build_eta(order: u32) -> Poly {
    assert!(order >= 1, "eta is defined for orders N >= 1");
    exact_divide_by_linear(&build_pi(order), &Rational::zero()).expect("0 is a root of pi")
}

/// `tau_{2N}(x) = pi_{2N}(x) / (x + 1/2)`.
pub fn build_tau(order: u32) -> Poly {
    assert!(order >= 1, "tau is defined for orders N >= 1");
    exact_divide_by_linear(&build_pi(order), &rat(-1, 2)).expect("-1/2 is a root of pi")
}

/// Falling factorial `b_N(x) = x(x-1)...(x-N+1)`.
pub fn build_falling(order: u32) -> Poly {
    product_of_roots(&integer_roots(order))
}

/// Exact quotient `p(x) / (x - root)`; errors when `root` is not a root.
pub fn exact_divide_by_linear(p: &Poly, root: &Rational) -> Result<Poly, ExactError> {
    p.div_exact_linear(x(), root)
}

/// Evaluates a univariate polynomial in `x` at a rational point.
pub fn eval_at(p: &Poly, value: &Rational) -> Rational {
    horner(&p.univariate_coeffs(x()), value)
}

/// Horner evaluation of `Σ coeffs[k] t^k`.
pub fn horner(coeffs: &[Rational], value: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * value + c)
}

/// Derivative in `x`.
pub fn derivative(p: &Poly) -> Poly {
    p.derivative(x())
}

/// Coefficients lowest power first, padded to `len` entries.
pub fn coeffs_padded(p: &Poly, len: usize) -> Vec<Rational> {
    let mut coeffs = p.univariate_coeffs(x());
    assert!(coeffs.len() <= len, "polynomial degree exceeds requested length");
    coeffs.resize(len, Rational::zero());
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_two_is_quadratic() {
        assert_eq!(build_pi(1).univariate_coeffs(x()), vec![int(0), rat(1, 2), int(1)]);
        assert_eq!(build_pi(0), Poly::one());
    }

    #[test]
    fn falling_factorial_three() {
        let by_hand = &(&Poly::var(x()) * &linear(&int(1))) * &linear(&int(2));
        assert_eq!(build_falling(3), by_hand);
    }

    #[test]
    fn division_errors_off_root() {
        assert_eq!(exact_divide_by_linear(&build_pi(1), &int(1)), Err(ExactError::NotARoot(int(1))));
    }
}
