use gjms_exact::univariate::{
    build_eta, build_falling, build_pi, build_tau, derivative, eval_at, exact_divide_by_linear, x,
};
use gjms_exact::{factorial, int, rat, ExactError, Poly, Rational};
use num_traits::{One, Zero};

fn lin(root: Rational) -> Poly {
    Poly::from_coeffs(x(), &[-root, Rational::one()])
}

/// pi'(0) predicted in closed form: -(-1)^N 2^{-(2N-1)} (2N-1)!.
fn pi_slope_at_zero(order: u32) -> Rational {
    let sign = if order.is_multiple_of(2) { -1 } else { 1 };
    let two_pow = Rational::from_integer(num_bigint::BigInt::from(2).pow(2 * order - 1));
    int(sign) * Rational::from_integer(factorial(2 * order as u64 - 1)) / two_pow
}

#[test]
fn pi_two_and_its_slope() {
    assert_eq!(build_pi(1).univariate_coeffs(x()), vec![int(0), rat(1, 2), int(1)]);
    assert_eq!(eval_at(&derivative(&build_pi(1)), &int(0)), rat(1, 2));
    assert_eq!(eval_at(&derivative(&build_pi(2)), &int(0)), rat(-3, 4));
}

#[test]
fn slope_at_zero_closed_form() {
    for order in 1..=10 {
        assert_eq!(eval_at(&derivative(&build_pi(order)), &int(0)), pi_slope_at_zero(order), "N={order}");
    }
}

#[test]
fn pi_reflection_symmetry() {
    let reflected = Poly::from_coeffs(x(), &[rat(-1, 2), int(-1)]);
    for order in 1..=10 {
        let pi = build_pi(order);
        assert_eq!(pi.substitute(x(), &reflected), pi, "N={order}");
    }
}

#[test]
fn roots_are_exactly_the_expected_ones() {
    for order in 1..=6u32 {
        let pi = build_pi(order);
        assert_eq!(pi.degree_in(x()), Some(2 * order));
        for k in 0..order as i64 {
            assert!(eval_at(&pi, &int(k)).is_zero());
            assert!(eval_at(&pi, &rat(-(2 * k + 1), 2)).is_zero());
        }
        assert!(!eval_at(&pi, &int(order as i64)).is_zero());
        assert!(!eval_at(&pi, &rat(-(2 * order as i64 + 1), 2)).is_zero());
    }
}

#[test]
fn eta_tau_leading_and_subleading() {
    for order in 1..=10u32 {
        let deg = 2 * order as usize - 1;
        let eta = build_eta(order).univariate_coeffs(x());
        let tau = build_tau(order).univariate_coeffs(x());
        assert_eq!(eta.len(), deg + 1);
        assert_eq!(eta[deg], int(1));
        assert_eq!(eta[deg - 1], rat(order as i64, 2));
        assert_eq!(tau[deg], int(1));
        assert_eq!(tau[deg - 1], rat(order as i64 - 1, 2));
    }
    assert_eq!(build_eta(1), Poly::from_coeffs(x(), &[rat(1, 2), int(1)]));
    assert_eq!(build_tau(1), Poly::var(x()));
}

#[test]
fn falling_factorial_by_hand() {
    let by_hand = [int(0), int(1), int(2)].into_iter().fold(Poly::one(), |acc, r| &acc * &lin(r));
    assert_eq!(build_falling(3), by_hand);
}

#[test]
fn linear_division_examples() {
    assert_eq!(
        exact_divide_by_linear(&build_pi(1), &int(0)).unwrap(),
        Poly::from_coeffs(x(), &[rat(1, 2), int(1)])
    );
    let expected = [int(0), int(1), rat(-3, 2)].into_iter().fold(Poly::one(), |acc, r| &acc * &lin(r));
    let quotient = exact_divide_by_linear(&build_pi(2), &rat(-1, 2)).unwrap();
    assert_eq!(quotient, expected);
    assert_eq!(&quotient * &lin(rat(-1, 2)), build_pi(2));
    assert_eq!(exact_divide_by_linear(&build_pi(1), &int(1)), Err(ExactError::NotARoot(int(1))));
}
