//! Scalar identities about `pi`, `eta` and `tau` used by the factorization
//! argument, each exposed as a pair `(lhs, rhs)` of exact values.

use gjms_exact::univariate::{build_eta, build_pi, build_tau, derivative, eval_at, horner};
use gjms_exact::{factorial, int, rat, Rational};
use num_traits::Zero;

/// Long division of `Σ dividend[k] x^k` by the monic quadratic
/// `quadratic[0] + quadratic[1] x + x^2`; panics on a nonzero remainder.
pub fn divide_by_quadratic(dividend: &[Rational], quadratic: &[Rational; 3]) -> Vec<Rational> {
    assert!(quadratic[2] == int(1), "divisor must be monic");
    let mut rem = dividend.to_vec();
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    if rem.len() < 3 {
        assert!(rem.iter().all(Zero::is_zero), "inexact division");
        return Vec::new();
    }
    let mut quotient = vec![Rational::zero(); rem.len() - 2];
    for k in (2..rem.len()).rev() {
        let lead = rem[k].clone();
        quotient[k - 2] = lead.clone();
        rem[k - 1] -= &lead * &quadratic[1];
        rem[k - 2] -= &lead * &quadratic[0];
        rem[k] = Rational::zero();
    }
    assert!(rem[0].is_zero() && rem[1].is_zero(), "inexact division by quadratic");
    quotient
}

/// `(lo)(lo+1)...(hi)` for `hi - lo` a nonnegative integer; 1 when `hi < lo`.
pub fn stepped_product(hi: &Rational, lo: &Rational) -> Rational {
    let mut acc = int(1);
    let mut t = lo.clone();
    while &t <= hi {
        acc *= &t;
        t += int(1);
    }
    acc
}

fn fact(n: i64) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn sign(exp: i64) -> Rational {
    if exp % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `(2N-j-1/2)...(N-j+1/2)`.
fn long_half_product(order: i64, j: i64) -> Rational {
    stepped_product(&(int(2 * order - j) - rat(1, 2)), &(int(order - j) + rat(1, 2)))
}

/// `(2N-j-1/2)...(N+1/2)`.
fn short_half_product(order: i64, j: i64) -> Rational {
    stepped_product(&(int(2 * order - j) - rat(1, 2)), &(int(order) + rat(1, 2)))
}

/// Both sides of
/// `(2N-j-1/2)...(N-j+1/2) (N-1)!/(2N-1)! = (2N-j-1/2)...(N+1/2) 2^{-2j} (N-j-1)!/(2N-2j-1)!`
/// for `1 <= j < N`.
pub fn final_product_identity(order: i64, j: i64) -> (Rational, Rational) {
    assert!(1 <= j && j < order, "requires 1 <= j < N");
    let lhs = long_half_product(order, j) * fact(order - 1) / fact(2 * order - 1);
    let two = Rational::from_integer(num_traits::pow(2.into(), 2 * j as usize));
    let rhs = short_half_product(order, j) * fact(order - j - 1) / (fact(2 * order - 2 * j - 1) * two);
    (lhs, rhs)
}

/// `pi'_{2N}(N-j)` against `-(-1)^j (N-j)!(j-1)! (2N-j-1/2)...(N-j+1/2)`.
pub fn pi_slope_at_integer_root(order: i64, j: i64) -> (Rational, Rational) {
    let lhs = eval_at(&derivative(&build_pi(order as u32)), &int(order - j));
    let rhs = -sign(j) * fact(order - j) * fact(j - 1) * long_half_product(order, j);
    (lhs, rhs)
}

/// `pi_{2N-2j}(N)` against `N!/j! (2N-j-1/2)...(N+1/2)`.
pub fn lower_pi_at_order(order: i64, j: i64) -> (Rational, Rational) {
    let lhs = eval_at(&build_pi((order - j) as u32), &int(order));
    let rhs = fact(order) / fact(j) * short_half_product(order, j);
    (lhs, rhs)
}

/// `pi'_{2N}(-1/2+j-N)` against `(-1)^j (N-j)!(j-1)! (2N-j-1/2)...(N-j+1/2)`.
pub fn pi_slope_at_half_root(order: i64, j: i64) -> (Rational, Rational) {
    let at = int(j - order) - rat(1, 2);
    let lhs = eval_at(&derivative(&build_pi(order as u32)), &at);
    let rhs = sign(j) * fact(order - j) * fact(j - 1) * long_half_product(order, j);
    (lhs, rhs)
}

/// `pi_{2N-2j}(-1/2-N)` against `N!/j! (2N-j-1/2)...(N+1/2)`.
pub fn lower_pi_at_reflected_order(order: i64, j: i64) -> (Rational, Rational) {
    let lhs = eval_at(&build_pi((order - j) as u32), &(-int(order) - rat(1, 2)));
    let rhs = fact(order) / fact(j) * short_half_product(order, j);
    (lhs, rhs)
}

/// `Σ_{1<=a+b<=2N-1, 1<=a<=2N-1, 0<=b<=2N-2} eta^{(a+b)} x^a y^b` against
/// `x (eta(x) - eta(y))/(x - y)`, for `x != y`.
pub fn eta_double_sum(order: u32, x: &Rational, y: &Rational) -> (Rational, Rational) {
    let eta = build_eta(order).univariate_coeffs(gjms_exact::univariate::x());
    let top = 2 * order as usize - 1;
    let mut lhs = Rational::zero();
    for a in 1..=top {
        for b in 0..top {
            if a + b <= top {
                lhs += &eta[a + b] * pow(x, a) * pow(y, b);
            }
        }
    }
    let rhs = x * (horner(&eta, x) - horner(&eta, y)) / (x - y);
    (lhs, rhs)
}

/// The diagonal `Σ eta^{(a+b)} M^{a+b-1}` (same ranges) against `eta'(M)`.
pub fn eta_diagonal_sum(order: u32, at: i64) -> (Rational, Rational) {
    let eta_poly = build_eta(order);
    let eta = eta_poly.univariate_coeffs(gjms_exact::univariate::x());
    let top = 2 * order as usize - 1;
    let point = int(at);
    let mut lhs = Rational::zero();
    for a in 1..=top {
        for b in 0..top {
            if a + b <= top {
                lhs += &eta[a + b] * pow(&point, a + b - 1);
            }
        }
    }
    (lhs, eval_at(&derivative(&eta_poly), &point))
}

/// `Σ tau^{(a+b)} x^a y^b + 1/2 Σ_{2<=a+b, b>=1} tau^{(a+b)} x^a y^{b-1}`
/// against `(y pi(x) - x pi(y)) / ((x - y) y)`, for `x != y`, `y != 0`.
pub fn tau_double_sum(order: u32, x: &Rational, y: &Rational) -> (Rational, Rational) {
    let tau = build_tau(order).univariate_coeffs(gjms_exact::univariate::x());
    let pi = build_pi(order).univariate_coeffs(gjms_exact::univariate::x());
    let top = 2 * order as usize - 1;
    let mut lhs = Rational::zero();
    for a in 1..=top {
        for b in 0..top {
            if a + b <= top {
                lhs += &tau[a + b] * pow(x, a) * pow(y, b);
            }
            if b >= 1 && a + b >= 2 && a + b <= top {
                lhs += &tau[a + b] * pow(x, a) * pow(y, b - 1) * rat(1, 2);
            }
        }
    }
    let rhs = (y * horner(&pi, x) - x * horner(&pi, y)) / ((x - y) * y);
    (lhs, rhs)
}

fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}
