use gjms_exact::{int, Poly, Rational};

use crate::constant::{fact, half_n_minus, pow2};

/// `C(n/2, k)` with formal `n`.
fn half_n_binomial(k: u32) -> Poly {
    let mut out = Poly::one();
    for i in 0..k {
        out = &out * &half_n_minus(i as i64);
    }
    out.scale(&(int(1) / fact(k)))
}

fn binomial(n: u32, k: u32) -> Rational {
    fact(n) / (fact(k) * fact(n - k))
}

/// Both sides of the round-sphere summation identity
/// `-sum_{k<N} (2^k C(N-1,k) k!)^2 (n/2)(n/2-1)(N-k)!(N-k-1)! (-1)^k C(n/2,k) 2^{-2k}
///  = (-1)^N (n/2-N)(N-1)!N! C(n/2,N)`.
pub fn sum_round_sides(order: u32) -> (Poly, Poly) {
    let prefactor = &half_n_minus(0) * &half_n_minus(1);
    let mut lhs = Poly::zero();
    for k in 0..order {
        let root = pow2(k) * binomial(order - 1, k) * fact(k);
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let weight = -(&root * &root) * fact(order - k) * fact(order - k - 1) * sign / pow2(2 * k);
        lhs = &lhs + &(&prefactor * &half_n_binomial(k)).scale(&weight);
    }
    let sign = if order.is_multiple_of(2) { int(1) } else { int(-1) };
    let rhs = (&half_n_minus(order as i64) * &half_n_binomial(order)).scale(&(sign * fact(order - 1) * fact(order)));
    (lhs, rhs)
}

pub fn sum_round_check(order: u32) -> crate::Comparison {
    let (lhs, rhs) = sum_round_sides(order);
    crate::Comparison::at("round.summation", order, &lhs, &rhs)
}
