//! Structural checks on the residue families.

use std::fmt;

use gjms_compositions::Composition;
use gjms_exact::{binomial, factorial, int, rat, Rational};
use gjms_identities::{build_m, build_m_bar};
use gjms_ncalg::{MuPoly, NCSum};
use rayon::prelude::*;

use crate::{family, normalizer};

/// Which of the two evaluation families a factorization belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    /// `D_2N(N - j) = P_{2j} D_{2N-2j}(N)`.
    Left,
    /// `D_2N(j - N - 1/2) = D_{2N-2j}(-N - 1/2) Pbar_{2j}`.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Outcome of one factorization identity; `residual` is `lhs - rhs`.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub order: u32,
    pub j: u32,
    pub side: Side,
    pub residual: NCSum,
}

impl Factorization {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// All `2N` factorization identities of `D_2N`, using `families[k] = D_2k`.
pub fn factorizations_with(order: u32, families: &[MuPoly]) -> Vec<Factorization> {
    let top = &families[order as usize];
    let mut out = Vec::with_capacity(2 * order as usize);
    for j in 1..=order {
        let lower = &families[(order - j) as usize];
        let part = Composition::single(j);
        let n = int(order as i64);

        let lhs = top.eval(&int((order - j) as i64));
        let rhs = lower.eval(&n).mul_left(&part);
        out.push(Factorization { order, j, side: Side::Left, residual: lhs.sub(&rhs) });

        let lhs = top.eval(&(int(j as i64) - &n - rat(1, 2)));
        let rhs = lower.eval(&(-&n - rat(1, 2))).mul_right(&part);
        out.push(Factorization { order, j, side: Side::Right, residual: lhs.sub(&rhs) });
    }
    out
}

/// All factorization identities of `D_2N`.
pub fn check_factorizations(order: u32) -> Vec<Factorization> {
    let families: Vec<MuPoly> = (0..=order).into_par_iter().map(family).collect();
    factorizations_with(order, &families)
}

/// `σ(D_2N(μ)) - D_2N(-μ - 1/2)` with σ reversing both blocks.
pub fn sigma_residual(d: &MuPoly) -> MuPoly {
    d.sigma().sub(&d.reflect())
}

/// The same residual for the variant of σ that does not reverse the blocks.
pub fn swap_residual(d: &MuPoly) -> MuPoly {
    d.swap().sub(&d.reflect())
}

/// Predicted top coefficient `(-1)^{N-1} 2^{2N-1}/(2N-1)! (M_2N - Mbar_2N)`.
pub fn leading_prediction(order: u32) -> NCSum {
    build_m(order).sub(&build_m_bar(order)).scale_rational(&-normalizer(order))
}

/// Predicted value of `(-1)^{N-1} 2^{-(2N-2)} (2N-1)!` times the
/// `μ^{2N-2}` coefficient:
///
/// ```text
/// M + (N-1)(M - Mbar)
///   + 2 Σ_{a=1}^{N-1} a C(N-1,a)^2 [(M_{2N-2a} - Mbar_{2N-2a}) Mbar_{2a} - M_{2a}(M_{2N-2a} - Mbar_{2N-2a})]
/// ```
pub fn subleading_prediction(order: u32) -> NCSum {
    let m = build_m(order);
    let diff = m.sub(&build_m_bar(order));
    let mut out = m.add(&diff.scale_rational(&int(order as i64 - 1)));
    for a in 1..order {
        let weight = Rational::from_integer(binomial(order as u64 - 1, a as u64).pow(2)) * int(2 * a as i64);
        let inner = build_m(order - a).sub(&build_m_bar(order - a));
        let first = inner.compose(&build_m_bar(a)).expect("P-words then Pbar-words compose");
        let second = build_m(a).compose(&inner).expect("P-words compose on the left");
        out.add_scaled(&first.sub(&second), &weight);
    }
    out
}

/// The factor `(-1)^{N-1} 2^{-(2N-2)} (2N-1)!` relating the sub-leading
/// coefficient to [`subleading_prediction`].
pub fn subleading_factor(order: u32) -> Rational {
    let sign = if order % 2 == 1 { int(1) } else { int(-1) };
    let two = Rational::from_integer(num_traits::pow(2.into(), 2 * order as usize - 2));
    sign * Rational::from_integer(factorial(2 * order as u64 - 1)) / two
}
