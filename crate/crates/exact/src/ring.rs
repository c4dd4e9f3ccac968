use num_traits::{One, Zero};

use crate::{Poly, Rational};

/// A commutative-or-not ring with exact rational scalars.
///
/// Zero and one are produced "like" an existing element so that ring
/// elements carrying a shape (square matrices) can take part too.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, factor: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Whether `self * other == other * self`; always true for scalars.
    fn commutes_with(&self, _other: &Self) -> bool {
        true
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, factor: &Rational) -> Self {
        self * factor
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn vanishes(&self) -> bool {
        Poly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, factor: &Rational) -> Self {
        Poly::scale(self, factor)
    }
}
