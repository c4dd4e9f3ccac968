use std::fmt;

use gjms_exact::{int, Rational, Ring};
use num_traits::Zero;
use thiserror::Error;

use crate::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not the unit of the coefficient ring")]
    NonUnitConstant,
    #[error("coefficients do not commute; square root is undefined here")]
    NonCommuting,
    #[error("a series needs at least one coefficient")]
    Empty,
}

/// `Σ_{k=0}^{K} c_k r^{2k}`, exact up to and including `r^{2K}`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    /// Takes `coeffs[k]` as the coefficient of `r^{2k}`; the truncation order
    /// is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<C>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `template`-shaped zero with truncation order `order`.
    pub fn zero_like(template: &C, order: usize) -> Self {
        TruncatedSeries { coeffs: vec![template.zero_like(); order + 1] }
    }

    pub fn one_like(template: &C, order: usize) -> Self {
        let mut out = Self::zero_like(template, order);
        out.coeffs[0] = template.one_like();
        out
    }

    /// Builds `Σ coeffs[k] r^{2k}` padded with zeros up to `order`.
    pub fn from_prefix(template: &C, coeffs: &[C], order: usize) -> Self {
        let mut out = Self::zero_like(template, order);
        for (k, c) in coeffs.iter().enumerate().take(order + 1) {
            out.coeffs[k] = c.clone();
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `r^{2k}`; panics beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries { coeffs: (0..=order).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, C::plus)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, C::minus)
    }

    pub fn neg(&self) -> Self {
        self.map(C::negated)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|c| c.scaled(factor))
    }

    /// Multiplies every coefficient on the left by a ring element.
    pub fn scale_by(&self, factor: &C) -> Self {
        self.map(|c| factor.times(c))
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![self.coeffs[0].zero_like(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.vanishes() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::vanishes)
    }

    /// Multiplicative inverse; the constant term must be the ring's one.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstant);
        }
        let mut inv: Vec<C> = vec![self.coeffs[0].one_like()];
        for k in 1..=self.order() {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=k {
                acc = acc.plus(&self.coeffs[i].times(&inv[k - i]));
            }
            inv.push(acc.negated());
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Square root with constant term one. Requires the coefficients to
    /// commute pairwise (automatic for scalars, checked for matrices).
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstant);
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.coeffs[i + 1..].iter().any(|b| !a.commutes_with(b)) {
                return Err(SeriesError::NonCommuting);
            }
        }
        let half = Rational::new(1.into(), 2.into());
        let mut root: Vec<C> = vec![self.coeffs[0].one_like()];
        for k in 1..=self.order() {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc.minus(&root[i].times(&root[k - i]));
            }
            root.push(acc.scaled(&half));
        }
        Ok(TruncatedSeries { coeffs: root })
    }

    /// `∂²/∂r²`: `r^{2k} -> 2k(2k-1) r^{2k-2}`; the order drops by one.
    pub fn deriv2(&self) -> Self {
        self.shift_down(|k| int(2 * k as i64 * (2 * k as i64 - 1)))
    }

    /// `(1/r) ∂/∂r`: `r^{2k} -> 2k r^{2k-2}`; the order drops by one.
    pub fn inv_r_deriv(&self) -> Self {
        self.shift_down(|k| int(2 * k as i64))
    }

    fn shift_down(&self, factor: impl Fn(usize) -> Rational) -> Self {
        assert!(self.order() >= 1, "derivative needs truncation order >= 1");
        TruncatedSeries { coeffs: (1..=self.order()).map(|k| self.coeffs[k].scaled(&factor(k))).collect() }
    }

    /// `∂²/∂r² - (n-1)(1/r)∂/∂r` with `n` a ring element (formal or numeric).
    pub fn radial_op(&self, n: &C) -> Self {
        let n_minus_one = n.minus(&n.one_like());
        self.deriv2().sub(&self.inv_r_deriv().scale_by(&n_minus_one))
    }

    /// Composes with `r^2 -> factor·r^2`.
    pub fn rescale_variable(&self, factor: &Rational) -> Self {
        let mut power = Rational::from_integer(1.into());
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.scaled(&power));
            power *= factor;
        }
        TruncatedSeries { coeffs }
    }
}

/// `det(1 - (r²/2) P)` up to `r^{2K}`, from the power traces `tr(P^k)` by
/// Newton's identities: with `e_k` the elementary symmetric functions of the
/// eigenvalues, `k e_k = Σ_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i` and the
/// coefficient of `r^{2k}` is `(-1/2)^k e_k`.
pub fn det_series(matrix: &Matrix, order: usize) -> TruncatedSeries<Rational> {
    let traces = matrix.power_traces(order);
    let mut elementary = vec![Rational::from_integer(1.into())];
    for k in 1..=order {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &elementary[k - i] * &traces[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        elementary.push(acc / int(k as i64));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut scale = Rational::from_integer(1.into());
    let minus_half = Rational::new((-1).into(), 2.into());
    for e in elementary {
        coeffs.push(e * &scale);
        scale *= &minus_half;
    }
    TruncatedSeries { coeffs }
}

impl<C: Ring> Ring for TruncatedSeries<C> {
    fn zero_like(&self) -> Self {
        TruncatedSeries::zero_like(&self.coeffs[0], self.order())
    }
    fn one_like(&self) -> Self {
        TruncatedSeries::one_like(&self.coeffs[0], self.order())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, factor: &Rational) -> Self {
        self.scale(factor)
    }
    fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for TruncatedSeries<C> {
    /// `c_0 + (c_1) r^2 + ... + O(r^{2K+2})`, skipping zero coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.vanishes() {
                continue;
            }
            parts.push(match k {
                0 => c.to_string(),
                1 => format!("({c}) r^2"),
                _ => format!("({c}) r^{}", 2 * k),
            });
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "{} + O(r^{})", parts.join(" + "), 2 * self.order() + 2)
    }
}
