use gjms_exact::{binomial, Rational, Ring};

use crate::{SeriesError, TruncatedSeries};

/// `Σ_{i,j <= K} c_{ij} r^{2i} s^{2j}`, truncated to the box `i, j <= K`.
#[derive(Clone, PartialEq, Debug)]
pub struct BiSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Ring> BiSeries<C> {
    pub fn zero_like(template: &C, order: usize) -> Self {
        BiSeries { order, coeffs: vec![template.zero_like(); (order + 1) * (order + 1)] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.order + 1) + j
    }

    /// Coefficient of `r^{2i} s^{2j}`.
    pub fn coeff(&self, i: usize, j: usize) -> &C {
        &self.coeffs[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: C) {
        let k = self.idx(i, j);
        self.coeffs[k] = value;
    }

    /// The series in `r^2` multiplying `s^{2j}`.
    pub fn s_coefficient(&self, j: usize) -> TruncatedSeries<C> {
        TruncatedSeries::new((0..=self.order).map(|i| self.coeff(i, j).clone()).collect()).expect("nonempty")
    }

    /// The series in `s^2` multiplying `r^{2i}`.
    pub fn r_coefficient(&self, i: usize) -> TruncatedSeries<C> {
        TruncatedSeries::new((0..=self.order).map(|j| self.coeff(i, j).clone()).collect()).expect("nonempty")
    }

    /// `f(r^2)` viewed as a bivariate series.
    pub fn from_r(series: &TruncatedSeries<C>) -> Self {
        let order = series.order();
        let mut out = BiSeries::zero_like(series.coeff(0), order);
        for i in 0..=order {
            out.set(i, 0, series.coeff(i).clone());
        }
        out
    }

    /// `f(s^2)` viewed as a bivariate series.
    pub fn from_s(series: &TruncatedSeries<C>) -> Self {
        let order = series.order();
        let mut out = BiSeries::zero_like(series.coeff(0), order);
        for j in 0..=order {
            out.set(0, j, series.coeff(j).clone());
        }
        out
    }

    /// `f(r^2 + s^2)` on the box `i, j <= order`, by binomial expansion of
    /// each power. Filling the box needs `f` up to `(r^2)^{2 order}`.
    pub fn from_sum(series: &TruncatedSeries<C>, order: usize) -> Self {
        assert!(series.order() >= 2 * order, "f(r^2 + s^2) on a box of order K needs f to order 2K");
        let mut out = BiSeries::zero_like(series.coeff(0), order);
        for k in 0..=2 * order {
            for i in k.saturating_sub(order)..=k.min(order) {
                let weight = Rational::from_integer(binomial(k as u64, i as u64));
                out.set(i, k - i, series.coeff(k).scaled(&weight));
            }
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        assert_eq!(self.order, other.order, "bivariate truncation orders must match");
        BiSeries { order: self.order, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, C::plus)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, C::minus)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        BiSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| c.scaled(factor)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "bivariate truncation orders must match");
        let k = self.order;
        let mut out = BiSeries::zero_like(&self.coeffs[0], k);
        for i1 in 0..=k {
            for j1 in 0..=k {
                let a = self.coeff(i1, j1);
                if a.vanishes() {
                    continue;
                }
                for i2 in 0..=k - i1 {
                    for j2 in 0..=k - j1 {
                        let idx = out.idx(i1 + i2, j1 + j2);
                        out.coeffs[idx] = out.coeffs[idx].plus(&a.times(other.coeff(i2, j2)));
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be the ring's one.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let unit = self.coeff(0, 0);
        if !unit.is_one() {
            return Err(SeriesError::NonUnitConstant);
        }
        let k = self.order;
        let mut inv = BiSeries::zero_like(unit, k);
        inv.set(0, 0, unit.one_like());
        // Total-degree order guarantees all needed entries are known.
        for total in 1..=2 * k {
            for i in total.saturating_sub(k)..=total.min(k) {
                let j = total - i;
                let mut acc = unit.zero_like();
                for i1 in 0..=i {
                    for j1 in 0..=j {
                        if i1 + j1 == 0 {
                            continue;
                        }
                        acc = acc.plus(&self.coeff(i1, j1).times(inv.coeff(i - i1, j - j1)));
                    }
                }
                inv.set(i, j, acc.negated());
            }
        }
        Ok(inv)
    }

    /// Square root with constant term one, for commuting coefficients.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let unit = self.coeff(0, 0);
        if !unit.is_one() {
            return Err(SeriesError::NonUnitConstant);
        }
        for (n, a) in self.coeffs.iter().enumerate() {
            if self.coeffs[n + 1..].iter().any(|b| !a.commutes_with(b)) {
                return Err(SeriesError::NonCommuting);
            }
        }
        let k = self.order;
        let half = Rational::new(1.into(), 2.into());
        let mut root = BiSeries::zero_like(unit, k);
        root.set(0, 0, unit.one_like());
        for total in 1..=2 * k {
            for i in total.saturating_sub(k)..=total.min(k) {
                let j = total - i;
                let mut acc = self.coeff(i, j).clone();
                for i1 in 0..=i {
                    for j1 in 0..=j {
                        let inner = i1 + j1 != 0 && (i - i1) + (j - j1) != 0;
                        if inner {
                            acc = acc.minus(&root.coeff(i1, j1).times(root.coeff(i - i1, j - j1)));
                        }
                    }
                }
                root.set(i, j, acc.scaled(&half));
            }
        }
        Ok(root)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::vanishes)
    }
}
