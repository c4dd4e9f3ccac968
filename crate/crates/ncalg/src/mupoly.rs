use std::fmt;

use gjms_compositions::Composition;
use gjms_exact::{Rational, Ring};
use num_traits::{One, Zero};

use crate::NCSum;

/// Polynomial `Σ_k coeffs[k] μ^k` with [`NCSum`] coefficients.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has an
/// empty coefficient list and no degree.
#[derive(Clone, PartialEq, Eq)]
pub struct MuPoly<C = Rational> {
    coeffs: Vec<NCSum<C>>,
}

impl<C> Default for MuPoly<C> {
    fn default() -> Self {
        MuPoly { coeffs: Vec::new() }
    }
}

impl<C: Ring> MuPoly<C> {
    pub fn zero() -> Self {
        MuPoly::default()
    }

    pub fn from_coeffs(coeffs: Vec<NCSum<C>>) -> Self {
        let mut out = MuPoly { coeffs };
        out.trim();
        out
    }

    /// The constant polynomial with value `sum`.
    pub fn constant(sum: NCSum<C>) -> Self {
        MuPoly::from_coeffs(vec![sum])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(NCSum::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `μ^power`; zero beyond the degree.
    pub fn coeff(&self, power: usize) -> NCSum<C> {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[NCSum<C>] {
        &self.coeffs
    }

    /// Adds `(Σ_k scalars[k] μ^k) · sum`.
    pub fn add_scalar_times(&mut self, scalars: &[Rational], sum: &NCSum<C>) {
        if self.coeffs.len() < scalars.len() {
            self.coeffs.resize_with(scalars.len(), NCSum::zero);
        }
        for (k, s) in scalars.iter().enumerate() {
            if !s.is_zero() {
                for (w, c) in sum.terms() {
                    self.coeffs[k].add_term(w.clone(), c.scaled(s));
                }
            }
        }
        self.trim();
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        MuPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k).sub(&other.coeff(k))).collect();
        MuPoly::from_coeffs(coeffs)
    }

    pub fn scale_rational(&self, factor: &Rational) -> Self {
        MuPoly::from_coeffs(self.coeffs.iter().map(|c| c.scale_rational(factor)).collect())
    }

    /// Value at a rational point, by Horner's rule.
    pub fn eval(&self, at: &Rational) -> NCSum<C> {
        let mut acc = NCSum::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale_rational(at);
            acc.add_assign(c);
        }
        acc
    }

    /// Substitutes `μ -> slope·μ + shift`.
    pub fn substitute_affine(&self, slope: &Rational, shift: &Rational) -> Self {
        // Horner in the polynomial ring: acc <- acc·(slope μ + shift) + c_k.
        let mut acc: Vec<NCSum<C>> = Vec::new();
        for c in self.coeffs.iter().rev() {
            let mut next = vec![NCSum::zero(); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k + 1].add_assign(&a.scale_rational(slope));
                next[k].add_assign(&a.scale_rational(shift));
            }
            next[0].add_assign(c);
            acc = next;
        }
        MuPoly::from_coeffs(acc)
    }

    pub fn mul_left(&self, prefix: &Composition) -> Self {
        MuPoly::from_coeffs(self.coeffs.iter().map(|c| c.mul_left(prefix)).collect())
    }

    pub fn mul_right(&self, suffix: &Composition) -> Self {
        MuPoly::from_coeffs(self.coeffs.iter().map(|c| c.mul_right(suffix)).collect())
    }

    pub fn sigma(&self) -> Self {
        MuPoly::from_coeffs(self.coeffs.iter().map(NCSum::sigma).collect())
    }

    pub fn swap(&self) -> Self {
        MuPoly::from_coeffs(self.coeffs.iter().map(NCSum::swap).collect())
    }

    /// `μ -> -μ - 1/2`, the reflection fixing the root structure of `pi`.
    pub fn reflect(&self) -> Self {
        let half = Rational::new(One::one(), 2.into());
        self.substitute_affine(&-Rational::one(), &-half)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for MuPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}] mu")?,
                _ => write!(f, "[{c}] mu^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for MuPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MuPoly({self})")
    }
}
