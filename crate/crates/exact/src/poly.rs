use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::{ExactError, Rational};

/// A named indeterminate such as `n`, `lambda`, `Delta`, `mu` or `x`.
///
/// Names are interned once, so a `Var` is a cheap copyable handle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(&'static str);

impl Var {
    pub fn new(name: &str) -> Var {
        static NAMES: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
        let mut names = NAMES.get_or_init(Default::default).lock().unwrap();
        if let Some(existing) = names.get(name) {
            return Var(existing);
        }
        let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
        names.insert(leaked);
        Var(leaked)
    }

    pub fn name(&self) -> &'static str {
        self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// Product of powers of distinct variables, kept sorted by variable name.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(var: Var, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(var, exp)])
        }
    }

    pub fn exponent(&self, var: Var) -> u32 {
        self.0.iter().find(|(v, _)| *v == var).map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits off the power of `var`, returning `(exponent, rest)`.
    fn split(&self, var: Var) -> (u32, Monomial) {
        let mut exp = 0;
        let rest = self
            .0
            .iter()
            .filter(|(v, e)| {
                if *v == var {
                    exp = *e;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        (exp, Monomial(rest))
    }
}

/// Assignment of rational values to variables.
#[derive(Clone, Default, Debug, PartialEq)]
pub struct EvalPoint(BTreeMap<Var, Rational>);

impl EvalPoint {
    pub fn new() -> EvalPoint {
        EvalPoint::default()
    }

    pub fn with(mut self, var: Var, value: Rational) -> EvalPoint {
        self.0.insert(var, value);
        self
    }

    pub fn set(&mut self, var: Var, value: Rational) {
        self.0.insert(var, value);
    }

    pub fn get(&self, var: Var) -> Option<&Rational> {
        self.0.get(&var)
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// No zero coefficients are ever stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(value: Rational) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), value);
        p
    }

    pub fn var(var: Var) -> Poly {
        Poly::monomial(var, 1, Rational::one())
    }

    /// Shorthand for `Poly::var(Var::new(name))`.
    pub fn named(name: &str) -> Poly {
        Poly::var(Var::new(name))
    }

    pub fn monomial(var: Var, exp: u32, coeff: Rational) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(var, exp), coeff);
        p
    }

    /// Builds `Σ coeffs[k]·var^k`.
    pub fn from_coeffs(var: Var, coeffs: &[Rational]) -> Poly {
        let mut p = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(var, k as u32), c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff·mono` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// The constant term, or `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| *v)).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Coefficient of `var^exp`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: Var, exp: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(var);
            if e == exp {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Coefficients in `var`, lowest power first, each a polynomial in the
    /// remaining variables.
    pub fn coeffs_in(&self, var: Var) -> Vec<Poly> {
        let Some(deg) = self.degree_in(var) else {
            return Vec::new();
        };
        let mut out = vec![Poly::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split(var);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Rational coefficients of a univariate polynomial, lowest power first.
    ///
    /// Panics if a variable other than `var` occurs.
    pub fn univariate_coeffs(&self, var: Var) -> Vec<Rational> {
        self.coeffs_in(var)
            .into_iter()
            .map(|c| c.as_constant().expect("polynomial is not univariate"))
            .collect()
    }

    /// Full evaluation; every variable that occurs must be assigned.
    pub fn eval(&self, point: &EvalPoint) -> Result<Rational, ExactError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.0 {
                let value = point.get(*v).ok_or_else(|| ExactError::Unassigned(v.name().to_string()))?;
                term *= num_traits::pow(value.clone(), *e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes the assigned variables and keeps the others formal.
    pub fn eval_partial(&self, point: &EvalPoint) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in &m.0 {
                match point.get(*v) {
                    Some(value) => coeff *= num_traits::pow(value.clone(), *e as usize),
                    None => rest.push((*v, *e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Replaces `var` by the polynomial `value`.
    pub fn substitute(&self, var: Var, value: &Poly) -> Poly {
        let coeffs = self.coeffs_in(var);
        let mut out = Poly::zero();
        for c in coeffs.iter().rev() {
            out = &(&out * value) + c;
        }
        out
    }

    pub fn derivative(&self, var: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(var);
            if e > 0 {
                let mono = rest.mul(&Monomial::var(var, e - 1));
                out.add_term(mono, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Exact quotient by `(var − root)`, treating the polynomial as
    /// univariate in `var` with polynomial coefficients.
    pub fn div_exact_linear(&self, var: Var, root: &Rational) -> Result<Poly, ExactError> {
        let coeffs = self.coeffs_in(var);
        if coeffs.is_empty() {
            return Ok(Poly::zero());
        }
        let root_poly = Poly::constant(root.clone());
        // Synthetic division from the top coefficient down.
        let mut quotient = vec![Poly::zero(); coeffs.len().saturating_sub(1)];
        let mut carry = Poly::zero();
        for k in (0..coeffs.len()).rev() {
            let value = &coeffs[k] + &(&carry * &root_poly);
            if k == 0 {
                if !value.is_zero() {
                    return Err(ExactError::NotARoot(root.clone()));
                }
            } else {
                quotient[k - 1] = value.clone();
            }
            carry = value;
        }
        let mut out = Poly::zero();
        for (k, c) in quotient.into_iter().enumerate() {
            out = &out + &(&c * &Poly::monomial(var, k as u32, Rational::one()));
        }
        Ok(out)
    }
}

impl From<Rational> for Poly {
    fn from(value: Rational) -> Poly {
        Poly::constant(value)
    }
}

impl From<i64> for Poly {
    fn from(value: i64) -> Poly {
        Poly::constant(crate::int(value))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Highest total degree first, e.g. `n^2*lambda - 1/2*n + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.total_degree().cmp(&a.total_degree()).then_with(|| b.cmp(a)));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    #[test]
    fn display_is_readable() {
        let n = Poly::named("n");
        let lambda = Poly::named("lambda");
        let p = &(&(&n * &n) * &lambda) - &n.scale(&rat(1, 2));
        assert_eq!(p.to_string(), "lambda*n^2 - 1/2*n");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!((-Poly::from(3)).to_string(), "-3");
    }

    #[test]
    fn multivariate_linear_division() {
        let n = Var::new("n");
        let lam = Poly::named("lambda");
        // (n − 4)(n·λ + 2) divided by (n − 4)
        let factor = &Poly::var(n) - &Poly::from(4);
        let other = &(&Poly::var(n) * &lam) + &Poly::from(2);
        let q = (&factor * &other).div_exact_linear(n, &int(4)).unwrap();
        assert_eq!(q, other);
        assert!(other.div_exact_linear(n, &int(4)).is_err());
    }

    #[test]
    fn eval_requires_all_variables() {
        let p = &Poly::named("n") * &Poly::named("mu");
        let point = EvalPoint::new().with(Var::new("n"), int(2));
        assert_eq!(p.eval(&point), Err(ExactError::Unassigned("mu".into())));
        assert_eq!(p.eval_partial(&point), Poly::named("mu").scale(&int(2)));
    }
}
