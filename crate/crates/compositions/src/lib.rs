//! Integer compositions and the two coefficient families attached to them.
//!
//! A composition of `N` is an ordered list of positive integers summing to
//! `N`. The coefficients `m_I` express the building-block operators through
//! compositions of GJMS operators; the coefficients `n_I` express the
//! inverse relation.

pub mod known;

use std::fmt;

use gjms_exact::{binomial, factorial, int, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("a composition needs at least one entry")]
    Empty,
    #[error("composition entries must be positive, got {0:?}")]
    NonPositiveEntry(Vec<u32>),
    #[error("compositions are enumerated for orders N >= 1")]
    ZeroOrder,
}

/// Nonempty ordered list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Result<Composition, CompositionError> {
        if entries.is_empty() {
            return Err(CompositionError::Empty);
        }
        if entries.contains(&0) {
            return Err(CompositionError::NonPositiveEntry(entries));
        }
        Ok(Composition(entries))
    }

    /// The one-part composition `(order)`.
    pub fn single(order: u32) -> Composition {
        Composition::new(vec![order]).expect("order must be positive")
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `|I|`, the sum of the entries.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts `r`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("compositions are nonempty")
    }

    /// The inverse composition `(I_r, ..., I_1)`.
    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        Composition(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Appends a final part `a`, giving `(I, a)`.
    pub fn push(&self, part: u32) -> Composition {
        let mut entries = self.0.clone();
        entries.push(part);
        Composition::new(entries).expect("parts must be positive")
    }

    /// Splits into `(I_1..I_j)` and `(I_{j+1}..I_r)` for `1 <= j < r`.
    pub fn split_at(&self, j: usize) -> (Composition, Composition) {
        assert!(j >= 1 && j < self.len(), "split point out of range");
        (Composition(self.0[..j].to_vec()), Composition(self.0[j..].to_vec()))
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = CompositionError;
    fn try_from(entries: Vec<u32>) -> Result<Self, Self::Error> {
        Composition::new(entries)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Vec<u32> {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `2^{N-1}` compositions of `order`, in lexicographic order of entries.
pub fn enumerate(order: u32) -> Result<Vec<Composition>, CompositionError> {
    if order == 0 {
        return Err(CompositionError::ZeroOrder);
    }
    let mut out = Vec::with_capacity(1 << (order - 1));
    let mut stack = Vec::new();
    extend(order, &mut stack, &mut out);
    Ok(out)
}

fn extend(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition(prefix.clone()));
        return;
    }
    for part in 1..=remaining {
        prefix.push(part);
        extend(remaining - part, prefix, out);
        prefix.pop();
    }
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn binom(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(n as u64, k as u64))
}

/// `m_I = -(-1)^r |I|!(|I|-1)! Π 1/(I_j!(I_j-1)!) Π_{j<r} 1/(I_j+I_{j+1})`.
pub fn mcoeff(comp: &Composition) -> Rational {
    let size = comp.size();
    let mut value = fact(size) * fact(size - 1);
    for &part in comp.entries() {
        value /= fact(part) * fact(part - 1);
    }
    for pair in comp.entries().windows(2) {
        value /= int((pair[0] + pair[1]) as i64);
    }
    if comp.len().is_multiple_of(2) {
        -value
    } else {
        value
    }
}

/// `n_I = Π_j C(I_1+..+I_j - 1, I_j - 1) · C(I_j+..+I_r - 1, I_j - 1)`.
pub fn ncoeff(comp: &Composition) -> Rational {
    let parts = comp.entries();
    let mut value = Rational::one();
    let mut head = 0;
    let mut tail = comp.size();
    for &part in parts {
        head += part;
        value *= binom(head - 1, part - 1) * binom(tail - 1, part - 1);
        tail -= part;
    }
    value
}

/// The reduced-fraction form
/// `n_I = (|I|-1)!^2 Π 1/(I_j-1)!^2 Π_{j<r} 1/((I_1+..+I_j)(I_{j+1}+..+I_r))`.
pub fn ncoeff_reduced(comp: &Composition) -> Rational {
    let size = comp.size();
    let mut value = fact(size - 1) * fact(size - 1);
    for &part in comp.entries() {
        value /= fact(part - 1) * fact(part - 1);
    }
    let mut head = 0;
    for &part in &comp.entries()[..comp.len() - 1] {
        head += part;
        value /= int(head as i64) * int((size - head) as i64);
    }
    value
}

/// Both sides of the quadratic relation on the first entry,
/// `-(N - I_1) m_I = Σ_{j<r} C(N-1, S_j)^2 S_j m_{(I_1..I_j)} m_{(I_{j+1}..I_r)}`
/// with `S_j = I_1 + .. + I_j`.
pub fn first_entry_relation(comp: &Composition) -> (Rational, Rational) {
    let size = comp.size();
    let lhs = -int((size - comp.first()) as i64) * mcoeff(comp);
    let mut rhs = Rational::zero();
    let mut head = 0;
    for j in 1..comp.len() {
        head += comp.entries()[j - 1];
        let (left, right) = comp.split_at(j);
        let weight = binom(size - 1, head);
        rhs += &weight * &weight * int(head as i64) * mcoeff(&left) * mcoeff(&right);
    }
    (lhs, rhs)
}

/// Mirror relation on the last entry,
/// `-(N - J_r) m_J = Σ_{j<r} C(N-1, T_j)^2 T_j m_{(J_1..J_j)} m_{(J_{j+1}..J_r)}`
/// with `T_j = J_{j+1} + .. + J_r`.
pub fn last_entry_relation(comp: &Composition) -> (Rational, Rational) {
    let size = comp.size();
    let lhs = -int((size - comp.last()) as i64) * mcoeff(comp);
    let mut rhs = Rational::zero();
    let mut head = 0;
    for j in 1..comp.len() {
        head += comp.entries()[j - 1];
        let tail = size - head;
        let (left, right) = comp.split_at(j);
        let weight = binom(size - 1, tail);
        rhs += &weight * &weight * int(tail as i64) * mcoeff(&left) * mcoeff(&right);
    }
    (lhs, rhs)
}
