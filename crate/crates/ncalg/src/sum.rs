use std::collections::BTreeMap;
use std::fmt;

use gjms_compositions::Composition;
use gjms_exact::{Rational, Ring};
use num_traits::Signed;

use crate::{Word, WordError};

/// Finite linear combination of words with coefficients in a ring.
///
/// Zero coefficients are never stored, so map equality is equality of sums.
#[derive(Clone, PartialEq, Eq)]
pub struct NCSum<C = Rational> {
    terms: BTreeMap<Word, C>,
}

impl<C> Default for NCSum<C> {
    fn default() -> Self {
        NCSum { terms: BTreeMap::new() }
    }
}

impl<C: Ring> NCSum<C> {
    pub fn zero() -> Self {
        NCSum::default()
    }

    pub fn term(word: Word, coeff: C) -> Self {
        let mut out = NCSum::zero();
        out.add_term(word, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Option<&C> {
        self.terms.get(word)
    }

    pub fn add_term(&mut self, word: Word, coeff: C) {
        if coeff.vanishes() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().plus(&coeff);
                if sum.vanishes() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    /// Adds `factor * other` in place.
    pub fn add_scaled(&mut self, other: &Self, factor: &C) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), factor.times(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.negated());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale(&self, factor: &C) -> Self {
        self.map_coeffs(|c| factor.times(c))
    }

    /// Multiplies every coefficient by a rational.
    pub fn scale_rational(&self, factor: &Rational) -> Self {
        self.map_coeffs(|c| c.scaled(factor))
    }

    fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = NCSum::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        let mut out = NCSum::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// `P_{2p} ∘ self`, prepending `prefix` to every P-block.
    pub fn mul_left(&self, prefix: &Composition) -> Self {
        self.map_words(|w| w.mul_left(prefix))
    }

    /// `self ∘ Pbar_{2p}`, appending `suffix` to every Pbar-block.
    pub fn mul_right(&self, suffix: &Composition) -> Self {
        self.map_words(|w| w.mul_right(suffix))
    }

    pub fn adjoint(&self) -> Self {
        self.map_words(Word::adjoint)
    }

    pub fn sigma(&self) -> Self {
        self.map_words(Word::sigma)
    }

    /// The exchange of P- and Pbar-blocks without reversing them.
    pub fn swap(&self) -> Self {
        self.map_words(Word::swap)
    }

    /// Operator product `self ∘ other`, expanded bilinearly.
    pub fn compose(&self, other: &Self) -> Result<Self, WordError> {
        let mut out = NCSum::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.compose(wb)?, ca.times(cb));
            }
        }
        Ok(out)
    }
}

impl<C: Ring + fmt::Display> NCSum<C> {
    /// Operator notation, e.g. `2 P2 P4 + 2 P4 P2`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            // Compound coefficients such as `n - 2` are parenthesized.
            let (negative, magnitude) = if text.contains(' ') {
                (false, format!("({text})"))
            } else if let Some(rest) = text.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, text)
            };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if magnitude != "1" {
                out.push_str(&magnitude);
                out.push(' ');
            }
            out.push_str(&w.to_string());
        }
        out
    }
}

impl NCSum<Rational> {
    /// Words whose coefficient is negative; handy for diagnostics.
    pub fn negative_words(&self) -> Vec<Word> {
        self.terms.iter().filter(|(_, c)| c.is_negative()).map(|(w, _)| w.clone()).collect()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for NCSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for NCSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCSum({})", self.render())
    }
}
