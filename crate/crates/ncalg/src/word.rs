use std::fmt;

use gjms_compositions::Composition;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("cannot compose {0} with {1}: a Pbar-block would precede a P-block")]
    NotComposable(Word, Word),
}

/// Two-sided word `P_{2I} i* Pbar_{2J}` with possibly empty `I` and `J`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    left: Vec<u32>,
    right: Vec<u32>,
}

impl Word {
    /// The bare restriction `i*`.
    pub fn identity() -> Word {
        Word { left: Vec::new(), right: Vec::new() }
    }

    pub fn new(left: Option<&Composition>, right: Option<&Composition>) -> Word {
        let entries = |c: Option<&Composition>| c.map(|c| c.entries().to_vec()).unwrap_or_default();
        Word { left: entries(left), right: entries(right) }
    }

    /// A pure P-word `P_{2I}`.
    pub fn left(comp: &Composition) -> Word {
        Word::new(Some(comp), None)
    }

    /// A pure Pbar-word `i* Pbar_{2J}`.
    pub fn right(comp: &Composition) -> Word {
        Word::new(None, Some(comp))
    }

    /// Builds a word from raw entry lists; zero entries are rejected.
    pub fn from_parts(left: &[u32], right: &[u32]) -> Word {
        assert!(!left.contains(&0) && !right.contains(&0), "word entries must be positive");
        Word { left: left.to_vec(), right: right.to_vec() }
    }

    pub fn left_entries(&self) -> &[u32] {
        &self.left
    }

    pub fn right_entries(&self) -> &[u32] {
        &self.right
    }

    pub fn left_composition(&self) -> Option<Composition> {
        Composition::new(self.left.clone()).ok()
    }

    pub fn right_composition(&self) -> Option<Composition> {
        Composition::new(self.right.clone()).ok()
    }

    pub fn is_identity(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// Total order `|I| + |J|`.
    pub fn order(&self) -> u32 {
        self.left.iter().chain(&self.right).sum()
    }

    /// Prepends `prefix` to the P-block.
    pub fn mul_left(&self, prefix: &Composition) -> Word {
        let mut left = prefix.entries().to_vec();
        left.extend_from_slice(&self.left);
        Word { left, right: self.right.clone() }
    }

    /// Appends `suffix` to the Pbar-block.
    pub fn mul_right(&self, suffix: &Composition) -> Word {
        let mut right = self.right.clone();
        right.extend_from_slice(suffix.entries());
        Word { left: self.left.clone(), right }
    }

    /// Operator composition `self ∘ other`.
    ///
    /// Defined when `self` has no Pbar-block (the P-blocks concatenate) or
    /// `other` has no P-block (the Pbar-blocks concatenate).
    pub fn compose(&self, other: &Word) -> Result<Word, WordError> {
        if self.right.is_empty() {
            let mut left = self.left.clone();
            left.extend_from_slice(&other.left);
            Ok(Word { left, right: other.right.clone() })
        } else if other.left.is_empty() {
            let mut right = self.right.clone();
            right.extend_from_slice(&other.right);
            Ok(Word { left: self.left.clone(), right })
        } else {
            Err(WordError::NotComposable(self.clone(), other.clone()))
        }
    }

    /// Formal adjoint.
    ///
    /// A one-sided word is reversed in place (`P_{2I} -> P_{2I^{-1}}`); a
    /// mixed word `A i* Bbar` goes to `B^{-1} i* Abar^{-1}`.
    pub fn adjoint(&self) -> Word {
        let rev = |v: &[u32]| v.iter().rev().copied().collect::<Vec<_>>();
        if self.left.is_empty() || self.right.is_empty() {
            Word { left: rev(&self.left), right: rev(&self.right) }
        } else {
            Word { left: rev(&self.right), right: rev(&self.left) }
        }
    }

    /// The exchange `(I, J) -> (J^{-1}, I^{-1})` between P- and Pbar-words.
    pub fn sigma(&self) -> Word {
        let rev = |v: &[u32]| v.iter().rev().copied().collect::<Vec<_>>();
        Word { left: rev(&self.right), right: rev(&self.left) }
    }

    /// The exchange without reversal, `(I, J) -> (J, I)`.
    pub fn swap(&self) -> Word {
        Word { left: self.right.clone(), right: self.left.clone() }
    }
}

fn write_block(f: &mut fmt::Formatter<'_>, entries: &[u32], symbol: &str) -> fmt::Result {
    // Runs of equal factors are written as powers: P2^2 P4.
    let mut i = 0;
    let mut first = true;
    while i < entries.len() {
        let mut j = i;
        while j < entries.len() && entries[j] == entries[i] {
            j += 1;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        write!(f, "{symbol}{}", 2 * entries[i])?;
        if j - i > 1 {
            write!(f, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for Word {
    /// `P2 P4`, `i* Pbar2`, `P2 i* Pbar4` or `i*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.left.is_empty(), self.right.is_empty()) {
            (true, true) => f.write_str("i*"),
            (false, true) => write_block(f, &self.left, "P"),
            (true, false) => {
                f.write_str("i* ")?;
                write_block(f, &self.right, "Pbar")
            }
            (false, false) => {
                write_block(f, &self.left, "P")?;
                f.write_str(" i* ")?;
                write_block(f, &self.right, "Pbar")
            }
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
