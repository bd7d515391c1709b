use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::Composition;
use crate::error::{Error, Result};

/// A finite word over the ordered alphabet `1 < 2 < ... < s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<u8>,
    s: usize,
}

impl Word {
    pub fn new(letters: Vec<u8>, s: usize) -> Result<Self> {
        if s == 0 || s > u8::MAX as usize {
            return Err(Error::input(format!("alphabet size {s} out of range 1..=255")));
        }
        if let Some((k, &a)) = letters
            .iter()
            .enumerate()
            .find(|(_, &a)| a == 0 || a as usize > s)
        {
            return Err(Error::input(format!(
                "letter {a} at position {} outside 1..={s}",
                k + 1
            )));
        }
        Ok(Word { letters, s })
    }

    /// Parses a word written as adjacent digits, e.g. `12323`.
    pub fn from_digits(text: &str, s: usize) -> Result<Self> {
        let letters = text
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::input(format!("`{ch}` is not a digit")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters, s)
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Occurrence counts `(|w|_1, ..., |w|_s)`.
    pub fn parikh(&self) -> Composition {
        Composition::new(letter_counts(&self.letters, self.s)).expect("s >= 1")
    }
}

pub(crate) fn letter_counts(letters: &[u8], s: usize) -> Vec<u32> {
    let mut counts = vec![0u32; s];
    for &a in letters {
        counts[a as usize - 1] += 1;
    }
    counts
}

/// The Parikh composition of `w` over an alphabet of size `s`.
pub fn parikh_word(w: &Word, s: usize) -> Result<Composition> {
    if let Some(&a) = w.letters.iter().find(|&&a| a as usize > s) {
        return Err(Error::input(format!("letter {a} outside 1..={s}")));
    }
    Ok(Composition::new(letter_counts(&w.letters, s)).expect("s >= 1"))
}

/// Compares letter slices of equal length over the same alphabet:
/// Parikh compositions first (composition order), then lexicographically.
pub(crate) fn cmp_letters(a: &[u8], b: &[u8], s: usize) -> Ordering {
    let ca = letter_counts(a, s);
    let cb = letter_counts(b, s);
    // equal lengths, so the composition order is inverse lexicographic
    cb.cmp(&ca).then_with(|| a.cmp(b))
}

/// Compares two words under the Parikh composition order.
pub fn cmp_word(w: &Word, v: &Word) -> Result<Ordering> {
    if w.s != v.s {
        return Err(Error::input(format!(
            "words over alphabets of size {} and {}",
            w.s, v.s
        )));
    }
    if w.len() != v.len() {
        return Err(Error::input(format!(
            "words of lengths {} and {}",
            w.len(),
            v.len()
        )));
    }
    Ok(cmp_letters(&w.letters, &v.letters, w.s))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

pub(crate) fn write_letters(f: &mut impl fmt::Write, letters: &[u8]) -> fmt::Result {
    let compact = letters.iter().all(|&a| a < 10);
    for (k, a) in letters.iter().enumerate() {
        if k > 0 && !compact {
            f.write_char('.')?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}
