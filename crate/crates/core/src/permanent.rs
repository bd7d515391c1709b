//! The permanent of a tableau (the set of diagonal words obtained by
//! permuting its rows) and the Cantorian predicates built on it.
//!
//! Membership of a single word is a perfect-matching question: column `j`
//! must be assigned a distinct row `i` with `a_i^j = w_j`.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::matching::HopcroftKarp;
use crate::model::{Tableau, Word};

/// Permanent membership tester with reusable matching scratch space.
#[derive(Debug, Default, Clone)]
pub struct PermanentTester {
    matcher: HopcroftKarp,
}

impl PermanentTester {
    pub fn new() -> Self {
        Self::default()
    }

    /// True when `letters` is a diagonal word of `t`. `letters.len()` must be `n`.
    pub fn contains(&mut self, t: &Tableau, letters: &[u8]) -> bool {
        let n = t.n();
        self.load(t, letters);
        self.matcher.solve() == n
    }

    /// The rows (0-based, one per column) realizing `letters`, if any.
    pub fn witness(&mut self, t: &Tableau, letters: &[u8]) -> Option<Vec<usize>> {
        let n = t.n();
        self.load(t, letters);
        if self.matcher.solve() != n {
            return None;
        }
        Some(self.matcher.pairs().map(|v| v.expect("perfect")).collect())
    }

    fn load(&mut self, t: &Tableau, letters: &[u8]) {
        let n = t.n();
        debug_assert_eq!(letters.len(), n);
        self.matcher.reset(n, n);
        for (j, &w) in letters.iter().enumerate() {
            for i in 0..n {
                if t.get(i, j) == w {
                    self.matcher.add_edge(j, i);
                }
            }
        }
    }

    /// First distinct row-word lying in the permanent.
    pub fn row_witness(&mut self, t: &Tableau) -> Option<Vec<u8>> {
        t.distinct_rows().into_iter().find(|r| self.contains(t, r))
    }

    /// First distinct column-word lying in the permanent.
    pub fn column_witness(&mut self, t: &Tableau) -> Option<Vec<u8>> {
        t.distinct_columns().into_iter().find(|c| self.contains(t, c))
    }

    pub fn is_cantorian(&mut self, t: &Tableau) -> bool {
        self.row_witness(t).is_none()
    }

    pub fn is_bicantorian(&mut self, t: &Tableau) -> bool {
        self.row_witness(t).is_none() && self.column_witness(t).is_none()
    }
}

fn check_word(t: &Tableau, w: &Word) -> Result<()> {
    if w.len() != t.n() {
        return Err(Error::input(format!(
            "word of length {} against a {}x{} tableau",
            w.len(),
            t.n(),
            t.n()
        )));
    }
    if w.letters().iter().any(|&a| a as usize > t.alphabet_size()) {
        return Err(Error::input(format!(
            "word {w} uses letters outside 1..={}",
            t.alphabet_size()
        )));
    }
    Ok(())
}

/// True iff some permutation `pi` gives `a_{pi(j)}^j = w_j` for every column `j`.
pub fn permanent_contains(t: &Tableau, w: &Word) -> Result<bool> {
    check_word(t, w)?;
    Ok(PermanentTester::new().contains(t, w.letters()))
}

/// The rows `pi(1..n)` (0-based) realizing `w`, if `w` is in the permanent.
pub fn permanent_witness(t: &Tableau, w: &Word) -> Result<Option<Vec<usize>>> {
    check_word(t, w)?;
    Ok(PermanentTester::new().witness(t, w.letters()))
}

/// Every diagonal word, by running over all of `S_n`. Sorted lexicographically.
pub fn enumerate_permanent(t: &Tableau, budget: &Budget) -> Result<Vec<Word>> {
    let n = t.n();
    budget.check_n(n, budget.max_permanent_n, "permanent enumeration")?;
    let words: BTreeSet<Vec<u8>> = (0..n)
        .permutations(n)
        .map(|rows| rows.iter().enumerate().map(|(j, &i)| t.get(i, j)).collect())
        .collect();
    Ok(words
        .into_iter()
        .map(|w| Word::new(w, t.alphabet_size()).expect("entries validated"))
        .collect())
}

/// No row-word of `t` occurs in its permanent.
pub fn is_cantorian(t: &Tableau) -> bool {
    PermanentTester::new().is_cantorian(t)
}

/// No row-word and no column-word of `t` occurs in its permanent.
pub fn is_bicantorian(t: &Tableau) -> bool {
    PermanentTester::new().is_bicantorian(t)
}

/// A word from `L` (or from `C` when `columns` is set) that lies in the
/// permanent, together with the rows realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub word: Word,
    pub from_column: bool,
    /// `rows[j]` is the 0-based row used for column `j`.
    pub rows: Vec<usize>,
}

/// Explains why `t` fails to be Cantorian (rows only) or bi-Cantorian
/// (rows, then columns).
pub fn find_witness(t: &Tableau, include_columns: bool) -> Option<Witness> {
    let mut tester = PermanentTester::new();
    let s = t.alphabet_size();
    if let Some(r) = tester.row_witness(t) {
        let rows = tester.witness(t, &r).expect("row witness is realizable");
        return Some(Witness {
            word: Word::new(r, s).expect("validated"),
            from_column: false,
            rows,
        });
    }
    if include_columns {
        if let Some(c) = tester.column_witness(t) {
            let rows = tester.witness(t, &c).expect("column witness is realizable");
            return Some(Witness {
                word: Word::new(c, s).expect("validated"),
                from_column: true,
                rows,
            });
        }
    }
    None
}
