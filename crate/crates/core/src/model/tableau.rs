use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::composition::{Composition, Partition};
use super::word::{cmp_letters, letter_counts, write_letters, Word};
use crate::error::{Error, Result};

/// A square `n x n` tableau over the alphabet `1..=s`, stored row-major.
///
/// Entry `(i, j)` is row `i`, column `j`; accessors are 0-based while the
/// text format and reports use 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRecord", into = "TableauRecord")]
pub struct Tableau {
    n: usize,
    s: usize,
    cells: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct TableauRecord {
    n: usize,
    s: usize,
    rows: Vec<Vec<u8>>,
}

impl From<Tableau> for TableauRecord {
    fn from(t: Tableau) -> Self {
        TableauRecord {
            n: t.n,
            s: t.s,
            rows: t.rows().map(<[u8]>::to_vec).collect(),
        }
    }
}

impl TryFrom<TableauRecord> for Tableau {
    type Error = Error;

    fn try_from(r: TableauRecord) -> Result<Self> {
        let t = Tableau::from_rows(&r.rows, r.s)?;
        if t.n != r.n {
            return Err(Error::input(format!("declared n = {} but {} rows", r.n, t.n)));
        }
        Ok(t)
    }
}

impl Tableau {
    pub fn new(n: usize, s: usize, cells: Vec<u8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("tableau side must be positive"));
        }
        if s == 0 || s > u8::MAX as usize {
            return Err(Error::input(format!("alphabet size {s} out of range 1..=255")));
        }
        if cells.len() != n * n {
            return Err(Error::input(format!(
                "{} entries for a {n}x{n} tableau",
                cells.len()
            )));
        }
        if let Some(k) = cells.iter().position(|&a| a == 0 || a as usize > s) {
            return Err(Error::input(format!(
                "entry {} at row {}, column {} outside 1..={s}",
                cells[k],
                k / n + 1,
                k % n + 1
            )));
        }
        Ok(Tableau { n, s, cells })
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R], s: usize) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::input(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            cells.extend_from_slice(row);
        }
        Tableau::new(n, s, cells)
    }

    /// Builds a tableau from rows written as digit strings, e.g. `["113", "112", "231"]`.
    pub fn from_digit_rows(rows: &[&str], s: usize) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| Word::from_digits(r, s).map(|w| w.letters().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(&rows, s)
    }

    pub(crate) fn from_cells_unchecked(n: usize, s: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        debug_assert!(cells.iter().all(|&a| a >= 1 && a as usize <= s));
        Tableau { n, s, cells }
    }

    pub(crate) fn cells_mut(&mut self) -> &mut [u8] {
        &mut self.cells
    }

    pub fn constant(n: usize, s: usize, letter: u8) -> Result<Self> {
        Tableau::new(n, s, vec![letter; n * n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet_size(&self) -> usize {
        self.s
    }

    /// Row-major entries.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.cells[row * self.n + col]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.cells.chunks_exact(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|j| self.column(j)).collect()
    }

    pub fn row_words(&self) -> Vec<Word> {
        self.rows()
            .map(|r| Word::new(r.to_vec(), self.s).expect("validated"))
            .collect()
    }

    pub fn column_words(&self) -> Vec<Word> {
        self.columns()
            .into_iter()
            .map(|c| Word::new(c, self.s).expect("validated"))
            .collect()
    }

    /// The set `L` of distinct row-words, sorted lexicographically.
    pub fn distinct_rows(&self) -> Vec<Vec<u8>> {
        self.rows().map(<[u8]>::to_vec).sorted().dedup().collect()
    }

    /// The set `C` of distinct column-words, sorted lexicographically.
    pub fn distinct_columns(&self) -> Vec<Vec<u8>> {
        self.columns().into_iter().sorted().dedup().collect()
    }

    /// Multiplicities `f` of the distinct row-words, in the order of [`Self::distinct_rows`].
    pub fn row_multiplicities(&self) -> Vec<usize> {
        multiplicities(self.rows().map(<[u8]>::to_vec).collect())
    }

    /// Multiplicities `g` of the distinct column-words.
    pub fn column_multiplicities(&self) -> Vec<usize> {
        multiplicities(self.columns())
    }

    /// Same entries, reinterpreted over an alphabet of size `s`.
    pub fn with_alphabet(&self, s: usize) -> Result<Self> {
        Tableau::new(self.n, s, self.cells.clone())
    }

    pub fn transpose(&self) -> Tableau {
        let n = self.n;
        let cells = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        Tableau::from_cells_unchecked(n, self.s, cells)
    }

    pub fn parikh(&self) -> ParikhVector {
        ParikhVector(
            (0..self.n)
                .map(|j| Composition::new(letter_counts(&self.column(j), self.s)).expect("s >= 1"))
                .collect(),
        )
    }

    pub fn class_invariant(&self) -> InvariantKey {
        let mut parts: Vec<Partition> = self.parikh().0.iter().map(Composition::to_partition).collect();
        parts.sort();
        InvariantKey(parts)
    }

    /// Largest letter actually used.
    pub fn max_letter(&self) -> u8 {
        self.cells.iter().copied().max().unwrap_or(1)
    }

    /// Renders rows as text: digits when every letter is a single digit,
    /// otherwise space-separated numbers.
    pub fn display_rows(&self) -> Vec<String> {
        self.rows()
            .map(|r| {
                if self.s <= 9 {
                    r.iter().map(|a| a.to_string()).collect()
                } else {
                    r.iter().join(" ")
                }
            })
            .collect()
    }
}

fn multiplicities(mut words: Vec<Vec<u8>>) -> Vec<usize> {
    words.sort();
    words
        .into_iter()
        .dedup_with_count()
        .map(|(count, _)| count)
        .collect()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            write_letters(f, r)?;
        }
        write!(f, "]")
    }
}

/// The Parikh compositions of the column-words, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParikhVector(Vec<Composition>);

impl ParikhVector {
    pub fn columns(&self) -> &[Composition] {
        &self.0
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

pub fn parikh_tableau(t: &Tableau) -> ParikhVector {
    t.parikh()
}

/// Column partitions with zeros stripped, sorted under the composition order.
/// Constant on equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InvariantKey(Vec<Partition>);

impl InvariantKey {
    pub fn new(mut partitions: Vec<Partition>) -> Result<Self> {
        let n = partitions.len();
        if n == 0 {
            return Err(Error::input("an invariant key needs at least one partition"));
        }
        for p in &partitions {
            if p.weight() as usize != n || p.parts().contains(&0) {
                return Err(Error::input(format!(
                    "{p} is not a positive partition of {n}"
                )));
            }
        }
        partitions.sort();
        Ok(InvariantKey(partitions))
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Occurrences of letter 1 in any reduced tableau with this key.
    pub fn largest_part_total(&self) -> u32 {
        self.0.iter().map(Partition::largest_part).sum()
    }

    /// The column compositions of a reduced tableau with this key over `s`
    /// letters, in left-to-right order.
    pub fn reduced_columns(&self, s: usize) -> Vec<Vec<u32>> {
        let mut cols: Vec<Vec<u32>> = self.0.iter().map(|p| p.padded(s)).collect();
        // equal lengths: composition order is inverse lexicographic
        cols.sort_by(|a, b| b.cmp(a));
        cols
    }
}

impl fmt::Display for InvariantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

pub fn class_invariant(t: &Tableau) -> InvariantKey {
    t.class_invariant()
}

/// Compares tableaux by their column-words, left to right, under the Parikh
/// composition order.
pub fn cmp_tableau(a: &Tableau, b: &Tableau) -> Result<Ordering> {
    if a.n != b.n || a.s != b.s {
        return Err(Error::input(format!(
            "cannot compare a {}x{} tableau over {} letters with a {}x{} one over {}",
            a.n, a.n, a.s, b.n, b.n, b.s
        )));
    }
    Ok(cmp_tableau_unchecked(a, b))
}

pub(crate) fn cmp_tableau_unchecked(a: &Tableau, b: &Tableau) -> Ordering {
    (0..a.n)
        .map(|j| cmp_letters(&a.column(j), &b.column(j), a.s))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&str], s: usize) -> Tableau {
        Tableau::from_digit_rows(rows, s).unwrap()
    }

    fn comps(v: &ParikhVector) -> Vec<Vec<u32>> {
        v.columns().iter().map(|c| c.parts().to_vec()).collect()
    }

    #[test]
    fn parikh_vectors_of_examples() {
        let t1 = t(&["113", "112", "231"], 3);
        assert_eq!(comps(&t1.parikh()), vec![vec![2, 1, 0], vec![2, 0, 1], vec![1, 1, 1]]);
        let t2 = t(&["2112", "3121", "2111", "2121"], 3);
        assert_eq!(
            comps(&t2.parikh()),
            vec![vec![0, 3, 1], vec![4, 0, 0], vec![2, 2, 0], vec![3, 1, 0]]
        );
        let ones = Tableau::constant(4, 2, 1).unwrap();
        assert!(comps(&ones.parikh()).iter().all(|c| c == &[4, 0]));
    }

    #[test]
    fn invariant_of_t1() {
        let t1 = t(&["113", "112", "231"], 3);
        let key: Vec<Vec<u32>> = t1
            .class_invariant()
            .partitions()
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(key, vec![vec![2, 1], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn worked_chain_is_decreasing_and_shares_a_key() {
        let chain = [
            t(&["231", "222", "231"], 3),
            t(&["111", "132", "111"], 3),
            t(&["111", "123", "111"], 3),
            t(&["111", "111", "123"], 3),
            t(&["111", "111", "122"], 3),
        ];
        for w in chain.windows(2) {
            assert_eq!(cmp_tableau(&w[0], &w[1]).unwrap(), Ordering::Greater);
        }
        let key = chain[0].class_invariant();
        assert!(chain.iter().all(|x| x.class_invariant() == key));
    }

    #[test]
    fn small_comparisons() {
        let a = t(&["11", "22"], 2);
        let b = t(&["12", "21"], 2);
        // first columns agree (12); second columns 12 vs 21 tie on Parikh, lex decides
        assert_eq!(cmp_tableau(&a, &b).unwrap(), Ordering::Less);
        assert_eq!(cmp_tableau(&a, &a).unwrap(), Ordering::Equal);
        assert!(cmp_tableau(&a, &a.with_alphabet(3).unwrap()).is_err());
    }

    #[test]
    fn validation_errors() {
        assert!(Tableau::from_rows(&[vec![1, 2], vec![1]], 2).is_err());
        assert!(Tableau::from_rows(&[vec![1, 3], vec![1, 1]], 2).is_err());
        assert!(Tableau::new(0, 2, vec![]).is_err());
    }

    #[test]
    fn multiplicities() {
        let r = t(&["111", "111", "222"], 2);
        assert_eq!(r.row_multiplicities(), vec![2, 1]);
        assert_eq!(r.column_multiplicities(), vec![3]);
        assert_eq!(r.distinct_rows(), vec![vec![1, 1, 1], vec![2, 2, 2]]);
    }

    #[test]
    fn serde_record_round_trip() {
        let x = t(&["113", "112", "231"], 3);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"n":3,"s":3,"rows":[[1,1,3],[1,1,2],[2,3,1]]}"#);
        let back: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
