//! Column-by-column generation of the minimal reduced tableaux of one key.
//!
//! Column `j` runs over the canonically labelled words whose Parikh
//! partition is the `j`-th partition of the key, in increasing order and
//! never below column `j - 1`. A prefix is abandoned as soon as some row
//! order makes its sorted column keys smaller: adding columns can only lower
//! the competing sequence further, so no completion could be minimal.

use std::ops::ControlFlow;

use itertools::Itertools;

use crate::canon::{self, Column, ColumnKey, RowOrders, MAX_PACKED_N};
use crate::equivalence::from_keys;
use crate::model::{InvariantKey, Partition, Tableau};

/// Canonically labelled columns with the given partition, sorted by key.
fn canonical_columns(p: &Partition, n: usize) -> Vec<(ColumnKey, Column)> {
    let letters: Vec<u8> = p
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(k, &m)| std::iter::repeat_n(k as u8 + 1, m as usize))
        .collect();
    let id: [u8; MAX_PACKED_N] = std::array::from_fn(|i| i as u8);
    let mut out: Vec<(ColumnKey, Column)> = letters
        .iter()
        .copied()
        .permutations(n)
        .unique()
        .filter_map(|w| {
            let mut col = [0u8; MAX_PACKED_N];
            col[..n].copy_from_slice(&w);
            let key = canon::raw_column_key(&col, n);
            (canon::min_column_key(&col, &id, n) == key).then_some((key, col))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Partitions of a key in the left-to-right order of a reduced tableau.
pub(crate) fn column_partitions(key: &InvariantKey) -> Vec<Partition> {
    let mut ps = key.partitions().to_vec();
    ps.sort_by(|a, b| b.padded(MAX_PACKED_N).cmp(&a.padded(MAX_PACKED_N)));
    ps
}

/// Depth-first generator for one key.
pub(crate) struct KeyGenerator {
    n: usize,
    s: usize,
    orders: RowOrders,
    candidates: Vec<Vec<(ColumnKey, Column)>>,
    cols: Vec<Column>,
    keys: Vec<ColumnKey>,
    scratch: Vec<ColumnKey>,
    /// Prefixes visited so far, for cooperative time checks.
    pub nodes: u64,
}

impl KeyGenerator {
    pub fn new(key: &InvariantKey, s: usize, orders: RowOrders) -> Self {
        let n = key.n();
        debug_assert_eq!(orders.n(), n);
        let candidates = column_partitions(key)
            .iter()
            .map(|p| canonical_columns(p, n))
            .collect();
        KeyGenerator {
            n,
            s,
            orders,
            candidates,
            cols: Vec::with_capacity(n),
            keys: Vec::with_capacity(n),
            scratch: Vec::with_capacity(n),
            nodes: 0,
        }
    }

    /// Calls `f` on each minimal reduced tableau of the key, in increasing order.
    /// `f` may stop the walk; `tick` is consulted on every prefix.
    pub fn run<B>(
        &mut self,
        f: &mut impl FnMut(Tableau) -> ControlFlow<B>,
        tick: &mut impl FnMut(u64) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        self.descend(0, f, tick)
    }

    fn descend<B>(
        &mut self,
        j: usize,
        f: &mut impl FnMut(Tableau) -> ControlFlow<B>,
        tick: &mut impl FnMut(u64) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if j == self.n {
            return f(from_keys(&self.keys, self.n, self.s));
        }
        let floor = self.keys.last().copied().unwrap_or(0);
        for c in 0..self.candidates[j].len() {
            let (key, col) = self.candidates[j][c];
            if key < floor {
                continue;
            }
            self.nodes += 1;
            tick(self.nodes)?;
            self.cols.push(col);
            self.keys.push(key);
            if canon::is_minimal(&self.cols, &self.keys, &self.orders, &mut self.scratch) {
                self.descend(j + 1, f, tick)?;
            }
            self.cols.pop();
            self.keys.pop();
        }
        ControlFlow::Continue(())
    }
}

/// Every minimal reduced tableau whose invariant is `key`, over `s` letters,
/// in increasing tableau order. Needs `n <= 8` and `s >= ` the largest
/// number of parts in the key.
pub fn representatives_for_key(key: &InvariantKey, s: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut generator = KeyGenerator::new(key, s, RowOrders::new(key.n()));
    let _ = generator.run::<()>(
        &mut |t| {
            out.push(t);
            ControlFlow::Continue(())
        },
        &mut |_| ControlFlow::Continue(()),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{is_reduced, minimal_reduced};
    use crate::Budget;

    fn key(parts: &[&[u32]]) -> InvariantKey {
        InvariantKey::new(parts.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect()).unwrap()
    }

    #[test]
    fn canonical_columns_of_small_partitions() {
        let p = Partition::new(vec![2, 1]).unwrap();
        let words: Vec<Vec<u8>> = canonical_columns(&p, 3).iter().map(|(_, c)| c[..3].to_vec()).collect();
        assert_eq!(words, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        let p = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(canonical_columns(&p, 3).len(), 1);
    }

    #[test]
    fn spec_representatives_are_generated() {
        let r2 = representatives_for_key(&key(&[&[1, 1], &[1, 1]]), 2);
        assert!(r2.contains(&Tableau::from_digit_rows(&["11", "22"], 2).unwrap()));
        let r5 = representatives_for_key(&key(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]), 3);
        assert!(r5.contains(&Tableau::from_digit_rows(&["111", "222", "333"], 3).unwrap()));
    }

    #[test]
    fn emitted_tableaux_are_minimal_reduced_with_the_key() {
        let b = Budget::default();
        for (n, s) in [(3, 3), (4, 2)] {
            for k in crate::enumeration::all_invariant_keys(n, s).unwrap() {
                let reps = representatives_for_key(&k, s);
                for r in &reps {
                    assert!(is_reduced(r), "{r}");
                    assert_eq!(&minimal_reduced(r, &b).unwrap(), r);
                    assert_eq!(r.class_invariant(), k);
                }
                assert!(reps.iter().all_unique());
            }
        }
    }
}
