//! Candidate invariant keys and the cheap necessary conditions that discard
//! keys whose classes cannot be Cantorian.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{partitions_of, InvariantKey, Partition};

pub(crate) fn check_dimensions(n: usize, s: usize) -> Result<()> {
    if n < 2 || s < 2 {
        return Err(Error::input(format!("enumeration needs n >= 2 and s >= 2, got n = {n}, s = {s}")));
    }
    Ok(())
}

/// Every non-decreasing sequence of `n` partitions of `n` with at most
/// `min(n, s)` parts, before pruning.
pub fn all_invariant_keys(n: usize, s: usize) -> Result<Vec<InvariantKey>> {
    check_dimensions(n, s)?;
    let parts = partitions_of(n as u32, n.min(s));
    Ok(parts
        .iter()
        .combinations_with_replacement(n)
        .map(|ps| InvariantKey::new(ps.into_iter().cloned().collect()).expect("valid partitions"))
        .collect())
}

/// The keys of [`all_invariant_keys`] that survive [`prune_key`].
pub fn candidate_invariant_keys(n: usize, s: usize) -> Result<Vec<InvariantKey>> {
    Ok(all_invariant_keys(n, s)?
        .into_iter()
        .filter(|k| prune_key(k, n, s))
        .collect())
}

/// Occurrences of the minority letter in a reduced two-letter tableau.
fn minority_total(key: &InvariantKey) -> u32 {
    key.partitions()
        .iter()
        .map(|p: &Partition| p.weight() - p.largest_part())
        .sum()
}

/// `false` when no tableau with this key can be Cantorian.
///
/// A reduced tableau writes the most frequent letter of each column as `1`,
/// so it contains `sum of largest parts` ones; `n^2 - n + 1` equal letters
/// always force a diagonal equal to a row. Over two letters the reduced
/// form also has a fixed number `p` of twos, and no Cantorian tableau has
/// `p < n`, `p = n + 1` (`n >= 4`) or `p = n + 2` (`n >= 5`). For `p = n`
/// the only Cantorian tableaux are the `n` with a single row of twos, whose
/// columns all have partition `(n-1, 1)`.
pub fn prune_key(key: &InvariantKey, n: usize, s: usize) -> bool {
    let n32 = n as u32;
    if key.largest_part_total() > n32 * n32 - n32 {
        return false;
    }
    if s == 2 && key.partitions().iter().all(|p| p.len() <= 2) {
        let p = minority_total(key);
        if p < n32 || (p == n32 + 1 && n >= 4) || (p == n32 + 2 && n >= 5) {
            return false;
        }
        if p == n32 && n >= 3 && !key.partitions().iter().all(|q| q.parts() == [n32 - 1, 1]) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(parts: &[&[u32]]) -> InvariantKey {
        InvariantKey::new(parts.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect()).unwrap()
    }

    #[test]
    fn key_counts_before_pruning() {
        assert_eq!(all_invariant_keys(2, 2).unwrap().len(), 3);
        assert_eq!(all_invariant_keys(3, 2).unwrap().len(), 4);
        // partitions of 3 with at most 3 parts: 3, 21, 111; multisets of size 3
        assert_eq!(all_invariant_keys(3, 3).unwrap().len(), 10);
        assert!(all_invariant_keys(2, 1).is_err());
        assert!(all_invariant_keys(1, 2).is_err());
    }

    #[test]
    fn pruning_examples() {
        assert!(!prune_key(&key(&[&[3], &[3], &[3]]), 3, 3));
        // n = 4, two letters, p = 5
        assert!(!prune_key(&key(&[&[2, 2], &[3, 1], &[3, 1], &[3, 1]]), 4, 2));
        // n = 3, p = 3 is kept
        assert!(prune_key(&key(&[&[2, 1], &[2, 1], &[2, 1]]), 3, 2));
        assert!(prune_key(&key(&[&[1, 1], &[1, 1]]), 2, 2));
        // p = n away from the single-row-of-twos key
        assert!(!prune_key(&key(&[&[4], &[4], &[2, 2], &[2, 2]]), 4, 2));
        assert!(prune_key(&key(&[&[3, 1], &[3, 1], &[3, 1], &[3, 1]]), 4, 2));
        assert!(!prune_key(&key(&[&[2], &[1, 1]]), 2, 2));
    }

    #[test]
    fn two_by_two_leaves_one_key() {
        for s in 2..=6 {
            let keys = candidate_invariant_keys(2, s).unwrap();
            assert_eq!(keys, vec![key(&[&[1, 1], &[1, 1]])]);
        }
    }
}
