//! Brute-force reference implementations for cross-checking.
//!
//! Nothing here calls into the matching, canonical-form or class-size code:
//! permanents are read off every permutation, and classes are grown by
//! breadth-first search from adjacent transpositions.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::model::Tableau;

/// All permutations of `0..n` by Heap's algorithm.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut out = vec![a.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn cell_count(n: usize, s: usize, budget: &Budget) -> Result<u64> {
    let cells = (s as u64).checked_pow((n * n) as u32);
    match cells {
        Some(c) if c <= budget.max_cells => Ok(c),
        _ => Err(Error::refusal(format!(
            "{s}^{} tableaux exceed the brute-force limit {}",
            n * n,
            budget.max_cells
        ))),
    }
}

/// Every `n x n` tableau over `s` letters once, in row-major odometer order
/// (the last cell varies fastest). `s = 1` is allowed.
pub fn oracle_all_tableaux(n: usize, s: usize, budget: &Budget) -> Result<impl Iterator<Item = Tableau>> {
    if n == 0 || s == 0 {
        return Err(Error::input("need n >= 1 and s >= 1"));
    }
    let total = cell_count(n, s, budget)?;
    let mut cells = vec![1u8; n * n];
    let mut emitted = 0u64;
    Ok(std::iter::from_fn(move || {
        if emitted == total {
            return None;
        }
        let t = Tableau::new(n, s, cells.clone()).expect("letters in range");
        emitted += 1;
        for k in (0..n * n).rev() {
            if (cells[k] as usize) < s {
                cells[k] += 1;
                break;
            }
            cells[k] = 1;
        }
        Some(t)
    }))
}

/// Brute-force permanent tester holding the permutation list for one `n`.
pub struct OracleTester {
    n: usize,
    perms: Vec<Vec<usize>>,
}

impl OracleTester {
    pub fn new(n: usize) -> Self {
        OracleTester {
            n,
            perms: all_permutations(n),
        }
    }

    /// Every diagonal word `(a_{pi(1)}^1, ..., a_{pi(n)}^n)`.
    pub fn permanent(&self, t: &Tableau) -> HashSet<Vec<u8>> {
        assert_eq!(t.n(), self.n);
        self.perms
            .iter()
            .map(|pi| (0..self.n).map(|j| t.get(pi[j], j)).collect())
            .collect()
    }

    pub fn is_cantorian(&self, t: &Tableau) -> bool {
        let perm = self.permanent(t);
        (0..self.n).all(|i| !perm.contains(t.row(i)))
    }

    pub fn is_bicantorian(&self, t: &Tableau) -> bool {
        let perm = self.permanent(t);
        let n = self.n;
        (0..n).all(|i| !perm.contains(t.row(i)))
            && (0..n).all(|j| {
                let col: Vec<u8> = (0..n).map(|i| t.get(i, j)).collect();
                !perm.contains(&col)
            })
    }
}

/// Cantorian tableaux counted by exhaustive search.
pub fn oracle_count_cantorian(n: usize, s: usize, budget: &Budget) -> Result<u64> {
    let tester = OracleTester::new(n);
    Ok(oracle_all_tableaux(n, s, budget)?.filter(|t| tester.is_cantorian(t)).count() as u64)
}

/// Bi-Cantorian tableaux counted by exhaustive search.
pub fn oracle_count_bicantorian(n: usize, s: usize, budget: &Budget) -> Result<u64> {
    let tester = OracleTester::new(n);
    Ok(oracle_all_tableaux(n, s, budget)?.filter(|t| tester.is_bicantorian(t)).count() as u64)
}

/// Images of `cells` under the generators: adjacent row swaps, adjacent
/// column swaps, and swapping letters `a, a+1` inside one column.
fn neighbours(cells: &[u8], n: usize, s: usize, mut f: impl FnMut(Vec<u8>)) {
    for i in 0..n.saturating_sub(1) {
        let mut c = cells.to_vec();
        for j in 0..n {
            c.swap(i * n + j, (i + 1) * n + j);
        }
        f(c);
    }
    for j in 0..n.saturating_sub(1) {
        let mut c = cells.to_vec();
        for i in 0..n {
            c.swap(i * n + j, i * n + j + 1);
        }
        f(c);
    }
    for j in 0..n {
        for a in 1..s as u8 {
            let mut c = cells.to_vec();
            for i in 0..n {
                let x = &mut c[i * n + j];
                if *x == a {
                    *x = a + 1;
                } else if *x == a + 1 {
                    *x = a;
                }
            }
            f(c);
        }
    }
}

fn closure_cells(t: &Tableau, limit: u64) -> Result<HashSet<Vec<u8>>> {
    let (n, s) = (t.n(), t.alphabet_size());
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(t.cells().to_vec());
    queue.push_back(t.cells().to_vec());
    while let Some(cur) = queue.pop_front() {
        let mut overflow = false;
        neighbours(&cur, n, s, |c| {
            if !seen.contains(&c) {
                seen.insert(c.clone());
                queue.push_back(c);
                if seen.len() as u64 > limit {
                    overflow = true;
                }
            }
        });
        if overflow {
            return Err(Error::refusal(format!(
                "class of {t} has more than {limit} elements"
            )));
        }
    }
    Ok(seen)
}

/// The class of `t`, grown by breadth-first search. Bounded by `max_orbit`.
pub fn oracle_class_closure(t: &Tableau, budget: &Budget) -> Result<Vec<Tableau>> {
    let (n, s) = (t.n(), t.alphabet_size());
    let mut v: Vec<Vec<u8>> = closure_cells(t, budget.max_orbit)?.into_iter().collect();
    v.sort_unstable();
    Ok(v.into_iter()
        .map(|c| Tableau::new(n, s, c).expect("letters in range"))
        .collect())
}

/// Size of the class of `t`.
pub fn oracle_class_size(t: &Tableau, budget: &Budget) -> Result<u64> {
    Ok(closure_cells(t, budget.max_orbit)?.len() as u64)
}

/// The Cantorian tableaux split into classes by search alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleClasses {
    /// Row-major smallest member of each class, with the class size,
    /// sorted by member.
    pub classes: Vec<(Tableau, u64)>,
    pub total: u64,
}

/// Partitions all Cantorian `n x n` tableaux over `s` letters into classes.
pub fn oracle_cantorian_classes(n: usize, s: usize, budget: &Budget) -> Result<OracleClasses> {
    let tester = OracleTester::new(n);
    let mut class_of: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut classes = Vec::new();
    for t in oracle_all_tableaux(n, s, budget)? {
        if class_of.contains_key(t.cells()) || !tester.is_cantorian(&t) {
            continue;
        }
        let members = closure_cells(&t, budget.max_orbit)?;
        let id = classes.len();
        // odometer order visits the row-major smallest member first
        classes.push((t.clone(), members.len() as u64));
        for m in members {
            class_of.insert(m, id);
        }
    }
    let total = classes.iter().map(|c| c.1).sum();
    Ok(OracleClasses { classes, total })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_permutations() {
        let p = all_permutations(4);
        assert_eq!(p.len(), 24);
        let set: HashSet<_> = p.iter().collect();
        assert_eq!(set.len(), 24);
        assert_eq!(all_permutations(1), vec![vec![0]]);
    }

    #[test]
    fn tableau_counts() {
        let b = Budget::default();
        assert_eq!(oracle_all_tableaux(2, 2, &b).unwrap().count(), 16);
        assert_eq!(oracle_all_tableaux(3, 2, &b).unwrap().count(), 512);
        assert_eq!(oracle_all_tableaux(2, 3, &b).unwrap().count(), 81);
        let first: Vec<_> = oracle_all_tableaux(2, 2, &b).unwrap().take(2).collect();
        assert_eq!(first[1].cells(), &[1, 1, 1, 2]);
        assert!(matches!(oracle_all_tableaux(6, 3, &b), Err(Error::Refusal(_))));
    }

    #[test]
    fn counts() {
        let b = Budget::default();
        assert_eq!(oracle_count_cantorian(2, 2, &b).unwrap(), 4);
        assert_eq!(oracle_count_cantorian(3, 2, &b).unwrap(), 24);
        assert_eq!(oracle_count_bicantorian(2, 2, &b).unwrap(), 2);
        assert_eq!(oracle_count_bicantorian(3, 2, &b).unwrap(), 6);
        assert_eq!(oracle_count_bicantorian(2, 4, &b).unwrap(), 84);
    }

    #[test]
    fn closures() {
        let b = Budget::default();
        let r = Tableau::from_digit_rows(&["11", "22"], 2).unwrap();
        assert_eq!(oracle_class_size(&r, &b).unwrap(), 4);
        let r4 = Tableau::from_digit_rows(&["111", "122", "133"], 3).unwrap();
        assert_eq!(oracle_class_size(&r4, &b).unwrap(), 324);
        assert!(oracle_class_closure(&r4, &b).unwrap().contains(&r4));
        let ones = Tableau::constant(2, 2, 1).unwrap();
        assert_eq!(oracle_class_size(&ones, &b).unwrap(), 4);
    }
}
