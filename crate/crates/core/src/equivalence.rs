//! The equivalence generated by row permutations, column permutations and
//! per-column letter bijections.
//!
//! An element `(sigma, tau, beta)` sends `T` to the tableau whose entry at
//! `(sigma(i), tau(j))` is `beta_j(a_i^j)`: the bijections act first, then
//! rows and columns are permuted. Class sizes follow from orbit-stabilizer:
//!
//! ```text
//! #[T] = |O_rows,cols(T)| * |O_bij(T)| / theta
//! |O_rows,cols(T)| = (n!)^2 / (prod g_j! * prod f_i! + eta)
//! |O_bij(T)|       = prod_j s! / (s - l+(c_j))!
//! ```
//!
//! with `theta` the number of tableaux reachable both ways.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::canon::{self, Column, RowOrders, MAX_PACKED_N};
use crate::error::{Error, Result};
use crate::model::{InvariantKey, Tableau};
use crate::serde_decimal;

/// A row permutation, a column permutation and one letter bijection per column.
///
/// Permutations are 0-based images (`row_perm[i]` is where row `i` goes);
/// `col_bijections[j][a - 1]` is the image of letter `a` in column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub col_bijections: Vec<Vec<u8>>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl GroupElement {
    pub fn identity(n: usize, s: usize) -> Self {
        GroupElement {
            row_perm: (0..n).collect(),
            col_perm: (0..n).collect(),
            col_bijections: vec![(1..=s as u8).collect(); n],
        }
    }

    /// Pure row/column permutation.
    pub fn permutation(row_perm: Vec<usize>, col_perm: Vec<usize>, s: usize) -> Self {
        let n = row_perm.len();
        GroupElement {
            row_perm,
            col_perm,
            col_bijections: vec![(1..=s as u8).collect(); n],
        }
    }

    pub fn validate(&self, n: usize, s: usize) -> Result<()> {
        if self.row_perm.len() != n || self.col_perm.len() != n || self.col_bijections.len() != n {
            return Err(Error::input(format!("group element does not act on {n}x{n} tableaux")));
        }
        if !is_permutation(&self.row_perm) || !is_permutation(&self.col_perm) {
            return Err(Error::input("row or column map is not a permutation"));
        }
        for (j, b) in self.col_bijections.iter().enumerate() {
            let as_index: Vec<usize> = b.iter().map(|&a| (a as usize).wrapping_sub(1)).collect();
            if b.len() != s || !is_permutation(&as_index) {
                return Err(Error::input(format!(
                    "column {} map is not a bijection of 1..={s}",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// The element acting as `self` followed by `then`.
    pub fn then(&self, then: &GroupElement) -> GroupElement {
        let n = self.row_perm.len();
        GroupElement {
            row_perm: (0..n).map(|i| then.row_perm[self.row_perm[i]]).collect(),
            col_perm: (0..n).map(|j| then.col_perm[self.col_perm[j]]).collect(),
            col_bijections: (0..n)
                .map(|j| {
                    let outer = &then.col_bijections[self.col_perm[j]];
                    self.col_bijections[j]
                        .iter()
                        .map(|&a| outer[a as usize - 1])
                        .collect()
                })
                .collect(),
        }
    }
}

/// Applies the column bijections, then permutes rows and columns.
pub fn apply(t: &Tableau, g: &GroupElement) -> Result<Tableau> {
    let (n, s) = (t.n(), t.alphabet_size());
    g.validate(n, s)?;
    let mut cells = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            cells[g.row_perm[i] * n + g.col_perm[j]] = g.col_bijections[j][t.get(i, j) as usize - 1];
        }
    }
    Ok(Tableau::from_cells_unchecked(n, s, cells))
}

fn permute(t: &Tableau, rows: &[usize], cols: &[usize]) -> Tableau {
    let n = t.n();
    let mut cells = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            cells[rows[i] * n + cols[j]] = t.get(i, j);
        }
    }
    Tableau::from_cells_unchecked(n, t.alphabet_size(), cells)
}

/// All tableaux `sigma T tau^-1`, sorted by row-major entries.
pub fn orbit_phi(t: &Tableau, budget: &Budget) -> Result<Vec<Tableau>> {
    let n = t.n();
    budget.check_n(n, budget.max_phi_n, "row/column orbit")?;
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut seen = HashSet::new();
    for sigma in &perms {
        for tau in &perms {
            seen.insert(permute(t, sigma, tau));
        }
    }
    Ok(sort_tableaux(seen))
}

fn sort_tableaux(set: HashSet<Tableau>) -> Vec<Tableau> {
    let mut v: Vec<Tableau> = set.into_iter().collect();
    v.sort_by(|a, b| a.cells().cmp(b.cells()));
    v
}

/// Number of distinct letters in each column.
pub fn column_letter_counts(t: &Tableau) -> Vec<usize> {
    t.columns()
        .into_iter()
        .map(|c| c.into_iter().unique().count())
        .collect()
}

/// `s! / (s - k)!`.
pub fn falling_factorial(s: usize, k: usize) -> BigUint {
    if k > s {
        return BigUint::zero();
    }
    ((s - k + 1)..=s).fold(BigUint::one(), |acc, x| acc * BigUint::from(x))
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `prod_j s!/(s - l+(c_j))!` at alphabet size `s`.
pub fn orbit_psi_size(t: &Tableau, s: usize) -> BigUint {
    column_letter_counts(t)
        .into_iter()
        .map(|k| falling_factorial(s, k))
        .product()
}

/// All tableaux reachable by per-column letter bijections.
pub fn orbit_psi(t: &Tableau, budget: &Budget) -> Result<Vec<Tableau>> {
    let size = orbit_psi_size(t, t.alphabet_size());
    if size > BigUint::from(budget.max_orbit) {
        return Err(Error::refusal(format!(
            "column-bijection orbit of size {size} exceeds the limit {}",
            budget.max_orbit
        )));
    }
    let mut out = HashSet::new();
    for_each_relabelling(t, t.alphabet_size(), |x| {
        out.insert(x.clone());
    });
    Ok(sort_tableaux(out))
}

/// Calls `f` on every distinct image of `t` under per-column injective
/// relabellings into `1..=s` (each image exactly once).
pub fn for_each_relabelling(t: &Tableau, s: usize, mut f: impl FnMut(&Tableau)) {
    let n = t.n();
    // per column: the distinct letters and, for each row, the index of its letter
    let mut slots: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut arity: Vec<usize> = Vec::with_capacity(n);
    for j in 0..n {
        let col = t.column(j);
        let distinct: Vec<u8> = col.iter().copied().unique().collect();
        slots.push(col.iter().map(|a| distinct.iter().position(|d| d == a).unwrap()).collect());
        arity.push(distinct.len());
    }
    if arity.iter().any(|&k| k > s) {
        return;
    }
    let choices: Vec<Vec<Vec<u8>>> = arity
        .iter()
        .map(|&k| (1..=s as u8).permutations(k).collect())
        .collect();
    let mut cur = Tableau::from_cells_unchecked(n, s, t.cells().to_vec());
    let mut idx = vec![0usize; n];
    let write_column = |cur: &mut Tableau, j: usize, img: &[u8]| {
        let cells = cur.cells_mut();
        for (i, &slot) in slots[j].iter().enumerate() {
            cells[i * n + j] = img[slot];
        }
    };
    for j in 0..n {
        write_column(&mut cur, j, &choices[j][0]);
    }
    loop {
        f(&cur);
        // odometer over the columns
        let mut j = 0;
        loop {
            if j == n {
                return;
            }
            idx[j] += 1;
            if idx[j] < choices[j].len() {
                write_column(&mut cur, j, &choices[j][idx[j]]);
                break;
            }
            idx[j] = 0;
            write_column(&mut cur, j, &choices[j][0]);
            j += 1;
        }
    }
}

/// For each column, the set partition of rows induced by equal letters,
/// written as row-pair equality bitmasks: `mask[i][k]` has bit `j` set iff
/// rows `i` and `k` agree in column `j`.
fn row_agreement(t: &Tableau) -> Vec<Vec<u32>> {
    let n = t.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    (0..n)
                        .filter(|&j| t.get(i, j) == t.get(k, j))
                        .fold(0u32, |m, j| m | (1 << j))
                })
                .collect()
        })
        .collect()
}

/// Counts of `(sigma, tau)` pairs with `sigma T tau^-1 = T` and with
/// `sigma T tau^-1` in the bijection orbit of `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCounts {
    pub stabilizer: u64,
    pub into_bijection_orbit: u64,
}

/// Runs over column permutations `tau`; for each, row permutations are
/// counted by backtracking with row-multiset and agreement-pattern pruning.
pub fn pair_counts(t: &Tableau) -> PairCounts {
    let n = t.n();
    let agree = row_agreement(t);
    let rows: Vec<&[u8]> = t.rows().collect();
    let mut sorted_rows: Vec<&[u8]> = rows.clone();
    sorted_rows.sort();
    let row_stab: u64 = t.row_multiplicities().iter().map(|&f| factorial(f)).product();

    let mut stabilizer = 0u64;
    let mut into_orbit = 0u64;
    let mut moved_rows: Vec<Vec<u8>> = vec![vec![0; n]; n];
    let mut moved_agree = vec![vec![0u32; n]; n];
    for tau in (0..n).permutations(n) {
        // Y = T tau^-1: column j of T lands at tau[j]
        for i in 0..n {
            for j in 0..n {
                moved_rows[i][tau[j]] = t.get(i, j);
            }
        }
        let mut ys: Vec<&[u8]> = moved_rows.iter().map(Vec::as_slice).collect();
        ys.sort();
        if ys == sorted_rows {
            stabilizer += row_stab;
        }
        for i in 0..n {
            for k in 0..n {
                let m = agree[i][k];
                moved_agree[i][k] = (0..n)
                    .filter(|&j| m & (1 << j) != 0)
                    .fold(0u32, |acc, j| acc | (1 << tau[j]));
            }
        }
        into_orbit += count_pattern_matches(&agree, &moved_agree, n);
    }
    PairCounts {
        stabilizer,
        into_bijection_orbit: into_orbit,
    }
}

/// Number of bijections `rho` with `moved[rho(i)][rho(k)] == target[i][k]` for all `i, k`.
fn count_pattern_matches(target: &[Vec<u32>], moved: &[Vec<u32>], n: usize) -> u64 {
    fn rec(i: usize, n: usize, target: &[Vec<u32>], moved: &[Vec<u32>], rho: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        if i == n {
            return 1;
        }
        let mut total = 0;
        for r in 0..n {
            if used[r] || moved[r][r] != target[i][i] {
                continue;
            }
            if (0..i).all(|k| moved[r][rho[k]] == target[i][k]) {
                used[r] = true;
                rho.push(r);
                total += rec(i + 1, n, target, moved, rho, used);
                rho.pop();
                used[r] = false;
            }
        }
        total
    }
    rec(0, n, target, moved, &mut Vec::with_capacity(n), &mut vec![false; n])
}

/// `|{(sigma, tau) : sigma T tau^-1 = T and sigma T != T}|`.
pub fn eta(t: &Tableau, budget: &Budget) -> Result<u64> {
    budget.check_n(t.n(), budget.max_phi_n, "eta")?;
    let counts = pair_counts(t);
    Ok(counts.stabilizer - young_product(t))
}

/// `|O_bij(T) ∩ O_rows,cols(T)|`.
pub fn theta(t: &Tableau, budget: &Budget) -> Result<u64> {
    budget.check_n(t.n(), budget.max_phi_n, "theta")?;
    let counts = pair_counts(t);
    theta_from(&counts)
}

fn theta_from(c: &PairCounts) -> Result<u64> {
    if c.stabilizer == 0 || !c.into_bijection_orbit.is_multiple_of(c.stabilizer) {
        return Err(Error::internal(format!(
            "{} pairs land in the bijection orbit but the stabilizer has {} elements",
            c.into_bijection_orbit, c.stabilizer
        )));
    }
    Ok(c.into_bijection_orbit / c.stabilizer)
}

/// `prod f_i! * prod g_j!`.
fn young_product(t: &Tableau) -> u64 {
    t.row_multiplicities()
        .iter()
        .chain(t.column_multiplicities().iter())
        .map(|&m| factorial(m))
        .product()
}

/// Everything the class-size formula needs, and its value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub representative: Tableau,
    pub invariant: InvariantKey,
    pub row_multiplicities: Vec<usize>,
    pub col_multiplicities: Vec<usize>,
    pub eta: u64,
    pub theta: u64,
    pub orbit_phi_size: u64,
    #[serde(with = "serde_decimal")]
    pub orbit_psi_size: BigUint,
    #[serde(with = "serde_decimal")]
    pub cardinality: BigUint,
}

impl ClassReport {
    /// Report computed on `t` itself, without canonicalizing it first.
    pub fn for_tableau(t: &Tableau, budget: &Budget) -> Result<Self> {
        budget.check_n(t.n(), budget.max_phi_n, "class cardinality")?;
        let counts = pair_counts(t);
        ClassReport::assemble(t, &counts)
    }

    fn assemble(t: &Tableau, counts: &PairCounts) -> Result<Self> {
        let n = t.n();
        let young = young_product(t);
        if counts.stabilizer < young {
            return Err(Error::internal(format!(
                "stabilizer {} smaller than its Young subgroup {young}",
                counts.stabilizer
            )));
        }
        let eta = counts.stabilizer - young;
        let theta = theta_from(counts)?;
        let nf = factorial(n);
        let group = nf * nf;
        if !group.is_multiple_of(counts.stabilizer) {
            return Err(Error::internal(format!(
                "stabilizer order {} does not divide (n!)^2 = {group}",
                counts.stabilizer
            )));
        }
        let orbit_phi_size = group / counts.stabilizer;
        let mut report = ClassReport {
            representative: t.clone(),
            invariant: t.class_invariant(),
            row_multiplicities: t.row_multiplicities(),
            col_multiplicities: t.column_multiplicities(),
            eta,
            theta,
            orbit_phi_size,
            orbit_psi_size: BigUint::zero(),
            cardinality: BigUint::zero(),
        };
        report.evaluate_at(t.alphabet_size())?;
        Ok(report)
    }

    /// Recomputes the alphabet-dependent fields for alphabet size `s`.
    /// `eta` and `theta` do not depend on `s`.
    pub fn evaluate_at(&mut self, s: usize) -> Result<()> {
        let t = self.representative.with_alphabet(s)?;
        let psi = orbit_psi_size(&t, s);
        let (q, r) = (BigUint::from(self.orbit_phi_size) * &psi).div_rem(&BigUint::from(self.theta));
        if !r.is_zero() {
            return Err(Error::internal(format!(
                "|O_phi| * |O_psi| = {} * {psi} is not divisible by theta = {}",
                self.orbit_phi_size, self.theta
            )));
        }
        self.representative = t;
        self.orbit_psi_size = psi;
        self.cardinality = q;
        Ok(())
    }

    /// The same class over a larger (or equal) alphabet.
    pub fn at_alphabet(&self, s: usize) -> Result<Self> {
        let mut r = self.clone();
        r.evaluate_at(s)?;
        Ok(r)
    }

    pub fn stabilizer_order(&self) -> u64 {
        let nf = factorial(self.representative.n());
        nf * nf / self.orbit_phi_size
    }
}

/// Class report of `[t]`, computed on its minimal reduced representative.
pub fn class_cardinality(t: &Tableau, budget: &Budget) -> Result<ClassReport> {
    let rep = minimal_reduced(t, budget)?;
    ClassReport::for_tableau(&rep, budget)
}

/// True when every column composition is non-increasing and the columns are
/// in non-decreasing composition order.
pub fn is_reduced(t: &Tableau) -> bool {
    let p = t.parikh();
    let cols = p.columns();
    cols.iter().all(|c| c.is_non_increasing()) && cols.windows(2).all(|w| w[0] <= w[1])
}

pub(crate) fn to_columns(t: &Tableau) -> Vec<Column> {
    let n = t.n();
    (0..n)
        .map(|j| {
            let mut c = [0u8; MAX_PACKED_N];
            for (i, slot) in c.iter_mut().enumerate().take(n) {
                *slot = t.get(i, j);
            }
            c
        })
        .collect()
}

pub(crate) fn from_keys(keys: &[canon::ColumnKey], n: usize, s: usize) -> Tableau {
    let cols: Vec<Column> = keys.iter().map(|&k| canon::decode_column(k, n)).collect();
    let mut cells = vec![0u8; n * n];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            cells[i * n + j] = c[i];
        }
    }
    Tableau::from_cells_unchecked(n, s, cells)
}

fn check_canon_n(n: usize, budget: &Budget) -> Result<()> {
    budget.check_n(n, budget.max_canon_n.min(MAX_PACKED_N), "canonical form")
}

/// The unique minimum of `[t]` under the tableau order.
pub fn minimal_reduced(t: &Tableau, budget: &Budget) -> Result<Tableau> {
    let n = t.n();
    check_canon_n(n, budget)?;
    let keys = canon::canonical_keys(&to_columns(t), &RowOrders::new(n));
    Ok(from_keys(&keys, n, t.alphabet_size()))
}

/// True when `t` is its own minimal reduced form.
pub fn is_minimal_reduced(t: &Tableau, budget: &Budget) -> Result<bool> {
    Ok(&minimal_reduced(t, budget)? == t)
}
