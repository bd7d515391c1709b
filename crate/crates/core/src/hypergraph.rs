//! The colored hypergraph of a tableau and the 2x2 / 4-cycle bijection.
//!
//! Vertices are the cells `v_ij`, colored by their letters. The blocks are
//! the `n` rows (`L`) and the `n!` diagonals `{v_pi(j),j}` (`P`), each read
//! in order of the column index. A tableau is Cantorian exactly when no
//! color sequence is shared by a row block and a diagonal block.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::model::Tableau;
use crate::permanent::{is_bicantorian, is_cantorian};

/// A vertex `v_ij`, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredHypergraph {
    n: usize,
    colors: Vec<u8>,
    row_blocks: Vec<Vec<Vertex>>,
    diagonal_block_count: usize,
    distinct_diagonal_sets: usize,
    block_sizes: BTreeSet<usize>,
    degrees: Vec<usize>,
    chi_l: BTreeSet<Vec<u8>>,
    chi_p: BTreeSet<Vec<u8>>,
}

/// Builds the hypergraph of `t`, materializing all `n!` diagonal blocks once
/// to record the structural data.
pub fn build_hypergraph(t: &Tableau, budget: &Budget) -> Result<ColoredHypergraph> {
    let n = t.n();
    budget.check_n(n, budget.max_hypergraph_n, "hypergraph construction")?;
    let mut degrees = vec![0usize; n * n];
    let mut block_sizes = BTreeSet::new();
    let row_blocks: Vec<Vec<Vertex>> = (0..n)
        .map(|i| (0..n).map(|j| Vertex { row: i, col: j }).collect())
        .collect();
    let mut chi_l = BTreeSet::new();
    for b in &row_blocks {
        block_sizes.insert(b.len());
        for v in b {
            degrees[v.row * n + v.col] += 1;
        }
        chi_l.insert(b.iter().map(|v| t.get(v.row, v.col)).collect());
    }
    let mut chi_p = BTreeSet::new();
    let mut vertex_sets = BTreeSet::new();
    let mut diagonal_block_count = 0;
    for pi in (0..n).permutations(n) {
        let block: Vec<Vertex> = pi.iter().enumerate().map(|(j, &i)| Vertex { row: i, col: j }).collect();
        diagonal_block_count += 1;
        block_sizes.insert(block.len());
        for v in &block {
            degrees[v.row * n + v.col] += 1;
        }
        chi_p.insert(block.iter().map(|v| t.get(v.row, v.col)).collect::<Vec<u8>>());
        vertex_sets.insert(block);
    }
    Ok(ColoredHypergraph {
        n,
        colors: t.cells().to_vec(),
        row_blocks,
        diagonal_block_count,
        distinct_diagonal_sets: vertex_sets.len(),
        block_sizes,
        degrees,
        chi_l,
        chi_p,
    })
}

impl ColoredHypergraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color(&self, v: Vertex) -> u8 {
        self.colors[v.row * self.n + v.col]
    }

    pub fn row_blocks(&self) -> &[Vec<Vertex>] {
        &self.row_blocks
    }

    pub fn diagonal_block_count(&self) -> usize {
        self.diagonal_block_count
    }

    /// Number of diagonal blocks that are distinct as vertex sets.
    pub fn distinct_diagonal_blocks(&self) -> usize {
        self.distinct_diagonal_sets
    }

    /// Number of blocks containing each vertex, row-major.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// The common degree, if every vertex has the same one.
    pub fn regularity(&self) -> Option<usize> {
        self.degrees.iter().copied().all_equal_value().ok()
    }

    /// The common block size, if all blocks have the same one.
    pub fn uniformity(&self) -> Option<usize> {
        (self.block_sizes.len() == 1).then(|| *self.block_sizes.first().expect("non-empty"))
    }

    /// Colour sequences of the row blocks.
    pub fn chi_l(&self) -> &BTreeSet<Vec<u8>> {
        &self.chi_l
    }

    /// Colour sequences of the diagonal blocks.
    pub fn chi_p(&self) -> &BTreeSet<Vec<u8>> {
        &self.chi_p
    }

    pub fn intersection_size(&self) -> usize {
        self.chi_l.intersection(&self.chi_p).count()
    }

    pub fn record(&self) -> HypergraphRecord {
        let n = self.n;
        HypergraphRecord {
            n,
            vertices: (0..n)
                .cartesian_product(0..n)
                .map(|(i, j)| VertexRecord {
                    row: i + 1,
                    col: j + 1,
                    color: self.colors[i * n + j],
                })
                .collect(),
            row_blocks: self
                .row_blocks
                .iter()
                .map(|b| b.iter().map(|v| [v.row + 1, v.col + 1]).collect())
                .collect(),
            diagonal_block_count: self.diagonal_block_count,
            chi_l: self.chi_l.iter().cloned().collect(),
            chi_p: self.chi_p.iter().cloned().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub row: usize,
    pub col: usize,
    pub color: u8,
}

/// Export format; vertex coordinates are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphRecord {
    pub n: usize,
    pub vertices: Vec<VertexRecord>,
    pub row_blocks: Vec<Vec<[usize; 2]>>,
    pub diagonal_block_count: usize,
    #[serde(rename = "chi_L")]
    pub chi_l: Vec<Vec<u8>>,
    #[serde(rename = "chi_P")]
    pub chi_p: Vec<Vec<u8>>,
}

/// Some colour sequence appears on both a row block and a diagonal block.
pub fn is_intersecting(h: &ColoredHypergraph) -> bool {
    h.intersection_size() > 0
}

/// A part-preserving bijection between the colour sequences exists: same
/// number of row sequences, of diagonal sequences and of shared ones.
pub fn coloring_isomorphic(h: &ColoredHypergraph, k: &ColoredHypergraph) -> bool {
    h.n == k.n
        && h.chi_l.len() == k.chi_l.len()
        && h.chi_p.len() == k.chi_p.len()
        && h.intersection_size() == k.intersection_size()
}

/// The three 3x3 tableaux with isomorphic hypergraphs in distinct classes.
pub fn converse_counterexample_tableaux() -> [Tableau; 3] {
    ["111/122/133", "111/122/233", "111/222/333"].map(|spec| {
        let rows: Vec<&str> = spec.split('/').collect();
        Tableau::from_digit_rows(&rows, 3).expect("valid")
    })
}

/// Summary of [`converse_counterexample_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConverseReport {
    pub tableaux: Vec<Tableau>,
    /// `(|chi(L)|, |chi(P)|, |chi(L) ∩ chi(P)|)` for each tableau.
    pub signatures: Vec<(usize, usize, usize)>,
}

/// Checks that the three counterexample tableaux lie in pairwise different
/// classes, are Cantorian with 3 row and 6 diagonal colour sequences and no
/// shared one, and have pairwise isomorphic hypergraphs.
pub fn converse_counterexample_check() -> Result<ConverseReport> {
    let ts = converse_counterexample_tableaux();
    let fail = |clause: &str| Err(Error::internal(format!("converse counterexample: {clause}")));
    let keys: Vec<_> = ts.iter().map(Tableau::class_invariant).collect();
    if !keys.iter().all_unique() {
        return fail("class invariants are not pairwise distinct");
    }
    let budget = Budget::default();
    let hs = ts.iter().map(|t| build_hypergraph(t, &budget)).collect::<Result<Vec<_>>>()?;
    for (t, h) in ts.iter().zip(&hs) {
        if !is_cantorian(t) {
            return fail(&format!("{t} is not Cantorian"));
        }
        if h.chi_l().len() != 3 {
            return fail(&format!("{t} does not have 3 distinct row blocks"));
        }
        if h.chi_p().len() != 6 {
            return fail(&format!("{t} does not have 6 distinct diagonal colour sequences"));
        }
        if h.intersection_size() != 0 {
            return fail(&format!("{t} has a shared row/diagonal colour sequence"));
        }
    }
    for (a, b) in hs.iter().tuple_combinations() {
        if !coloring_isomorphic(a, b) {
            return fail("hypergraphs are not pairwise isomorphic");
        }
    }
    Ok(ConverseReport {
        signatures: hs
            .iter()
            .map(|h| (h.chi_l().len(), h.chi_p().len(), h.intersection_size()))
            .collect(),
        tableaux: ts.to_vec(),
    })
}

/// Colours of `v_1..v_4`, clockwise, on the 4-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleColoring(pub [u8; 4]);

impl CycleColoring {
    /// A proper colouring: cyclically adjacent vertices differ.
    pub fn new(colors: [u8; 4]) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::input("colours start at 1"));
        }
        if (0..4).any(|k| colors[k] == colors[(k + 1) % 4]) {
            return Err(Error::input(format!("{colors:?} is not a proper colouring of the 4-cycle")));
        }
        Ok(CycleColoring(colors))
    }

    pub fn colors(&self) -> [u8; 4] {
        self.0
    }
}

/// `[[a, b], [c, d]]` goes to the colouring `(a, b, d, c)`.
pub fn psi(b: &Tableau) -> Result<CycleColoring> {
    if b.n() != 2 {
        return Err(Error::input(format!("psi takes a 2x2 tableau, got {}x{}", b.n(), b.n())));
    }
    if !is_bicantorian(b) {
        return Err(Error::input(format!("{b} is not bi-Cantorian")));
    }
    CycleColoring::new([b.get(0, 0), b.get(0, 1), b.get(1, 1), b.get(1, 0)])
        .map_err(|e| Error::internal(format!("psi produced an improper colouring: {e}")))
}

/// Inverse of [`psi`], over `s` letters.
pub fn psi_inverse(k: &CycleColoring, s: usize) -> Result<Tableau> {
    let [a, b, d, c] = CycleColoring::new(k.0)?.0;
    let t = Tableau::from_rows(&[[a, b], [c, d]], s)?;
    if !is_bicantorian(&t) {
        return Err(Error::internal(format!("psi_inverse produced {t}, which is not bi-Cantorian")));
    }
    Ok(t)
}

/// All proper colourings of the 4-cycle with colours `1..=s`.
pub fn proper_cycle_colorings(s: usize) -> Vec<CycleColoring> {
    (0..4)
        .map(|_| 1..=s as u8)
        .multi_cartesian_product()
        .filter_map(|c| CycleColoring::new([c[0], c[1], c[2], c[3]]).ok())
        .collect()
}

/// `|K(s)| = s(s-1)(s^2-3s+3)`.
pub fn count_k(s: u64) -> u64 {
    if s == 0 {
        return 0;
    }
    s * (s - 1) * (s * s + 3 - 3 * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&str], s: usize) -> Tableau {
        Tableau::from_digit_rows(rows, s).unwrap()
    }

    fn h(rows: &[&str], s: usize) -> ColoredHypergraph {
        build_hypergraph(&t(rows, s), &Budget::default()).unwrap()
    }

    #[test]
    fn structure() {
        let g = h(&["12", "21"], 2);
        assert_eq!((g.row_blocks().len(), g.diagonal_block_count()), (2, 2));
        assert_eq!(g.regularity(), Some(2));
        let g = h(&["123", "231", "312"], 3);
        assert_eq!((g.row_blocks().len(), g.diagonal_block_count()), (3, 6));
        assert_eq!(g.regularity(), Some(3));
        let g = build_hypergraph(&Tableau::constant(4, 2, 1).unwrap(), &Budget::default()).unwrap();
        assert_eq!((g.uniformity(), g.regularity()), (Some(4), Some(7)));
        assert_eq!(g.distinct_diagonal_blocks(), 24);
        let big = Tableau::constant(8, 2, 1).unwrap();
        assert!(matches!(build_hypergraph(&big, &Budget::default()), Err(Error::Refusal(_))));
    }

    #[test]
    fn intersecting_examples() {
        assert!(is_intersecting(&h(&["11", "11"], 2)));
        assert!(!is_intersecting(&h(&["11", "22"], 2)));
        assert!(is_intersecting(&h(&["12", "22"], 2)));
    }

    #[test]
    fn isomorphism_examples() {
        let a = h(&["11", "22"], 2);
        assert!(coloring_isomorphic(&a, &a));
        assert!(!coloring_isomorphic(&a, &h(&["11", "11"], 2)));
        let report = converse_counterexample_check().unwrap();
        assert_eq!(report.signatures, vec![(3, 6, 0); 3]);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&t(&["12", "21"], 2)).unwrap().colors(), [1, 2, 1, 2]);
        assert_eq!(psi(&t(&["12", "34"], 4)).unwrap().colors(), [1, 2, 4, 3]);
        assert!(psi(&t(&["11", "22"], 2)).is_err());
        assert!(psi_inverse(&CycleColoring([1, 1, 2, 2]), 2).is_err());
        assert_eq!(psi_inverse(&CycleColoring([1, 2, 4, 3]), 4).unwrap(), t(&["12", "34"], 4));
    }

    #[test]
    fn count_k_values() {
        assert_eq!(count_k(2), 2);
        assert_eq!(count_k(4), 84);
        assert_eq!(count_k(6), 630);
        for s in 1..=6 {
            assert_eq!(proper_cycle_colorings(s as usize).len() as u64, count_k(s));
        }
    }

    #[test]
    fn record_export() {
        let r = h(&["12", "21"], 2).record();
        assert_eq!(r.vertices.len(), 4);
        assert_eq!(r.row_blocks[1], vec![[2, 1], [2, 2]]);
        assert_eq!(r.chi_p, vec![vec![1, 1], vec![2, 2]]);
    }
}
