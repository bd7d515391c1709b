//! Census records and their text renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{BiCensusResult, CensusResult};
use crate::equivalence::ClassReport;
use crate::model::InvariantKey;

/// One class in a census record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub representative: Vec<Vec<u8>>,
    pub invariant: InvariantKey,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub eta: u64,
    pub theta: u64,
    pub cardinality: String,
}

impl From<&ClassReport> for ClassRecord {
    fn from(c: &ClassReport) -> Self {
        ClassRecord {
            representative: c.representative.rows().map(<[u8]>::to_vec).collect(),
            invariant: c.invariant.clone(),
            f: c.row_multiplicities.clone(),
            g: c.col_multiplicities.clone(),
            eta: c.eta,
            theta: c.theta,
            cardinality: c.cardinality.to_string(),
        }
    }
}

/// Structured census output; `total` is the exact decimal count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: usize,
    pub s: usize,
    pub classes: usize,
    pub tested: u64,
    pub total: String,
    pub factored: String,
    pub per_class: Vec<ClassRecord>,
}

impl From<&CensusResult> for CensusRecord {
    fn from(r: &CensusResult) -> Self {
        CensusRecord {
            n: r.n,
            s: r.s,
            classes: r.representative_count,
            tested: r.tested_count,
            total: r.total_cantorian.to_string(),
            factored: factor_cantorian(&r.total_cantorian, r.n, r.s),
            per_class: r.per_class.iter().map(ClassRecord::from).collect(),
        }
    }
}

/// Writes `total` as `k·(s-1)^2·s^n` (the `(s-1)^2` factor is dropped for
/// `s = 2`) when the division is exact, else as the plain integer.
pub fn factor_cantorian(total: &BigUint, n: usize, s: usize) -> String {
    let base = BigUint::from(s).pow(n as u32) * BigUint::from((s - 1) * (s - 1));
    let (k, r) = total.div_rem(&base);
    if !r.is_zero() || total.is_zero() {
        return total.to_string();
    }
    if s == 2 {
        format!("{k}·2^{n}")
    } else {
        format!("{k}·{}^2·{s}^{n}", s - 1)
    }
}

/// Writes `total` as `(s-1)·s·k` when the division is exact.
pub fn factor_bicantorian(total: &BigUint, s: usize) -> String {
    let (k, r) = total.div_rem(&BigUint::from(s * (s - 1)));
    if !r.is_zero() || total.is_zero() {
        return total.to_string();
    }
    if s == 2 {
        format!("2·{k}")
    } else {
        format!("{}·{s}·{k}", s - 1)
    }
}

/// One-line summary of a census: `classes/tested, total T = factored`.
pub fn census_line(r: &CensusResult) -> String {
    format!(
        "({},{}): {}/{}, total {} = {}",
        r.n,
        r.s,
        r.representative_count,
        r.tested_count,
        r.total_cantorian,
        factor_cantorian(&r.total_cantorian, r.n, r.s)
    )
}

pub fn bicensus_line(r: &BiCensusResult) -> String {
    let mut line = format!(
        "({},{}): bi-cantorian {} = {} of {} cantorian",
        r.n,
        r.s,
        r.total_bicantorian,
        factor_bicantorian(&r.total_bicantorian, r.s),
        r.total_cantorian
    );
    if let Some(k) = r.class_count_b {
        let _ = write!(line, ", {k} ~b classes");
    }
    line
}

/// Lays out cells keyed by `(n, s)` as a grid with one row per `n`.
pub fn render_grid(title: &str, cells: &BTreeMap<(usize, usize), String>) -> String {
    let ns: Vec<usize> = cells.keys().map(|k| k.0).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let ss: Vec<usize> = cells.keys().map(|k| k.1).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let mut widths: Vec<usize> = ss.iter().map(|s| s.to_string().len()).collect();
    for (c, s) in ss.iter().enumerate() {
        for n in &ns {
            if let Some(v) = cells.get(&(*n, *s)) {
                widths[c] = widths[c].max(v.chars().count());
            }
        }
    }
    let mut out = format!("{title}\n");
    let _ = write!(out, "n\\s");
    for (c, s) in ss.iter().enumerate() {
        let _ = write!(out, " | {:>w$}", s, w = widths[c]);
    }
    out.push('\n');
    for n in &ns {
        let _ = write!(out, "{n:>3}");
        for (c, s) in ss.iter().enumerate() {
            let v = cells.get(&(*n, *s)).map(String::as_str).unwrap_or("");
            let pad = widths[c] - v.chars().count();
            let _ = write!(out, " | {}{v}", " ".repeat(pad));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factoring() {
        assert_eq!(factor_cantorian(&BigUint::from(1744u32), 4, 2), "109·2^4");
        assert_eq!(factor_cantorian(&BigUint::from(5076u32), 3, 3), "47·2^2·3^3");
        assert_eq!(factor_cantorian(&BigUint::from(7u32), 3, 3), "7");
        assert_eq!(factor_bicantorian(&BigUint::from(2202u32), 3), "2·3·367");
        assert_eq!(factor_bicantorian(&BigUint::from(6u32), 2), "2·3");
    }

    #[test]
    fn grid_layout() {
        let mut cells = BTreeMap::new();
        cells.insert((2, 2), "1/1".to_string());
        cells.insert((3, 2), "1/3".to_string());
        cells.insert((3, 3), "5/9".to_string());
        let g = render_grid("classes/tested", &cells);
        assert_eq!(g, "classes/tested\nn\\s |   2 |   3\n  2 | 1/1 |    \n  3 | 1/3 | 5/9\n");
    }
}
