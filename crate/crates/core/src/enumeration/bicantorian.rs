//! Bi-Cantorian counts, obtained by expanding each Cantorian class, and the
//! coarser `~b` classes of the bi-Cantorian set.

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{count_cantorian_classes, CensusOptions};
use crate::equivalence::{for_each_relabelling, orbit_phi, ClassReport};
use crate::error::{Error, Result};
use crate::model::Tableau;
use crate::serde_decimal;

/// Whether some permutation of rows reads `word` along the diagonal.
/// `reach` is scratch space indexed by sets of used rows.
pub(crate) fn in_permanent(cells: &[u8], n: usize, word: &[u8], reach: &mut Vec<bool>) -> bool {
    let full = (1usize << n) - 1;
    reach.clear();
    reach.resize(full + 1, false);
    reach[0] = true;
    for mask in 0..full {
        if !reach[mask] {
            continue;
        }
        let j = mask.count_ones() as usize;
        for i in 0..n {
            if mask & (1 << i) == 0 && cells[i * n + j] == word[j] {
                reach[mask | (1 << i)] = true;
            }
        }
    }
    reach[full]
}

/// True when no column-word of `t` lies in its permanent.
pub(crate) fn columns_avoid_permanent(t: &Tableau, column: &mut Vec<u8>, reach: &mut Vec<bool>) -> bool {
    let n = t.n();
    let cells = t.cells();
    column.resize(n, 0);
    (0..n).all(|j| {
        for i in 0..n {
            column[i] = cells[i * n + j];
        }
        !in_permanent(cells, n, column, reach)
    })
}

/// Calls `f` on `beta(X)` for every `X` in the row/column orbit of `rep` and
/// every distinct column relabelling `beta(X)` over `s` letters. Each member
/// of the class is visited exactly `theta` times.
pub(crate) fn for_each_class_visit(
    report: &ClassReport,
    s: usize,
    options: &CensusOptions,
    mut f: impl FnMut(&Tableau),
) -> Result<()> {
    let rep = report.representative.with_alphabet(s)?;
    let visits = BigUint::from(report.orbit_phi_size) * &report.orbit_psi_size;
    if visits > BigUint::from(options.budget.max_orbit) {
        return Err(Error::refusal(format!(
            "expanding the class of {rep} visits {visits} tableaux, above the limit {}",
            options.budget.max_orbit
        )));
    }
    for x in orbit_phi(&rep, &options.budget)? {
        for_each_relabelling(&x, s, &mut f);
    }
    Ok(())
}

/// Divides a visit count by `theta`, checking exactness.
pub(crate) fn per_member(count: u64, theta: u64, rep: &Tableau) -> Result<u64> {
    if theta == 0 || !count.is_multiple_of(theta) {
        return Err(Error::internal(format!(
            "{count} visits in the class of {rep} are not a multiple of theta = {theta}"
        )));
    }
    Ok(count / theta)
}

/// Bi-Cantorian count for one `(n, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiCensusResult {
    pub n: usize,
    pub s: usize,
    #[serde(with = "serde_decimal")]
    pub total_bicantorian: BigUint,
    #[serde(with = "serde_decimal")]
    pub total_cantorian: BigUint,
    /// Number of `~b` classes, when they were computed.
    pub class_count_b: Option<usize>,
}

/// Counts the bi-Cantorian tableaux by testing every member of every
/// Cantorian class.
pub fn count_bicantorian(n: usize, s: usize, options: &CensusOptions) -> Result<BiCensusResult> {
    let classes = count_cantorian_classes(n, s, options)?;
    let deadline = options.deadline();
    let counts: Vec<Result<u64>> = options.install(|| {
        classes
            .par_iter()
            .map(|report| {
                if deadline.is_some_and(|d| std::time::Instant::now() > d) {
                    return Err(Error::refusal("time budget exhausted during class expansion"));
                }
                let mut column = Vec::new();
                let mut reach = Vec::new();
                let mut hits = 0u64;
                for_each_class_visit(report, s, options, |y| {
                    if columns_avoid_permanent(y, &mut column, &mut reach) {
                        hits += 1;
                    }
                })?;
                per_member(hits, report.theta, &report.representative)
            })
            .collect()
    })?;
    let mut total = BigUint::zero();
    let mut done = 0usize;
    let mut first_error = None;
    for c in counts {
        match c {
            Ok(k) => {
                total += k;
                done += 1;
            }
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    if let Some(e) = first_error {
        return Err(match e {
            Error::Refusal(msg) => Error::refusal(format!(
                "{msg}; {done} of {} classes expanded, {total} bi-Cantorian tableaux so far",
                classes.len()
            )),
            other => other,
        });
    }
    let total_cantorian = classes.iter().map(|c| &c.cardinality).sum();
    Ok(BiCensusResult {
        n,
        s,
        total_bicantorian: total,
        total_cantorian,
        class_count_b: None,
    })
}

/// One class of the bi-Cantorian set under `~b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BClass {
    /// Smallest member in row-major order.
    pub representative: Tableau,
    pub size: usize,
}

/// Every bi-Cantorian tableau, sorted by row-major entries.
pub fn bicantorian_set(n: usize, s: usize, options: &CensusOptions) -> Result<Vec<Tableau>> {
    let classes = count_cantorian_classes(n, s, options)?;
    let total: BigUint = classes.iter().map(|c| &c.cardinality).sum();
    if total > BigUint::from(options.budget.max_orbit) {
        return Err(Error::refusal(format!(
            "{total} Cantorian tableaux exceed the limit {} for materializing the bi-Cantorian set",
            options.budget.max_orbit
        )));
    }
    let mut members: Vec<Vec<u8>> = Vec::new();
    let mut column = Vec::new();
    let mut reach = Vec::new();
    for report in &classes {
        let mut found = Vec::new();
        for_each_class_visit(report, s, options, |y| {
            if columns_avoid_permanent(y, &mut column, &mut reach) {
                found.push(y.cells().to_vec());
            }
        })?;
        found.sort_unstable();
        found.dedup();
        members.extend(found);
    }
    members.sort_unstable();
    Ok(members
        .into_iter()
        .map(|c| Tableau::new(n, s, c).expect("generated in range"))
        .collect())
}

/// Connected components of the bi-Cantorian set under: any row/column
/// permutation pair whose image is again bi-Cantorian (this includes the
/// simultaneous ones, which always are), and any global renaming of letters.
pub fn bicantorian_classes(n: usize, s: usize, options: &CensusOptions) -> Result<Vec<BClass>> {
    let set = bicantorian_set(n, s, options)?;
    let cells: Vec<&[u8]> = set.iter().map(Tableau::cells).collect();
    let index = |c: &[u8]| cells.binary_search(&c).ok();
    let mut uf = UnionFind::<usize>::new(set.len());
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let renamings: Vec<Vec<u8>> = (1..=s as u8).permutations(s).collect();
    let mut image = vec![0u8; n * n];
    for (k, t) in cells.iter().enumerate() {
        for sigma in &perms {
            for tau in &perms {
                for i in 0..n {
                    for j in 0..n {
                        image[sigma[i] * n + tau[j]] = t[i * n + j];
                    }
                }
                if let Some(m) = index(&image) {
                    uf.union(k, m);
                }
            }
        }
        for r in &renamings {
            for (dst, &a) in image.iter_mut().zip(t.iter()) {
                *dst = r[a as usize - 1];
            }
            match index(&image) {
                Some(m) => {
                    uf.union(k, m);
                }
                None => {
                    return Err(Error::internal(format!(
                        "renaming letters of bi-Cantorian {} left the set",
                        set[k]
                    )))
                }
            }
        }
    }
    let mut sizes = vec![0usize; set.len()];
    for k in 0..set.len() {
        sizes[uf.find(k)] += 1;
    }
    // the set is sorted, so the first member met in each component is its smallest
    let mut seen = vec![false; set.len()];
    let mut out = Vec::new();
    for (k, t) in set.iter().enumerate() {
        let root = uf.find(k);
        if !std::mem::replace(&mut seen[root], true) {
            out.push(BClass {
                representative: t.clone(),
                size: sizes[root],
            });
        }
    }
    Ok(out)
}

/// `B(n, s) / C(n, s)` exactly, with a three-decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    pub value: BigRational,
}

impl Ratio {
    pub fn new(b: &BigUint, c: &BigUint) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::input("ratio with a zero denominator"));
        }
        Ok(Ratio {
            value: BigRational::new(b.clone().into(), c.clone().into()),
        })
    }

    /// Rounded half up to `places` decimals.
    pub fn decimal(&self, places: u32) -> String {
        let scale = num_bigint::BigInt::from(10u32).pow(places);
        let scaled = &self.value * BigRational::from_integer(scale.clone());
        let half = BigRational::new(1.into(), 2.into());
        let rounded = (scaled + half).floor().to_integer();
        let int = &rounded / &scale;
        let frac = (&rounded % &scale).to_u64().unwrap_or(0);
        if places == 0 {
            int.to_string()
        } else {
            format!("{int}.{frac:0width$}", width = places as usize)
        }
    }
}

/// `B(n, s) / C(n, s)`.
pub fn ratio_b_over_c(n: usize, s: usize, options: &CensusOptions) -> Result<Ratio> {
    let b = count_bicantorian(n, s, options)?;
    Ratio::new(&b.total_bicantorian, &b.total_cantorian)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn transversal_dp() {
        let t = Tableau::from_digit_rows(&["111", "111", "222"], 2).unwrap();
        let mut reach = Vec::new();
        assert!(in_permanent(t.cells(), 3, &[1, 2, 1], &mut reach));
        assert!(!in_permanent(t.cells(), 3, &[1, 1, 1], &mut reach));
    }

    #[test]
    fn ratio_rendering() {
        let r = Ratio::new(&BigUint::from(182u32), &BigUint::from(1744u32)).unwrap();
        assert_eq!(r.decimal(3), "0.104");
        let r = Ratio::new(&BigUint::from(4010u32), &BigUint::from(88480u32)).unwrap();
        assert_eq!(r.decimal(3), "0.045");
        assert_eq!(Ratio::new(&BigUint::from(2u32), &BigUint::from(4u32)).unwrap().decimal(3), "0.500");
    }
}
