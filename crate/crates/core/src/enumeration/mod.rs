//! Symmetry-reduced enumeration: candidate keys, minimal reduced
//! representatives, Cantorian and bi-Cantorian totals.
//!
//! A census runs key by key. Each key yields its minimal reduced tableaux
//! (the "tested" ones); the Cantorian ones among them are the class
//! representatives, and the class sizes add up to the total count. Keys are
//! independent, so they are processed in parallel and merged in key order.

mod bicantorian;
mod closed_form;
mod generate;
mod keys;
pub mod report;

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use bicantorian::{
    bicantorian_classes, bicantorian_set, count_bicantorian, ratio_b_over_c, BClass, BiCensusResult, Ratio,
};
pub use closed_form::{closed_form_c, known_c_n_p};
pub use generate::representatives_for_key;
pub use keys::{all_invariant_keys, candidate_invariant_keys, prune_key};

use crate::budget::Budget;
use crate::canon::{RowOrders, MAX_PACKED_N};
use crate::equivalence::ClassReport;
use crate::error::{Error, Result};
use crate::model::{InvariantKey, Tableau};
use crate::permanent::PermanentTester;
use crate::serde_decimal;
use generate::KeyGenerator;
use keys::check_dimensions;

/// Limits and parallelism for census runs.
#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub budget: Budget,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl CensusOptions {
    pub fn new(budget: Budget) -> Self {
        CensusOptions { budget, workers: None }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub(crate) fn deadline(&self) -> Option<Instant> {
        self.budget.time_budget.map(|d| Instant::now() + d)
    }

    pub(crate) fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(f()),
            Some(0) => Err(Error::input("worker count must be at least 1")),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| Error::internal(format!("cannot start {w} workers: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

/// Census result for one `(n, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusResult {
    pub n: usize,
    pub s: usize,
    pub representative_count: usize,
    /// Minimal reduced tableaux examined before the Cantorian filter.
    pub tested_count: u64,
    #[serde(with = "serde_decimal")]
    pub total_cantorian: BigUint,
    pub per_class: Vec<ClassReport>,
}

impl CensusResult {
    fn from_classes(n: usize, s: usize, tested: u64, per_class: Vec<ClassReport>) -> Self {
        CensusResult {
            n,
            s,
            representative_count: per_class.len(),
            tested_count: tested,
            total_cantorian: per_class.iter().map(|c| &c.cardinality).sum(),
            per_class,
        }
    }
}

#[derive(Debug, Default)]
struct KeyOutcome {
    tested: u64,
    classes: Vec<ClassReport>,
}

fn census_key(
    key: &InvariantKey,
    s: usize,
    budget: &Budget,
    deadline: Option<Instant>,
    stop: &AtomicBool,
) -> Result<KeyOutcome> {
    let n = key.n();
    let mut outcome = KeyOutcome::default();
    let mut tester = PermanentTester::new();
    let mut failure = None;
    let mut generator = KeyGenerator::new(key, s, RowOrders::new(n));
    let flow = generator.run(
        &mut |t: Tableau| {
            outcome.tested += 1;
            if tester.is_cantorian(&t) {
                match ClassReport::for_tableau(&t, budget) {
                    Ok(r) => outcome.classes.push(r),
                    Err(e) => {
                        failure = Some(e);
                        return ControlFlow::Break(());
                    }
                }
            }
            ControlFlow::Continue(())
        },
        &mut |nodes| {
            if nodes % 1024 == 0 {
                if stop.load(Ordering::Relaxed) {
                    return ControlFlow::Break(());
                }
                if deadline.is_some_and(|d| Instant::now() > d) {
                    stop.store(true, Ordering::Relaxed);
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        },
    );
    if let Some(e) = failure {
        return Err(e);
    }
    if flow.is_break() {
        return Err(Error::refusal("time budget exhausted"));
    }
    Ok(outcome)
}

/// Enumerates the Cantorian classes of `n x n` tableaux over `s` letters.
pub fn census(n: usize, s: usize, options: &CensusOptions) -> Result<CensusResult> {
    check_dimensions(n, s)?;
    let budget = &options.budget;
    budget.check_n(n, budget.max_canon_n.min(MAX_PACKED_N), "census")?;
    budget.check_n(n, budget.max_phi_n, "census class sizes")?;
    let keys = candidate_invariant_keys(n, s)?;
    let deadline = options.deadline();
    let stop = AtomicBool::new(false);
    let outcomes: Vec<Result<KeyOutcome>> = options.install(|| {
        keys.par_iter()
            .map(|k| {
                if stop.load(Ordering::Relaxed) {
                    return Err(Error::refusal("time budget exhausted"));
                }
                let r = census_key(k, s, budget, deadline, &stop);
                if r.is_err() {
                    stop.store(true, Ordering::Relaxed);
                }
                r
            })
            .collect()
    })?;

    let mut tested = 0u64;
    let mut classes = Vec::new();
    let mut done = 0usize;
    let mut first_error = None;
    for o in outcomes {
        match o {
            Ok(o) => {
                done += 1;
                tested += o.tested;
                classes.extend(o.classes);
            }
            Err(e) => {
                if first_error.is_none() || matches!(first_error, Some(Error::Refusal(_))) && !matches!(e, Error::Refusal(_)) {
                    first_error = Some(e);
                }
            }
        }
    }
    match first_error {
        Some(Error::Refusal(msg)) => {
            let partial: BigUint = classes.iter().map(|c| &c.cardinality).sum();
            Err(Error::refusal(format!(
                "census ({n},{s}): {msg} after {done} of {} keys; {} classes, {tested} tested, {partial} Cantorian tableaux so far",
                keys.len(),
                classes.len()
            )))
        }
        Some(e) => Err(e),
        None => Ok(CensusResult::from_classes(n, s, tested, classes)),
    }
}

/// Class reports of the Cantorian classes over `s` letters. For `s > n` the
/// representatives over `n` letters are reused and re-evaluated at `s`.
pub(crate) fn count_cantorian_classes(n: usize, s: usize, options: &CensusOptions) -> Result<Vec<ClassReport>> {
    let base = census(n, s.min(n), options)?;
    base.per_class.iter().map(|c| c.at_alphabet(s)).collect()
}

/// `C(n, s)`, the number of Cantorian `n x n` tableaux over `s` letters.
pub fn count_cantorian(n: usize, s: usize, options: &CensusOptions) -> Result<BigUint> {
    Ok(census_at(n, s, options)?.total_cantorian)
}

/// The census over `min(n, s)` letters evaluated at `s` letters.
pub fn census_at(n: usize, s: usize, options: &CensusOptions) -> Result<CensusResult> {
    check_dimensions(n, s)?;
    let base = census(n, s.min(n), options)?;
    if s <= n {
        return Ok(base);
    }
    let classes = base
        .per_class
        .iter()
        .map(|c| c.at_alphabet(s))
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusResult::from_classes(n, s, base.tested_count, classes))
}

/// `c(n, p)` for every `p` in `0..=n^2`, by expanding the two-letter classes.
pub fn c_n_p_distribution(n: usize, options: &CensusOptions) -> Result<Vec<BigUint>> {
    let classes = count_cantorian_classes(n, 2, options)?;
    let mut out = vec![BigUint::zero(); n * n + 1];
    for report in &classes {
        let mut by_p = vec![0u64; n * n + 1];
        bicantorian::for_each_class_visit(report, 2, options, |y| {
            by_p[y.cells().iter().filter(|&&a| a == 2).count()] += 1;
        })?;
        for (p, k) in by_p.into_iter().enumerate() {
            out[p] += bicantorian::per_member(k, report.theta, &report.representative)?;
        }
    }
    Ok(out)
}

/// Two-letter Cantorian tableaux with exactly `p` occurrences of letter 2.
pub fn count_c_n_p(n: usize, p: usize, options: &CensusOptions) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::input(format!("c(n, p) needs n >= 2, got {n}")));
    }
    if p > n * n {
        return Err(Error::input(format!("p = {p} exceeds n^2 = {}", n * n)));
    }
    if let Some(v) = known_c_n_p(n, p) {
        return Ok(BigUint::from(v));
    }
    Ok(c_n_p_distribution(n, options)?.swap_remove(p))
}
