//! Work limits shared by the brute-force entry points.
//!
//! Every operation whose cost grows factorially or exponentially checks one
//! of these limits first and returns [`Error::Refusal`] instead of running
//! away. Defaults can be overridden through the `CANTAB_BUDGET` environment
//! variable, a comma-separated list of `key=value` pairs:
//!
//! ```text
//! CANTAB_BUDGET="max_orbit=5000000,max_cells=1048576,time_budget=120"
//! ```

use std::time::Duration;

use crate::error::{Error, Result};

/// Name of the environment variable holding budget overrides.
pub const BUDGET_ENV: &str = "CANTAB_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest `n` for which the permanent is enumerated over all of `S_n`.
    pub max_permanent_n: usize,
    /// Largest `n` for which row/column-permutation orbits are materialized.
    pub max_phi_n: usize,
    /// Largest column-bijection orbit that may be materialized.
    pub max_orbit: u64,
    /// Largest `n` accepted by the canonical-form search (`n!` row orders).
    pub max_canon_n: usize,
    /// Largest `s^(n^2)` for exhaustive enumeration of all tableaux.
    pub max_cells: u64,
    /// Largest `n` for which hypergraph diagonal blocks are built.
    pub max_hypergraph_n: usize,
    /// Wall-clock limit for census runs.
    pub time_budget: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_permanent_n: 8,
            max_phi_n: 6,
            max_orbit: 10_000_000,
            max_canon_n: 8,
            max_cells: 1 << 26,
            max_hypergraph_n: 7,
            time_budget: None,
        }
    }
}

impl Budget {
    /// Defaults with any overrides found in [`BUDGET_ENV`] applied.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(spec) => Budget::default().with_overrides(&spec),
            Err(_) => Ok(Budget::default()),
        }
    }

    /// Applies `key=value` overrides separated by commas.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::input(format!("budget entry `{item}` is not key=value")))?;
            let number: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("budget value `{value}` is not a number")))?;
            if number == 0 {
                return Err(Error::input(format!("budget `{key}` must be positive")));
            }
            match key.trim() {
                "max_permanent_n" => self.max_permanent_n = number as usize,
                "max_phi_n" => self.max_phi_n = number as usize,
                "max_orbit" => self.max_orbit = number,
                "max_canon_n" => self.max_canon_n = number as usize,
                "max_cells" => self.max_cells = number,
                "max_hypergraph_n" => self.max_hypergraph_n = number as usize,
                "time_budget" => self.time_budget = Some(Duration::from_secs(number)),
                other => return Err(Error::input(format!("unknown budget key `{other}`"))),
            }
        }
        Ok(self)
    }

    pub(crate) fn check_n(&self, n: usize, limit: usize, what: &str) -> Result<()> {
        if n > limit {
            Err(Error::refusal(format!("{what} needs n <= {limit}, got n = {n}")))
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let b = Budget::default()
            .with_overrides("max_orbit=12, time_budget=3,max_cells=99")
            .unwrap();
        assert_eq!(b.max_orbit, 12);
        assert_eq!(b.max_cells, 99);
        assert_eq!(b.time_budget, Some(Duration::from_secs(3)));
    }

    #[test]
    fn bad_overrides_rejected() {
        assert!(Budget::default().with_overrides("max_orbit").is_err());
        assert!(Budget::default().with_overrides("max_orbit=x").is_err());
        assert!(Budget::default().with_overrides("max_orbit=0").is_err());
        assert!(Budget::default().with_overrides("colour=3").is_err());
    }
}
