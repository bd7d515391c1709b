use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of naturals, zero parts allowed.
///
/// Ordering is the composition order: shorter compositions come first and
/// compositions of equal length are compared by *inverse* lexicographic
/// order, so `(5) < (4,1) < (3,2) < (2,3) < (1,4) < (3,1,1)`.
/// Equality requires equal length, so `(2,1) != (2,1,0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::input("a composition needs at least one part"));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of non-zero parts.
    pub fn nonzero_len(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Sorts the parts non-increasingly and drops the zeros.
    pub fn to_partition(&self) -> Partition {
        let mut parts: Vec<u32> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.is_empty() {
            parts.push(0);
        }
        Partition(Composition(parts))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares two compositions under the composition order.
pub fn cmp_composition(a: &Composition, b: &Composition) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A composition with non-increasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let c = Composition::new(parts)?;
        if !c.is_non_increasing() {
            return Err(Error::input(format!("{c} is not non-increasing")));
        }
        Ok(Partition(c))
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn weight(&self) -> u32 {
        self.0.weight()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.0.parts()[0]
    }

    /// The parts padded with zeros to length `s`.
    pub fn padded(&self, s: usize) -> Vec<u32> {
        let mut v = self.0.parts().to_vec();
        v.resize(s.max(v.len()), 0);
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All partitions of `n` into at most `max_parts` positive parts, largest
/// part first within each partition, listed in the composition order.
pub fn partitions_of(n: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, max_parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            rec(rest - p, p, max_parts, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    if n > 0 && max_parts > 0 {
        rec(n, n, max_parts, &mut Vec::new(), &mut raw);
    }
    let mut parts: Vec<Partition> = raw
        .into_iter()
        .map(|p| Partition(Composition(p)))
        .collect();
    parts.sort();
    parts
}
