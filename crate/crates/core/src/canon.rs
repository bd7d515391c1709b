//! Packed column keys and the canonical-form search.
//!
//! A column of height `n <= 8` is packed into a `u64` whose natural order is
//! the Parikh composition order on words: the high half holds the
//! complemented composition (so lexicographically larger compositions come
//! first), the low half the letters, 4 bits each, left-aligned.
//!
//! The minimal reduced form of a tableau is found by trying every row order:
//! once the rows are fixed, each column is relabelled independently to its
//! smallest image under a letter bijection and the columns are sorted. The
//! smallest resulting key sequence over all row orders is the minimum of the
//! class.

use itertools::Itertools;

/// Hard limit for the packed representation.
pub const MAX_PACKED_N: usize = 8;

pub type ColumnKey = u64;

/// All permutations of `0..n`, identity first.
#[derive(Debug, Clone)]
pub struct RowOrders {
    n: usize,
    perms: Vec<[u8; MAX_PACKED_N]>,
}

impl RowOrders {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_PACKED_N);
        let perms = (0..n as u8)
            .permutations(n)
            .map(|p| {
                let mut a = [0u8; MAX_PACKED_N];
                a[..n].copy_from_slice(&p);
                a
            })
            .collect();
        RowOrders { n, perms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8; MAX_PACKED_N]> {
        self.perms.iter()
    }
}

pub type Column = [u8; MAX_PACKED_N];

/// Key of the smallest relabelling of `col` read in the row order `rho`
/// (`rho[i]` is the source row placed at position `i`).
#[inline]
pub fn min_column_key(col: &Column, rho: &[u8; MAX_PACKED_N], n: usize) -> ColumnKey {
    let mut seen = [0u8; MAX_PACKED_N];
    let mut nseen = 0usize;
    let mut label = [0u8; MAX_PACKED_N];
    let mut count = [0u8; MAX_PACKED_N];
    for i in 0..n {
        let a = col[rho[i] as usize];
        let idx = match seen[..nseen].iter().position(|&x| x == a) {
            Some(k) => k,
            None => {
                seen[nseen] = a;
                nseen += 1;
                nseen - 1
            }
        };
        label[i] = idx as u8;
        count[idx] += 1;
    }
    // letters by decreasing frequency, ties by first occurrence
    let mut order = [0u8; MAX_PACKED_N];
    for k in 0..nseen {
        order[k] = k as u8;
    }
    for k in 1..nseen {
        let mut m = k;
        while m > 0 && count[order[m - 1] as usize] < count[order[m] as usize] {
            order.swap(m - 1, m);
            m -= 1;
        }
    }
    let mut rank = [0u8; MAX_PACKED_N];
    let mut comp: u64 = 0;
    for r in 0..MAX_PACKED_N {
        let c = if r < nseen {
            rank[order[r] as usize] = r as u8;
            count[order[r] as usize]
        } else {
            0
        };
        comp = (comp << 4) | c as u64;
    }
    let mut lex: u64 = 0;
    for i in 0..MAX_PACKED_N {
        let d = if i < n { rank[label[i] as usize] + 1 } else { 0 };
        lex = (lex << 4) | d as u64;
    }
    ((0xFFFF_FFFF - comp) << 32) | lex
}

/// Key of a column taken as is (no relabelling). Letters must be `<= 8`.
pub fn raw_column_key(col: &Column, n: usize) -> ColumnKey {
    let mut count = [0u8; 16];
    let mut lex: u64 = 0;
    for i in 0..MAX_PACKED_N {
        let d = if i < n { col[i] } else { 0 };
        if i < n {
            count[d as usize] += 1;
        }
        lex = (lex << 4) | d as u64;
    }
    let mut comp: u64 = 0;
    for c in &count[1..=MAX_PACKED_N] {
        comp = (comp << 4) | *c as u64;
    }
    ((0xFFFF_FFFF - comp) << 32) | lex
}

/// Letters encoded in a key.
pub fn decode_column(key: ColumnKey, n: usize) -> Column {
    let mut col = [0u8; MAX_PACKED_N];
    for (i, c) in col.iter_mut().enumerate().take(n) {
        *c = ((key >> (4 * (MAX_PACKED_N - 1 - i))) & 0xF) as u8;
    }
    col
}

/// Canonical key sequence (sorted) of the class of the `n x k` array given
/// column-wise. Returns the minimum over all row orders.
pub fn canonical_keys(cols: &[Column], orders: &RowOrders) -> Vec<ColumnKey> {
    let n = orders.n();
    let mut best: Option<Vec<ColumnKey>> = None;
    let mut tmp = vec![0u64; cols.len()];
    for rho in orders.iter() {
        for (t, c) in tmp.iter_mut().zip(cols) {
            *t = min_column_key(c, rho, n);
        }
        tmp.sort_unstable();
        match &best {
            Some(b) if b.as_slice() <= tmp.as_slice() => {}
            _ => best = Some(tmp.clone()),
        }
    }
    best.unwrap_or_default()
}

/// True when no row order produces a smaller sorted key sequence than `keys`,
/// the (already canonical-per-column, sorted) keys of `cols`.
pub fn is_minimal(cols: &[Column], keys: &[ColumnKey], orders: &RowOrders, tmp: &mut Vec<ColumnKey>) -> bool {
    let n = orders.n();
    let k = cols.len();
    tmp.clear();
    tmp.resize(k, 0);
    for rho in orders.iter().skip(1) {
        let mut lowest = ColumnKey::MAX;
        for (t, c) in tmp.iter_mut().zip(cols) {
            *t = min_column_key(c, rho, n);
            lowest = lowest.min(*t);
        }
        if lowest > keys[0] {
            continue;
        }
        if lowest < keys[0] {
            return false;
        }
        tmp.sort_unstable();
        if tmp.as_slice() < keys {
            return false;
        }
    }
    true
}
