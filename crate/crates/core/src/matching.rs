//! Hopcroft-Karp maximum bipartite matching, `O(E sqrt(V))`.

const NONE: usize = usize::MAX;

/// Reusable matcher; adjacency and scratch buffers keep their capacity
/// between queries.
#[derive(Debug, Default, Clone)]
pub struct HopcroftKarp {
    adj: Vec<Vec<usize>>,
    right: usize,
    pair_left: Vec<usize>,
    pair_right: Vec<usize>,
    dist: Vec<usize>,
    queue: Vec<usize>,
    cursor: Vec<usize>,
}

impl HopcroftKarp {
    pub fn new(left: usize, right: usize) -> Self {
        let mut m = HopcroftKarp::default();
        m.reset(left, right);
        m
    }

    /// Drops all edges and resizes the two sides.
    pub fn reset(&mut self, left: usize, right: usize) {
        self.adj.resize_with(left, Vec::new);
        self.adj.iter_mut().for_each(Vec::clear);
        self.right = right;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(v < self.right);
        self.adj[u].push(v);
    }

    /// Size of a maximum matching.
    pub fn solve(&mut self) -> usize {
        let left = self.adj.len();
        self.pair_left.clear();
        self.pair_left.resize(left, NONE);
        self.pair_right.clear();
        self.pair_right.resize(self.right, NONE);
        self.dist.resize(left, NONE);
        self.cursor.resize(left, 0);

        let mut size = 0;
        while self.bfs() {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            for u in 0..left {
                if self.pair_left[u] == NONE && self.dfs(u) {
                    size += 1;
                }
            }
        }
        size
    }

    /// Partner of each left vertex after [`Self::solve`].
    pub fn pairs(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.pair_left.iter().map(|&v| (v != NONE).then_some(v))
    }

    fn bfs(&mut self) -> bool {
        self.queue.clear();
        for u in 0..self.adj.len() {
            if self.pair_left[u] == NONE {
                self.dist[u] = 0;
                self.queue.push(u);
            } else {
                self.dist[u] = NONE;
            }
        }
        let mut found = false;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for &v in &self.adj[u] {
                let w = self.pair_right[v];
                if w == NONE {
                    found = true;
                } else if self.dist[w] == NONE {
                    self.dist[w] = self.dist[u] + 1;
                    self.queue.push(w);
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize) -> bool {
        while self.cursor[u] < self.adj[u].len() {
            let v = self.adj[u][self.cursor[u]];
            self.cursor[u] += 1;
            let w = self.pair_right[v];
            if w == NONE || (self.dist[w] == self.dist[u] + 1 && self.dfs(w)) {
                self.pair_left[u] = v;
                self.pair_right[v] = u;
                return true;
            }
        }
        self.dist[u] = NONE;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn brute_force(left: usize, right: usize, edges: &[(usize, usize)]) -> usize {
        // largest k such that some k-subset of left vertices has a system of
        // distinct representatives, tried through all injective assignments
        let mut best = 0;
        for k in (1..=left.min(right)).rev() {
            let ok = (0..left).combinations(k).any(|ls| {
                (0..right)
                    .permutations(k)
                    .any(|rs| ls.iter().zip(&rs).all(|(&u, &v)| edges.contains(&(u, v))))
            });
            if ok {
                best = k;
                break;
            }
        }
        best
    }

    #[test]
    fn perfect_and_deficient() {
        let mut m = HopcroftKarp::new(3, 3);
        for (u, v) in [(0, 0), (0, 1), (1, 0), (2, 2)] {
            m.add_edge(u, v);
        }
        assert_eq!(m.solve(), 3);
        let pairs: Vec<_> = m.pairs().collect();
        assert_eq!(pairs[2], Some(2));

        m.reset(3, 3);
        for (u, v) in [(0, 0), (1, 0), (2, 0)] {
            m.add_edge(u, v);
        }
        assert_eq!(m.solve(), 1);
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(edges in proptest::collection::vec((0usize..5, 0usize..5), 0..14)) {
            let edges: Vec<_> = edges.into_iter().unique().collect();
            let mut m = HopcroftKarp::new(5, 5);
            for &(u, v) in &edges {
                m.add_edge(u, v);
            }
            let size = m.solve();
            prop_assert_eq!(size, brute_force(5, 5, &edges));
            let matched: Vec<_> = m.pairs().enumerate().filter_map(|(u, v)| v.map(|v| (u, v))).collect();
            prop_assert_eq!(matched.len(), size);
            prop_assert!(matched.iter().all(|e| edges.contains(e)));
            prop_assert!(matched.iter().map(|e| e.1).all_unique());
        }
    }
}
