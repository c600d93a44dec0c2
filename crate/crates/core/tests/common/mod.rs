//! Brute-force references for small graphs, written without any of the
//! library's search code. Vertex sets are `u32` masks, so n ≤ 32.

#![allow(dead_code)]

use std::collections::HashMap;

use pseudo2f::Graph;

pub fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

fn independent(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
}

/// Independence number by scanning every subset.
pub fn alpha(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.n())
        .filter(|&s| independent(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// f(G) by scanning every nonempty independent set.
pub fn f_value(g: &Graph) -> i64 {
    let adj = masks(g);
    (1u32..1 << g.n())
        .filter(|&s| independent(&adj, s))
        .map(|s| {
            let d = (0..g.n())
                .filter(|&v| s >> v & 1 == 1)
                .map(|v| g.degree(v))
                .min()
                .unwrap();
            s.count_ones() as i64 - d as i64 + 1
        })
        .max()
        .expect("nonempty graph")
}

/// Vertex sets of all cycles through `v` inside `rem`, by depth-first
/// search over simple paths starting at `v`.
fn cycles_through(adj: &[u32], rem: u32, v: usize) -> Vec<u32> {
    fn dfs(adj: &[u32], rem: u32, start: usize, u: usize, seen: u32, len: u32, out: &mut Vec<u32>) {
        if len >= 3 && adj[u] >> start & 1 == 1 {
            out.push(seen);
        }
        let mut next = adj[u] & rem & !seen;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            dfs(adj, rem, start, w, seen | 1 << w, len + 1, out);
        }
    }
    let mut out = Vec::new();
    dfs(adj, rem, v, v, 1 << v, 1, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// Exhaustive pseudo 2-factor search.
pub struct Exhaustive {
    adj: Vec<u32>,
    cycles: HashMap<(u32, usize), Vec<u32>>,
    /// remaining set → (min non-cycle count, bitmask of cycle-covered sizes
    /// over optimal completions)
    memo: HashMap<u32, (usize, u64)>,
    two_reg: HashMap<u32, usize>,
}

impl Exhaustive {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= 32);
        Exhaustive {
            adj: masks(g),
            cycles: HashMap::new(),
            memo: HashMap::new(),
            two_reg: HashMap::new(),
        }
    }

    fn full(&self) -> u32 {
        if self.adj.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.adj.len()) - 1
        }
    }

    fn cycles(&mut self, rem: u32, v: usize) -> Vec<u32> {
        let adj = &self.adj;
        self.cycles
            .entry((rem, v))
            .or_insert_with(|| cycles_through(adj, rem, v))
            .clone()
    }

    fn solve(&mut self, rem: u32) -> (usize, u64) {
        if rem == 0 {
            return (0, 1);
        }
        if let Some(&r) = self.memo.get(&rem) {
            return r;
        }
        let v = rem.trailing_zeros() as usize;
        let mut options: Vec<(usize, u64)> = Vec::new();
        let rest = rem & !(1 << v);
        let (c, s) = self.solve(rest);
        options.push((c + 1, s));
        let mut nb = self.adj[v] & rest;
        while nb != 0 {
            let w = nb.trailing_zeros();
            nb &= nb - 1;
            let (c, s) = self.solve(rest & !(1 << w));
            options.push((c + 1, s));
        }
        for cyc in self.cycles(rem, v) {
            let (c, s) = self.solve(rem & !cyc);
            options.push((c, s << cyc.count_ones()));
        }
        let best = options.iter().map(|o| o.0).min().unwrap();
        let sizes = options
            .iter()
            .filter(|o| o.0 == best)
            .fold(0, |a, o| a | o.1);
        self.memo.insert(rem, (best, sizes));
        (best, sizes)
    }

    /// Minimum number of K1/K2 components over all pseudo 2-factors.
    pub fn min_non_cycle(&mut self) -> usize {
        let full = self.full();
        self.solve(full).0
    }

    /// Cycle-covered vertex counts attained by optimal pseudo 2-factors.
    pub fn optimal_cover_sizes(&mut self) -> Vec<usize> {
        let full = self.full();
        let bits = self.solve(full).1;
        (0..64).filter(|k| bits >> k & 1 == 1).collect()
    }

    fn cover(&mut self, rem: u32) -> usize {
        if rem == 0 {
            return 0;
        }
        if let Some(&r) = self.two_reg.get(&rem) {
            return r;
        }
        let v = rem.trailing_zeros() as usize;
        let mut best = self.cover(rem & !(1 << v));
        for cyc in self.cycles(rem, v) {
            best = best.max(cyc.count_ones() as usize + self.cover(rem & !cyc));
        }
        self.two_reg.insert(rem, best);
        best
    }

    /// Order of a largest 2-regular subgraph.
    pub fn max_two_regular(&mut self) -> usize {
        let full = self.full();
        self.cover(full)
    }
}
