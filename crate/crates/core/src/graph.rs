//! Immutable simple undirected graphs on the vertex set `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple undirected graph. Neighbor lists are sorted and symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edge_list(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Minimum degree δ(G); `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// N_G(S): vertices outside `s` with at least one neighbor in `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n());
        for v in s.iter() {
            for &w in &self.adj[v] {
                if !s.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// δ_G(S), measured with degrees in the whole graph. `None` for empty `s`.
    pub fn min_degree_of_set(&self, s: &VertexSet) -> Option<usize> {
        s.iter().map(|v| self.degree(v)).min()
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| self.adj[v].iter().all(|&w| !s.contains(w)))
    }

    /// Degree of `v` in the subgraph induced by `within`.
    pub fn induced_degree(&self, v: usize, within: &VertexSet) -> usize {
        self.adj[v].iter().filter(|&&w| within.contains(w)).count()
    }

    /// Connected components of the induced subgraph, ordered by smallest vertex.
    pub fn connected_components(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n());
        let mut out = Vec::new();
        for root in within.iter() {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n());
            let mut stack = vec![root];
            seen.insert(root);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if within.contains(w) && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether the induced subgraph on `within` is acyclic.
    pub fn is_forest(&self, within: &VertexSet) -> bool {
        let edges: usize = within
            .iter()
            .map(|v| self.induced_degree(v, within))
            .sum::<usize>()
            / 2;
        let comps = self.connected_components(within).len();
        edges + comps == within.len()
    }

    /// The unique path from `from` to `to` inside the tree of `within`
    /// containing both, endpoints included. `None` if they are disconnected.
    /// On a non-forest this returns some shortest path.
    pub fn path_within(&self, within: &VertexSet, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &w in &self.adj[v] {
                if within.contains(w) && parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// A shortest cycle of the induced subgraph on `within`, as a vertex
    /// sequence, or `None` if the induced subgraph is a forest. Ties go to
    /// the cycle found from the smallest BFS root.
    pub fn shortest_cycle_within(&self, within: &VertexSet) -> Option<Vec<usize>> {
        let n = self.n();
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in within.iter() {
            for v in within.iter() {
                dist[v] = usize::MAX;
                parent[v] = usize::MAX;
            }
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            let mut found: Option<(usize, usize)> = None;
            'bfs: while let Some(v) = queue.pop_front() {
                if let Some(b) = &best {
                    if 2 * dist[v] + 1 >= b.len() {
                        break;
                    }
                }
                for &w in &self.adj[v] {
                    if !within.contains(w) || w == parent[v] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else {
                        found = Some((v, w));
                        break 'bfs;
                    }
                }
            }
            let Some((a, b)) = found else { continue };
            let len = dist[a] + dist[b] + 1;
            if best.as_ref().is_some_and(|c| c.len() <= len) {
                continue;
            }
            let climb = |mut v: usize| {
                let mut p = vec![v];
                while v != s {
                    v = parent[v];
                    p.push(v);
                }
                p
            };
            let pa = climb(a);
            let pb = climb(b);
            // Both branches end at s; the cycle is simple only if s is their
            // first common vertex. The global minimum always has such a root.
            let mut members = VertexSet::empty(n);
            let simple = pa
                .iter()
                .chain(&pb[..pb.len() - 1])
                .all(|&v| members.insert(v));
            if !simple {
                continue;
            }
            let mut seq: Vec<usize> = pa.into_iter().rev().collect();
            seq.extend(pb[..pb.len() - 1].iter().copied());
            best = Some(seq);
        }
        best
    }

    /// Subgraph induced by `within`, relabelled to `0..within.len()` in
    /// increasing order. Returns the graph and the original label of each
    /// new vertex.
    pub fn induced(&self, within: &VertexSet) -> (Graph, Vec<usize>) {
        let labels = within.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| within.contains(u) && within.contains(v))
            .map(|(u, v)| (index[u], index[v]));
        let g = Graph::from_edge_list(labels.len(), edges).expect("induced edges are valid");
        (g, labels)
    }
}
