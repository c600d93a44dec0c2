//! Oriented packings of vertex-disjoint cycles (2-regular subgraphs).

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A 2-regular subgraph F given as oriented cycles, with successor and
/// predecessor maps on V(F).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedCyclePacking {
    cycles: Vec<Vec<usize>>,
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
    covered: VertexSet,
}

impl Serialize for OrientedCyclePacking {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.cycles.serialize(serializer)
    }
}

impl OrientedCyclePacking {
    pub fn empty(n: usize) -> Self {
        OrientedCyclePacking {
            cycles: Vec::new(),
            succ: vec![None; n],
            pred: vec![None; n],
            covered: VertexSet::empty(n),
        }
    }

    /// Each sequence is one cycle in the orientation given. Fails unless the
    /// result is a 2-regular subgraph of `g`.
    pub fn from_cycles(g: &Graph, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut p = OrientedCyclePacking::empty(g.n());
        for c in cycles {
            p.push_cycle(c)?;
        }
        p.audit(g)?;
        Ok(p)
    }

    /// Decomposes a 2-regular edge set into cycles. Each cycle starts at its
    /// smallest vertex and leaves toward the smaller of its two neighbors;
    /// cycles are ordered by smallest vertex.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Self> {
        let n = g.n();
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::invariant(format!("bad edge ({u}, {v})")));
            }
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        let mut cycles = Vec::new();
        let mut seen = VertexSet::empty(n);
        for start in 0..n {
            match nbrs[start].len() {
                0 => continue,
                2 => {}
                d => {
                    return Err(Error::invariant(format!(
                        "vertex {start} has degree {d} in the edge set"
                    )))
                }
            }
            if nbrs[start][0] == nbrs[start][1] {
                return Err(Error::invariant(format!(
                    "parallel edges at vertex {start}"
                )));
            }
            if seen.contains(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut prev = start;
            let mut cur = *nbrs[start].iter().min().unwrap();
            while cur != start {
                if nbrs[cur].len() != 2 || nbrs[cur][0] == nbrs[cur][1] {
                    return Err(Error::invariant(format!(
                        "vertex {cur} is not simple degree 2"
                    )));
                }
                seen.insert(cur);
                cycle.push(cur);
                let next = if nbrs[cur][0] == prev {
                    nbrs[cur][1]
                } else {
                    nbrs[cur][0]
                };
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        Self::from_cycles(g, cycles)
    }

    fn push_cycle(&mut self, c: Vec<usize>) -> Result<()> {
        if c.len() < 3 {
            return Err(Error::invariant(format!("cycle {c:?} is shorter than 3")));
        }
        for &v in &c {
            if v >= self.succ.len() || !self.covered.insert(v) {
                return Err(Error::invariant(format!(
                    "vertex {v} repeated or out of range in packing"
                )));
            }
        }
        for (i, &v) in c.iter().enumerate() {
            let w = c[(i + 1) % c.len()];
            self.succ[v] = Some(w);
            self.pred[w] = Some(v);
        }
        self.cycles.push(c);
        Ok(())
    }

    /// Adds a cycle disjoint from the current packing.
    pub fn with_cycle(&self, g: &Graph, c: Vec<usize>) -> Result<Self> {
        let mut p = self.clone();
        p.push_cycle(c)?;
        p.audit(g)?;
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// V(F).
    pub fn covered(&self) -> &VertexSet {
        &self.covered
    }

    /// V(G) − V(F).
    pub fn uncovered(&self) -> VertexSet {
        self.covered.complement()
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.covered.contains(v)
    }

    /// v⁺. Panics if `v` is uncovered.
    pub fn succ(&self, v: usize) -> usize {
        self.succ[v].unwrap_or_else(|| panic!("vertex {v} is not covered by the packing"))
    }

    /// v⁻. Panics if `v` is uncovered.
    pub fn pred(&self, v: usize) -> usize {
        self.pred[v].unwrap_or_else(|| panic!("vertex {v} is not covered by the packing"))
    }

    /// Directed edges (v, v⁺).
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cycles.iter().flat_map(|c| {
            c.iter()
                .enumerate()
                .map(move |(i, &v)| (v, c[(i + 1) % c.len()]))
        })
    }

    /// Full consistency check against `g`: disjoint cycles of length at
    /// least 3 made of edges of `g`, with successor and predecessor maps
    /// inverse to each other on exactly V(F).
    pub fn audit(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::invariant("packing and graph sizes differ"));
        }
        let mut seen = VertexSet::empty(g.n());
        for c in &self.cycles {
            if c.len() < 3 {
                return Err(Error::invariant(format!("cycle {c:?} is shorter than 3")));
            }
            for (i, &v) in c.iter().enumerate() {
                let w = c[(i + 1) % c.len()];
                if !seen.insert(v) {
                    return Err(Error::invariant(format!("vertex {v} lies on two cycles")));
                }
                if !g.has_edge(v, w) {
                    return Err(Error::invariant(format!(
                        "({v}, {w}) is not an edge of the graph"
                    )));
                }
                if self.succ[v] != Some(w) || self.pred[w] != Some(v) {
                    return Err(Error::invariant(format!(
                        "orientation maps disagree at {v}"
                    )));
                }
            }
        }
        if seen != self.covered {
            return Err(Error::invariant("covered set disagrees with cycles"));
        }
        for v in 0..g.n() {
            if self.succ[v].is_some() != seen.contains(v)
                || self.pred[v].is_some() != seen.contains(v)
            {
                return Err(Error::invariant(format!("stale orientation entry at {v}")));
            }
        }
        Ok(())
    }

    pub fn potential(&self, g: &Graph) -> Potential {
        let h = self.uncovered();
        Potential {
            covered: self.covered.len(),
            isolated: h.iter().filter(|&v| g.induced_degree(v, &h) == 0).count(),
        }
    }
}

/// Progress measure for local improvement: more covered vertices first,
/// then fewer isolated vertices in G − V(F).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Potential {
    pub covered: usize,
    pub isolated: usize,
}

impl Potential {
    pub fn improves_on(&self, before: &Potential) -> bool {
        self.covered > before.covered
            || (self.covered == before.covered && self.isolated < before.isolated)
    }
}

/// Greedy start: repeatedly take a shortest cycle among uncovered vertices.
pub fn initial_packing(g: &Graph) -> OrientedCyclePacking {
    let mut p = OrientedCyclePacking::empty(g.n());
    while let Some(c) = g.shortest_cycle_within(&p.uncovered()) {
        p.push_cycle(c)
            .expect("cycle found among uncovered vertices");
    }
    debug_assert!(p.audit(g).is_ok());
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn initial_on_small_graphs() {
        let tree = Graph::from_edge_list(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(initial_packing(&tree).cycles().is_empty());
        let c5 = cycle(5);
        let p = initial_packing(&c5);
        assert_eq!(p.cycles().len(), 1);
        assert_eq!(p.covered().len(), 5);
        for v in 0..5 {
            assert_eq!(p.pred(p.succ(v)), v);
        }
    }

    #[test]
    fn from_edges_orients_canonically() {
        let c5 = cycle(5);
        let p = OrientedCyclePacking::from_edges(&c5, &[(3, 4), (0, 1), (2, 1), (4, 0), (2, 3)])
            .unwrap();
        assert_eq!(p.cycles(), &[vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn from_edges_rejects_non_two_regular() {
        let c5 = cycle(5);
        assert!(OrientedCyclePacking::from_edges(&c5, &[(0, 1), (1, 2)]).is_err());
        assert!(OrientedCyclePacking::from_edges(&c5, &[(0, 1), (0, 1)]).is_err());
        // 0-2 is not an edge of C5
        assert!(OrientedCyclePacking::from_edges(&c5, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn audit_catches_overlap() {
        let k4 =
            Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(
            OrientedCyclePacking::from_cycles(&k4, vec![vec![0, 1, 2], vec![2, 3, 0]]).is_err()
        );
        assert!(OrientedCyclePacking::from_cycles(&k4, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn potential_order() {
        let a = Potential {
            covered: 5,
            isolated: 2,
        };
        assert!(Potential {
            covered: 6,
            isolated: 9
        }
        .improves_on(&a));
        assert!(Potential {
            covered: 5,
            isolated: 1
        }
        .improves_on(&a));
        assert!(!a.improves_on(&a));
        assert!(!Potential {
            covered: 4,
            isolated: 0
        }
        .improves_on(&a));
    }
}
