//! Exponential-time ground truth for small graphs.
//!
//! Both cycle oracles share one table: `reach[S]` holds the endpoints of
//! paths that start at the lowest vertex of S and visit exactly S, from
//! which the vertex sets carrying a cycle follow. A pass over all subsets
//! in increasing order then covers each S by deciding what happens to its
//! lowest vertex v: a K1, a K2 with some neighbor, or a cycle through v
//! whose other vertices are all above v.

use serde::Serialize;

use crate::config::Budgets;
use crate::deficiency::adjacency_masks;
use crate::driver::{Component, ComponentKind, PseudoTwoFactor};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packing::OrientedCyclePacking;

/// Memory ceiling for the subset tables.
pub const ORACLE_CEILING: usize = 26;

fn check(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    let limit = limit.min(ORACLE_CEILING);
    if g.n() > limit {
        return Err(Error::Budget {
            what,
            n: g.n(),
            limit,
        });
    }
    Ok(())
}

struct CycleTable {
    adj: Vec<u32>,
    reach: Vec<u32>,
    /// Vertex sets spanned by a cycle, grouped by lowest vertex.
    cycle_sets: Vec<Vec<u32>>,
}

impl CycleTable {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj: Vec<u32> = adjacency_masks(g).into_iter().map(|m| m as u32).collect();
        let mut reach = vec![0u32; 1 << n];
        for s in 0..n {
            reach[1 << s] = 1 << s;
        }
        let mut cycle_sets = vec![Vec::new(); n];
        for mask in 1u32..(1u32 << n) {
            let ends = reach[mask as usize];
            if ends == 0 {
                continue;
            }
            let s = mask.trailing_zeros();
            if mask.count_ones() >= 3 && ends & adj[s as usize] != 0 {
                cycle_sets[s as usize].push(mask);
            }
            // extensions only by vertices above s
            let above = !mask & !((2u32 << s) - 1) & full(n);
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut ext = adj[v] & above;
                while ext != 0 {
                    let w = ext.trailing_zeros();
                    ext &= ext - 1;
                    reach[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
        CycleTable {
            adj,
            reach,
            cycle_sets,
        }
    }

    /// A cycle through exactly the vertices of `set`, starting at its lowest.
    fn cycle_order(&self, set: u32) -> Vec<usize> {
        let s = set.trailing_zeros() as usize;
        let mut v = (self.reach[set as usize] & self.adj[s]).trailing_zeros() as usize;
        let mut rest = set;
        let mut order = vec![v];
        while rest.count_ones() > 1 {
            rest &= !(1 << v);
            v = (self.reach[rest as usize] & self.adj[v]).trailing_zeros() as usize;
            order.push(v);
        }
        debug_assert_eq!(v, s);
        order.reverse();
        order
    }

    /// Cycle sets through `v` inside `s`, by the cheaper of list scan and
    /// submask enumeration.
    fn cycles_within(&self, v: usize, s: u32, mut f: impl FnMut(u32)) {
        let list = &self.cycle_sets[v];
        let rest = s & !(1 << v);
        if (list.len() as u64) <= 1u64 << rest.count_ones() {
            for &t in list {
                if t & !s == 0 {
                    f(t);
                }
            }
        } else {
            let mut sub = rest;
            loop {
                let t = sub | 1 << v;
                if t.count_ones() >= 3 && self.is_cycle_set(t) {
                    f(t);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
    }

    fn is_cycle_set(&self, t: u32) -> bool {
        let s = t.trailing_zeros() as usize;
        t.count_ones() >= 3 && self.reach[t as usize] & self.adj[s] != 0
    }
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Result of [`oracle_min_non_cycle`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinNonCycle {
    pub count: usize,
    pub factor: PseudoTwoFactor,
    /// Distinct numbers of cycle-covered vertices over all optimal pseudo
    /// 2-factors, ascending.
    pub optimal_cycle_cover_sizes: Vec<usize>,
}

/// Minimum number of K1/K2 components over all pseudo 2-factors of `g`.
pub fn oracle_min_non_cycle(g: &Graph, budgets: &Budgets) -> Result<MinNonCycle> {
    check(g, budgets.oracle_n, "minimum non-cycle oracle")?;
    let n = g.n();
    let table = CycleTable::new(g);
    let size = 1usize << n;
    let mut best = vec![u8::MAX; size];
    let mut cover_sizes = vec![0u32; size];
    best[0] = 0;
    cover_sizes[0] = 1;
    for s in 1..size as u32 {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let mut cost = 1 + best[rest as usize];
        let mut sizes = cover_sizes[rest as usize];
        let mut offer = |c: u8, z: u32| {
            if c < cost {
                cost = c;
                sizes = z;
            } else if c == cost {
                sizes |= z;
            }
        };
        let mut nb = table.adj[v] & rest;
        while nb != 0 {
            let u = nb.trailing_zeros();
            nb &= nb - 1;
            let r = rest & !(1 << u);
            offer(1 + best[r as usize], cover_sizes[r as usize]);
        }
        table.cycles_within(v, s, |t| {
            let r = (s & !t) as usize;
            offer(best[r], cover_sizes[r] << t.count_ones());
        });
        best[s as usize] = cost;
        cover_sizes[s as usize] = sizes;
    }

    // reconstruct one optimum
    let mut components = Vec::new();
    let mut s = full(n);
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let target = best[s as usize];
        if 1 + best[rest as usize] == target {
            components.push(Component::singleton(v));
            s = rest;
            continue;
        }
        let mut nb = table.adj[v] & rest;
        let mut done = false;
        while nb != 0 {
            let u = nb.trailing_zeros();
            nb &= nb - 1;
            let r = rest & !(1 << u);
            if 1 + best[r as usize] == target {
                components.push(Component::edge(v, u as usize));
                s = r;
                done = true;
                break;
            }
        }
        if done {
            continue;
        }
        let mut pick = None;
        table.cycles_within(v, s, |t| {
            if pick.is_none() && best[(s & !t) as usize] == target {
                pick = Some(t);
            }
        });
        let t = pick.ok_or_else(|| Error::invariant("oracle reconstruction found no option"))?;
        components.push(Component {
            kind: ComponentKind::Cycle,
            vertices: table.cycle_order(t),
        });
        s &= !t;
    }
    let factor = PseudoTwoFactor::new(components);
    let all = cover_sizes[full(n) as usize];
    Ok(MinNonCycle {
        count: best[full(n) as usize] as usize,
        optimal_cycle_cover_sizes: (0..=n).filter(|&k| all >> k & 1 == 1).collect(),
        factor,
    })
}

/// Maximum number of vertices covered by vertex-disjoint cycles, with a
/// packing attaining it.
pub fn oracle_max_two_regular(
    g: &Graph,
    budgets: &Budgets,
) -> Result<(usize, OrientedCyclePacking)> {
    check(g, budgets.oracle_n, "maximum 2-regular subgraph oracle")?;
    let n = g.n();
    let table = CycleTable::new(g);
    let size = 1usize << n;
    let mut cov = vec![0u8; size];
    for s in 1..size as u32 {
        let v = s.trailing_zeros() as usize;
        let mut best = cov[(s & !(1 << v)) as usize];
        table.cycles_within(v, s, |t| {
            best = best.max(t.count_ones() as u8 + cov[(s & !t) as usize]);
        });
        cov[s as usize] = best;
    }
    let mut cycles = Vec::new();
    let mut s = full(n);
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        let target = cov[s as usize];
        if cov[(s & !(1 << v)) as usize] == target {
            s &= !(1 << v);
            continue;
        }
        let mut pick = None;
        table.cycles_within(v, s, |t| {
            if pick.is_none() && t.count_ones() as u8 + cov[(s & !t) as usize] == target {
                pick = Some(t);
            }
        });
        let t = pick.ok_or_else(|| Error::invariant("oracle reconstruction found no cycle"))?;
        cycles.push(table.cycle_order(t));
        s &= !t;
    }
    let packing = OrientedCyclePacking::from_cycles(g, cycles)?;
    Ok((cov[full(n) as usize] as usize, packing))
}

/// f(G) by scanning every vertex subset.
pub fn oracle_exact_f(g: &Graph, budgets: &Budgets) -> Result<i64> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let limit = budgets.naive_n.min(ORACLE_CEILING);
    if g.n() > limit {
        return Err(Error::Budget {
            what: "subset-scan f(G)",
            n: g.n(),
            limit,
        });
    }
    let n = g.n();
    let adj: Vec<u32> = adjacency_masks(g).into_iter().map(|m| m as u32).collect();
    let mut best = i64::MIN;
    for mask in 1u32..=full(n) {
        let mut independent = true;
        let mut min_deg = usize::MAX;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if adj[v] & mask != 0 {
                independent = false;
                break;
            }
            min_deg = min_deg.min(g.degree(v));
        }
        if independent {
            best = best.max(mask.count_ones() as i64 - min_deg as i64 + 1);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::driver::validate;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn cycles_and_complete_graphs() {
        let b = Budgets::default();
        let c5 = cycle(5);
        assert_eq!(oracle_min_non_cycle(&c5, &b).unwrap().count, 0);
        assert_eq!(oracle_max_two_regular(&c5, &b).unwrap().0, 5);
        assert_eq!(oracle_exact_f(&complete(5), &b).unwrap(), -2);
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(oracle_exact_f(&p3, &b).unwrap(), 2);
        assert_eq!(oracle_min_non_cycle(&p3, &b).unwrap().count, 2);
        assert_eq!(oracle_max_two_regular(&p3, &b).unwrap().0, 0);
    }

    #[test]
    fn witness_is_valid() {
        let b = Budgets::default();
        // two triangles joined by an edge, plus a pendant
        let g = Graph::from_edge_list(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 3),
                (5, 6),
            ],
        )
        .unwrap();
        let r = oracle_min_non_cycle(&g, &b).unwrap();
        assert!(validate(&g, &r.factor).is_valid());
        assert_eq!(r.count, r.factor.non_cycle_count);
        assert_eq!(r.count, 1);
        let (k, p) = oracle_max_two_regular(&g, &b).unwrap();
        assert_eq!(k, 6);
        p.audit(&g).unwrap();
    }

    #[test]
    fn dense_path_uses_submask_enumeration() {
        let b = Budgets::default();
        let k7 = complete(7);
        assert_eq!(oracle_min_non_cycle(&k7, &b).unwrap().count, 0);
        assert_eq!(oracle_max_two_regular(&k7, &b).unwrap().0, 7);
    }

    #[test]
    fn budgets_enforced() {
        let b = Budgets {
            oracle_n: 4,
            naive_n: 4,
            ..Budgets::default()
        };
        assert!(matches!(
            oracle_min_non_cycle(&cycle(5), &b),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            oracle_max_two_regular(&cycle(5), &b),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            oracle_exact_f(&cycle(5), &b),
            Err(Error::Budget { .. })
        ));
    }
}
