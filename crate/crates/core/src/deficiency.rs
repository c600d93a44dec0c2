//! The deficiency parameter f(G) = max over nonempty independent sets I of
//! |I| − δ_G(I) + 1, the classical bound α(G) − δ(G) + 1, and certificates.
//!
//! Exact search anchors each candidate set at its minimum-degree member v
//! (smallest index on ties): the rest of the set lives among non-neighbors
//! of v with larger degree, or equal degree and larger index. Each anchor
//! is a maximum-independent-set problem solved by branch and bound.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::config::{Budgets, MASK_CEILING};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// An independent set together with its value |I| − δ_G(I) + 1, which is a
/// lower bound on f(G).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyCertificate {
    pub witness: VertexSet,
    pub value: i64,
}

impl DeficiencyCertificate {
    /// `None` unless `witness` is a nonempty independent set of `g`.
    pub fn from_witness(g: &Graph, witness: VertexSet) -> Option<Self> {
        if witness.iter().any(|v| v >= g.n()) || !g.is_independent(&witness) {
            return None;
        }
        let delta = g.min_degree_of_set(&witness)?;
        let value = witness.len() as i64 - delta as i64 + 1;
        Some(DeficiencyCertificate { witness, value })
    }
}

pub fn verify_certificate(g: &Graph, c: &DeficiencyCertificate) -> bool {
    DeficiencyCertificate::from_witness(g, c.witness.clone()).is_some_and(|r| r.value == c.value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub f_value: i64,
    pub alpha: usize,
    pub delta: usize,
    /// α − δ + 1.
    pub classical_bound: i64,
    pub certificate: DeficiencyCertificate,
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundReport", 5)?;
        s.serialize_field("f", &self.f_value)?;
        s.serialize_field("alpha", &self.alpha)?;
        s.serialize_field("delta", &self.delta)?;
        s.serialize_field("classical_bound", &self.classical_bound)?;
        s.serialize_field("witness", &self.certificate.witness)?;
        s.end()
    }
}

fn check_budget(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let limit = limit.min(MASK_CEILING);
    if g.n() > limit {
        return Err(Error::Budget {
            what,
            n: g.n(),
            limit,
        });
    }
    Ok(())
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

pub(crate) fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_iter_in(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Maximum independent set by branch and bound over bitmasks.
///
/// Branches on the lowest candidate, include-first, with a greedy clique
/// cover of the remaining candidates as upper bound. The first optimum
/// reached is the lexicographically smallest one.
struct MisSearch<'a> {
    adj: &'a [u64],
    need: u32,
    best: Option<u64>,
}

impl<'a> MisSearch<'a> {
    /// Maximum independent subset of `cand`, provided it has at least `need`
    /// vertices.
    fn run(adj: &'a [u64], cand: u64, need: u32) -> Option<u64> {
        let mut s = MisSearch {
            adj,
            need,
            best: None,
        };
        s.expand(0, cand);
        s.best
    }

    /// Smallest size a completed set must reach to be recorded.
    fn target(&self) -> u32 {
        match self.best {
            Some(b) => b.count_ones() + 1,
            None => self.need,
        }
    }

    fn clique_cover_bound(&self, mut cand: u64) -> u32 {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            let mut common = cand & self.adj[v];
            while common != 0 {
                let w = common.trailing_zeros() as usize;
                cand &= !(1 << w);
                common &= self.adj[w] & !(1 << w);
            }
            cliques += 1;
        }
        cliques
    }

    fn expand(&mut self, cur: u64, cand: u64) {
        let size = cur.count_ones();
        let target = self.target();
        if cand == 0 {
            if size >= target {
                self.best = Some(cur);
            }
            return;
        }
        if size + cand.count_ones() < target || size + self.clique_cover_bound(cand) < target {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let inner = cand & self.adj[v];
        self.expand(cur | bit, cand & !bit & !inner);
        // A vertex with at most one candidate neighbor is in some optimum,
        // and every optimum avoiding it is lexicographically larger.
        if inner.count_ones() >= 2 {
            self.expand(cur, cand & !bit);
        }
    }
}

/// α(G) and a maximum independent set.
pub fn max_independent_set(g: &Graph, budgets: &Budgets) -> Result<VertexSet> {
    check_budget(g, budgets.exact_n, "maximum independent set")?;
    let adj = adjacency_masks(g);
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let best = MisSearch::run(&adj, all, 0).expect("need = 0 always succeeds");
    Ok(mask_to_set(g.n(), best))
}

pub fn compute_f(g: &Graph, budgets: &Budgets) -> Result<BoundReport> {
    check_budget(g, budgets.exact_n, "exact f(G)")?;
    let n = g.n();
    let adj = adjacency_masks(g);
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();

    let mut best: Option<(i64, VertexSet)> = None;
    for v in 0..n {
        let cand = (0..n)
            .filter(|&u| u != v && adj[v] >> u & 1 == 0)
            .filter(|&u| deg[u] > deg[v] || (deg[u] == deg[v] && u > v))
            .fold(0u64, |m, u| m | 1 << u);
        let dv = deg[v] as i64;
        let ceiling = 1 + cand.count_ones() as i64 - dv + 1;
        let need = match &best {
            Some((b, _)) if ceiling < *b => continue,
            // |rest| must reach b + d(v) − 2 for a tie
            Some((b, _)) => (b + dv - 2).max(0) as u32,
            None => 0,
        };
        let Some(rest) = MisSearch::run(&adj, cand, need) else {
            continue;
        };
        let witness = mask_to_set(n, rest | 1 << v);
        let value = witness.len() as i64 - dv + 1;
        let better = match &best {
            None => true,
            Some((b, w)) => value > *b || (value == *b && witness.to_vec() < w.to_vec()),
        };
        if better {
            best = Some((value, witness));
        }
    }
    let (f_value, witness) = best.expect("nonempty graph has a singleton independent set");
    let alpha = max_independent_set(g, budgets)?.len();
    let delta = g.min_degree().expect("nonempty");
    let report = BoundReport {
        f_value,
        alpha,
        delta,
        classical_bound: alpha as i64 - delta as i64 + 1,
        certificate: DeficiencyCertificate {
            witness,
            value: f_value,
        },
    };
    debug_assert!(verify_certificate(g, &report.certificate));
    Ok(report)
}

/// α(G) − δ(G) + 1.
pub fn classical_bound(g: &Graph, budgets: &Budgets) -> Result<i64> {
    let alpha = max_independent_set(g, budgets)?.len() as i64;
    Ok(alpha - g.min_degree().expect("nonempty") as i64 + 1)
}

/// Whether every nonempty independent set I satisfies δ_G(I) ≥ |I| + 1,
/// i.e. whether f(G) ≤ 0.
pub fn all_independent_satisfy_2factor_condition(g: &Graph, budgets: &Budgets) -> Result<bool> {
    Ok(compute_f(g, budgets)?.f_value <= 0)
}
