//! Exact algorithms on induced forests: independence number, maximum
//! matching, and the pseudo 2-factor made of a maximum matching plus the
//! unmatched vertices, which has exactly α components.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Pseudo 2-factor of a forest: matched pairs become K2 components and
/// every other vertex a K1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestFactor {
    pub matched_edges: Vec<(usize, usize)>,
    pub singletons: VertexSet,
}

impl ForestFactor {
    pub fn component_count(&self) -> usize {
        self.matched_edges.len() + self.singletons.len()
    }
}

/// One rooted tree of the forest, vertices in DFS preorder.
struct RootedTree {
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
}

/// Roots every component of `within`; the component containing `root_hint`
/// is rooted there, the rest at their smallest vertex. Children are visited
/// in increasing index order.
fn root_forest(g: &Graph, within: &VertexSet, root_hint: Option<usize>) -> Result<Vec<RootedTree>> {
    if !g.is_forest(within) {
        return Err(Error::NotAForest);
    }
    let mut seen = VertexSet::empty(g.n());
    let mut parent_of = vec![None; g.n()];
    let roots = root_hint.into_iter().chain(within.iter());
    let mut trees = Vec::new();
    for root in roots {
        if seen.contains(root) {
            continue;
        }
        seen.insert(root);
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in g.neighbors(v).iter().rev() {
                if within.contains(w) && seen.insert(w) {
                    parent_of[w] = Some(v);
                    stack.push(w);
                }
            }
        }
        let parent = order.iter().map(|&v| parent_of[v]).collect();
        trees.push(RootedTree { order, parent });
    }
    Ok(trees)
}

/// Include/exclude DP over a rooted tree. Returns the chosen vertices of a
/// maximum independent set, preferring to include a vertex on ties (so the
/// root is taken whenever some optimum contains it).
fn tree_mis(g: &Graph, tree: &RootedTree, take: &mut VertexSet) {
    let n = g.n();
    let mut inc = vec![0usize; n];
    let mut exc = vec![0usize; n];
    for (&v, p) in tree.order.iter().zip(&tree.parent).rev() {
        inc[v] += 1;
        if let Some(p) = *p {
            inc[p] += exc[v];
            exc[p] += inc[v].max(exc[v]);
        }
    }
    for (&v, p) in tree.order.iter().zip(&tree.parent) {
        let chosen = match p {
            Some(p) if take.contains(*p) => false,
            _ => inc[v] >= exc[v],
        };
        if chosen {
            take.insert(v);
        }
    }
}

pub fn forest_max_independent_set(g: &Graph, within: &VertexSet) -> Result<VertexSet> {
    let mut take = VertexSet::empty(g.n());
    for tree in root_forest(g, within, None)? {
        tree_mis(g, &tree, &mut take);
    }
    Ok(take)
}

/// α of the induced forest.
pub fn forest_alpha(g: &Graph, within: &VertexSet) -> Result<usize> {
    forest_max_independent_set(g, within).map(|s| s.len())
}

/// A maximum independent set of the induced forest that contains `u`.
/// Only guaranteed for vertices of induced degree at most one, where every
/// tree has such an optimum.
pub fn max_independent_set_containing(
    g: &Graph,
    within: &VertexSet,
    u: usize,
) -> Result<VertexSet> {
    if !within.contains(u) {
        return Err(Error::contract(format!("vertex {u} is not in the forest")));
    }
    if g.induced_degree(u, within) > 1 {
        return Err(Error::contract(format!(
            "vertex {u} has induced degree {} > 1",
            g.induced_degree(u, within)
        )));
    }
    let mut take = VertexSet::empty(g.n());
    for tree in root_forest(g, within, Some(u))? {
        tree_mis(g, &tree, &mut take);
    }
    debug_assert!(take.contains(u));
    Ok(take)
}

/// Maximum matching of the induced forest by leaf peeling: walking each
/// tree bottom-up, a vertex still unmatched when all its children are done
/// is matched to its parent if the parent is free.
pub fn forest_max_matching(g: &Graph, within: &VertexSet) -> Result<Vec<(usize, usize)>> {
    let mut matched = VertexSet::empty(g.n());
    let mut edges = Vec::new();
    for tree in root_forest(g, within, None)? {
        for (&v, p) in tree.order.iter().zip(&tree.parent).rev() {
            let Some(p) = *p else { continue };
            if !matched.contains(v) && !matched.contains(p) {
                matched.insert(v);
                matched.insert(p);
                edges.push((v.min(p), v.max(p)));
            }
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

pub fn forest_pseudo_factor(g: &Graph, within: &VertexSet) -> Result<ForestFactor> {
    let matched_edges = forest_max_matching(g, within)?;
    let mut singletons = within.clone();
    for &(u, v) in &matched_edges {
        singletons.remove(u);
        singletons.remove(v);
    }
    Ok(ForestFactor {
        matched_edges,
        singletons,
    })
}
