//! Local improvement of a cycle packing F toward a pseudo 2-factor with at
//! most f(G) non-cycle components.
//!
//! Given F and the forest H = G − V(F), one round either
//!
//! * inserts an uncovered vertex x between two cycle vertices y₁, y₂ whose
//!   successors are adjacent (an *insertion*),
//! * walks through H component by component building a chain
//!   (Dᵢ, xᵢ, yᵢ, zᵢ) until it returns to a visited component, then rewires
//!   F along the chain (Case 1 when y_r = y₀⁻, Case 2 otherwise), or
//! * stops with an independent set I whose value |I| − δ_G(I) + 1 is at
//!   least α(H), the number of non-cycle components F ∪ (matching of H)
//!   will have.
//!
//! Every applied move strictly improves the potential
//! (|V(F)| up, then isolated vertices of H down), so rounds terminate.

use serde::Serialize;

use crate::deficiency::DeficiencyCertificate;
use crate::error::{Error, Result};
use crate::forest::{forest_alpha, forest_max_independent_set, max_independent_set_containing};
use crate::graph::Graph;
use crate::packing::{initial_packing, OrientedCyclePacking, Potential};
use crate::vertex_set::VertexSet;

/// Which search produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateSource {
    /// x isolated in H, at most one y ∈ N(x) ∩ V(F) has y⁺ ∈ N_G(H).
    IsolatedVertex,
    /// x a leaf of H, no y ∈ N(x) ∩ V(F) has y⁺ ∈ N_G(H).
    Leaf,
}

/// A certificate extracted when the search for y fails at vertex `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateData {
    pub certificate: DeficiencyCertificate,
    pub x: usize,
    pub source: CertificateSource,
    /// α(H) at emission time; `certificate.value` is at least this.
    pub forest_alpha: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(usize),
    Certificate(CertificateData),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub component: VertexSet,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceCase {
    /// y_r = y₀⁻
    CaseOne,
    CaseTwo,
}

/// A closed chain: z_r lies in D₀ and y_r⁺ sees none of D₁..D_r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentationTrace {
    pub steps: Vec<TraceStep>,
    pub case: TraceCase,
    /// Number of leading steps dropped when the chain closed on a later
    /// component than D₀.
    pub discarded: usize,
}

impl AugmentationTrace {
    /// Index of the last step.
    pub fn r(&self) -> usize {
        self.steps.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum TraceOutcome {
    Trace(AugmentationTrace),
    Certificate(CertificateData),
    InsertionDone(OrientedCyclePacking),
}

/// Undirected edge multiset of a packing under surgery.
struct EdgeBag(Vec<(usize, usize)>);

impl EdgeBag {
    fn of(f: &OrientedCyclePacking) -> Self {
        EdgeBag(f.arcs().map(|(u, v)| (u.min(v), u.max(v))).collect())
    }

    fn remove(&mut self, u: usize, v: usize) -> Result<()> {
        let e = (u.min(v), u.max(v));
        let pos = self
            .0
            .iter()
            .position(|&x| x == e)
            .ok_or_else(|| Error::invariant(format!("edge ({u}, {v}) removed twice")))?;
        self.0.swap_remove(pos);
        Ok(())
    }

    fn add(&mut self, u: usize, v: usize) {
        self.0.push((u.min(v), u.max(v)));
    }

    fn add_walk(&mut self, walk: &[usize]) {
        for w in walk.windows(2) {
            self.add(w[0], w[1]);
        }
    }
}

/// Tries to absorb the uncovered vertex `x`: for y₁, y₂ ∈ N(x) ∩ V(F) with
/// y₁⁺y₂⁺ ∈ E(G), the packing F − {y₁y₁⁺, y₂y₂⁺} + {y₁x, y₂x, y₁⁺y₂⁺} is
/// 2-regular on V(F) ∪ {x}. Pairs are tried in lexicographic order.
///
/// `None` means {y⁺ : y ∈ N(x) ∩ V(F)} is independent in `g`.
pub fn swap_insertion(
    g: &Graph,
    f: &OrientedCyclePacking,
    x: usize,
) -> Result<Option<OrientedCyclePacking>> {
    if f.is_covered(x) {
        return Err(Error::contract(format!("vertex {x} is already covered")));
    }
    let ys: Vec<usize> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| f.is_covered(y))
        .collect();
    for (i, &y1) in ys.iter().enumerate() {
        for &y2 in &ys[i + 1..] {
            let (s1, s2) = (f.succ(y1), f.succ(y2));
            if !g.has_edge(s1, s2) {
                continue;
            }
            let mut bag = EdgeBag::of(f);
            bag.remove(y1, s1)?;
            bag.remove(y2, s2)?;
            bag.add(y1, x);
            bag.add(y2, x);
            bag.add(s1, s2);
            let next = OrientedCyclePacking::from_edges(g, &bag.0)?;
            if next.covered().len() != f.covered().len() + 1 {
                return Err(Error::invariant(format!("insertion of {x} lost vertices")));
            }
            return Ok(Some(next));
        }
    }
    Ok(None)
}

/// Y⁺ for `x`: pairs (y, y⁺) over y ∈ N(x) ∩ V(F).
fn successors_of_neighbors(g: &Graph, f: &OrientedCyclePacking, x: usize) -> Vec<(usize, usize)> {
    g.neighbors(x)
        .iter()
        .filter(|&&y| f.is_covered(y))
        .map(|&y| (y, f.succ(y)))
        .collect()
}

fn emit_certificate(
    g: &Graph,
    h: &VertexSet,
    witness: VertexSet,
    x: usize,
    source: CertificateSource,
) -> Result<CertificateData> {
    let certificate = DeficiencyCertificate::from_witness(g, witness.clone()).ok_or_else(|| {
        Error::invariant(format!("certificate {witness:?} at {x} is not independent"))
    })?;
    let alpha = forest_alpha(g, h)?;
    if certificate.value < alpha as i64 {
        return Err(Error::invariant(format!(
            "certificate value {} below α(H) = {alpha}",
            certificate.value
        )));
    }
    Ok(CertificateData {
        certificate,
        x,
        source,
        forest_alpha: alpha,
    })
}

fn require_uncovered(f: &OrientedCyclePacking, h: &VertexSet, x: usize) -> Result<()> {
    if !h.contains(x) || f.is_covered(x) {
        return Err(Error::contract(format!("vertex {x} is not in H")));
    }
    Ok(())
}

/// For x isolated in H: some y ∈ N(x) ∩ V(F), y ≠ `avoid`, with y⁺ adjacent
/// to H. When at most one y qualifies, returns the certificate
/// I ∪ (Y⁺ − N_G(H)) with I a maximum independent set of H.
///
/// Assumes no insertion is available at x.
pub fn find_y_for_isolated(
    g: &Graph,
    f: &OrientedCyclePacking,
    h: &VertexSet,
    x: usize,
    avoid: Option<usize>,
) -> Result<SearchOutcome> {
    require_uncovered(f, h, x)?;
    if g.induced_degree(x, h) != 0 {
        return Err(Error::contract(format!("vertex {x} is not isolated in H")));
    }
    let boundary = g.neighborhood_of_set(h);
    let pairs = successors_of_neighbors(g, f, x);
    let qualifying: Vec<usize> = pairs
        .iter()
        .filter(|(_, s)| boundary.contains(*s))
        .map(|&(y, _)| y)
        .collect();
    if qualifying.len() >= 2 {
        let y = qualifying
            .into_iter()
            .find(|&y| Some(y) != avoid)
            .expect("two candidates");
        return Ok(SearchOutcome::Found(y));
    }
    let mut witness = forest_max_independent_set(g, h)?;
    for &(_, s) in &pairs {
        if !boundary.contains(s) {
            witness.insert(s);
        }
    }
    emit_certificate(g, h, witness, x, CertificateSource::IsolatedVertex)
        .map(SearchOutcome::Certificate)
}

/// For a leaf x of H: some y ∈ N(x) ∩ V(F) with y⁺ adjacent to H, else the
/// certificate I ∪ Y⁺ with I a maximum independent set of H containing x.
///
/// Assumes no insertion is available at x.
pub fn find_y_for_leaf(
    g: &Graph,
    f: &OrientedCyclePacking,
    h: &VertexSet,
    x: usize,
) -> Result<SearchOutcome> {
    require_uncovered(f, h, x)?;
    if g.induced_degree(x, h) != 1 {
        return Err(Error::contract(format!("vertex {x} is not a leaf of H")));
    }
    let boundary = g.neighborhood_of_set(h);
    let pairs = successors_of_neighbors(g, f, x);
    if let Some(&(y, _)) = pairs.iter().find(|(_, s)| boundary.contains(*s)) {
        return Ok(SearchOutcome::Found(y));
    }
    let mut witness = max_independent_set_containing(g, h, x)?;
    for &(_, s) in &pairs {
        witness.insert(s);
    }
    emit_certificate(g, h, witness, x, CertificateSource::Leaf).map(SearchOutcome::Certificate)
}

/// Runs the chain procedure from the first component of H.
///
/// D₀ is the component with the smallest vertex and x₀ its smallest vertex
/// of H-degree at most one. Entering a new component D through z, x is z
/// itself if D is a single vertex, else the smallest leaf of D other than z.
/// z is the smallest H-neighbor of y⁺, taken from the most recently visited
/// component y⁺ sees if there is one; that closes the chain, and steps
/// before the component it closes on are dropped.
pub fn build_trace(g: &Graph, f: &OrientedCyclePacking, h: &VertexSet) -> Result<TraceOutcome> {
    if h.is_empty() {
        return Err(Error::contract("H is empty"));
    }
    if !h.is_disjoint(f.covered()) {
        return Err(Error::contract("H meets V(F)"));
    }
    if !g.is_forest(h) {
        return Err(Error::NotAForest);
    }
    let comps = g.connected_components(h);
    let mut comp_of = vec![usize::MAX; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_of[v] = i;
        }
    }
    // position of each component in the chain, once visited
    let mut visit_pos = vec![usize::MAX; comps.len()];

    let mut steps: Vec<TraceStep> = Vec::new();
    let mut comp = 0;
    let mut x = comps[0]
        .iter()
        .find(|&v| g.induced_degree(v, h) <= 1)
        .expect("every tree has a vertex of degree at most one");

    loop {
        visit_pos[comp] = steps.len();
        if let Some(next) = swap_insertion(g, f, x)? {
            return Ok(TraceOutcome::InsertionDone(next));
        }
        let found = if g.induced_degree(x, h) == 0 {
            let avoid = steps.last().map(|s| f.succ(s.y));
            find_y_for_isolated(g, f, h, x, avoid)?
        } else {
            find_y_for_leaf(g, f, h, x)?
        };
        let y = match found {
            SearchOutcome::Found(y) => y,
            SearchOutcome::Certificate(c) => return Ok(TraceOutcome::Certificate(c)),
        };
        let y_plus = f.succ(y);
        let seen_by_y_plus = g
            .neighbors(y_plus)
            .iter()
            .copied()
            .filter(|&w| h.contains(w));

        let revisit = seen_by_y_plus
            .clone()
            .filter(|&w| visit_pos[comp_of[w]] != usize::MAX)
            .max_by_key(|&w| (visit_pos[comp_of[w]], std::cmp::Reverse(w)));
        if let Some(z) = revisit {
            steps.push(TraceStep {
                component: comps[comp].clone(),
                x,
                y,
                z,
            });
            let start = visit_pos[comp_of[z]];
            let steps: Vec<TraceStep> = steps.split_off(start);
            let r = steps.len() - 1;
            let case = if steps[r].y == f.pred(steps[0].y) {
                TraceCase::CaseOne
            } else {
                TraceCase::CaseTwo
            };
            return Ok(TraceOutcome::Trace(AugmentationTrace {
                steps,
                case,
                discarded: start,
            }));
        }

        let z = seen_by_y_plus
            .min()
            .ok_or_else(|| Error::invariant(format!("{y_plus} sees no vertex of H")))?;
        steps.push(TraceStep {
            component: comps[comp].clone(),
            x,
            y,
            z,
        });
        comp = comp_of[z];
        x = if comps[comp].len() == 1 {
            z
        } else {
            comps[comp]
                .iter()
                .find(|&v| v != z && g.induced_degree(v, h) == 1)
                .expect("a tree with two or more vertices has two leaves")
        };
    }
}

/// W = y_prev⁺, then the tree path from `entry` to `x` inside `component`,
/// then `y`.
fn walk(
    g: &Graph,
    start: usize,
    component: &VertexSet,
    entry: usize,
    x: usize,
    end: usize,
) -> Result<Vec<usize>> {
    let path = g
        .path_within(component, entry, x)
        .ok_or_else(|| Error::invariant(format!("no path {entry} -> {x} in its component")))?;
    let mut w = Vec::with_capacity(path.len() + 2);
    w.push(start);
    w.extend(path);
    w.push(end);
    Ok(w)
}

/// Walks W₁..W_r: Wᵢ = yᵢ₋₁⁺ zᵢ₋₁ Pᵢ xᵢ yᵢ.
fn chain_walks(
    g: &Graph,
    f: &OrientedCyclePacking,
    t: &AugmentationTrace,
) -> Result<Vec<Vec<usize>>> {
    (1..t.steps.len())
        .map(|i| {
            let prev = &t.steps[i - 1];
            let cur = &t.steps[i];
            walk(g, f.succ(prev.y), &cur.component, prev.z, cur.x, cur.y)
        })
        .collect()
}

/// Interiors pairwise vertex-disjoint and outside V(F); walks pairwise
/// edge-disjoint.
fn check_walks(f: &OrientedCyclePacking, walks: &[Vec<usize>]) -> Result<()> {
    let mut interior = VertexSet::empty(f.n());
    let mut edges = std::collections::HashSet::new();
    for w in walks {
        for &v in &w[1..w.len() - 1] {
            if f.is_covered(v) || !interior.insert(v) {
                return Err(Error::invariant(format!("walk interiors collide at {v}")));
            }
        }
        for e in w.windows(2) {
            if !edges.insert((e[0].min(e[1]), e[0].max(e[1]))) {
                return Err(Error::invariant(format!(
                    "walks share edge ({}, {})",
                    e[0], e[1]
                )));
            }
        }
    }
    Ok(())
}

fn rewire(
    g: &Graph,
    f: &OrientedCyclePacking,
    t: &AugmentationTrace,
    walks: &[Vec<usize>],
) -> Result<OrientedCyclePacking> {
    check_walks(f, walks)?;
    let mut bag = EdgeBag::of(f);
    for s in &t.steps {
        bag.remove(s.y, f.succ(s.y))?;
    }
    for w in walks {
        bag.add_walk(w);
    }
    OrientedCyclePacking::from_edges(g, &bag.0)
}

/// Case 1 (y_r = y₀⁻): drop every yᵢyᵢ⁺, add W₁..W_r; y₀ falls out of F.
pub fn apply_case1(
    g: &Graph,
    f: &OrientedCyclePacking,
    t: &AugmentationTrace,
) -> Result<OrientedCyclePacking> {
    let r = t.r();
    if t.case != TraceCase::CaseOne || r == 0 || t.steps[r].y != f.pred(t.steps[0].y) {
        return Err(Error::contract("trace is not a Case 1 trace"));
    }
    let walks = chain_walks(g, f, t)?;
    let next = rewire(g, f, t, &walks)?;
    if next.is_covered(t.steps[0].y) {
        return Err(Error::invariant("y0 survived a Case 1 surgery"));
    }
    Ok(next)
}

/// Case 2 (y_r ≠ y₀⁻): drop every yᵢyᵢ⁺, add W₁..W_r and
/// W₀ = y_r⁺ z_r P₀ x₀ y₀.
pub fn apply_case2(
    g: &Graph,
    f: &OrientedCyclePacking,
    t: &AugmentationTrace,
) -> Result<OrientedCyclePacking> {
    let r = t.r();
    let (first, last) = (&t.steps[0], &t.steps[r]);
    if t.case != TraceCase::CaseTwo || last.y == f.pred(first.y) {
        return Err(Error::contract("trace is not a Case 2 trace"));
    }
    let mut walks = vec![walk(
        g,
        f.succ(last.y),
        &first.component,
        last.z,
        first.x,
        first.y,
    )?];
    walks.extend(chain_walks(g, f, t)?);
    let next = rewire(g, f, t, &walks)?;
    let grown = next.covered().len() as isize - f.covered().len() as isize;
    if grown < r as isize + 1 {
        return Err(Error::invariant(format!(
            "Case 2 grew V(F) by {grown}, expected at least {}",
            r + 1
        )));
    }
    Ok(next)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    /// A cycle found inside H added to F.
    Absorb,
    Insertion,
    CaseOne,
    CaseTwo,
}

/// One applied improvement, with the potential before and after.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub before: Potential,
    pub after: Potential,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<AugmentationTrace>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PackResult {
    pub packing: OrientedCyclePacking,
    /// `None` exactly when the packing is a 2-factor.
    pub certificate: Option<CertificateData>,
    pub moves: Vec<MoveRecord>,
}

/// Improves a greedy packing until it spans G or a round ends in a
/// certificate. Each move is audited and must strictly improve the
/// potential; a violation is reported as [`Error::Invariant`].
pub fn pack_to_optimum(g: &Graph) -> Result<PackResult> {
    let mut f = initial_packing(g);
    let mut moves = Vec::new();
    loop {
        if f.covered().len() == g.n() {
            return Ok(PackResult {
                packing: f,
                certificate: None,
                moves,
            });
        }
        let h = f.uncovered();
        let before = f.potential(g);
        let (kind, next, trace) = if let Some(c) = g.shortest_cycle_within(&h) {
            (MoveKind::Absorb, f.with_cycle(g, c)?, None)
        } else {
            match build_trace(g, &f, &h)? {
                TraceOutcome::InsertionDone(next) => (MoveKind::Insertion, next, None),
                TraceOutcome::Trace(t) => match t.case {
                    TraceCase::CaseOne => (MoveKind::CaseOne, apply_case1(g, &f, &t)?, Some(t)),
                    TraceCase::CaseTwo => (MoveKind::CaseTwo, apply_case2(g, &f, &t)?, Some(t)),
                },
                TraceOutcome::Certificate(c) => {
                    return Ok(PackResult {
                        packing: f,
                        certificate: Some(c),
                        moves,
                    })
                }
            }
        };
        next.audit(g)?;
        let after = next.potential(g);
        if !after.improves_on(&before) {
            return Err(Error::invariant(format!(
                "{kind:?} move did not improve {before:?} -> {after:?}"
            )));
        }
        moves.push(MoveRecord {
            kind,
            before,
            after,
            trace,
        });
        f = next;
    }
}
