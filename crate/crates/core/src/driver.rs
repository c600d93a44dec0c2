//! End-to-end solving: pack cycles, cover the leftover forest by a maximum
//! matching, and report the result against f(G) or a certificate.

use serde::{Deserialize, Serialize};

use crate::augment::{pack_to_optimum, CertificateData, MoveRecord};
use crate::config::Budgets;
use crate::deficiency::{compute_f, verify_certificate, BoundReport, DeficiencyCertificate};
use crate::error::{Error, Result};
use crate::forest::{forest_alpha, forest_pseudo_factor};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    /// K1
    #[serde(rename = "vertex")]
    Singleton,
    /// K2
    Edge,
    Cycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
}

impl Component {
    pub fn singleton(v: usize) -> Self {
        Component {
            kind: ComponentKind::Singleton,
            vertices: vec![v],
        }
    }

    pub fn edge(u: usize, v: usize) -> Self {
        Component {
            kind: ComponentKind::Edge,
            vertices: vec![u, v],
        }
    }

    pub fn cycle(vertices: Vec<usize>) -> Self {
        Component {
            kind: ComponentKind::Cycle,
            vertices,
        }
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == ComponentKind::Cycle
    }
}

/// A spanning subgraph whose components are K1, K2 or cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoTwoFactor {
    pub components: Vec<Component>,
    pub non_cycle_count: usize,
}

impl PseudoTwoFactor {
    pub fn new(components: Vec<Component>) -> Self {
        let non_cycle_count = components.iter().filter(|c| !c.is_cycle()).count();
        PseudoTwoFactor {
            components,
            non_cycle_count,
        }
    }

    pub fn cycle_covered(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.is_cycle())
            .map(|c| c.vertices.len())
            .sum()
    }

    pub fn is_two_factor(&self) -> bool {
        self.non_cycle_count == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    VertexOutOfRange {
        component: usize,
        vertex: usize,
    },
    Repeated {
        vertex: usize,
    },
    Missing {
        vertex: usize,
    },
    WrongSize {
        component: usize,
        len: usize,
    },
    NotAnEdge {
        component: usize,
        u: usize,
        v: usize,
    },
    CountMismatch {
        declared: usize,
        actual: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate(g: &Graph, pf: &PseudoTwoFactor) -> Validation {
    let mut violations = Vec::new();
    let mut seen = VertexSet::empty(g.n());
    for (i, c) in pf.components.iter().enumerate() {
        let size_ok = match c.kind {
            ComponentKind::Singleton => c.vertices.len() == 1,
            ComponentKind::Edge => c.vertices.len() == 2,
            ComponentKind::Cycle => c.vertices.len() >= 3,
        };
        if !size_ok {
            violations.push(Violation::WrongSize {
                component: i,
                len: c.vertices.len(),
            });
        }
        for &v in &c.vertices {
            if v >= g.n() {
                violations.push(Violation::VertexOutOfRange {
                    component: i,
                    vertex: v,
                });
            } else if !seen.insert(v) {
                violations.push(Violation::Repeated { vertex: v });
            }
        }
        let links: Vec<(usize, usize)> = match c.kind {
            ComponentKind::Singleton => Vec::new(),
            ComponentKind::Edge => c.vertices.windows(2).map(|w| (w[0], w[1])).collect(),
            ComponentKind::Cycle => (0..c.vertices.len())
                .map(|j| (c.vertices[j], c.vertices[(j + 1) % c.vertices.len()]))
                .collect(),
        };
        for (u, v) in links {
            if !g.has_edge(u, v) {
                violations.push(Violation::NotAnEdge { component: i, u, v });
            }
        }
    }
    for v in seen.complement().iter() {
        violations.push(Violation::Missing { vertex: v });
    }
    let actual = pf.components.iter().filter(|c| !c.is_cycle()).count();
    if actual != pf.non_cycle_count {
        violations.push(Violation::CountMismatch {
            declared: pf.non_cycle_count,
            actual,
        });
    }
    Validation { violations }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundMode {
    /// Compare against exactly computed f(G).
    ExactF,
    /// Compare against the certificate the packer stopped with.
    #[serde(rename = "certificate")]
    CertificateOnly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub factor: PseudoTwoFactor,
    /// Mode actually used; differs from the request after a fallback.
    pub mode: BoundMode,
    /// ExactF was requested but over budget.
    pub fell_back: bool,
    pub bound_report: Option<BoundReport>,
    /// Certificate from the packer; `None` for a 2-factor.
    pub certificate: Option<CertificateData>,
    pub moves: Vec<MoveRecord>,
    pub satisfied: bool,
}

impl SolveReport {
    /// The bound the count is compared against: f(G), or the certificate
    /// value, or 0 when the packer found a 2-factor without one.
    pub fn bound(&self) -> i64 {
        match (&self.bound_report, &self.certificate) {
            (Some(b), _) => b.f_value,
            (None, Some(c)) => c.certificate.value,
            (None, None) => 0,
        }
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match (&self.bound_report, &self.certificate) {
            (Some(b), _) => Some(&b.certificate.witness),
            (None, Some(c)) => Some(&c.certificate.witness),
            (None, None) => None,
        }
    }

    pub fn to_json(&self) -> SolveReportJson {
        SolveReportJson {
            components: self.factor.components.clone(),
            non_cycle_count: self.factor.non_cycle_count,
            mode: self.mode,
            bound: self.bound(),
            witness: self.witness().map(VertexSet::to_vec).unwrap_or_default(),
            satisfied: self.satisfied,
            fell_back: self.fell_back,
        }
    }
}

/// Wire format of a [`SolveReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReportJson {
    pub components: Vec<Component>,
    pub non_cycle_count: usize,
    pub mode: BoundMode,
    pub bound: i64,
    pub witness: Vec<usize>,
    pub satisfied: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub fell_back: bool,
}

impl SolveReportJson {
    pub fn factor(&self) -> PseudoTwoFactor {
        PseudoTwoFactor {
            components: self.components.clone(),
            non_cycle_count: self.non_cycle_count,
        }
    }
}

/// Builds a pseudo 2-factor with at most max{0, f(G)} non-cycle components.
///
/// In [`BoundMode::ExactF`] f(G) is computed exactly when `g` is within
/// `budgets.exact_n`; otherwise the report falls back to certificate mode
/// and sets `fell_back`.
pub fn solve(g: &Graph, mode: BoundMode, budgets: &Budgets) -> Result<SolveReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let packed = pack_to_optimum(g)?;
    let h = packed.packing.uncovered();
    let forest = forest_pseudo_factor(g, &h)?;

    let mut components: Vec<Component> = packed
        .packing
        .cycles()
        .iter()
        .cloned()
        .map(Component::cycle)
        .collect();
    components.extend(
        forest
            .matched_edges
            .iter()
            .map(|&(u, v)| Component::edge(u, v)),
    );
    components.extend(forest.singletons.iter().map(Component::singleton));
    let factor = PseudoTwoFactor::new(components);

    if factor.non_cycle_count != forest_alpha(g, &h)? {
        return Err(Error::invariant(
            "forest cover does not have α(H) components",
        ));
    }
    if let Some(c) = &packed.certificate {
        if !verify_certificate(g, &c.certificate)
            || c.certificate.value < factor.non_cycle_count as i64
        {
            return Err(Error::invariant(
                "packer certificate does not bound the count",
            ));
        }
    }

    let (mode, fell_back, bound_report) = match mode {
        BoundMode::CertificateOnly => (BoundMode::CertificateOnly, false, None),
        BoundMode::ExactF => match compute_f(g, budgets) {
            Ok(b) => (BoundMode::ExactF, false, Some(b)),
            Err(Error::Budget { .. }) => (BoundMode::CertificateOnly, true, None),
            Err(e) => return Err(e),
        },
    };
    let mut report = SolveReport {
        factor,
        mode,
        fell_back,
        bound_report,
        certificate: packed.certificate,
        moves: packed.moves,
        satisfied: false,
    };
    let count = report.factor.non_cycle_count as i64;
    report.satisfied = validate(g, &report.factor).is_valid() && count <= report.bound().max(0);
    Ok(report)
}

/// Consequences of the f(G) bound checked on one solved instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundConsequences {
    pub non_cycle_count: usize,
    pub alpha: usize,
    pub delta: usize,
    pub f: i64,
    pub classical_bound: i64,
    /// α ≥ δ ⇒ count ≤ α − δ + 1
    pub classical_holds: bool,
    /// δ ≥ α + 1 ⇒ 2-factor
    pub min_degree_two_factor_holds: bool,
    /// every independent I has δ_G(I) ≥ |I| + 1 ⇒ 2-factor
    pub independent_sets_two_factor_holds: bool,
}

impl BoundConsequences {
    pub fn all_hold(&self) -> bool {
        self.classical_holds
            && self.min_degree_two_factor_holds
            && self.independent_sets_two_factor_holds
    }
}

pub fn check_bound_consequences(g: &Graph, budgets: &Budgets) -> Result<BoundConsequences> {
    let bound = compute_f(g, budgets)?;
    let report = solve(g, BoundMode::CertificateOnly, budgets)?;
    Ok(consequences_report(&report.factor, &bound))
}

pub(crate) fn consequences_report(factor: &PseudoTwoFactor, b: &BoundReport) -> BoundConsequences {
    let count = factor.non_cycle_count;
    let (alpha, delta) = (b.alpha, b.delta);
    BoundConsequences {
        non_cycle_count: count,
        alpha,
        delta,
        f: b.f_value,
        classical_bound: b.classical_bound,
        classical_holds: alpha < delta || count as i64 <= b.classical_bound,
        min_degree_two_factor_holds: delta < alpha + 1 || count == 0,
        independent_sets_two_factor_holds: b.f_value > 0 || count == 0,
    }
}

/// Re-checks a certificate carried in a serialized report.
pub fn report_certificate(g: &Graph, report: &SolveReportJson) -> Option<bool> {
    if report.witness.is_empty() {
        return None;
    }
    let witness = VertexSet::from_iter_in(
        g.n().max(report.witness.iter().max()? + 1),
        report.witness.iter().copied(),
    );
    Some(verify_certificate(
        g,
        &DeficiencyCertificate {
            witness,
            value: report.bound,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn solves_c5_and_k2() {
        let b = Budgets::default();
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let r = solve(&c5, BoundMode::ExactF, &b).unwrap();
        assert_eq!(r.factor.non_cycle_count, 0);
        assert_eq!(r.bound(), 1);
        assert!(r.satisfied);

        let k2 = graph(2, &[(0, 1)]);
        let r = solve(&k2, BoundMode::ExactF, &b).unwrap();
        assert_eq!(r.factor.components, vec![Component::edge(0, 1)]);
        assert_eq!(r.bound(), 1);
        assert!(r.satisfied);
    }

    #[test]
    fn validate_flags_malformed_factors() {
        let k3 = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        let short_cycle = PseudoTwoFactor {
            components: vec![Component::cycle(vec![0, 1]), Component::singleton(2)],
            non_cycle_count: 1,
        };
        let v = validate(&k3, &short_cycle);
        assert!(v.violations.contains(&Violation::WrongSize {
            component: 0,
            len: 2
        }));

        let missing = PseudoTwoFactor::new(vec![Component::edge(0, 1)]);
        assert_eq!(
            validate(&k3, &missing).violations,
            vec![Violation::Missing { vertex: 2 }]
        );

        let miscounted = PseudoTwoFactor {
            components: vec![Component::cycle(vec![0, 1, 2])],
            non_cycle_count: 1,
        };
        assert!(!validate(&k3, &miscounted).is_valid());

        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let non_edge = PseudoTwoFactor::new(vec![Component::edge(0, 2), Component::singleton(1)]);
        assert_eq!(
            validate(&p3, &non_edge).violations,
            vec![Violation::NotAnEdge {
                component: 0,
                u: 0,
                v: 2
            }]
        );
        assert!(validate(
            &k3,
            &PseudoTwoFactor::new(vec![Component::cycle(vec![0, 1, 2])])
        )
        .is_valid());
    }

    #[test]
    fn fallback_when_over_budget() {
        let b = Budgets {
            exact_n: 2,
            ..Budgets::default()
        };
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let r = solve(&c5, BoundMode::ExactF, &b).unwrap();
        assert!(r.fell_back);
        assert_eq!(r.mode, BoundMode::CertificateOnly);
        assert!(r.satisfied);
    }

    #[test]
    fn json_round_trip_and_shape() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let r = solve(&p3, BoundMode::ExactF, &Budgets::default()).unwrap();
        let json = serde_json::to_value(r.to_json()).unwrap();
        assert_eq!(json["mode"], "exact-f");
        assert_eq!(json["non_cycle_count"], 2);
        assert_eq!(json["bound"], 2);
        assert_eq!(json["satisfied"], true);
        assert!(json.get("fell_back").is_none());
        let kinds: Vec<_> = json["components"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["kind"].clone())
            .collect();
        assert!(kinds.contains(&"edge".into()) && kinds.contains(&"vertex".into()));
        let back: SolveReportJson = serde_json::from_value(json).unwrap();
        assert!(validate(&p3, &back.factor()).is_valid());
        assert_eq!(report_certificate(&p3, &back), Some(true));
    }

    #[test]
    fn consequences_on_k4() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let t = check_bound_consequences(&k4, &Budgets::default()).unwrap();
        assert_eq!(t.non_cycle_count, 0);
        assert!(t.all_hold());
    }
}
