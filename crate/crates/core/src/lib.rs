//! Pseudo 2-factors with few non-cycle components.
//!
//! A pseudo 2-factor of a graph is a spanning subgraph whose components are
//! K1, K2 or cycles. Every graph G has one with at most max{0, f(G)} K1/K2
//! components, where f(G) is the maximum of |I| − δ_G(I) + 1 over nonempty
//! independent sets I. [`solve`] builds such a factor by local improvement
//! of a cycle packing; when it stops short of a 2-factor it holds an
//! independent set whose value bounds its own count from above, so the
//! guarantee never needs f(G) itself.
//!
//! Exact f(G), α(G) and the exponential oracles in [`oracle`] are for small
//! graphs and testing.

pub mod augment;
pub mod cli;
pub mod config;
pub mod deficiency;
pub mod driver;
pub mod error;
pub mod forest;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod packing;
pub mod vertex_set;

pub use augment::{pack_to_optimum, AugmentationTrace, CertificateData, PackResult};
pub use config::Budgets;
pub use deficiency::{compute_f, verify_certificate, BoundReport, DeficiencyCertificate};
pub use driver::{
    solve, validate, BoundMode, Component, ComponentKind, PseudoTwoFactor, SolveReport,
};
pub use error::{Error, Result};
pub use generators::GeneratorSpec;
pub use graph::Graph;
pub use packing::OrientedCyclePacking;
pub use vertex_set::VertexSet;
