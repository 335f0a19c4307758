//! Certified search for long good cycles in weighted configuration graphs.
//!
//! The library decides, for an ordered bipartite graph `H` and every
//! configuration `τ` over it, whether every admissible weight function on the
//! configuration graph `G_τ` forces a cycle strictly heavier than the two main
//! cycles. Every positive answer is backed by a machine-checkable certificate:
//! either a covering pair of good cycles, or an exact rational Farkas
//! certificate of LP infeasibility. Every negative answer carries an explicit
//! feasible weight function.
//!
//! Modules follow the pipeline:
//!
//! * [`obg`] — bipartite graphs, vertex orderings, equivalence classes.
//! * [`config`] — configurations (neighbourhood orders) and their extensions.
//! * [`confgraph`] — configuration graphs and good-cycle enumeration.
//! * [`certificates`] — covering-pair check, exact LP feasibility, verdicts.
//! * [`search`] — the staged edge-by-edge search and witness extraction.
//! * [`reduction`] — from two-longest-cycle host instances to weighted
//!   configuration graphs, and lifting cycles back.
//! * [`document`] — canonical JSON document formats used by the CLI.
//!
//! All verdict-level arithmetic is exact. Floating point appears only in an
//! advisory pre-screen whose result never reaches a certificate.

pub mod certificates;
pub mod confgraph;
pub mod config;
pub mod document;
pub mod lp;
pub mod obg;
pub mod reduction;
pub mod sampling;
pub mod search;

/// Exact scalar used for all weights, LP verdicts and certificates.
pub type Rational = num_rational::BigRational;

/// Integer backing [`Rational`].
pub type Int = num_bigint::BigInt;

/// Shorthand for an exact rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Int::from(v))
}

pub use certificates::{
    build_lp, decide_feasibility, has_long_good_cycle, pathcheck, verify_verdict,
    FarkasCertificate, FeasibilityVerdict, LinearSystem, PathcheckCertificate, WeightFunction,
};
pub use confgraph::{build_configuration_graph, enumerate_good_cycles, ConfigurationGraph, Cycle};
pub use config::Configuration;
pub use obg::{
    builtin_graph, enumerate_orderings, equivalence_classes, equivalent, BipartiteGraph,
    BuiltinFamily, OrderedBipartiteGraph,
};
pub use search::{default_edge_order, find_witness, run_search, EdgeOrder, SearchReport, Witness};
