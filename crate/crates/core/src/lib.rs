//! Certifying recognition of interval r-graphs.
//!
//! An r-partite graph is an interval r-graph when its vertices can be given
//! closed real intervals so that two vertices from different parts are
//! adjacent exactly when their intervals meet. This crate checks the three
//! equivalent ordering characterizations ([`orderings`]), turns valid
//! orderings into interval models ([`models`]), and searches for valid
//! orderings with an exhaustive oracle to cross-check against
//! ([`recognition`]).

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod instance;
pub mod models;
pub mod orderings;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{adjacency_matrix, random_interval_instance, random_rpartite, InstanceSeedSpec, RPartiteGraph};
pub use instance::{parse_graph, Instance};
pub use models::{
    build_reach_model, build_run_model, consecutive_reach, model_counterexample, neighbor_reach, ordering_from_model,
    verify_model, HalfIntInterval, IntervalModel, Mismatch, ModelCounterexample,
};
pub use orderings::{
    compute_coverage, find_forbidden_patterns, generalized_interval_violation, has_hell_huang_pattern,
    is_generalized_interval_ordering, is_r_interval_ordering, CoverageReport, GioViolation, PatternKind,
    PatternWitness, Run, VertexOrdering,
};
pub use recognition::{
    cross_validate, cross_validate_with_cap, recognize, recognize_exhaustive, recognize_exhaustive_with_cap,
    Certificate, CrossValidation, RecognitionResult, SearchStats, Verdict, DEFAULT_ORACLE_CAP,
};
