//! Generator graphs of finite cyclic groups.
//!
//! For Z_n, two elements are adjacent in the generator graph Γ(Z_n) when at
//! least one of them generates the group. This crate builds Γ(Z_n) from that
//! rule, computes its structure, five topological indices (Wiener, Gutman,
//! Harmonic, Randić, Sombor) and its metric dimension by brute force, and
//! checks each against its closed form in `n` and `s = φ(n)`.
//!
//! ```
//! use gengraph::{build_generator_graph, compute_index_report, metric_dimension_formula};
//!
//! let g = build_generator_graph(6).unwrap();
//! assert_eq!(g.generator_count(), 2);
//! assert!(g.matches_join_model());
//!
//! let r = compute_index_report(6).unwrap();
//! assert!(r.all_agree());
//! assert_eq!(metric_dimension_formula(6).unwrap(), 4);
//! ```

pub mod cli;
pub mod cyclic_group;
pub mod error;
pub mod generator_graph;
pub mod graph_core;
pub mod metric_dim;
pub mod numeric;
pub mod report;
pub mod topo_indices;
pub mod verify;

pub use cyclic_group::{describe_group, is_prime, totient, CyclicGroup};
pub use error::{Error, Result};
pub use generator_graph::{
    build_generator_graph, check_degree_bounds, check_max_degree_bound, diameter_by_formula,
    is_faithful_edge, is_faithful_graph, FaithfulnessReport, GeneratorGraph,
};
pub use graph_core::{
    bfs_distances, complement, complete_graph, cycle_graph, diameter, join, null_graph, Diameter,
    DistanceMatrix, SimpleGraph,
};
pub use metric_dim::{
    is_resolving, lemma_single_nongenerator_check, metric_dimension_bruteforce,
    metric_dimension_formula, representation, MetricBasis, ResolvingSetResult,
};
pub use topo_indices::{compute_index_report, IndexReport};
pub use verify::{verify_range, VerificationSummary};
