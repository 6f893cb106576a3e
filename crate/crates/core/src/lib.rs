//! Exact combinatorial analysis of small graphs: toughness, forbidden
//! induced patterns, hamiltonicity, disjoint path systems, cycle-extension
//! rules, and claim verification over graph streams.
//!
//! Everything is exact: toughness ratios are rationals, searches are
//! exhaustive with sound pruning, and every positive answer carries a
//! witness that re-validates. Graphs are immutable after construction and
//! all analyses are pure functions, so values can be shared freely across
//! threads.

pub mod bitset;
pub mod claims;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod families;
mod flow;
pub mod graph;
pub mod hamilton;
pub mod independence;
pub mod io;
pub mod menger;
#[cfg(feature = "oracles")]
pub mod oracles;
pub mod path;
pub mod pattern;
pub mod rational;
pub mod stream;
pub mod toughness;

pub use bitset::VertexSet;
pub use claims::{ClaimId, ClaimReport, Verdict, Witness};
pub use connectivity::{cut_analysis, vertex_connectivity, CutAnalysis};
pub use enumerate::{enumerate_graphs, random_graph, EnumerationSpec, Filter};
pub use error::{Error, Result};
pub use extension::{
    build_cycle_one_component, build_cycle_two_components, extend_once, extend_to_fixpoint,
    ExtensionOutcome, ExtensionStep, Rule, RuleWitness,
};
pub use families::{generate, Family, Pattern};
pub use graph::Graph;
pub use hamilton::{
    hamiltonian_cycle, hamiltonian_path_between, is_hamiltonian_connected, longest_cycle,
    LongestCycleResult,
};
pub use independence::{independence_number, IndependenceResult};
pub use io::{encode_graph6, format_edge_list, parse_edge_list, parse_graph6, ParsedGraph};
pub use menger::{disjoint_paths, max_disjoint_paths, two_paths_to_component, DisjointPathsResult};
pub use path::{OrientedCycle, Path};
pub use pattern::{find_induced, is_free, PatternEmbedding};
pub use rational::Rational;
pub use toughness::{
    is_t_tough, tough_set, toughness_exact, ToughnessDecision, ToughnessResult, ToughnessValue,
};
