//! Generalized Sierpinski graphs S(G,t): construction from arbitrary
//! base graphs, exact solvers for the classical NP-hard invariants, and
//! machine checks of the closed formulas relating S(G,t) to G.
//!
//! The crate is organized in layers:
//! - [`graph`], [`word`], [`bitset`]: simple graphs, word labels, and
//!   vertex sets;
//! - [`sierpinski`]: two independent constructions of S(G,t) plus the
//!   raw adjacency rule;
//! - [`solvers`]: exact chromatic, clique, cover, independence, and
//!   domination solvers with witnesses;
//! - [`formulas`]: the closed-form layer and its constructive witnesses;
//! - [`corpus`], [`verify`]: graph families and the formula-vs-solver
//!   verification campaign.

pub mod bitset;
pub mod corpus;
pub mod formulas;
pub mod graph;
pub mod sierpinski;
pub mod solvers;
pub mod validate;
pub mod verify;
pub mod word;

pub use bitset::VertexSet;
pub use graph::{BaseGraph, GraphError, SupportInfo};
pub use sierpinski::{
    build_direct, build_recursive, copy_extreme, edge_rule, implicit_neighbors, BuildError,
    SierpinskiGraph, DEFAULT_VERTEX_BUDGET,
};
pub use solvers::{
    chromatic_number, clique_number, domination_number, enumerate_gamma_sets,
    has_unique_gamma_set, independence_number, vertex_cover_number, xi, xi_with_witness, Coloring,
    GammaSetFamily, SolverBudget, SolverError, XiCertificate,
};
pub use word::{Word, WordError};
