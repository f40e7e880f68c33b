//! Exact solvers for the NP-hard invariants: chromatic, clique, vertex
//! cover, independence, and domination numbers, plus enumeration of all
//! minimum dominating sets.
//!
//! Every solver is exact and deterministic: among optimal witnesses the
//! lexicographically smallest (as a sorted vertex list) is returned.
//! Budgets abort the search with a resource error, never a wrong answer.

mod clique;
mod coloring;
mod cover;
mod domination;

pub use clique::clique_number;
pub use coloring::{chromatic_number, Coloring};
pub use cover::{independence_number, vertex_cover_number};
pub use domination::{
    domination_number, enumerate_gamma_sets, has_unique_gamma_set, xi, xi_with_witness,
    GammaSetFamily, XiCertificate,
};

use crate::bitset::VertexSet;
use crate::graph::BaseGraph;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Hard cap on instance order; the solvers build an n x n bit matrix.
pub const MAX_SOLVER_ORDER: usize = 16_384;

/// Resource limits for a single solver invocation.
#[derive(Clone, Debug)]
pub struct SolverBudget {
    pub max_nodes: u64,
    pub time_limit: Duration,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_nodes: 1_000_000_000,
            time_limit: Duration::from_secs(300),
        }
    }
}

impl SolverBudget {
    pub fn with_seconds(secs: u64) -> Self {
        SolverBudget {
            time_limit: Duration::from_secs(secs),
            ..Self::default()
        }
    }
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("search budget exceeded after {nodes} nodes in {elapsed:?}")]
    BudgetExceeded { nodes: u64, elapsed: Duration },
    #[error("instance with {order} vertices exceeds solver cap {max}")]
    TooLarge { order: usize, max: usize },
}

impl SolverError {
    /// Both variants are resource outcomes: the instance was not solved
    /// but no wrong answer was produced.
    pub fn is_resource(&self) -> bool {
        true
    }
}

/// Node/time accounting shared by all searches.
pub(crate) struct Search {
    nodes: u64,
    max_nodes: u64,
    started: Instant,
    deadline: Duration,
}

impl Search {
    pub(crate) fn new(budget: &SolverBudget) -> Self {
        Search {
            nodes: 0,
            max_nodes: budget.max_nodes,
            started: Instant::now(),
            deadline: budget.time_limit,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolverError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes || (self.nodes % 8192 == 0 && self.started.elapsed() > self.deadline)
        {
            return Err(SolverError::BudgetExceeded {
                nodes: self.nodes,
                elapsed: self.started.elapsed(),
            });
        }
        Ok(())
    }
}

/// Bitset adjacency rows, the working representation of every solver.
pub(crate) struct BitGraph {
    pub n: usize,
    pub rows: Vec<VertexSet>,
}

impl BitGraph {
    pub(crate) fn build(g: &BaseGraph) -> Result<Self, SolverError> {
        let n = g.order();
        if n > MAX_SOLVER_ORDER {
            return Err(SolverError::TooLarge { order: n, max: MAX_SOLVER_ORDER });
        }
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in g.edges() {
            rows[u as usize].insert(v as usize);
            rows[v as usize].insert(u as usize);
        }
        Ok(BitGraph { n, rows })
    }

    pub(crate) fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }
}
