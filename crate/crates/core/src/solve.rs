//! Types shared by all solvers, and dispatch by algorithm name.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::ggst::GgstSolver;
use crate::graph::{EdgeId, Graph, Weight};
use crate::queues::{LazyHeapQueue, MatrixQueue, SilQueue};
use crate::recon;
use crate::tarjan::TarjanSolver;

/// Largest vertex count accepted by the matrix strategy (one row of `n`
/// cells per super-vertex).
pub const MATRIX_MAX_VERTICES: usize = 1 << 13;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("no arborescence rooted at {root}")]
    Infeasible { root: usize },
    #[error("time budget exhausted")]
    Timeout,
    #[error("{vertices} vertices exceed the {limit}-vertex limit of this solver")]
    TooLarge { vertices: usize, limit: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl From<crate::dsu::DsuError> for SolveError {
    fn from(e: crate::dsu::DsuError) -> Self {
        SolveError::Internal(e.to_string())
    }
}

/// Instrumentation counters collected during a solve.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub contractions: u64,
    /// Sum of the lengths of all contracted cycles.
    pub cycle_length_sum: u64,
    /// Incoming-edge set sizes of cycle members at each contraction, summed:
    /// the work a strategy that rescans merged lists would perform.
    pub merged_list_scan: u64,
    /// Elements moved individually by smaller-into-larger merges.
    pub queue_moves: u64,
    pub af_inserts: u64,
    pub af_replaces: u64,
    pub af_deletes: u64,
    pub af_merges: u64,
    pub af_queries: u64,
    pub exit_inserts: u64,
    pub exit_deletes: u64,
}

/// Output of the main phase of every solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub total_weight: Weight,
    /// Edge ids in the order they were chosen.
    pub picked: Vec<EdgeId>,
    /// For each pick, the later pick that replaced it when its super-vertex
    /// was contracted.
    pub forest_parent: Vec<Option<usize>>,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, Default)]
pub struct SolverConfig {
    /// Checked cooperatively inside the main loop.
    pub deadline: Option<Instant>,
    /// Run the full structural checkers after every step (slow).
    pub check_invariants: bool,
}

/// Polls the deadline every `STRIDE` steps, and on the very first one.
#[derive(Debug)]
pub(crate) struct Budget {
    deadline: Option<Instant>,
    steps: u64,
}

impl Budget {
    const STRIDE: u64 = 1024;

    pub(crate) fn new(deadline: Option<Instant>) -> Self {
        Self { deadline, steps: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<(), SolveError> {
        let due = self.steps.is_multiple_of(Self::STRIDE);
        self.steps += 1;
        match self.deadline {
            Some(d) if due && Instant::now() >= d => Err(SolveError::Timeout),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Ggst,
    TarjanMatrix,
    TarjanHeap,
    TarjanSil,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] =
        [Algorithm::Ggst, Algorithm::TarjanMatrix, Algorithm::TarjanHeap, Algorithm::TarjanSil];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ggst => "ggst",
            Algorithm::TarjanMatrix => "tarjan-matrix",
            Algorithm::TarjanHeap => "tarjan-heap",
            Algorithm::TarjanSil => "tarjan-sil",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown algorithm {0:?} (expected ggst, tarjan-matrix, tarjan-heap or tarjan-sil)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

/// A solver whose data structures are built; `run` performs the main phase.
/// Dropping the solver releases its state.
pub trait Solver {
    fn run(&mut self) -> Result<SolveResult, SolveError>;
}

/// Builds the solver for `algo` (the initialization phase).
pub fn build_solver<'g>(
    algo: Algorithm,
    graph: &'g Graph,
    config: SolverConfig,
) -> Result<Box<dyn Solver + 'g>, SolveError> {
    Ok(match algo {
        Algorithm::Ggst => Box::new(GgstSolver::new(graph, config)),
        Algorithm::TarjanMatrix => {
            if graph.n() > MATRIX_MAX_VERTICES {
                return Err(SolveError::TooLarge { vertices: graph.n(), limit: MATRIX_MAX_VERTICES });
            }
            Box::new(TarjanSolver::<MatrixQueue>::new(graph, config)?)
        }
        Algorithm::TarjanHeap => Box::new(TarjanSolver::<LazyHeapQueue>::new(graph, config)?),
        Algorithm::TarjanSil => Box::new(TarjanSolver::<SilQueue>::new(graph, config)?),
    })
}

/// Main phase only: weight, picks and counters.
pub fn solve(graph: &Graph, algo: Algorithm) -> Result<SolveResult, SolveError> {
    build_solver(algo, graph, SolverConfig::default())?.run()
}

/// A full solve including reconstruction.
#[derive(Debug, Clone)]
pub struct Arborescence {
    pub total_weight: Weight,
    /// The `n - 1` chosen edge ids.
    pub edges: Vec<EdgeId>,
    pub stats: SolveStats,
}

pub fn solve_arborescence(graph: &Graph, algo: Algorithm) -> Result<Arborescence, SolveError> {
    let result = solve(graph, algo)?;
    let edges = recon::reconstruct_from(&result, graph).map_err(|e| SolveError::Internal(e.to_string()))?;
    Ok(Arborescence { total_weight: result.total_weight, edges, stats: result.stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("foo".parse::<Algorithm>().is_err());
    }

    #[test]
    fn zero_budget_times_out_immediately() {
        let mut b = Budget::new(Some(Instant::now()));
        assert_eq!(b.tick(), Err(SolveError::Timeout));
        let mut unlimited = Budget::new(None);
        assert!((0..5000).all(|_| unlimited.tick().is_ok()));
    }
}
