//! Minimum spanning arborescences (directed MSTs).
//!
//! Four solver configurations share one interface: Tarjan's formulation of
//! Edmonds' algorithm with a matrix, a lazy skew heap or a smaller-into-larger
//! binary heap as incoming-edge sets, and the growth-path algorithm of Gabow,
//! Galil, Spencer and Tarjan. Each solver logs its picks; [`recon`] turns the
//! log into the arborescence.
//!
//! ```
//! use arborescence::{parse_edge_list, solve_arborescence, Algorithm};
//!
//! let g = parse_edge_list("3 4 0\n0 1 5\n0 2 7\n1 2 1\n2 1 1").unwrap();
//! let tree = solve_arborescence(&g, Algorithm::Ggst).unwrap();
//! assert_eq!(tree.total_weight, 6);
//! ```

pub mod active_forest;
pub mod dsu;
pub mod gen;
pub mod ggst;
pub mod graph;
pub mod oracle;
pub mod queues;
pub mod recon;
pub mod rng;
pub mod solve;
pub mod tarjan;

pub use gen::{gen_antilemon, gen_er_rooted, GenError};
pub use graph::{
    attach_super_root, parse_edge_list, parse_konect, sample_weights, Edge, EdgeId, Graph, GraphError, SuperRooted,
    Weight,
};
pub use recon::{is_arborescence, ReconError};
pub use solve::{
    build_solver, solve, solve_arborescence, Algorithm, Arborescence, SolveError, SolveResult, SolveStats, Solver,
    SolverConfig, UnknownAlgorithm,
};
