//! Turning the pick log of a solver into the final arborescence.
//!
//! Picks form a forest: the edge chosen for a contracted super-vertex is the
//! parent of the cycle edges it replaced. Walking the picks backwards, every
//! pick not yet deleted is a root; it is kept, and the path from the first
//! pick into its original target up to that root is deleted.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{EdgeId, Graph};
use crate::solve::SolveResult;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconError {
    #[error("vertex {vertex} never received a picked edge")]
    MissingLeaf { vertex: usize },
    #[error("pick {pick} lies outside the pick log")]
    BadParent { pick: usize },
    #[error("reconstructed edges do not form an arborescence")]
    NotArborescence,
    #[error("reconstructed weight {got} differs from solver weight {expected}")]
    WeightMismatch { expected: i64, got: i64 },
}

/// For each vertex, the index of the earliest pick entering it. The root maps
/// to `None`.
pub fn build_leaf_map(result: &SolveResult, graph: &Graph) -> Result<Vec<Option<usize>>, ReconError> {
    let mut leaf_of = vec![None; graph.n()];
    for (i, &e) in result.picked.iter().enumerate() {
        let t = graph.edge(e).target;
        if leaf_of[t].is_none() {
            leaf_of[t] = Some(i);
        }
    }
    if let Some(v) = (0..graph.n()).find(|&v| v != graph.root() && leaf_of[v].is_none()) {
        return Err(ReconError::MissingLeaf { vertex: v });
    }
    Ok(leaf_of)
}

/// Edge ids of the arborescence, plus the number of forest nodes visited.
pub fn reconstruct_counted(
    result: &SolveResult,
    leaf_of: &[Option<usize>],
    graph: &Graph,
) -> Result<(Vec<EdgeId>, u64), ReconError> {
    let k = result.picked.len();
    let mut deleted = vec![false; k];
    let mut edges = Vec::with_capacity(graph.n().saturating_sub(1));
    let mut visits = 0u64;
    for i in (0..k).rev() {
        if deleted[i] {
            continue;
        }
        let e = result.picked[i];
        edges.push(e);
        let t = graph.edge(e).target;
        let mut node = leaf_of[t].ok_or(ReconError::MissingLeaf { vertex: t })?;
        loop {
            visits += 1;
            if deleted[node] {
                break;
            }
            deleted[node] = true;
            match result.forest_parent[node] {
                Some(p) if p < k => node = p,
                Some(p) => return Err(ReconError::BadParent { pick: p }),
                None => break,
            }
        }
    }
    Ok((edges, visits))
}

pub fn reconstruct(result: &SolveResult, leaf_of: &[Option<usize>], graph: &Graph) -> Result<Vec<EdgeId>, ReconError> {
    reconstruct_counted(result, leaf_of, graph).map(|(edges, _)| edges)
}

/// Leaf map plus reconstruction; debug builds also verify the output.
pub fn reconstruct_from(result: &SolveResult, graph: &Graph) -> Result<Vec<EdgeId>, ReconError> {
    let leaf_of = build_leaf_map(result, graph)?;
    let edges = reconstruct(result, &leaf_of, graph)?;
    if cfg!(debug_assertions) {
        if !is_arborescence(graph, &edges) {
            return Err(ReconError::NotArborescence);
        }
        let got = graph.total_weight(&edges);
        if got != result.total_weight {
            return Err(ReconError::WeightMismatch { expected: result.total_weight, got });
        }
    }
    Ok(edges)
}

/// True when `edges` has exactly one edge into every non-root vertex, none
/// into the root, and reaches every vertex from the root.
pub fn is_arborescence(graph: &Graph, edges: &[EdgeId]) -> bool {
    let n = graph.n();
    if edges.len() + 1 != n || edges.iter().any(|&e| e >= graph.m()) {
        return false;
    }
    let mut has_in = vec![false; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in edges {
        let edge = graph.edge(e);
        if edge.target == graph.root() || has_in[edge.target] {
            return false;
        }
        has_in[edge.target] = true;
        out[edge.origin].push(edge.target);
    }
    let mut seen = vec![false; n];
    seen[graph.root()] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([graph.root()]);
    while let Some(v) = queue.pop_front() {
        for &w in &out[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == n
}
