//! Slow reference solvers used to check the real ones.

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Weight};

pub const BRUTE_FORCE_MAX_VERTICES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{0} vertices is too many for exhaustive search")]
    TooLarge(usize),
    #[error("no arborescence exists")]
    Infeasible,
}

/// Tries every choice of one incoming edge per non-root vertex.
pub fn brute_force(graph: &Graph) -> Result<(Weight, Vec<EdgeId>), OracleError> {
    let n = graph.n();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(OracleError::TooLarge(n));
    }
    let root = graph.root();
    let vertices: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let mut incoming: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for e in graph.edges() {
        if e.origin != e.target && e.target != root {
            incoming[e.target].push(e.id);
        }
    }
    if vertices.iter().any(|&v| incoming[v].is_empty()) {
        return Err(OracleError::Infeasible);
    }

    let mut choice = vec![0usize; vertices.len()];
    let mut parent = vec![usize::MAX; n];
    let mut best: Option<(Weight, Vec<EdgeId>)> = None;
    loop {
        let edges: Vec<EdgeId> = vertices.iter().zip(&choice).map(|(&v, &c)| incoming[v][c]).collect();
        for &e in &edges {
            parent[graph.edge(e).target] = graph.edge(e).origin;
        }
        if reaches_root(&parent, root) {
            let w = graph.total_weight(&edges);
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, edges));
            }
        }

        // Odometer step.
        let mut i = 0;
        loop {
            if i == vertices.len() {
                return best.ok_or(OracleError::Infeasible);
            }
            choice[i] += 1;
            if choice[i] < incoming[vertices[i]].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn reaches_root(parent: &[usize], root: usize) -> bool {
    let n = parent.len();
    (0..n).all(|v| {
        let mut x = v;
        for _ in 0..n {
            if x == root {
                return true;
            }
            x = parent[x];
        }
        x == root
    })
}

/// Textbook Edmonds: choose the cheapest incoming edge everywhere, and if that
/// closes cycles, build the contracted graph explicitly and recurse.
pub fn naive_edmonds(graph: &Graph) -> Result<Weight, OracleError> {
    let edges: Vec<(usize, usize, Weight)> = graph.edges().iter().map(|e| (e.origin, e.target, e.weight)).collect();
    edmonds_rec(graph.n(), graph.root(), edges)
}

fn edmonds_rec(n: usize, root: usize, edges: Vec<(usize, usize, Weight)>) -> Result<Weight, OracleError> {
    let mut best: Vec<Option<(usize, Weight)>> = vec![None; n];
    for &(u, v, w) in &edges {
        if u != v && v != root && best[v].is_none_or(|(_, bw)| w < bw) {
            best[v] = Some((u, w));
        }
    }
    if (0..n).any(|v| v != root && best[v].is_none()) {
        return Err(OracleError::Infeasible);
    }

    // Label the cycles among the chosen edges.
    let mut comp = vec![usize::MAX; n];
    let mut mark = vec![usize::MAX; n];
    let mut on_cycle = vec![false; n];
    let mut count = 0;
    let mut cycle_weight = 0;
    for s in 0..n {
        let mut x = s;
        while x != root && mark[x] == usize::MAX {
            mark[x] = s;
            x = best[x].unwrap().0;
        }
        if x != root && mark[x] == s && comp[x] == usize::MAX {
            let mut y = x;
            loop {
                comp[y] = count;
                on_cycle[y] = true;
                cycle_weight += best[y].unwrap().1;
                y = best[y].unwrap().0;
                if y == x {
                    break;
                }
            }
            count += 1;
        }
    }
    if count == 0 {
        return Ok((0..n).filter(|&v| v != root).map(|v| best[v].unwrap().1).sum());
    }
    for c in comp.iter_mut().filter(|c| **c == usize::MAX) {
        *c = count;
        count += 1;
    }
    let contracted = edges
        .into_iter()
        .filter(|&(u, v, _)| comp[u] != comp[v])
        .map(|(u, v, w)| {
            let reduce = if on_cycle[v] { best[v].unwrap().1 } else { 0 };
            (comp[u], comp[v], w - reduce)
        })
        .collect();
    Ok(cycle_weight + edmonds_rec(count, comp[root], contracted)?)
}
