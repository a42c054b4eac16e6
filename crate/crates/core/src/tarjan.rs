//! Tarjan's sequential formulation of Edmonds' algorithm.
//!
//! Unprocessed super-vertices wait on a stack. Each one takes its cheapest
//! incoming edge that is not a self-loop; an edge closing a cycle of chosen
//! edges (detected through weak components) triggers a contraction: costs into
//! each member drop by that member's chosen cost, and the members' queues and
//! sets are merged into a new super-vertex that goes back on the stack.

use crate::dsu::{ContractionDsu, PlainDsu};
use crate::graph::{Graph, Weight};
use crate::queues::EdgeQueue;
use crate::solve::{Budget, SolveError, SolveResult, SolveStats, Solver, SolverConfig};

const NONE: usize = usize::MAX;

pub struct TarjanSolver<'g, Q: EdgeQueue> {
    graph: &'g Graph,
    config: SolverConfig,
    queues: Vec<Q>,
}

impl<'g, Q: EdgeQueue> TarjanSolver<'g, Q> {
    /// Creates one queue per vertex and inserts every edge that can ever be
    /// chosen; self-loops and edges into the root are skipped.
    pub fn new(graph: &'g Graph, config: SolverConfig) -> Result<Self, SolveError> {
        let n = graph.n();
        let mut queues: Vec<Q> = (0..n).map(|v| Q::for_vertex(v, n)).collect();
        for e in graph.edges() {
            if e.origin != e.target && e.target != graph.root() {
                queues[e.target].insert(e.id, e.origin, e.weight);
            }
        }
        Ok(Self { graph, config, queues })
    }
}

impl<Q: EdgeQueue> Solver for TarjanSolver<'_, Q> {
    fn run(&mut self) -> Result<SolveResult, SolveError> {
        let graph = self.graph;
        let n = graph.n();
        let root = graph.root();
        let mut budget = Budget::new(self.config.deadline);
        let mut stats = SolveStats::default();

        let mut contracted = ContractionDsu::new(n);
        let mut weak = PlainDsu::new(n);
        let mut in_pick = vec![NONE; n];
        let mut pick_cost: Vec<Weight> = vec![0; n];
        let mut adopt: Vec<Vec<usize>> = vec![Vec::new(); n];

        let mut picked = Vec::with_capacity(2 * n);
        let mut forest_parent: Vec<Option<usize>> = Vec::with_capacity(2 * n);
        let mut total: Weight = 0;

        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| v != root).collect();
        let mut members = Vec::new();

        budget.tick()?;
        while let Some(v) = stack.pop() {
            budget.tick()?;
            let (edge, cost, from) = loop {
                let (e, c) = self.queues[v].extract_min().ok_or(SolveError::Infeasible { root })?;
                let from = contracted.find(graph.edge(e).origin);
                if from != v {
                    break (e, c, from);
                }
            };
            if self.config.check_invariants {
                let expected = contracted.current_cost(graph.edge(edge).weight, graph.edge(edge).target);
                if expected != cost {
                    return Err(SolveError::Internal(format!(
                        "queue cost {cost} of edge {edge} differs from reduced cost {expected}"
                    )));
                }
            }

            let idx = picked.len();
            picked.push(edge);
            forest_parent.push(None);
            for child in adopt[v].drain(..) {
                forest_parent[child] = Some(idx);
            }
            total += cost;
            in_pick[v] = idx;
            pick_cost[v] = cost;

            if weak.find(from) != weak.find(v) {
                weak.join(from, v);
                continue;
            }

            // Walk the chosen edges back from `from` until the cycle closes at v.
            members.clear();
            members.push(v);
            let mut x = from;
            while x != v {
                members.push(x);
                x = contracted.find(graph.edge(picked[in_pick[x]]).origin);
            }

            for &m in &members {
                self.queues[m].add_constant(-pick_cost[m]);
                contracted.add_offset(m, -pick_cost[m])?;
                stats.merged_list_scan += self.queues[m].len() as u64;
            }
            if self.config.check_invariants {
                for &m in &members {
                    let e = graph.edge(picked[in_pick[m]]);
                    let c = contracted.current_cost(e.weight, e.target);
                    if c != 0 {
                        return Err(SolveError::Internal(format!("cycle edge {} has reduced cost {c}", e.id)));
                    }
                }
            }

            let mut rep = members[0];
            let mut queue = std::mem::take(&mut self.queues[rep]);
            for &m in &members[1..] {
                queue.merge(std::mem::take(&mut self.queues[m]));
                rep = contracted.join(rep, m);
            }
            self.queues[rep] = queue;
            adopt[rep] = members.iter().map(|&m| in_pick[m]).collect();
            for &m in &members {
                in_pick[m] = NONE;
            }

            stats.contractions += 1;
            stats.cycle_length_sum += members.len() as u64;
            stack.push(rep);
        }

        stats.queue_moves = self.queues.iter().map(|q| q.moves()).sum();
        debug_assert!(picked.len() <= 2 * n);
        Ok(SolveResult { total_weight: total, picked, forest_parent, stats })
    }
}
