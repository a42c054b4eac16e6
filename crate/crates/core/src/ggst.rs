//! Growth-path algorithm of Gabow, Galil, Spencer and Tarjan, O(n log n + m).
//!
//! The solver keeps a path of super-vertices. The head's cheapest incoming
//! active edge either extends the path by its origin, contracts the path
//! prefix back to its origin, or (when it leaves the root or a finished path)
//! finalizes the path, after which a new one starts at the lowest uncovered
//! vertex. No dummy root edges are added.
//!
//! Each super-vertex has an *exit list* of its outgoing edges into the path,
//! ordered by target position; its front edge is the one registered in the
//! [`ActiveForest`]. Every on-path super-vertex has a *passive list* of
//! incoming non-front edges. The path, exit lists and passive lists are all
//! arrays whose front is the last element.
//!
//! On contraction the members' exit lists are cleared outright. Passive
//! entries that pointed at those cleared edges stay behind; they are recognized
//! when the passive list is next read, because by then their origin has been
//! merged into the contracted cycle. Multi-edges into a new cycle are reduced
//! by repeatedly deleting the costlier of the first two exit-list entries of
//! each origin, once per valid passive entry of that origin.

use crate::active_forest::ActiveForest;
use crate::dsu::ContractionDsu;
use crate::graph::{Graph, Weight};
use crate::solve::{Budget, SolveError, SolveResult, SolveStats, Solver, SolverConfig};

const NONE: usize = usize::MAX;

pub struct GgstSolver<'g> {
    graph: &'g Graph,
    config: SolverConfig,
    /// Incoming edges grouped by target (CSR), self-loops and edges into the
    /// root left out.
    in_start: Vec<usize>,
    in_edges: Vec<u32>,

    dsu: ContractionDsu,
    forest: ActiveForest,
    path: Vec<usize>,
    on_path: Vec<bool>,
    path_index: Vec<usize>,
    /// 0 = never on a path; later path entries get larger values.
    position: Vec<u64>,
    next_position: u64,
    done: Vec<bool>,
    exit: Vec<Vec<u32>>,
    passive: Vec<Vec<u32>>,
    in_exit: Vec<bool>,

    in_pick: Vec<usize>,
    pick_cost: Vec<Weight>,
    adopt: Vec<Vec<usize>>,
    picked: Vec<usize>,
    forest_parent: Vec<Option<usize>>,
    total: Weight,
    stats: SolveStats,
    members: Vec<usize>,
    origins: Vec<usize>,
}

impl<'g> GgstSolver<'g> {
    pub fn new(graph: &'g Graph, config: SolverConfig) -> Self {
        let n = graph.n();
        let m = graph.m();
        assert!(m < u32::MAX as usize, "too many edges");

        let mut in_start = vec![0usize; n + 1];
        let keep = |e: &crate::graph::Edge| e.origin != e.target && e.target != graph.root();
        for e in graph.edges().iter().filter(|e| keep(e)) {
            in_start[e.target + 1] += 1;
        }
        for v in 0..n {
            in_start[v + 1] += in_start[v];
        }
        let mut fill = in_start.clone();
        let mut in_edges = vec![0u32; in_start[n]];
        for e in graph.edges().iter().filter(|e| keep(e)) {
            in_edges[fill[e.target]] = e.id as u32;
            fill[e.target] += 1;
        }

        Self {
            graph,
            config,
            in_start,
            in_edges,
            dsu: ContractionDsu::new(n),
            forest: ActiveForest::new(n),
            path: Vec::new(),
            on_path: vec![false; n],
            path_index: vec![NONE; n],
            position: vec![0; n],
            next_position: 1,
            done: vec![false; n],
            exit: vec![Vec::new(); n],
            passive: vec![Vec::new(); n],
            in_exit: vec![false; m],
            in_pick: vec![NONE; n],
            pick_cost: vec![0; n],
            adopt: vec![Vec::new(); n],
            picked: Vec::with_capacity(2 * n),
            forest_parent: Vec::with_capacity(2 * n),
            total: 0,
            stats: SolveStats::default(),
            members: Vec::new(),
            origins: Vec::new(),
        }
    }

    fn push_path(&mut self, v: usize) {
        self.path_index[v] = self.path.len();
        self.position[v] = self.next_position;
        self.next_position += 1;
        self.on_path[v] = true;
        self.path.push(v);
    }

    fn internal(msg: impl Into<String>) -> SolveError {
        SolveError::Internal(msg.into())
    }

    /// Brings the incoming edges of the new head `u` (a single original
    /// vertex) into the exit lists of their origins.
    fn extend(&mut self, u: usize) -> Result<(), SolveError> {
        let graph = self.graph;
        for i in self.in_start[u]..self.in_start[u + 1] {
            let id = self.in_edges[i] as usize;
            let edge = graph.edge(id);
            let x = self.dsu.find(edge.origin);
            match self.exit[x].last().map(|&f| f as usize) {
                Some(f) if graph.edge(f).target == u => {
                    // Parallel edge into u: only the cheaper one stays.
                    if (edge.weight, id) < (graph.edge(f).weight, f) {
                        *self.exit[x].last_mut().unwrap() = id as u32;
                        self.in_exit[f] = false;
                        self.in_exit[id] = true;
                        self.stats.exit_deletes += 1;
                        self.stats.exit_inserts += 1;
                        self.forest.replace(x, edge, &mut self.dsu).map_err(|e| Self::internal(e.to_string()))?;
                    }
                }
                Some(f) => {
                    let t = self.dsu.find(graph.edge(f).target);
                    if self.on_path[t] {
                        self.passive[t].push(f as u32);
                    }
                    self.exit[x].push(id as u32);
                    self.in_exit[id] = true;
                    self.stats.exit_inserts += 1;
                    self.forest.replace(x, edge, &mut self.dsu).map_err(|e| Self::internal(e.to_string()))?;
                }
                None => {
                    self.exit[x].push(id as u32);
                    self.in_exit[id] = true;
                    self.stats.exit_inserts += 1;
                    self.forest.insert(x, edge, &mut self.dsu).map_err(|e| Self::internal(e.to_string()))?;
                }
            }
        }
        Ok(())
    }

    /// Contracts the path suffix (in storage order) starting at `from`.
    fn contract(&mut self, from: usize) -> Result<(), SolveError> {
        let graph = self.graph;
        let start = self.path_index[from];
        let mut members = std::mem::take(&mut self.members);
        members.clear();
        members.extend(self.path.drain(start..));

        for &m in &members {
            self.dsu.add_offset(m, -self.pick_cost[m])?;
            self.on_path[m] = false;
            self.path_index[m] = NONE;
        }
        if self.config.check_invariants {
            for &m in &members {
                let e = graph.edge(self.picked[self.in_pick[m]]);
                let c = self.dsu.current_cost(e.weight, e.target);
                if c != 0 {
                    return Err(Self::internal(format!("cycle edge {} has reduced cost {c}", e.id)));
                }
            }
        }

        // Everything leaving the cycle is a self-loop or points down the path.
        for &m in &members {
            for e in self.exit[m].drain(..) {
                self.in_exit[e as usize] = false;
                self.stats.exit_deletes += 1;
            }
            if self.forest.is_active(m) {
                self.forest.delete(m, &mut self.dsu).map_err(|e| Self::internal(e.to_string()))?;
            }
        }

        let mut rep = members[0];
        for &m in &members[1..] {
            let joined = self.dsu.join(rep, m);
            let absorbed = if joined == rep { m } else { rep };
            self.forest.merge(joined, absorbed);
            rep = joined;
        }

        // Validity is decided before any deletion below; deleting one of the
        // first two entries may remove an edge whose passive entry has not
        // been visited yet, and that entry must still be counted.
        let mut origins = std::mem::take(&mut self.origins);
        origins.clear();
        for &m in &members {
            let mut list = std::mem::take(&mut self.passive[m]);
            for &e in &list {
                let e = e as usize;
                let origin = self.dsu.find(graph.edge(e).origin);
                if self.in_exit[e] {
                    if self.config.check_invariants && origin == rep {
                        return Err(Self::internal(format!("passive edge {e} inside the cycle is still listed")));
                    }
                    origins.push(origin);
                } else if self.config.check_invariants && origin != rep {
                    return Err(Self::internal(format!("stale passive edge {e} does not close a self-loop")));
                }
            }
            list.clear();
            self.passive[m] = list;
        }
        for &x in &origins {
            self.drop_costlier_front(x, rep)?;
        }
        self.origins = origins;

        self.adopt[rep] = members.iter().map(|&m| self.in_pick[m]).collect();
        for &m in &members {
            self.in_pick[m] = NONE;
        }
        self.stats.contractions += 1;
        self.stats.cycle_length_sum += members.len() as u64;
        self.members = members;
        self.push_path(rep);
        Ok(())
    }

    /// Deletes the costlier of the first two exit-list entries of `x`, both of
    /// which enter the freshly contracted `rep`.
    fn drop_costlier_front(&mut self, x: usize, rep: usize) -> Result<(), SolveError> {
        let graph = self.graph;
        let len = self.exit[x].len();
        if len < 2 {
            return Err(Self::internal(format!("exit list of {x} has fewer than two edges into {rep}")));
        }
        let a = self.exit[x][len - 1] as usize;
        let b = self.exit[x][len - 2] as usize;
        let (ea, eb) = (graph.edge(a), graph.edge(b));
        if self.config.check_invariants && (self.dsu.find(ea.target) != rep || self.dsu.find(eb.target) != rep) {
            return Err(Self::internal(format!("front of exit list of {x} leaves the cycle")));
        }
        let ka = (self.dsu.current_cost(ea.weight, ea.target), a);
        let kb = (self.dsu.current_cost(eb.weight, eb.target), b);
        if ka > kb {
            self.exit[x].pop();
            self.in_exit[a] = false;
            self.forest.replace(x, eb, &mut self.dsu).map_err(|e| Self::internal(e.to_string()))?;
        } else {
            self.exit[x].swap_remove(len - 2);
            self.in_exit[b] = false;
        }
        self.stats.exit_deletes += 1;
        Ok(())
    }

    fn finalize_path(&mut self) {
        for &v in &self.path {
            self.done[v] = true;
            self.on_path[v] = false;
            self.path_index[v] = NONE;
        }
        self.path.clear();
    }

    fn check(&mut self) -> Result<(), SolveError> {
        let graph = self.graph;
        for x in 0..self.exit.len() {
            if self.exit[x].is_empty() {
                continue;
            }
            if !self.dsu.is_representative(x) {
                return Err(Self::internal(format!("non-representative {x} has an exit list")));
            }
            let front = *self.exit[x].last().unwrap() as usize;
            if self.forest.active_edge(x) != Some(front) {
                return Err(Self::internal(format!("front of exit list of {x} is not its active edge")));
            }
            let mut last_pos = 0;
            for i in 0..self.exit[x].len() {
                let e = self.exit[x][i] as usize;
                if !self.in_exit[e] {
                    return Err(Self::internal(format!("edge {e} listed but flagged absent")));
                }
                let t = self.dsu.find(graph.edge(e).target);
                let p = self.position[t];
                if p <= last_pos {
                    return Err(Self::internal(format!("exit list of {x} is unordered or holds two edges into {t}")));
                }
                last_pos = p;
            }
        }
        let position = &self.position;
        self.forest
            .check_invariants(&mut self.dsu, |v| (position[v] > 0).then_some(position[v]))
            .map_err(Self::internal)
    }
}

impl Solver for GgstSolver<'_> {
    fn run(&mut self) -> Result<SolveResult, SolveError> {
        let graph = self.graph;
        let n = graph.n();
        let root = graph.root();
        let mut budget = Budget::new(self.config.deadline);
        budget.tick()?;

        let mut next_start = 0;
        loop {
            while next_start < n && (next_start == root || self.done[self.dsu.find(next_start)]) {
                next_start += 1;
            }
            if next_start == n {
                break;
            }
            self.push_path(next_start);
            self.extend(next_start)?;

            loop {
                budget.tick()?;
                if self.config.check_invariants {
                    self.check()?;
                }
                let head = *self.path.last().expect("path is non-empty");
                let min = self.forest.query_min(head, &mut self.dsu).ok_or(SolveError::Infeasible { root })?;

                let idx = self.picked.len();
                self.picked.push(min.edge);
                self.forest_parent.push(None);
                for child in std::mem::take(&mut self.adopt[head]) {
                    self.forest_parent[child] = Some(idx);
                }
                self.in_pick[head] = idx;
                self.pick_cost[head] = min.cost;
                self.total += min.cost;

                let from = self.dsu.find(graph.edge(min.edge).origin);
                if from == head {
                    return Err(Self::internal(format!("head {head} picked its own self-loop")));
                }
                if from == root || self.done[from] {
                    self.finalize_path();
                    break;
                } else if !self.on_path[from] {
                    self.push_path(from);
                    self.extend(from)?;
                } else {
                    self.contract(from)?;
                }
            }
        }
        if self.config.check_invariants {
            self.check()?;
        }

        let fs = self.forest.stats();
        let mut stats = std::mem::take(&mut self.stats);
        stats.af_inserts = fs.inserts;
        stats.af_replaces = fs.replaces;
        stats.af_deletes = fs.deletes;
        stats.af_merges = fs.merges;
        stats.af_queries = fs.queries;
        Ok(SolveResult {
            total_weight: self.total,
            picked: std::mem::take(&mut self.picked),
            forest_parent: std::mem::take(&mut self.forest_parent),
            stats,
        })
    }
}
