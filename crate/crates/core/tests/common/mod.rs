#![allow(dead_code)]

use arborescence::active_forest::ActiveForest;
use arborescence::dsu::ContractionDsu;
use arborescence::oracle::{brute_force, naive_edmonds, OracleError};
use arborescence::queues::{EdgeQueue, LazyHeapQueue, MatrixQueue, SilQueue};
use arborescence::recon::{build_leaf_map, reconstruct};
use arborescence::rng::SplitMix64;
use arborescence::{
    build_solver, is_arborescence, Algorithm, Edge, Graph, SolveError, SolveStats, SolverConfig, Weight,
};

/// Random multigraph with self-loops allowed and a random root.
pub fn random_graph(rng: &mut SplitMix64, max_n: usize, max_m: usize, w: Weight) -> Graph {
    let n = 1 + rng.index(max_n);
    let m = rng.index(max_m + 1);
    let triples: Vec<_> = (0..m).map(|_| (rng.index(n), rng.index(n), rng.range_inclusive(-w, w))).collect();
    Graph::new(n, rng.index(n), &triples).unwrap()
}

/// Common optimum (`None` if infeasible) and per-solver counters.
pub type Solved = (Option<Weight>, Vec<(Algorithm, SolveStats)>);

/// Solves with every configuration, reconstructs and validates the tree.
/// Returns the common optimum (`None` if infeasible) and per-solver stats.
pub fn solve_all(g: &Graph, check: bool) -> Result<Solved, String> {
    let mut weight: Option<Option<Weight>> = None;
    let mut stats = Vec::new();
    for algo in Algorithm::ALL {
        let config = SolverConfig { check_invariants: check, ..Default::default() };
        let outcome = build_solver(algo, g, config).and_then(|mut s| s.run());
        let w = match outcome {
            Ok(r) => {
                let leaf_of = build_leaf_map(&r, g).map_err(|e| format!("{algo}: {e}\n{g}"))?;
                let edges = reconstruct(&r, &leaf_of, g).map_err(|e| format!("{algo}: {e}\n{g}"))?;
                if edges.len() + 1 != g.n() || !is_arborescence(g, &edges) {
                    return Err(format!("{algo}: reconstruction is not an arborescence\n{g}"));
                }
                if g.total_weight(&edges) != r.total_weight {
                    return Err(format!("{algo}: tree weight differs from reported weight\n{g}"));
                }
                stats.push((algo, r.stats));
                Some(r.total_weight)
            }
            Err(SolveError::Infeasible { .. }) => None,
            Err(e) => return Err(format!("{algo}: {e}\n{g}")),
        };
        match weight {
            None => weight = Some(w),
            Some(prev) if prev != w => return Err(format!("{algo} gives {w:?}, others {prev:?}\n{g}")),
            _ => {}
        }
    }
    Ok((weight.unwrap(), stats))
}

/// `solve_all` plus agreement with both oracles.
pub fn check_against_oracles(g: &Graph) -> Result<Vec<(Algorithm, SolveStats)>, String> {
    let (w, stats) = solve_all(g, true)?;
    let bf = match brute_force(g) {
        Ok((bw, _)) => Some(bw),
        Err(OracleError::Infeasible) => None,
        Err(e) => return Err(e.to_string()),
    };
    let ne = match naive_edmonds(g) {
        Ok(nw) => Some(nw),
        Err(OracleError::Infeasible) => None,
        Err(e) => return Err(e.to_string()),
    };
    if bf != ne || w != bf {
        return Err(format!("solvers {w:?}, brute force {bf:?}, naive Edmonds {ne:?}\n{g}"));
    }
    Ok(stats)
}

/// Contraction count, cycle-length sum and forest call bounds.
pub fn check_structure(g: &Graph, stats: &[(Algorithm, SolveStats)]) -> Result<(), String> {
    let n = g.n() as u64;
    for (algo, s) in stats {
        if s.contractions > n.saturating_sub(1) {
            return Err(format!("{algo}: {} contractions on {n} vertices", s.contractions));
        }
        if s.cycle_length_sum >= 2 * n.max(1) {
            return Err(format!("{algo}: cycle lengths sum to {} on {n} vertices", s.cycle_length_sum));
        }
        if *algo == Algorithm::Ggst {
            let calls = s.af_queries + s.af_deletes + s.af_merges;
            if calls > 4 * n {
                return Err(format!("ggst: {calls} query/delete/merge calls on {n} vertices\n{g}"));
            }
        }
    }
    Ok(())
}

/// One random run of the active forest under the growth-path discipline:
/// extensions (insert and replace), contractions of a path suffix (offsets,
/// delete, merge, multi-edge consolidation) and queries, each checked against
/// a linear scan and followed by a full invariant check. Returns the number
/// of operations performed.
pub fn forest_model_run(rng: &mut SplitMix64, max_vertices: usize) -> Result<usize, String> {
    let n = 2 + rng.index(max_vertices - 1);
    let mut dsu = ContractionDsu::new(n);
    let mut forest = ActiveForest::new(n);
    let mut edges: Vec<Edge> = Vec::new();
    // Per representative: outgoing edges into the path, front at the end.
    let mut exit: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut path: Vec<usize> = Vec::new();
    let mut position = vec![0u64; n];
    let mut next_position = 1;
    let mut next_vertex = 0;
    let mut ops = 0;

    let steps = 1 + rng.index(4 * n);
    for _ in 0..steps {
        let choice = rng.index(10);
        if (choice < 4 || path.is_empty()) && next_vertex < n {
            let u = next_vertex;
            next_vertex += 1;
            position[u] = next_position;
            next_position += 1;
            path.push(u);
            let reps: Vec<usize> = (0..n).filter(|&v| v != u && dsu.is_representative(v)).collect();
            for x in reps {
                if rng.index(3) == 0 {
                    continue;
                }
                for _ in 0..1 + rng.index(2) {
                    let e = Edge { origin: x, target: u, weight: rng.range_inclusive(-30, 30), id: edges.len() };
                    edges.push(e);
                    let front = exit[x].last().copied();
                    match front {
                        Some(f) if edges[f].target == u => {
                            if (e.weight, e.id) < (edges[f].weight, f) {
                                *exit[x].last_mut().unwrap() = e.id;
                                forest.replace(x, &e, &mut dsu).map_err(|er| er.to_string())?;
                                ops += 1;
                            }
                        }
                        Some(_) => {
                            exit[x].push(e.id);
                            forest.replace(x, &e, &mut dsu).map_err(|er| er.to_string())?;
                            ops += 1;
                        }
                        None => {
                            exit[x].push(e.id);
                            forest.insert(x, &e, &mut dsu).map_err(|er| er.to_string())?;
                            ops += 1;
                        }
                    }
                }
            }
        } else if choice < 7 && path.len() >= 2 {
            let start = rng.index(path.len() - 1);
            let members: Vec<usize> = path.drain(start..).collect();
            for &m in &members {
                dsu.add_offset(m, rng.range_inclusive(-10, 10)).map_err(|e| e.to_string())?;
            }
            for &m in &members {
                exit[m].clear();
                if forest.is_active(m) {
                    forest.delete(m, &mut dsu).map_err(|e| e.to_string())?;
                    ops += 1;
                }
            }
            let mut rep = members[0];
            for &m in &members[1..] {
                let joined = dsu.join(rep, m);
                forest.merge(joined, if joined == rep { m } else { rep });
                ops += 1;
                rep = joined;
            }
            // Keep only the cheapest edge of each origin into the new vertex.
            for x in 0..n {
                if !dsu.is_representative(x) || x == rep {
                    continue;
                }
                let mut into: Vec<usize> = Vec::new();
                while let Some(&f) = exit[x].last() {
                    if dsu.find(edges[f].target) != rep {
                        break;
                    }
                    into.push(f);
                    exit[x].pop();
                }
                let Some(&old_front) = into.first() else { continue };
                let best =
                    *into.iter().min_by_key(|&&f| (dsu.current_cost(edges[f].weight, edges[f].target), f)).unwrap();
                exit[x].push(best);
                if best != old_front {
                    forest.replace(x, &edges[best], &mut dsu).map_err(|e| e.to_string())?;
                    ops += 1;
                }
            }
            position[rep] = next_position;
            next_position += 1;
            path.push(rep);
        } else if let Some(&head) = path.last() {
            let got = forest.query_min(head, &mut dsu);
            ops += 1;
            let mut expected: Option<(Weight, usize, usize)> = None;
            for x in 0..n {
                if let Some(&f) = exit[x].last() {
                    if dsu.is_representative(x) && dsu.find(edges[f].target) == head {
                        let key = (dsu.current_cost(edges[f].weight, edges[f].target), f, x);
                        if expected.is_none_or(|e| key < e) {
                            expected = Some(key);
                        }
                    }
                }
            }
            let got = got.map(|m| (m.cost, m.edge, m.owner));
            if got != expected {
                return Err(format!("query on {head}: forest {got:?}, scan {expected:?}"));
            }
        }

        for x in 0..n {
            if forest.active_edge(x) != exit[x].last().copied() {
                return Err(format!("active edge of {x} out of sync"));
            }
        }
        let on_path: Vec<bool> = (0..n).map(|v| path.contains(&v)).collect();
        forest.check_invariants(&mut dsu, |v| on_path[v].then_some(position[v]))?;
    }
    Ok(ops)
}

#[derive(Debug, Clone, Copy)]
pub enum QueueOp {
    Insert { queue: usize, cost: Weight },
    Extract { queue: usize },
    Shift { queue: usize, delta: Weight },
    Merge { into: usize, from: usize },
}

pub fn random_queue_ops(rng: &mut SplitMix64, queues: usize, len: usize) -> Vec<QueueOp> {
    (0..len)
        .map(|_| {
            let queue = rng.index(queues);
            match rng.index(10) {
                0..=4 => QueueOp::Insert { queue, cost: rng.range_inclusive(-20, 20) },
                5..=6 => QueueOp::Extract { queue },
                7 => QueueOp::Shift { queue, delta: rng.range_inclusive(-5, 5) },
                _ => QueueOp::Merge { into: queue, from: rng.index(queues) },
            }
        })
        .collect()
}

/// Replays `ops` on `Q`, returning every extract result followed by the
/// final drain of each queue. Inserted edges get fresh ids and fresh origin
/// vertices numbered after the owners.
pub fn replay<Q: EdgeQueue>(queues: usize, ops: &[QueueOp]) -> Vec<Option<(usize, Weight)>> {
    let n = queues + ops.len();
    let mut qs: Vec<Q> = (0..queues).map(|v| Q::for_vertex(v, n)).collect();
    let mut out = Vec::new();
    let mut next_id = 0;
    for op in ops {
        match *op {
            QueueOp::Insert { queue, cost } => {
                qs[queue].insert(next_id, queues + next_id, cost);
                next_id += 1;
            }
            QueueOp::Extract { queue } => out.push(qs[queue].extract_min()),
            QueueOp::Shift { queue, delta } => qs[queue].add_constant(delta),
            QueueOp::Merge { into, from } if into != from => {
                // The absorbed slot starts over as a fresh, empty queue.
                let other = std::mem::replace(&mut qs[from], Q::for_vertex(from, n));
                qs[into].merge(other);
            }
            QueueOp::Merge { .. } => {}
        }
    }
    for q in &mut qs {
        while let Some(x) = q.extract_min() {
            out.push(Some(x));
        }
        out.push(None);
    }
    out
}

/// The same replay on plain vectors.
pub fn replay_sorted(queues: usize, ops: &[QueueOp]) -> Vec<Option<(usize, Weight)>> {
    let mut qs: Vec<Vec<(Weight, usize)>> = vec![Vec::new(); queues];
    let mut out = Vec::new();
    let mut next_id = 0;
    let pop = |q: &mut Vec<(Weight, usize)>| {
        q.sort();
        (!q.is_empty()).then(|| q.remove(0)).map(|(c, e)| (e, c))
    };
    for op in ops {
        match *op {
            QueueOp::Insert { queue, cost } => {
                qs[queue].push((cost, next_id));
                next_id += 1;
            }
            QueueOp::Extract { queue } => out.push(pop(&mut qs[queue])),
            QueueOp::Shift { queue, delta } => qs[queue].iter_mut().for_each(|x| x.0 += delta),
            QueueOp::Merge { into, from } if into != from => {
                let other = std::mem::take(&mut qs[from]);
                qs[into].extend(other);
            }
            QueueOp::Merge { .. } => {}
        }
    }
    for q in &mut qs {
        while let Some(x) = pop(q) {
            out.push(Some(x));
        }
        out.push(None);
    }
    out
}

/// Compares all three strategies with the sorted-vector replay.
pub fn queues_agree(queues: usize, ops: &[QueueOp]) -> Result<(), String> {
    let expected = replay_sorted(queues, ops);
    for (name, got) in [
        ("matrix", replay::<MatrixQueue>(queues, ops)),
        ("lazy heap", replay::<LazyHeapQueue>(queues, ops)),
        ("sil", replay::<SilQueue>(queues, ops)),
    ] {
        if got != expected {
            return Err(format!("{name} strategy diverges on {ops:?}"));
        }
    }
    Ok(())
}
