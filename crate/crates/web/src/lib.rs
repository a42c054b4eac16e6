//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use std::collections::VecDeque;

use arborescence::{
    gen_antilemon, gen_er_rooted, parse_edge_list, solve, solve_arborescence, Algorithm, Graph, SolveStats,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest instance the page will draw.
pub const MAX_DRAWN_VERTICES: usize = 400;
/// Largest antilemon the page will run per click.
pub const MAX_ANTILEMON_K: usize = 200_000;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn stats_json(s: &SolveStats) -> Value {
    json!({
        "contractions": s.contractions,
        "cycle_length_sum": s.cycle_length_sum,
        "merged_list_scan": s.merged_list_scan,
        "queue_moves": s.queue_moves,
        "forest_queries": s.af_queries,
        "forest_deletes": s.af_deletes,
        "forest_merges": s.af_merges,
    })
}

/// Tree depth of every vertex (root 0), or `null` for vertices outside it.
fn depths(g: &Graph, tree: &[usize]) -> Vec<Option<usize>> {
    let mut children = vec![Vec::new(); g.n()];
    for &e in tree {
        children[g.edge(e).origin].push(g.edge(e).target);
    }
    let mut depth = vec![None; g.n()];
    depth[g.root()] = Some(0);
    let mut queue = VecDeque::from([g.root()]);
    while let Some(v) = queue.pop_front() {
        for &c in &children[v] {
            depth[c] = depth[v].map(|d| d + 1);
            queue.push_back(c);
        }
    }
    depth
}

fn solve_graph(g: &Graph, algo: &str) -> String {
    let algo: Algorithm = match algo.parse() {
        Ok(a) => a,
        Err(e) => return error(e),
    };
    if g.n() > MAX_DRAWN_VERTICES {
        return error(format!("at most {MAX_DRAWN_VERTICES} vertices can be drawn"));
    }
    let tree = match solve_arborescence(g, algo) {
        Ok(t) => t,
        Err(e) => return error(e),
    };
    let edges: Vec<Value> = g.edges().iter().map(|e| json!([e.origin, e.target, e.weight])).collect();
    json!({
        "n": g.n(),
        "root": g.root(),
        "edges": edges,
        "tree": tree.edges,
        "weight": tree.total_weight,
        "depth": depths(g, &tree.edges),
        "stats": stats_json(&tree.stats),
    })
    .to_string()
}

/// Generates a random rooted instance and solves it with `algo`.
#[wasm_bindgen]
pub fn solve_random(n: usize, m: usize, max_w: i32, seed: u32, algo: &str) -> String {
    match gen_er_rooted(n, m, max_w as i64, seed as u64) {
        Ok(g) => solve_graph(&g, algo),
        Err(e) => error(e),
    }
}

/// Solves an instance pasted in the `n m r` edge-list format.
#[wasm_bindgen]
pub fn solve_text(text: &str, algo: &str) -> String {
    match parse_edge_list(text) {
        Ok(g) => solve_graph(&g, algo),
        Err(e) => error(e),
    }
}

/// Solves the antilemon instance of chain length `k` with `algo`, returning
/// weight and counters; the page times the call itself.
#[wasm_bindgen]
pub fn antilemon_stats(k: usize, algo: &str) -> String {
    let algo: Algorithm = match algo.parse() {
        Ok(a) => a,
        Err(e) => return error(e),
    };
    if k > MAX_ANTILEMON_K {
        return error(format!("k is capped at {MAX_ANTILEMON_K} in the browser"));
    }
    let g = match gen_antilemon(k) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    match solve(&g, algo) {
        Ok(r) => json!({ "n": g.n(), "m": g.m(), "weight": r.total_weight, "stats": stats_json(&r.stats) }).to_string(),
        Err(e) => error(e),
    }
}
