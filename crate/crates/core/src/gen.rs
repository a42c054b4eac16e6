//! Instance generators.

use thiserror::Error;

use crate::graph::{weight_bound, Graph, GraphError, Weight};
use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("antilemon needs k >= 3, got {0}")]
    ChainTooShort(usize),
    #[error("{m} edges cannot span {n} vertices")]
    TooFewEdges { n: usize, m: usize },
    #[error("a single vertex admits no edges without self-loops")]
    NoRoomForEdges,
    #[error("max weight must lie in 1..={bound}, got {max_w}")]
    BadMaxWeight { max_w: Weight, bound: Weight },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Nested two-cycles on a chain `v_0 -> v_1 -> ... -> v_{k-1}` (weight 0)
/// with back edges `v_i -> v_0` of weight `i` and a root edge `k -> v_0` of
/// weight `k`. Every contraction swallows the next chain vertex, so the
/// contracted blob keeps its long incoming list through about `k` merges.
pub fn gen_antilemon(k: usize) -> Result<Graph, GenError> {
    if k < 3 {
        return Err(GenError::ChainTooShort(k));
    }
    let mut triples = Vec::with_capacity(2 * k - 1);
    triples.extend((0..k - 1).map(|i| (i, i + 1, 0)));
    triples.extend((1..k).map(|i| (i, 0, i as Weight)));
    triples.push((k, 0, k as Weight));
    Ok(Graph::new(k + 1, k, &triples)?)
}

/// Random instance rooted at 0: a random spanning tree (each vertex hangs off
/// one of lower rank in a random ranking with the root first) plus uniformly
/// random extra edges without self-loops, weights uniform in `1..=max_w`,
/// edges in random order.
pub fn gen_er_rooted(n: usize, m: usize, max_w: Weight, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GraphError::Empty.into());
    }
    if m < n - 1 {
        return Err(GenError::TooFewEdges { n, m });
    }
    if n == 1 && m > 0 {
        return Err(GenError::NoRoomForEdges);
    }
    let bound = weight_bound(n);
    if !(1..=bound).contains(&max_w) {
        return Err(GenError::BadMaxWeight { max_w, bound });
    }

    let mut rng = SplitMix64::new(seed);
    let mut order: Vec<usize> = (1..n).collect();
    rng.shuffle(&mut order);
    order.insert(0, 0);

    let mut triples = Vec::with_capacity(m);
    for rank in 1..n {
        let parent = order[rng.index(rank)];
        triples.push((parent, order[rank], rng.range_inclusive(1, max_w)));
    }
    while triples.len() < m {
        let u = rng.index(n);
        let mut v = rng.index(n - 1);
        if v >= u {
            v += 1;
        }
        triples.push((u, v, rng.range_inclusive(1, max_w)));
    }
    rng.shuffle(&mut triples);
    Ok(Graph::new(n, 0, &triples)?)
}
