//! Incoming-edge sets for Tarjan's formulation.
//!
//! Every strategy supports the same four operations: insert, extract the
//! cheapest element, shift all costs by a constant, and merge two sets. Ties
//! on cost are broken by the smaller edge id so all strategies drain in the
//! same order.

mod lazy_heap;
mod matrix;
mod sil;

pub use lazy_heap::LazyHeapQueue;
pub use matrix::MatrixQueue;
pub use sil::SilQueue;

use crate::graph::{EdgeId, Weight};

/// A multiset of `(edge id, current cost)` pairs owned by one super-vertex.
pub trait EdgeQueue: Default {
    /// Queue for the original vertex `owner` in a graph of `n` vertices.
    fn for_vertex(owner: usize, n: usize) -> Self;

    /// `origin` is the original origin vertex of the edge.
    fn insert(&mut self, edge: EdgeId, origin: usize, cost: Weight);

    fn extract_min(&mut self) -> Option<(EdgeId, Weight)>;

    fn add_constant(&mut self, delta: Weight);

    /// Absorbs `other`, which is consumed.
    fn merge(&mut self, other: Self);

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Elements moved individually by merges into this queue so far,
    /// including those counted by queues it absorbed.
    fn moves(&self) -> u64 {
        0
    }
}
