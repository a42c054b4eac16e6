use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::EdgeQueue;
use crate::graph::{EdgeId, Weight};

/// Binary heap merged smaller-into-larger. Costs are stored relative to a
/// per-queue offset, so `add_constant` is O(1) and a moved element is rebased
/// by the difference of the two offsets.
#[derive(Debug, Default, Clone)]
pub struct SilQueue {
    heap: BinaryHeap<Reverse<(Weight, EdgeId)>>,
    offset: Weight,
    moves: u64,
}

impl EdgeQueue for SilQueue {
    fn for_vertex(_owner: usize, _n: usize) -> Self {
        Self::default()
    }

    fn insert(&mut self, edge: EdgeId, _origin: usize, cost: Weight) {
        self.heap.push(Reverse((cost - self.offset, edge)));
    }

    fn extract_min(&mut self) -> Option<(EdgeId, Weight)> {
        self.heap.pop().map(|Reverse((key, edge))| (edge, key + self.offset))
    }

    fn add_constant(&mut self, delta: Weight) {
        self.offset += delta;
    }

    fn merge(&mut self, mut other: Self) {
        if other.heap.len() > self.heap.len() {
            std::mem::swap(self, &mut other);
        }
        let rebase = other.offset - self.offset;
        self.moves += other.moves + other.heap.len() as u64;
        self.heap.extend(other.heap.into_iter().map(|Reverse((k, e))| Reverse((k + rebase, e))));
    }

    fn len(&self) -> usize {
        self.heap.len()
    }

    fn moves(&self) -> u64 {
        self.moves
    }
}
