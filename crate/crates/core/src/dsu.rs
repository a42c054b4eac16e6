//! Disjoint-set forests.
//!
//! [`PlainDsu`] tracks weakly connected components of chosen edges (cycle
//! detection). [`ContractionDsu`] tracks contracted super-vertices and the
//! additive cost adjustments applied to edges entering them.

use thiserror::Error;

use crate::graph::Weight;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DsuError {
    #[error("vertex {0} is not a set representative")]
    NotRepresentative(usize),
}

/// Union-by-size forest with path halving.
#[derive(Debug, Clone)]
pub struct PlainDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl PlainDsu {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            let grand = self.parent[self.parent[v]];
            self.parent[v] = grand;
            v = grand;
        }
        v
    }

    /// Size of the set represented by `rep`.
    pub fn size(&self, rep: usize) -> usize {
        self.size[rep]
    }

    pub fn join(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        a
    }
}

/// Union-by-size forest whose nodes carry an offset relative to their parent.
///
/// The current cost of an edge with stored weight `w` entering `v` is `w` plus
/// the sum of offsets on the path from `v` to its root. Path compression folds
/// the skipped offsets into the compressed node, so the sum never changes.
#[derive(Debug, Clone)]
pub struct ContractionDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    offset: Vec<Weight>,
    path: Vec<usize>,
    visits: u64,
}

impl ContractionDsu {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n], offset: vec![0; n], path: Vec::new(), visits: 0 }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Parent-link hops taken by all finds so far.
    pub fn visits(&self) -> u64 {
        self.visits
    }

    pub fn size(&self, rep: usize) -> usize {
        self.size[rep]
    }

    pub fn is_representative(&self, v: usize) -> bool {
        self.parent[v] == v
    }

    pub fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            self.path.push(root);
            root = self.parent[root];
        }
        self.visits += self.path.len() as u64;
        // Children of the root are already compressed; fold the rest top-down
        // so each node's offset becomes relative to the root.
        if self.path.len() > 1 {
            for i in (0..self.path.len() - 1).rev() {
                let node = self.path[i];
                let above = self.path[i + 1];
                self.offset[node] += self.offset[above];
                self.parent[node] = root;
            }
        }
        self.path.clear();
        root
    }

    /// Total offset applied to edges entering `v`.
    pub fn offset_of(&mut self, v: usize) -> Weight {
        let root = self.find(v);
        if root == v {
            self.offset[v]
        } else {
            self.offset[v] + self.offset[root]
        }
    }

    /// Current cost of an edge of stored weight `weight` entering `target`.
    pub fn current_cost(&mut self, weight: Weight, target: usize) -> Weight {
        weight + self.offset_of(target)
    }

    pub fn add_offset(&mut self, rep: usize, delta: Weight) -> Result<(), DsuError> {
        if !self.is_representative(rep) {
            return Err(DsuError::NotRepresentative(rep));
        }
        self.offset[rep] += delta;
        Ok(())
    }

    pub fn join(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.offset[b] -= self.offset[a];
        a
    }
}
