use super::EdgeQueue;
use crate::graph::{EdgeId, Weight};

type Link = Option<Box<Node>>;

#[derive(Debug)]
struct Node {
    cost: Weight,
    edge: EdgeId,
    /// Pending shift for this node and its whole subtree.
    lazy: Weight,
    left: Link,
    right: Link,
}

impl Node {
    fn push_down(&mut self) {
        if self.lazy != 0 {
            self.cost += self.lazy;
            if let Some(l) = self.left.as_mut() {
                l.lazy += self.lazy;
            }
            if let Some(r) = self.right.as_mut() {
                r.lazy += self.lazy;
            }
            self.lazy = 0;
        }
    }

    fn key(&self) -> (Weight, EdgeId) {
        (self.cost, self.edge)
    }
}

/// Skew heap with lazy cost shifts. Melding walks the right spines top-down
/// and swaps children along the way; pending shifts are pushed to the
/// children of every node the meld touches.
#[derive(Debug, Default)]
pub struct LazyHeapQueue {
    root: Link,
    len: usize,
}

fn meld(mut a: Link, mut b: Link) -> Link {
    let mut out: Link = None;
    let mut slot = &mut out;
    loop {
        match (a.take(), b.take()) {
            (None, rest) | (rest, None) => {
                *slot = rest;
                return out;
            }
            (Some(mut x), Some(mut y)) => {
                x.push_down();
                y.push_down();
                if y.key() < x.key() {
                    std::mem::swap(&mut x, &mut y);
                }
                a = x.right.take();
                b = Some(y);
                x.right = x.left.take();
                let node = slot.insert(x);
                slot = &mut node.left;
            }
        }
    }
}

impl EdgeQueue for LazyHeapQueue {
    fn for_vertex(_owner: usize, _n: usize) -> Self {
        Self::default()
    }

    fn insert(&mut self, edge: EdgeId, _origin: usize, cost: Weight) {
        let node = Box::new(Node { cost, edge, lazy: 0, left: None, right: None });
        self.root = meld(self.root.take(), Some(node));
        self.len += 1;
    }

    fn extract_min(&mut self) -> Option<(EdgeId, Weight)> {
        let mut top = self.root.take()?;
        top.push_down();
        self.root = meld(top.left.take(), top.right.take());
        self.len -= 1;
        Some((top.edge, top.cost))
    }

    fn add_constant(&mut self, delta: Weight) {
        if let Some(r) = self.root.as_mut() {
            r.lazy += delta;
        }
    }

    fn merge(&mut self, mut other: Self) {
        self.root = meld(self.root.take(), other.root.take());
        self.len += other.len;
    }

    fn len(&self) -> usize {
        self.len
    }
}

impl Drop for LazyHeapQueue {
    // Iterative teardown; skew heaps can grow long left spines.
    fn drop(&mut self) {
        let mut stack: Vec<Box<Node>> = self.root.take().into_iter().collect();
        while let Some(mut node) = stack.pop() {
            stack.extend(node.left.take());
            stack.extend(node.right.take());
        }
    }
}
