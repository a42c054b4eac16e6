//! Heaps of active edges for the growth-path algorithm.
//!
//! Every origin super-vertex owns at most one node, keyed by its active edge.
//! Each super-vertex has a heap: a circular root list of heap-ordered trees.
//! A node's *home heap* is the heap of `find(target)` of its edge.
//!
//! `replace` moves a node, together with its subtree, into another heap in
//! O(1). Descendants left behind in the wrong heap are displaced; they are
//! sent to their own home heap the moment they would enter a root list. No
//! minimum is cached, so `query_min` consolidates the head's root list by
//! linking equal ranks each time.
//!
//! Structural guarantees, given the growth-path discipline of the caller:
//! 1. every tree root sits in the root list of its home heap;
//! 2. a parent's home heap is at least as close to the path head as its
//!    child's;
//! 3. heap order holds between any two nodes that are both in their home heap.

use thiserror::Error;

use crate::dsu::ContractionDsu;
use crate::graph::{Edge, EdgeId, Weight};

const NIL: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestError {
    #[error("vertex {0} already owns an active edge")]
    AlreadyActive(usize),
    #[error("vertex {0} has no active edge")]
    NotActive(usize),
    #[error("replacement for vertex {0} targets the same super-vertex at a higher cost")]
    CostIncrease(usize),
}

#[derive(Debug, Clone, Copy)]
struct Node {
    edge: u32,
    target: u32,
    weight: Weight,
    parent: u32,
    child: u32,
    left: u32,
    right: u32,
    rank: u32,
}

impl Node {
    const VACANT: Node =
        Node { edge: NIL, target: NIL, weight: 0, parent: NIL, child: NIL, left: NIL, right: NIL, rank: 0 };
}

/// Minimum returned by [`ActiveForest::query_min`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActiveMin {
    pub owner: usize,
    pub edge: EdgeId,
    pub cost: Weight,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ForestStats {
    pub inserts: u64,
    pub replaces: u64,
    pub deletes: u64,
    pub merges: u64,
    pub queries: u64,
}

#[derive(Debug, Clone)]
pub struct ActiveForest {
    nodes: Vec<Node>,
    heads: Vec<u32>,
    roots: Vec<u32>,
    by_rank: Vec<Option<(u32, Weight)>>,
    stats: ForestStats,
}

impl ActiveForest {
    /// Forest over `n` super-vertices, all heaps empty.
    pub fn new(n: usize) -> Self {
        assert!(n < NIL as usize);
        Self {
            nodes: vec![Node::VACANT; n],
            heads: vec![NIL; n],
            roots: Vec::new(),
            by_rank: Vec::new(),
            stats: ForestStats::default(),
        }
    }

    pub fn stats(&self) -> ForestStats {
        self.stats
    }

    pub fn is_active(&self, owner: usize) -> bool {
        self.nodes[owner].edge != NIL
    }

    pub fn active_edge(&self, owner: usize) -> Option<EdgeId> {
        let e = self.nodes[owner].edge;
        (e != NIL).then_some(e as EdgeId)
    }

    pub fn heap_is_empty(&self, heap: usize) -> bool {
        self.heads[heap] == NIL
    }

    fn set_edge(&mut self, x: u32, edge: &Edge) {
        let node = &mut self.nodes[x as usize];
        node.edge = edge.id as u32;
        node.target = edge.target as u32;
        node.weight = edge.weight;
    }

    fn cost(&self, x: u32, dsu: &mut ContractionDsu) -> Weight {
        let node = &self.nodes[x as usize];
        dsu.current_cost(node.weight, node.target as usize)
    }

    fn home(&self, x: u32, dsu: &mut ContractionDsu) -> usize {
        dsu.find(self.nodes[x as usize].target as usize)
    }

    fn push_root(&mut self, heap: usize, x: u32) {
        let h = self.heads[heap];
        if h == NIL {
            let node = &mut self.nodes[x as usize];
            node.left = x;
            node.right = x;
            self.heads[heap] = x;
        } else {
            let r = self.nodes[h as usize].right;
            self.nodes[x as usize].left = h;
            self.nodes[x as usize].right = r;
            self.nodes[h as usize].right = x;
            self.nodes[r as usize].left = x;
        }
    }

    /// Unlinks `x` from its circular sibling list; returns its successor, or
    /// `NIL` if it was alone.
    fn unlink(&mut self, x: u32) -> u32 {
        let Node { left, right, .. } = self.nodes[x as usize];
        if right == x {
            return NIL;
        }
        self.nodes[left as usize].right = right;
        self.nodes[right as usize].left = left;
        right
    }

    fn remove_root(&mut self, heap: usize, x: u32) {
        let next = self.unlink(x);
        if self.heads[heap] == x {
            self.heads[heap] = next;
        }
    }

    fn cut(&mut self, x: u32) {
        let p = self.nodes[x as usize].parent;
        let next = self.unlink(x);
        let parent = &mut self.nodes[p as usize];
        if parent.child == x {
            parent.child = next;
        }
        parent.rank -= 1;
        self.nodes[x as usize].parent = NIL;
    }

    fn detach(&mut self, x: u32, dsu: &mut ContractionDsu) {
        if self.nodes[x as usize].parent != NIL {
            self.cut(x);
        } else {
            let heap = self.home(x, dsu);
            self.remove_root(heap, x);
        }
    }

    fn add_child(&mut self, p: u32, c: u32) {
        let first = self.nodes[p as usize].child;
        if first == NIL {
            self.nodes[c as usize].left = c;
            self.nodes[c as usize].right = c;
            self.nodes[p as usize].child = c;
        } else {
            let r = self.nodes[first as usize].right;
            self.nodes[c as usize].left = first;
            self.nodes[c as usize].right = r;
            self.nodes[first as usize].right = c;
            self.nodes[r as usize].left = c;
        }
        self.nodes[c as usize].parent = p;
        self.nodes[p as usize].rank += 1;
    }

    fn children(&self, p: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let first = self.nodes[p as usize].child;
        if first != NIL {
            let mut c = first;
            loop {
                out.push(c);
                c = self.nodes[c as usize].right;
                if c == first {
                    break;
                }
            }
        }
        out
    }

    /// Registers `edge` as the active edge of `owner` as a new rank-0 root in
    /// its home heap.
    pub fn insert(&mut self, owner: usize, edge: &Edge, dsu: &mut ContractionDsu) -> Result<(), ForestError> {
        if self.is_active(owner) {
            return Err(ForestError::AlreadyActive(owner));
        }
        self.stats.inserts += 1;
        let x = owner as u32;
        self.set_edge(x, edge);
        let node = &mut self.nodes[owner];
        node.parent = NIL;
        node.child = NIL;
        node.rank = 0;
        let heap = self.home(x, dsu);
        self.push_root(heap, x);
        Ok(())
    }

    /// Re-keys the node of `owner` to `edge` and moves it, with its subtree,
    /// into the root list of the new home heap. The new edge must point
    /// closer to the path head, or into the same super-vertex at no higher
    /// cost; only the latter is checked here.
    pub fn replace(&mut self, owner: usize, edge: &Edge, dsu: &mut ContractionDsu) -> Result<(), ForestError> {
        if !self.is_active(owner) {
            return Err(ForestError::NotActive(owner));
        }
        let x = owner as u32;
        let old_home = self.home(x, dsu);
        let new_home = dsu.find(edge.target);
        if old_home == new_home && dsu.current_cost(edge.weight, edge.target) > self.cost(x, dsu) {
            return Err(ForestError::CostIncrease(owner));
        }
        self.stats.replaces += 1;
        self.detach(x, dsu);
        self.set_edge(x, edge);
        self.push_root(new_home, x);
        Ok(())
    }

    /// Removes the node of `owner`; each child moves to the root list of its
    /// own home heap.
    pub fn delete(&mut self, owner: usize, dsu: &mut ContractionDsu) -> Result<(), ForestError> {
        if !self.is_active(owner) {
            return Err(ForestError::NotActive(owner));
        }
        self.stats.deletes += 1;
        let x = owner as u32;
        self.detach(x, dsu);
        for c in self.children(x) {
            self.nodes[c as usize].parent = NIL;
            let heap = self.home(c, dsu);
            self.push_root(heap, c);
        }
        self.nodes[owner] = Node::VACANT;
        Ok(())
    }

    /// Concatenates the root list of `absorbed` into `survivor`. Call right
    /// after joining the two in the DSU, with `survivor` the new
    /// representative.
    pub fn merge(&mut self, survivor: usize, absorbed: usize) {
        self.stats.merges += 1;
        let a = std::mem::replace(&mut self.heads[absorbed], NIL);
        if a == NIL {
            return;
        }
        let s = self.heads[survivor];
        if s == NIL {
            self.heads[survivor] = a;
            return;
        }
        let s_right = self.nodes[s as usize].right;
        let a_left = self.nodes[a as usize].left;
        self.nodes[s as usize].right = a;
        self.nodes[a as usize].left = s;
        self.nodes[a_left as usize].right = s_right;
        self.nodes[s_right as usize].left = a_left;
    }

    /// Consolidates the root list of `head` until all ranks differ and
    /// returns its minimum root. Ties on cost go to the smaller edge id.
    pub fn query_min(&mut self, head: usize, dsu: &mut ContractionDsu) -> Option<ActiveMin> {
        self.stats.queries += 1;
        let first = std::mem::replace(&mut self.heads[head], NIL);
        if first == NIL {
            return None;
        }
        let mut roots = std::mem::take(&mut self.roots);
        roots.clear();
        let mut x = first;
        loop {
            roots.push(x);
            x = self.nodes[x as usize].right;
            if x == first {
                break;
            }
        }

        for &r in &roots {
            let home = self.home(r, dsu);
            if home != head {
                self.push_root(home, r);
                continue;
            }
            let mut x = r;
            let mut cx = self.cost(x, dsu);
            loop {
                let rank = self.nodes[x as usize].rank as usize;
                if rank >= self.by_rank.len() {
                    self.by_rank.resize(rank + 1, None);
                }
                match self.by_rank[rank].take() {
                    None => {
                        self.by_rank[rank] = Some((x, cx));
                        break;
                    }
                    Some((y, cy)) => {
                        let (x_edge, y_edge) = (self.nodes[x as usize].edge, self.nodes[y as usize].edge);
                        if (cy, y_edge) < (cx, x_edge) {
                            self.add_child(y, x);
                            x = y;
                            cx = cy;
                        } else {
                            self.add_child(x, y);
                        }
                    }
                }
            }
        }
        self.roots = roots;

        let mut best: Option<(Weight, u32, u32)> = None;
        for slot in 0..self.by_rank.len() {
            if let Some((x, cx)) = self.by_rank[slot].take() {
                self.push_root(head, x);
                let edge = self.nodes[x as usize].edge;
                if best.is_none_or(|(bc, be, _)| (cx, edge) < (bc, be)) {
                    best = Some((cx, edge, x));
                }
            }
        }
        best.map(|(cost, edge, owner)| ActiveMin { owner: owner as usize, edge: edge as EdgeId, cost })
    }

    /// Ranks of the trees in `heap`'s root list.
    pub fn root_ranks(&self, heap: usize) -> Vec<u32> {
        let first = self.heads[heap];
        let mut out = Vec::new();
        if first != NIL {
            let mut x = first;
            loop {
                out.push(self.nodes[x as usize].rank);
                x = self.nodes[x as usize].right;
                if x == first {
                    break;
                }
            }
        }
        out
    }

    /// Full structural check. `position` maps a super-vertex to its place on
    /// the growth path (larger is closer to the head), or `None` if it has
    /// none; pairs involving `None` skip the ordering check.
    pub fn check_invariants(
        &self,
        dsu: &mut ContractionDsu,
        position: impl Fn(usize) -> Option<u64>,
    ) -> Result<(), String> {
        let mut seen = vec![false; self.nodes.len()];
        let mut count = 0usize;
        for heap in 0..self.heads.len() {
            let first = self.heads[heap];
            if first == NIL {
                continue;
            }
            if !dsu.is_representative(heap) {
                return Err(format!("heap {heap} is non-empty but not a representative"));
            }
            let mut r = first;
            loop {
                let node = &self.nodes[r as usize];
                if node.edge == NIL {
                    return Err(format!("vacant node {r} in root list of {heap}"));
                }
                if node.parent != NIL {
                    return Err(format!("root {r} has a parent"));
                }
                if self.nodes[node.right as usize].left != r {
                    return Err(format!("broken root list at {r}"));
                }
                if self.home(r, dsu) != heap {
                    return Err(format!("root {r} is not in its home heap ({heap})"));
                }
                // (node, nearest ancestor in the home heap with its cost)
                let mut stack: Vec<(u32, Option<(Weight, u32)>)> = vec![(r, None)];
                while let Some((x, anc)) = stack.pop() {
                    if seen[x as usize] {
                        return Err(format!("node {x} reachable twice"));
                    }
                    seen[x as usize] = true;
                    count += 1;
                    let x_home = self.home(x, dsu);
                    let x_key = (self.cost(x, dsu), self.nodes[x as usize].edge);
                    let in_home = x_home == heap;
                    if in_home {
                        if let Some(a) = anc {
                            if a > x_key {
                                return Err(format!("heap order violated above node {x} in heap {heap}"));
                            }
                        }
                    }
                    let children = self.children(x);
                    if children.len() != self.nodes[x as usize].rank as usize {
                        return Err(format!("rank of {x} differs from its child count"));
                    }
                    for c in children {
                        let cn = &self.nodes[c as usize];
                        if cn.parent != x || cn.edge == NIL || self.nodes[cn.right as usize].left != c {
                            return Err(format!("broken child link {x} -> {c}"));
                        }
                        let c_home = self.home(c, dsu);
                        if let (Some(pp), Some(pc)) = (position(x_home), position(c_home)) {
                            if pp < pc {
                                return Err(format!("child {c} has a home closer to the head than parent {x}"));
                            }
                        }
                        stack.push((c, if in_home { Some(x_key) } else { anc }));
                    }
                }
                r = self.nodes[r as usize].right;
                if r == first {
                    break;
                }
            }
        }
        let active = self.nodes.iter().filter(|n| n.edge != NIL).count();
        if active != count {
            return Err(format!("{active} active nodes but {count} reachable from heaps"));
        }
        Ok(())
    }
}
