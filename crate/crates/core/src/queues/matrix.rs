use super::EdgeQueue;
use crate::graph::{EdgeId, Weight};

const EMPTY: u32 = u32::MAX;

/// One adjacency-matrix row per super-vertex, indexed by original origin
/// vertex. Each cell keeps the cheapest edge from that origin. The row is
/// allocated on first insert.
///
/// The queue also remembers which original vertices it owns, so a merge can
/// drop the cells that became self-loops.
#[derive(Debug, Default, Clone)]
pub struct MatrixQueue {
    n: usize,
    costs: Vec<Weight>,
    edges: Vec<u32>,
    offset: Weight,
    members: Vec<usize>,
    len: usize,
}

impl MatrixQueue {
    fn ensure_row(&mut self) {
        if self.edges.is_empty() && self.n > 0 {
            self.costs = vec![0; self.n];
            self.edges = vec![EMPTY; self.n];
        }
    }

    fn clear_cells(&mut self, cols: &[usize]) {
        if self.edges.is_empty() {
            return;
        }
        for &c in cols {
            if self.edges[c] != EMPTY {
                self.edges[c] = EMPTY;
                self.len -= 1;
            }
        }
    }
}

impl EdgeQueue for MatrixQueue {
    fn for_vertex(owner: usize, n: usize) -> Self {
        Self { n, members: vec![owner], ..Self::default() }
    }

    fn insert(&mut self, edge: EdgeId, origin: usize, cost: Weight) {
        assert!(edge < EMPTY as usize, "edge id exceeds matrix cell range");
        self.ensure_row();
        let key = cost - self.offset;
        let cur = self.edges[origin];
        if cur == EMPTY {
            self.len += 1;
        } else if (self.costs[origin], cur as EdgeId) <= (key, edge) {
            return;
        }
        self.costs[origin] = key;
        self.edges[origin] = edge as u32;
    }

    fn extract_min(&mut self) -> Option<(EdgeId, Weight)> {
        if self.len == 0 {
            return None;
        }
        let mut best: Option<(Weight, u32, usize)> = None;
        for (col, (&e, &k)) in self.edges.iter().zip(&self.costs).enumerate() {
            if e != EMPTY && best.is_none_or(|(bk, be, _)| (k, e) < (bk, be)) {
                best = Some((k, e, col));
            }
        }
        let (key, edge, col) = best?;
        self.edges[col] = EMPTY;
        self.len -= 1;
        Some((edge as EdgeId, key + self.offset))
    }

    fn add_constant(&mut self, delta: Weight) {
        self.offset += delta;
    }

    fn merge(&mut self, mut other: Self) {
        let theirs = std::mem::take(&mut other.members);
        self.clear_cells(&theirs);
        other.clear_cells(&self.members);
        if self.members.len() < theirs.len() {
            let mine = std::mem::replace(&mut self.members, theirs);
            self.members.extend(mine);
        } else {
            self.members.extend(theirs);
        }
        self.n = self.n.max(other.n);

        if other.edges.is_empty() {
            return;
        }
        if self.edges.is_empty() {
            self.costs = other.costs;
            self.edges = other.edges;
            self.offset = other.offset;
            self.len = other.len;
            return;
        }
        let rebase = other.offset - self.offset;
        for col in 0..self.edges.len() {
            let e = other.edges[col];
            if e == EMPTY {
                continue;
            }
            let k = other.costs[col] + rebase;
            let cur = self.edges[col];
            if cur == EMPTY {
                self.len += 1;
            } else if (self.costs[col], cur) <= (k, e) {
                continue;
            }
            self.costs[col] = k;
            self.edges[col] = e;
        }
    }

    fn len(&self) -> usize {
        self.len
    }
}
