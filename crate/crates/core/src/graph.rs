//! Input graphs: the edge-list text format, weight sampling, and super-root
//! preparation for instances without a designated root.

use std::fmt;

use thiserror::Error;

use crate::dsu::PlainDsu;
use crate::rng::SplitMix64;

/// Edge cost. Input magnitudes are bounded (see [`weight_bound`]) so that any
/// sum of at most `n` offsets stays inside 64 bits.
pub type Weight = i64;

/// Dense index into [`Graph::edges`].
pub type EdgeId = usize;

/// Vertex counts above this need the tighter weight bound.
pub const LARGE_GRAPH_VERTICES: usize = 1 << 20;

/// Largest admissible `|w|` for a graph with `n` vertices.
pub fn weight_bound(n: usize) -> Weight {
    if n <= LARGE_GRAPH_VERTICES {
        1 << 32
    } else {
        1 << 24
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub origin: usize,
    pub target: usize,
    pub weight: Weight,
    pub id: EdgeId,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("{msg}, line {line}")]
    Parse { line: usize, msg: String },
    #[error("root {root} out of range for {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
    #[error("edge {id}: vertex index out of range")]
    VertexOutOfRange { id: EdgeId },
    #[error("edge {id}: weight {weight} exceeds the admissible magnitude {bound}")]
    WeightOutOfBound { id: EdgeId, weight: Weight, bound: Weight },
    #[error("graph has no vertices")]
    Empty,
}

/// Immutable input graph. Self-loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    root: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from `(origin, target, weight)` triples; ids follow the
    /// slice order.
    pub fn new(n: usize, root: usize, triples: &[(usize, usize, Weight)]) -> Result<Self, GraphError> {
        let edges = triples
            .iter()
            .enumerate()
            .map(|(id, &(origin, target, weight))| Edge { origin, target, weight, id })
            .collect();
        Self::from_edges(n, root, edges)
    }

    fn from_edges(n: usize, root: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if root >= n {
            return Err(GraphError::RootOutOfRange { root, n });
        }
        let bound = weight_bound(n);
        for e in &edges {
            if e.origin >= n || e.target >= n {
                return Err(GraphError::VertexOutOfRange { id: e.id });
            }
            if e.weight.abs() > bound {
                return Err(GraphError::WeightOutOfBound { id: e.id, weight: e.weight, bound });
            }
        }
        Ok(Self { n, root, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// Same graph with a different root.
    pub fn with_root(&self, root: usize) -> Result<Self, GraphError> {
        if root >= self.n {
            return Err(GraphError::RootOutOfRange { root, n: self.n });
        }
        Ok(Self { n: self.n, root, edges: self.edges.clone() })
    }

    /// Same topology, weights replaced by `f(edge)`.
    pub fn map_weights(&self, mut f: impl FnMut(&Edge) -> Weight) -> Result<Self, GraphError> {
        let edges = self.edges.iter().map(|e| Edge { weight: f(e), ..*e }).collect();
        Self::from_edges(self.n, self.root, edges)
    }

    pub fn total_weight(&self, ids: &[EdgeId]) -> Weight {
        ids.iter().map(|&id| self.edges[id].weight).sum()
    }
}

/// Writes the `n m r` header followed by one `u v w` line per edge.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n, self.edges.len(), self.root)?;
        for e in &self.edges {
            writeln!(f, "{} {} {}", e.origin, e.target, e.weight)?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse { line, msg: msg.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("malformed {what} {tok:?}")))
}

/// Parses the `n m r` edge-list format. Blank lines are ignored; line numbers
/// in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut toks = header.split_whitespace();
    let n: usize = field(toks.next(), hline, "vertex count")?;
    let m: usize = field(toks.next(), hline, "edge count")?;
    let root: usize = field(toks.next(), hline, "root")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "trailing data in header"));
    }
    if n == 0 {
        return Err(parse_err(hline, "vertex count must be positive"));
    }
    if root >= n {
        return Err(parse_err(hline, "root index out of range"));
    }

    let bound = weight_bound(n);
    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        if edges.len() == m {
            return Err(parse_err(line, "more edges than announced"));
        }
        let mut toks = content.split_whitespace();
        let origin: usize = field(toks.next(), line, "origin")?;
        let target: usize = field(toks.next(), line, "target")?;
        let weight: Weight = field(toks.next(), line, "weight")?;
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing data"));
        }
        if origin >= n || target >= n {
            return Err(parse_err(line, "index out of range"));
        }
        if weight.abs() > bound {
            return Err(parse_err(line, "weight out of bound"));
        }
        let id = edges.len();
        edges.push(Edge { origin, target, weight, id });
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("expected {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, root, edges)
}

/// Parses a headerless konect-style list of `u v` pairs. Lines starting with
/// `%` or `#` are comments and extra columns are ignored. The vertex count is
/// `max index + 1`, every weight is 0 and the root is 0; callers follow up with
/// [`sample_weights`] and [`attach_super_root`].
pub fn parse_konect(text: &str) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    let mut n = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('%') || content.starts_with('#') {
            continue;
        }
        let mut toks = content.split_whitespace();
        let u: usize = field(toks.next(), line, "origin")?;
        let v: usize = field(toks.next(), line, "target")?;
        n = n.max(u + 1).max(v + 1);
        pairs.push((u, v, 0));
    }
    if n == 0 {
        return Err(GraphError::Empty);
    }
    Graph::new(n, 0, &pairs)
}

/// Replaces every weight by a uniform draw from `1..=max_w`, driven by
/// [`SplitMix64`] seeded with `seed`; edges are visited in id order.
pub fn sample_weights(graph: &Graph, seed: u64, max_w: Weight) -> Result<Graph, GraphError> {
    assert!(max_w >= 1, "max_w must be at least 1");
    let mut rng = SplitMix64::new(seed);
    graph.map_weights(|_| rng.range_inclusive(1, max_w))
}

/// Result of [`attach_super_root`].
#[derive(Debug, Clone)]
pub struct SuperRooted {
    pub graph: Graph,
    /// Original index of each retained vertex; the super-root has none and is
    /// the last vertex.
    pub vertex_map: Vec<usize>,
    /// Original id of each retained edge. Ids at or beyond `edge_map.len()`
    /// are super-root edges.
    pub edge_map: Vec<EdgeId>,
    /// Weight of every super-root edge.
    pub sentinel: Weight,
}

impl SuperRooted {
    pub fn is_sentinel(&self, id: EdgeId) -> bool {
        id >= self.edge_map.len()
    }

    /// Maps a solution of the prepared graph back to original edge ids,
    /// dropping super-root edges.
    pub fn original_edges(&self, ids: &[EdgeId]) -> Vec<EdgeId> {
        ids.iter().filter(|&&id| !self.is_sentinel(id)).map(|&id| self.edge_map[id]).collect()
    }
}

/// Restricts the graph to its largest weakly connected component (ties go to
/// the component holding the smallest vertex), renumbers densely in original
/// order, and appends a root with an edge of weight
/// `(max |w| + 1) * n_retained` to every retained vertex.
pub fn attach_super_root(graph: &Graph) -> Result<SuperRooted, GraphError> {
    let n = graph.n();
    let mut dsu = PlainDsu::new(n);
    for e in graph.edges() {
        dsu.join(e.origin, e.target);
    }
    let mut best = 0;
    for v in 0..n {
        let r = dsu.find(v);
        let b = dsu.find(best);
        if dsu.size(r) > dsu.size(b) {
            best = v;
        }
    }
    let keep = dsu.find(best);

    let mut new_index = vec![usize::MAX; n];
    let mut vertex_map = Vec::new();
    for v in 0..n {
        if dsu.find(v) == keep {
            new_index[v] = vertex_map.len();
            vertex_map.push(v);
        }
    }
    let kept = vertex_map.len();
    if kept == 0 {
        return Err(GraphError::Empty);
    }

    let mut triples = Vec::new();
    let mut edge_map = Vec::new();
    let mut max_abs: Weight = 0;
    for e in graph.edges() {
        if new_index[e.origin] != usize::MAX {
            triples.push((new_index[e.origin], new_index[e.target], e.weight));
            edge_map.push(e.id);
            max_abs = max_abs.max(e.weight.abs());
        }
    }
    let sentinel = (max_abs + 1) * kept as Weight;
    let root = kept;
    triples.extend((0..kept).map(|v| (root, v, sentinel)));

    // The sentinel may exceed the input weight bound; build the edge array
    // directly and validate indices only.
    let edges: Vec<Edge> =
        triples.iter().enumerate().map(|(id, &(origin, target, weight))| Edge { origin, target, weight, id }).collect();
    let graph = Graph { n: kept + 1, root, edges };
    Ok(SuperRooted { graph, vertex_map, edge_map, sentinel })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TRI: &str = "3 4 0\n0 1 5\n0 2 7\n1 2 1\n2 1 1\n";

    #[test]
    fn parses_single_vertex() {
        let g = parse_edge_list("1 0 0").unwrap();
        assert_eq!((g.n(), g.root(), g.m()), (1, 0, 0));
    }

    #[test]
    fn parses_triangle_in_file_order() {
        let g = parse_edge_list(TRI).unwrap();
        let got: Vec<_> = g.edges().iter().map(|e| (e.origin, e.target, e.weight, e.id)).collect();
        assert_eq!(got, vec![(0, 1, 5, 0), (0, 2, 7, 1), (1, 2, 1, 2), (2, 1, 1, 3)]);
    }

    #[test]
    fn reports_out_of_range_with_line() {
        let err = parse_edge_list("2 1 0\n0 3 1").unwrap_err();
        assert_eq!(err.to_string(), "index out of range, line 2");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_edge_list("2 1 0\n0 x 1"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("2 2 0\n0 1 1"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("2 1 0\n0 1 1\n1 0 1"), Err(GraphError::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("2 1 0\n0 1 99999999999"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("2 0 2"), Err(GraphError::Parse { line: 1, .. })));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn display_round_trips() {
        let g = parse_edge_list(TRI).unwrap();
        assert_eq!(parse_edge_list(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn konect_reads_pairs() {
        let g = parse_konect("% comment\n1 2\n2 3 17\n\n3 1\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert!(g.edges().iter().all(|e| e.weight == 0));
        assert!(parse_konect("% nothing\n").is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let g = parse_edge_list(TRI).unwrap();
        let a = sample_weights(&g, 42, 1000).unwrap();
        let b = sample_weights(&g, 42, 1000).unwrap();
        assert_eq!(a, b);
        assert!(a.edges().iter().all(|e| (1..=1000).contains(&e.weight)));
        let ones = sample_weights(&g, 3, 1).unwrap();
        assert!(ones.edges().iter().all(|e| e.weight == 1));
    }

    #[test]
    fn sampled_weights_are_uniform() {
        let triples = vec![(0, 0, 0); 100_000];
        let g = Graph::new(1, 0, &triples).unwrap();
        let s = sample_weights(&g, 2024, 10).unwrap();
        let mut counts = [0u32; 10];
        for e in s.edges() {
            counts[(e.weight - 1) as usize] += 1;
        }
        // Binomial(1e5, 0.1): mean 1e4, sigma = sqrt(9000).
        let sigma = (100_000.0f64 * 0.1 * 0.9).sqrt();
        for c in counts {
            assert!((c as f64 - 10_000.0).abs() <= 5.0 * sigma, "{counts:?}");
        }
        // Chi-square with 9 degrees of freedom; 27.88 is the 0.999 quantile.
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - 1e4).powi(2) / 1e4).sum();
        assert!(chi2 < 27.88, "chi2 = {chi2}");
    }

    #[test]
    fn super_root_on_single_vertex() {
        let g = Graph::new(1, 0, &[]).unwrap();
        let p = attach_super_root(&g).unwrap();
        assert_eq!(p.graph.n(), 2);
        assert_eq!(p.graph.root(), 1);
        let e = p.graph.edges();
        assert_eq!(e.len(), 1);
        assert_eq!((e[0].origin, e[0].target, e[0].weight), (1, 0, 1));
    }

    #[test]
    fn super_root_keeps_largest_component() {
        // Components {0,1,2} and {3}.
        let g = Graph::new(4, 0, &[(0, 1, 1), (2, 1, 1)]).unwrap();
        let p = attach_super_root(&g).unwrap();
        assert_eq!(p.graph.n(), 4);
        assert_eq!(p.vertex_map, vec![0, 1, 2]);
        let sentinels: Vec<_> = p.graph.edges().iter().filter(|e| p.is_sentinel(e.id)).collect();
        assert_eq!(sentinels.len(), 3);
        assert!(sentinels.iter().all(|e| e.origin == 3 && e.weight == (1 + 1) * 3));
    }

    #[test]
    fn super_root_on_triangle_plus_isolated() {
        let mut text = String::from("4 4 0\n");
        text.push_str(TRI.split_once('\n').unwrap().1);
        let g = parse_edge_list(&text).unwrap();
        let p = attach_super_root(&g).unwrap();
        assert_eq!(p.vertex_map, vec![0, 1, 2]);
        assert_eq!(p.edge_map, vec![0, 1, 2, 3]);
        let targets: Vec<_> = p.graph.edges()[4..].iter().map(|e| (e.origin, e.target)).collect();
        assert_eq!(targets, vec![(3, 0), (3, 1), (3, 2)]);
        assert_eq!(p.sentinel, 8 * 3);
        assert_eq!(p.original_edges(&[0, 4, 2]), vec![0, 2]);
    }
}
