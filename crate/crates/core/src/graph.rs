//! Simple undirected graphs on dense vertex ids `0..n-1`, with bitset
//! adjacency tuned for set intersections at desk scale (n up to a few
//! hundred; everything oracle-checked stays at n <= 64).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed p-line: {0}")]
    BadProblemLine(String),
    #[error("line {line}: edge endpoint out of range: {text}")]
    EndpointOutOfRange { line: usize, text: String },
    #[error("line {line}: self-loop edge: {text}")]
    SelfLoop { line: usize, text: String },
    #[error("line {line}: malformed edge line: {text}")]
    BadEdgeLine { line: usize, text: String },
    #[error("missing p-line before first edge")]
    MissingProblemLine,
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("invalid generator spec: {0}")]
    BadGeneratorSpec(String),
}

const WORD: usize = 64;

/// A set of vertex ids of a graph on `n` vertices, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: vec![0; n.div_ceil(WORD)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::empty(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.bits[v / WORD] |= 1u64 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits[v / WORD] &= !(1u64 << (v % WORD));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple graph. Immutable after construction; adjacency is
/// symmetric and irreflexive by construction.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;
    fn try_from(r: GraphRepr) -> Result<Self, GraphError> {
        Graph::from_edges(r.n, &r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> GraphRepr {
        GraphRepr {
            n: g.n,
            edges: g.edges(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            assert_ne!(u, v, "self-loop {u}");
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// u,v adjacent in the result iff u != v and nonadjacent in self.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("complement edges in range")
    }

    /// Induced subgraph on `s`, re-indexed to `0..|s|-1`. The returned
    /// vector maps new ids back to the original ids (sorted ascending).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if s.universe() != self.n {
            if let Some(v) = s.iter().find(|&v| v >= self.n) {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
        }
        let map: Vec<usize> = s.iter().collect();
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in map.iter().enumerate() {
            for old_v in self.adj[old_u].iter() {
                if old_u < old_v && inv[old_v] != usize::MAX {
                    edges.push((new_u, inv[old_v]));
                }
            }
        }
        Ok((Graph::from_edges(map.len(), &edges)?, map))
    }

    /// True iff `s` and `t` are disjoint and no edge joins them.
    pub fn are_anticomplete(&self, s: &VertexSet, t: &VertexSet) -> bool {
        if s.intersects(t) {
            return false;
        }
        s.iter().all(|u| !self.adj[u].intersects(t))
    }

    /// Set of vertices outside `s` with at least one neighbor in `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in 0..self.n {
            if !s.contains(v) && self.adj[v].intersects(s) {
                out.insert(v);
            }
        }
        out
    }

    pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                // "p edge <n> <m>" ("col" also seen in the wild)
                if parts.len() != 3 || (parts[0] != "edge" && parts[0] != "col") {
                    return Err(GraphError::BadProblemLine(line.to_string()));
                }
                let nv: usize = parts[1]
                    .parse()
                    .map_err(|_| GraphError::BadProblemLine(line.to_string()))?;
                let _m: usize = parts[2]
                    .parse()
                    .map_err(|_| GraphError::BadProblemLine(line.to_string()))?;
                n = Some(nv);
            } else if let Some(rest) = line.strip_prefix('e') {
                let nv = n.ok_or(GraphError::MissingProblemLine)?;
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(GraphError::BadEdgeLine {
                        line: line_no,
                        text: line.to_string(),
                    });
                }
                let u: usize = parts[0].parse().map_err(|_| GraphError::BadEdgeLine {
                    line: line_no,
                    text: line.to_string(),
                })?;
                let v: usize = parts[1].parse().map_err(|_| GraphError::BadEdgeLine {
                    line: line_no,
                    text: line.to_string(),
                })?;
                if u == v {
                    return Err(GraphError::SelfLoop {
                        line: line_no,
                        text: line.to_string(),
                    });
                }
                if u == 0 || v == 0 || u > nv || v > nv {
                    return Err(GraphError::EndpointOutOfRange {
                        line: line_no,
                        text: line.to_string(),
                    });
                }
                edges.push((u - 1, v - 1));
            } else {
                return Err(GraphError::BadEdgeLine {
                    line: line_no,
                    text: line.to_string(),
                });
            }
        }
        let n = n.ok_or(GraphError::MissingProblemLine)?;
        Graph::from_edges(n, &edges)
    }

    pub fn to_dimacs(&self) -> String {
        let edges = self.edges();
        let mut out = format!("p edge {} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges).expect("union edges in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn parse_path_on_three() {
        let g = Graph::parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_single_vertex() {
        let g = Graph::parse_dimacs("p edge 1 0\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = Graph::parse_dimacs("p edge 2 1\ne 1 1\n").unwrap_err();
        assert!(matches!(err, GraphError::SelfLoop { line: 2, .. }));
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let err = Graph::parse_dimacs("p edge 2 1\ne 1 5\n").unwrap_err();
        assert!(matches!(err, GraphError::EndpointOutOfRange { .. }));
    }

    #[test]
    fn parse_duplicate_edges_idempotent() {
        let g = Graph::parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn dimacs_round_trip() {
        let g = cycle(7);
        let g2 = Graph::parse_dimacs(&g.to_dimacs()).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn complement_c5_is_c5() {
        let c5 = cycle(5);
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        // C5 is self-complementary up to isomorphism: every vertex has degree 2.
        assert!((0..5).all(|v| co.degree(v) == 2));
        assert_eq!(co.complement(), c5);
    }

    #[test]
    fn complement_edgeless_is_complete() {
        let g = Graph::from_edges(4, &[]).unwrap();
        assert_eq!(g.complement().edge_count(), 6);
    }

    #[test]
    fn induced_subgraph_of_c7_prefix_is_path() {
        let g = cycle(7);
        let s = VertexSet::from_iter(7, [0, 1, 2]);
        let (h, map) = g.induced_subgraph(&s).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_all_vertices_is_identity() {
        let g = cycle(6);
        let (h, map) = g.induced_subgraph(&g.vertex_set()).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn induced_subgraph_k4_minus_one_is_k3() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (h, _) = k4
            .induced_subgraph(&VertexSet::from_iter(4, [0, 2, 3]))
            .unwrap();
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn anticomplete_components() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = VertexSet::from_iter(4, [0, 1]);
        let t = VertexSet::from_iter(4, [2, 3]);
        assert!(g.are_anticomplete(&s, &t));
    }

    #[test]
    fn anticomplete_needs_no_crossing_edge() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = VertexSet::from_iter(2, [0]);
        let t = VertexSet::from_iter(2, [1]);
        assert!(!k2.are_anticomplete(&s, &t));
    }

    #[test]
    fn anticomplete_needs_disjointness() {
        let g = Graph::from_edges(3, &[]).unwrap();
        let s = VertexSet::from_iter(3, [0, 1]);
        let t = VertexSet::from_iter(3, [1, 2]);
        assert!(!g.are_anticomplete(&s, &t));
    }
}
