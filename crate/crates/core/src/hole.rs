//! Holes (induced cycles) and the shortest-odd-hole search.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// First invariant violated by a candidate hole sequence.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HoleRejection {
    #[error("repeated vertex {0}")]
    RepeatedVertex(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("missing cycle edge {0}-{1}")]
    MissingEdge(usize, usize),
    #[error("chord {0}-{1}")]
    Chord(usize, usize),
    #[error("cycle length {0} is less than 4")]
    TooShort(usize),
}

/// A validated induced cycle, stored as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hole {
    verts: Vec<usize>,
}

impl Hole {
    /// Caller guarantees `verts` traces an induced cycle.
    pub(crate) fn from_sequence_unchecked(verts: Vec<usize>) -> Hole {
        Hole { verts }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.verts.len() % 2 == 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn vertex_at(&self, pos: usize) -> usize {
        self.verts[pos % self.verts.len()]
    }

    /// Position of `v` on the cycle, if it lies on it.
    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&x| x == v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    pub fn vertex_bitset(&self, n: usize) -> crate::graph::VertexSet {
        crate::graph::VertexSet::from_iter(n, self.verts.iter().copied())
    }

    /// Lexicographically least rotation/reflection starting at the
    /// smallest vertex. This is the deduplication key for enumeration.
    pub fn canonical(&self) -> Hole {
        let l = self.verts.len();
        let start = (0..l).min_by_key(|&i| self.verts[i]).unwrap();
        let fwd: Vec<usize> = (0..l).map(|k| self.verts[(start + k) % l]).collect();
        let bwd: Vec<usize> = (0..l).map(|k| self.verts[(start + l - k % l) % l]).collect();
        Hole {
            verts: if fwd <= bwd { fwd } else { bwd },
        }
    }
}

/// Validates `seq` as a hole of `g`, reporting the first violated
/// invariant otherwise. Checks run in the order: range, repeats, length,
/// cycle edges, chords.
pub fn verify_hole(g: &Graph, seq: &[usize]) -> Result<Hole, HoleRejection> {
    for &v in seq {
        if v >= g.n() {
            return Err(HoleRejection::OutOfRange(v));
        }
    }
    let mut seen = vec![false; g.n()];
    for &v in seq {
        if seen[v] {
            return Err(HoleRejection::RepeatedVertex(v));
        }
        seen[v] = true;
    }
    let l = seq.len();
    if l < 4 {
        return Err(HoleRejection::TooShort(l));
    }
    for i in 0..l {
        let (u, v) = (seq[i], seq[(i + 1) % l]);
        if !g.has_edge(u, v) {
            return Err(HoleRejection::MissingEdge(u, v));
        }
    }
    for i in 0..l {
        for j in i + 2..l {
            if i == 0 && j == l - 1 {
                continue;
            }
            if g.has_edge(seq[i], seq[j]) {
                return Err(HoleRejection::Chord(seq[i], seq[j]));
            }
        }
    }
    Ok(Hole {
        verts: seq.to_vec(),
    })
}

/// A shortest odd hole of `g`, or `None` if `g` has no odd hole.
///
/// Iterative deepening over odd lengths; for each length a lexicographic
/// backtracking search for an induced cycle, pruned by chord checks and a
/// BFS distance bound back to the start vertex. The first cycle found is
/// the canonical (lexicographically least) witness of that length.
pub fn shortest_odd_hole(g: &Graph) -> Option<Hole> {
    let n = g.n();
    let mut len = 5;
    while len <= n {
        for start in 0..n {
            let dist = bfs_from(g, start);
            let mut path = vec![start];
            let mut on_path = vec![false; n];
            on_path[start] = true;
            if let Some(hole) = extend(g, len, &dist, &mut path, &mut on_path) {
                return Some(hole);
            }
        }
        len += 2;
    }
    None
}

/// BFS distances from `s` within the subgraph on vertices `>= s`.
fn bfs_from(g: &Graph, s: usize) -> Vec<usize> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).iter() {
            if v >= s && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn extend(
    g: &Graph,
    target: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> Option<Hole> {
    let start = path[0];
    let k = path.len();
    let last = *path.last().unwrap();
    for u in g.neighbors(last).iter() {
        if u <= start || on_path[u] {
            continue;
        }
        // No chords back into the path interior.
        if path.iter().take(k - 1).skip(1).any(|&w| g.has_edge(u, w)) {
            continue;
        }
        // The second vertex is legitimately adjacent to the start; from
        // the third on, adjacency to the start closes the cycle.
        let closes = k >= 2 && g.has_edge(u, start);
        if k + 1 == target {
            if closes {
                path.push(u);
                let hole = Hole { verts: path.clone() };
                path.pop();
                debug_assert!(verify_hole(g, hole.vertices()).is_ok());
                return Some(hole);
            }
            continue;
        }
        if closes {
            // Any extension past u would leave the chord u-start.
            continue;
        }
        // u lands at position k; the cycle still has target - k edges
        // from there back to the start, and BFS distance lower-bounds it.
        if dist[u] == usize::MAX || dist[u] > target - k {
            continue;
        }
        path.push(u);
        on_path[u] = true;
        let found = extend(g, target, dist, path, on_path);
        on_path[u] = false;
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, generate};

    fn petersen() -> Graph {
        // Outer C5, inner pentagram, spokes.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, 5 + i)));
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn c5_sequence_is_valid() {
        let g = cycle(5);
        let h = verify_hole(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(h.len(), 5);
        assert!(h.is_odd());
    }

    #[test]
    fn k4_cycle_rejected_for_chord() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            verify_hole(&k4, &[0, 1, 2, 3]),
            Err(HoleRejection::Chord(0, 2))
        );
    }

    #[test]
    fn short_sequence_rejected() {
        let g = cycle(5);
        assert_eq!(verify_hole(&g, &[0, 1, 2]), Err(HoleRejection::TooShort(3)));
    }

    #[test]
    fn repeated_vertex_rejected() {
        let g = cycle(5);
        assert_eq!(
            verify_hole(&g, &[0, 1, 2, 1, 4]),
            Err(HoleRejection::RepeatedVertex(1))
        );
    }

    #[test]
    fn missing_edge_rejected() {
        let g = cycle(5);
        assert_eq!(
            verify_hole(&g, &[0, 1, 3, 2, 4]),
            Err(HoleRejection::MissingEdge(1, 3))
        );
    }

    #[test]
    fn bipartite_has_no_odd_hole() {
        let g = cycle(8);
        assert_eq!(shortest_odd_hole(&g), None);
    }

    #[test]
    fn c9_is_its_own_shortest_odd_hole() {
        let g = cycle(9);
        let h = shortest_odd_hole(&g).unwrap();
        assert_eq!(h.vertices(), &[0, 1, 2, 3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn petersen_shortest_odd_hole_has_length_5() {
        let h = shortest_odd_hole(&petersen()).unwrap();
        assert_eq!(h.len(), 5);
    }

    #[test]
    fn search_is_deterministic() {
        let spec = "planted-hole:14:7:0.3".parse().unwrap();
        for seed in 0..10 {
            let g = generate(&spec, seed).unwrap();
            assert_eq!(shortest_odd_hole(&g), shortest_odd_hole(&g));
        }
    }

    #[test]
    fn canonical_fixes_rotation_and_reflection() {
        let h = Hole {
            verts: vec![3, 2, 1, 0, 4],
        };
        assert_eq!(h.canonical().vertices(), &[0, 1, 2, 3, 4]);
    }
}
