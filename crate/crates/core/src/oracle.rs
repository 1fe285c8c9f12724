//! Brute-force ground truth: exact chromatic, clique and stability
//! numbers, exact tau, exhaustive odd-hole enumeration, and the
//! anticomplete-family search. Intended for n <= 20 (coloring) and
//! n <= 64 (everything else); larger inputs are allowed but slow.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::hole::{verify_hole, Hole};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleReport {
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub tau: usize,
}

pub fn report(g: &Graph) -> OracleReport {
    OracleReport {
        chi: chromatic_number(g).0,
        omega: clique_number(g).0,
        alpha: stability_number(g).0,
        tau: max_neighborhood_chromatic(g),
    }
}

/// Exact chromatic number with one witness coloring. The empty graph
/// has chromatic number 0.
pub fn chromatic_number(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let (omega, clique) = clique_number(g);
    let greedy = greedy_coloring(g);
    let ub = greedy.iter().max().map_or(0, |&c| c + 1);
    // Vertex order: the maximum clique first (pre-colored), then by
    // descending degree.
    let mut order: Vec<usize> = clique.clone();
    let mut rest: Vec<usize> = (0..n).filter(|v| !clique.contains(v)).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order.extend(rest);
    for k in omega..=ub {
        let mut colors = vec![usize::MAX; n];
        for (i, &v) in clique.iter().enumerate() {
            colors[v] = i;
        }
        if try_color(g, k, &order, clique.len(), &mut colors, omega) {
            debug_assert!(is_proper(g, &colors));
            return (k, colors);
        }
    }
    (ub, greedy)
}

fn try_color(
    g: &Graph,
    k: usize,
    order: &[usize],
    idx: usize,
    colors: &mut [usize],
    max_used: usize,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let cap = k.min(max_used + 1);
    for c in 0..cap {
        if g.neighbors(v).iter().all(|u| colors[u] != c) {
            colors[v] = c;
            if try_color(g, k, order, idx + 1, colors, max_used.max(c + 1)) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![usize::MAX; n];
    for v in order {
        let mut c = 0;
        while g.neighbors(v).iter().any(|u| colors[u] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    colors
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| colors[u] != colors[v] || colors[u] == usize::MAX)
}

/// Exact clique number with one witness clique.
pub fn clique_number(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut best: Vec<usize> = Vec::new();
    let mut current = Vec::new();
    let candidates = g.vertex_set();
    clique_search(g, &mut current, &candidates, &mut best);
    (best.len(), best)
}

fn clique_search(g: &Graph, current: &mut Vec<usize>, candidates: &VertexSet, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    let cands: Vec<usize> = candidates.to_vec();
    for (i, &v) in cands.iter().enumerate() {
        if current.len() + (cands.len() - i) <= best.len() {
            break;
        }
        let mut next = candidates.intersection(g.neighbors(v));
        for &w in &cands[..=i] {
            next.remove(w);
        }
        current.push(v);
        clique_search(g, current, &next, best);
        current.pop();
    }
}

/// Exact stability number with witness: clique number of the complement.
pub fn stability_number(g: &Graph) -> (usize, Vec<usize>) {
    clique_number(&g.complement())
}

/// tau = max over vertices v of the chromatic number of G[N(v)].
/// 0 for the edgeless (or empty) graph.
pub fn max_neighborhood_chromatic(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| {
            let (h, _) = g.induced_subgraph(g.neighbors(v)).expect("neighbors in range");
            chromatic_number(&h).0
        })
        .max()
        .unwrap_or(0)
}

/// All induced odd cycles of length >= 5 and <= max_len, each reported
/// once in canonical form, sorted by (length, sequence). This is a plain
/// exhaustive enumeration, independent of the shortest-odd-hole search.
pub fn enumerate_odd_holes(g: &Graph, max_len: usize) -> Vec<Hole> {
    let n = g.n();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        enum_extend(g, max_len, &mut path, &mut on_path, &mut found);
    }
    let mut holes: Vec<Hole> = found
        .into_iter()
        .map(|seq| verify_hole(g, &seq).expect("enumerated cycle is a hole"))
        .collect();
    holes.sort_by_key(|h| (h.len(), h.vertices().to_vec()));
    holes
}

fn enum_extend(
    g: &Graph,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut BTreeSet<Vec<usize>>,
) {
    let start = path[0];
    let k = path.len();
    if k + 1 > max_len {
        return;
    }
    let last = *path.last().unwrap();
    for u in g.neighbors(last).iter() {
        if u <= start || on_path[u] {
            continue;
        }
        if path.iter().take(k - 1).skip(1).any(|&w| g.has_edge(u, w)) {
            continue;
        }
        // The second vertex is legitimately adjacent to the start; from
        // the third on, adjacency to the start is the closing edge.
        if k >= 2 && g.has_edge(u, start) {
            // Closing edge: emit if odd and long enough; never extend past u.
            if k + 1 >= 5 && (k + 1) % 2 == 1 {
                path.push(u);
                let hole = Hole::from_sequence_unchecked(path.clone()).canonical();
                found.insert(hole.vertices().to_vec());
                path.pop();
            }
            continue;
        }
        path.push(u);
        on_path[u] = true;
        enum_extend(g, max_len, path, on_path, found);
        on_path[u] = false;
        path.pop();
    }
}

/// Largest k <= limit such that k pairwise-anticomplete odd holes exist.
/// Exact search over the enumerated hole families.
pub fn max_anticomplete_odd_hole_family(g: &Graph, limit: usize) -> usize {
    if limit == 0 {
        return 0;
    }
    let holes = enumerate_odd_holes(g, g.n());
    let sets: Vec<VertexSet> = holes.iter().map(|h| h.vertex_bitset(g.n())).collect();
    let k = holes.len();
    let mut compat = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            if g.are_anticomplete(&sets[i], &sets[j]) {
                compat[i][j] = true;
                compat[j][i] = true;
            }
        }
    }
    let mut best = 0;
    let mut chosen = Vec::new();
    family_search(&compat, 0, &mut chosen, &mut best, limit);
    best
}

fn family_search(
    compat: &[Vec<bool>],
    from: usize,
    chosen: &mut Vec<usize>,
    best: &mut usize,
    limit: usize,
) {
    if chosen.len() > *best {
        *best = chosen.len();
    }
    if *best >= limit {
        return;
    }
    for i in from..compat.len() {
        if chosen.iter().all(|&j| compat[i][j]) {
            chosen.push(i);
            family_search(compat, i + 1, chosen, best, limit);
            chosen.pop();
            if *best >= limit {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, generate, wheel};
    use crate::hole::shortest_odd_hole;

    fn petersen() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, 5 + i)));
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn chromatic_empty_graph_is_zero() {
        let g = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(chromatic_number(&g).0, 0);
    }

    #[test]
    fn chromatic_c5_is_three() {
        let (chi, colors) = chromatic_number(&cycle(5));
        assert_eq!(chi, 3);
        assert!(is_proper(&cycle(5), &colors));
    }

    #[test]
    fn chromatic_petersen_is_three() {
        let g = petersen();
        let (chi, colors) = chromatic_number(&g);
        assert_eq!(chi, 3);
        assert!(is_proper(&g, &colors));
    }

    #[test]
    fn clique_edgeless_is_one() {
        let g = Graph::from_edges(5, &[]).unwrap();
        assert_eq!(clique_number(&g).0, 1);
    }

    #[test]
    fn clique_k4_is_four() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (omega, witness) = clique_number(&k4);
        assert_eq!(omega, 4);
        assert_eq!(witness.len(), 4);
    }

    #[test]
    fn clique_wheel7_is_three() {
        assert_eq!(clique_number(&wheel(7)).0, 3);
    }

    #[test]
    fn stability_values() {
        assert_eq!(stability_number(&cycle(5)).0, 2);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(stability_number(&k4).0, 1);
    }

    #[test]
    fn two_c5s_satisfy_the_alpha_omega_identity() {
        let g = generate(&"cycle:5+cycle:5".parse().unwrap(), 0).unwrap();
        let (alpha, witness) = stability_number(&g);
        assert_eq!(alpha, 4);
        for (i, &u) in witness.iter().enumerate() {
            for &v in &witness[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
        let omega = clique_number(&g).0;
        assert_eq!(alpha * omega, g.n() - 2);
    }

    #[test]
    fn tau_values() {
        assert_eq!(max_neighborhood_chromatic(&cycle(7)), 1);
        assert_eq!(max_neighborhood_chromatic(&wheel(7)), 3);
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(max_neighborhood_chromatic(&k3), 2);
    }

    #[test]
    fn c5_has_exactly_one_odd_hole() {
        let holes = enumerate_odd_holes(&cycle(5), 5);
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn chorded_c7_holes_recomputed() {
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 2));
        let g = Graph::from_edges(7, &edges).unwrap();
        let holes = enumerate_odd_holes(&g, 7);
        // The 7-cycle is destroyed by the chord; 0-2-3-4-5-6 is an even
        // cycle, and the only odd induced cycle left is the triangle,
        // which is too short to be a hole.
        assert!(holes.is_empty());
    }

    #[test]
    fn bipartite_has_no_odd_holes() {
        assert!(enumerate_odd_holes(&cycle(10), 10).is_empty());
    }

    #[test]
    fn petersen_odd_hole_count() {
        let holes = enumerate_odd_holes(&petersen(), 10);
        assert!(holes.iter().all(|h| h.len() == 5));
        assert_eq!(holes.len(), 12);
    }

    #[test]
    fn shortest_hole_agrees_with_enumeration() {
        for seed in 0..15 {
            let g = generate(&"gnp:12:0.3".parse().unwrap(), seed).unwrap();
            let enumerated = enumerate_odd_holes(&g, g.n());
            match shortest_odd_hole(&g) {
                Some(h) => assert_eq!(h.len(), enumerated[0].len(), "seed {seed}"),
                None => assert!(enumerated.is_empty(), "seed {seed}"),
            }
        }
    }

    #[test]
    fn anticomplete_family_sizes() {
        let two_c5 = generate(&"cycle:5+cycle:5".parse().unwrap(), 0).unwrap();
        assert_eq!(max_anticomplete_odd_hole_family(&two_c5, 3), 2);
        assert_eq!(max_anticomplete_odd_hole_family(&cycle(5), 3), 1);
        assert_eq!(max_anticomplete_odd_hole_family(&wheel(7), 3), 1);
    }

    #[test]
    fn report_serializes_with_short_keys() {
        let r = report(&cycle(5));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["chi"], 3);
        assert_eq!(json["omega"], 2);
        assert_eq!(json["alpha"], 2);
        assert_eq!(json["tau"], 1);
    }
}
