//! Coloring N(C): the circular-conflict lemma, the three minor-vertex
//! families, dominator buckets for the major vertices, and the assembly
//! giving at most 21*tau colors (12*tau in improved mode).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::attach::{attachment_profile, find_skew_pair, AttachError, AttachmentProfile};
use crate::dominate::{dominate_major, hitmajor2_edge, DominateError, DominatingSet};
use crate::graph::{Graph, VertexSet};
use crate::hole::Hole;
use crate::oracle;

#[derive(Debug, Error)]
pub enum ColorError {
    #[error(transparent)]
    Attach(#[from] AttachError),
    #[error(transparent)]
    Dominate(#[from] DominateError),
    #[error("edge {u}-{v} between classes {i} and {j} has offset {offset}, allowed {allowed:?}")]
    OffsetViolation {
        u: usize,
        v: usize,
        i: usize,
        j: usize,
        offset: usize,
        allowed: Vec<usize>,
    },
    #[error("dominating set does not cover vertex {0}")]
    NotDominating(usize),
    #[error("counterexample: {0}")]
    Counterexample(String),
}

/// A proper coloring of a vertex subset, with a dense 0-based palette.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: BTreeMap<usize, usize>,
    pub colors_used: usize,
}

impl Coloring {
    pub fn empty() -> Coloring {
        Coloring::default()
    }

    /// Densifies an arbitrary color map: ids become 0..k-1 preserving
    /// relative order.
    pub fn from_map(map: BTreeMap<usize, usize>) -> Coloring {
        let ids: BTreeSet<usize> = map.values().copied().collect();
        let remap: BTreeMap<usize, usize> =
            ids.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let colors_used = ids.len();
        Coloring {
            assignment: map.into_iter().map(|(v, c)| (v, remap[&c])).collect(),
            colors_used,
        }
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignment.keys().copied()
    }

    /// No edge of `g` inside the domain is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.iter().all(|(&v, &c)| {
            g.neighbors(v)
                .iter()
                .all(|w| self.assignment.get(&w) != Some(&c))
        })
    }

    /// Union of colorings on pairwise disjoint domains, palettes kept
    /// disjoint by offsetting.
    pub fn union_disjoint(parts: &[Coloring]) -> Coloring {
        let mut assignment = BTreeMap::new();
        let mut offset = 0;
        for p in parts {
            for (&v, &c) in &p.assignment {
                let prev = assignment.insert(v, c + offset);
                debug_assert!(prev.is_none(), "overlapping domains at {v}");
            }
            offset += p.colors_used;
        }
        Coloring {
            assignment,
            colors_used: offset,
        }
    }
}

/// Colors one class lying inside a single vertex's neighborhood: exact
/// at desk scale, greedy beyond it. Either way the class needs at most
/// chi(N(y)) colors, which is what the tau bounds charge.
fn color_class(g: &Graph, verts: &[usize]) -> Coloring {
    if verts.is_empty() {
        return Coloring::empty();
    }
    let set = VertexSet::from_iter(g.n(), verts.iter().copied());
    let (sub, map) = g.induced_subgraph(&set).expect("class vertices in range");
    let colors: Vec<usize> = if sub.n() <= 20 {
        oracle::chromatic_number(&sub).1
    } else {
        greedy(&sub)
    };
    Coloring::from_map(map.iter().zip(colors).map(|(&v, c)| (v, c)).collect())
}

fn greedy(g: &Graph) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let used: BTreeSet<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&w| colors[w] != usize::MAX)
            .map(|w| colors[w])
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    colors
}

// ---------------------------------------------------------------------------
// Circular conflict graphs
// ---------------------------------------------------------------------------

/// A graph on indices 0..n-1 whose every edge {i, j} has cyclic offset in
/// the set `offsets`; such a graph has max degree 2|offsets| and colors
/// greedily with 2|offsets|+1 colors.
#[derive(Clone, Debug)]
pub struct CircularConflict {
    pub n: usize,
    pub offsets: BTreeSet<usize>,
    adj: Vec<Vec<usize>>,
}

impl CircularConflict {
    /// Validates every edge against the offset set at construction.
    pub fn new(
        n: usize,
        offsets: BTreeSet<usize>,
        edges: &[(usize, usize)],
    ) -> Result<CircularConflict, ColorError> {
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in edges {
            let d = (j + n - i) % n;
            if !(offsets.contains(&d) || offsets.contains(&(n - d))) {
                return Err(ColorError::OffsetViolation {
                    u: i,
                    v: j,
                    i,
                    j,
                    offset: d.min(n - d),
                    allowed: offsets.iter().copied().collect(),
                });
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        Ok(CircularConflict { n, offsets, adj })
    }

    pub fn bound(&self) -> usize {
        2 * self.offsets.len() + 1
    }
}

/// Greedy coloring in index order; at most 2|offsets|+1 colors.
pub fn color_circular(cc: &CircularConflict) -> Coloring {
    let mut colors: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..cc.n {
        let used: BTreeSet<usize> = cc.adj[i]
            .iter()
            .filter_map(|j| colors.get(j).copied())
            .collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        colors.insert(i, c);
    }
    let out = Coloring::from_map(colors);
    debug_assert!(out.colors_used <= cc.bound());
    out
}

// ---------------------------------------------------------------------------
// Minor-vertex families
// ---------------------------------------------------------------------------

/// Cross-class edges between the index classes, as (i, j, u, v) with a
/// witness edge uv.
fn cross_class_edges(
    g: &Graph,
    classes: &BTreeMap<usize, Vec<usize>>,
) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for (&i, vi) in classes {
        for (&j, vj) in classes.range(i + 1..) {
            'pair: for &u in vi {
                for &v in vj {
                    if g.has_edge(u, v) {
                        out.push((i, j, u, v));
                        break 'pair;
                    }
                }
            }
        }
    }
    out
}

/// Colors one class family arranged around the cycle: the classes are
/// block-assigned via the circular-conflict lemma, classes inside a
/// block share a palette sized by the largest class.
fn color_family(
    g: &Graph,
    l: usize,
    classes: &BTreeMap<usize, Vec<usize>>,
    offsets: &[usize],
) -> Result<Coloring, ColorError> {
    let cross = cross_class_edges(g, classes);
    let edges: Vec<(usize, usize)> = cross.iter().map(|&(i, j, _, _)| (i, j)).collect();
    let cc = match CircularConflict::new(l, offsets.iter().copied().collect(), &edges) {
        Ok(cc) => cc,
        Err(ColorError::OffsetViolation { i, j, offset, allowed, .. }) => {
            let &(_, _, u, v) = cross
                .iter()
                .find(|&&(a, b, _, _)| (a, b) == (i, j))
                .unwrap();
            return Err(ColorError::OffsetViolation {
                u,
                v,
                i,
                j,
                offset,
                allowed,
            });
        }
        Err(e) => return Err(e),
    };
    let blocks = color_circular(&cc);
    assemble_blocks(g, classes, &|i| blocks.assignment[&i])
}

/// Shared-palette assembly: classes mapped to the same block id never
/// conflict, so they reuse one palette; palettes across blocks are
/// disjoint.
fn assemble_blocks(
    g: &Graph,
    classes: &BTreeMap<usize, Vec<usize>>,
    block_of: &dyn Fn(usize) -> usize,
) -> Result<Coloring, ColorError> {
    let mut per_block: BTreeMap<usize, Vec<Coloring>> = BTreeMap::new();
    for (&i, verts) in classes {
        per_block
            .entry(block_of(i))
            .or_default()
            .push(color_class(g, verts));
    }
    let mut assignment = BTreeMap::new();
    let mut offset = 0;
    for (_, colorings) in per_block {
        let width = colorings.iter().map(|c| c.colors_used).max().unwrap_or(0);
        for c in colorings {
            for (v, col) in c.assignment {
                assignment.insert(v, col + offset);
            }
        }
        offset += width;
    }
    let out = Coloring {
        assignment,
        colors_used: offset,
    };
    if !out.is_proper(g) {
        return Err(ColorError::Counterexample(
            "block assembly produced an improper coloring".into(),
        ));
    }
    Ok(out)
}

/// Index classes for one minor type: type 0 keyed by its anchor vertex
/// position, type 1 by the left end of its anchor edge, type 2 by the
/// left end of its covering path.
fn minor_classes(
    profile: &AttachmentProfile,
    t: usize,
    keep: &dyn Fn(usize) -> bool,
) -> BTreeMap<usize, Vec<usize>> {
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for m in profile.minors_of_type(t) {
        if keep(m.vertex) {
            classes.entry(m.anchor[0]).or_default().push(m.vertex);
        }
    }
    classes
}

/// Expected cross-class offsets per minor type on a shortest odd hole.
pub fn minor_offsets(t: usize) -> &'static [usize] {
    match t {
        0 => &[1, 3],
        1 => &[1, 2],
        2 => &[1, 2],
        _ => unreachable!("minor type is 0, 1 or 2"),
    }
}

/// First cross-class edge of the given minor type whose index offset is
/// outside `allowed`, as (u, v, offset). Used to audit the structural
/// lemmas behind the family colorings.
pub fn cross_class_offset_violation(
    g: &Graph,
    profile: &AttachmentProfile,
    minor_type: usize,
    allowed: &[usize],
) -> Option<(usize, usize, usize)> {
    let l = profile.hole.len();
    let classes = minor_classes(profile, minor_type, &|_| true);
    for (i, j, u, v) in cross_class_edges(g, &classes) {
        let d = (j + l - i) % l;
        if !(allowed.contains(&d) || allowed.contains(&(l - d))) {
            return Some((u, v, d.min(l - d)));
        }
    }
    None
}

/// Colors all C-minor vertices (optionally restricted) with at most
/// 15*tau colors: three families of five blocks each.
pub fn color_minor_vertices(
    g: &Graph,
    profile: &AttachmentProfile,
    restrict: Option<&VertexSet>,
) -> Result<Coloring, ColorError> {
    let l = profile.hole.len();
    let keep = |v: usize| restrict.map_or(true, |r| r.contains(v));
    let mut parts = Vec::new();
    for t in 0..=2 {
        let classes = minor_classes(profile, t, &keep);
        parts.push(color_family(g, l, &classes, minor_offsets(t))?);
    }
    Ok(Coloring::union_disjoint(&parts))
}

// ---------------------------------------------------------------------------
// Major-vertex buckets
// ---------------------------------------------------------------------------

/// Colors the C-major vertices with at most |ds|*tau colors: each major
/// goes to the bucket of its smallest-id neighbor in the dominating set,
/// so every bucket lies inside one open neighborhood.
pub fn color_major_vertices(
    g: &Graph,
    profile: &AttachmentProfile,
    ds: &DominatingSet,
) -> Result<Coloring, ColorError> {
    bucket_coloring(g, &profile.major, &ds.members)
}

fn bucket_coloring(g: &Graph, targets: &[usize], centers: &[usize]) -> Result<Coloring, ColorError> {
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &x in targets {
        match centers.iter().find(|&&y| g.has_edge(x, y)) {
            Some(&y) => buckets.entry(y).or_default().push(x),
            // A center with no neighbor among the centers can only cover
            // itself; park it in its own bucket.
            None if centers.contains(&x) => buckets.entry(x).or_default().push(x),
            None => return Err(ColorError::NotDominating(x)),
        }
    }
    let parts: Vec<Coloring> = buckets
        .values()
        .map(|verts| color_class(g, verts))
        .collect();
    let out = Coloring::union_disjoint(&parts);
    if !out.is_proper(g) {
        return Err(ColorError::Counterexample(
            "bucket coloring improper".into(),
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Assembly
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Standard,
    Improved,
}

/// Bound certificate for one N(C) coloring: tau is the oracle value
/// max over v of chi(N(v)).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub tau: usize,
    pub colors_used: usize,
    pub bound: usize,
    pub mode: Mode,
}

impl BoundReport {
    pub fn within_bound(&self) -> bool {
        self.colors_used <= self.bound
    }
}

/// Proper coloring of N(C) with at most 21*tau colors (standard) or
/// 12*tau (improved), with the bound report against oracle tau.
pub fn color_hole_neighborhood(
    g: &Graph,
    hole: &Hole,
    improved: bool,
) -> Result<(Coloring, BoundReport), ColorError> {
    let profile = attachment_profile(g, hole)?;
    let tau = oracle::max_neighborhood_chromatic(g);
    let mode = if improved { Mode::Improved } else { Mode::Standard };
    let factor = if improved { 12 } else { 21 };
    let coloring = if profile.n_c.is_empty() {
        Coloring::empty()
    } else if improved {
        color_improved(g, &profile)?
    } else {
        let ds = dominate_major(g, hole, &profile, false)?;
        let minors = color_minor_vertices(g, &profile, None)?;
        let majors = color_major_vertices(g, &profile, &ds)?;
        Coloring::union_disjoint(&[minors, majors])
    };
    if !coloring.is_proper(g) {
        return Err(ColorError::Counterexample(
            "neighborhood coloring improper".into(),
        ));
    }
    let report = BoundReport {
        tau,
        colors_used: coloring.colors_used,
        bound: factor * tau,
        mode,
    };
    Ok((coloring, report))
}

/// The improved assembly: a five-vertex dominating structure containing
/// a consecutive hole triple; buckets for the majors and the minors
/// adjacent to the triple (<=5 tau), then the leftover type-1 minors in
/// three linear blocks and the merged type-0/2 leftovers in four.
fn color_improved(g: &Graph, profile: &AttachmentProfile) -> Result<Coloring, ColorError> {
    let hole = &profile.hole;
    let l = hole.len();
    let (y_set, t) = improved_structure(g, profile)?;
    let triple: Vec<usize> = (0..3).map(|k| hole.vertex_at((t + k) % l)).collect();

    // Bucket phase: majors against Y, plus every minor adjacent to the
    // triple against the triple itself.
    let mut bucket_targets = profile.major.clone();
    let mut minor_leftover: Vec<usize> = Vec::new();
    for m in &profile.minors {
        if triple.iter().any(|&c| g.has_edge(m.vertex, c)) {
            bucket_targets.push(m.vertex);
        } else {
            minor_leftover.push(m.vertex);
        }
    }
    let buckets = bucket_coloring(g, &bucket_targets, &y_set)?;

    let leftover: BTreeSet<usize> = minor_leftover.iter().copied().collect();
    let keep = |v: usize| leftover.contains(&v);

    // Leftover type-1 minors: classes keyed by the left end of the
    // anchor edge; indices t-1..t+2 are empty, so the offset-{1,2}
    // conflicts never wrap and three blocks suffice.
    let t1 = minor_classes(profile, 1, &keep);
    let t1_coloring = color_leftover(g, l, &t1, t, &[1, 2], 3)?;

    // Merged type-0/2 leftovers keyed by the left end of the covering
    // path; conflicts span at most 3 indices and t..t+2 are empty.
    let mut merged = minor_classes(profile, 0, &keep);
    for (i, verts) in minor_classes(profile, 2, &keep) {
        merged.entry(i).or_default().extend(verts);
    }
    let merged_coloring = color_leftover(g, l, &merged, t, &[1, 2, 3], 4)?;

    Ok(Coloring::union_disjoint(&[
        buckets,
        t1_coloring,
        merged_coloring,
    ]))
}

/// Colors leftover classes by residue of their linear index (measured
/// from just past the triple) modulo `width`; valid because the empty
/// indices around the triple break the cycle, so conflicts are linear
/// with span < width.
fn color_leftover(
    g: &Graph,
    l: usize,
    classes: &BTreeMap<usize, Vec<usize>>,
    t: usize,
    allowed: &[usize],
    width: usize,
) -> Result<Coloring, ColorError> {
    let start = (t + 3) % l;
    let linear = |i: usize| (i + l - start) % l;
    for (i, j, u, v) in cross_class_edges(g, classes) {
        let span = linear(i).abs_diff(linear(j));
        if !allowed.contains(&span) {
            return Err(ColorError::OffsetViolation {
                u,
                v,
                i,
                j,
                offset: span,
                allowed: allowed.to_vec(),
            });
        }
    }
    assemble_blocks(g, classes, &|i| linear(i) % width)
}

/// The five-vertex dominating structure with a consecutive triple of C:
/// per case, the skew five-set; a three-neighbor major plus its
/// neighbors and one extension; a four-consecutive-neighbor major plus
/// the middle pair extended; or an edge from the (relaxed) recursion
/// plus z and the completing hole vertex. Returns (Y vertices, triple
/// start position).
fn improved_structure(
    g: &Graph,
    profile: &AttachmentProfile,
) -> Result<(Vec<usize>, usize), ColorError> {
    let hole = &profile.hole;
    let l = hole.len();
    let majors = &profile.major;
    if majors.is_empty() {
        return Ok((
            vec![hole.vertex_at(0), hole.vertex_at(1), hole.vertex_at(2)],
            0,
        ));
    }
    if let Some(w) = find_skew_pair(g, hole, majors) {
        let m = w.path.len();
        let y = vec![w.path[0], w.path[1], w.path[2], w.path[m - 3], w.u];
        let t = triple_start(hole, w.path[0], w.path[1])?;
        return finish_structure(g, majors, y, t);
    }
    // No skew pair: a major with three hole-neighbors has a consecutive
    // pair among them; extend it to a triple.
    for &v in majors {
        let pos = profile.positions_of(v);
        if pos.len() == 3 {
            if let Some(&p) = pos.iter().find(|&&p| pos.contains(&((p + 1) % l))) {
                let mut y: Vec<usize> =
                    pos.iter().map(|&q| hole.vertex_at(q)).collect();
                y.push(v);
                y.push(hole.vertex_at((p + 2) % l));
                return finish_structure(g, majors, y, p);
            }
        }
    }
    // A major with exactly four consecutive hole-neighbors: itself plus
    // the middle pair dominates; extend to a triple.
    for &v in majors {
        let pos = profile.positions_of(v);
        if pos.len() == 4 {
            if let Some(&p) = pos
                .iter()
                .find(|&&p| (1..4).all(|k| pos.contains(&((p + k) % l))))
            {
                let y = vec![
                    v,
                    hole.vertex_at((p + 1) % l),
                    hole.vertex_at((p + 2) % l),
                    hole.vertex_at((p + 3) % l),
                ];
                return finish_structure(g, majors, y, (p + 1) % l);
            }
        }
    }
    // Remaining case: every major has >=5 hole-neighbors, or four not
    // all consecutive; the relaxed edge recursion applies.
    let z = majors[0];
    let xs: Vec<usize> = majors
        .iter()
        .copied()
        .filter(|&x| x != z && !g.has_edge(x, z))
        .collect();
    let (a, b) = hitmajor2_edge(g, hole, z, &xs, true)?;
    let pa = hole.position_of(a).expect("edge end on hole");
    let pb = hole.position_of(b).expect("edge end on hole");
    let p = if (pa + 1) % l == pb { pa } else { pb };
    let y = vec![a, b, z, hole.vertex_at((p + 2) % l)];
    finish_structure(g, majors, y, p)
}

fn finish_structure(
    g: &Graph,
    majors: &[usize],
    mut y: Vec<usize>,
    t: usize,
) -> Result<(Vec<usize>, usize), ColorError> {
    y.sort_unstable();
    y.dedup();
    if y.len() > 5 {
        return Err(ColorError::Counterexample(format!(
            "dominating structure {y:?} exceeds five vertices"
        )));
    }
    if let Some(&x) = majors
        .iter()
        .find(|&&x| !y.contains(&x) && !y.iter().any(|&c| g.has_edge(x, c)))
    {
        return Err(ColorError::Counterexample(format!(
            "structure {y:?} fails to dominate major vertex {x}"
        )));
    }
    Ok((y, t))
}

/// Triple start position for a consecutive hole pair (c1, c2) oriented
/// so that positions t, t+1, t+2 run along the pair's direction.
fn triple_start(hole: &Hole, c1: usize, c2: usize) -> Result<usize, ColorError> {
    let l = hole.len();
    let p1 = hole.position_of(c1).expect("on hole");
    let p2 = hole.position_of(c2).expect("on hole");
    if (p1 + 1) % l == p2 {
        Ok(p1)
    } else if (p2 + 1) % l == p1 {
        // Reversed orientation: the triple runs c3, c2, c1 in position
        // order, so it starts two before p1.
        Ok((p1 + l - 2) % l)
    } else {
        Err(ColorError::Counterexample(format!(
            "path vertices {c1}, {c2} not consecutive on the hole"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, wheel};
    use crate::hole::{shortest_odd_hole, verify_hole};

    fn c7_with(extra: usize, adj: &[(usize, usize)]) -> (Graph, Hole) {
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend_from_slice(adj);
        let g = Graph::from_edges(7 + extra, &edges).unwrap();
        let h = verify_hole(&g, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        (g, h)
    }

    #[test]
    fn circular_no_offsets_one_color() {
        let cc = CircularConflict::new(6, BTreeSet::new(), &[]).unwrap();
        assert_eq!(color_circular(&cc).colors_used, 1);
    }

    #[test]
    fn circular_c5_three_colors() {
        let edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let cc = CircularConflict::new(5, [1].into(), &edges).unwrap();
        let c = color_circular(&cc);
        assert!(c.colors_used <= 3);
        assert_eq!(c.colors_used, 3); // chi(C5) = 3
    }

    #[test]
    fn circular_rejects_bad_offset() {
        assert!(matches!(
            CircularConflict::new(8, [1].into(), &[(0, 4)]),
            Err(ColorError::OffsetViolation { .. })
        ));
    }

    #[test]
    fn circular_full_conflict_bound() {
        // n=9, offsets {1,3}, all qualifying edges present: <= 7 colors.
        let offsets: BTreeSet<usize> = [1, 3].into();
        let mut edges = Vec::new();
        for i in 0..9 {
            for j in i + 1..9 {
                let d = (j - i).min(9 - (j - i));
                if offsets.contains(&d) {
                    edges.push((i, j));
                }
            }
        }
        let cc = CircularConflict::new(9, offsets, &edges).unwrap();
        let c = color_circular(&cc);
        assert!(c.colors_used <= 7);
        let g = Graph::from_edges(9, &edges).unwrap();
        assert!(c.is_proper(&g));
    }

    #[test]
    fn pendant_minor_one_color() {
        let (g, h) = c7_with(1, &[(0, 7)]);
        let p = attachment_profile(&g, &h).unwrap();
        let c = color_minor_vertices(&g, &p, None).unwrap();
        assert_eq!(c.colors_used, 1);
    }

    #[test]
    fn type1_ring_within_family_bound() {
        // One type-1 vertex per hole edge.
        let mut adj = Vec::new();
        for i in 0..7 {
            adj.push((i, 7 + i));
            adj.push(((i + 1) % 7, 7 + i));
        }
        let (g, h) = c7_with(7, &adj);
        let p = attachment_profile(&g, &h).unwrap();
        assert_eq!(p.minors_of_type(1).count(), 7);
        let c = color_minor_vertices(&g, &p, None).unwrap();
        assert!(c.is_proper(&g));
        assert!(c.colors_used <= 5, "used {}", c.colors_used);
    }

    #[test]
    fn offset_violation_detected_with_narrow_table() {
        // Type-0 minors at c0 and c3, adjacent: offset 3.
        let (g, h) = c7_with(2, &[(0, 7), (3, 8), (7, 8)]);
        let p = attachment_profile(&g, &h).unwrap();
        assert_eq!(cross_class_offset_violation(&g, &p, 0, &[1, 3]), None);
        let hit = cross_class_offset_violation(&g, &p, 0, &[1]).unwrap();
        assert_eq!(hit.2, 3);
    }

    #[test]
    fn wheel_neighborhood_one_color() {
        let g = wheel(7);
        let h = verify_hole(&g, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        let (c, r) = color_hole_neighborhood(&g, &h, false).unwrap();
        assert_eq!(c.colors_used, 1);
        assert!(r.within_bound());
        assert_eq!(r.bound, 21 * r.tau);
    }

    #[test]
    fn bare_cycle_empty_neighborhood() {
        let g = cycle(9);
        let h = verify_hole(&g, &(0..9).collect::<Vec<_>>()).unwrap();
        for improved in [false, true] {
            let (c, _) = color_hole_neighborhood(&g, &h, improved).unwrap();
            assert_eq!(c.colors_used, 0);
        }
    }

    #[test]
    fn two_adjacent_universal_majors_two_colors() {
        let mut adj: Vec<(usize, usize)> = (0..7).flat_map(|p| [(p, 7), (p, 8)]).collect();
        adj.push((7, 8));
        let (g, h) = c7_with(2, &adj);
        let p = attachment_profile(&g, &h).unwrap();
        let ds = dominate_major(&g, &h, &p, false).unwrap();
        let c = color_major_vertices(&g, &p, &ds).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.colors_used, 2);
    }

    #[test]
    fn skew_instance_both_modes() {
        let adj = vec![(0, 7), (1, 7), (3, 7), (2, 8), (4, 8), (5, 8)];
        let (g, h) = c7_with(2, &adj);
        assert_eq!(shortest_odd_hole(&g).unwrap().len(), 7);
        for improved in [false, true] {
            let (c, r) = color_hole_neighborhood(&g, &h, improved).unwrap();
            assert!(c.is_proper(&g));
            assert!(r.within_bound(), "{r:?}");
        }
    }

    #[test]
    fn improved_mode_with_minor_mix() {
        // Skew pair plus assorted minors around C9.
        let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        edges.extend([(0, 9), (1, 9), (3, 9)]); // major u
        edges.extend([(2, 10), (4, 10), (5, 10)]); // major v
        edges.extend([(6, 11)]); // type 0
        edges.extend([(4, 12), (5, 12)]); // type 1
        edges.extend([(7, 13), (0, 13)]); // type 2 across the seam
        let g = Graph::from_edges(14, &edges).unwrap();
        let h = verify_hole(&g, &(0..9).collect::<Vec<_>>()).unwrap();
        assert_eq!(shortest_odd_hole(&g).unwrap().len(), 9);
        for improved in [false, true] {
            let (c, r) = color_hole_neighborhood(&g, &h, improved).unwrap();
            assert!(c.is_proper(&g));
            assert!(r.within_bound(), "{r:?}");
            assert_eq!(
                c.assignment.len(),
                attachment_profile(&g, &h).unwrap().n_c.len()
            );
        }
    }

    #[test]
    fn union_disjoint_offsets_palettes() {
        let a = Coloring::from_map([(0, 0), (1, 1)].into());
        let b = Coloring::from_map([(2, 0)].into());
        let u = Coloring::union_disjoint(&[a, b]);
        assert_eq!(u.colors_used, 3);
        assert_eq!(u.assignment[&2], 2);
    }
}
