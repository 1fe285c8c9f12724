//! Attachment structure of a hole: N(C), the minor/major split with
//! types and anchors, gap decompositions and normality, skew pairs, and
//! the pairwise predicates used by the domination and coloring modules.
//!
//! All cycle bookkeeping is in hole positions `0..L-1`, 0-based modulo L.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::hole::{verify_hole, Hole, HoleRejection};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AttachError {
    #[error("invalid hole: {0}")]
    InvalidHole(#[from] HoleRejection),
    #[error("hole has even length {0}")]
    EvenHole(usize),
    #[error("vertex {0} is not C-major")]
    NotMajor(usize),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),
    #[error("empty marker set")]
    EmptyMarkerSet,
}

// ---------------------------------------------------------------------------
// Gaps on a cycle of length `l`, over position subsets.
// ---------------------------------------------------------------------------

/// An A-gap: a maximal arc of the cycle between consecutive members of A
/// with non-A interior. Runs forward from `ends.0` to `ends.1`; for a
/// singleton A both ends coincide and the gap is the whole cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gap {
    pub ends: (usize, usize),
    pub length: usize,
}

impl Gap {
    pub fn is_odd(&self) -> bool {
        self.length % 2 == 1
    }

    /// Positions on the arc, ends included.
    pub fn positions(&self, l: usize) -> Vec<usize> {
        (0..=self.length).map(|k| (self.ends.0 + k) % l).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapDecomposition {
    pub gaps: Vec<Gap>,
    /// Edges of the cycle with both ends in A, as position pairs (i, i+1).
    pub a_edges: Vec<(usize, usize)>,
}

/// A-gaps of `a` on a cycle of length `l`, in cyclic order, with the
/// A-edges reported separately. Rejects the empty set: the component
/// decomposition degenerates there.
pub fn gaps(l: usize, a: &BTreeSet<usize>) -> Result<GapDecomposition, AttachError> {
    if a.is_empty() {
        return Err(AttachError::EmptyMarkerSet);
    }
    debug_assert!(a.iter().all(|&p| p < l));
    let pos: Vec<usize> = a.iter().copied().collect();
    if pos.len() == 1 {
        // Single marked vertex: one gap traversing the whole cycle.
        return Ok(GapDecomposition {
            gaps: vec![Gap {
                ends: (pos[0], pos[0]),
                length: l,
            }],
            a_edges: Vec::new(),
        });
    }
    let mut gaps = Vec::new();
    let mut a_edges = Vec::new();
    for (i, &p) in pos.iter().enumerate() {
        let q = pos[(i + 1) % pos.len()];
        let d = (q + l - p) % l;
        if d == 1 {
            a_edges.push((p, q));
        } else if d >= 2 {
            gaps.push(Gap {
                ends: (p, q),
                length: d,
            });
        }
    }
    Ok(GapDecomposition { gaps, a_edges })
}

/// A is normal iff it is non-empty and every A-gap is even. The empty
/// set counts as not normal: on an odd cycle its single "gap" is the
/// whole odd cycle.
pub fn is_normal(l: usize, a: &BTreeSet<usize>) -> bool {
    match gaps(l, a) {
        Ok(d) => d.gaps.iter().all(|g| !g.is_odd()),
        Err(_) => false,
    }
}

/// First cycle edge with both ends in `a`, by position. A normal
/// non-empty subset of an odd cycle always has one: the gap lengths sum
/// to an even number, so the number of A-edges is odd.
pub fn first_a_edge(l: usize, a: &BTreeSet<usize>) -> Option<(usize, usize)> {
    (0..l).map(|p| (p, (p + 1) % l)).find(|&(p, q)| a.contains(&p) && a.contains(&q))
}

/// An (A,B)-gap: a path of the cycle whose unique A-vertex and unique
/// B-vertex are its two ends. Runs forward from `start` for `length`
/// edges; `a_end`/`b_end` identify which end lies in which set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbGap {
    pub start: usize,
    pub length: usize,
    pub a_end: usize,
    pub b_end: usize,
}

impl AbGap {
    pub fn is_odd(&self) -> bool {
        self.length % 2 == 1
    }

    pub fn positions(&self, l: usize) -> Vec<usize> {
        (0..=self.length).map(|k| (self.start + k) % l).collect()
    }
}

/// All (A,B)-gaps of `a`, `b` on a cycle of length `l`. Positions in
/// `a ∩ b` yield length-0 gaps.
pub fn ab_gaps(
    l: usize,
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
) -> Result<Vec<AbGap>, AttachError> {
    if a.is_empty() || b.is_empty() {
        return Err(AttachError::EmptyMarkerSet);
    }
    let mut out = Vec::new();
    for start in 0..l {
        for length in 0..l {
            let arc: Vec<usize> = (0..=length).map(|k| (start + k) % l).collect();
            let in_a: Vec<usize> = arc.iter().copied().filter(|p| a.contains(p)).collect();
            let in_b: Vec<usize> = arc.iter().copied().filter(|p| b.contains(p)).collect();
            if in_a.len() != 1 || in_b.len() != 1 {
                continue;
            }
            let (av, bv) = (in_a[0], in_b[0]);
            let end = (start + length) % l;
            if length == 0 {
                out.push(AbGap {
                    start,
                    length,
                    a_end: av,
                    b_end: bv,
                });
            } else if ((av == start && bv == end) || (av == end && bv == start)) && av != bv {
                out.push(AbGap {
                    start,
                    length,
                    a_end: av,
                    b_end: bv,
                });
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Attachment profile
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorInfo {
    pub vertex: usize,
    /// Length of the minimal covering path of C (0, 1 or 2).
    pub minor_type: usize,
    /// Positions of the minimal covering path, in cyclic order. For
    /// type 2 the anchor is centered: `anchor[1]` is the center.
    pub anchor: Vec<usize>,
}

/// Partition of N(C) into minor (typed, anchored) and major vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentProfile {
    pub hole: Hole,
    pub n_c: Vec<usize>,
    pub minors: Vec<MinorInfo>,
    pub major: Vec<usize>,
    /// Hole positions adjacent to each member of N(C), sorted.
    pub hole_positions: BTreeMap<usize, Vec<usize>>,
}

impl AttachmentProfile {
    pub fn minors_of_type(&self, t: usize) -> impl Iterator<Item = &MinorInfo> {
        self.minors.iter().filter(move |m| m.minor_type == t)
    }

    pub fn is_major(&self, v: usize) -> bool {
        self.major.contains(&v)
    }

    pub fn positions_of(&self, v: usize) -> &[usize] {
        &self.hole_positions[&v]
    }

    pub fn positions_set(&self, v: usize) -> BTreeSet<usize> {
        self.hole_positions[&v].iter().copied().collect()
    }
}

pub fn hole_neighbor_positions(g: &Graph, hole: &Hole, v: usize) -> Vec<usize> {
    (0..hole.len())
        .filter(|&p| g.has_edge(v, hole.vertex_at(p)))
        .collect()
}

/// Classifies every vertex of N(C) as minor (with type and anchor) or
/// major. `hole` must be a valid odd hole of `g`.
pub fn attachment_profile(g: &Graph, hole: &Hole) -> Result<AttachmentProfile, AttachError> {
    let hole = verify_hole(g, hole.vertices())?;
    if !hole.is_odd() {
        return Err(AttachError::EvenHole(hole.len()));
    }
    let l = hole.len();
    let on_hole = hole.vertex_bitset(g.n());
    let mut n_c = Vec::new();
    let mut minors = Vec::new();
    let mut major = Vec::new();
    let mut hole_positions = BTreeMap::new();
    for v in 0..g.n() {
        if on_hole.contains(v) {
            continue;
        }
        let pos = hole_neighbor_positions(g, &hole, v);
        if pos.is_empty() {
            continue;
        }
        n_c.push(v);
        match minimal_covering_path(l, &pos) {
            Some((t, anchor)) => minors.push(MinorInfo {
                vertex: v,
                minor_type: t,
                anchor,
            }),
            None => major.push(v),
        }
        hole_positions.insert(v, pos);
    }
    Ok(AttachmentProfile {
        hole,
        n_c,
        minors,
        major,
        hole_positions,
    })
}

/// Minimal path of C of length <= 2 covering `pos`, as (type, anchor
/// positions), or None if the vertex is major. The anchor is the minimal
/// covering path itself, which is unique on holes of length >= 5.
fn minimal_covering_path(l: usize, pos: &[usize]) -> Option<(usize, Vec<usize>)> {
    let set: BTreeSet<usize> = pos.iter().copied().collect();
    for t in 0..=2usize.min(l - 1) {
        for s in 0..l {
            let window: Vec<usize> = (0..=t).map(|k| (s + k) % l).collect();
            let covers = set.iter().all(|p| window.contains(p));
            // Minimality: both path ends must be hole-neighbors.
            if covers && set.contains(&s) && set.contains(&((s + t) % l)) {
                return Some((t, window));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Skew pairs
// ---------------------------------------------------------------------------

/// Witness for a skew pair: an odd path of C with vertices c_1..c_m in
/// order (m even, m >= 6) such that u is adjacent to exactly
/// {c_1, c_2, c_{m-2}} on C and v to exactly {c_3, c_{m-1}, c_m}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewWitness {
    pub path: Vec<usize>,
    pub u: usize,
    pub v: usize,
    pub u_hits: [usize; 3],
    pub v_hits: [usize; 3],
}

/// Searches all rotations/reflections of C for the skew-pair pattern on
/// (u, v) or (v, u). Both vertices must be C-major.
pub fn is_skew_pair(
    g: &Graph,
    hole: &Hole,
    u: usize,
    v: usize,
) -> Result<Option<SkewWitness>, AttachError> {
    let l = hole.len();
    for &w in &[u, v] {
        let pos = hole_neighbor_positions(g, hole, w);
        if minimal_covering_path(l, &pos).is_some() || pos.is_empty() {
            return Err(AttachError::NotMajor(w));
        }
    }
    if g.has_edge(u, v) {
        return Ok(None);
    }
    let pu: BTreeSet<usize> = hole_neighbor_positions(g, hole, u).into_iter().collect();
    let pv: BTreeSet<usize> = hole_neighbor_positions(g, hole, v).into_iter().collect();
    if pu.len() != 3 || pv.len() != 3 {
        return Ok(None);
    }
    for (x, y, px, py) in [(u, v, &pu, &pv), (v, u, &pv, &pu)] {
        if let Some(w) = find_skew_path(l, px, py, hole, x, y) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn find_skew_path(
    l: usize,
    px: &BTreeSet<usize>,
    py: &BTreeSet<usize>,
    hole: &Hole,
    x: usize,
    y: usize,
) -> Option<SkewWitness> {
    // Paths of C with m vertices: m even, 6 <= m <= l - 1.
    let mut m = 6;
    while m + 1 <= l {
        for start in 0..l {
            for dir in [1isize, -1] {
                let at = |k: usize| -> usize {
                    let off = dir * k as isize;
                    ((start as isize + off).rem_euclid(l as isize)) as usize
                };
                // 1-based c_k is at(k - 1).
                let want_x: BTreeSet<usize> = [at(0), at(1), at(m - 3)].into_iter().collect();
                let want_y: BTreeSet<usize> = [at(2), at(m - 2), at(m - 1)].into_iter().collect();
                if &want_x == px && &want_y == py {
                    let path: Vec<usize> = (0..m).map(|k| hole.vertex_at(at(k))).collect();
                    return Some(SkewWitness {
                        u: x,
                        v: y,
                        u_hits: [path[0], path[1], path[m - 3]],
                        v_hits: [path[2], path[m - 2], path[m - 1]],
                        path,
                    });
                }
            }
        }
        m += 2;
    }
    None
}

/// First skew pair among `majors`, scanning pairs in canonical order.
pub fn find_skew_pair(g: &Graph, hole: &Hole, majors: &[usize]) -> Option<SkewWitness> {
    for (i, &u) in majors.iter().enumerate() {
        for &v in &majors[i + 1..] {
            if let Ok(Some(w)) = is_skew_pair(g, hole, u, v) {
                return Some(w);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Pairwise predicates
// ---------------------------------------------------------------------------

/// Truth vector over the four-bullet disjunction for a nonadjacent
/// C-major pair: at least one entry must hold when C is a shortest odd
/// hole; a fully false vector is a counterexample.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MajorPairClassification {
    pub normal_intersection: bool,
    pub skew_pair: Option<SkewWitness>,
    pub small_overlap: bool,
    pub consecutive_four: bool,
}

impl MajorPairClassification {
    pub fn any(&self) -> bool {
        self.normal_intersection
            || self.skew_pair.is_some()
            || self.small_overlap
            || self.consecutive_four
    }
}

pub fn classify_major_pair(
    g: &Graph,
    hole: &Hole,
    u: usize,
    v: usize,
) -> Result<MajorPairClassification, AttachError> {
    if g.has_edge(u, v) {
        return Err(AttachError::AdjacentPair(u, v));
    }
    let skew = is_skew_pair(g, hole, u, v)?; // also validates majority
    let l = hole.len();
    let a: BTreeSet<usize> = hole_neighbor_positions(g, hole, u).into_iter().collect();
    let b: BTreeSet<usize> = hole_neighbor_positions(g, hole, v).into_iter().collect();
    let inter: BTreeSet<usize> = a.intersection(&b).copied().collect();
    Ok(MajorPairClassification {
        normal_intersection: is_normal(l, &inter),
        skew_pair: skew,
        small_overlap: !inter.is_empty() && a.len().min(b.len()) == 3,
        consecutive_four: has_consecutive_four(l, &a, &b),
    })
}

/// The last bullet of the pairwise classification: a path c_1..c_5 of C
/// with N(u) ∩ C = {c_1..c_4} and N(v) ∩ C = {c_2..c_5}. Both
/// directions are scanned, which also covers the roles swapped.
fn has_consecutive_four(l: usize, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
    if l < 6 {
        return false;
    }
    for start in 0..l {
        for dir in [1isize, -1] {
            let at = |k: usize| -> usize {
                ((start as isize + dir * k as isize).rem_euclid(l as isize)) as usize
            };
            let first_four: BTreeSet<usize> = (0..4).map(at).collect();
            let last_four: BTreeSet<usize> = (1..5).map(at).collect();
            if &first_four == a && &last_four == b {
                return true;
            }
        }
    }
    false
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CommonNeighborCheck {
    pub adjacent: bool,
    pub skew: bool,
    pub common_neighbor: bool,
}

impl CommonNeighborCheck {
    pub fn holds(&self) -> bool {
        self.adjacent || self.skew || self.common_neighbor
    }
}

/// For a C-major pair: adjacent, or a skew pair, or some hole vertex
/// adjacent to both. The disjunction must hold when C is shortest.
pub fn check_common_neighbor(g: &Graph, hole: &Hole, u: usize, v: usize) -> CommonNeighborCheck {
    let adjacent = g.has_edge(u, v);
    let skew = !adjacent && matches!(is_skew_pair(g, hole, u, v), Ok(Some(_)));
    let pu: BTreeSet<usize> = hole_neighbor_positions(g, hole, u).into_iter().collect();
    let pv: BTreeSet<usize> = hole_neighbor_positions(g, hole, v).into_iter().collect();
    CommonNeighborCheck {
        adjacent,
        skew,
        common_neighbor: pu.intersection(&pv).next().is_some(),
    }
}

/// Positions of C adjacent to every vertex of `xs` (all positions when
/// `xs` is empty).
pub fn common_hole_neighbors(g: &Graph, hole: &Hole, xs: &[usize]) -> BTreeSet<usize> {
    (0..hole.len())
        .filter(|&p| xs.iter().all(|&x| g.has_edge(x, hole.vertex_at(p))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyOutcome {
    /// Intersection is normal; its gap decomposition is the evidence.
    Normal(GapDecomposition),
    /// Some hypothesis failed; this is not a counterexample.
    PreconditionViolated(String),
    /// Hypotheses hold but the intersection is not normal.
    Counterexample { intersection: Vec<usize> },
}

/// Checks that the intersection of a family of normal sets with pairwise
/// even (A_i, A_j)-gaps is itself normal.
pub fn intersect_normal_family(l: usize, sets: &[BTreeSet<usize>]) -> FamilyOutcome {
    if sets.is_empty() {
        return FamilyOutcome::PreconditionViolated("empty family".into());
    }
    for (i, a) in sets.iter().enumerate() {
        if !is_normal(l, a) {
            return FamilyOutcome::PreconditionViolated(format!("set {i} is not normal"));
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let gaps = ab_gaps(l, &sets[i], &sets[j]).expect("sets checked non-empty");
            if gaps.iter().any(|gp| gp.is_odd()) {
                return FamilyOutcome::PreconditionViolated(format!(
                    "odd ({i},{j})-gap present"
                ));
            }
        }
    }
    let mut inter = sets[0].clone();
    for s in &sets[1..] {
        inter = inter.intersection(s).copied().collect();
    }
    match gaps(l, &inter) {
        Ok(d) if d.gaps.iter().all(|gp| !gp.is_odd()) => FamilyOutcome::Normal(d),
        _ => FamilyOutcome::Counterexample {
            intersection: inter.into_iter().collect(),
        },
    }
}
