//! Seeded property campaigns over the structural lemmas, with
//! hypothesis gating, greedy shrinking, and serializable counterexample
//! artifacts.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::attach::{
    ab_gaps, attachment_profile, check_common_neighbor, classify_major_pair,
    common_hole_neighbors, intersect_normal_family, is_normal, AttachmentProfile, FamilyOutcome,
};
use crate::bound::chi_bound_color;
use crate::color::{
    color_circular, color_hole_neighborhood, cross_class_offset_violation, minor_offsets,
    CircularConflict,
};
use crate::dominate::{dominate_major, find_seven_vertex_pattern, hitmajor2_edge, DominateError};
use crate::generate::{generate, GenSpec};
use crate::graph::{Graph, VertexSet};
use crate::hole::shortest_odd_hole;
use crate::oracle::enumerate_odd_holes;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    CycloBound,
    Type0Offsets,
    Type1Offsets,
    Type2Offsets,
    Getgap,
    Abnormal2,
    Commonnbr,
    Stablenormal,
    Stablegap,
    Stablenbrs,
    Antihole,
    Hitmajor2,
    Hitmajor,
    Nbhd21tau,
    Nbhd12tau,
    PeelCertificate,
}

pub const ALL_LEMMAS: [LemmaId; 16] = [
    LemmaId::CycloBound,
    LemmaId::Type0Offsets,
    LemmaId::Type1Offsets,
    LemmaId::Type2Offsets,
    LemmaId::Getgap,
    LemmaId::Abnormal2,
    LemmaId::Commonnbr,
    LemmaId::Stablenormal,
    LemmaId::Stablegap,
    LemmaId::Stablenbrs,
    LemmaId::Antihole,
    LemmaId::Hitmajor2,
    LemmaId::Hitmajor,
    LemmaId::Nbhd21tau,
    LemmaId::Nbhd12tau,
    LemmaId::PeelCertificate,
];

impl LemmaId {
    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::CycloBound => "cyclo-bound",
            LemmaId::Type0Offsets => "type0-offsets",
            LemmaId::Type1Offsets => "type1-offsets",
            LemmaId::Type2Offsets => "type2-offsets",
            LemmaId::Getgap => "getgap",
            LemmaId::Abnormal2 => "abnormal2",
            LemmaId::Commonnbr => "commonnbr",
            LemmaId::Stablenormal => "stablenormal",
            LemmaId::Stablegap => "stablegap",
            LemmaId::Stablenbrs => "stablenbrs",
            LemmaId::Antihole => "antihole",
            LemmaId::Hitmajor2 => "hitmajor2",
            LemmaId::Hitmajor => "hitmajor",
            LemmaId::Nbhd21tau => "nbhd-21tau",
            LemmaId::Nbhd12tau => "nbhd-12tau",
            LemmaId::PeelCertificate => "peel-certificate",
        }
    }

    /// Lemmas whose hypotheses need planted major vertices rather than
    /// the campaign's generic generator.
    fn targeted(&self) -> bool {
        matches!(
            self,
            LemmaId::Abnormal2
                | LemmaId::Commonnbr
                | LemmaId::Stablenormal
                | LemmaId::Stablenbrs
                | LemmaId::Antihole
                | LemmaId::Hitmajor2
        )
    }

    /// Lemmas whose instance is a whole graph (shrinkable); the rest
    /// operate on bare cycles with marker sets or on conflict graphs.
    fn graph_based(&self) -> bool {
        !matches!(
            self,
            LemmaId::CycloBound | LemmaId::Getgap | LemmaId::Stablegap
        )
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<LemmaId, String> {
        ALL_LEMMAS
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown lemma id `{s}`"))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Campaign {
    pub lemma: LemmaId,
    pub gen: GenSpec,
    pub trials: u32,
    pub seed: u64,
    /// Override for the expected cross-class offset table of the
    /// type0/1/2-offsets lemmas; used to validate the shrinker against
    /// an injected bug.
    pub offset_table: Option<Vec<usize>>,
}

impl Campaign {
    pub fn new(lemma: LemmaId, gen: GenSpec, trials: u32, seed: u64) -> Campaign {
        Campaign {
            lemma,
            gen,
            trials,
            seed,
            offset_table: None,
        }
    }

    fn trial_rng(&self, trial: u32) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(
            self.seed
                .wrapping_add((trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Skip(String),
    Fail(String),
}

/// A shrunk, re-runnable counterexample: the graph plus the failed
/// assertion and any lemma-specific detail.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Artifact {
    pub lemma: LemmaId,
    pub trial: u32,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub assertion: String,
    pub detail: serde_json::Value,
    /// Vertex count before shrinking, when shrinking applied.
    pub shrunk_from: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub lemma: LemmaId,
    pub trials: u32,
    pub seed: u64,
    pub passed: u32,
    pub skipped: u32,
    pub failed: u32,
    pub artifacts: Vec<Artifact>,
}

pub fn run_campaign(c: &Campaign) -> Report {
    let mut passed = 0;
    let mut skipped = 0;
    let mut failed = 0;
    let mut artifacts = Vec::new();
    for trial in 0..c.trials {
        let mut rng = c.trial_rng(trial);
        if c.lemma.graph_based() {
            let g = instance(c, &mut rng);
            match eval_graph(c, &g) {
                Outcome::Pass => passed += 1,
                Outcome::Skip(_) => skipped += 1,
                Outcome::Fail(assertion) => {
                    failed += 1;
                    let shrunk = shrink(c, &g);
                    artifacts.push(Artifact {
                        lemma: c.lemma,
                        trial,
                        n: shrunk.n(),
                        edges: shrunk.edges(),
                        assertion,
                        detail: serde_json::Value::Null,
                        shrunk_from: (shrunk.n() < g.n()).then_some(g.n()),
                    });
                }
            }
        } else {
            match eval_structured(c.lemma, &mut rng) {
                Outcome::Pass => passed += 1,
                Outcome::Skip(_) => skipped += 1,
                Outcome::Fail(assertion) => {
                    failed += 1;
                    artifacts.push(Artifact {
                        lemma: c.lemma,
                        trial,
                        n: 0,
                        edges: Vec::new(),
                        assertion,
                        detail: serde_json::Value::Null,
                        shrunk_from: None,
                    });
                }
            }
        }
    }
    Report {
        lemma: c.lemma,
        trials: c.trials,
        seed: c.seed,
        passed,
        skipped,
        failed,
        artifacts,
    }
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

fn instance(c: &Campaign, rng: &mut ChaCha8Rng) -> Graph {
    if c.lemma.targeted() {
        planted_majors(rng)
    } else {
        let seed = rng.gen::<u64>();
        generate(&c.gen, seed).expect("campaign generator validated")
    }
}

/// Plants an odd cycle plus a few vertices whose cycle attachments are
/// random normal sets of size >= 5, so the major-vertex hypotheses of
/// the pairwise lemmas are actually reachable.
fn planted_majors(rng: &mut ChaCha8Rng) -> Graph {
    let l = [7, 9, 11][rng.gen_range(0..3)];
    let k = rng.gen_range(2..=3);
    let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    for e in 0..k {
        let v = l + e;
        let pos = random_normal_set(rng, l, 5);
        edges.extend(pos.iter().map(|&p| (p, v)));
    }
    for a in l..l + k {
        for b in a + 1..l + k {
            if rng.gen_bool(0.4) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(l + k, &edges).expect("planted edges in range")
}

/// Rejection-samples a normal position subset of the cycle with at
/// least `min_size` members; falls back to the full set.
fn random_normal_set(rng: &mut ChaCha8Rng, l: usize, min_size: usize) -> BTreeSet<usize> {
    for _ in 0..60 {
        let a: BTreeSet<usize> = (0..l).filter(|_| rng.gen_bool(0.6)).collect();
        if a.len() >= min_size && is_normal(l, &a) {
            return a;
        }
    }
    (0..l).collect()
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluates a graph-based lemma on `g`. Hypotheses are re-verified here
/// (including hole minimality, which holds by construction since the
/// hole comes from the shortest-odd-hole search), so the generator can
/// be arbitrary; unusable instances are skipped, never passed.
fn eval_graph(c: &Campaign, g: &Graph) -> Outcome {
    let Some(hole) = shortest_odd_hole(g) else {
        return Outcome::Skip("no odd hole".into());
    };
    let profile = match attachment_profile(g, &hole) {
        Ok(p) => p,
        Err(e) => return Outcome::Skip(format!("profile: {e}")),
    };
    match c.lemma {
        LemmaId::Type0Offsets | LemmaId::Type1Offsets | LemmaId::Type2Offsets => {
            let t = match c.lemma {
                LemmaId::Type0Offsets => 0,
                LemmaId::Type1Offsets => 1,
                _ => 2,
            };
            let default = minor_offsets(t).to_vec();
            let table = c.offset_table.as_deref().unwrap_or(&default);
            match cross_class_offset_violation(g, &profile, t, table) {
                None => Outcome::Pass,
                Some((u, v, d)) => Outcome::Fail(format!(
                    "type-{t} cross-class edge {u}-{v} at offset {d}, expected {table:?}"
                )),
            }
        }
        LemmaId::Abnormal2 => {
            let mut any = false;
            for (u, v) in nonadjacent_major_pairs(g, &profile) {
                let cl = match classify_major_pair(g, &hole, u, v) {
                    Ok(cl) => cl,
                    Err(_) => continue,
                };
                any = true;
                if !cl.any() {
                    return Outcome::Fail(format!(
                        "all four bullets fail for major pair ({u},{v})"
                    ));
                }
            }
            gate(any, "no nonadjacent major pair")
        }
        LemmaId::Commonnbr => {
            let majors = &profile.major;
            if majors.len() < 2 {
                return Outcome::Skip("fewer than two major vertices".into());
            }
            for (i, &u) in majors.iter().enumerate() {
                for &v in &majors[i + 1..] {
                    if !check_common_neighbor(g, &hole, u, v).holds() {
                        return Outcome::Fail(format!(
                            "no adjacency, skew pair, or common hole-neighbor for ({u},{v})"
                        ));
                    }
                }
            }
            Outcome::Pass
        }
        LemmaId::Stablenormal => {
            let l = hole.len();
            let mut any = false;
            for (u, v) in nonadjacent_major_pairs(g, &profile) {
                let a = profile.positions_set(u);
                let b = profile.positions_set(v);
                if a.len() < 5 || b.len() < 5 {
                    continue;
                }
                any = true;
                let gaps = ab_gaps(l, &a, &b).expect("non-empty major attachments");
                if let Some(gp) = gaps.iter().find(|gp| gp.is_odd()) {
                    return Outcome::Fail(format!(
                        "odd (A,B)-gap of length {} for pair ({u},{v})",
                        gp.length
                    ));
                }
            }
            gate(any, "no qualifying nonadjacent pair with >=5 neighbors")
        }
        LemmaId::Stablenbrs => {
            let xs = stable_big_majors(g, &profile);
            if xs.len() < 2 {
                return Outcome::Skip("no stable major set of size >= 2".into());
            }
            let common = common_hole_neighbors(g, &hole, &xs);
            if is_normal(hole.len(), &common) {
                Outcome::Pass
            } else {
                Outcome::Fail(format!(
                    "common neighborhood {common:?} of stable set {xs:?} not normal"
                ))
            }
        }
        LemmaId::Antihole => {
            let Some((z, xs)) = antihole_hypotheses(g, &profile) else {
                return Outcome::Skip("hypotheses not satisfiable".into());
            };
            let mut all = xs.clone();
            all.push(z);
            let common = common_hole_neighbors(g, &hole, &all);
            if is_normal(hole.len(), &common) {
                return Outcome::Skip("common neighborhood is normal".into());
            }
            if xs.len() < 2 {
                return Outcome::Skip("X too small for an adjacent pair".into());
            }
            match find_seven_vertex_pattern(g, &hole, z, &xs) {
                Some(_) => Outcome::Pass,
                None => Outcome::Fail(format!(
                    "no seven-vertex pattern for z={z}, X={xs:?} with non-normal common set"
                )),
            }
        }
        LemmaId::Hitmajor2 => {
            let Some((z, xs)) = antihole_hypotheses(g, &profile) else {
                return Outcome::Skip("hypotheses not satisfiable".into());
            };
            match hitmajor2_edge(g, &hole, z, &xs, false) {
                Ok(_) => Outcome::Pass,
                Err(DominateError::Precondition(p)) => Outcome::Skip(p),
                Err(DominateError::Counterexample(msg)) => Outcome::Fail(msg),
            }
        }
        LemmaId::Hitmajor => match dominate_major(g, &hole, &profile, false) {
            Ok(_) => Outcome::Pass,
            Err(DominateError::Precondition(p)) => Outcome::Skip(p),
            Err(DominateError::Counterexample(msg)) => Outcome::Fail(msg),
        },
        LemmaId::Nbhd21tau | LemmaId::Nbhd12tau => {
            let improved = c.lemma == LemmaId::Nbhd12tau;
            match color_hole_neighborhood(g, &hole, improved) {
                Ok((coloring, report)) => {
                    if coloring.is_proper(g) && report.within_bound() {
                        Outcome::Pass
                    } else {
                        Outcome::Fail(format!(
                            "used {} colors against bound {}",
                            report.colors_used, report.bound
                        ))
                    }
                }
                Err(e) => Outcome::Fail(format!("coloring failed: {e}")),
            }
        }
        LemmaId::PeelCertificate => eval_peel(g),
        LemmaId::CycloBound | LemmaId::Getgap | LemmaId::Stablegap => {
            unreachable!("structured lemmas dispatch elsewhere")
        }
    }
}

fn gate(any: bool, reason: &str) -> Outcome {
    if any {
        Outcome::Pass
    } else {
        Outcome::Skip(reason.into())
    }
}

fn nonadjacent_major_pairs(g: &Graph, profile: &AttachmentProfile) -> Vec<(usize, usize)> {
    let majors = &profile.major;
    let mut out = Vec::new();
    for (i, &u) in majors.iter().enumerate() {
        for &v in &majors[i + 1..] {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Greedy stable set of major vertices each with >= 5 hole-neighbors.
fn stable_big_majors(g: &Graph, profile: &AttachmentProfile) -> Vec<usize> {
    let mut xs: Vec<usize> = Vec::new();
    for &v in &profile.major {
        if profile.positions_of(v).len() >= 5 && xs.iter().all(|&u| !g.has_edge(u, v)) {
            xs.push(v);
        }
    }
    xs
}

/// z plus the set X for the edge-recursion hypotheses: all C-major,
/// >= 5 hole-neighbors, distinct from and nonadjacent to z. Picks the z
/// maximizing |X|.
fn antihole_hypotheses(g: &Graph, profile: &AttachmentProfile) -> Option<(usize, Vec<usize>)> {
    let big: Vec<usize> = profile
        .major
        .iter()
        .copied()
        .filter(|&v| profile.positions_of(v).len() >= 5)
        .collect();
    big.iter()
        .map(|&z| {
            let xs: Vec<usize> = big
                .iter()
                .copied()
                .filter(|&x| x != z && !g.has_edge(x, z))
                .collect();
            (z, xs)
        })
        .max_by_key(|(z, xs)| (xs.len(), usize::MAX - z))
}

fn eval_peel(g: &Graph) -> Outcome {
    let (coloring, trace) = match chi_bound_color(g, false) {
        Ok(v) => v,
        Err(e) => return Outcome::Fail(format!("peel failed: {e}")),
    };
    if !coloring.is_proper(g) || coloring.assignment.len() != g.n() {
        return Outcome::Fail("peel coloring improper or partial".into());
    }
    if !trace.rounds_within_bounds() {
        return Outcome::Fail("a peel round exceeded its bound".into());
    }
    let base = VertexSet::from_iter(g.n(), trace.base_vertices.iter().copied());
    let (sub, _) = g.induced_subgraph(&base).expect("base in range");
    if !enumerate_odd_holes(&sub, sub.n()).is_empty() {
        return Outcome::Fail("odd hole left in the peel base".into());
    }
    let covered = trace
        .rounds
        .iter()
        .map(|r| r.neighborhood.len())
        .sum::<usize>()
        + trace
            .components
            .iter()
            .map(|c| c.vertices.len())
            .sum::<usize>()
        + trace.base_vertices.len();
    if covered != g.n() {
        return Outcome::Fail("trace domains do not partition the graph".into());
    }
    Outcome::Pass
}

/// The cycle-and-marker-set lemmas and the circular-conflict bound,
/// whose instances are not plain graphs.
fn eval_structured(lemma: LemmaId, rng: &mut ChaCha8Rng) -> Outcome {
    match lemma {
        LemmaId::CycloBound => {
            let n = rng.gen_range(3..=12usize);
            let max_off = 5.min(n - 1);
            let offsets: BTreeSet<usize> = (1..=max_off).filter(|_| rng.gen_bool(0.5)).collect();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let d = j - i;
                    if (offsets.contains(&d) || offsets.contains(&(n - d))) && rng.gen_bool(0.7) {
                        edges.push((i, j));
                    }
                }
            }
            let cc = CircularConflict::new(n, offsets.clone(), &edges)
                .expect("edges built from the offset set");
            let coloring = color_circular(&cc);
            let k = Graph::from_edges(n, &edges).expect("indices in range");
            if coloring.is_proper(&k) && coloring.colors_used <= 2 * offsets.len() + 1 {
                Outcome::Pass
            } else {
                Outcome::Fail(format!(
                    "n={n} offsets={offsets:?}: {} colors against {}",
                    coloring.colors_used,
                    2 * offsets.len() + 1
                ))
            }
        }
        LemmaId::Getgap => {
            let l = 2 * rng.gen_range(2..=7usize) + 1; // odd, 5..=15
            let (Some(a), Some(b)) = (try_normal(rng, l), try_normal(rng, l)) else {
                return Outcome::Skip("no normal marker sets sampled".into());
            };
            let gaps = ab_gaps(l, &a, &b).expect("non-empty sets");
            for p in gaps.iter().filter(|p| p.is_odd()) {
                for q in gaps.iter().filter(|q| !q.is_odd()) {
                    let pv: BTreeSet<usize> = p.positions(l).into_iter().collect();
                    if q.positions(l).iter().any(|x| pv.contains(x)) {
                        return Outcome::Fail(format!(
                            "l={l} A={a:?} B={b:?}: odd gap at {} meets even gap at {}",
                            p.start, q.start
                        ));
                    }
                }
            }
            let inter: BTreeSet<usize> = a.intersection(&b).copied().collect();
            if !is_normal(l, &inter) {
                let odd = gaps.iter().any(|p| p.is_odd());
                let even = gaps.iter().any(|p| !p.is_odd());
                if !(odd && even) {
                    return Outcome::Fail(format!(
                        "l={l} A={a:?} B={b:?}: intersection abnormal but gap parities missing"
                    ));
                }
            }
            Outcome::Pass
        }
        LemmaId::Stablegap => {
            let l = 2 * rng.gen_range(2..=6usize) + 1; // odd, 5..=13
            let k = rng.gen_range(2..=4usize);
            let mut sets = Vec::new();
            for _ in 0..k {
                match try_normal(rng, l) {
                    Some(s) => sets.push(s),
                    None => return Outcome::Skip("no normal set sampled".into()),
                }
            }
            match intersect_normal_family(l, &sets) {
                FamilyOutcome::Normal(_) => Outcome::Pass,
                FamilyOutcome::PreconditionViolated(p) => Outcome::Skip(p),
                FamilyOutcome::Counterexample { intersection } => Outcome::Fail(format!(
                    "l={l} sets={sets:?}: intersection {intersection:?} not normal"
                )),
            }
        }
        _ => unreachable!("graph-based lemmas dispatch elsewhere"),
    }
}

fn try_normal(rng: &mut ChaCha8Rng, l: usize) -> Option<BTreeSet<usize>> {
    for _ in 0..40 {
        let a: BTreeSet<usize> = (0..l).filter(|_| rng.gen_bool(0.5)).collect();
        if !a.is_empty() && is_normal(l, &a) {
            return Some(a);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Shrinking
// ---------------------------------------------------------------------------

/// Greedy descent: repeatedly try deleting a vertex, then an edge,
/// keeping any move after which the lemma still fails (hypothesis
/// breakage shows up as Skip and rejects the move). Deterministic.
pub fn shrink(c: &Campaign, g: &Graph) -> Graph {
    let mut cur = g.clone();
    'outer: loop {
        for v in 0..cur.n() {
            let cand = delete_vertex(&cur, v);
            if matches!(eval_graph(c, &cand), Outcome::Fail(_)) {
                cur = cand;
                continue 'outer;
            }
        }
        for (u, v) in cur.edges() {
            let cand = delete_edge(&cur, u, v);
            if matches!(eval_graph(c, &cand), Outcome::Fail(_)) {
                cur = cand;
                continue 'outer;
            }
        }
        return cur;
    }
}

fn delete_vertex(g: &Graph, v: usize) -> Graph {
    let mut keep = g.vertex_set();
    keep.remove(v);
    g.induced_subgraph(&keep).expect("vertex in range").0
}

fn delete_edge(g: &Graph, a: usize, b: usize) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&e| e != (a, b))
        .collect();
    Graph::from_edges(g.n(), &edges).expect("same vertex range")
}
