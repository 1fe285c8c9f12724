//! Acceptance gate: one test per release criterion, each printing a
//! single pass line (a failing criterion aborts before printing).
//! Run with `--nocapture` to see the lines.

use std::collections::BTreeSet;

use oddhole::attach::attachment_profile;
use oddhole::bound::{chi_bound_color, tau_bound, verify_hypothesis};
use oddhole::color::{color_circular, color_hole_neighborhood, CircularConflict};
use oddhole::dominate::dominate_major;
use oddhole::fuzz::{run_campaign, Campaign, LemmaId};
use oddhole::generate::{cycle, generate, GenSpec};
use oddhole::graph::Graph;
use oddhole::hole::shortest_odd_hole;
use oddhole::oracle;

fn spec(s: &str) -> GenSpec {
    s.parse().unwrap()
}

/// Criterion 1: circular-conflict greedy stays within 2|I|+1 colors on
/// the maximal conflict graph, exhaustively over n <= 11, I subsets of
/// {1..5}.
#[test]
fn criterion_1_circular_bound_exhaustive() {
    for n in 1..=11usize {
        for mask in 0u32..32 {
            let offsets: BTreeSet<usize> =
                (1..=5usize).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let d = j - i;
                    if offsets.contains(&d) || offsets.contains(&(n - d)) {
                        edges.push((i, j));
                    }
                }
            }
            let cc = CircularConflict::new(n, offsets.clone(), &edges).unwrap();
            let coloring = color_circular(&cc);
            assert!(
                coloring.colors_used <= 2 * offsets.len() + 1,
                "n={n} I={offsets:?}: {} colors",
                coloring.colors_used
            );
            let k = Graph::from_edges(n, &edges).unwrap();
            assert!(coloring.is_proper(&k), "n={n} I={offsets:?}");
        }
    }
    println!("criterion 1 (circular conflict bound, exhaustive n<=11): pass");
}

/// Criterion 2: gap parity on random odd cycles with random normal
/// marker sets, 10,000 seeded trials, zero failures.
#[test]
fn criterion_2_gap_parity_suite() {
    let c = Campaign::new(LemmaId::Getgap, spec("cycle:9"), 10_000, 0x6a70);
    let r = run_campaign(&c);
    assert_eq!(r.failed, 0, "first failure: {:?}", r.artifacts.first());
    assert!(r.passed > 5_000, "only {} trials reached hypotheses", r.passed);
    println!("criterion 2 (gap parity, 10k trials): pass");
}

/// Criterion 3: intersections of normal families with pairwise even
/// gaps stay normal, 10,000 seeded trials.
#[test]
fn criterion_3_normal_family_intersection_suite() {
    let c = Campaign::new(LemmaId::Stablegap, spec("cycle:9"), 10_000, 0x9a9);
    let r = run_campaign(&c);
    assert_eq!(r.failed, 0, "first failure: {:?}", r.artifacts.first());
    assert!(r.passed > 1_000, "only {} trials reached hypotheses", r.passed);
    println!("criterion 3 (normal family intersection, 10k trials): pass");
}

/// Criterion 4: the constructed dominating set respects its per-case
/// size bound and a direct scan confirms domination, on >= 500
/// instances whose hole minimality is confirmed by the independent
/// enumeration oracle.
#[test]
fn criterion_4_domination_suite() {
    let specs = [spec("planted-hole:12:7:0.25"), spec("planted-hole:14:9:0.3")];
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 500 {
        let g = generate(&specs[(seed % 2) as usize], seed).unwrap();
        seed += 1;
        let Some(hole) = shortest_odd_hole(&g) else {
            continue;
        };
        // Independent minimality check.
        assert!(
            oracle::enumerate_odd_holes(&g, hole.len().saturating_sub(2)).is_empty(),
            "seed {seed}: hole not shortest"
        );
        let profile = attachment_profile(&g, &hole).unwrap();
        let ds = dominate_major(&g, &hole, &profile, false)
            .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(ds.members.len() <= ds.bound, "seed {seed}");
        assert!(ds.dominates(&g), "seed {seed}");
        checked += 1;
    }
    println!("criterion 4 (domination suite, {checked} instances): pass");
}

/// Criterion 5: neighborhood coloring proper and within 21*tau
/// (standard) and 12*tau (improved) on >= 500 planted-hole instances,
/// tau from the exact oracle.
#[test]
fn criterion_5_neighborhood_bound_end_to_end() {
    let specs = [
        spec("planted-hole:14:7:0.25"),
        spec("planted-hole:16:7:0.2"),
        spec("planted-hole:18:9:0.15"),
    ];
    let mut checked = 0;
    let mut seed = 1000u64;
    while checked < 500 {
        let g = generate(&specs[(seed % 3) as usize], seed).unwrap();
        seed += 1;
        let Some(hole) = shortest_odd_hole(&g) else {
            continue;
        };
        for improved in [false, true] {
            let (coloring, report) = color_hole_neighborhood(&g, &hole, improved)
                .unwrap_or_else(|e| panic!("seed {seed} improved={improved}: {e}"));
            assert!(coloring.is_proper(&g), "seed {seed} improved={improved}");
            assert!(
                report.within_bound(),
                "seed {seed} improved={improved}: {report:?}"
            );
        }
        checked += 1;
    }
    println!("criterion 5 (21tau / 12tau end-to-end, {checked} instances): pass");
}

/// Criterion 6: spot values of the bounding recursion.
#[test]
fn criterion_6_tau_spot_values() {
    assert_eq!(tau_bound(0, 7).value, 0u32.into());
    assert_eq!(tau_bound(1, 7).value, 1u32.into());
    assert_eq!(tau_bound(2, 0).value, 65536u32.into());
    assert_eq!(tau_bound(2, 1).value, 65557u32.into());
    println!("criterion 6 (tau recursion spot values): pass");
}

/// Criterion 7: peel trace on >= 200 sampled graphs: proper total
/// coloring, per-round bounds, odd-hole-free base.
#[test]
fn criterion_7_peel_certificate() {
    let specs = [
        spec("planted-hole:14:7:0.2"),
        spec("gnp:12:0.25"),
        spec("gnp:14:0.2"),
    ];
    let mut checked = 0;
    let mut seed = 5000u64;
    while checked < 200 {
        let g = generate(&specs[(seed % 3) as usize], seed).unwrap();
        seed += 1;
        let (coloring, trace) =
            chi_bound_color(&g, false).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(coloring.is_proper(&g), "seed {seed}");
        assert_eq!(coloring.assignment.len(), g.n(), "seed {seed}");
        assert!(trace.rounds_within_bounds(), "seed {seed}");
        let base = oddhole::graph::VertexSet::from_iter(
            g.n(),
            trace.base_vertices.iter().copied(),
        );
        let (sub, _) = g.induced_subgraph(&base).unwrap();
        assert!(
            oracle::enumerate_odd_holes(&sub, sub.n()).is_empty(),
            "seed {seed}: odd hole left in base"
        );
        checked += 1;
    }
    println!("criterion 7 (peel certificate, {checked} graphs): pass");
}

/// Criterion 8: the two-C5 identity and the anticomplete-family
/// hypothesis checks.
#[test]
fn criterion_8_two_c5_identity() {
    let g = cycle(5).disjoint_union(&cycle(5));
    let r = oracle::report(&g);
    assert_eq!(r.alpha * r.omega, 8);
    assert_eq!(g.n() - 2, 8);
    assert!(!verify_hypothesis(&g, 1));
    assert!(verify_hypothesis(&g, 2));
    println!("criterion 8 (two-C5 oracle identity): pass");
}

/// Criterion 9: the shrinker finds and minimizes a counterexample to a
/// deliberately narrowed type-0 offset table within 10,000 trials.
#[test]
fn criterion_9_shrinker_validation() {
    let mut c = Campaign::new(
        LemmaId::Type0Offsets,
        spec("planted-hole:12:7:0.25"),
        10_000,
        0xbadc0de,
    );
    c.offset_table = Some(vec![1]);
    let r = run_campaign(&c);
    assert!(r.failed > 0, "injected bug never triggered in 10,000 trials");
    let a = &r.artifacts[0];
    assert!(a.n <= 12, "shrunk artifact still has {} vertices", a.n);
    println!(
        "criterion 9 (shrinker validation, counterexample with {} vertices): pass",
        a.n
    );
}
