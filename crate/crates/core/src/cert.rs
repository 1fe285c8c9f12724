//! Self-contained JSON certificates: everything a pipeline stage
//! proved about a graph, re-verifiable without re-running the stage.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::attach::{attachment_profile, AttachmentProfile};
use crate::bound::PeelTrace;
use crate::color::{BoundReport, Coloring};
use crate::dominate::{dominates, DominatingSet};
use crate::graph::Graph;
use crate::hole::{verify_hole, Hole};
use crate::oracle::{self, OracleReport};

pub const SCHEMA_VERSION: u32 = 1;

/// SHA-256 over the vertex count and the sorted edge list; ties a
/// certificate to one graph independent of the DIMACS file's formatting.
pub fn graph_digest(g: &Graph) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}\n", g.n()));
    for (u, v) in g.edges() {
        h.update(format!("{u} {v}\n"));
    }
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub tool_version: String,
    pub graph_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hole: Option<Hole>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<AttachmentProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominating_set: Option<DominatingSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neighborhood_coloring: Option<Coloring>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full_coloring: Option<Coloring>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peel: Option<PeelTrace>,
}

impl Certificate {
    pub fn new(g: &Graph) -> Certificate {
        Certificate {
            schema: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            graph_digest: graph_digest(g),
            seed: None,
            hole: None,
            profile: None,
            dominating_set: None,
            neighborhood_coloring: None,
            full_coloring: None,
            oracle: None,
            bound: None,
            peel: None,
        }
    }

    /// Re-verifies every recorded verdict against `g`. Returns the list
    /// of failures; empty means the certificate checks out.
    pub fn verify(&self, g: &Graph) -> Vec<String> {
        let mut bad = Vec::new();
        if self.schema != SCHEMA_VERSION {
            bad.push(format!("unsupported schema {}", self.schema));
            return bad;
        }
        if self.graph_digest != graph_digest(g) {
            bad.push("graph digest mismatch".into());
            return bad;
        }
        if let Some(hole) = &self.hole {
            if let Err(e) = verify_hole(g, hole.vertices()) {
                bad.push(format!("hole invalid: {e}"));
            }
        }
        if let Some(profile) = &self.profile {
            match attachment_profile(g, &profile.hole) {
                Ok(fresh) if &fresh == profile => {}
                Ok(_) => bad.push("attachment profile does not match recomputation".into()),
                Err(e) => bad.push(format!("attachment profile: {e}")),
            }
        }
        if let Some(ds) = &self.dominating_set {
            if !dominates(g, &ds.members, &ds.target) {
                bad.push("dominating set fails direct domination scan".into());
            }
            if ds.members.len() > ds.bound {
                bad.push(format!(
                    "dominating set has {} members, bound {}",
                    ds.members.len(),
                    ds.bound
                ));
            }
        }
        for (label, coloring) in [
            ("neighborhood", &self.neighborhood_coloring),
            ("full", &self.full_coloring),
        ] {
            if let Some(c) = coloring {
                if !c.is_proper(g) {
                    bad.push(format!("{label} coloring is improper"));
                }
                let distinct = c
                    .assignment
                    .values()
                    .collect::<std::collections::BTreeSet<_>>()
                    .len();
                if distinct != c.colors_used {
                    bad.push(format!(
                        "{label} coloring reports {} colors but uses {distinct}",
                        c.colors_used
                    ));
                }
            }
        }
        if let Some(c) = &self.full_coloring {
            if c.assignment.len() != g.n() {
                bad.push("full coloring does not cover every vertex".into());
            }
        }
        if let (Some(c), Some(profile)) = (&self.neighborhood_coloring, &self.profile) {
            if c.assignment.len() != profile.n_c.len()
                || profile.n_c.iter().any(|v| !c.assignment.contains_key(v))
            {
                bad.push("neighborhood coloring domain is not N(C)".into());
            }
        }
        if let Some(report) = &self.bound {
            if let Some(c) = &self.neighborhood_coloring {
                if c.colors_used != report.colors_used {
                    bad.push("bound report colors_used disagrees with the coloring".into());
                }
            }
            if report.tau != oracle::max_neighborhood_chromatic(g) {
                bad.push("bound report tau disagrees with the oracle".into());
            }
            if !report.within_bound() {
                bad.push(format!(
                    "bound exceeded: {} > {}",
                    report.colors_used, report.bound
                ));
            }
        }
        if let Some(o) = &self.oracle {
            let fresh = oracle::report(g);
            if o != &fresh {
                bad.push(format!("oracle report mismatch: stored {o:?}, fresh {fresh:?}"));
            }
        }
        if let Some(trace) = &self.peel {
            if !trace.rounds_within_bounds() {
                bad.push("a peel round exceeds its bound".into());
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
                bad.push("peel trace domains do not partition the graph".into());
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::chi_bound_color;
    use crate::color::color_hole_neighborhood;
    use crate::generate::wheel;
    use crate::hole::shortest_odd_hole;

    #[test]
    fn digest_ignores_edge_order() {
        let a = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 3), (0, 1)]).unwrap();
        assert_eq!(graph_digest(&a), graph_digest(&b));
        let c = Graph::from_edges(4, &[(0, 1), (1, 3)]).unwrap();
        assert_ne!(graph_digest(&a), graph_digest(&c));
    }

    #[test]
    fn full_pipeline_certificate_round_trips() {
        let g = wheel(7);
        let hole = shortest_odd_hole(&g).unwrap();
        let profile = attachment_profile(&g, &hole).unwrap();
        let ds = crate::dominate::dominate_major(&g, &hole, &profile, false).unwrap();
        let (coloring, report) = color_hole_neighborhood(&g, &hole, false).unwrap();
        let (full, trace) = chi_bound_color(&g, false).unwrap();
        let mut cert = Certificate::new(&g);
        cert.hole = Some(hole);
        cert.profile = Some(profile);
        cert.dominating_set = Some(ds);
        cert.neighborhood_coloring = Some(coloring);
        cert.bound = Some(report);
        cert.oracle = Some(oracle::report(&g));
        cert.full_coloring = Some(full);
        cert.peel = Some(trace);
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert!(back.verify(&g).is_empty());
    }

    #[test]
    fn tampered_coloring_is_rejected() {
        let g = wheel(7);
        let hole = shortest_odd_hole(&g).unwrap();
        let (coloring, report) = color_hole_neighborhood(&g, &hole, false).unwrap();
        let mut cert = Certificate::new(&g);
        cert.hole = Some(hole);
        let mut broken = coloring;
        // Apex colored like one of its rim neighbors.
        broken.assignment.insert(0, 0);
        broken.assignment.insert(7, 0);
        cert.neighborhood_coloring = Some(broken);
        cert.bound = Some(report);
        assert!(!cert.verify(&g).is_empty());
    }

    #[test]
    fn wrong_graph_digest_detected() {
        let g = wheel(7);
        let cert = Certificate::new(&g);
        let other = wheel(9);
        assert!(cert.verify(&other).iter().any(|m| m.contains("digest")));
    }
}
