//! Seeded test-corpus generators and the compact spec grammar.
//!
//! Grammar: atoms are `name:arg:arg`, and `+` joins atoms into a disjoint
//! union, e.g. `gnp:14:0.3`, `planted-hole:16:7:0.25`, `cycle:5+cycle:5`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GenSpec {
    Gnp { n: usize, p: f64 },
    Cycle { n: usize },
    /// Cycle on `n` vertices plus a universal apex (vertex id `n`).
    Wheel { n: usize },
    /// Odd cycle of length `hole_len` on vertices `0..hole_len`, plus
    /// `n - hole_len` attachment vertices. Edges between two cycle
    /// vertices are never sampled, so the planted cycle stays induced.
    PlantedHole { n: usize, hole_len: usize, p: f64 },
    /// Line graph of a gnp(n, p) sample.
    LineGraph { n: usize, p: f64 },
    DisjointUnion(Vec<GenSpec>),
}

impl GenSpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::BadGeneratorSpec(msg));
        match self {
            GenSpec::Gnp { p, .. } | GenSpec::LineGraph { p, .. } => {
                if !(0.0..=1.0).contains(p) {
                    return bad(format!("p={p} not in [0,1]"));
                }
            }
            GenSpec::Cycle { n } | GenSpec::Wheel { n } => {
                if *n < 3 {
                    return bad(format!("cycle length {n} < 3"));
                }
            }
            GenSpec::PlantedHole { n, hole_len, p } => {
                if *hole_len % 2 == 0 || *hole_len < 5 {
                    return bad(format!("planted hole length {hole_len} must be odd and >= 5"));
                }
                if hole_len > n {
                    return bad(format!("hole length {hole_len} exceeds n={n}"));
                }
                if !(0.0..=1.0).contains(p) {
                    return bad(format!("p={p} not in [0,1]"));
                }
            }
            GenSpec::DisjointUnion(parts) => {
                for part in parts {
                    part.validate()?;
                }
            }
        }
        Ok(())
    }

    /// True iff the sample depends on the seed.
    pub fn is_randomized(&self) -> bool {
        match self {
            GenSpec::Gnp { .. } | GenSpec::LineGraph { .. } => true,
            GenSpec::PlantedHole { n, hole_len, .. } => n > hole_len,
            GenSpec::Cycle { .. } | GenSpec::Wheel { .. } => false,
            GenSpec::DisjointUnion(parts) => parts.iter().any(|p| p.is_randomized()),
        }
    }
}

impl FromStr for GenSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let parts: Vec<&str> = s.split('+').collect();
        if parts.len() > 1 {
            let specs = parts
                .iter()
                .map(|p| p.parse())
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(GenSpec::DisjointUnion(specs));
        }
        let bad = || GraphError::BadGeneratorSpec(s.to_string());
        let fields: Vec<&str> = s.split(':').collect();
        let nat = |f: &str| f.parse::<usize>().map_err(|_| bad());
        let prob = |f: &str| f.parse::<f64>().map_err(|_| bad());
        let spec = match fields.as_slice() {
            ["gnp", n, p] => GenSpec::Gnp {
                n: nat(n)?,
                p: prob(p)?,
            },
            ["cycle", n] => GenSpec::Cycle { n: nat(n)? },
            ["wheel", n] => GenSpec::Wheel { n: nat(n)? },
            ["planted-hole", n, l, p] => GenSpec::PlantedHole {
                n: nat(n)?,
                hole_len: nat(l)?,
                p: prob(p)?,
            },
            ["line-graph", n, p] => GenSpec::LineGraph {
                n: nat(n)?,
                p: prob(p)?,
            },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl From<GenSpec> for String {
    fn from(s: GenSpec) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for GenSpec {
    type Error = GraphError;

    fn try_from(s: String) -> Result<GenSpec, GraphError> {
        s.parse()
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Gnp { n, p } => write!(f, "gnp:{n}:{p}"),
            GenSpec::Cycle { n } => write!(f, "cycle:{n}"),
            GenSpec::Wheel { n } => write!(f, "wheel:{n}"),
            GenSpec::PlantedHole { n, hole_len, p } => write!(f, "planted-hole:{n}:{hole_len}:{p}"),
            GenSpec::LineGraph { n, p } => write!(f, "line-graph:{n}:{p}"),
            GenSpec::DisjointUnion(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle edges in range")
}

pub fn wheel(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Graph::from_edges(n + 1, &edges).expect("wheel edges in range")
}

/// Deterministic for fixed `(spec, seed)`.
pub fn generate(spec: &GenSpec, seed: u64) -> Result<Graph, GraphError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample(spec, &mut rng))
}

fn sample(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Graph {
    match *spec {
        GenSpec::Gnp { n, p } => gnp(n, p, rng),
        GenSpec::Cycle { n } => cycle(n),
        GenSpec::Wheel { n } => wheel(n),
        GenSpec::PlantedHole { n, hole_len, p } => planted_hole(n, hole_len, p, rng),
        GenSpec::LineGraph { n, p } => line_graph(&gnp(n, p, rng)),
        GenSpec::DisjointUnion(ref parts) => {
            let mut g = Graph::from_edges(0, &[]).unwrap();
            for part in parts {
                g = g.disjoint_union(&sample(part, rng));
            }
            g
        }
    }
}

fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn planted_hole(n: usize, hole_len: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..hole_len).map(|i| (i, (i + 1) % hole_len)).collect();
    for u in hole_len..n {
        for v in 0..u {
            if rng.gen_bool(p) {
                edges.push((v, u));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn line_graph(g: &Graph) -> Graph {
    let base_edges = g.edges();
    let m = base_edges.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = base_edges[i];
            let (c, d) = base_edges[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(m, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle5() {
        let g = generate(&"cycle:5".parse().unwrap(), 0).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn wheel7_apex_degree() {
        let g = generate(&"wheel:7".parse().unwrap(), 0).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.degree(7), 7);
        assert!((0..7).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn union_of_two_c5() {
        let g = generate(&"cycle:5+cycle:5".parse().unwrap(), 0).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 10);
        assert!(!g.has_edge(0, 5));
    }

    #[test]
    fn planted_cycle_is_chordless() {
        let spec: GenSpec = "planted-hole:16:7:0.4".parse().unwrap();
        for seed in 0..20 {
            let g = generate(&spec, seed).unwrap();
            for i in 0..7usize {
                for j in i + 1..7 {
                    let dist = (j - i).min(i + 7 - j);
                    assert_eq!(g.has_edge(i, j), dist == 1, "seed {seed} pair {i},{j}");
                }
            }
        }
    }

    #[test]
    fn generation_is_reproducible() {
        let spec: GenSpec = "gnp:14:0.3".parse().unwrap();
        assert_eq!(generate(&spec, 42).unwrap(), generate(&spec, 42).unwrap());
        assert_ne!(generate(&spec, 42).unwrap(), generate(&spec, 43).unwrap());
    }

    #[test]
    fn bad_specs_rejected() {
        assert!("gnp:10:1.5".parse::<GenSpec>().is_err());
        assert!("planted-hole:10:6:0.2".parse::<GenSpec>().is_err());
        assert!("planted-hole:10:3:0.2".parse::<GenSpec>().is_err());
        assert!("nope:1".parse::<GenSpec>().is_err());
    }

    #[test]
    fn line_graph_of_path() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let lg = line_graph(&p3);
        assert_eq!(lg.n(), 2);
        assert_eq!(lg.edge_count(), 1);
    }
}
