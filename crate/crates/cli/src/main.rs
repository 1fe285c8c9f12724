//! Command-line front end: generate graphs, find shortest odd holes,
//! classify attachments, build dominating sets, color neighborhoods,
//! run the peel loop, fuzz the lemmas, and re-check certificates.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 counterexample found.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};

use oddhole::attach::attachment_profile;
use oddhole::bound::{chi_bound_color, verify_hypothesis};
use oddhole::cert::Certificate;
use oddhole::color::{color_hole_neighborhood, ColorError};
use oddhole::dominate::{dominate_major, DominateError};
use oddhole::fuzz::{run_campaign, Campaign, LemmaId};
use oddhole::generate::{generate, GenSpec};
use oddhole::graph::Graph;
use oddhole::hole::shortest_odd_hole;
use oddhole::oracle;

#[derive(Parser)]
#[command(name = "oddhole", version, about = "Shortest-odd-hole structure and coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph and write it as DIMACS .col.
    Gen {
        /// Generator spec, e.g. cycle:9, wheel:7, gnp:14:0.3,
        /// planted-hole:16:7:0.25, or atoms joined with `+`.
        #[arg(long)]
        spec: String,
        /// RNG seed; required when the spec is randomized.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Find a shortest odd hole and emit a certificate.
    FindHole(GraphCmd),
    /// Classify N(C) of the shortest odd hole (minor types, majors).
    Classify(GraphCmd),
    /// Construct a dominating set for the C-major vertices.
    Dominate(GraphCmd),
    /// Color N(C) within 21*tau (12*tau with --improved).
    ColorNbhd(GraphCmd),
    /// Peel-loop coloring of the whole graph with its trace.
    ChiBound {
        #[command(flatten)]
        common: GraphCmd,
        /// Also check the no-(c+1)-anticomplete-odd-holes hypothesis.
        #[arg(long)]
        c: Option<usize>,
    },
    /// Run a lemma fuzz campaign; nonzero exit iff a failure is found.
    Fuzz {
        #[arg(long)]
        lemma: LemmaId,
        #[arg(long, default_value = "planted-hole:12:7:0.25")]
        gen: String,
        #[arg(long, default_value_t = 200)]
        trials: u32,
        #[arg(long)]
        seed: Option<u64>,
        /// Directory for the report and counterexample artifacts.
        #[arg(long, default_value = "fuzz-results")]
        results_dir: PathBuf,
    },
    /// Re-verify a certificate against its graph.
    Check {
        cert: PathBuf,
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Args)]
struct GraphCmd {
    /// Input graph in DIMACS .col format.
    graph: PathBuf,
    /// Use the improved (12*tau / five-vertex) constructions.
    #[arg(long)]
    improved: bool,
    /// Certificate output path (stdout if omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successes, everything else is usage.
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            e.print().ok();
            return if benign { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Gen { spec, seed, out } => cmd_gen(&spec, seed, out.as_deref()),
        Cmd::FindHole(c) => cmd_find_hole(&c),
        Cmd::Classify(c) => cmd_classify(&c),
        Cmd::Dominate(c) => cmd_dominate(&c),
        Cmd::ColorNbhd(c) => cmd_color_nbhd(&c),
        Cmd::ChiBound { common, c } => cmd_chi_bound(&common, c),
        Cmd::Fuzz {
            lemma,
            gen,
            trials,
            seed,
            results_dir,
        } => cmd_fuzz(lemma, &gen, trials, seed, &results_dir),
        Cmd::Check { cert, graph } => cmd_check(&cert, &graph),
    }
}

fn cmd_gen(spec: &str, seed: Option<u64>, out: Option<&Path>) -> Result<ExitCode> {
    let spec: GenSpec = spec.parse().map_err(|e| anyhow!("bad spec: {e}"))?;
    let seed = if spec.is_randomized() {
        seed.ok_or_else(|| anyhow!("--seed is required for randomized specs"))?
    } else {
        seed.unwrap_or(0)
    };
    let g = generate(&spec, seed)?;
    emit(out, &g.to_dimacs())?;
    Ok(ExitCode::SUCCESS)
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse_dimacs(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_find_hole(c: &GraphCmd) -> Result<ExitCode> {
    let g = load_graph(&c.graph)?;
    let mut cert = Certificate::new(&g);
    cert.oracle = Some(oracle::report(&g));
    match shortest_odd_hole(&g) {
        Some(h) => {
            eprintln!("shortest odd hole of length {}: {:?}", h.len(), h.vertices());
            cert.hole = Some(h);
        }
        None => eprintln!("no odd hole"),
    }
    emit_cert(c.out.as_deref(), &cert)?;
    Ok(ExitCode::SUCCESS)
}

/// Loads the graph and its shortest odd hole, or reports the hole-free
/// case as a successful no-op certificate.
fn with_hole(c: &GraphCmd) -> Result<Option<(Graph, oddhole::hole::Hole, Certificate)>> {
    let g = load_graph(&c.graph)?;
    match shortest_odd_hole(&g) {
        Some(h) => {
            let mut cert = Certificate::new(&g);
            cert.hole = Some(h.clone());
            Ok(Some((g, h, cert)))
        }
        None => {
            eprintln!("no odd hole; nothing to do");
            emit_cert(c.out.as_deref(), &Certificate::new(&g))?;
            Ok(None)
        }
    }
}

fn cmd_classify(c: &GraphCmd) -> Result<ExitCode> {
    let Some((g, h, mut cert)) = with_hole(c)? else {
        return Ok(ExitCode::SUCCESS);
    };
    let profile = attachment_profile(&g, &h)?;
    eprintln!(
        "|N(C)| = {} ({} minor, {} major)",
        profile.n_c.len(),
        profile.minors.len(),
        profile.major.len()
    );
    cert.profile = Some(profile);
    emit_cert(c.out.as_deref(), &cert)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_dominate(c: &GraphCmd) -> Result<ExitCode> {
    let Some((g, h, mut cert)) = with_hole(c)? else {
        return Ok(ExitCode::SUCCESS);
    };
    let profile = attachment_profile(&g, &h)?;
    match dominate_major(&g, &h, &profile, c.improved) {
        Ok(ds) => {
            eprintln!("{:?} dominating set {:?} (bound {})", ds.case, ds.members, ds.bound);
            cert.profile = Some(profile);
            cert.dominating_set = Some(ds);
            emit_cert(c.out.as_deref(), &cert)?;
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ DominateError::Counterexample(_)) => {
            eprintln!("{e}");
            Ok(ExitCode::from(3))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_color_nbhd(c: &GraphCmd) -> Result<ExitCode> {
    let Some((g, h, mut cert)) = with_hole(c)? else {
        return Ok(ExitCode::SUCCESS);
    };
    match color_hole_neighborhood(&g, &h, c.improved) {
        Ok((coloring, report)) => {
            eprintln!(
                "colored |N(C)| = {} with {} colors (bound {} = {}*tau, tau = {})",
                coloring.assignment.len(),
                report.colors_used,
                report.bound,
                if c.improved { 12 } else { 21 },
                report.tau
            );
            let ok = report.within_bound();
            cert.profile = Some(attachment_profile(&g, &h)?);
            cert.neighborhood_coloring = Some(coloring);
            cert.bound = Some(report);
            emit_cert(c.out.as_deref(), &cert)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
        Err(e @ (ColorError::Counterexample(_) | ColorError::OffsetViolation { .. })) => {
            eprintln!("{e}");
            Ok(ExitCode::from(3))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_chi_bound(c: &GraphCmd, hyp: Option<usize>) -> Result<ExitCode> {
    let g = load_graph(&c.graph)?;
    let (coloring, trace) = chi_bound_color(&g, c.improved)?;
    eprintln!("round  len(C)  |N(C)|  tau  colors  bound  ok");
    for (i, r) in trace.rounds.iter().enumerate() {
        eprintln!(
            "{:5}  {:6}  {:6}  {:3}  {:6}  {:5}  {}",
            i + 1,
            r.hole.len(),
            r.neighborhood.len(),
            r.tau,
            r.colors,
            r.bound,
            r.colors <= r.bound
        );
    }
    eprintln!(
        "components: {}, base: {} vertices / {} colors, total colors {}",
        trace.components.len(),
        trace.base_vertices.len(),
        trace.base_colors,
        trace.total_colors
    );
    if let Some(cval) = hyp {
        eprintln!(
            "hypothesis (no {} pairwise-anticomplete odd holes): {}",
            cval + 1,
            verify_hypothesis(&g, cval)
        );
    }
    let ok = trace.rounds_within_bounds();
    let mut cert = Certificate::new(&g);
    cert.full_coloring = Some(coloring);
    cert.peel = Some(trace);
    emit_cert(c.out.as_deref(), &cert)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn cmd_fuzz(
    lemma: LemmaId,
    gen: &str,
    trials: u32,
    seed: Option<u64>,
    results_dir: &Path,
) -> Result<ExitCode> {
    let seed = seed.ok_or_else(|| anyhow!("--seed is required for fuzz"))?;
    let gen: GenSpec = gen.parse().map_err(|e| anyhow!("bad generator spec: {e}"))?;
    let campaign = Campaign::new(lemma, gen, trials, seed);
    let report = run_campaign(&campaign);
    eprintln!(
        "{lemma}: {} passed, {} skipped, {} failed",
        report.passed, report.skipped, report.failed
    );
    fs::create_dir_all(results_dir)
        .with_context(|| format!("creating {}", results_dir.display()))?;
    let path = results_dir.join(format!("{lemma}-{seed}.json"));
    write_atomic(&path, &serde_json::to_string_pretty(&report)?)?;
    for (i, a) in report.artifacts.iter().enumerate() {
        let ap = results_dir.join(format!("{lemma}-{seed}-counterexample-{i}.json"));
        write_atomic(&ap, &serde_json::to_string_pretty(a)?)?;
        eprintln!("counterexample written to {}", ap.display());
    }
    Ok(if report.failed > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_check(cert_path: &Path, graph_path: &Path) -> Result<ExitCode> {
    let g = load_graph(graph_path)?;
    let text = fs::read_to_string(cert_path)
        .with_context(|| format!("reading {}", cert_path.display()))?;
    let cert: Certificate = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", cert_path.display()))?;
    let failures = cert.verify(&g);
    if failures.is_empty() {
        eprintln!("certificate verified");
        Ok(ExitCode::SUCCESS)
    } else {
        for f in &failures {
            eprintln!("verification failure: {f}");
        }
        Ok(ExitCode::from(2))
    }
}

fn emit_cert(out: Option<&Path>, cert: &Certificate) -> Result<()> {
    emit(out, &serde_json::to_string_pretty(cert)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Write-temp-then-rename so readers never observe partial files.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let name = path
        .file_name()
        .ok_or_else(|| anyhow!("bad output path {}", path.display()))?;
    let tmp = match dir {
        Some(d) => d.join(format!(".{}.tmp", name.to_string_lossy())),
        None => PathBuf::from(format!(".{}.tmp", name.to_string_lossy())),
    };
    fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}
