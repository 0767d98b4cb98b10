mod config;

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use binedge::catalog::MAX_CATALOG_N;
use binedge::graph::Graph;
use binedge::groebner::gb_from_admissible_paths;
use binedge::io::{parse_edgelist, parse_graph6};
use binedge::primes::spectrum;
use binedge::report::{analyze, AnalysisError, AnalysisReport};
use binedge::verify::{conjecture_sweep, run_suite, Suite, SuiteReport, TheoremCheck, VerifyError};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use config::{Config, Format};

#[derive(Parser)]
#[command(name = "binedge", version, about = "Binomial edge ideals: primes, Gröbner bases, depth and Cohen-Macaulayness")]
struct Cli {
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GraphInput {
    /// Edge-list file, or `-` for standard input.
    input: String,
    /// Read graph6 instead of an edge list.
    #[arg(long)]
    graph6: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, Gröbner basis and depth of one graph.
    Analyze {
        #[command(flatten)]
        graph: GraphInput,
        /// `q` or `p=P`.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check the structure theorems over the graph catalog.
    Verify {
        /// all, gluing, cone, chordal or groebner.
        suite: Suite,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Cones over every connected graph up to `n-max` vertices.
    Sweep {
        #[arg(long)]
        n_max: usize,
    },
    /// Reduced Gröbner basis and initial ideal.
    Gb {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Cut sets, heights, dimension and unmixedness.
    Primes {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

enum Failure {
    /// Exit 1.
    Verification,
    /// Exit 2.
    Input(anyhow::Error),
    /// Exit 3.
    Cap(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::SizeCap { .. } | AnalysisError::Depth(binedge::homology::DepthError::SizeCap { .. }) => {
                Failure::Cap(e.into())
            }
            AnalysisError::Graph(_) => Failure::Input(e.into()),
            AnalysisError::Depth(_) => Failure::Verification,
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Catalog(_) | VerifyError::Depth(binedge::homology::DepthError::SizeCap { .. }) => {
                Failure::Cap(e.into())
            }
            _ => {
                eprintln!("error: {e}");
                Failure::Verification
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut cfg = Config::load(cli.config.as_deref())?;
    if cfg.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build_global()
            .context("starting thread pool")?;
    }
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Analyze { graph, field, format } => {
            if let Some(f) = field {
                cfg.field = f;
            }
            if let Some(f) = format {
                cfg.format = f;
            }
            cfg.validate()?;
            let g = read_graph(&graph)?;
            let reports = analyze(&g, &cfg.analysis_options()?)?;
            write_analysis(&mut out, &cfg, &reports)?;
        }
        Command::Verify { suite, n_max, format } => {
            if let Some(f) = format {
                cfg.format = f;
            }
            check_cap(n_max, cfg.verify_max_n)?;
            let report = run_suite(suite, n_max, &cfg.depth_options()?)?;
            write_verify(&mut out, &cfg, &report)?;
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Sweep { n_max } => {
            check_cap(n_max, cfg.sweep_max_n)?;
            let report = conjecture_sweep(n_max, &cfg.depth_options()?)?;
            write_json(&mut out, &json!({ "config": cfg, "sweep": report }))?;
            if !report.counterexamples.is_empty() {
                return Err(Failure::Verification);
            }
        }
        Command::Gb { graph } => {
            let g = read_graph(&graph)?;
            if g.n() > cfg.groebner_max_n {
                return Err(Failure::Cap(anyhow::anyhow!(
                    "graph has {} vertices, above the Gröbner cap of {}",
                    g.n(),
                    cfg.groebner_max_n
                )));
            }
            let gb = gb_from_admissible_paths(&g).into_reduced();
            writeln!(out, "reduced basis ({} elements):", gb.len()).context("writing output")?;
            for p in gb.generators() {
                writeln!(out, "  {}", p.display(g.n())).context("writing output")?;
            }
            let ini = gb.initial_ideal();
            writeln!(out, "initial ideal ({} generators):", ini.len()).context("writing output")?;
            for m in &ini {
                writeln!(out, "  {}", m.display(g.n())).context("writing output")?;
            }
        }
        Command::Primes { graph, format } => {
            let g = read_graph(&graph)?;
            if g.n() > cfg.max_n {
                return Err(Failure::Cap(anyhow::anyhow!("graph has {} vertices, above the cap of {}", g.n(), cfg.max_n)));
            }
            let s = spectrum(&g).map_err(|e| Failure::Input(e.into()))?;
            if format.unwrap_or(Format::Text) == Format::Json {
                let primes: Vec<Value> = s
                    .min_primes
                    .iter()
                    .map(|p| json!({ "cutSet": p.cut_set.set, "components": p.cut_set.component_count, "height": p.height }))
                    .collect();
                write_json(&mut out, &json!({ "dimension": s.dimension, "n": s.n, "primes": primes, "unmixed": s.unmixed }))?;
            } else {
                writeln!(out, "cut sets ({}):", s.min_primes.len()).context("writing output")?;
                for p in &s.min_primes {
                    writeln!(out, "  {}  c = {}  height = {}", p.cut_set.set, p.cut_set.component_count, p.height)
                        .context("writing output")?;
                }
                writeln!(out, "dimension: {}\nunmixed: {}", s.dimension, s.unmixed).context("writing output")?;
            }
        }
    }
    Ok(())
}

fn check_cap(n_max: usize, cap: usize) -> Result<(), Failure> {
    if n_max == 0 || n_max > cap.min(MAX_CATALOG_N) {
        return Err(Failure::Cap(anyhow::anyhow!(
            "--n-max {n_max} outside 1..={} (raise the cap in the config file, up to {MAX_CATALOG_N})",
            cap.min(MAX_CATALOG_N)
        )));
    }
    Ok(())
}

fn read_graph(input: &GraphInput) -> anyhow::Result<Graph> {
    let text = if input.input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        let p = Path::new(&input.input);
        std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
    };
    let g = if input.graph6 { parse_graph6(&text)? } else { parse_edgelist(&text)? };
    Ok(g)
}

fn write_json(out: &mut impl Write, v: &impl Serialize) -> anyhow::Result<()> {
    // Through `Value` so object keys come out sorted.
    let v = serde_json::to_value(v)?;
    serde_json::to_writer_pretty(&mut *out, &v)?;
    writeln!(out)?;
    Ok(())
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

fn write_analysis(out: &mut impl Write, cfg: &Config, reports: &[AnalysisReport]) -> anyhow::Result<()> {
    match cfg.format {
        Format::Json => write_json(out, &json!({ "config": cfg, "reports": reports })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "graphId", "component", "n", "edgeCount", "cutSets", "dimension", "unmixed", "depth",
                "projectiveDimension", "isCM", "route", "field",
            ])?;
            for r in reports {
                let component = r.component.as_ref().map(|c| c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
                w.write_record([
                    r.graph_id.clone(),
                    opt(component),
                    r.n.to_string(),
                    r.edge_count.to_string(),
                    r.cut_sets.len().to_string(),
                    r.dimension.to_string(),
                    r.unmixed.to_string(),
                    opt(r.depth),
                    opt(r.projective_dimension),
                    opt(r.is_cm),
                    opt(r.route),
                    r.field.clone(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            for r in reports {
                if let Some(c) = &r.component {
                    writeln!(out, "component {c:?}")?;
                }
                writeln!(out, "graph {} (n = {}, {} edges)", r.graph_id, r.n, r.edge_count)?;
                writeln!(out, "  cut sets: {}", r.cut_sets.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "))?;
                writeln!(out, "  heights: {:?}", r.heights)?;
                writeln!(out, "  dimension: {}  unmixed: {}", r.dimension, r.unmixed)?;
                match (r.depth, r.is_cm, r.route) {
                    (Some(d), Some(cm), Some(route)) => writeln!(
                        out,
                        "  depth: {d}  pd: {}  cohen-macaulay: {cm}  route: {route}  field: {}",
                        opt(r.projective_dimension),
                        r.field
                    )?,
                    _ => writeln!(out, "  depth: {}", r.stages["homology"])?,
                }
            }
            Ok(())
        }
    }
}

#[derive(Serialize, Default)]
struct Tally {
    fail: usize,
    pass: usize,
}

fn write_verify(out: &mut impl Write, cfg: &Config, report: &SuiteReport) -> anyhow::Result<()> {
    let mut tally: BTreeMap<&str, Tally> = BTreeMap::new();
    for c in &report.checks {
        let t = tally.entry(c.theorem_id.as_str()).or_default();
        if c.pass {
            t.pass += 1;
        } else {
            t.fail += 1;
        }
    }
    let failures: Vec<&TheoremCheck> = report.failures().collect();
    match cfg.format {
        Format::Json | Format::Csv => write_json(
            out,
            &json!({
                "config": cfg,
                "converseWitnesses": report.converse_witnesses,
                "failed": report.failed,
                "failures": failures,
                "nMax": report.n_max,
                "suite": report.suite,
                "theorems": tally,
                "total": report.total,
            }),
        ),
        Format::Text => {
            for (id, t) in &tally {
                writeln!(out, "{:<24} {:>6} pass {:>4} fail", id, t.pass, t.fail)?;
            }
            for f in failures {
                writeln!(out, "FAIL {}", serde_json::to_string(f)?)?;
            }
            for w in &report.converse_witnesses {
                writeln!(out, "note: CM cone over a non-CM component: {w}")?;
            }
            writeln!(out, "{} checks, {} failed", report.total, report.failed)?;
            Ok(())
        }
    }
}
