//! `lightspan` command-line tool.

mod bench;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use lightspan::verify::{verify_all_pairs, VerificationReport};
use lightspan::{construct, run_stream, verify_hop_stretch, verify_stretch, GeneratorSpec, Params, Stats, Variant};

#[derive(Parser)]
#[command(name = "lightspan", version, about = "Light spanners of weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a spanner of a graph.
    Construct(BuildArgs),
    /// Build a spanner with the simulated two-pass streaming algorithm.
    Stream(BuildArgs),
    /// Check the stretch of a spanner against its graph.
    Verify(VerifyArgs),
    /// Write a generated graph.
    Generate(GenerateArgs),
    /// Time construction over a sweep of graph sizes.
    Bench(bench::BenchArgs),
}

#[derive(Args, Clone)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// Graph file (`p n m` header, then `e u v w` lines).
    #[arg(long, group = "source")]
    pub input: Option<PathBuf>,
    /// Generator spec: `uniform:N,M,WMIN,WMAX`, `geometric:N,R` or `grid:ROWS,COLS,JITTER`.
    #[arg(long = "gen", group = "source")]
    pub generator: Option<GeneratorSpec>,
}

#[derive(Args, Clone)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Interval refinement, 1/(2k-1) < q < k.
    #[arg(long, conflicts_with = "epsilon")]
    pub q: Option<f64>,
    /// Accuracy target; sets q = 3/epsilon, clamped into the legal window.
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, default_value_t = 2.0)]
    pub rho: f64,
    #[arg(long, default_value_t = Variant::Basic)]
    pub variant: Variant,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl ParamArgs {
    /// Parameters plus extra stats describing how q was chosen.
    fn resolve(&self) -> Result<(Params, Stats)> {
        let mut notes = Stats::new();
        let q = match (self.q, self.epsilon) {
            (Some(q), _) => q,
            (None, Some(eps)) => {
                let (q, clamped) = Params::q_for_epsilon(self.k, eps)?;
                notes.push_real("params.epsilon", eps).push("params.q_clamped", clamped);
                if clamped {
                    eprintln!("note: q = 3/epsilon = {} clamped to {q}", 3.0 / eps);
                }
                q
            }
            (None, None) => 1.0,
        };
        let params = Params { k: self.k, q, rho: self.rho, variant: self.variant, seed: self.seed };
        params.validate()?;
        Ok((params, notes))
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    params: ParamArgs,
    /// Where to write the spanner as a graph file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write stats; stdout if absent.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Include wall-clock times in the stats.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// Seed for `--gen`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Spanner file; every edge must also appear in the graph.
    #[arg(long)]
    spanner: PathBuf,
    /// Stretch bound to check.
    #[arg(long, conflicts_with_all = ["bound_from", "hops"])]
    bound: Option<f64>,
    /// Read the bound from `spanner.declared_stretch` in a stats file.
    #[arg(long, conflicts_with = "hops")]
    bound_from: Option<PathBuf>,
    /// Check hop stretch 2k-1 instead of weighted stretch.
    #[arg(long, value_name = "K")]
    hops: Option<usize>,
    /// Check every vertex pair rather than every edge.
    #[arg(long, conflicts_with = "hops")]
    all_pairs: bool,
    /// Where to write the report; stdout if absent.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long = "gen")]
    generator: GeneratorSpec,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(args) => cmd_build(args, false),
        Command::Stream(args) => cmd_build(args, true),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Bench(args) => bench::run(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn cmd_build(args: BuildArgs, streaming: bool) -> Result<ExitCode> {
    let (params, notes) = args.params.resolve()?;
    let g = io::load(&args.source, params.seed)?;
    let (edges, mut stats) = if streaming {
        let r = run_stream(&g, &params)?;
        (r.spanner.edges.clone(), r.to_stats(args.timings))
    } else {
        let r = construct(&g, &params)?;
        (r.edges.clone(), r.to_stats(args.timings))
    };
    stats.extend(notes);
    if let Some(path) = &args.out {
        io::write(path, &io::spanner_text(&g, &edges))?;
    }
    io::emit(args.stats.as_deref(), &stats.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let g = io::load(&args.source, args.seed)?;
    let h = io::read_spanner(&args.spanner, &g)?;
    let report = if let Some(k) = args.hops {
        if k == 0 {
            bail!("--hops needs k >= 1");
        }
        verify_hop_stretch(&g, &h, k)
    } else {
        let bound = match (args.bound, &args.bound_from) {
            (Some(b), _) => b,
            (None, Some(path)) => {
                let text = io::read(path)?;
                let stats = Stats::parse(&text).with_context(|| format!("reading {}", path.display()))?;
                stats
                    .get_f64("spanner.declared_stretch")
                    .with_context(|| format!("{} has no spanner.declared_stretch", path.display()))?
            }
            (None, None) => bail!("one of --bound, --bound-from or --hops is required"),
        };
        if bound.is_nan() || bound < 1.0 {
            bail!("the stretch bound must be at least 1, got {bound}");
        }
        if args.all_pairs {
            verify_all_pairs(&g, &h, bound)?
        } else {
            verify_stretch(&g, &h, bound)
        }
    };
    io::emit(args.stats.as_deref(), &report_stats(&report, args.all_pairs).to_string())?;
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn report_stats(r: &VerificationReport, all_pairs: bool) -> Stats {
    let mut s = Stats::new();
    s.push("verify.mode", if all_pairs { "all_pairs" } else { "edges" })
        .push_real("verify.bound", r.bound)
        .push_real("verify.max_observed_stretch", r.max_observed_stretch)
        .push("verify.checked", r.checked)
        .push("verify.violations", r.violations.len())
        .push("verify.borderline", r.borderline)
        .push("verify.passed", r.passed())
        .push("spanner.edges", r.edge_count)
        .push_real("spanner.weight", r.total_weight)
        .push_real("spanner.lightness", r.lightness);
    for (i, v) in r.violations.iter().take(10).enumerate() {
        s.push(
            format!("violation.{i}"),
            format!("{} {} {:?} {:?}", v.u, v.v, v.observed, v.bound),
        );
    }
    s
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode> {
    let g = lightspan::generate(&args.generator, args.seed)?;
    io::emit(args.out.as_deref(), &lightspan::serialize_graph(&g))?;
    Ok(ExitCode::SUCCESS)
}
