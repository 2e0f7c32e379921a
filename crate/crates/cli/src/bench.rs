use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Result;
use clap::Args;
use lightspan::blackbox::greedy_spanner;
use lightspan::{construct, generate, measure, verify_stretch, GeneratorSpec, Params, Variant};

#[derive(Args)]
pub struct BenchArgs {
    /// Vertex counts as powers of two.
    #[arg(long, value_delimiter = ',', default_value = "10,11,12,13")]
    sizes: Vec<u32>,
    /// Edges per vertex.
    #[arg(long, default_value_t = 8)]
    density: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 2.0)]
    q: f64,
    #[arg(long, default_value_t = 2.0)]
    rho: f64,
    /// Variants to run; all three if omitted.
    #[arg(long = "variant")]
    variants: Vec<Variant>,
    /// Timed runs per row; the median is reported.
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Add a greedy spanner baseline at the declared stretch.
    #[arg(long)]
    greedy: bool,
    /// Measure the maximum stretch of each spanner.
    #[arg(long)]
    verify: bool,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn median(mut v: Vec<Duration>) -> Duration {
    v.sort_unstable();
    v[v.len() / 2]
}

fn ms(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

pub fn run(args: BenchArgs) -> Result<ExitCode> {
    let variants = if args.variants.is_empty() { Variant::ALL.to_vec() } else { args.variants.clone() };
    let trials = args.trials.max(1);
    let mut table = String::new();
    let mut header = vec![
        "n", "m", "k", "q", "rho", "variant", "edges", "weight", "lightness", "declared", "max_stretch",
        "simplify_ms", "mst_ms", "backbone_ms", "bucketing_ms", "level0_ms", "levels_ms", "total_ms",
    ];
    if args.greedy {
        header.extend(["greedy_edges", "greedy_lightness", "greedy_ms"]);
    }
    writeln!(table, "{}", header.join("\t"))?;

    for &e in &args.sizes {
        let n = 1usize << e;
        let spec = GeneratorSpec::Uniform { n, m: args.density * n, w_min: 1.0, w_max: 1000.0 };
        let g = generate(&spec, args.seed)?;
        for &variant in &variants {
            let params = Params { k: args.k, q: args.q, rho: args.rho, variant, seed: args.seed };
            params.validate()?;
            let mut runs = Vec::with_capacity(trials);
            for _ in 0..trials {
                runs.push(construct(&g, &params)?);
            }
            let total = median(runs.iter().map(|r| r.times.total).collect());
            let phase = |f: fn(&lightspan::lightsp::PhaseTimes) -> Duration| {
                ms(median(runs.iter().map(|r| f(&r.times)).collect()))
            };
            let r = &runs[0];
            let m = measure(&g, &r.edges)?;
            let max_stretch = if args.verify {
                format!("{:.4}", verify_stretch(&g, &r.edges, r.declared_stretch).max_observed_stretch)
            } else {
                "-".to_string()
            };
            let mut row = vec![
                n.to_string(),
                g.m().to_string(),
                args.k.to_string(),
                args.q.to_string(),
                args.rho.to_string(),
                variant.to_string(),
                m.edge_count.to_string(),
                format!("{:.1}", m.total_weight),
                format!("{:.4}", m.lightness),
                format!("{:.4}", r.declared_stretch),
                max_stretch,
                phase(|t| t.simplify),
                phase(|t| t.mst),
                phase(|t| t.backbone),
                phase(|t| t.bucketing),
                phase(|t| t.level0),
                phase(|t| t.levels),
                ms(total),
            ];
            if args.greedy {
                let started = Instant::now();
                let h = greedy_spanner(&g, r.declared_stretch);
                let elapsed = started.elapsed();
                let gm = measure(&g, &h)?;
                row.extend([gm.edge_count.to_string(), format!("{:.4}", gm.lightness), ms(elapsed)]);
            }
            writeln!(table, "{}", row.join("\t"))?;
        }
    }
    crate::io::emit(args.out.as_deref(), &table)?;
    Ok(ExitCode::SUCCESS)
}
