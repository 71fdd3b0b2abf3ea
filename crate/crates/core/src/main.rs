use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use c1vem::study::{run_study, StudyConfig};

/// Convergence study for the clamped plate with the C1 virtual element method.
#[derive(Parser, Debug)]
#[command(version)]
struct Args {
    /// key = value file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    degree: Option<String>,
    /// quad | voronoi
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated resolutions, e.g. 8,16,32.
    #[arg(long)]
    levels: Option<String>,
    /// curved | straight
    #[arg(long)]
    mode: Option<String>,
    /// Write the reduced matrix of every level in coordinate format.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    dump_matrix: Option<String>,
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// sine-channel | square | mesh file path (may contain {level})
    #[arg(long)]
    domain: Option<String>,
    /// sine-channel | patch-p2 | patch-p3
    #[arg(long)]
    solution: Option<String>,
    #[arg(long)]
    rho: Option<String>,
    #[arg(long)]
    lloyd: Option<String>,
    /// Voronoi seeds per level n: round(density * n^2).
    #[arg(long)]
    voronoi_density: Option<String>,
    /// averaged | projected
    #[arg(long)]
    load: Option<String>,
}

fn config(args: &Args) -> c1vem::Result<StudyConfig> {
    let mut cfg = match &args.config {
        Some(p) => StudyConfig::load(p)?,
        None => StudyConfig::default(),
    };
    let overrides = [
        ("degree", &args.degree),
        ("family", &args.family),
        ("levels", &args.levels),
        ("mode", &args.mode),
        ("dump-matrix", &args.dump_matrix),
        ("out", &args.out),
        ("seed", &args.seed),
        ("domain", &args.domain),
        ("solution", &args.solution),
        ("rho", &args.rho),
        ("lloyd", &args.lloyd),
        ("voronoi-density", &args.voronoi_density),
        ("load", &args.load),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            cfg.set(key, v)?;
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = config(&args).and_then(|cfg| {
        let report = run_study(&cfg)?;
        print!("{}", report.to_csv());
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
