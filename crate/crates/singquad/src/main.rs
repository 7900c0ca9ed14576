use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use singquad::checks::check_example;
use singquad::{
    describe, example, parse_integrand, report, run_sweep, write_csv, Config, ExampleId, ExampleParams,
    SweepConfig,
};
use singquad_core::{predict, recommend_n, PredictorConfig};

#[derive(Parser)]
#[command(name = "singquad", version, about = "Gauss-Legendre error asymptotics for interior singularities")]
struct Cli {
    /// Flat key = value file; command-line flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct RangeArgs {
    #[arg(long)]
    nmin: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    /// CSV destination; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one of the five reference examples
    Example {
        id: ExampleId,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        k: Option<u32>,
        /// f1 or f2 (example 4)
        #[arg(long)]
        variant: Option<String>,
        #[command(flatten)]
        range: RangeArgs,
        /// Exit nonzero if any check fails
        #[arg(long)]
        check: bool,
    },
    /// Sweep an integrand given as power(b,k,alpha) or powerlog(b,k,beta)
    Sweep {
        #[arg(long)]
        spec: Option<String>,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Leading-term prediction for one n
    Predict {
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        n: usize,
    },
    /// Quadrature sizes ranked by predicted leading coefficient
    Recommend {
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        nmin: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
}

fn predictor_config(cfg: &Config) -> Result<PredictorConfig> {
    let d = PredictorConfig::default();
    Ok(PredictorConfig::new(
        cfg.get("m")?.unwrap_or(d.m),
        cfg.get("panel_points")?.unwrap_or(d.panel_points),
        cfg.get("extend_to_infinity")?.unwrap_or(d.extend_to_infinity),
    )?)
}

fn spec_from(cfg: &Config, flag: Option<String>) -> Result<String> {
    flag.or_else(|| cfg.get_str("spec").map(str::to_string)).ok_or_else(|| anyhow!("no --spec given"))
}

fn sweep_config(cfg: &Config, integrand: singquad_core::SingularIntegrand, range: &RangeArgs) -> Result<SweepConfig> {
    let n_min = range.nmin.or(cfg.get("nmin")?).unwrap_or(10);
    let n_max = range.nmax.or(cfg.get("nmax")?).unwrap_or(600);
    let mut s = SweepConfig::new(integrand).with_range(n_min, n_max);
    s.predictor = predictor_config(cfg)?;
    Ok(s)
}

fn output_path(cfg: &Config, range: &RangeArgs) -> Option<PathBuf> {
    range.out.clone().or_else(|| cfg.get_str("out").map(PathBuf::from))
}

fn sweep_and_write(sweep: &SweepConfig, out: Option<PathBuf>) -> Result<Vec<singquad::ExperimentRecord>> {
    let records = run_sweep(sweep)?;
    match &out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_csv(&records, BufWriter::new(file))?;
            eprint!("{}", report(&records, sweep));
        }
        None => {
            write_csv(&records, io::stdout().lock())?;
            eprint!("{}", report(&records, sweep));
        }
    }
    Ok(records)
}

fn run(cli: Cli) -> Result<bool> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Example { id, alpha, b, k, variant, range, check } => {
            let params = ExampleParams {
                alpha: alpha.or(cfg.get("alpha")?),
                b: b.or(cfg.get("b")?),
                k: k.or(cfg.get("k")?),
                variant: variant.or_else(|| cfg.get_str("variant").map(str::to_string)),
            };
            let f = example(id, &params)?;
            let sweep = sweep_config(&cfg, f.clone(), &range)?;
            let records = sweep_and_write(&sweep, output_path(&cfg, &range))?;
            if !check {
                return Ok(true);
            }
            let mut all = true;
            for c in check_example(id, &f, &records) {
                eprintln!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                all &= c.passed;
            }
            Ok(all)
        }
        Command::Sweep { spec, range } => {
            let f = parse_integrand(&spec_from(&cfg, spec)?)?;
            let sweep = sweep_config(&cfg, f, &range)?;
            sweep_and_write(&sweep, output_path(&cfg, &range))?;
            Ok(true)
        }
        Command::Predict { spec, n } => {
            let f = parse_integrand(&spec_from(&cfg, spec)?)?;
            let p = predict(&f, n, &predictor_config(&cfg)?)?;
            let mut out = io::stdout().lock();
            writeln!(out, "integrand: {}", describe(&f))?;
            writeln!(out, "n: {n}")?;
            writeln!(out, "leading term: {:.16e}", p.leading)?;
            writeln!(out, "order: n^-{}{}", p.order.order_exponent, if p.order.log_factor { " log n" } else { "" })?;
            writeln!(out, "remainder after correction: n^-{}", p.order.higher_order.exponent)?;
            if let Some(b) = p.bounds {
                writeln!(out, "coefficient bounds: [{:.6}, {:.6}]", b.lower, b.upper)?;
            }
            Ok(true)
        }
        Command::Recommend { spec, nmin, nmax, top } => {
            let f = parse_integrand(&spec_from(&cfg, spec)?)?;
            let n_min = nmin.or(cfg.get("nmin")?).unwrap_or(10);
            let n_max = nmax.or(cfg.get("nmax")?).unwrap_or(600);
            let list = recommend_n(&f, n_min, n_max, &predictor_config(&cfg)?)?;
            let mut out = io::stdout().lock();
            for n in list.iter().take(top) {
                writeln!(out, "{n}")?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
