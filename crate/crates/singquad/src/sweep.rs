//! Sweeps over the quadrature size and their CSV form.

use std::io::{Read, Write};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use singquad_core::{
    coefficient_bounds, compute_rule, corrected_integral_with_rule, exact_integral, log_envelope, Family,
    LogEnvelope, PredictorConfig, SingularIntegrand,
};

pub const CSV_HEADER: [&str; 9] =
    ["n", "error", "abs_error", "scaled_coeff", "cos_phase", "predicted", "corrected_error", "bound_lo", "bound_hi"];

/// Relative size below which an error is considered at machine accuracy.
const FLOOR: f64 = 1e-15;

/// One row of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentRecord {
    pub n: usize,
    /// `R_n = exact − quadrature`.
    pub error: f64,
    pub abs_error: f64,
    /// `n^{p+1} R_n`, sign preserved.
    pub scaled_coeff: f64,
    /// `cos((2n+1)φ)`
    pub cos_phase: f64,
    pub predicted: f64,
    pub corrected_error: f64,
    /// Bounds on `scaled_coeff`, when the family has them.
    pub bounds: Option<(f64, f64)>,
    /// `abs_error < 1e-15 |exact|`; excluded from slope fits.
    pub at_floor: bool,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub integrand: SingularIntegrand,
    pub n_min: usize,
    pub n_max: usize,
    pub predictor: PredictorConfig,
}

impl SweepConfig {
    /// The `n` range defaults to `10..=600`.
    pub fn new(integrand: SingularIntegrand) -> Self {
        Self { integrand, n_min: 10, n_max: 600, predictor: PredictorConfig::default() }
    }

    pub fn with_range(mut self, n_min: usize, n_max: usize) -> Self {
        self.n_min = n_min;
        self.n_max = n_max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 10 || self.n_min >= self.n_max {
            bail!("need 10 <= nmin < nmax, got nmin={} nmax={}", self.n_min, self.n_max);
        }
        if self.n_max > singquad_core::gauss::MAX_ORDER {
            bail!("nmax={} exceeds {}", self.n_max, singquad_core::gauss::MAX_ORDER);
        }
        Ok(())
    }
}

fn bounds_at(f: &SingularIntegrand, envelope: Option<LogEnvelope>, n: usize) -> Option<(f64, f64)> {
    match f.family() {
        Family::Power { .. } => coefficient_bounds(f).ok().map(|b| (b.lower, b.upper)),
        Family::PowerLog { .. } => match envelope? {
            LogEnvelope::Affine { upper, lower } => Some((lower.at(n as f64), upper.at(n as f64))),
            LogEnvelope::Symmetric { bound } => Some((-bound, bound)),
        },
        Family::GeneralJump(_) => None,
    }
}

/// One record per `n` in `[n_min, n_max]`, computed in parallel and
/// returned in ascending `n`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let f = &cfg.integrand;
    let exact = exact_integral(f)?.value;
    let p = f.jump_exponent();
    let envelope = log_envelope(f).ok();
    (cfg.n_min..=cfg.n_max)
        .into_par_iter()
        .map(|n| {
            let rule = compute_rule(n)?;
            let c = corrected_integral_with_rule(f, &rule, &cfg.predictor)?;
            let error = exact - c.raw;
            Ok(ExperimentRecord {
                n,
                error,
                abs_error: error.abs(),
                scaled_coeff: (n as f64).powf(p + 1.0) * error,
                cos_phase: f.phase(n).cos_phase,
                predicted: c.correction,
                corrected_error: exact - c.corrected,
                bounds: bounds_at(f, envelope, n),
                at_floor: error.abs() < FLOOR * exact.abs(),
            })
        })
        .collect::<Result<Vec<_>>>()
        .with_context(|| format!("sweep over n = {}..={}", cfg.n_min, cfg.n_max))
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let (lo, hi) = match r.bounds {
            Some((lo, hi)) => (fmt(lo), fmt(hi)),
            None => (String::new(), String::new()),
        };
        w.write_record([
            r.n.to_string(),
            fmt(r.error),
            fmt(r.abs_error),
            fmt(r.scaled_coeff),
            fmt(r.cos_phase),
            fmt(r.predicted),
            fmt(r.corrected_error),
            lo,
            hi,
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads records written by [`write_csv`]. The floor flag is not stored and
/// comes back `false`.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<ExperimentRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let header: Vec<String> = rd.headers()?.iter().map(str::to_string).collect();
    if header != CSV_HEADER {
        bail!("unexpected CSV header {header:?}");
    }
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row?;
        let num = |i: usize| -> Result<f64> { Ok(row[i].parse::<f64>()?) };
        let bounds = if row[7].is_empty() { None } else { Some((num(7)?, num(8)?)) };
        out.push(ExperimentRecord {
            n: row[0].parse()?,
            error: num(1)?,
            abs_error: num(2)?,
            scaled_coeff: num(3)?,
            cos_phase: num(4)?,
            predicted: num(5)?,
            corrected_error: num(6)?,
            bounds,
            at_floor: false,
        });
    }
    Ok(out)
}
