//! Log-log envelope slopes of error sequences.

use anyhow::{bail, Result};

use crate::sweep::ExperimentRecord;

/// Ordinary least-squares slope of `ys` against `xs`.
pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        bail!("need at least two paired points");
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if sxx == 0.0 {
        bail!("all abscissae coincide");
    }
    Ok(sxy / sxx)
}

/// Slope of `log max|value|` per window of `window` consecutive records
/// against `log` of the window's median `n`. Records at the machine floor
/// are skipped; at least five windows with a nonzero maximum are required.
pub fn fit_envelope_slope_by<F: Fn(&ExperimentRecord) -> f64>(
    records: &[ExperimentRecord],
    window: usize,
    value: F,
) -> Result<f64> {
    if window == 0 {
        bail!("window must be positive");
    }
    let kept: Vec<&ExperimentRecord> = records.iter().filter(|r| !r.at_floor).collect();
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for chunk in kept.chunks(window) {
        if chunk.len() < window {
            break;
        }
        let peak = chunk.iter().map(|r| value(r).abs()).fold(0.0, f64::max);
        if peak > 0.0 && peak.is_finite() {
            let median = chunk[chunk.len() / 2].n as f64;
            xs.push(median.ln());
            ys.push(peak.ln());
        }
    }
    if xs.len() < 5 {
        bail!("degenerate fit: only {} usable windows", xs.len());
    }
    least_squares_slope(&xs, &ys)
}

/// Envelope slope of the raw error.
pub fn fit_envelope_slope(records: &[ExperimentRecord], window: usize) -> Result<f64> {
    fit_envelope_slope_by(records, window, |r| r.abs_error)
}
