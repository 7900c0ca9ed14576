//! Plain-text summary of a sweep.

use std::fmt::Write;

use singquad_core::{
    coefficient_bounds, log_envelope, predicted_order, psi0_solve, recommend_n, Family, LogEnvelope,
};

use crate::fit::{fit_envelope_slope, fit_envelope_slope_by};
use crate::integrand::describe;
use crate::sweep::{ExperimentRecord, SweepConfig};

const SLOPE_WINDOW: usize = 10;
const BOUND_TOL: f64 = 0.01;
const BOUND_FROM_N: usize = 100;
const TOP_RECOMMENDED: usize = 10;

/// Records at `n ≥ 100` whose scaled coefficient leaves the bounds by more
/// than 1% of the larger bound.
pub fn envelope_violations(records: &[ExperimentRecord]) -> usize {
    records
        .iter()
        .filter(|r| r.n >= BOUND_FROM_N && !r.at_floor)
        .filter(|r| match r.bounds {
            Some((lo, hi)) => {
                let slack = BOUND_TOL * lo.abs().max(hi.abs());
                r.scaled_coeff < lo - slack || r.scaled_coeff > hi + slack
            }
            None => false,
        })
        .count()
}

fn slope_line(out: &mut String, label: &str, slope: anyhow::Result<f64>) {
    match slope {
        Ok(s) => writeln!(out, "{label}: {s:.3}").unwrap(),
        Err(e) => writeln!(out, "{label}: n/a ({e})").unwrap(),
    }
}

fn affine(slope: f64, intercept: f64) -> String {
    let sign = if intercept < 0.0 { '-' } else { '+' };
    format!("{slope:.3} log n {sign} {:.3}", intercept.abs())
}

pub fn report(records: &[ExperimentRecord], cfg: &SweepConfig) -> String {
    let f = &cfg.integrand;
    let mut out = String::new();
    let order = predicted_order(f);
    writeln!(out, "integrand: {}", describe(f)).unwrap();
    writeln!(out, "n range: {}..={} ({} records)", cfg.n_min, cfg.n_max, records.len()).unwrap();
    let log = if order.log_factor { " (times log n)" } else { "" };
    let rest = if order.higher_order.log_factor { " (times log n)" } else { "" };
    writeln!(out, "predicted order: n^-{}{log}; after correction: n^-{}{rest}", order.order_exponent, order.higher_order.exponent)
        .unwrap();
    slope_line(&mut out, "raw envelope slope", fit_envelope_slope(records, SLOPE_WINDOW));
    slope_line(
        &mut out,
        "corrected envelope slope",
        fit_envelope_slope_by(records, SLOPE_WINDOW, |r| r.corrected_error),
    );
    let floor = records.iter().filter(|r| r.at_floor).count();
    if floor > 0 {
        let first = records.iter().find(|r| r.at_floor).map(|r| r.n).unwrap_or(0);
        writeln!(out, "{floor} records at machine accuracy (first at n = {first})").unwrap();
    }

    match f.family() {
        Family::Power { k, alpha } => {
            if let Ok(b) = coefficient_bounds(f) {
                let kind = if b.attainable { "attained" } else { "strict, not attained" };
                writeln!(out, "liminf/limsup of n^{}R_n: {:.6} / {:.6} ({kind})", order.order_exponent, b.lower, b.upper).unwrap();
            }
            if k % 2 == 0 && f.envelope().is_none() {
                match psi0_solve(*k, *alpha) {
                    Ok(c) => writeln!(out, "vanishing phase: cos Psi0 = {c:.6} (crude rule: cos Psi0 = 0)").unwrap(),
                    Err(e) => writeln!(out, "vanishing phase: n/a ({e})").unwrap(),
                }
            }
        }
        Family::PowerLog { .. } => match log_envelope(f) {
            Ok(LogEnvelope::Affine { upper, lower }) => {
                writeln!(out, "upper envelope: {}", affine(upper.slope, upper.intercept)).unwrap();
                writeln!(out, "lower envelope: {}", affine(lower.slope, lower.intercept)).unwrap();
            }
            Ok(LogEnvelope::Symmetric { bound }) => {
                let p = f.jump_exponent() + 1.0;
                let worst = records.iter().map(|r| r.scaled_coeff.abs()).fold(0.0, f64::max);
                let rel = if worst < bound { "<" } else { ">=" };
                writeln!(out, "max |n^{p}R_n| = {worst:.3} {rel} {bound:.3}").unwrap();
            }
            Err(e) => writeln!(out, "envelope: n/a ({e})").unwrap(),
        },
        Family::GeneralJump(_) => {}
    }
    writeln!(out, "{} envelope violations", envelope_violations(records)).unwrap();

    match recommend_n(f, cfg.n_min, cfg.n_max, &cfg.predictor) {
        Ok(list) => {
            let top: Vec<String> = list.iter().take(TOP_RECOMMENDED).map(usize::to_string).collect();
            writeln!(out, "recommended n: {}", top.join(", ")).unwrap();
        }
        Err(e) => writeln!(out, "recommended n: n/a ({e})").unwrap(),
    }
    out
}
