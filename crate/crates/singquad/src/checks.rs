//! Pass/fail checks run by `singquad example <id> --check`.

use anyhow::Result;
use singquad_core::{exact_integral, log_envelope, Family, LogEnvelope, SingularIntegrand};

use crate::examples::ExampleId;
use crate::fit::{fit_envelope_slope, fit_envelope_slope_by, least_squares_slope};
use crate::report::envelope_violations;
use crate::sweep::ExperimentRecord;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Self { name: name.to_string(), passed, detail }
    }
}

/// Slope of `log |R_n|` against `log n` over the records selected by `keep`.
pub fn class_slope<F: Fn(&ExperimentRecord) -> bool>(records: &[ExperimentRecord], keep: F) -> Result<f64> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = records
        .iter()
        .filter(|r| keep(r) && !r.at_floor && r.abs_error > 0.0)
        .map(|r| ((r.n as f64).ln(), r.abs_error.ln()))
        .unzip();
    least_squares_slope(&xs, &ys)
}

/// `unit` is the absolute rounding uncertainty of a single error value; a
/// record only counts if it clears a bound by more than that, scaled by `n^p`.
fn strictly_inside(records: &[ExperimentRecord], unit: f64, p: f64) -> Check {
    let outside = records
        .iter()
        .filter(|r| !r.at_floor)
        .filter(|r| {
            let slack = unit * (r.n as f64).powf(p);
            matches!(r.bounds, Some((lo, hi)) if r.scaled_coeff + slack <= lo || r.scaled_coeff - slack >= hi)
        })
        .count();
    Check::new("strictly inside bounds", outside == 0, format!("{outside} records on or outside"))
}

pub fn check_example(id: ExampleId, f: &SingularIntegrand, records: &[ExperimentRecord]) -> Vec<Check> {
    let mut checks = Vec::new();
    let v = envelope_violations(records);
    checks.push(Check::new("coefficient envelope", v == 0, format!("{v} envelope violations")));
    match id {
        ExampleId::PowerAbs => {
            let p = f.jump_exponent() + 1.0;
            let s = fit_envelope_slope(records, 10);
            let ok = matches!(s, Ok(s) if (s + p).abs() <= 0.15);
            checks.push(Check::new("raw envelope slope", ok, format!("{s:?}, expected -{p} +- 0.15")));
        }
        ExampleId::PowerParity => {
            if let Family::Power { k, .. } = f.family() {
                if k % 2 == 1 {
                    let unit = exact_integral(f).map(|e| e.est_abs_error).unwrap_or(0.0);
                    checks.push(strictly_inside(records, unit, f.jump_exponent() + 1.0));
                }
            }
        }
        ExampleId::RationalAngle => {
            let fast = class_slope(records, |r| r.cos_phase.abs() < 1e-6).ok();
            let slow = class_slope(records, |r| r.cos_phase.abs() >= 1e-6).ok();
            let ok = matches!((fast, slow), (Some(a), Some(b)) if a <= -3.4 && b > -3.0);
            let detail = format!("fast class {fast:?}, others {slow:?}");
            checks.push(Check::new("phase classes", ok, detail));
        }
        ExampleId::Logarithmic => {
            if let Ok(LogEnvelope::Symmetric { bound }) = log_envelope(f) {
                let worst = records.iter().map(|r| r.scaled_coeff.abs()).fold(0.0, f64::max);
                checks.push(Check::new("symmetric bound", worst < bound, format!("max {worst:.4} vs {bound:.4}")));
            }
        }
        ExampleId::GaussianEnvelope => {
            let tail: Vec<ExperimentRecord> = records.iter().filter(|r| r.n >= 50).copied().collect();
            let raw = fit_envelope_slope(&tail, 10);
            let cor = fit_envelope_slope_by(&tail, 10, |r| r.corrected_error);
            let ok_raw = matches!(raw, Ok(s) if (-2.3..=-1.8).contains(&s));
            let ok_cor = matches!(cor, Ok(s) if s <= -2.7);
            checks.push(Check::new("raw slope", ok_raw, format!("{raw:?}, expected in [-2.3, -1.8]")));
            checks.push(Check::new("corrected slope", ok_cor, format!("{cor:?}, expected <= -2.7")));
        }
    }
    checks
}
