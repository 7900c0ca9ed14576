//! Reference values of `∫_{-1}^{1} f` for the supported integrands.
//!
//! Pure power and power-log families and the Gaussian envelope with an odd
//! integer total exponent have closed forms. Everything else is split at `b`,
//! mapped to `t = |x − b|` on each side and integrated by adaptive bisection
//! with 15-point Gauss panels.

use core::cell::Cell;

use num_traits::Float;

use crate::gauss::compute_rule;
use crate::integrate::adaptive_integral;
use crate::singularity::{Envelope, Family, SingularIntegrand};
use crate::{Error, Result};

const PANEL_ORDER: usize = 15;
const INITIAL_PANELS: usize = 8;
const PANEL_TOL: f64 = 1e-16;
const MAX_LEVELS: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralMethod {
    ClosedForm,
    SplitAdaptive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactIntegral {
    pub value: f64,
    pub method: IntegralMethod,
    pub est_abs_error: f64,
}

/// `∫_0^L t^m dt`.
fn power_antiderivative(m: f64, len: f64) -> f64 {
    len.powf(m + 1.0) / (m + 1.0)
}

/// `∫_0^L t^m log t dt = L^{m+1} (log L/(m+1) − 1/(m+1)²)`.
fn power_log_antiderivative(m: f64, len: f64) -> f64 {
    let q = m + 1.0;
    len.powf(q) * (len.ln() / q - 1.0 / (q * q))
}

/// `∫_0^L t^{2j+1} e^{−t²} dt = ½ j! (1 − e^{−L²} Σ_{i≤j} L^{2i}/i!)`.
fn odd_gaussian_moment(j: u32, len: f64) -> f64 {
    let u = len * len;
    let mut term = 1.0;
    let mut partial = 1.0;
    let mut fact = 1.0;
    for i in 1..=j {
        term *= u / f64::from(i);
        partial += term;
        fact *= f64::from(i);
    }
    // 1 − e^{−u} Σ for small u is a cancellation; the series of the
    // regularised incomplete gamma avoids it.
    let tail = if u < 1.0 {
        let mut t = u.powi(j as i32 + 1) / fact / f64::from(j + 1);
        let mut s = t;
        let mut i = 1;
        while t.abs() > 1e-18 * s.abs() {
            t *= -u * f64::from(j + i) / (f64::from(i) * f64::from(j + i + 1));
            s += t;
            i += 1;
        }
        s
    } else {
        1.0 - (-u).exp() * partial
    };
    0.5 * fact * tail
}

fn combine(right: f64, left: f64, k: u32) -> f64 {
    if k % 2 == 0 {
        right + left
    } else {
        right - left
    }
}

fn closed_form(f: &SingularIntegrand) -> Option<f64> {
    let b = f.b();
    let (r, l) = (1.0 - b, 1.0 + b);
    match (f.family(), f.envelope()) {
        (Family::Power { k, alpha }, None) => {
            let m = f64::from(*k) + alpha;
            Some(combine(power_antiderivative(m, r), power_antiderivative(m, l), *k))
        }
        (Family::PowerLog { k, beta }, None) => {
            let m = f64::from(*k) + beta;
            Some(combine(power_log_antiderivative(m, r), power_log_antiderivative(m, l), *k))
        }
        (Family::Power { k, alpha }, Some(Envelope::Gaussian)) => {
            let m = f64::from(*k) + alpha;
            let odd = m.round() == m && (m as u32) % 2 == 1;
            if !odd {
                return None;
            }
            let j = (m as u32 - 1) / 2;
            Some(combine(odd_gaussian_moment(j, r), odd_gaussian_moment(j, l), *k))
        }
        _ => None,
    }
}

/// Split-at-`b` adaptive integration, regardless of whether a closed form
/// exists.
pub fn split_adaptive(f: &SingularIntegrand) -> Result<ExactIntegral> {
    let rule = compute_rule(PANEL_ORDER)?;
    let b = f.b();
    let failure: Cell<Option<Error>> = Cell::new(None);
    let eval = |x: f64| match f.evaluate_real(x.clamp(-1.0, 1.0)) {
        Ok(v) => v,
        Err(e) => {
            failure.set(Some(e));
            0.0
        }
    };
    let right = adaptive_integral(&rule, 0.0, 1.0 - b, INITIAL_PANELS, PANEL_TOL, MAX_LEVELS, |t| eval(b + t))?;
    let left = adaptive_integral(&rule, 0.0, 1.0 + b, INITIAL_PANELS, PANEL_TOL, MAX_LEVELS, |t| eval(b - t))?;
    if let Some(e) = failure.take() {
        return Err(e);
    }
    let value = right.value + left.value;
    if !value.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(ExactIntegral {
        value,
        method: IntegralMethod::SplitAdaptive,
        est_abs_error: right.est_abs_error + left.est_abs_error,
    })
}

/// Closed form when one is available, split adaptive quadrature otherwise.
pub fn exact_integral(f: &SingularIntegrand) -> Result<ExactIntegral> {
    match closed_form(f) {
        Some(value) => Ok(ExactIntegral {
            value,
            method: IntegralMethod::ClosedForm,
            est_abs_error: 8.0 * f64::EPSILON * value.abs().max(1.0),
        }),
        None => split_adaptive(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_closed_form() {
        let f = SingularIntegrand::power(0.4, 0, 0.5).unwrap();
        let e = exact_integral(&f).unwrap();
        assert_eq!(e.method, IntegralMethod::ClosedForm);
        assert!((e.value - (0.6f64.powf(1.5) + 1.4f64.powf(1.5)) / 1.5).abs() < 1e-15);
        assert!((e.value - 1.414_173_560_5).abs() < 1e-10);
        let f = SingularIntegrand::power(0.0, 1, 1.0).unwrap();
        assert!(exact_integral(&f).unwrap().value.abs() < 1e-15);
    }

    #[test]
    fn gaussian_closed_form() {
        let f = SingularIntegrand::power(0.4, 0, 1.0).unwrap().with_envelope(Envelope::Gaussian);
        let e = exact_integral(&f).unwrap();
        assert_eq!(e.method, IntegralMethod::ClosedForm);
        let want = 1.0 - ((-1.96f64).exp() + (-0.36f64).exp()) / 2.0;
        assert!((e.value - want).abs() < 1e-15);
        let a = split_adaptive(&f).unwrap();
        assert!((a.value - want).abs() < 1e-14);
    }

    #[test]
    fn odd_gaussian_moment_branches_agree() {
        for j in 0..4 {
            let lo = odd_gaussian_moment(j, 0.999_999_9);
            let hi = odd_gaussian_moment(j, 1.000_000_1);
            assert!((lo - hi).abs() < 1e-6, "j={j}");
        }
        assert!((odd_gaussian_moment(0, 0.5) - 0.5 * (1.0 - (-0.25f64).exp())).abs() < 1e-16);
    }

    #[test]
    fn log_closed_form_matches_adaptive() {
        let f = SingularIntegrand::power_log(0.4, 0, 1.0).unwrap();
        let c = exact_integral(&f).unwrap();
        let a = split_adaptive(&f).unwrap();
        assert!((c.value - a.value).abs() < 1e-13, "{} {}", c.value, a.value);
        assert!(a.est_abs_error <= 1e-12);
    }

    #[test]
    fn non_odd_gaussian_falls_back() {
        let f = SingularIntegrand::power(0.4, 0, 0.5).unwrap().with_envelope(Envelope::Gaussian);
        assert_eq!(exact_integral(&f).unwrap().method, IntegralMethod::SplitAdaptive);
    }
}
