//! Panel quadrature used internally: geometrically graded Gauss panels for
//! integrals over `[0, Y]` whose integrand is only Hölder continuous (or
//! weakly singular) at `y = 0`, and locally adaptive bisection for the
//! reference integrals.

use alloc::vec::Vec;

use num_traits::Float;

use crate::gauss::QuadratureRule;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Number of dyadic levels so that the innermost panel `[0, Y·2^{-L}]`
/// carries a negligible share of an integrand behaving like `y^{p−1}`.
pub fn grading_levels(p: f64) -> usize {
    let p = p.clamp(0.05, 1.0);
    ((60.0 / p).ceil() as usize).min(1000)
}

/// `∫_0^Y f(y) dy` on the panels `[Y 2^{-j-1}, Y 2^{-j}]`, `j < levels`,
/// plus the innermost `[0, Y 2^{-levels}]`, each with `rule`.
pub fn graded_integral<F: FnMut(f64) -> f64>(rule: &QuadratureRule, y_max: f64, levels: usize, mut f: F) -> f64 {
    let mut total = CompensatedSum::new();
    let mut hi = y_max;
    for _ in 0..levels {
        let lo = 0.5 * hi;
        total.add(rule.integrate_on(lo, hi, &mut f));
        hi = lo;
    }
    total.add(rule.integrate_on(0.0, hi, &mut f));
    total.value()
}

/// Result of [`adaptive_integral`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveResult {
    pub value: f64,
    /// Sum over accepted panels of |coarse − refined|.
    pub est_abs_error: f64,
}

/// Locally adaptive bisection on `[a, b]`: a panel is accepted when its
/// estimate agrees with the sum over its two halves to `panel_tol`.
/// `initial` equal panels seed the process; panels deeper than `max_depth`
/// bisections make the call fail.
pub fn adaptive_integral<F: FnMut(f64) -> f64>(
    rule: &QuadratureRule,
    a: f64,
    b: f64,
    initial: usize,
    panel_tol: f64,
    max_depth: u32,
    mut f: F,
) -> Result<AdaptiveResult> {
    let mut value = CompensatedSum::new();
    let mut err = 0.0;
    let width = (b - a) / initial as f64;
    let mut stack: Vec<(f64, f64, f64, u32)> = Vec::new();
    for i in (0..initial).rev() {
        let lo = a + width * i as f64;
        let hi = if i + 1 == initial { b } else { lo + width };
        let est = rule.integrate_on(lo, hi, &mut f);
        stack.push((lo, hi, est, 0));
    }
    while let Some((lo, hi, coarse, depth)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let left = rule.integrate_on(lo, mid, &mut f);
        let right = rule.integrate_on(mid, hi, &mut f);
        let fine = left + right;
        let diff = (fine - coarse).abs();
        if diff <= panel_tol || diff <= 4.0 * f64::EPSILON * fine.abs() {
            value.add(left);
            value.add(right);
            err += diff;
            continue;
        }
        if depth + 1 >= max_depth {
            return Err(Error::NoConvergence { what: "adaptive panel bisection", iterations: max_depth });
        }
        stack.push((mid, hi, right, depth + 1));
        stack.push((lo, mid, left, depth + 1));
    }
    Ok(AdaptiveResult { value: value.value(), est_abs_error: err })
}
