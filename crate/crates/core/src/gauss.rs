//! n-point Gauss–Legendre rules on `[-1, 1]`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Float;

use crate::legendre::legendre_p_pair;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

pub const MAX_ORDER: usize = 2000;
const MAX_NEWTON_STEPS: u32 = 50;

/// Nodes (increasing) and positive weights of the n-point rule.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    n: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// Apply the rule mapped affinely onto `[a, b]`.
    pub fn integrate_on<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let s: CompensatedSum = self.iter().map(|(x, w)| w * f(mid + half * x)).collect();
        half * s.value()
    }
}

/// Newton's method on `P_n` from `x_j ≈ cos((4j−1)π/(4n+2))`, with weights
/// `ω_j = 2 / ((1 − x_j²) P_n'(x_j)²)`. Only the non-negative nodes are
/// iterated; the rest are mirrored.
pub fn compute_rule(n: usize) -> Result<QuadratureRule> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let nf = n as f64;
    let half = n / 2;
    let mut upper = Vec::with_capacity(half);
    for j in 1..=half {
        let mut x = ((4 * j - 1) as f64 * PI / (4.0 * nf + 2.0)).cos();
        let mut converged = false;
        for _ in 0..MAX_NEWTON_STEPS {
            let (p, dp) = p_and_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 4.0 * f64::EPSILON * x.abs().max(1e-3) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { what: "Gauss node Newton iteration", iterations: MAX_NEWTON_STEPS });
        }
        let (_, dp) = p_and_deriv(n, x);
        upper.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    // `upper` runs from the largest node down.
    for &(x, w) in &upper {
        nodes.push(-x);
        weights.push(w);
    }
    if n % 2 == 1 {
        let (_, dp) = p_and_deriv(n, 0.0);
        nodes.push(0.0);
        weights.push(2.0 / (dp * dp));
    }
    for &(x, w) in upper.iter().rev() {
        nodes.push(x);
        weights.push(w);
    }
    Ok(QuadratureRule { n, nodes, weights })
}

fn p_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let (p, pm1) = legendre_p_pair(n, x);
    let dp = n as f64 * (x * p - pm1) / (x * x - 1.0);
    (p, dp)
}

/// `Σ ω_j f(x_j)` in node order with compensated summation.
pub fn apply_rule<F: FnMut(f64) -> f64>(rule: &QuadratureRule, mut f: F) -> Result<f64> {
    let mut s = CompensatedSum::new();
    for (x, w) in rule.iter() {
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::NonFinite { x });
        }
        s.add(w * fx);
    }
    Ok(s.value())
}

/// `R_n[f] = exact − Σ ω_j f(x_j)`.
pub fn remainder<F: FnMut(f64) -> f64>(rule: &QuadratureRule, f: F, exact: f64) -> Result<f64> {
    Ok(exact - apply_rule(rule, f)?)
}
