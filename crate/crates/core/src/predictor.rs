//! Leading-order prediction of the Gauss–Legendre remainder.
//!
//! With `φ = arccos b`, `Ψ = (2n+1)φ − π/2` and `x = 2y/sin φ`,
//!
//! ```text
//! R_n[f] ≈ (1/n) ∫_0^Y Re( [f(b + iy/n)] · K(y) ) dy,
//! K(y) = (i e^{−x} + i cos Ψ + sin Ψ) / (cosh x + cos Ψ) = 2i / (e^{x+iΨ} + 1).
//! ```
//!
//! For pure power and power-log singularities the integral reduces to a real
//! one whose kernel depends on the parity of `k`, which yields closed-form
//! bounds for the scaled coefficient `n^{k+α+1} R_n` over all phases.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use num_traits::Float;

use crate::gauss::{compute_rule, QuadratureRule};
use crate::integrate::{grading_levels, graded_integral};
use crate::singularity::{Family, Phase, SingularIntegrand};
use crate::special::{gamma_fn, zeta_fn};
use crate::{Error, Result};

/// Panel order of the real parity-reduced integrals, deliberately different
/// from the default of the complex path so the two act as cross-checks.
const PARITY_PANEL: usize = 24;
const CROSS_CHECK_TOL: f64 = 1e-3;
/// Beyond this `x` the kernel is below `e^{−700}`.
const X_CUTOFF: f64 = 700.0;
/// `Y = 40 sin φ` puts the truncated tail below `e^{−80}` relative.
const INFINITE_SPAN: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PredictorConfig {
    /// Truncation `Y = M log n` of the `y` integral.
    pub m: f64,
    /// Gauss points per panel.
    pub panel_points: usize,
    /// Integrate closed-form jumps over `[0, ∞)` instead of `[0, M log n]`.
    pub extend_to_infinity: bool,
}

impl Default for PredictorConfig {
    fn default() -> Self {
        Self { m: 10.0, panel_points: 32, extend_to_infinity: true }
    }
}

impl PredictorConfig {
    pub fn new(m: f64, panel_points: usize, extend_to_infinity: bool) -> Result<Self> {
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::Domain { what: "truncation M", value: m });
        }
        if !(4..=200).contains(&panel_points) {
            return Err(Error::InvalidOrder(panel_points));
        }
        Ok(Self { m, panel_points, extend_to_infinity })
    }

    /// Whether `M log n / n` is small, so the contour piece near the cut stays
    /// in the region where the asymptotics hold.
    pub fn is_asymptotic(&self, n: usize) -> bool {
        let nf = n as f64;
        self.m * nf.ln() / nf < 0.5
    }

    fn y_max(&self, f: &SingularIntegrand, n: usize) -> f64 {
        if self.extend_to_infinity && f.is_closed_form() {
            INFINITE_SPAN * f.phi().sin()
        } else {
            self.m * (n.max(2) as f64).ln()
        }
    }
}

/// Kernel pieces for one phase, in forms that stay accurate when
/// `cos Ψ → −1` and `x → 0`.
struct Kernel {
    two_over_s: f64,
    e_ipsi: Complex64,
    /// `1 + e^{iΨ} = 2 cos(Ψ/2) e^{iΨ/2}`
    one_plus: Complex64,
    /// `1 + cos Ψ = 2 cos²(Ψ/2)`
    one_plus_cos: f64,
    sin_psi: f64,
}

impl Kernel {
    fn new(s: f64, psi: f64) -> Self {
        let half = 0.5 * psi;
        let h = half.cos();
        Self {
            two_over_s: 2.0 / s,
            e_ipsi: Complex64::from_polar(1.0, psi),
            one_plus: Complex64::from_polar(2.0 * h, half),
            one_plus_cos: 2.0 * h * h,
            sin_psi: psi.sin(),
        }
    }

    fn from_phase(p: &Phase) -> Self {
        Self::new(p.phi.sin(), p.psi)
    }

    /// Phase with the given `cos Ψ` and `sin Ψ ≥ 0`.
    fn from_cos(s: f64, c: f64) -> Self {
        let h = (0.5 * (1.0 + c)).max(0.0).sqrt();
        let mut k = Self::new(s, c.clamp(-1.0, 1.0).acos());
        k.one_plus_cos = 2.0 * h * h;
        k
    }

    /// `2i / (e^{x+iΨ} + 1)`
    fn complex(&self, y: f64) -> Complex64 {
        let x = self.two_over_s * y;
        if x > X_CUTOFF {
            return Complex64::new(0.0, 0.0);
        }
        let den = self.e_ipsi * x.exp_m1() + self.one_plus;
        Complex64::new(0.0, 2.0) / den
    }

    /// `cosh x + cos Ψ = 2 sinh²(x/2) + 2 cos²(Ψ/2)`
    fn real_den(&self, x: f64) -> f64 {
        let sh = (0.5 * x).sinh();
        2.0 * sh * sh + self.one_plus_cos
    }

    /// `(e^{−x} + cos Ψ) / (cosh x + cos Ψ)`
    fn even(&self, y: f64) -> f64 {
        let x = self.two_over_s * y;
        if x > X_CUTOFF {
            return 0.0;
        }
        ((-x).exp_m1() + self.one_plus_cos) / self.real_den(x)
    }

    /// `sin Ψ / (cosh x + cos Ψ)`
    fn odd(&self, y: f64) -> f64 {
        let x = self.two_over_s * y;
        if x > X_CUTOFF {
            return 0.0;
        }
        self.sin_psi / self.real_den(x)
    }

    fn parity(&self, k: u32, y: f64) -> f64 {
        if k % 2 == 0 {
            self.even(y)
        } else {
            self.odd(y)
        }
    }
}

/// Sign in front of the parity-reduced integral: `−` for `k ≡ 0, 1`,
/// `+` for `k ≡ 2, 3 (mod 4)`.
fn parity_sign(k: u32) -> f64 {
    if k % 4 < 2 {
        -1.0
    } else {
        1.0
    }
}

fn y_integral<F: FnMut(f64) -> f64>(rule: &QuadratureRule, y_max: f64, p: f64, f: F) -> f64 {
    graded_integral(rule, y_max, grading_levels(p), f)
}

fn cross_order(points: usize) -> usize {
    (2 * points / 3).max(3)
}

fn check_agreement(a: f64, b: f64, what: &'static str) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::Overflow);
    }
    let scale = a.abs().max(b.abs());
    if (a - b).abs() > CROSS_CHECK_TOL * scale {
        return Err(Error::NoConvergence { what, iterations: 2 });
    }
    Ok(a)
}

/// Leading term of `R_n[f]` from the complex jump. Works for every family,
/// including envelopes and caller-supplied jumps. Meaningful for `n ≥ 10`.
pub fn leading_term(f: &SingularIntegrand, n: usize, cfg: &PredictorConfig) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let kernel = Kernel::from_phase(&f.phase(n));
    let y_max = cfg.y_max(f, n);
    let p = f.jump_exponent();
    let nf = n as f64;
    let eval = |rule: &QuadratureRule| y_integral(rule, y_max, p, |y| (f.jump(y, n) * kernel.complex(y)).re) / nf;
    let a = eval(&compute_rule(cfg.panel_points)?);
    let b = eval(&compute_rule(cross_order(cfg.panel_points))?);
    check_agreement(a, b, "leading-term panel cross-check")
}

fn power_parts(f: &SingularIntegrand) -> Result<(u32, f64)> {
    match (f.family(), f.envelope()) {
        (Family::Power { k, alpha }, None) => Ok((*k, *alpha)),
        _ => Err(Error::FamilyMismatch("expected a pure power singularity")),
    }
}

fn log_parts(f: &SingularIntegrand) -> Result<(u32, f64)> {
    match (f.family(), f.envelope()) {
        (Family::PowerLog { k, beta }, None) => Ok((*k, *beta)),
        _ => Err(Error::FamilyMismatch("expected a pure power-log singularity")),
    }
}

/// `n^{k+α+1} R_n` for `(x−b)^k |x−b|^α` at the given kernel.
fn power_coefficient(rule: &QuadratureRule, k: u32, alpha: f64, kernel: &Kernel, y_max: f64) -> f64 {
    let p = f64::from(k) + alpha;
    let integral = y_integral(rule, y_max, p, |y| y.powf(p) * kernel.parity(k, y));
    parity_sign(k) * 2.0 * (alpha * FRAC_PI_2).sin() * integral
}

/// Scaled coefficient `n^{k+α+1} · power_case_leading`.
pub fn power_case_coefficient(f: &SingularIntegrand, n: usize, cfg: &PredictorConfig) -> Result<f64> {
    let (k, alpha) = power_parts(f)?;
    let rule = compute_rule(PARITY_PANEL)?;
    let kernel = Kernel::from_phase(&f.phase(n));
    Ok(power_coefficient(&rule, k, alpha, &kernel, cfg.y_max(f, n)))
}

/// Parity-reduced real form of the leading term for pure powers:
/// `∓2 sin(απ/2) n^{−(k+α+1)} ∫ y^{k+α} G(y) dy` with
/// `G = (e^{−x} + cos Ψ)/(cosh x + cos Ψ)` for even `k` and
/// `G = sin Ψ/(cosh x + cos Ψ)` for odd `k`.
pub fn power_case_leading(f: &SingularIntegrand, n: usize, cfg: &PredictorConfig) -> Result<f64> {
    let (k, alpha) = power_parts(f)?;
    let coeff = power_case_coefficient(f, n, cfg)?;
    Ok(coeff / (n as f64).powf(f64::from(k) + alpha + 1.0))
}

/// Extremes of `n^{k+α+1} R_n` over all phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientBounds {
    pub lower: f64,
    pub upper: f64,
    /// Even `k`: the extremes are reached at `cos Ψ = ±1`. Odd `k`: strict.
    pub attainable: bool,
}

impl CoefficientBounds {
    pub fn contains(&self, v: f64, rel_tol: f64) -> bool {
        let slack = rel_tol * self.upper.abs().max(self.lower.abs());
        v >= self.lower - slack && v <= self.upper + slack
    }
}

/// Closed-form bounds in terms of `Γ` and `ζ`. With `p = k+α`, `s = sin φ` and
/// `A = sin(απ/2) s^{p+1} Γ(p+1) ζ(p+1) / 2^{p−1}`:
///
/// * `k ≡ 0`: values `A` at `cos Ψ = −1` and `−(1 − 2^{−p}) A` at `cos Ψ = 1`;
/// * `k ≡ 2`: the negatives of these;
/// * odd `k`: `±|A| (1 − 2^{−(p+1)})`, never attained.
pub fn coefficient_bounds(f: &SingularIntegrand) -> Result<CoefficientBounds> {
    let (k, alpha) = power_parts(f)?;
    let p = f64::from(k) + alpha;
    let s = f.phi().sin();
    let a = (alpha * FRAC_PI_2).sin() * s.powf(p + 1.0) * gamma_fn(p + 1.0)? * zeta_fn(p + 1.0)? / 2f64.powf(p - 1.0);
    if k % 2 == 1 {
        let m = a.abs() * (1.0 - 2f64.powf(-(p + 1.0)));
        return Ok(CoefficientBounds { lower: -m, upper: m, attainable: false });
    }
    let sign = -parity_sign(k);
    let at_minus = sign * a;
    let at_plus = -sign * (1.0 - 2f64.powf(-p)) * a;
    Ok(CoefficientBounds { lower: at_minus.min(at_plus), upper: at_minus.max(at_plus), attainable: true })
}

/// `∫ y^m G`, `∫ y^m log y · G` for the parity kernel `G`.
fn log_moments(rule: &QuadratureRule, k: u32, m: f64, kernel: &Kernel, y_max: f64) -> (f64, f64) {
    let i0 = y_integral(rule, y_max, m, |y| y.powf(m) * kernel.parity(k, y));
    let i1 = y_integral(rule, y_max, m, |y| y.powf(m) * y.ln() * kernel.parity(k, y));
    (i0, i1)
}

/// Leading term for `(x−b)^k |x−b|^β log|x−b|`:
///
/// ```text
/// n^{k+β+1} R_n ≈ ∓ ∫ y^{k+β} [2 sin(βπ/2)(log y − log n) + π cos(βπ/2)] G(y) dy
/// ```
///
/// with `G` the parity kernel of [`power_case_leading`]. For `β = 0` only
/// the `π G` term survives.
pub fn log_case_leading(f: &SingularIntegrand, n: usize, cfg: &PredictorConfig) -> Result<f64> {
    let (k, beta) = log_parts(f)?;
    let m = f64::from(k) + beta;
    let rule = compute_rule(PARITY_PANEL)?;
    let kernel = Kernel::from_phase(&f.phase(n));
    let (i0, i1) = log_moments(&rule, k, m, &kernel, cfg.y_max(f, n));
    let nf = n as f64;
    let (sb, cb) = (beta * FRAC_PI_2).sin_cos();
    let coeff = parity_sign(k) * (2.0 * sb * (i1 - nf.ln() * i0) + PI * cb * i0);
    Ok(coeff / nf.powf(m + 1.0))
}

/// `slope · log n + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineLine {
    pub slope: f64,
    pub intercept: f64,
}

impl AffineLine {
    pub fn at(&self, n: f64) -> f64 {
        self.slope * n.ln() + self.intercept
    }
}

/// Envelope of `n^{k+β+1} R_n` for a power-log singularity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogEnvelope {
    /// Even `k`: the coefficients at `cos Ψ = ±1`, affine in `log n`.
    Affine { upper: AffineLine, lower: AffineLine },
    /// Odd `k`, `β = 0`: `|n^{k+1} R_n| < bound`, strictly.
    Symmetric { bound: f64 },
}

/// Envelope constants for the log family, evaluated from the defining
/// integrals over `[0, ∞)`.
pub fn log_envelope(f: &SingularIntegrand) -> Result<LogEnvelope> {
    let (k, beta) = log_parts(f)?;
    let m = f64::from(k) + beta;
    let s = f.phi().sin();
    let rule = compute_rule(PARITY_PANEL)?;
    let y_max = INFINITE_SPAN * s;
    if k % 2 == 1 {
        if beta != 0.0 {
            return Err(Error::InvalidFamily("odd k with beta != 0 has no phase-free envelope"));
        }
        // max over Ψ of sin Ψ/(cosh x + cos Ψ) is 1/sinh x
        let two_over_s = 2.0 / s;
        let i = y_integral(&rule, y_max, m, |y| y.powf(m) / (two_over_s * y).sinh());
        return Ok(LogEnvelope::Symmetric { bound: PI * i });
    }
    let (sb, cb) = (beta * FRAC_PI_2).sin_cos();
    let sign = parity_sign(k);
    let line = |c: f64| {
        let kernel = Kernel::from_cos(s, c);
        let (i0, i1) = log_moments(&rule, k, m, &kernel, y_max);
        AffineLine { slope: -sign * 2.0 * sb * i0, intercept: sign * (2.0 * sb * i1 + PI * cb * i0) }
    };
    let (a, b) = (line(1.0), line(-1.0));
    let a_above = a.slope > b.slope || (a.slope == b.slope && a.intercept >= b.intercept);
    let (upper, lower) = if a_above { (a, b) } else { (b, a) };
    Ok(LogEnvelope::Affine { upper, lower })
}

/// `∫_0^∞ x^p (e^{−x} + c)/(cosh x + c) dx`, increasing in `c`.
pub fn psi0_integral(p: f64, c: f64) -> Result<f64> {
    let rule = compute_rule(PARITY_PANEL)?;
    // s = 2 makes the kernel variable x = y.
    let kernel = Kernel::from_cos(2.0, c);
    Ok(y_integral(&rule, INFINITE_SPAN * 2.0, p, |x| x.powf(p) * kernel.even(x)))
}

/// `cos Ψ₀`, the phase at which the leading term vanishes for even `k`.
/// Found by bisection on `(−1 + 1e−9, 1)`.
pub fn psi0_solve(k: u32, alpha: f64) -> Result<f64> {
    if k % 2 == 1 {
        return Err(Error::FamilyMismatch("the vanishing phase is defined for even k"));
    }
    let p = f64::from(k) + alpha;
    if !(p > 0.0) {
        return Err(Error::InvalidFamily("k + alpha must be positive"));
    }
    let (mut lo, mut hi) = (-1.0 + 1e-9, 1.0);
    let (f_lo, f_hi) = (psi0_integral(p, lo)?, psi0_integral(p, hi)?);
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(Error::NoSignChange);
    }
    let mut iterations = 0;
    while hi - lo > 1e-15 && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        let v = psi0_integral(p, mid)?;
        if v == 0.0 {
            return Ok(mid);
        }
        if v < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let root = 0.5 * (lo + hi);
    if psi0_integral(p, root)?.abs() > 1e-10 {
        return Err(Error::NoConvergence { what: "vanishing-phase bisection", iterations });
    }
    Ok(root)
}

/// `|n^{p+1} · leading term|` for pure power or power-log families.
fn scaled_magnitude(f: &SingularIntegrand, n: usize, cfg: &PredictorConfig) -> Result<f64> {
    match f.family() {
        Family::Power { .. } => Ok(power_case_coefficient(f, n, cfg)?.abs()),
        Family::PowerLog { .. } => {
            let p = f.jump_exponent();
            Ok((log_case_leading(f, n, cfg)? * (n as f64).powf(p + 1.0)).abs())
        }
        Family::GeneralJump(_) => Err(Error::FamilyMismatch("recommendation needs a power or power-log family")),
    }
}

/// All `n` in `[n_min, n_max]`, best first: ascending by the magnitude of
/// the scaled leading coefficient, ties broken by smaller `n`.
pub fn recommend_n(f: &SingularIntegrand, n_min: usize, n_max: usize, cfg: &PredictorConfig) -> Result<Vec<usize>> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::EmptyRange);
    }
    let mut scored = Vec::with_capacity(n_max - n_min + 1);
    for n in n_min..=n_max {
        scored.push((scaled_magnitude(f, n, cfg)?, n));
    }
    scored.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(scored.into_iter().map(|(_, n)| n).collect())
}

/// Order of the error left after removing the leading term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HigherOrder {
    pub exponent: f64,
    pub log_factor: bool,
}

impl HigherOrder {
    /// `n^{−exponent}`, times `log n` when flagged.
    pub fn scale(&self, n: usize) -> f64 {
        let nf = n as f64;
        let base = nf.powf(-self.exponent);
        if self.log_factor {
            base * nf.ln()
        } else {
            base
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderPrediction {
    /// The leading term is `O(n^{−order_exponent})`.
    pub order_exponent: f64,
    /// An extra `log n` multiplies the leading order.
    pub log_factor: bool,
    pub higher_order: HigherOrder,
}

/// Leading order `k+α+1` and the order of the rest: `2α+2k+1` when
/// `k+α < 1`, `log n / n^{k+α+2}` when `k+α = 1`, `k+α+2` otherwise.
pub fn predicted_order(f: &SingularIntegrand) -> OrderPrediction {
    let p = f.jump_exponent();
    let log_factor = matches!(f.family(), Family::PowerLog { beta, .. } if *beta != 0.0);
    let higher_order = if p < 1.0 {
        HigherOrder { exponent: 2.0 * p + 1.0, log_factor: false }
    } else if p == 1.0 {
        HigherOrder { exponent: p + 2.0, log_factor: true }
    } else {
        HigherOrder { exponent: p + 2.0, log_factor: false }
    };
    OrderPrediction { order_exponent: p + 1.0, log_factor, higher_order }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorPrediction {
    pub n: usize,
    pub leading: f64,
    pub order: OrderPrediction,
    /// Bounds on `n^{k+α+1} R_n` for pure powers.
    pub bounds: Option<CoefficientBounds>,
}

pub fn predict(f: &SingularIntegrand, n: usize, cfg: &PredictorConfig) -> Result<ErrorPrediction> {
    let leading = leading_term(f, n, cfg)?;
    let bounds = coefficient_bounds(f).ok();
    Ok(ErrorPrediction { n, leading, order: predicted_order(f), bounds })
}
