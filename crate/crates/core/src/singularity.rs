//! Integrands with one interior singular point `b ∈ (-1, 1)`.
//!
//! Supported families:
//!
//! * `Power { k, alpha }`: `(x−b)^k |x−b|^α`
//! * `PowerLog { k, beta }`: `(x−b)^k |x−b|^β log|x−b|`
//! * `GeneralJump`: a caller-supplied real evaluation, the jump across the
//!   vertical cut through `b`, and a declared Hölder class.
//!
//! Any family may be multiplied by an analytic envelope. The jump of
//! `f(z)` across the cut `(b − i∞, b + i∞)` at `z = b + iy/n` is what the
//! error predictor consumes; it is always taken from closed forms.

use alloc::sync::Arc;
use core::f64::consts::{FRAC_PI_2, PI, TAU};
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::gauss::QuadratureRule;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
pub type ComplexFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;
pub type JumpFn = Arc<dyn Fn(f64, usize) -> Complex64 + Send + Sync>;

/// `f ∈ C^{k,α}` near the singular point. `open` marks a supremum: every
/// exponent strictly below `alpha` is attained, `alpha` itself is not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderClass {
    pub k: u32,
    pub alpha: f64,
    pub open: bool,
}

impl HolderClass {
    pub fn new(k: u32, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidFamily("Hölder exponent must lie in (0, 1]"));
        }
        Ok(Self { k, alpha, open: false })
    }

    /// `k + α`.
    pub fn smoothness(&self) -> f64 {
        f64::from(self.k) + self.alpha
    }
}

/// A singularity without closed form, described by its jump.
#[derive(Clone)]
pub struct GeneralJump {
    real_eval: RealFn,
    jump_eval: JumpFn,
    holder: HolderClass,
}

impl GeneralJump {
    /// `jump_eval(y, n)` must return `f(b⁺ + iy/n) − f(b⁻ + iy/n)`.
    pub fn new(real_eval: RealFn, jump_eval: JumpFn, holder: HolderClass) -> Self {
        Self { real_eval, jump_eval, holder }
    }
}

impl fmt::Debug for GeneralJump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneralJump").field("holder", &self.holder).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone)]
pub enum Family {
    Power { k: u32, alpha: f64 },
    PowerLog { k: u32, beta: f64 },
    GeneralJump(GeneralJump),
}

/// Analytic factor multiplying the singular part.
#[derive(Clone)]
pub enum Envelope {
    /// `exp(−(x−b)²)`
    Gaussian,
    Custom { real: RealFn, complex: ComplexFn },
}

impl fmt::Debug for Envelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Gaussian => f.write_str("Gaussian"),
            Self::Custom { .. } => f.write_str("Custom"),
        }
    }
}

impl Envelope {
    pub fn eval_real(&self, b: f64, x: f64) -> f64 {
        match self {
            Self::Gaussian => (-(x - b) * (x - b)).exp(),
            Self::Custom { real, .. } => real(x),
        }
    }

    pub fn eval_complex(&self, b: f64, z: Complex64) -> Complex64 {
        match self {
            Self::Gaussian => {
                let t = z - b;
                (-t * t).exp()
            }
            Self::Custom { complex, .. } => complex(z),
        }
    }
}

/// `φ = arccos b` and `Ψ = (2n+1)φ − π/2` for a given `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phase {
    pub phi: f64,
    /// Ψ reduced to `[0, 2π)`.
    pub psi: f64,
    pub cos_psi: f64,
    pub sin_psi: f64,
    /// `cos((2n+1)φ)`, the quantity the error pattern is periodic in.
    pub cos_phase: f64,
}

impl Phase {
    pub fn new(b: f64, n: usize) -> Self {
        let phi = b.acos();
        let arg = (2.0 * n as f64 + 1.0) * phi;
        let psi = num_traits::Euclid::rem_euclid(&(arg - FRAC_PI_2), &TAU);
        let (sin_psi, cos_psi) = psi.sin_cos();
        Self { phi, psi, cos_psi, sin_psi, cos_phase: arg.cos() }
    }
}

/// `i^m`.
pub(crate) fn i_pow(m: u32) -> Complex64 {
    match m % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// An integrand on `[-1, 1]` with a single singular point.
#[derive(Debug, Clone)]
pub struct SingularIntegrand {
    b: f64,
    family: Family,
    envelope: Option<Envelope>,
}

fn check_location(b: f64) -> Result<()> {
    if b > -1.0 && b < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidFamily("singular point must lie in (-1, 1)"))
    }
}

/// Move even powers of `(x−b)` out of `|x−b|^a` until `a ∈ (−1, 1]`.
fn normalise_exponent(mut k: u32, mut a: f64) -> (u32, f64) {
    while a > 1.0 {
        a -= 2.0;
        k += 2;
    }
    (k, a)
}

impl SingularIntegrand {
    /// `(x−b)^k |x−b|^α`. Exponents `α > 1` are rewritten with
    /// `|t|^α = t² |t|^{α−2}` until `α ∈ (−1, 1]`.
    pub fn power(b: f64, k: u32, alpha: f64) -> Result<Self> {
        check_location(b)?;
        if !alpha.is_finite() {
            return Err(Error::InvalidFamily("non-finite exponent"));
        }
        let (k, alpha) = normalise_exponent(k, alpha);
        if alpha <= -1.0 {
            return Err(Error::InvalidFamily("power exponent alpha must exceed -1"));
        }
        if alpha == 0.0 {
            return Err(Error::InvalidFamily("alpha = 0 gives a polynomial, not a singularity"));
        }
        if !(f64::from(k) + alpha > 0.0) {
            return Err(Error::InvalidFamily("power family needs k + alpha > 0"));
        }
        Ok(Self { b, family: Family::Power { k, alpha }, envelope: None })
    }

    /// `(x−b)^k |x−b|^β log|x−b|` with `β ∈ (−1, 1]`, and `k ≥ 1` when `β ≤ 0`.
    pub fn power_log(b: f64, k: u32, beta: f64) -> Result<Self> {
        check_location(b)?;
        if !beta.is_finite() {
            return Err(Error::InvalidFamily("non-finite exponent"));
        }
        let (k, beta) = normalise_exponent(k, beta);
        if beta <= -1.0 {
            return Err(Error::InvalidFamily("log family exponent beta must exceed -1"));
        }
        if beta <= 0.0 && k == 0 {
            return Err(Error::InvalidFamily("log family with beta <= 0 needs k >= 1"));
        }
        Ok(Self { b, family: Family::PowerLog { k, beta }, envelope: None })
    }

    pub fn general(b: f64, jump: GeneralJump) -> Result<Self> {
        check_location(b)?;
        Ok(Self { b, family: Family::GeneralJump(jump), envelope: None })
    }

    pub fn with_envelope(mut self, envelope: Envelope) -> Self {
        self.envelope = Some(envelope);
        self
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn envelope(&self) -> Option<&Envelope> {
        self.envelope.as_ref()
    }

    /// `φ = arccos b ∈ (0, π)`.
    pub fn phi(&self) -> f64 {
        self.b.acos()
    }

    pub fn phase(&self, n: usize) -> Phase {
        Phase::new(self.b, n)
    }

    /// Pure power or power-log singularity without envelope.
    pub fn is_closed_form(&self) -> bool {
        self.envelope.is_none() && !matches!(self.family, Family::GeneralJump(_))
    }

    /// Exponent `p` with `[f(b + iy/n)] = O((y/n)^p)`, up to a log factor.
    pub fn jump_exponent(&self) -> f64 {
        match &self.family {
            Family::Power { k, alpha } => f64::from(*k) + alpha,
            Family::PowerLog { k, beta } => f64::from(*k) + beta,
            Family::GeneralJump(g) => g.holder.smoothness(),
        }
    }

    pub fn holder_class(&self) -> HolderClass {
        match &self.family {
            Family::Power { k, alpha } if *alpha > 0.0 => HolderClass { k: *k, alpha: *alpha, open: false },
            Family::Power { k, alpha } => HolderClass { k: k - 1, alpha: alpha + 1.0, open: false },
            Family::PowerLog { k, beta } if *beta > 0.0 => HolderClass { k: *k, alpha: *beta, open: true },
            Family::PowerLog { k, beta } => HolderClass { k: k - 1, alpha: beta + 1.0, open: true },
            Family::GeneralJump(g) => g.holder,
        }
    }

    /// Point value on `[-1, 1]`. At `x = b` every supported family is
    /// continuous with value 0; a general integrand is evaluated as given.
    pub fn evaluate_real(&self, x: f64) -> Result<f64> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(Error::Domain { what: "evaluate_real", value: x });
        }
        let t = x - self.b;
        let base = match &self.family {
            Family::Power { k, alpha } => {
                if t == 0.0 {
                    0.0
                } else {
                    t.powi(*k as i32) * t.abs().powf(*alpha)
                }
            }
            Family::PowerLog { k, beta } => {
                if t == 0.0 {
                    0.0
                } else {
                    let a = t.abs();
                    t.powi(*k as i32) * a.powf(*beta) * a.ln()
                }
            }
            Family::GeneralJump(g) => {
                let v = (g.real_eval)(x);
                if !v.is_finite() {
                    return Err(Error::Degenerate("general integrand is unbounded here"));
                }
                v
            }
        };
        Ok(match &self.envelope {
            Some(e) => base * e.eval_real(self.b, x),
            None => base,
        })
    }

    /// `Σ ω_j f(x_j)` in node order, compensated.
    pub fn quadrature(&self, rule: &QuadratureRule) -> Result<f64> {
        let mut acc = CompensatedSum::new();
        for (x, w) in rule.iter() {
            acc.add(w * self.evaluate_real(x)?);
        }
        Ok(acc.value())
    }

    /// Jump `f(b⁺ + iy/n) − f(b⁻ + iy/n)` across the cut, for `y > 0`.
    pub fn jump(&self, y: f64, n: usize) -> Complex64 {
        let t = y / n as f64;
        let base = match &self.family {
            Family::Power { k, alpha } => {
                i_pow(k + 1) * (2.0 * (alpha * FRAC_PI_2).sin() * t.powf(f64::from(*k) + alpha))
            }
            Family::PowerLog { k, beta } => {
                let bracket = 2.0 * (beta * FRAC_PI_2).sin() * t.ln() + PI * ((beta + 1.0) * FRAC_PI_2).sin();
                i_pow(k + 1) * (t.powf(f64::from(*k) + beta) * bracket)
            }
            Family::GeneralJump(g) => (g.jump_eval)(y, n),
        };
        match &self.envelope {
            Some(e) => base * e.eval_complex(self.b, Complex64::new(self.b, t)),
            None => base,
        }
    }
}
