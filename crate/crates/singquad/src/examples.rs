//! The five reference integrands.
//!
//! 1. `|x−b|^α`, default `α = 0.5`
//! 2. `(x−b)^k |x−b|`, `k = 0..3`
//! 3. `(x−b)|x−b|^{1/2}` at `b = cos(π/6)`
//! 4. `f1 = |x−b| log|x−b|`, `f2 = (x−b) log|x−b|`
//! 5. `e^{−(x−b)²} |x−b|`
//!
//! `b` defaults to 0.4 except in example 3.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Result};
use singquad_core::{Envelope, SingularIntegrand};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    PowerAbs,
    PowerParity,
    RationalAngle,
    Logarithmic,
    GaussianEnvelope,
}

impl ExampleId {
    pub const ALL: [ExampleId; 5] =
        [Self::PowerAbs, Self::PowerParity, Self::RationalAngle, Self::Logarithmic, Self::GaussianEnvelope];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

impl FromStr for ExampleId {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(Self::PowerAbs),
            "2" => Ok(Self::PowerParity),
            "3" => Ok(Self::RationalAngle),
            "4" => Ok(Self::Logarithmic),
            "5" => Ok(Self::GaussianEnvelope),
            other => bail!("unknown example `{other}` (expected 1..5)"),
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Overrides; `None` keeps the example's default.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExampleParams {
    pub alpha: Option<f64>,
    pub b: Option<f64>,
    pub k: Option<u32>,
    /// `f1` or `f2` for example 4.
    pub variant: Option<String>,
}

pub fn example(id: ExampleId, p: &ExampleParams) -> Result<SingularIntegrand> {
    let b = p.b.unwrap_or(match id {
        ExampleId::RationalAngle => (PI / 6.0).cos(),
        _ => 0.4,
    });
    let f = match id {
        ExampleId::PowerAbs => SingularIntegrand::power(b, 0, p.alpha.unwrap_or(0.5))?,
        ExampleId::PowerParity => {
            let k = p.k.unwrap_or(0);
            if k > 3 {
                bail!("example 2 takes k in 0..=3, got {k}");
            }
            SingularIntegrand::power(b, k, 1.0)?
        }
        ExampleId::RationalAngle => SingularIntegrand::power(b, 1, 0.5)?,
        ExampleId::Logarithmic => match p.variant.as_deref().unwrap_or("f1") {
            "f1" => SingularIntegrand::power_log(b, 0, 1.0)?,
            "f2" => SingularIntegrand::power_log(b, 1, 0.0)?,
            v => bail!("example 4 variant must be f1 or f2, got `{v}`"),
        },
        ExampleId::GaussianEnvelope => SingularIntegrand::power(b, 0, 1.0)?.with_envelope(Envelope::Gaussian),
    };
    Ok(f)
}
