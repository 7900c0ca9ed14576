//! Gauss–Legendre quadrature plus the predicted leading remainder.
//!
//! Since `R_n = ∫f − Q_n[f]` and the leading term approximates `R_n`,
//! `Q_n[f] + leading` approximates `∫f` with the error of the next order.

use crate::gauss::{compute_rule, QuadratureRule};
use crate::predictor::{leading_term, PredictorConfig};
use crate::singularity::SingularIntegrand;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectedResult {
    pub n: usize,
    pub raw: f64,
    pub correction: f64,
    /// `raw + correction`
    pub corrected: f64,
}

pub fn corrected_integral(f: &SingularIntegrand, n: usize, cfg: &PredictorConfig) -> Result<CorrectedResult> {
    corrected_integral_with_rule(f, &compute_rule(n)?, cfg)
}

/// As [`corrected_integral`], reusing a rule computed by the caller.
pub fn corrected_integral_with_rule(
    f: &SingularIntegrand,
    rule: &QuadratureRule,
    cfg: &PredictorConfig,
) -> Result<CorrectedResult> {
    let raw = f.quadrature(rule)?;
    let correction = leading_term(f, rule.n(), cfg)?;
    Ok(CorrectedResult { n: rule.n(), raw, correction, corrected: raw + correction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::exact_integral;
    use crate::singularity::{Envelope, GeneralJump, HolderClass};
    use alloc::sync::Arc;
    use num_complex::Complex64;

    #[test]
    fn polynomial_is_unchanged() {
        let h = HolderClass::new(0, 1.0).unwrap();
        let g = GeneralJump::new(Arc::new(|x| x * x), Arc::new(|_, _| Complex64::new(0.0, 0.0)), h);
        let f = SingularIntegrand::general(0.4, g).unwrap();
        let r = corrected_integral(&f, 20, &PredictorConfig::default()).unwrap();
        assert_eq!(r.correction, 0.0);
        assert_eq!(r.corrected, r.raw);
        assert!((r.raw - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn correction_helps_gaussian_example() {
        let f = SingularIntegrand::power(0.4, 0, 1.0).unwrap().with_envelope(Envelope::Gaussian);
        let exact = exact_integral(&f).unwrap().value;
        let r = corrected_integral(&f, 200, &PredictorConfig::default()).unwrap();
        assert!((exact - r.corrected).abs() < 0.1 * (exact - r.raw).abs());
        assert_eq!(r.corrected, r.raw + r.correction);
    }
}
