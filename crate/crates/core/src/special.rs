//! Real-argument gamma and Riemann zeta functions.
//!
//! Only the range needed by the closed-form coefficient bounds is targeted:
//! `Γ(s)` for `s > 0` and `ζ(s)` for `s > 1`, both in double precision.

use core::f64::consts::PI;

use num_traits::Float;

use crate::{Error, Result};

// Lanczos approximation, g = 7, 9 terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for `s > 0`.
pub fn gamma_fn(s: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::Domain { what: "gamma", value: s });
    }
    if s < 0.5 {
        // Γ(s) = Γ(s + 1) / s keeps the Lanczos sum in its accurate range.
        return Ok(lanczos(s + 1.0) / s);
    }
    let v = lanczos(s);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow)
    }
}

fn lanczos(s: f64) -> f64 {
    let x = s - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    // t^(x+1/2) e^(-t) split in two to delay overflow.
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * a
}

/// Euler–Maclaurin cutoff and the Bernoulli numbers B2, B4, B6, B8 divided by (2j)!.
const ZETA_CUTOFF: u32 = 20;
const BERNOULLI_OVER_FACTORIAL: [f64; 4] = [
    1.0 / 12.0,     // B2 / 2!
    -1.0 / 720.0,   // B4 / 4!
    1.0 / 30_240.0, // B6 / 6!
    -1.0 / 1_209_600.0,
];

/// Riemann zeta function for real `s > 1`.
pub fn zeta_fn(s: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain { what: "zeta", value: s });
    }
    let n = f64::from(ZETA_CUTOFF);
    // Sum the smallest terms first.
    let mut head = 0.0;
    for k in (1..ZETA_CUTOFF).rev() {
        head += f64::from(k).powf(-s);
    }
    let mut tail = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    // rising = s (s+1) ... (s+2j-2), power = N^(-s-2j+1)
    let mut rising = s;
    let mut power = n.powf(-s - 1.0);
    for (j, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        if j > 0 {
            let m = (2 * j) as f64;
            rising *= (s + m - 1.0) * (s + m);
            power /= n * n;
        }
        tail += coeff * rising * power;
    }
    Ok(head + tail)
}
