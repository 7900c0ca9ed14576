//! Legendre functions of the first and second kind for complex argument,
//! and their large-degree approximations that remain uniform up to the cut
//! `[-1, 1]`.
//!
//! Branch conventions: `√(z²−1)` is taken as `√(z−1)·√(z+1)` with principal
//! square roots, so it is positive for `z > 1` and continuous off `[-1, 1]`.
//! The companion variable `ξ = log(z + √(z²−1))` then has `Re ξ ≥ 0`,
//! `ξ > 0` for `z > 1`, and `ξ → ±iφ` as `z → cos φ ± i0`. A real `z` in
//! `(-1, 1)` is read according to the sign of its zero imaginary part, so
//! `+0.0` is the upper side of the cut.

use core::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use num_traits::Float;

use crate::{Error, Result};

/// A point of the complex plane.
pub type ComplexValue = Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `z` together with `ξ = log(z + √(z²−1))`, so that `z = cosh ξ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiCoordinate {
    pub xi: ComplexValue,
    pub z: ComplexValue,
}

impl XiCoordinate {
    pub fn from_z(z: ComplexValue) -> Result<Self> {
        xi_of_z(z)
    }

    /// The point `cos φ ± i0` on the requested side of the cut.
    pub fn on_cut(phi: f64, upper: bool) -> Self {
        let c = phi.cos();
        let sign = if upper { 1.0 } else { -1.0 };
        Self {
            xi: Complex64::new(0.0, sign * phi),
            z: Complex64::new(c, sign * 0.0),
        }
    }

    pub fn sinh_xi(&self) -> ComplexValue {
        self.xi.sinh()
    }
}

/// Parameters of the regions where the large-degree approximations are used.
///
/// `l` bounds the excluded neighbourhoods of the zeros of `P_n`, `eps` keeps
/// `|sinh ξ|` away from zero (the endpoints `±1`), and `m` sets the Bernstein
/// ellipse `|z + √(z²−1)| = 1 + m log n / n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticDomain {
    pub l: f64,
    pub eps: f64,
    pub m: f64,
}

impl Default for AsymptoticDomain {
    fn default() -> Self {
        Self { l: 1.0, eps: 0.5, m: 3.0 }
    }
}

impl AsymptoticDomain {
    pub fn new(l: f64, eps: f64, m: f64) -> Result<Self> {
        for (what, v) in [("L", l), ("eps", eps), ("M", m)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain { what, value: v });
            }
        }
        Ok(Self { l, eps, m })
    }

    /// Whether `ξ` satisfies the conditions under which [`p_asymptotic`] is
    /// uniformly accurate for degree `n`.
    pub fn contains(&self, n: usize, xi: &XiCoordinate) -> bool {
        xi.sinh_xi().norm() >= self.eps && p_bracket_clear(n, xi.xi, self.l)
    }
}

fn p_bracket_clear(n: usize, xi: Complex64, l: f64) -> bool {
    let nu = n as f64 + 0.5;
    let w = xi * nu;
    // |cosh w| ≥ sinh|Re w|, so large real parts are always clear.
    if w.re.abs() > 20.0 {
        return true;
    }
    let shifted = if xi.im >= 0.0 {
        w - I * FRAC_PI_4
    } else {
        w + I * FRAC_PI_4
    };
    shifted.cosh().norm() >= l / n as f64
}

/// `ξ = log(z + √(z²−1))` with the conventions of this module.
pub fn xi_of_z(z: ComplexValue) -> Result<XiCoordinate> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain { what: "xi_of_z", value: f64::NAN });
    }
    if (z - 1.0).norm() < 1e-14 || (z + 1.0).norm() < 1e-14 {
        return Err(Error::Degenerate("xi at z = ±1"));
    }
    let root = (z - 1.0).sqrt() * (z + 1.0).sqrt();
    let xi = (z + root).ln();
    Ok(XiCoordinate { xi, z })
}

/// Distance from `z` to the segment `[-1, 1]`.
pub fn distance_to_cut(z: ComplexValue) -> f64 {
    if z.re.abs() <= 1.0 {
        z.im.abs()
    } else {
        Complex64::new(z.re.abs() - 1.0, z.im).norm()
    }
}

/// `P_n(x)` and `P_{n-1}(x)` for real `x` by the three-term recurrence.
/// For `n = 0` the second value is `0`.
pub fn legendre_p_pair(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

fn p_pair_complex(n: usize, z: Complex64) -> (Complex64, Complex64) {
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let kf = k as f64;
        let next = (z * cur * (2.0 * kf + 1.0) - prev * kf) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

fn finite(v: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow)
    }
}

/// Legendre polynomial `P_n(z)` by forward recurrence.
pub fn legendre_p(n: usize, z: ComplexValue) -> Result<ComplexValue> {
    finite(p_pair_complex(n, z).0)
}

/// `P_n'(z)` from `(z²−1) P_n' = n (z P_n − P_{n−1})`, with the closed form
/// `P_n'(±1) = (±1)^{n−1} n(n+1)/2` at the endpoints.
pub fn legendre_p_deriv(n: usize, z: ComplexValue) -> Result<ComplexValue> {
    if n == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let nf = n as f64;
    let end = nf * (nf + 1.0) / 2.0;
    if z == Complex64::new(1.0, 0.0) {
        return Ok(Complex64::new(end, 0.0));
    }
    if z == Complex64::new(-1.0, 0.0) {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        return Ok(Complex64::new(sign * end, 0.0));
    }
    let (p, pm1) = p_pair_complex(n, z);
    finite((z * p - pm1) * nf / (z * z - 1.0))
}

/// Below this value of `2(n+½) Re ξ` the forward recurrence for `Q_n` loses at
/// most a factor `e^8` in relative accuracy.
const Q_FORWARD_LIMIT: f64 = 8.0;

/// Legendre function of the second kind `Q_n(z)` for `z` off `[-1, 1]`.
///
/// Near the cut `Q_n` and `P_n` have comparable size and the forward
/// recurrence from `Q_0`, `Q_1` is accurate. Further out `Q_n` is the
/// recessive solution; the ratios `Q_m / Q_{m−1}` are then obtained from
/// the continued fraction, run backward from a start index far above `n`
/// and seeded with the limiting ratio `e^{−ξ}`, and normalised by the closed
/// form `Q_0(z) = ½ log((z+1)/(z−1))`.
pub fn legendre_q(n: usize, z: ComplexValue) -> Result<ComplexValue> {
    if distance_to_cut(z) < 1e-12 {
        return Err(Error::Degenerate("Q_n on the cut [-1, 1]"));
    }
    let xi = xi_of_z(z)?.xi;
    let q0 = ((z + 1.0) / (z - 1.0)).ln() * 0.5;
    if n == 0 {
        return finite(q0);
    }
    let nu = n as f64 + 0.5;
    if 2.0 * nu * xi.re <= Q_FORWARD_LIMIT {
        let mut prev = q0;
        let mut cur = z * q0 - 1.0;
        for k in 1..n {
            let kf = k as f64;
            let next = (z * cur * (2.0 * kf + 1.0) - prev * kf) / (kf + 1.0);
            prev = cur;
            cur = next;
        }
        return finite(cur);
    }
    // Seed error decays like |e^{-2ξ}| per step.
    let extra = (40.0 / (2.0 * xi.re)).ceil() as usize + 16;
    let top = n + extra;
    let mut ratio = (-xi).exp();
    let mut prod = Complex64::new(1.0, 0.0);
    for m in (1..=top).rev() {
        let mf = m as f64;
        ratio = Complex64::new(mf, 0.0) / (z * (2.0 * mf + 1.0) - ratio * (mf + 1.0));
        if m <= n {
            prod *= ratio;
        }
    }
    finite(q0 * prod)
}

/// Large-`n` approximation of `P_n(cosh ξ)` carrying the `1/(4n)` and
/// `coth ξ/(8n)` corrections of both exponentials:
///
/// `√(i/(2nπ sinh ξ)) [(1 − 1/(4n) + coth ξ/(8n)) e^{(n+½)ξ − iπ/4}
///  + (1 − 1/(4n) − coth ξ/(8n)) e^{−(n+½)ξ + iπ/4}]`.
///
/// The formula is written for `Im ξ ≥ 0`; values with `Im ξ < 0` follow from
/// `P_n(z̄) = conj P_n(z)`.
pub fn p_asymptotic(n: usize, xi: &XiCoordinate, domain: &AsymptoticDomain) -> Result<ComplexValue> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let sh = xi.sinh_xi();
    if sh.norm() < domain.eps {
        return Err(Error::Domain { what: "p_asymptotic: |sinh xi| < eps", value: sh.norm() });
    }
    if !p_bracket_clear(n, xi.xi, domain.l) {
        return Err(Error::OutsideValidity("near a zero of P_n"));
    }
    if xi.xi.im < 0.0 {
        let reflected = XiCoordinate { xi: xi.xi.conj(), z: xi.z.conj() };
        return p_asymptotic(n, &reflected, domain).map(|v| v.conj());
    }
    let nf = n as f64;
    let nu = nf + 0.5;
    let coth = xi.xi.cosh() / sh;
    let grow = coth / (8.0 * nf) + (1.0 - 0.25 / nf);
    let decay = -coth / (8.0 * nf) + (1.0 - 0.25 / nf);
    // √(i / sinh ξ) = e^{iπ/4} / √(sinh ξ) on Im ξ ≥ 0.
    let ln_pre = Complex64::new(0.0, FRAC_PI_4) - sh.sqrt().ln() - 0.5 * (2.0 * nf * PI).ln();
    let up = xi.xi * nu - I * FRAC_PI_4;
    if up.re.abs() > 700.0 {
        // Log-magnitude form; the recessive exponential is below e^{-1400} relative.
        let (big, small_coeff) = if up.re > 0.0 { (up, grow) } else { (-up, decay) };
        return finite((ln_pre + big + small_coeff.ln()).exp());
    }
    finite(ln_pre.exp() * (grow * up.exp() + decay * (-up).exp()))
}

/// Large-`n` approximation of `Q_n(cosh ξ)`:
/// `√(π/(2(n+1) i sinh ξ)) e^{−(n+½)ξ + iπ/4}`, uniform for `|sinh ξ| ≥ eps`.
pub fn q_asymptotic(n: usize, xi: &XiCoordinate, domain: &AsymptoticDomain) -> Result<ComplexValue> {
    let sh = xi.sinh_xi();
    if sh.norm() < domain.eps {
        return Err(Error::Domain { what: "q_asymptotic: |sinh xi| < eps", value: sh.norm() });
    }
    if xi.xi.im < 0.0 {
        let reflected = XiCoordinate { xi: xi.xi.conj(), z: xi.z.conj() };
        return q_asymptotic(n, &reflected, domain).map(|v| v.conj());
    }
    let nf = n as f64;
    // 1/√(i sinh ξ) = e^{-iπ/4} / √(sinh ξ), which cancels the e^{iπ/4}.
    let ln = 0.5 * (PI / (2.0 * (nf + 1.0))).ln() - sh.sqrt().ln() - xi.xi * (nf + 0.5);
    finite(ln.exp())
}

/// Approximation of `Q_n(b + iy/n) / P_n(b + iy/n)` just above the cut:
/// `−iπ / (exp(2y/sin φ + iΨ) + 1)` with `b = cos φ`, `Ψ = (2n+1)φ − π/2`.
pub fn qp_ratio_asymptotic(n: usize, b: f64, y: f64) -> Result<ComplexValue> {
    if !(b > -1.0 && b < 1.0) {
        return Err(Error::Domain { what: "qp_ratio_asymptotic: b", value: b });
    }
    if !(y >= 0.0) {
        return Err(Error::Domain { what: "qp_ratio_asymptotic: y", value: y });
    }
    let phi = b.acos();
    let psi = (2.0 * n as f64 + 1.0) * phi - core::f64::consts::FRAC_PI_2;
    // e^{-w} / (1 + e^{-w}) stays bounded as y grows.
    let decay = Complex64::new(-2.0 * y / phi.sin(), -psi).exp();
    Ok(-I * PI * decay / (decay + 1.0))
}

/// `n^{−2M}`, the decay rate of `|Q_n / P_n|` on the Bernstein ellipse
/// `|z + √(z²−1)| = 1 + M log n / n`.
pub fn bernstein_ratio_bound(n: usize, m: f64) -> f64 {
    (n as f64).powf(-2.0 * m)
}

/// Largest `|Q_n / P_n|` over `samples` points of the upper half of the
/// ellipse `|z + √(z²−1)| = 1 + M log n / n`; the lower half is its mirror.
pub fn bernstein_ellipse_max_ratio(n: usize, m: f64, samples: usize) -> Result<f64> {
    if n < 2 || samples == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let nf = n as f64;
    let rho = (1.0 + m * nf.ln() / nf).ln();
    let mut worst: f64 = 0.0;
    for j in 0..samples {
        let theta = PI * (j as f64 + 0.5) / samples as f64;
        let z = Complex64::new(rho, theta).cosh();
        let ratio = legendre_q(n, z)? / legendre_p(n, z)?;
        worst = worst.max(ratio.norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn xi_examples() {
        let x = xi_of_z(c(1.25, 0.0)).unwrap();
        assert!((x.xi - c(2f64.ln(), 0.0)).norm() < 1e-15);
        let x = xi_of_z(c(0.0, 0.0)).unwrap();
        assert!((x.xi - c(0.0, PI / 2.0)).norm() < 1e-15);
        let x = xi_of_z(c(0.0, -0.0)).unwrap();
        assert!((x.xi - c(0.0, -PI / 2.0)).norm() < 1e-15);
        assert!(matches!(xi_of_z(c(1.0, 0.0)), Err(Error::Degenerate(_))));
        assert!(matches!(xi_of_z(c(-1.0, 1e-15)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn xi_near_cut_matches_newton_oracle() {
        // Solve cosh ξ = z by complex Newton from iφ.
        let z = c(0.4, 0.01);
        let mut xi = c(0.0, 0.4f64.acos());
        for _ in 0..50 {
            xi -= (xi.cosh() - z) / xi.sinh();
        }
        let got = xi_of_z(z).unwrap().xi;
        assert!((got - xi).norm() < 1e-13);
        assert!((got.re - 0.010_911).abs() < 1e-5);
        assert!((got.im - 0.4f64.acos()).abs() < 1e-4);
    }

    #[test]
    fn p_examples() {
        assert!((legendre_p(2, c(0.5, 0.0)).unwrap() - c(-0.125, 0.0)).norm() < 1e-15);
        for n in 0..=10 {
            assert_eq!(legendre_p(n, c(1.0, 0.0)).unwrap(), c(1.0, 0.0));
        }
        assert!((legendre_p_deriv(2, c(0.5, 0.0)).unwrap() - c(1.5, 0.0)).norm() < 1e-14);
        assert_eq!(legendre_p_deriv(5, c(1.0, 0.0)).unwrap(), c(15.0, 0.0));
        assert_eq!(legendre_p_deriv(4, c(-1.0, 0.0)).unwrap(), c(-10.0, 0.0));
    }

    #[test]
    fn p_overflow_reported() {
        assert_eq!(legendre_p(5000, c(1e3, 0.0)), Err(Error::Overflow));
    }

    #[test]
    fn q_closed_forms() {
        let q0 = legendre_q(0, c(2.0, 0.0)).unwrap();
        assert!((q0 - c(0.5 * 3f64.ln(), 0.0)).norm() < 1e-15);
        assert!((q0.re - 0.549_306_144_3).abs() < 1e-10);
        let q1 = legendre_q(1, c(2.0, 0.0)).unwrap();
        assert!((q1 - c(3f64.ln() - 1.0, 0.0)).norm() < 1e-14);
        assert!(matches!(legendre_q(3, c(0.2, 0.0)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn q_upper_side_of_cut_carries_minus_i_pi_over_two() {
        // Q_0(x + i0) = ½ log((1+x)/(1−x)) − iπ/2
        let q = legendre_q(0, c(0.4, 1e-10)).unwrap();
        assert!((q.im + PI / 2.0).abs() < 1e-9);
    }

    #[test]
    fn qp_ratio_limits() {
        let r = qp_ratio_asymptotic(100, 0.4, 1e4).unwrap();
        assert!(r.norm() < 1e-300);
        // b = 0, even n: Ψ = nπ so the ratio tends to −iπ/2.
        let r = qp_ratio_asymptotic(10, 0.0, 0.0).unwrap();
        assert!((r - c(0.0, -PI / 2.0)).norm() < 1e-12);
        assert!(qp_ratio_asymptotic(10, 1.0, 1.0).is_err());
    }

    #[test]
    fn bernstein_bound_arithmetic() {
        assert!((bernstein_ratio_bound(100, 1.0) - 1e-4).abs() < 1e-18);
        assert!((bernstein_ratio_bound(100, 2.0) - 1e-8).abs() < 1e-22);
        let slope = (bernstein_ratio_bound(200, 1.5).ln() - bernstein_ratio_bound(100, 1.5).ln()) / 2f64.ln();
        assert!((slope + 3.0).abs() < 1e-12);
    }

    #[test]
    fn domain_validation() {
        assert!(AsymptoticDomain::new(1.0, 0.0, 3.0).is_err());
        let d = AsymptoticDomain::default();
        let near_end = xi_of_z(c(0.999, 0.001)).unwrap();
        assert!(matches!(p_asymptotic(100, &near_end, &d), Err(Error::Domain { .. })));
        assert!(matches!(q_asymptotic(100, &near_end, &d), Err(Error::Domain { .. })));
    }
}
