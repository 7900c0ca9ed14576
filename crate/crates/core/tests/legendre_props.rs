use proptest::prelude::*;
use singquad_core::legendre::{
    bernstein_ellipse_max_ratio, bernstein_ratio_bound, legendre_p, legendre_p_pair, legendre_q, p_asymptotic,
    qp_ratio_asymptotic,
};
use singquad_core::{AsymptoticDomain, ComplexValue, XiCoordinate};

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

/// Off-cut sample points: either real part outside [-1, 1] or a clear
/// imaginary part.
fn off_cut() -> impl Strategy<Value = ComplexValue> {
    (-3.0f64..3.0, 0.05f64..2.0, any::<bool>()).prop_map(|(re, im, upper)| c(re, if upper { im } else { -im }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    // P_n Q_{n−1} − P_{n−1} Q_n = 1/n
    #[test]
    fn wronskian(n in 1usize..200, z in off_cut()) {
        let w = legendre_p(n, z).unwrap() * legendre_q(n - 1, z).unwrap()
            - legendre_p(n - 1, z).unwrap() * legendre_q(n, z).unwrap();
        let scale = (legendre_p(n, z).unwrap() * legendre_q(n - 1, z).unwrap()).norm().max(1.0 / n as f64);
        prop_assert!((w - 1.0 / n as f64).norm() < 1e-12 * scale * n as f64);
    }

    #[test]
    fn p_parity(n in 0usize..150, z in off_cut()) {
        let a = legendre_p(n, -z).unwrap();
        let b = legendre_p(n, z).unwrap() * if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((a - b).norm() <= 1e-13 * b.norm().max(1.0));
    }

    #[test]
    fn p_conjugate_symmetry(n in 0usize..150, z in off_cut()) {
        let a = legendre_p(n, z.conj()).unwrap();
        let b = legendre_p(n, z).unwrap().conj();
        prop_assert!((a - b).norm() <= 1e-13 * b.norm().max(1.0));
    }

    #[test]
    fn complex_p_agrees_with_real_recurrence(n in 0usize..300, x in -1.0f64..1.0) {
        let (p, _) = legendre_p_pair(n, x);
        let z = legendre_p(n, c(x, 0.0)).unwrap();
        prop_assert!((z.re - p).abs() < 1e-12);
        prop_assert!(z.im.abs() < 1e-12);
    }

    // Away from the zeros of P_n, the two-term approximation has O(1/n²) error.
    #[test]
    fn p_asymptotic_on_cut(phi in 0.3f64..2.8, n in 200usize..800) {
        let domain = AsymptoticDomain::new(0.5, 1e-3, 1.0).unwrap();
        let xi = XiCoordinate::on_cut(phi, true);
        if let Ok(approx) = p_asymptotic(n, &xi, &domain) {
            let (exact, _) = legendre_p_pair(n, phi.cos());
            let scale = (2.0 / (std::f64::consts::PI * n as f64 * phi.sin())).sqrt();
            prop_assert!((approx.re - exact).abs() < 5.0 * scale / (n * n) as f64);
        }
    }

    // The Q/P ratio tends to its limit form at rate 1/n. A phase error of
    // O(1/n) moves the limit form by about |a|², which dominates near its
    // pole; the second-order term in y/n brings in y²/sin²φ.
    #[test]
    fn ratio_limit_order(b in -0.8f64..0.8, y in 0.2f64..2.0, n in 100usize..800) {
        let z = c(b, y / n as f64);
        let exact = legendre_q(n, z).unwrap() / legendre_p(n, z).unwrap();
        let a = qp_ratio_asymptotic(n, b, y).unwrap();
        let scale = (a.norm() + a.norm_sqr()) * (1.0 + y * y) / (1.0 - b * b);
        prop_assert!((exact - a).norm() < 2.0 * scale / n as f64);
    }
}

#[test]
fn bernstein_rate_with_moderate_constant() {
    for m in [1.0, 2.0] {
        let mut last = f64::INFINITY;
        for n in [100usize, 200, 400, 800] {
            let r = bernstein_ellipse_max_ratio(n, m, 64).unwrap() / bernstein_ratio_bound(n, m);
            assert!(r < 8.0, "M = {m}, n = {n}: {r}");
            assert!(r < last * 1.01, "M = {m}, n = {n}: not decreasing");
            last = r;
        }
    }
}
