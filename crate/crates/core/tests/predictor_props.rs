use proptest::prelude::*;
use singquad_core::{
    coefficient_bounds, exact_integral, leading_term, power_case_coefficient, power_case_leading, psi0_integral,
    psi0_solve, recommend_n, compute_rule, PredictorConfig, SingularIntegrand,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn complex_and_parity_forms_agree(k in 0u32..4, alpha in 0.1f64..0.95, b in -0.9f64..0.9, n in 20usize..600) {
        let f = SingularIntegrand::power(b, k, alpha).unwrap();
        let cfg = PredictorConfig::default();
        let a = leading_term(&f, n, &cfg).unwrap();
        let p = power_case_leading(&f, n, &cfg).unwrap();
        prop_assert!((a - p).abs() <= 1e-8 * a.abs().max(p.abs()) + 1e-300);
    }

    #[test]
    fn coefficient_within_bounds(k in 0u32..4, alpha in 0.1f64..1.9, b in -0.9f64..0.9, n in 20usize..2000) {
        let f = SingularIntegrand::power(b, k, alpha).unwrap();
        let v = power_case_coefficient(&f, n, &PredictorConfig::default()).unwrap();
        let bounds = coefficient_bounds(&f).unwrap();
        prop_assert!(bounds.contains(v, 1e-9), "{} not in [{}, {}]", v, bounds.lower, bounds.upper);
    }

    #[test]
    fn psi0_integral_increasing(p in 0.1f64..4.0, c in -0.99f64..0.98) {
        prop_assert!(psi0_integral(p, c + 0.01).unwrap() > psi0_integral(p, c).unwrap());
    }

    #[test]
    fn psi0_root(alpha in 0.1f64..0.95, k in prop::sample::select(vec![0u32, 2])) {
        let p = f64::from(k) + alpha;
        let c = psi0_solve(k, alpha).unwrap();
        prop_assert!(c > -1.0 && c < 1.0);
        prop_assert!(psi0_integral(p, c).unwrap().abs() < 1e-10);
    }

    #[test]
    fn recommend_is_a_sorted_permutation(b in -0.9f64..0.9, lo in 10usize..100, len in 1usize..60) {
        let f = SingularIntegrand::power(b, 0, 0.5).unwrap();
        let cfg = PredictorConfig::default();
        let order = recommend_n(&f, lo, lo + len, &cfg).unwrap();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (lo..=lo + len).collect::<Vec<_>>());
        let mags: Vec<f64> = order.iter().map(|&n| power_case_coefficient(&f, n, &cfg).unwrap().abs()).collect();
        prop_assert!(mags.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn truncation_converges_without_extension() {
    let f = SingularIntegrand::power(0.4, 0, 0.5).unwrap();
    for n in [50usize, 200, 600] {
        let short = leading_term(&f, n, &PredictorConfig::new(10.0, 32, false).unwrap()).unwrap();
        let long = leading_term(&f, n, &PredictorConfig::new(14.0, 32, false).unwrap()).unwrap();
        let full = leading_term(&f, n, &PredictorConfig::default()).unwrap();
        assert!((short - long).abs() <= 1e-10 * long.abs(), "n = {n}");
        assert!((long - full).abs() <= 1e-10 * full.abs(), "n = {n}");
    }
}

#[test]
fn leading_term_tracks_measured_error() {
    let f = SingularIntegrand::power(0.4, 0, 0.5).unwrap();
    let exact = exact_integral(&f).unwrap().value;
    let cfg = PredictorConfig::default();
    for n in [100usize, 200, 400] {
        let err = exact - f.quadrature(&compute_rule(n).unwrap()).unwrap();
        let pred = leading_term(&f, n, &cfg).unwrap();
        // next term is O(n^{-2.5}) against a leading O(n^{-1.5})
        assert!((err - pred).abs() < 2.0 * (n as f64).powf(-2.5), "n = {n}: {err} vs {pred}");
    }
}
