use std::f64::consts::PI;

use digamma_zeros::constants::LN_2PI;
use digamma_zeros::special::{digamma, lambert_w0, log_barnes_g, log_gamma, psi_g, trigamma};
use proptest::prelude::*;

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: 200, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn digamma_reflection(x in 1e-6f64..(1.0 - 1e-6)) {
        let cot = 1.0 / (PI * x).tan();
        let r = digamma(1.0 - x).unwrap() - digamma(x).unwrap() - PI * cot;
        prop_assert!(r.abs() <= 1e-10 * (1.0 + cot.abs() * PI), "x = {x}: {r:e}");
    }

    #[test]
    fn digamma_recurrence(x in 0.1f64..50.0) {
        let r = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
        prop_assert!(r.abs() <= 1e-12, "x = {x}: {r:e}");
    }

    #[test]
    fn psi_g_functional_equation(x in 1e-3f64..(1.0 - 1e-3)) {
        prop_assume!((x - 0.5).abs() > 1e-9);
        let lhs = psi_g(1.0 - x).unwrap() + psi_g(x).unwrap();
        let rhs = LN_2PI - PI * x / (PI * x).tan() - digamma(x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9, "x = {x}: {lhs} vs {rhs}");
    }

    #[test]
    fn digamma_recurrence_negative(x in -40.0f64..-0.01) {
        prop_assume!((x - x.round()).abs() > 1e-4 && (x + 1.0 - (x + 1.0).round()).abs() > 1e-4);
        let r = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
        let scale = 1.0 + digamma(x).unwrap().abs();
        prop_assert!(r.abs() <= 1e-10 * scale, "x = {x}: {r:e}");
    }
}

#[test]
fn trigamma_positive_on_grid() {
    let n = 10_000;
    let mut checked = 0;
    for i in 0..n {
        let x = -20.0 + 40.0 * (i as f64 + 0.5) / n as f64;
        if x <= 0.0 && (x - x.round()).abs() < 1e-9 {
            continue;
        }
        let t = trigamma(x).unwrap();
        assert!(t > 0.0, "trigamma({x}) = {t}");
        checked += 1;
    }
    assert_eq!(checked, n);
}

#[test]
fn barnes_recurrence() {
    for i in 0..=30 {
        let x = 0.5 + i as f64;
        let r = log_barnes_g(x + 1.0).unwrap() - log_gamma(x).unwrap() - log_barnes_g(x).unwrap();
        assert!(r.abs() <= 1e-10, "x = {x}: {r:e}");
    }
}

#[test]
fn lambert_residual_on_log_grid() {
    let lo = -(-1.0f64).exp() + 1e-9;
    let mut xs = vec![lo, -0.3, -0.1, -1e-3, -1e-10, 0.0, 1e-10];
    // 400 points, logarithmic in both directions
    xs.extend((0..200).map(|i| -10f64.powf(-9.0 + 8.5 * i as f64 / 199.0) * 0.36787944));
    xs.extend((0..200).map(|i| 10f64.powf(-12.0 + 18.0 * i as f64 / 199.0)));
    for x in xs {
        if x < lo {
            continue;
        }
        let w = lambert_w0(x).unwrap();
        let r = w * w.exp() - x;
        assert!(r.abs() <= 1e-13 * x.abs().max(1.0), "x = {x}: W = {w}, residual {r:e}");
    }
}
