use std::f64::consts::PI;

use perzeta_core::zeta_core::{
    direct_series_real, periodic_zeta_real, riemann_zeta, Branch, CoefficientTables, PeriodicZeta,
    SeriesBudget,
};

fn f(x: f64, s: f64) -> f64 {
    periodic_zeta_real(x, s, &SeriesBudget::default(), CoefficientTables::builtin()).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn second_bernoulli_polynomial() {
    for k in 1..64 {
        let x = k as f64 / 128.0;
        let want = PI * PI * (x * x - x + 1.0 / 6.0);
        // Zeros of x² - x + 1/6 sit near 0.211 and 0.789.
        if want.abs() < 0.05 {
            continue;
        }
        assert!(rel(f(x, 2.0), want) < 1e-13, "x = {x}");
    }
}

#[test]
fn fourth_bernoulli_polynomial() {
    for k in 1..64 {
        let x = k as f64 / 128.0;
        let b4 = x.powi(4) - 2.0 * x.powi(3) + x * x - 1.0 / 30.0;
        let want = -PI.powi(4) / 3.0 * b4;
        if want.abs() < 0.05 {
            continue;
        }
        assert!(rel(f(x, 4.0), want) < 1e-13, "x = {x}");
    }
}

#[test]
fn half_point() {
    let d = 2f64.powi(-20);
    for s in [1.5, 2.0, 3.0, 3.0 + d, 3.0 - d, 7.0, 15.0] {
        let want = (2f64.powf(1.0 - s) - 1.0) * riemann_zeta(s).unwrap();
        assert!(rel(f(0.5, s), want) < 1e-13, "s = {s}");
    }
}

#[test]
fn quarter_point() {
    let d = 2f64.powi(-20);
    for s in [1.5, 2.0, 3.0, 3.0 + d, 3.0 - d, 7.0, 12.0, 15.0] {
        let want = -(2f64.powf(-s)) * (1.0 - 2f64.powf(1.0 - s)) * riemann_zeta(s).unwrap();
        assert!(rel(f(0.25, s), want) < 1e-13, "s = {s}");
    }
}

#[test]
fn leading_terms_for_large_s() {
    let v = direct_series_real(0.5, 21.0, &SeriesBudget::default()).unwrap();
    // 2^{-20} - 1 is the n <= 2 truncation; ζ(21) - 1 ≈ 4.8e-7.
    assert!(rel(v, 2f64.powi(-20) - 1.0) < 1e-6);
    let v = f(0.0, 3.0);
    assert_eq!(v, riemann_zeta(3.0).unwrap());
}

#[test]
fn below_one() {
    // Re F(1/2, s) = (2^{1-s} - 1) ζ(s) continues to s < 1.
    for s in [0.25, 0.5, 0.75, 0.999] {
        let want = ((1.0 - s) * std::f64::consts::LN_2).exp_m1() * riemann_zeta(s).unwrap();
        assert!(rel(f(0.5, s), want) < 1e-13, "s = {s}");
    }
    // Re F(x, 1) = -ln(2 sin πx)
    for x in [0.1, 0.25, 0.4] {
        let want = -(2.0 * (PI * x).sin()).ln();
        assert!((f(x, 1.0) - want).abs() < 1e-14, "x = {x}");
    }
}

#[test]
fn forced_branches_agree_in_overlap() {
    let tables = CoefficientTables::builtin();
    let wide = SeriesBudget::new(400, f64::EPSILON).unwrap();
    for s in [8.0, 9.25, 10.0, 11.0, 12.0] {
        let h = PeriodicZeta::with_branch(s, Branch::Hurwitz, wide, tables).unwrap();
        let d = PeriodicZeta::with_branch(s, Branch::Direct, wide, tables).unwrap();
        let scale = riemann_zeta(s).unwrap();
        for k in 1..=32 {
            let x = k as f64 / 64.0;
            let diff = (h.eval(x).unwrap() - d.eval(x).unwrap()).abs() / scale;
            assert!(diff < 512.0 * f64::EPSILON, "s = {s}, x = {x}");
        }
    }
    assert!(PeriodicZeta::with_branch(12.5, Branch::Hurwitz, wide, tables).is_err());
    assert!(PeriodicZeta::with_branch(0.5, Branch::Direct, wide, tables).is_err());
}
