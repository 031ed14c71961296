use perzeta_core::zeta_core::PeriodicZeta;
use perzeta_oracle::{to_f64, ulp_error, Oracle, OracleConfig};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn core_within_global_bound(k in 1u32..60, s in 1.05f64..25.0) {
        // k/120 is mostly not dyadic, so this also exercises the Taylor shift.
        let x = k as f64 / 120.0;
        let mut o = Oracle::new(OracleConfig::default()).unwrap();
        let reference = o.periodic_zeta_real(x, s).unwrap();
        let max_abs = to_f64(&o.riemann_zeta(s).unwrap());
        let computed = PeriodicZeta::with_defaults(s).unwrap().eval(x).unwrap();
        let err = ulp_error(o.hp(), computed, &reference, max_abs);
        prop_assert!(err <= 128.0, "x = {x}, s = {s}: {err} ulp");
    }

    #[test]
    fn core_below_one(k in 1u32..128, s in 0.05f64..1.0) {
        let x = k as f64 / 256.0;
        let mut o = Oracle::new(OracleConfig::default()).unwrap();
        let reference = o.periodic_zeta_real(x, s).unwrap();
        // Scale by the largest value on the same x-grid, at x = 1/256.
        let max_abs = to_f64(&o.periodic_zeta_real(1.0 / 256.0, s).unwrap()).abs();
        let computed = PeriodicZeta::with_defaults(s).unwrap().eval(x).unwrap();
        let err = ulp_error(o.hp(), computed, &reference, max_abs);
        prop_assert!(err <= 128.0, "x = {x}, s = {s}: {err} ulp");
    }
}
