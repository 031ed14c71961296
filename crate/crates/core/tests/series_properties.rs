use perzeta_core::zeta_core::{reduce_argument, PeriodicZeta};
use perzeta_core::Error;
use proptest::prelude::*;

proptest! {
    #[test]
    fn reduced_argument_range(x in -1e6f64..1e6) {
        let r = reduce_argument(x).unwrap().value();
        prop_assert!((0.0..=0.5).contains(&r));
        prop_assert_eq!(r, reduce_argument(-x).unwrap().value());
    }

    #[test]
    fn even_and_periodic(x in 0.0f64..1.0, s in 0.05f64..30.0) {
        let f = PeriodicZeta::with_defaults(s).unwrap();
        let v = match f.eval(x) {
            Ok(v) => v,
            Err(Error::Divergence(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        };
        prop_assert_eq!(v, f.eval(-x).unwrap());
        let shifted = f.eval(x + 3.0).unwrap();
        let scale = v.abs().max(1.0);
        prop_assert!((shifted - v).abs() <= 1e-12 * scale);
    }

    #[test]
    fn bounded_by_zeta(x in 0.0f64..1.0, s in 1.05f64..30.0) {
        let f = PeriodicZeta::with_defaults(s).unwrap();
        let z = f.eval(0.0).unwrap();
        let v = f.eval(x).unwrap();
        prop_assert!(v.abs() <= z * (1.0 + 1e-15));
    }

    #[test]
    fn term_budget(x in 0.0f64..0.5, s in 0.05f64..40.0) {
        let f = PeriodicZeta::with_defaults(s).unwrap();
        if let Ok(e) = f.eval_detailed(x) {
            prop_assert!(e.terms <= 50, "{} terms", e.terms);
        }
    }
}

#[test]
fn integer_s_matches_neighbours() {
    for m in 1..=10 {
        let s = m as f64;
        let at = PeriodicZeta::with_defaults(s).unwrap();
        let above = PeriodicZeta::with_defaults(s * (1.0 + 4.0 * f64::EPSILON)).unwrap();
        let below = PeriodicZeta::with_defaults(s * (1.0 - 4.0 * f64::EPSILON)).unwrap();
        for x in [0.1, 0.25, 0.375, 0.5] {
            let v = at.eval(x).unwrap();
            let scale = v.abs().max(1.0);
            for w in [above.eval(x).unwrap(), below.eval(x).unwrap()] {
                assert!(
                    (w - v).abs() <= 1e-13 * scale,
                    "m = {m}, x = {x}: {v} vs {w}"
                );
            }
        }
    }
}
