use proptest::prelude::*;

use bmw6::reductions::{classify, DEFAULT_CLASSIFY_TOL};
use bmw6::special::{inv_reg_inc_beta, reg_inc_beta, BetaShape};
use bmw6::{Bmw6Params, InnerParams, ParamValues};

fn positive() -> impl Strategy<Value = f64> {
    0.3f64..4.0
}

fn param_values(tau: impl Strategy<Value = f64>) -> impl Strategy<Value = ParamValues> {
    (
        positive(),
        positive(),
        positive(),
        positive(),
        positive(),
        tau,
    )
        .prop_map(|(a, b, lambda, beta, gamma, tau)| ParamValues {
            a,
            b,
            lambda,
            beta,
            gamma,
            tau,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inc_beta_symmetry(a in 0.1f64..50.0, b in 0.1f64..50.0, y in 0.0f64..1.0) {
        let shape = BetaShape::new(a, b).unwrap();
        let lhs = reg_inc_beta(y, shape).unwrap();
        let rhs = 1.0 - reg_inc_beta(1.0 - y, shape.swapped()).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12);
        prop_assert!((0.0..=1.0).contains(&lhs));
    }

    #[test]
    fn inc_beta_monotone(a in 0.1f64..20.0, b in 0.1f64..20.0, y1 in 0.0f64..1.0, y2 in 0.0f64..1.0) {
        let shape = BetaShape::new(a, b).unwrap();
        let (lo, hi) = if y1 <= y2 { (y1, y2) } else { (y2, y1) };
        prop_assert!(reg_inc_beta(lo, shape).unwrap() <= reg_inc_beta(hi, shape).unwrap());
    }

    #[test]
    fn inverse_inc_beta_roundtrip(a in 0.5f64..10.0, b in 0.5f64..10.0, p in 0.001f64..0.999) {
        let shape = BetaShape::new(a, b).unwrap();
        let y = inv_reg_inc_beta(p, shape).unwrap();
        prop_assert!((reg_inc_beta(y, shape).unwrap() - p).abs() <= 1e-12);
    }

    #[test]
    fn cdf_monotone_and_complementary(v in param_values(-2.0f64..4.0), x1 in 0.0f64..10.0, x2 in 0.0f64..10.0) {
        let p = Bmw6Params::from_values(v).unwrap();
        let (lo, hi) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
        let (c_lo, c_hi) = (p.cdf(lo).unwrap(), p.cdf(hi).unwrap());
        prop_assert!(c_lo <= c_hi);
        prop_assert!(c_hi <= p.total_mass().unwrap() + 1e-15);
        prop_assert!((c_hi + p.survival(hi).unwrap() - 1.0).abs() <= 1e-15);
        if hi > 0.0 {
            prop_assert!(p.pdf(hi).unwrap() >= 0.0);
        }
    }

    #[test]
    fn quantile_roundtrip(v in param_values(-2.0f64..4.0), q in 0.001f64..0.999) {
        let p = Bmw6Params::from_values(v).unwrap();
        let mass = p.total_mass().unwrap();
        let q = q * mass;
        let x = p.quantile(q).unwrap();
        prop_assert!((p.cdf(x).unwrap() - q).abs() <= 1e-9);
    }

    #[test]
    fn lambda_cancels_at_tau_one(v in param_values(Just(1.0)), other in 0.01f64..100.0, x in 0.001f64..10.0) {
        let p = Bmw6Params::from_values(v).unwrap();
        let q = Bmw6Params::from_values(ParamValues { lambda: other, ..v }).unwrap();
        prop_assert!((p.cdf(x).unwrap() - q.cdf(x).unwrap()).abs() <= 1e-13);
    }

    #[test]
    fn classify_stable_under_small_perturbation(
        v in param_values(0.05f64..4.0),
        pin_ab in any::<bool>(),
        pin_tau in any::<bool>(),
        eps in -0.4f64..0.4,
    ) {
        let mut v = v;
        if pin_ab { v.a = 1.0; v.b = 1.0; }
        if pin_tau { v.tau = 1.0; v.gamma = 2.0; }
        let p = Bmw6Params::from_values(v).unwrap();
        let family = classify(&p, DEFAULT_CLASSIFY_TOL);
        prop_assert_eq!(classify(&p, DEFAULT_CLASSIFY_TOL), family);
        let d = eps * DEFAULT_CLASSIFY_TOL;
        let nudged = ParamValues { a: v.a + d, b: v.b + d, tau: v.tau + d, gamma: v.gamma + d, ..v };
        let q = Bmw6Params::from_values(nudged).unwrap();
        prop_assert_eq!(classify(&q, DEFAULT_CLASSIFY_TOL), family);
    }

    #[test]
    fn inner_tau_continuity_at_zero(gamma in positive(), beta in positive(), lambda in positive(), x in 0.01f64..5.0) {
        let at_zero = InnerParams::new(gamma, beta, lambda, 0.0).unwrap();
        let near = InnerParams::new(gamma, beta, lambda, 1e-10).unwrap();
        let (c0, c1) = (at_zero.cdf(x).unwrap(), near.cdf(x).unwrap());
        prop_assert!((c0 - c1).abs() <= 1e-8);
    }

    #[test]
    fn unit_shape_reduces_to_inner(v in param_values(-2.0f64..4.0), x in 0.001f64..10.0) {
        let v = ParamValues { a: 1.0, b: 1.0, ..v };
        let p = Bmw6Params::from_values(v).unwrap();
        let g = p.inner();
        prop_assert!((p.cdf(x).unwrap() - g.cdf(x).unwrap()).abs() <= 1e-14);
        let (f, h) = (p.pdf(x).unwrap(), g.pdf(x).unwrap());
        prop_assert!((f - h).abs() <= 1e-12 * h.max(1e-300));
    }
}
