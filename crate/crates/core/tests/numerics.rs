use proptest::prelude::*;

use hgperiod::numerics::{f32_at_1, gamma1_double, poch_contour, quad_1d, IntegrandSpec};
use hgperiod::rational::q;
use hgperiod::symbolic::{Denominator, Poly};

/// Direct partial sum to `n` terms plus the leading tail `t_N (N/δ + 1/2)`.
fn direct(p3: f64, p4: f64, p5: f64, n: usize) -> f64 {
    let s = p4 + p5 - p3 - 2.0;
    let mut t = 1.0f64;
    let mut sum = 0.0f64;
    for k in 0..n {
        sum += t;
        let k = k as f64;
        t *= (k + 1.0) * (k + p3) / ((k + p4) * (k + p5));
    }
    sum + t * (n as f64 / s + 0.5)
}

fn denominators() -> Vec<(Poly, Denominator)> {
    let b = |a: i64, n: usize, c: i64| Denominator::binomial(q(a, 1), n, q(c, 1)).unwrap();
    vec![
        (Poly::from_ints(&[1]), b(1, 1, 1)),
        (Poly::from_ints(&[2]), b(-1, 1, 2)),
        (Poly::from_ints(&[9, 0, 0, 1]), b(1, 6, 27)),
        (Poly::from_ints(&[0, 0, 0, 8, 0, 0, 0, 64]), b(64, 8, 1)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn acceleration_agrees_with_direct_summation(p3 in 0.1f64..2.0, p4 in 0.5f64..3.0, d in 0.5f64..2.0) {
        let p5 = p3 + 2.0 + d - p4;
        prop_assume!(p5 > 0.2);
        let tol = 1e-6;
        let acc = f32_at_1(p3, p4, p5, tol).unwrap().value;
        let dir = direct(p3, p4, p5, 1_000_000);
        prop_assert!((acc - dir).abs() <= 10.0 * tol * acc.abs(), "{} vs {}", acc, dir);
    }

    #[test]
    fn refining_quadrature_stays_within_estimate(alpha in -0.9f64..2.0, k in 0usize..4) {
        let (num, den) = denominators().swap_remove(k);
        let f = IntegrandSpec::rational(alpha, 1.0, num, den);
        let coarse = quad_1d(&f, 1e-6).unwrap();
        let fine = quad_1d(&f, 1e-13).unwrap();
        prop_assert!((coarse.value - fine.value).abs() <= coarse.error + fine.error + 1e-15 * fine.value.abs());
    }

    #[test]
    fn contour_equals_quadrature_when_convergent(alpha in -0.9f64..2.0, k in 0usize..4, eps in 0.05f64..0.3) {
        let (num, den) = denominators().swap_remove(k);
        let f = IntegrandSpec::rational(0.0, 1.0, num.clone(), den.clone());
        let c = poch_contour(alpha, &f, Some(eps), 1e-12).unwrap().value;
        let direct = quad_1d(&IntegrandSpec::rational(alpha, 1.0, num, den), 1e-12).unwrap().value;
        prop_assert!((c - direct).abs() <= 1e-9 * direct.abs().max(1.0), "{} vs {}", c, direct);
    }

    #[test]
    fn double_integral_is_an_f_value(a in 0.2f64..2.0, b in 0.2f64..2.0, c in 0.2f64..2.0) {
        let d = gamma1_double(a, b, c, 1e-10).unwrap().value;
        let f = f32_at_1(a + b + c, a + b + 1.0, a + c + 1.0, 1e-12).unwrap().value / ((a + b) * (a + c));
        prop_assert!((d - f).abs() <= 1e-6 * f.abs(), "{} vs {}", d, f);
    }
}

#[test]
fn exact_values() {
    let z2 = f32_at_1(1.0, 2.0, 2.0, 1e-12).unwrap().value;
    assert!((z2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
    for a in [0.25, 1.0, 3.5] {
        assert!((f32_at_1(a, a, 4.0, 1e-12).unwrap().value - 1.5).abs() < 1e-12);
    }
    assert!((gamma1_double(1.0, 1.0, 1.0, 1e-11).unwrap().value - 0.5).abs() < 1e-9);
    assert!((gamma1_double(1.0, 1.0, 0.5, 1e-11).unwrap().value - 2.0 / 3.0).abs() < 1e-9);
    let forced = poch_contour(-1.5, &IntegrandSpec::power(0.0), None, 1e-13).unwrap().value;
    assert!((forced + 2.0).abs() < 1e-10);
}
