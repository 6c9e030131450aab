//! The double integral over the triangle Γ₁ = {ξ, η > 0, ξ + η > 1, ξ, η < 1}.

use super::quad::{tanh_sinh, QuadResult, DEFAULT_MAX_LEVEL};
use crate::error::{Error, Result};

/// `∫_{Γ₁} (ξ+η−1)^{α1−1} ξ^{α2−1} η^{α3−1} dξ dη`.
///
/// After `ξ = (1−s)/(1−st)`, `η = (1−t)/(1−st)` this is
/// `∫∫ (1−s)^{a−1} (1−t)^{b−1} (1−st)^{−c}` with `a = α1+α2`, `b = α1+α3`,
/// `c = α1+α2+α3`. The corner `s = t = 1` is resolved by a Duffy split:
/// with `u = 1−s`, `w = 1−t` and `w = uv` (resp. `u = wv`) the integral becomes
/// `∫₀¹∫₀¹ u^{α1−1} (v^{b−1} + v^{a−1}) (1 + v − uv)^{−c} du dv`,
/// a product of two tanh-sinh rules.
pub fn gamma1_double(a1: f64, a2: f64, a3: f64, tol: f64) -> Result<QuadResult> {
    let a = a1 + a2;
    let b = a1 + a3;
    let c = a1 + a2 + a3;
    if !(a1 > 0.0 && a > 0.0 && b > 0.0) {
        return Err(Error::NonConvergent(format!(
            "need a1 > 0, a1+a2 > 0, a1+a3 > 0; got ({a1}, {a2}, {a3})"
        )));
    }
    let inner_tol = tol * 0.1;
    // The integrand is positive, so the largest inner relative error bounds
    // the relative error the inner rules contribute to the total.
    let mut inner_rel = 0.0f64;
    let mut inner_evals = 0usize;
    let mut failure = None;
    let outer = tanh_sinh(
        |u, _| {
            if failure.is_some() {
                return 0.0;
            }
            let one_minus_u = 1.0 - u;
            let inner = tanh_sinh(
                |v, _| {
                    let base = 1.0 + v * one_minus_u;
                    let lv = v.ln();
                    (((b - 1.0) * lv).exp() + ((a - 1.0) * lv).exp()) * (-c * base.ln()).exp()
                },
                inner_tol,
                DEFAULT_MAX_LEVEL,
            );
            match inner {
                Ok(r) => {
                    let w = ((a1 - 1.0) * u.ln()).exp();
                    if r.value != 0.0 {
                        inner_rel = inner_rel.max(r.error / r.value.abs());
                    }
                    inner_evals += r.evaluations;
                    w * r.value
                }
                Err(e) => {
                    failure = Some(e);
                    0.0
                }
            }
        },
        tol,
        DEFAULT_MAX_LEVEL,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(QuadResult { value: outer.value, error: outer.error + inner_rel * outer.value.abs(), evaluations: outer.evaluations + inner_evals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_triangle_values() {
        let r = gamma1_double(1.0, 1.0, 1.0, 1e-11).unwrap();
        assert!((r.value - 0.5).abs() < 1e-11, "{r:?}");
        let r = gamma1_double(1.0, 1.0, 0.5, 1e-11).unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-11, "{r:?}");
        assert!(gamma1_double(0.0, 1.0, 1.0, 1e-8).is_err());
    }

    #[test]
    fn matches_series() {
        let (a1, a2, a3) = (0.5, 0.5, 0.5);
        let r = gamma1_double(a1, a2, a3, 1e-11).unwrap();
        let f = super::super::series::f32_at_1(a1 + a2 + a3, a1 + a2 + 1.0, a1 + a3 + 1.0, 1e-13).unwrap();
        let expect = f.value / ((a1 + a2) * (a1 + a3));
        assert!((r.value - expect).abs() < 1e-9, "{} vs {expect}", r.value);
    }
}
