//! Pochhammer-regularized integrals `∫_P x^α f(x) dx` over (0, 1).

use num_complex::Complex64;

use super::quad::{nearest_pole, tanh_sinh, Interval, IntegrandSpec, QuadResult, DEFAULT_MAX_LEVEL};
use crate::error::{Error, Result};

/// `∫_ε^1 x^α f dx + (e(α) − 1)^{−1} ∮_{C_ε} x^α f dx`, where `C_ε` is the
/// circle `x = ε e(t)`, `t ∈ [0, 1]`, with `arg x^α = 2παt` along it. The
/// exponent is `alpha + f.alpha`. Agrees with the ordinary integral when
/// that converges and is independent of `ε`. `eps = None` picks
/// `min(1/2, half the distance to the nearest pole)`.
pub fn poch_contour(alpha: f64, f: &IntegrandSpec, eps: Option<f64>, tol: f64) -> Result<QuadResult> {
    if f.interval != Interval::Unit || f.digamma_beta.is_some() {
        return Err(Error::InvalidParameters("contour regularization needs a rational integrand on (0,1)".into()));
    }
    let a = alpha + f.alpha;
    if (a - a.round()).abs() < 1e-12 {
        return Err(Error::IntegerAlpha(a));
    }
    let pole = nearest_pole(f);
    for r in &f.denominator.roots {
        if r.on_unit_interval() {
            return Err(Error::PoleOnPath(r.to_string()));
        }
    }
    let eps = eps.unwrap_or_else(|| 0.5f64.min(0.5 * pole));
    if !(eps > 0.0 && eps < 1.0 && eps < pole) {
        return Err(Error::BadRadius(eps));
    }
    let mut g = f.clone();
    g.alpha = a;

    // Straight part on (ε, 1): x = ε + (1 − ε) s.
    let span = 1.0 - eps;
    let straight = tanh_sinh(|s, sc| g.eval(eps + span * s, span * sc) * span, tol, DEFAULT_MAX_LEVEL)?;

    // Circle: 2πi ε^{a+1} ∫₀¹ e((a+1)t) R(ε e(t)) dt with R = f / x^{f.alpha}.
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut r = f.clone();
    r.alpha = 0.0;
    let circle = tanh_sinh(
        |t, _| {
            let z = Complex64::from_polar(eps, two_pi * t);
            let phase = Complex64::from_polar(1.0, two_pi * (a + 1.0) * t);
            phase * r.eval_complex(z, Complex64::new(0.0, 0.0))
        },
        tol,
        DEFAULT_MAX_LEVEL,
    )?;
    let pre = Complex64::new(0.0, two_pi * eps.powf(a + 1.0));
    let loop_val = pre * circle.value;
    let ea = Complex64::from_polar(1.0, two_pi * a) - 1.0;
    let reg = loop_val / ea;
    let err = straight.error + (pre.norm() * circle.error) / ea.norm();
    Ok(QuadResult { value: straight.value + reg.re, error: err + reg.im.abs(), evaluations: straight.evaluations + circle.evaluations })
}
