//! Tanh-sinh quadrature on (0, 1) with complement tracking, and the
//! integrand family used by boundary integrals.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{to_f64, Q};
use num_traits::{Signed, Zero};
use crate::symbolic::{Denominator, Poly};

pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadResult<T = f64> {
    pub value: T,
    /// Difference between the last two levels; an upper estimate in practice.
    pub error: f64,
    pub evaluations: usize,
}

pub const DEFAULT_MAX_LEVEL: u32 = 10;
const MIN_LEVEL: u32 = 3;
const T_MAX: f64 = 6.5;

/// Integrates `f(x, 1 − x)` over (0, 1). The complement is passed exactly so
/// integrands can resolve singular behaviour at both ends. Stops when two
/// successive levels agree to `tol` relative to `∫|f|`.
pub fn tanh_sinh<T: QuadValue, F: FnMut(f64, f64) -> T>(mut f: F, tol: f64, max_level: u32) -> Result<QuadResult<T>> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut evals = 0usize;
    let mut l1 = 0.0f64;
    let mut bad = false;
    let eval_pair = |t: f64, f: &mut F, evals: &mut usize, l1: &mut f64, bad: &mut bool| -> Option<T> {
        let u = half_pi * t.sinh();
        let e = (-2.0 * u).exp();
        let x = 1.0 / (1.0 + e);
        let y = e / (1.0 + e);
        if y == 0.0 || x == 0.0 {
            return None;
        }
        let w = std::f64::consts::PI * t.cosh() * x * y;
        if w == 0.0 {
            return None;
        }
        let a = f(x, y);
        let b = if t == 0.0 { T::zero() } else { f(y, x) };
        *evals += if t == 0.0 { 1 } else { 2 };
        let s = (a + b) * w;
        let m = a.magnitude() + b.magnitude();
        if !m.is_finite() {
            *bad = true;
        }
        *l1 += m * w;
        Some(s)
    };

    let mut h = 1.0;
    let mut sum = T::zero();
    let mut k = 0;
    loop {
        let t = k as f64;
        if t > T_MAX {
            break;
        }
        match eval_pair(t, &mut f, &mut evals, &mut l1, &mut bad) {
            Some(s) => sum = sum + s,
            None => break,
        }
        k += 1;
    }
    let mut prev = sum * h;
    let mut last_err = f64::INFINITY;
    for level in 1..=max_level {
        h *= 0.5;
        let mut j = 1;
        loop {
            let t = j as f64 * h;
            if t > T_MAX {
                break;
            }
            match eval_pair(t, &mut f, &mut evals, &mut l1, &mut bad) {
                Some(s) => sum = sum + s,
                None => break,
            }
            j += 2;
        }
        if bad {
            return Err(Error::NonConvergent("integrand is not finite at a quadrature node".into()));
        }
        let cur = sum * h;
        let err = (cur - prev).magnitude();
        let scale = (l1 * h).max(f64::MIN_POSITIVE);
        last_err = err;
        if level >= MIN_LEVEL && err <= tol * scale {
            return Ok(QuadResult { value: cur, error: err, evaluations: evals });
        }
        prev = cur;
    }
    Err(Error::ToleranceNotMet { tol, estimate: last_err })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Interval {
    Unit,
    HalfLine,
}

/// `scale · x^α · N(x)/D(x) · [(1 − x^β)/(1 − x)]` on (0, 1) or (0, ∞);
/// the bracketed factor is present when `digamma_beta` is set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegrandSpec {
    pub alpha: f64,
    pub scale: f64,
    pub numerator: Poly,
    pub denominator: Denominator,
    pub digamma_beta: Option<f64>,
    pub interval: Interval,
}

fn unit_denominator() -> Denominator {
    Denominator { poly: Poly::from_ints(&[1]), roots: Vec::new() }
}

impl IntegrandSpec {
    /// `x^α` on (0, 1).
    pub fn power(alpha: f64) -> Self {
        Self::rational(alpha, 1.0, Poly::from_ints(&[1]), unit_denominator())
    }

    pub fn rational(alpha: f64, scale: f64, numerator: Poly, denominator: Denominator) -> Self {
        Self { alpha, scale, numerator, denominator, digamma_beta: None, interval: Interval::Unit }
    }

    pub fn on_half_line(mut self) -> Self {
        self.interval = Interval::HalfLine;
        self
    }

    pub fn with_digamma(mut self, beta: f64) -> Self {
        self.digamma_beta = Some(beta);
        self
    }

    pub fn scaled(mut self, s: f64) -> Self {
        self.scale *= s;
        self
    }

    /// Exponent of the leading behaviour at 0.
    pub fn exponent_at_zero(&self) -> f64 {
        let v = self.numerator.coeffs().iter().take_while(|c| c.is_zero()).count();
        self.alpha + v as f64
    }

    fn check_poles(&self) -> Result<()> {
        for r in &self.denominator.roots {
            let on_path = match self.interval {
                Interval::Unit => r.on_unit_interval(),
                Interval::HalfLine => r.unity_exponent().is_zero() && !r.coeff().is_negative(),
            };
            if on_path {
                return Err(Error::PoleOnPath(r.to_string()));
            }
        }
        Ok(())
    }

    /// Value at `x` given its complement `y = 1 − x`.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let lnx = if x < 0.5 { x.ln() } else { (-y).ln_1p() };
        // Leading zero coefficients go into the power so x^α·N(x) cannot overflow.
        let c = self.numerator.coeffs();
        let z = c.iter().take_while(|c| c.is_zero()).count();
        let n = c[z..].iter().rev().fold(0.0, |acc, c| acc * x + to_f64(*c));
        let mut v = self.scale * ((self.alpha + z as f64) * lnx).exp() * n / self.denominator.poly.eval_f64(x);
        if let Some(b) = self.digamma_beta {
            v *= if y < 0.5 { -(b * lnx).exp_m1() / y } else { (1.0 - (b * lnx).exp()) / y };
        }
        v
    }

    /// Value at complex `z` on the branch `z^α = exp(α·logz)` for the given `logz`.
    pub fn eval_complex(&self, z: Complex64, logz: Complex64) -> Complex64 {
        let n = self.numerator.eval_c64(z);
        let d = self.denominator.poly.eval_c64(z);
        (logz * self.alpha).exp() * n / d * self.scale
    }

    /// The (0,1) integrand obtained from the tail (1, ∞) by `x → 1/v`.
    fn tail(&self) -> Result<Self> {
        let dn = self.numerator.degree();
        let dd = self.denominator.poly.degree();
        let mut nrev = self.numerator.coeffs().to_vec();
        nrev.resize(dn + 1, Q::zero());
        nrev.reverse();
        let mut drev = self.denominator.poly.coeffs().to_vec();
        drev.reverse();
        let mut roots = Vec::with_capacity(self.denominator.roots.len());
        for r in &self.denominator.roots {
            roots.push(r.inv()?);
        }
        let den = Denominator::new(Poly::new(drev), roots)?;
        Ok(Self {
            alpha: -self.alpha - dn as f64 + dd as f64 - 2.0,
            scale: self.scale,
            numerator: Poly::new(nrev),
            denominator: den,
            digamma_beta: None,
            interval: Interval::Unit,
        })
    }
}

/// Integrates an [`IntegrandSpec`] over its interval.
pub fn quad_1d(f: &IntegrandSpec, tol: f64) -> Result<QuadResult> {
    f.check_poles()?;
    match f.interval {
        Interval::Unit => {
            if f.exponent_at_zero() <= -1.0 {
                return Err(Error::NonConvergent(format!("exponent {} at 0 is not above -1", f.exponent_at_zero())));
            }
            tanh_sinh(|x, y| f.eval(x, y), tol, DEFAULT_MAX_LEVEL)
        }
        Interval::HalfLine => {
            if f.digamma_beta.is_some() {
                return Err(Error::InvalidParameters("digamma factor is only supported on (0,1)".into()));
            }
            let mut head = f.clone();
            head.interval = Interval::Unit;
            let tail = f.tail()?;
            if tail.exponent_at_zero() <= -1.0 {
                return Err(Error::NonConvergent("integrand does not decay fast enough at infinity".into()));
            }
            let a = quad_1d(&head, tol)?;
            let b = quad_1d(&tail, tol)?;
            Ok(QuadResult { value: a.value + b.value, error: a.error + b.error, evaluations: a.evaluations + b.evaluations })
        }
    }
}

/// Smallest modulus among the denominator roots.
pub(crate) fn nearest_pole(f: &IntegrandSpec) -> f64 {
    f.denominator.roots.iter().map(|r| r.to_f64().norm()).fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::symbolic::{trig_correction, TrigKind};

    #[test]
    fn power_singularity() {
        let r = quad_1d(&IntegrandSpec::power(-0.5), 1e-12).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12, "{r:?}");
        let r = quad_1d(&IntegrandSpec::power(-0.95), 1e-10).unwrap();
        assert!((r.value - 20.0).abs() < 1e-8, "{r:?}");
        assert!(quad_1d(&IntegrandSpec::power(-1.0), 1e-10).is_err());
    }

    #[test]
    fn pole_off_path() {
        let den = Denominator::binomial(q(-1, 1), 1, q(2, 1)).unwrap();
        let f = IntegrandSpec::rational(-0.5, 1.0, Poly::from_ints(&[1]), den);
        let r = quad_1d(&f, 1e-13).unwrap();
        let exact = 2f64.sqrt() * (1.0 + 2f64.sqrt()).ln();
        assert!((r.value - exact).abs() < 1e-13);
        let bad = Denominator::new(Poly::from_ints(&[-1, 2]), vec![crate::symbolic::RadicalMonomial::rational(q(1, 2))]).unwrap();
        assert!(matches!(quad_1d(&IntegrandSpec::rational(0.0, 1.0, Poly::from_ints(&[1]), bad), 1e-10), Err(Error::PoleOnPath(_))));
    }

    #[test]
    fn half_line_trig_integral() {
        let den = Denominator::binomial(q(1, 1), 3, q(1, 1)).unwrap();
        let f = IntegrandSpec::rational(0.5, 3.0 * 27f64.powf(1.0 / 6.0), Poly::from_ints(&[1]), den).on_half_line();
        let r = quad_1d(&f, 1e-12).unwrap();
        let t = trig_correction(TrigKind::Sin3mG2, q(1, 6)).unwrap().to_c64().unwrap().re;
        assert!((r.value - t).abs() < 1e-10, "{} vs {t}", r.value);
    }

    #[test]
    fn digamma_factor() {
        // ∫ (1 − x^{1/2})/(1 − x) dx = ψ(3/2) − ψ(1) = 2 − 2 log 2
        let f = IntegrandSpec::power(0.0).with_digamma(0.5);
        let r = quad_1d(&f, 1e-13).unwrap();
        assert!((r.value - (2.0 - 2.0 * 2f64.ln())).abs() < 1e-13);
    }

    #[test]
    fn level_doubling_agrees_with_estimate() {
        let f = IntegrandSpec::power(-0.7);
        let a = tanh_sinh(|x, y| f.eval(x, y), 1e-6, 5).unwrap();
        let b = tanh_sinh(|x, y| f.eval(x, y), 1e-13, 10).unwrap();
        assert!((a.value - b.value).abs() <= a.error.max(1e-15));
    }
}
