//! `F(1, 1, p3; p4, p5; 1) = Σ_k k! (p3)_k / ((p4)_k (p5)_k)` by Levin-u
//! acceleration of the partial sums in multiprecision.

use rug::ops::Pow;
use rug::{Float, Rational};

use super::quad::QuadResult;
use crate::ball::bits_for_digits;
use crate::error::{Error, Result};
use crate::rational::{to_f64, Q};

/// Product definition `(p)_k = p(p+1)…(p+k−1)`, `(p)_0 = 1`.
pub fn pochhammer(p: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (p + i as f64))
}

#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: Float,
    /// Relative difference between the last two Levin orders.
    pub error: f64,
    /// Number of series terms consumed.
    pub terms: usize,
}

/// Parameter excess `p4 + p5 − p3 − 2`; the series converges at 1 iff it is positive.
pub fn excess(p3: f64, p4: f64, p5: f64) -> f64 {
    p4 + p5 - p3 - 2.0
}

/// Levin order cap for a target of `digits` decimal digits.
pub fn order_cap(digits: u32) -> usize {
    20usize.max((1.3 * digits as f64).ceil() as usize + 10)
}

const MIN_ORDER: usize = 8;
const AGREE: usize = 3;

fn nonpositive_integer(x: &Float) -> bool {
    x.is_integer() && *x <= 0
}

fn q_float(prec: u32, x: Q) -> Float {
    Float::with_val(prec, Rational::from((*x.numer(), *x.denom())))
}

/// Exact rational parameters, `digits` significant digits requested.
pub fn f32_at_1_q(p3: Q, p4: Q, p5: Q, digits: u32) -> Result<SeriesResult> {
    let prec = bits_for_digits(2 * digits + 20);
    sum_series(q_float(prec, p3), q_float(prec, p4), q_float(prec, p5), digits, prec)
}

/// Double-precision parameters; the tolerance is relative.
pub fn f32_at_1(p3: f64, p4: f64, p5: f64, tol: f64) -> Result<QuadResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameters(format!("tolerance {tol} must be positive")));
    }
    let digits = ((-tol.log10()).ceil() as u32 + 3).max(16);
    let prec = bits_for_digits(2 * digits + 20);
    let r = sum_series(Float::with_val(prec, p3), Float::with_val(prec, p4), Float::with_val(prec, p5), digits, prec)?;
    if r.error > tol {
        return Err(Error::ToleranceNotMet { tol, estimate: r.error });
    }
    Ok(QuadResult { value: r.value.to_f64(), error: r.error * r.value.to_f64().abs(), evaluations: r.terms })
}

fn sum_series(p3: Float, p4: Float, p5: Float, digits: u32, prec: u32) -> Result<SeriesResult> {
    if nonpositive_integer(&p4) || nonpositive_integer(&p5) {
        return Err(Error::InvalidParameters("lower parameter is a nonpositive integer".into()));
    }
    let tol = 10f64.powi(-(digits as i32));
    // A nonpositive integer p3 truncates the series.
    if nonpositive_integer(&p3) {
        let n = (-p3.to_f64()) as usize;
        let (terms, _) = terms(&p3, &p4, &p5, n + 1, prec);
        let mut s = Float::with_val(prec, 0);
        for t in &terms {
            s += t;
        }
        return Ok(SeriesResult { value: s, error: 0.0, terms: n + 1 });
    }
    let s = excess(p3.to_f64(), p4.to_f64(), p5.to_f64());
    if s <= 0.0 {
        return Err(Error::Divergent(s));
    }
    let cap = order_cap(digits);
    let (a, partial) = terms(&p3, &p4, &p5, cap + 1, prec);
    // Low orders can agree by accident, so an estimate counts only after
    // MIN_ORDER and is the largest of the last AGREE successive differences.
    let mut best: Option<(Float, f64)> = None;
    let mut prev: Option<Float> = None;
    let mut diffs: Vec<f64> = Vec::new();
    for k in 2..=cap {
        let l = levin_u(&a, &partial, k, prec)?;
        if let Some(p) = &prev {
            let diff = Float::with_val(prec, &l - p).abs().to_f64();
            diffs.push(diff / l.to_f64().abs().max(f64::MIN_POSITIVE));
            if k >= MIN_ORDER && diffs.len() >= AGREE {
                let rel = diffs[diffs.len() - AGREE..].iter().copied().fold(0.0, f64::max);
                if best.as_ref().is_none_or(|(_, e)| rel < *e) {
                    best = Some((l.clone(), rel));
                }
                if rel <= tol {
                    break;
                }
            }
        }
        prev = Some(l);
    }
    let (value, error) = best.expect("order cap exceeds MIN_ORDER");
    if error > tol {
        return Err(Error::ToleranceNotMet { tol, estimate: error });
    }
    tail_cross_check(&p3, &p4, &p5, s, &value)?;
    Ok(SeriesResult { value, error, terms: cap + 1 })
}

/// Terms and partial sums of the series, first `n` of each.
fn terms(p3: &Float, p4: &Float, p5: &Float, n: usize, prec: u32) -> (Vec<Float>, Vec<Float>) {
    let mut a = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    let mut t = Float::with_val(prec, 1);
    let mut acc = Float::with_val(prec, 0);
    for k in 0..n {
        acc += &t;
        a.push(t.clone());
        s.push(acc.clone());
        // t_{k+1}/t_k = (k+1)(k+p3)/((k+p4)(k+p5))
        let kf = Float::with_val(prec, k as u32);
        let num = Float::with_val(prec, &kf + 1u32) * Float::with_val(prec, &kf + p3);
        let den = Float::with_val(prec, &kf + p4) * Float::with_val(prec, &kf + p5);
        t = t * num / den;
    }
    (a, s)
}

/// Levin u-transform of order `k` from index 0 with `ω_n = (n+1) a_n`.
fn levin_u(a: &[Float], s: &[Float], k: usize, prec: u32) -> Result<Float> {
    let mut num = Float::with_val(prec, 0);
    let mut den = Float::with_val(prec, 0);
    let last = Float::with_val(prec, (k + 1) as u32);
    let mut binom = Float::with_val(prec, 1);
    for j in 0..=k {
        let nj = Float::with_val(prec, (j + 1) as u32);
        let ratio = Float::with_val(prec, &nj / &last);
        let pw = ratio.pow(k as i32 - 1);
        let mut c = binom.clone() * pw;
        if j % 2 == 1 {
            c = -c;
        }
        let w = Float::with_val(prec, &nj * &a[j]);
        if w.is_zero() {
            return Err(Error::NonConvergent("vanishing series term in Levin transform".into()));
        }
        let cw = c / &w;
        num += Float::with_val(prec, &cw * &s[j]);
        den += cw;
        // C(k, j+1) = C(k, j)(k−j)/(j+1)
        binom = binom * (k - j) as u32 / (j + 1) as u32;
    }
    Ok(num / den)
}

/// Direct partial sum plus an asymptotic tail, compared loosely with the
/// accelerated value to catch gross failures of the transform.
fn tail_cross_check(p3: &Float, p4: &Float, p5: &Float, s: f64, value: &Float) -> Result<()> {
    let (p3, p4, p5) = (p3.to_f64(), p4.to_f64(), p5.to_f64());
    let n = 20_000usize;
    let mut t = 1.0f64;
    let mut sum = 0.0f64;
    for k in 0..n {
        sum += t;
        let k = k as f64;
        t *= (k + 1.0) * (k + p3) / ((k + p4) * (k + p5));
    }
    // Terms behave like C·k^{−1−s}: Σ_{k≥N} ≈ t_N (N − 1/2)/s.
    let tail = t * (n as f64 - 0.5) / s;
    let approx = sum + tail;
    let v = value.to_f64();
    let tolerance = 1e-3 * v.abs().max(1.0) + 10.0 * tail.abs() / n as f64;
    if (approx - v).abs() > tolerance {
        return Err(Error::ToleranceNotMet { tol: tolerance, estimate: (approx - v).abs() });
    }
    Ok(())
}

/// `F` value as f64 from exact parameters, for quick checks.
pub fn f32_at_1_f64(p3: Q, p4: Q, p5: Q) -> Result<f64> {
    f32_at_1(to_f64(p3), to_f64(p4), to_f64(p5), 1e-13).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(1.0, 4), 24.0);
        assert_eq!(pochhammer(0.5, 2), 0.75);
    }

    #[test]
    fn zeta_two() {
        let r = f32_at_1(1.0, 2.0, 2.0, 1e-12).unwrap();
        assert!((r.value - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
    }

    #[test]
    fn gauss_reduction() {
        for a in [0.3, 1.7, 5.0] {
            let r = f32_at_1(a, a, 4.0, 1e-12).unwrap();
            assert!((r.value - 1.5).abs() < 1e-12);
        }
    }

    #[test]
    fn high_precision_value() {
        // F(1,1,1/2;5/4,7/4;1) = (3/2)·√2·log(1+√2)
        let r = f32_at_1_q(q(1, 2), q(5, 4), q(7, 4), 40).unwrap();
        let prec = r.value.prec();
        let two = Float::with_val(prec, 2);
        let s2 = two.sqrt();
        let exact = Float::with_val(prec, 1.5) * &s2 * Float::with_val(prec, Float::with_val(prec, 1 + &s2).ln());
        let diff = Float::with_val(prec, &r.value - &exact).abs().to_f64();
        assert!(diff < 1e-38, "{diff:e}");
    }

    #[test]
    fn divergence_and_truncation() {
        assert!(matches!(f32_at_1(1.0, 1.5, 1.5, 1e-10), Err(Error::Divergent(_))));
        // p3 = −2: 1 + 1·(−2)/(3·4) + 2·(−2)(−1)/(3·4·4·5)
        let r = f32_at_1(-2.0, 3.0, 4.0, 1e-12).unwrap();
        assert!((r.value - (1.0 - 2.0 / 12.0 + 4.0 / 240.0)).abs() < 1e-15);
    }
}
