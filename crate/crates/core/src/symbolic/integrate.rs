//! Exact integrals of `x^α · N(x)/D(x)` over (0, 1) as log combinations,
//! digamma differences, and the trigonometric exceptional-divisor terms.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::expr::AlgExpr;
use super::logcomb::{LogCombination, LogTerm};
use super::monomial::RadicalMonomial;
use super::poly::{Denominator, Poly};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, frac, to_f64, Q};

/// `∫₀¹ x^{s−1}/(c − x) dx` for `s = n/m > 0`:
/// `−γ^{n−m} Σ_{i<m} e(−ni/m) log(1 − e(i/m)/γ)` with `γ = c^{1/m}`.
pub fn base_log_integral(n: i64, m: i64, c: &RadicalMonomial) -> Result<LogCombination> {
    if m <= 0 {
        return Err(Error::InvalidExponent(format!("denominator m = {m} must be positive")));
    }
    let s = Q::new(n, m);
    if !s.is_positive() {
        return Err(Error::InvalidExponent(format!("n/m = {} must be positive", fmt_rational(s))));
    }
    pole_integral(s, c)
}

/// `∫₀¹ x^{s−1}/(c − x) dx`, analytically continued to non-integer `s ≤ 0`.
pub(crate) fn pole_integral(s: Q, c: &RadicalMonomial) -> Result<LogCombination> {
    if c.on_unit_interval() {
        return Err(Error::PoleOnPath(c.to_string()));
    }
    if s.is_integer() && !s.is_positive() {
        return Err(Error::InvalidExponent(format!("continuation has a pole at s = {}", fmt_rational(s))));
    }
    let cexpr = AlgExpr::Mono(c.clone());
    // Reduce to t ∈ (0, 1] and walk with I(t+1) = c·I(t) − 1/t.
    let t = if s.is_integer() { Q::one() } else { frac(s) };
    let mut cur = pole_integral_unit(t, c)?;
    let mut at = t;
    while at < s {
        cur = cur.scale(&cexpr).add(&LogCombination::constant(AlgExpr::rational(-at.recip())));
        at += Q::one();
    }
    while at > s {
        // I(at − 1) = (I(at) + 1/(at − 1)) / c
        let prev = at - Q::one();
        cur = cur.add(&LogCombination::constant(AlgExpr::rational(prev.recip()))).div(&cexpr)?;
        at = prev;
    }
    Ok(cur)
}

fn pole_integral_unit(t: Q, c: &RadicalMonomial) -> Result<LogCombination> {
    let (n, m) = (*t.numer(), *t.denom());
    let gamma = c.pow(Q::new(1, m))?;
    let lead = gamma.pow(Q::from_integer(n - m))?.neg();
    let ginv = gamma.inv()?;
    let terms = (0..m)
        .map(|i| {
            let coeff = lead.mul(&RadicalMonomial::unity(Q::new(-n * i, m)));
            let arg = AlgExpr::one().sub(&AlgExpr::Mono(RadicalMonomial::unity(Q::new(i, m)).mul(&ginv)));
            LogTerm { coeff: AlgExpr::Mono(coeff), arg }
        })
        .collect();
    Ok(LogCombination::new(AlgExpr::zero(), terms))
}

/// `∫₀¹ (x^{n′/m} − x^{n/m})/(1 − x) dx/x = ψ(n/m) − ψ(n′/m)`, as
/// `−Σ_{i=1}^{m−1} (e(−n′i/m) − e(−ni/m)) log(1 − e(i/m))`.
/// Accepts `0 < n, n′ ≤ m`.
pub fn digamma_integral(n: i64, n2: i64, m: i64) -> Result<LogCombination> {
    if m <= 0 || n <= 0 || n2 <= 0 || n > m || n2 > m {
        return Err(Error::InvalidExponent(format!("need 0 < n, n' <= m, got n={n}, n'={n2}, m={m}")));
    }
    let terms = (1..m)
        .map(|i| {
            let coeff = AlgExpr::unity(Q::new(-n * i, m)).sub(&AlgExpr::unity(Q::new(-n2 * i, m)));
            let arg = AlgExpr::one().sub(&AlgExpr::unity(Q::new(i, m)));
            LogTerm { coeff, arg }
        })
        .collect();
    Ok(LogCombination::new(AlgExpr::zero(), terms))
}

/// `ψ(x) − ψ(y)` for positive rationals, via `ψ(z+1) = ψ(z) + 1/z`.
pub fn digamma_difference(x: Q, y: Q) -> Result<LogCombination> {
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::InvalidExponent(format!(
            "digamma arguments must be positive, got {} and {}",
            fmt_rational(x),
            fmt_rational(y)
        )));
    }
    // Shift each argument into (0, 1], collecting the rational part.
    let shift = |z: Q| {
        let mut z0 = frac(z);
        if z0.is_zero() {
            z0 = Q::one();
        }
        let mut r = Q::zero();
        let mut w = z0;
        while w < z {
            r += w.recip();
            w += Q::one();
        }
        (z0, r)
    };
    let (x0, rx) = shift(x);
    let (y0, ry) = shift(y);
    let m = num_integer::lcm(*x0.denom(), *y0.denom());
    let nx = *(x0 * Q::from_integer(m)).numer();
    let ny = *(y0 * Q::from_integer(m)).numer();
    let base = if m == 1 { LogCombination::zero() } else { digamma_integral(nx, ny, m)? };
    Ok(base.add(&LogCombination::constant(AlgExpr::rational(rx - ry))))
}

/// `∫₀¹ x^α N(x) / Π_j (x − ρ_j) dx`, with `N` given by ascending
/// coefficients. Factors of `x` in `N` are moved into the exponent first;
/// if the exponent is still `≤ −1` the integral diverges at 0 and is only
/// returned (as its Pochhammer-regularized value) when `regularize` is set.
pub fn closed_form_integral(
    alpha: Q,
    numerator: &[AlgExpr],
    roots: &[(RadicalMonomial, u32)],
    regularize: bool,
) -> Result<LogCombination> {
    for (r, mult) in roots {
        if *mult != 1 {
            return Err(Error::RepeatedRoot);
        }
        if r.on_unit_interval() {
            return Err(Error::PoleOnPath(r.to_string()));
        }
    }
    for (i, (a, _)) in roots.iter().enumerate() {
        if roots[..i].iter().any(|(b, _)| b == a) {
            return Err(Error::RepeatedRoot);
        }
    }
    let lead_zeros = numerator.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros == numerator.len() {
        return Ok(LogCombination::zero());
    }
    let alpha = alpha + Q::from_integer(lead_zeros as i64);
    let num: Vec<AlgExpr> = numerator[lead_zeros..].to_vec();
    if alpha <= Q::from_integer(-1) {
        if !regularize {
            return Err(Error::NonConvergent(format!("x^{} is not integrable at 0", fmt_rational(alpha))));
        }
        if alpha.is_integer() {
            return Err(Error::InvalidExponent(format!("regularization undefined at integer exponent {}", fmt_rational(alpha))));
        }
    }
    let rho: Vec<RadicalMonomial> = roots.iter().map(|(r, _)| r.clone()).collect();
    let coset = full_coset(&rho);
    let den = match &coset {
        Some(c) => {
            let mut d = vec![AlgExpr::zero(); rho.len() + 1];
            d[0] = AlgExpr::Mono(c.neg());
            d[rho.len()] = AlgExpr::one();
            d
        }
        None => expand_roots(&rho),
    };
    let (quot, rem) = divrem_monic(&num, &den);

    let mut out = LogCombination::zero();
    for (k, qk) in quot.iter().enumerate() {
        if qk.is_zero() {
            continue;
        }
        let e = alpha + Q::from_integer(k as i64 + 1);
        if e.is_zero() {
            return Err(Error::InvalidExponent("polynomial part hits x^-1".into()));
        }
        out = out.add(&LogCombination::constant(qk.mul_rational(e.recip())));
    }
    let n = rho.len() as i64;
    for (j, r) in rho.iter().enumerate() {
        let value = eval_at(&rem, r);
        if value.is_zero() {
            continue;
        }
        let dprime = match &coset {
            Some(_) => AlgExpr::Mono(r.pow(Q::from_integer(n - 1))?.mul_rational(Q::from_integer(n))),
            None => AlgExpr::prod(
                rho.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, s)| AlgExpr::Mono(r.clone()).sub(&AlgExpr::Mono(s.clone()))),
            ),
        };
        let residue = value.div(&dprime)?;
        // ∫ x^α/(x − ρ) = −∫ x^α/(ρ − x)
        let pole = pole_integral(alpha + Q::one(), r)?;
        out = out.sub(&pole.scale(&residue));
    }
    Ok(out)
}

/// [`closed_form_integral`] for a rational numerator over a known denominator.
pub fn rational_integral(alpha: Q, numerator: &Poly, den: &Denominator, regularize: bool) -> Result<LogCombination> {
    let lc = den.leading();
    let num: Vec<AlgExpr> = numerator.scale(lc.recip()).to_exprs();
    closed_form_integral(alpha, &num, &den.root_list(), regularize)
}

/// If `rho` is exactly the set of n-th roots of some `c`, returns `c`.
fn full_coset(rho: &[RadicalMonomial]) -> Option<RadicalMonomial> {
    let n = rho.len();
    if n == 0 {
        return None;
    }
    let c = rho[0].pow(Q::from_integer(n as i64)).ok()?;
    for r in rho {
        if r.pow(Q::from_integer(n as i64)).ok()? != c {
            return None;
        }
    }
    Some(c)
}

fn expand_roots(rho: &[RadicalMonomial]) -> Vec<AlgExpr> {
    let mut p = vec![AlgExpr::one()];
    for r in rho {
        let mut next = vec![AlgExpr::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(&AlgExpr::Mono(r.clone())));
        }
        p = next;
    }
    p
}

/// Division by a monic polynomial; returns (quotient, remainder).
fn divrem_monic(num: &[AlgExpr], den: &[AlgExpr]) -> (Vec<AlgExpr>, Vec<AlgExpr>) {
    let d = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= d {
        return (Vec::new(), rem);
    }
    let mut quot = vec![AlgExpr::zero(); rem.len() - d];
    for k in (0..quot.len()).rev() {
        let qk = rem[k + d].clone();
        if qk.is_zero() {
            continue;
        }
        for j in 0..d {
            rem[k + j] = rem[k + j].sub(&qk.mul(&den[j]));
        }
        rem[k + d] = AlgExpr::zero();
        quot[k] = qk;
    }
    rem.truncate(d);
    (quot, rem)
}

fn eval_at(p: &[AlgExpr], x: &RadicalMonomial) -> AlgExpr {
    let mut pw = RadicalMonomial::one();
    let mut terms = Vec::with_capacity(p.len());
    for c in p {
        terms.push(c.mul(&AlgExpr::Mono(pw.clone())));
        pw = pw.mul(x);
    }
    AlgExpr::sum(terms)
}

/// Exceptional-divisor contributions, each `A(α)·π / trig(π(α + t))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TrigKind {
    #[serde(rename = "cos_2m")]
    Cos2m,
    #[serde(rename = "cos_2m_shift")]
    Cos2mShift,
    #[serde(rename = "sin_3m_g2")]
    Sin3mG2,
    #[serde(rename = "sin_3m_g3")]
    Sin3mG3,
    #[serde(rename = "sin_4m_g2")]
    Sin4mG2,
    #[serde(rename = "cos_4m_g3")]
    Cos4mG3,
}

pub const TRIG_KINDS: [TrigKind; 6] =
    [TrigKind::Cos2m, TrigKind::Cos2mShift, TrigKind::Sin3mG2, TrigKind::Sin3mG3, TrigKind::Sin4mG2, TrigKind::Cos4mG3];

struct TrigShape {
    /// Prefactor `base^(slope·α + offset)`.
    base: i64,
    slope: Q,
    offset: Q,
    /// Extra constant divisor (√2 for the 4m kinds).
    sqrt2: bool,
    /// Phase `t` in `trig(π(α + t))`.
    shift: Q,
    sine: bool,
}

impl TrigKind {
    pub fn name(self) -> &'static str {
        match self {
            TrigKind::Cos2m => "cos_2m",
            TrigKind::Cos2mShift => "cos_2m_shift",
            TrigKind::Sin3mG2 => "sin_3m_g2",
            TrigKind::Sin3mG3 => "sin_3m_g3",
            TrigKind::Sin4mG2 => "sin_4m_g2",
            TrigKind::Cos4mG3 => "cos_4m_g3",
        }
    }

    /// Human-readable formula in α.
    pub fn formula(self) -> &'static str {
        match self {
            TrigKind::Cos2m => "4^a*pi/cos(pi*a)",
            TrigKind::Cos2mShift => "2^(2a-1)*pi/cos(pi*a-pi/2)",
            TrigKind::Sin3mG2 => "3^(3a)*pi/sin(pi*a+pi/3)",
            TrigKind::Sin3mG3 => "3^(3a)*pi/sin(pi*a+2pi/3)",
            TrigKind::Sin4mG2 => "4^(3a-1)*pi/(2^(1/2)*sin(pi*a+pi/4))",
            TrigKind::Cos4mG3 => "4^(3a-1)*pi/(2^(1/2)*cos(pi*a+pi/4))",
        }
    }

    fn shape(self) -> TrigShape {
        let q = Q::new;
        let (base, slope, offset, sqrt2, shift, sine) = match self {
            TrigKind::Cos2m => (4, q(1, 1), q(0, 1), false, q(0, 1), false),
            TrigKind::Cos2mShift => (2, q(2, 1), q(-1, 1), false, q(-1, 2), false),
            TrigKind::Sin3mG2 => (3, q(3, 1), q(0, 1), false, q(1, 3), true),
            TrigKind::Sin3mG3 => (3, q(3, 1), q(0, 1), false, q(2, 3), true),
            TrigKind::Sin4mG2 => (4, q(3, 1), q(-1, 1), true, q(1, 4), true),
            TrigKind::Cos4mG3 => (4, q(3, 1), q(-1, 1), true, q(1, 4), false),
        };
        TrigShape { base, slope, offset, sqrt2, shift, sine }
    }

    /// True when the trigonometric denominator vanishes at `alpha`.
    pub fn has_pole(self, alpha: Q) -> bool {
        let s = self.shape();
        let u = alpha + s.shift;
        if s.sine {
            u.is_integer()
        } else {
            (u - Q::new(1, 2)).is_integer()
        }
    }

    /// Double-precision value at real `alpha`.
    pub fn value_f64(self, alpha: f64) -> f64 {
        let s = self.shape();
        let pre = (s.base as f64).powf(to_f64(s.slope) * alpha + to_f64(s.offset));
        let u = std::f64::consts::PI * (alpha + to_f64(s.shift));
        let t = if s.sine { u.sin() } else { u.cos() };
        let d = if s.sqrt2 { std::f64::consts::SQRT_2 } else { 1.0 };
        pre * std::f64::consts::PI / (d * t)
    }
}

impl fmt::Display for TrigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TrigKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TRIG_KINDS
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown trig kind {s:?}")))
    }
}

/// The term `A(α)·π / trig(π(α + t))` with algebraic coefficient built from
/// `cos(πu) = (e(u/2) + e(−u/2))/2` and `sin(πu) = (e(u/2) − e(−u/2))/(2i)`.
pub fn trig_correction(kind: TrigKind, alpha: Q) -> Result<LogCombination> {
    if kind.has_pole(alpha) {
        return Err(Error::TrigPole(fmt_rational(alpha)));
    }
    let s = kind.shape();
    let mut pre = RadicalMonomial::root(s.base, s.slope * alpha + s.offset);
    if s.sqrt2 {
        pre = pre.mul(&RadicalMonomial::root(2, Q::new(-1, 2)));
    }
    let u = alpha + s.shift;
    let plus = AlgExpr::unity(u / Q::from_integer(2));
    let minus = AlgExpr::unity(-u / Q::from_integer(2));
    let trig = if s.sine {
        // 1/(2i) = e(3/4)/2
        plus.sub(&minus).mul(&AlgExpr::Mono(RadicalMonomial::unity(Q::new(3, 4)).mul_rational(Q::new(1, 2))))
    } else {
        plus.add(&minus).mul_rational(Q::new(1, 2))
    };
    let num = AlgExpr::Pi.mul(&AlgExpr::Mono(pre));
    Ok(LogCombination::constant(num.div(&trig)?))
}
