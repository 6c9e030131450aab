//! Midpoint-radius arithmetic over MPFR floats.
//!
//! A [`Ball`] is a multiprecision midpoint with an `f64` radius. Every
//! operation rounds the midpoint to nearest (MPFR guarantees half an ulp)
//! and folds that rounding error, plus the propagated input radii, into the
//! result radius. Radii are accumulated with a small upward inflation, so
//! they stay upper bounds despite `f64` rounding.

use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::rational::Q;

/// Decimal digits to bits, with a fixed guard.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

fn up(x: f64) -> f64 {
    // Two ulps of slack per accumulation step.
    if x == 0.0 {
        0.0
    } else {
        x * (1.0 + 4.0 * f64::EPSILON) + f64::MIN_POSITIVE
    }
}

fn mag(x: &Float) -> f64 {
    up(x.to_f64().abs())
}

/// Half-ulp rounding bound of a correctly rounded result, taken as a full ulp.
fn ulp(x: &Float) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    up(mag(x) * (2.0f64).powi(1 - x.prec() as i32))
}

#[derive(Clone, Debug)]
pub struct Ball {
    mid: Float,
    rad: f64,
}

impl Ball {
    pub fn new(mid: Float, rad: f64) -> Self {
        Self { mid, rad: up(rad) }
    }

    pub fn exact(mid: Float) -> Self {
        Self { mid, rad: 0.0 }
    }

    pub fn zero(prec: u32) -> Self {
        Self::exact(Float::new(prec))
    }

    pub fn from_i64(prec: u32, n: i64) -> Self {
        let mid = Float::with_val(prec, n);
        let rad = if mid == n { 0.0 } else { ulp(&mid) };
        Self { mid, rad }
    }

    pub fn from_rational(prec: u32, x: Q) -> Self {
        let r = rug::Rational::from((*x.numer(), *x.denom()));
        let mid = Float::with_val(prec, &r);
        let rad = if x.is_integer() && mid == *x.numer() { 0.0 } else { ulp(&mid) };
        Self { mid, rad }
    }

    pub fn from_f64(prec: u32, x: f64) -> Self {
        Self::exact(Float::with_val(prec, x))
    }

    pub fn pi(prec: u32) -> Self {
        let mid = Float::with_val(prec, Constant::Pi);
        let rad = ulp(&mid);
        Self { mid, rad }
    }

    pub fn prec(&self) -> u32 {
        self.mid.prec()
    }

    pub fn mid(&self) -> &Float {
        &self.mid
    }

    pub fn rad(&self) -> f64 {
        self.rad
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.to_f64().abs() <= self.rad || self.mid.is_zero()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.mid.is_zero() && self.rad == 0.0
    }

    /// Lower bound on |x| (0 if the ball contains zero).
    pub fn abs_lower(&self) -> f64 {
        let m = self.mid.to_f64().abs() * (1.0 - 4.0 * f64::EPSILON);
        (m - self.rad).max(0.0)
    }

    pub fn abs_upper(&self) -> f64 {
        up(mag(&self.mid) + self.rad)
    }

    pub fn neg(&self) -> Ball {
        Ball { mid: -self.mid.clone(), rad: self.rad }
    }

    pub fn add(&self, o: &Ball) -> Ball {
        let mid = Float::with_val(self.prec(), &self.mid + &o.mid);
        let rad = up(self.rad + o.rad + ulp(&mid));
        Ball { mid, rad }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        let mid = Float::with_val(self.prec(), &self.mid - &o.mid);
        let rad = up(self.rad + o.rad + ulp(&mid));
        Ball { mid, rad }
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        let mid = Float::with_val(self.prec(), &self.mid * &o.mid);
        let rad = up(mag(&self.mid) * o.rad + mag(&o.mid) * self.rad + self.rad * o.rad + ulp(&mid));
        Ball { mid, rad }
    }

    pub fn mul_rational(&self, x: Q) -> Ball {
        self.mul(&Ball::from_rational(self.prec(), x))
    }

    pub fn div(&self, o: &Ball) -> Result<Ball> {
        let lo = o.abs_lower();
        if lo == 0.0 {
            return Err(Error::DivisionNearZero);
        }
        let mid = Float::with_val(self.prec(), &self.mid / &o.mid);
        let b = mag(&o.mid);
        let rad = up((mag(&self.mid) * o.rad + b * self.rad) / (b * lo) * (1.0 + 8.0 * f64::EPSILON)
            + ulp(&mid));
        Ok(Ball { mid, rad })
    }

    pub fn sqr(&self) -> Ball {
        self.mul(self)
    }

    pub fn sqrt(&self) -> Result<Ball> {
        let lo = self.mid.to_f64() - self.rad;
        if lo < 0.0 || (lo == 0.0 && self.rad > 0.0) {
            return Err(Error::DivisionNearZero);
        }
        let mid = Float::with_val(self.prec(), self.mid.sqrt_ref());
        let rad = if self.rad == 0.0 { ulp(&mid) } else { up(self.rad / (2.0 * lo.sqrt()) + ulp(&mid)) };
        Ok(Ball { mid, rad })
    }

    pub fn exp(&self) -> Ball {
        let mid = Float::with_val(self.prec(), self.mid.exp_ref());
        let rad = up(mag(&mid) * self.rad * self.rad.exp() * (1.0 + 8.0 * f64::EPSILON) + ulp(&mid));
        Ball { mid, rad }
    }

    /// Natural log of a ball strictly inside the positive reals.
    pub fn ln(&self) -> Result<Ball> {
        let lo = self.abs_lower();
        if self.mid.is_sign_negative() || lo == 0.0 {
            return Err(Error::BranchAmbiguity(format!("ln of {}", self)));
        }
        let mid = Float::with_val(self.prec(), self.mid.ln_ref());
        let rad = up(self.rad / lo + ulp(&mid) + 2.0f64.powi(-(self.prec() as i32)));
        Ok(Ball { mid, rad })
    }

    pub fn cos(&self) -> Ball {
        let mid = Float::with_val(self.prec(), self.mid.cos_ref());
        let rad = up(self.rad + ulp(&mid) + 2.0f64.powi(-(self.prec() as i32)));
        Ball { mid, rad }
    }

    pub fn sin(&self) -> Ball {
        let mid = Float::with_val(self.prec(), self.mid.sin_ref());
        let rad = up(self.rad + ulp(&mid) + 2.0f64.powi(-(self.prec() as i32)));
        Ball { mid, rad }
    }

    /// `x^e` for a strictly positive ball and rational `e`.
    pub fn pow_rational(&self, e: Q) -> Result<Ball> {
        if e.is_integer() {
            return Ok(self.powi(*e.numer()));
        }
        Ok(self.ln()?.mul_rational(e).exp())
    }

    pub fn powi(&self, n: i64) -> Ball {
        if n == 0 {
            return Ball::from_i64(self.prec(), 1);
        }
        let mut base = self.clone();
        let mut acc = Ball::from_i64(self.prec(), 1);
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.sqr();
            k >>= 1;
        }
        if n < 0 {
            // Only reached for nonzero bases in practice.
            Ball::from_i64(self.prec(), 1).div(&acc).unwrap_or(Ball::new(
                Float::with_val(self.prec(), f64::NAN),
                f64::INFINITY,
            ))
        } else {
            acc
        }
    }

    /// `atan2(y, x)` in (-π, π].
    pub fn atan2(y: &Ball, x: &Ball) -> Result<Ball> {
        let r = (x.mid.to_f64().hypot(y.mid.to_f64()) * (1.0 - 4.0 * f64::EPSILON)) - (x.rad + y.rad);
        if r <= 0.0 {
            return Err(Error::BranchAmbiguity("argument of a ball containing zero".into()));
        }
        let mid = Float::with_val(y.prec(), y.mid.atan2_ref(&x.mid));
        let rad = up((x.rad + y.rad) / r + ulp(&mid) + 2.0f64.powi(-(y.prec() as i32)));
        Ok(Ball { mid, rad })
    }

    pub fn to_string_digits(&self, digits: usize) -> String {
        fmt_float(&self.mid, digits)
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} +/- {:.2e}]", fmt_float(&self.mid, 20), self.rad)
    }
}

/// Decimal rendering with a fixed number of significant digits, positional
/// for moderate magnitudes and scientific otherwise.
pub fn fmt_float(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let digits = digits.max(1);
    let (neg, mantissa, exp) = x.to_sign_string_exp(10, Some(digits));
    let Some(exp) = exp else { return x.to_string_radix(10, Some(digits)) };
    // value = 0.mantissa × 10^exp
    let sign = if neg { "-" } else { "" };
    if !(-4..=21).contains(&exp) {
        return format!("{sign}{}.{}e{}", &mantissa[..1], &mantissa[1..], exp - 1);
    }
    if exp <= 0 {
        format!("{sign}0.{}{mantissa}", "0".repeat((-exp) as usize))
    } else if exp as usize >= mantissa.len() {
        format!("{sign}{mantissa}{}", "0".repeat(exp as usize - mantissa.len()))
    } else {
        let (i, f) = mantissa.split_at(exp as usize);
        format!("{sign}{i}.{f}")
    }
}

/// Complex ball in rectangular form.
#[derive(Clone, Debug)]
pub struct CBall {
    pub re: Ball,
    pub im: Ball,
}

impl CBall {
    pub fn new(re: Ball, im: Ball) -> Self {
        Self { re, im }
    }

    pub fn real(re: Ball) -> Self {
        let im = Ball::zero(re.prec());
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::real(Ball::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::real(Ball::from_i64(prec, 1))
    }

    pub fn i(prec: u32) -> Self {
        Self { re: Ball::zero(prec), im: Ball::from_i64(prec, 1) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    /// Radius of a disc enclosing the rectangle.
    pub fn rad(&self) -> f64 {
        up(self.re.rad.hypot(self.im.rad))
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.re.is_exact_zero() && self.im.is_exact_zero()
    }

    pub fn abs_lower(&self) -> f64 {
        let m = self.re.mid.to_f64().hypot(self.im.mid.to_f64()) * (1.0 - 4.0 * f64::EPSILON);
        (m - self.rad()).max(0.0)
    }

    /// `e(q) = exp(2πi q)` for an exact rational `q`.
    pub fn unity(prec: u32, q: Q) -> CBall {
        let q = q - q.floor();
        let one = Ball::from_i64(prec, 1);
        let zero = Ball::zero(prec);
        if q == Q::from_integer(0) {
            return CBall::new(one, zero);
        }
        if q == Q::new(1, 2) {
            return CBall::new(one.neg(), zero);
        }
        if q == Q::new(1, 4) {
            return CBall::new(zero, one);
        }
        if q == Q::new(3, 4) {
            return CBall::new(zero, one.neg());
        }
        let theta = Ball::pi(prec).mul_rational(q * 2);
        CBall::new(theta.cos(), theta.sin())
    }

    pub fn neg(&self) -> CBall {
        CBall::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> CBall {
        CBall::new(self.re.clone(), self.im.neg())
    }

    pub fn add(&self, o: &CBall) -> CBall {
        CBall::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &CBall) -> CBall {
        CBall::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &CBall) -> CBall {
        if o.im.is_exact_zero() {
            return CBall::new(self.re.mul(&o.re), self.im.mul(&o.re));
        }
        if self.im.is_exact_zero() {
            return CBall::new(o.re.mul(&self.re), o.im.mul(&self.re));
        }
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        CBall::new(re, im)
    }

    pub fn scale(&self, r: &Ball) -> CBall {
        CBall::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn mul_rational(&self, x: Q) -> CBall {
        self.scale(&Ball::from_rational(self.prec(), x))
    }

    pub fn norm_sqr(&self) -> Ball {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn div(&self, o: &CBall) -> Result<CBall> {
        if o.contains_zero() {
            return Err(Error::DivisionNearZero);
        }
        if o.im.is_exact_zero() {
            return Ok(CBall::new(self.re.div(&o.re)?, self.im.div(&o.re)?));
        }
        let d = o.norm_sqr();
        let n = self.mul(&o.conj());
        Ok(CBall::new(n.re.div(&d)?, n.im.div(&d)?))
    }

    pub fn exp(&self) -> CBall {
        let r = self.re.exp();
        CBall::new(r.mul(&self.im.cos()), r.mul(&self.im.sin()))
    }

    /// Principal logarithm, imaginary part in (-π, π].
    pub fn ln(&self) -> Result<CBall> {
        if self.contains_zero() {
            return Err(Error::BranchAmbiguity(format!("log argument {} contains zero", self)));
        }
        let exact_real_axis = self.im.is_exact_zero();
        if exact_real_axis {
            if self.re.mid.is_sign_positive() {
                return Ok(CBall::real(self.re.ln()?));
            }
            return Ok(CBall::new(self.re.neg().ln()?, Ball::pi(self.prec())));
        }
        if self.im.contains_zero() && !self.re.mid.is_sign_positive() {
            return Err(Error::BranchAmbiguity(format!("log argument {}", self)));
        }
        let re = self.norm_sqr().ln()?.mul_rational(Q::new(1, 2));
        let im = Ball::atan2(&self.im, &self.re)?;
        Ok(CBall::new(re, im))
    }

    /// Principal power `z^e` for rational `e`.
    pub fn pow_rational(&self, e: Q) -> Result<CBall> {
        if e.is_integer() {
            return self.powi(*e.numer());
        }
        if self.im.is_exact_zero() && self.re.mid.is_sign_positive() && !self.re.contains_zero() {
            return Ok(CBall::real(self.re.pow_rational(e)?));
        }
        Ok(self.ln()?.mul_rational(e).exp())
    }

    pub fn powi(&self, n: i64) -> Result<CBall> {
        let mut base = self.clone();
        let mut acc = CBall::one(self.prec());
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        if n < 0 {
            CBall::one(self.prec()).div(&acc)
        } else {
            Ok(acc)
        }
    }

    pub fn to_string_digits(&self, digits: usize) -> String {
        let re = fmt_float(&self.re.mid, digits);
        if self.im.mid.is_zero() {
            return re;
        }
        let im = fmt_float(&self.im.mid, digits);
        if im.starts_with('-') {
            format!("{re} - {}i", &im[1..])
        } else {
            format!("{re} + {im}i")
        }
    }
}

impl fmt::Display for CBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i{}", self.re, self.im)
    }
}

/// Float power helper used by kernels that do not track radii.
pub fn float_pow(x: &Float, e: &Float) -> Float {
    Float::with_val(x.prec(), x.pow(e))
}
