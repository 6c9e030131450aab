//! Monomials `c · e(q) · Π p^(e_p)` with `c` rational, `e(q) = exp(2πiq)`
//! and prime bases raised to rational exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ball::{Ball, CBall};
use crate::error::{Error, Result};
use crate::rational::{factor, fmt_rational, frac, parse_rational, Q};

/// Canonical form: `coeff` carries sign and all integer prime powers,
/// `unity ∈ [0, 1/2)` (a half-turn is folded into the sign of `coeff`), and
/// every radical exponent lies strictly in (0, 1). Zero has `coeff = 0`,
/// `unity = 0` and no radicals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalMonomial {
    coeff: Q,
    unity: Q,
    radicals: BTreeMap<i64, Q>,
}

fn checked_pow(p: i64, k: u32) -> Option<i64> {
    p.checked_pow(k)
}

impl RadicalMonomial {
    pub fn zero() -> Self {
        Self { coeff: Q::zero(), unity: Q::zero(), radicals: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::rational(Q::one())
    }

    pub fn rational(c: Q) -> Self {
        Self { coeff: c, unity: Q::zero(), radicals: BTreeMap::new() }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(Q::from_integer(n))
    }

    /// `e(q) = exp(2πi q)`.
    pub fn unity(q: Q) -> Self {
        Self::from_parts(Q::one(), q, BTreeMap::new())
    }

    /// `n^e` for a positive integer `n`, as a positive real.
    pub fn root(n: i64, e: Q) -> Self {
        assert!(n > 0, "radical base must be positive");
        let mut radicals = BTreeMap::new();
        for (p, k) in factor(n) {
            *radicals.entry(p).or_insert_with(Q::zero) += e * Q::from_integer(k as i64);
        }
        Self::from_parts(Q::one(), Q::zero(), radicals)
    }

    pub fn from_parts(coeff: Q, unity: Q, radicals: BTreeMap<i64, Q>) -> Self {
        let mut m = Self { coeff, unity, radicals };
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        if self.coeff.is_zero() {
            *self = Self::zero();
            return;
        }
        let mut u = frac(self.unity);
        if u >= Q::new(1, 2) {
            u -= Q::new(1, 2);
            self.coeff = -self.coeff;
        }
        self.unity = u;
        let mut radicals = BTreeMap::new();
        for (&p, &e) in &self.radicals {
            // Split composite bases, should any sneak in.
            for (prime, k) in factor(p) {
                *radicals.entry(prime).or_insert_with(Q::zero) += e * Q::from_integer(k as i64);
            }
        }
        let mut kept = BTreeMap::new();
        for (p, e) in radicals {
            let whole = e.floor();
            let rest = e - whole;
            let w = *whole.numer();
            if w != 0 {
                let pk = checked_pow(p, w.unsigned_abs() as u32).expect("radical power overflow");
                let f = Q::from_integer(pk);
                self.coeff = if w > 0 { self.coeff * f } else { self.coeff / f };
            }
            if !rest.is_zero() {
                kept.insert(p, rest);
            }
        }
        self.radicals = kept;
    }

    pub fn coeff(&self) -> Q {
        self.coeff
    }

    pub fn unity_exponent(&self) -> Q {
        self.unity
    }

    pub fn radicals(&self) -> &BTreeMap<i64, Q> {
        &self.radicals
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.unity.is_zero() && self.radicals.is_empty()
    }

    /// True for plain rationals.
    pub fn as_rational(&self) -> Option<Q> {
        (self.unity.is_zero() && self.radicals.is_empty()).then_some(self.coeff)
    }

    /// Same unity and radical part; such monomials add by adding coefficients.
    pub fn same_shape(&self, o: &Self) -> bool {
        self.unity == o.unity && self.radicals == o.radicals
    }

    pub fn with_coeff(&self, c: Q) -> Self {
        Self::from_parts(c, self.unity, self.radicals.clone())
    }

    pub fn neg(&self) -> Self {
        self.with_coeff(-self.coeff)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut radicals = self.radicals.clone();
        for (&p, &e) in &o.radicals {
            *radicals.entry(p).or_insert_with(Q::zero) += e;
        }
        Self::from_parts(self.coeff * o.coeff, self.unity + o.unity, radicals)
    }

    pub fn mul_rational(&self, c: Q) -> Self {
        self.with_coeff(self.coeff * c)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionNearZero);
        }
        let radicals = self.radicals.iter().map(|(&p, &e)| (p, -e)).collect();
        Ok(Self::from_parts(self.coeff.recip(), -self.unity, radicals))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Argument as a fraction of a full turn, in (-1/2, 1/2].
    pub fn turn(&self) -> Q {
        let t = if self.coeff.is_negative() { self.unity + Q::new(1, 2) } else { self.unity };
        if t > Q::new(1, 2) {
            t - Q::one()
        } else {
            t
        }
    }

    /// Principal power `z^r = exp(r · Log z)`.
    pub fn pow(&self, r: Q) -> Result<Self> {
        if self.is_zero() {
            return if r.is_positive() { Ok(Self::zero()) } else { Err(Error::DivisionNearZero) };
        }
        if r.is_integer() {
            let n = *r.numer();
            let mut acc = Self::one();
            for _ in 0..n.unsigned_abs() {
                acc = acc.mul(self);
            }
            return if n < 0 { acc.inv() } else { Ok(acc) };
        }
        let mut radicals: BTreeMap<i64, Q> = self.radicals.iter().map(|(&p, &e)| (p, e * r)).collect();
        let c = self.coeff.abs();
        for (p, k) in factor(*c.numer()) {
            *radicals.entry(p).or_insert_with(Q::zero) += r * Q::from_integer(k as i64);
        }
        for (p, k) in factor(*c.denom()) {
            *radicals.entry(p).or_insert_with(Q::zero) -= r * Q::from_integer(k as i64);
        }
        Ok(Self::from_parts(Q::one(), self.turn() * r, radicals))
    }

    /// Modulus `|coeff| Π p^e`, as a positive real monomial.
    pub fn modulus(&self) -> Self {
        Self::from_parts(self.coeff.abs(), Q::zero(), self.radicals.clone())
    }

    pub fn to_f64(&self) -> num_complex::Complex64 {
        let mut m = crate::rational::to_f64(self.coeff);
        for (&p, &e) in &self.radicals {
            m *= (p as f64).powf(crate::rational::to_f64(e));
        }
        let th = 2.0 * std::f64::consts::PI * crate::rational::to_f64(self.unity);
        num_complex::Complex64::from_polar(m, th)
    }

    /// Real nonnegative value in [0, 1]?
    pub fn on_unit_interval(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        if !self.unity.is_zero() || self.coeff.is_negative() {
            return false;
        }
        if self.radicals.is_empty() {
            return self.coeff <= Q::one();
        }
        self.to_f64().re <= 1.0
    }

    pub fn eval(&self, prec: u32) -> Result<CBall> {
        let mut r = Ball::from_rational(prec, self.coeff);
        for (&p, &e) in &self.radicals {
            r = r.mul(&Ball::from_i64(prec, p).pow_rational(e)?);
        }
        if self.unity.is_zero() {
            return Ok(CBall::real(r));
        }
        Ok(CBall::unity(prec, self.unity).scale(&r))
    }

    /// Renders the non-coefficient factors, e.g. `e(1/8)*2^(1/2)`.
    pub(crate) fn shape_factors(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.unity.is_zero() {
            out.push(format!("e({})", fmt_rational(self.unity)));
        }
        for (p, e) in &self.radicals {
            out.push(format!("{p}^({})", fmt_rational(*e)));
        }
        out
    }
}

impl fmt::Display for RadicalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = self.shape_factors();
        let c = self.coeff;
        if shape.is_empty() {
            return if c.is_integer() { write!(f, "{}", c.numer()) } else { write!(f, "{}/{}", c.numer(), c.denom()) };
        }
        let body = shape.join("*");
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "" };
        if mag.is_one() {
            write!(f, "{sign}{body}")
        } else if mag.is_integer() {
            write!(f, "{sign}{}*{body}", mag.numer())
        } else {
            write!(f, "{sign}({}/{})*{body}", mag.numer(), mag.denom())
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MonoRepr {
    coeff: String,
    unity: String,
    radicals: Vec<(i64, String)>,
}

impl Serialize for RadicalMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonoRepr {
            coeff: fmt_rational(self.coeff),
            unity: fmt_rational(self.unity),
            radicals: self.radicals.iter().map(|(&p, &e)| (p, fmt_rational(e))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RadicalMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = MonoRepr::deserialize(d)?;
        let coeff = parse_rational(&r.coeff).map_err(D::Error::custom)?;
        let unity = parse_rational(&r.unity).map_err(D::Error::custom)?;
        let mut radicals = BTreeMap::new();
        for (p, e) in r.radicals {
            if p < 2 {
                return Err(D::Error::custom(format!("radical base {p} must be >= 2")));
            }
            radicals.insert(p, parse_rational(&e).map_err(D::Error::custom)?);
        }
        Ok(Self::from_parts(coeff, unity, radicals))
    }
}
