//! Algebraic constant expressions over radical monomials and `π`.

use serde::{Deserialize, Serialize};

use num_traits::{One, Zero};

use super::monomial::RadicalMonomial;
use crate::ball::{Ball, CBall};
use crate::error::Result;
use crate::rational::{fmt_rational, parse_rational, Q};

/// Expression tree. Values are built through the smart constructors
/// ([`AlgExpr::add`], [`AlgExpr::mul`], ...), which keep a normal form:
/// nested sums and products are flattened, monomial factors of a product
/// are multiplied into one leading monomial, like terms of a sum are
/// merged, and a monomial times a single sum is distributed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgExpr {
    Mono(RadicalMonomial),
    Pi,
    Sum(Vec<AlgExpr>),
    Prod(Vec<AlgExpr>),
    Div(Box<AlgExpr>, Box<AlgExpr>),
    Pow(Box<AlgExpr>, Q),
}

impl From<RadicalMonomial> for AlgExpr {
    fn from(m: RadicalMonomial) -> Self {
        AlgExpr::Mono(m)
    }
}

impl AlgExpr {
    pub fn zero() -> Self {
        AlgExpr::Mono(RadicalMonomial::zero())
    }

    pub fn one() -> Self {
        AlgExpr::Mono(RadicalMonomial::one())
    }

    pub fn rational(x: Q) -> Self {
        AlgExpr::Mono(RadicalMonomial::rational(x))
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(Q::from_integer(n))
    }

    pub fn unity(q: Q) -> Self {
        AlgExpr::Mono(RadicalMonomial::unity(q))
    }

    pub fn pi() -> Self {
        AlgExpr::Pi
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, AlgExpr::Mono(m) if m.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, AlgExpr::Mono(m) if m.is_one())
    }

    pub fn as_mono(&self) -> Option<&RadicalMonomial> {
        match self {
            AlgExpr::Mono(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.as_mono().and_then(|m| m.as_rational())
    }

    pub fn sum<I: IntoIterator<Item = AlgExpr>>(items: I) -> Self {
        let mut terms: Vec<(RadicalMonomial, Option<AlgExpr>)> = Vec::new();
        let mut push = |t: AlgExpr| {
            let (m, rest) = split_coeff(t);
            if m.is_zero() {
                return;
            }
            if let Some(i) = terms.iter().position(|(m2, r2)| m2.same_shape(&m) && *r2 == rest) {
                let c = terms[i].0.coeff() + m.coeff();
                if c.is_zero() {
                    terms.remove(i);
                } else {
                    terms[i].0 = terms[i].0.with_coeff(c);
                }
            } else {
                terms.push((m, rest));
            }
        };
        for it in items {
            match it {
                AlgExpr::Sum(v) => v.into_iter().for_each(&mut push),
                x => push(x),
            }
        }
        let mut out: Vec<AlgExpr> = terms
            .into_iter()
            .map(|(m, rest)| match rest {
                None => AlgExpr::Mono(m),
                Some(r) => AlgExpr::prod([AlgExpr::Mono(m), r]),
            })
            .collect();
        match out.len() {
            0 => Self::zero(),
            1 => out.pop().unwrap(),
            _ => AlgExpr::Sum(out),
        }
    }

    pub fn prod<I: IntoIterator<Item = AlgExpr>>(items: I) -> Self {
        let mut mono = RadicalMonomial::one();
        let mut others = Vec::new();
        let mut push = |f: AlgExpr, mono: &mut RadicalMonomial| match f {
            AlgExpr::Mono(m) => *mono = mono.mul(&m),
            x => others.push(x),
        };
        for it in items {
            match it {
                AlgExpr::Prod(v) => v.into_iter().for_each(|f| push(f, &mut mono)),
                x => push(x, &mut mono),
            }
        }
        if mono.is_zero() {
            return Self::zero();
        }
        if others.is_empty() {
            return AlgExpr::Mono(mono);
        }
        if others.len() == 1 {
            let only = others.pop().unwrap();
            if mono.is_one() {
                return only;
            }
            if let AlgExpr::Sum(v) = only {
                return Self::sum(v.into_iter().map(|t| Self::prod([AlgExpr::Mono(mono.clone()), t])));
            }
            others.push(only);
        }
        if !mono.is_one() {
            others.insert(0, AlgExpr::Mono(mono));
        }
        AlgExpr::Prod(others)
    }

    pub fn add(&self, o: &AlgExpr) -> Self {
        Self::sum([self.clone(), o.clone()])
    }

    pub fn sub(&self, o: &AlgExpr) -> Self {
        Self::sum([self.clone(), o.neg()])
    }

    pub fn neg(&self) -> Self {
        Self::prod([AlgExpr::integer(-1), self.clone()])
    }

    pub fn mul(&self, o: &AlgExpr) -> Self {
        Self::prod([self.clone(), o.clone()])
    }

    pub fn mul_rational(&self, x: Q) -> Self {
        Self::prod([AlgExpr::rational(x), self.clone()])
    }

    pub fn div(&self, o: &AlgExpr) -> Result<Self> {
        if let AlgExpr::Mono(m) = o {
            return Ok(self.mul(&AlgExpr::Mono(m.inv()?)));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(AlgExpr::Div(Box::new(self.clone()), Box::new(o.clone())))
    }

    /// Principal power with rational exponent.
    pub fn pow(&self, r: Q) -> Result<Self> {
        if r.is_zero() {
            return Ok(Self::one());
        }
        if r.is_one() {
            return Ok(self.clone());
        }
        match self {
            AlgExpr::Mono(m) => Ok(AlgExpr::Mono(m.pow(r)?)),
            x => Ok(AlgExpr::Pow(Box::new(x.clone()), r)),
        }
    }

    pub fn eval(&self, prec: u32) -> Result<CBall> {
        match self {
            AlgExpr::Mono(m) => m.eval(prec),
            AlgExpr::Pi => Ok(CBall::real(Ball::pi(prec))),
            AlgExpr::Sum(v) => {
                let mut acc = CBall::zero(prec);
                for t in v {
                    acc = acc.add(&t.eval(prec)?);
                }
                Ok(acc)
            }
            AlgExpr::Prod(v) => {
                let mut acc = CBall::one(prec);
                for t in v {
                    acc = acc.mul(&t.eval(prec)?);
                }
                Ok(acc)
            }
            AlgExpr::Div(a, b) => a.eval(prec)?.div(&b.eval(prec)?),
            AlgExpr::Pow(b, r) => b.eval(prec)?.pow_rational(*r),
        }
    }

    /// Double-precision value, for diagnostics and cross-checks.
    pub fn to_c64(&self) -> Result<num_complex::Complex64> {
        Ok(self.eval(96)?.to_c64())
    }

    /// Number of nodes, a rough size measure.
    pub fn size(&self) -> usize {
        match self {
            AlgExpr::Mono(_) | AlgExpr::Pi => 1,
            AlgExpr::Sum(v) | AlgExpr::Prod(v) => 1 + v.iter().map(Self::size).sum::<usize>(),
            AlgExpr::Div(a, b) => 1 + a.size() + b.size(),
            AlgExpr::Pow(b, _) => 1 + b.size(),
        }
    }
}

/// Splits off the leading monomial factor.
fn split_coeff(e: AlgExpr) -> (RadicalMonomial, Option<AlgExpr>) {
    match e {
        AlgExpr::Mono(m) => (m, None),
        AlgExpr::Prod(mut v) => {
            if let AlgExpr::Mono(m) = &v[0] {
                let m = m.clone();
                v.remove(0);
                let rest = if v.len() == 1 { v.pop().unwrap() } else { AlgExpr::Prod(v) };
                (m, Some(rest))
            } else {
                (RadicalMonomial::one(), Some(AlgExpr::Prod(v)))
            }
        }
        x => (RadicalMonomial::one(), Some(x)),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
enum ExprRepr {
    Mono { value: RadicalMonomial },
    Pi,
    Sum { args: Vec<AlgExpr> },
    Prod { args: Vec<AlgExpr> },
    Div { num: Box<AlgExpr>, den: Box<AlgExpr> },
    Pow { base: Box<AlgExpr>, exp: String },
}

impl Serialize for AlgExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = match self.clone() {
            AlgExpr::Mono(value) => ExprRepr::Mono { value },
            AlgExpr::Pi => ExprRepr::Pi,
            AlgExpr::Sum(args) => ExprRepr::Sum { args },
            AlgExpr::Prod(args) => ExprRepr::Prod { args },
            AlgExpr::Div(num, den) => ExprRepr::Div { num, den },
            AlgExpr::Pow(base, e) => ExprRepr::Pow { base, exp: fmt_rational(e) },
        };
        r.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        Ok(match ExprRepr::deserialize(d)? {
            ExprRepr::Mono { value } => AlgExpr::Mono(value),
            ExprRepr::Pi => AlgExpr::Pi,
            ExprRepr::Sum { args } => AlgExpr::sum(args),
            ExprRepr::Prod { args } => AlgExpr::prod(args),
            ExprRepr::Div { num, den } => num.div(&den).map_err(D::Error::custom)?,
            ExprRepr::Pow { base, exp } => {
                let e = parse_rational(&exp).map_err(D::Error::custom)?;
                base.pow(e).map_err(D::Error::custom)?
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn sqrt2() -> AlgExpr {
        AlgExpr::Mono(RadicalMonomial::root(2, q(1, 2)))
    }

    #[test]
    fn like_terms_merge() {
        let a = AlgExpr::sum([sqrt2(), AlgExpr::one(), sqrt2().mul_rational(q(1, 2))]);
        let b = AlgExpr::sum([sqrt2().mul_rational(q(3, 2)), AlgExpr::one()]);
        assert_eq!(a, b);
        assert!(sqrt2().sub(&sqrt2()).is_zero());
        let p = AlgExpr::Pi.mul_rational(q(2, 1)).add(&AlgExpr::Pi);
        assert_eq!(p, AlgExpr::Pi.mul_rational(q(3, 1)));
    }

    #[test]
    fn monomials_fold_in_products() {
        let e = AlgExpr::prod([sqrt2(), AlgExpr::Pi, sqrt2()]);
        assert_eq!(e, AlgExpr::Prod(vec![AlgExpr::integer(2), AlgExpr::Pi]));
        let d = AlgExpr::one().add(&sqrt2()).mul(&AlgExpr::integer(2));
        assert_eq!(d, AlgExpr::sum([AlgExpr::integer(2), sqrt2().mul_rational(q(2, 1))]));
    }

    #[test]
    fn evaluation() {
        let e = AlgExpr::one().add(&sqrt2()).pow(q(1, 3)).unwrap();
        let v = e.to_c64().unwrap();
        assert!((v.re - (1.0 + 2f64.sqrt()).cbrt()).abs() < 1e-15);
        let d = AlgExpr::Pi.div(&AlgExpr::one().add(&sqrt2())).unwrap();
        assert!((d.to_c64().unwrap().re - std::f64::consts::PI / (1.0 + 2f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn json_round_trip() {
        let e = AlgExpr::Pi.div(&AlgExpr::one().add(&AlgExpr::unity(q(1, 8)))).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        let back: AlgExpr = serde_json::from_str(&s).unwrap();
        assert_eq!(e, back);
    }
}
