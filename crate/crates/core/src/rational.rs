//! Small exact rationals used for parameters, exponents and polynomial
//! coefficients.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = Rational64;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn int(n: i64) -> Q {
    Q::from_integer(n)
}

/// Fractional part: the unique value in [0, 1) differing from `x` by an integer.
pub fn frac(x: Q) -> Q {
    x - x.floor()
}

pub fn to_f64(x: Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn is_integer(x: Q) -> bool {
    x.is_integer()
}

/// Parses `"p/q"`, `"p"`, or a terminating decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((whole, dec)) = s.split_once('.') {
        if dec.is_empty() || dec.len() > 15 || !dec.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = whole.trim_start().starts_with('-');
        let w: i64 = if whole.is_empty() || whole == "-" || whole == "+" {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let scale = 10i64.pow(dec.len() as u32);
        let f: i64 = dec.parse().map_err(|_| bad())?;
        let mag = Q::new(w.abs() * scale + f, scale);
        return Ok(if neg { -mag } else { mag });
    }
    s.parse::<i64>().map(Q::from_integer).map_err(|_| bad())
}

pub fn fmt_rational(x: Q) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Factors |n| into primes by trial division; small inputs only.
pub fn factor(n: i64) -> Vec<(i64, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn lcm_denominators<I: IntoIterator<Item = Q>>(xs: I) -> i64 {
    xs.into_iter().fold(1i64, |acc, x| acc.lcm(x.denom()))
}

pub fn abs(x: Q) -> Q {
    x.abs()
}

pub fn is_zero(x: Q) -> bool {
    x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_examples() {
        assert_eq!(frac(q(-1, 3)), q(2, 3));
        assert_eq!(frac(q(7, 5)), q(2, 5));
        assert_eq!(frac(int(2)), int(0));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/4").unwrap(), q(1, 4));
        assert_eq!(parse_rational("-3/6").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_rational("-0.2").unwrap(), q(-1, 5));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn factor_small() {
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(factor(1).is_empty());
        assert_eq!(factor(97), vec![(97, 1)]);
    }
}
