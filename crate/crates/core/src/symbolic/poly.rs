//! Rational polynomials and denominators with known root lists.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::expr::AlgExpr;
use super::monomial::RadicalMonomial;
use crate::error::{Error, Result};
use crate::rational::{to_f64, Q};

/// Coefficients in ascending order, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly(Vec<Q>);

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Q::from_integer(x)).collect())
    }

    /// `c · x^k`.
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.0.last().copied().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, s: Q) -> Self {
        Self::new(self.0.iter().map(|&c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(k, &c)| c * Q::from_integer(k as i64)).collect())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + to_f64(c))
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + to_f64(c))
    }

    pub fn to_exprs(&self) -> Vec<AlgExpr> {
        self.0.iter().map(|&c| AlgExpr::rational(c)).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "{}", if first { "-" } else { " - " })?;
            } else if !first {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// A rational polynomial with its complete list of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Denominator {
    pub poly: Poly,
    pub roots: Vec<RadicalMonomial>,
}

impl Denominator {
    /// Checks the root count and that each root annihilates the polynomial.
    pub fn new(poly: Poly, roots: Vec<RadicalMonomial>) -> Result<Self> {
        if roots.len() != poly.degree() {
            return Err(Error::InvalidParameters(format!(
                "{} roots given for degree {} denominator {poly}",
                roots.len(),
                poly.degree()
            )));
        }
        for r in &roots {
            let z = r.to_f64();
            let scale: f64 = poly.coeffs().iter().enumerate().map(|(k, &c)| to_f64(c).abs() * z.norm().powi(k as i32)).sum();
            if poly.eval_c64(z).norm() > 1e-10 * scale {
                return Err(Error::InvalidParameters(format!("{r} is not a root of {poly}")));
            }
        }
        for (i, a) in roots.iter().enumerate() {
            if roots[..i].contains(a) {
                return Err(Error::RepeatedRoot);
            }
        }
        Ok(Self { poly, roots })
    }

    /// `a·x^n + b`, roots the n-th roots of `−b/a` times `e(j/n)`.
    pub fn binomial(a: Q, n: usize, b: Q) -> Result<Self> {
        if a.is_zero() || b.is_zero() || n == 0 {
            return Err(Error::InvalidParameters("degenerate binomial".into()));
        }
        let base = RadicalMonomial::rational(-b / a).pow(Q::new(1, n as i64))?;
        let roots = (0..n).map(|j| base.mul(&RadicalMonomial::unity(Q::new(j as i64, n as i64)))).collect();
        let mut c = vec![Q::zero(); n + 1];
        c[0] = b;
        c[n] = a;
        Self::new(Poly::new(c), roots)
    }

    pub fn leading(&self) -> Q {
        self.poly.leading()
    }

    pub fn root_list(&self) -> Vec<(RadicalMonomial, u32)> {
        self.roots.iter().map(|r| (r.clone(), 1)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn binomial_roots() {
        let d = Denominator::binomial(q(64, 1), 8, q(1, 1)).unwrap();
        assert_eq!(d.roots.len(), 8);
        assert_eq!(d.roots[0], RadicalMonomial::root(2, q(-3, 4)).mul(&RadicalMonomial::unity(q(1, 16))));
        let d = Denominator::binomial(q(-1, 1), 1, q(2, 1)).unwrap();
        assert_eq!(d.roots[0], RadicalMonomial::integer(2));
    }

    #[test]
    fn explicit_roots_are_checked() {
        let p = Poly::from_ints(&[1, -2, 2]);
        let r = RadicalMonomial::root(2, q(-1, 2));
        let good = vec![r.mul(&RadicalMonomial::unity(q(1, 8))), r.mul(&RadicalMonomial::unity(q(7, 8)))];
        assert!(Denominator::new(p.clone(), good).is_ok());
        assert!(Denominator::new(p.clone(), vec![RadicalMonomial::one(), RadicalMonomial::integer(2)]).is_err());
        assert_eq!(p.to_string(), "2*x^2 - 2*x + 1");
    }
}
