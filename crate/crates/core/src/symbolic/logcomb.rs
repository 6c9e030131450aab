//! Finite sums `constant + Σ c_i · log(a_i)` with principal logarithms.

use serde::{Deserialize, Serialize};

use super::expr::AlgExpr;
use crate::ball::CBall;
use crate::error::Result;
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogTerm {
    pub coeff: AlgExpr,
    pub arg: AlgExpr,
}

/// Terms with equal arguments are merged, and terms whose coefficient is
/// zero or whose argument is exactly 1 are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogCombination {
    constant: AlgExpr,
    terms: Vec<LogTerm>,
}

impl<'de> Deserialize<'de> for LogCombination {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            constant: AlgExpr,
            terms: Vec<LogTerm>,
        }
        let r = Raw::deserialize(d)?;
        Ok(LogCombination::new(r.constant, r.terms))
    }
}

impl LogCombination {
    pub fn new(constant: AlgExpr, terms: Vec<LogTerm>) -> Self {
        let mut merged: Vec<LogTerm> = Vec::new();
        for t in terms {
            if t.arg.is_one() || t.coeff.is_zero() {
                continue;
            }
            if let Some(i) = merged.iter().position(|m| m.arg == t.arg) {
                merged[i].coeff = merged[i].coeff.add(&t.coeff);
            } else {
                merged.push(t);
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Self { constant, terms: merged }
    }

    pub fn zero() -> Self {
        Self::constant(AlgExpr::zero())
    }

    pub fn constant(c: AlgExpr) -> Self {
        Self { constant: c, terms: Vec::new() }
    }

    /// `coeff · log(arg)`.
    pub fn log(coeff: AlgExpr, arg: AlgExpr) -> Self {
        Self::new(AlgExpr::zero(), vec![LogTerm { coeff, arg }])
    }

    pub fn constant_part(&self) -> &AlgExpr {
        &self.constant
    }

    pub fn terms(&self) -> &[LogTerm] {
        &self.terms
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        Self::new(self.constant.add(&o.constant), terms)
    }

    pub fn scale(&self, c: &AlgExpr) -> Self {
        let terms = self.terms.iter().map(|t| LogTerm { coeff: c.mul(&t.coeff), arg: t.arg.clone() }).collect();
        Self::new(c.mul(&self.constant), terms)
    }

    pub fn scale_rational(&self, x: Q) -> Self {
        self.scale(&AlgExpr::rational(x))
    }

    pub fn neg(&self) -> Self {
        self.scale_rational(Q::from_integer(-1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Divides every coefficient by `c`.
    pub fn div(&self, c: &AlgExpr) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(LogTerm { coeff: t.coeff.div(c)?, arg: t.arg.clone() });
        }
        Ok(Self::new(self.constant.div(c)?, terms))
    }

    pub fn eval(&self, prec: u32) -> Result<CBall> {
        let mut acc = self.constant.eval(prec)?;
        for t in &self.terms {
            let l = t.arg.eval(prec)?.ln()?;
            acc = acc.add(&t.coeff.eval(prec)?.mul(&l));
        }
        Ok(acc)
    }

    pub fn to_c64(&self) -> Result<num_complex::Complex64> {
        Ok(self.eval(128)?.to_c64())
    }

    pub fn size(&self) -> usize {
        self.constant.size() + self.terms.iter().map(|t| t.coeff.size() + t.arg.size()).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn merging_and_dropping() {
        let x = AlgExpr::integer(3);
        let lc = LogCombination::new(
            AlgExpr::zero(),
            vec![
                LogTerm { coeff: AlgExpr::integer(2), arg: x.clone() },
                LogTerm { coeff: AlgExpr::integer(5), arg: AlgExpr::one() },
                LogTerm { coeff: AlgExpr::integer(-1), arg: x.clone() },
            ],
        );
        assert_eq!(lc.terms().len(), 1);
        assert_eq!(lc.terms()[0].coeff, AlgExpr::one());
        let none = lc.sub(&lc);
        assert!(none.is_constant());
    }

    #[test]
    fn log_of_minus_one_gives_pi() {
        let lc = LogCombination::log(AlgExpr::unity(q(3, 4)), AlgExpr::integer(-1));
        let v = lc.to_c64().unwrap();
        assert!((v.re - std::f64::consts::PI).abs() < 1e-15);
        assert!(v.im.abs() < 1e-15);
    }
}
