//! Exact algebraic constants, logarithmic closed forms, and the closed-form
//! integration engine.

mod expr;
mod integrate;
mod logcomb;
mod monomial;
mod poly;
mod text;

pub use expr::AlgExpr;
pub use integrate::{
    base_log_integral, closed_form_integral, digamma_difference, digamma_integral, rational_integral, trig_correction,
    TrigKind, TRIG_KINDS,
};
pub use logcomb::{LogCombination, LogTerm};
pub use monomial::RadicalMonomial;
pub use poly::{Denominator, Poly};
pub use text::{parse_expr, parse_logcomb, render_expr, render_logcomb};

use crate::ball::{bits_for_digits, CBall};
use crate::error::{Error, Result};

/// Evaluates with growing working precision until the radius is at most
/// `10^(2 − digits)`.
fn eval_to<F: Fn(u32) -> Result<CBall>>(digits: u32, f: F) -> Result<CBall> {
    if digits < 15 {
        return Err(Error::InvalidParameters(format!("precision {digits} below 15 digits")));
    }
    let target = 10f64.powi(2 - digits as i32);
    let mut bits = bits_for_digits(digits) + 32;
    let mut last = None;
    for _ in 0..5 {
        match f(bits) {
            Ok(v) if v.rad() <= target => return Ok(v),
            Ok(v) => last = Some(Ok(v)),
            Err(e @ (Error::DivisionNearZero | Error::BranchAmbiguity(_))) => last = Some(Err(e)),
            Err(e) => return Err(e),
        }
        bits *= 2;
    }
    match last {
        Some(Ok(v)) => Err(Error::ToleranceNotMet { tol: target, estimate: v.rad() }),
        Some(Err(e)) => Err(e),
        None => unreachable!(),
    }
}

/// Value of a constant with a rigorous radius `≤ 10^(2 − digits)`.
pub fn eval_const(x: &AlgExpr, digits: u32) -> Result<CBall> {
    eval_to(digits, |bits| x.eval(bits))
}

/// Value of a log combination under the principal branch.
pub fn eval_logcomb(l: &LogCombination, digits: u32) -> Result<CBall> {
    eval_to(digits, |bits| l.eval(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn eval_examples() {
        let v = eval_const(&AlgExpr::unity(q(1, 2)), 30).unwrap();
        assert_eq!(v.re.to_f64(), -1.0);
        assert!(v.rad() == 0.0);
        let m1 = eval_const(&AlgExpr::unity(q(1, 8)).mul(&AlgExpr::unity(q(3, 8))), 30).unwrap();
        assert_eq!(m1.to_c64(), num_complex::Complex64::new(-1.0, 0.0));
        let i = eval_const(&AlgExpr::unity(q(1, 8)).mul(&AlgExpr::unity(q(1, 8))), 30).unwrap();
        assert_eq!(i.to_c64(), num_complex::Complex64::new(0.0, 1.0));
        let r = eval_const(&AlgExpr::Mono(RadicalMonomial::root(2, q(3, 4))), 40).unwrap();
        let r4 = r.powi(4).unwrap();
        assert!((r4.re.to_f64() - 8.0).abs() < 1e-30);
        assert!(r.rad() <= 1e-38);
        let l = eval_logcomb(&LogCombination::log(AlgExpr::one(), AlgExpr::integer(2)), 30).unwrap();
        assert!((l.re.to_f64() - std::f64::consts::LN_2).abs() < 1e-16);
        assert!(eval_logcomb(&LogCombination::zero(), 30).unwrap().is_exact_zero());
        assert!(eval_const(&AlgExpr::one(), 10).is_err());
    }
}
