//! Plain-text form of constants and log combinations.
//!
//! Grammar (usual precedence, `^` binds tightest, unary minus below it):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := integer | 'pi' | 'e(' expr ')' | 'log(' expr ')' | '(' expr ')'
//! ```
//!
//! `e(q)` is `exp(2πiq)` and needs a rational argument; exponents must be
//! rational. `render` followed by `parse` reproduces the same normal form.

use super::expr::AlgExpr;
use super::logcomb::{LogCombination, LogTerm};
use super::monomial::RadicalMonomial;
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, Q};

pub fn render_expr(e: &AlgExpr) -> String {
    match e {
        AlgExpr::Mono(m) => m.to_string(),
        AlgExpr::Pi => "pi".into(),
        AlgExpr::Sum(v) => {
            let mut s = String::new();
            for (i, t) in v.iter().enumerate() {
                let r = render_expr(t);
                if i > 0 && !r.starts_with('-') {
                    s.push('+');
                }
                s.push_str(&r);
            }
            s
        }
        AlgExpr::Prod(v) => {
            let mut parts = Vec::new();
            let mut prefix = "";
            for (i, f) in v.iter().enumerate() {
                match f {
                    AlgExpr::Mono(m) if i == 0 && m.as_rational() == Some(Q::from_integer(-1)) => prefix = "-",
                    AlgExpr::Mono(m) => parts.push(m.to_string()),
                    other => parts.push(render_factor(other)),
                }
            }
            format!("{prefix}{}", parts.join("*"))
        }
        AlgExpr::Div(a, b) => format!("{}/{}", render_operand(a), render_operand(b)),
        AlgExpr::Pow(b, r) => format!("{}^({})", render_operand(b), fmt_rational(*r)),
    }
}

/// A factor inside a product.
fn render_factor(e: &AlgExpr) -> String {
    match e {
        AlgExpr::Sum(_) | AlgExpr::Div(..) => format!("({})", render_expr(e)),
        _ => render_expr(e),
    }
}

/// An operand of `/` or `^`.
fn render_operand(e: &AlgExpr) -> String {
    match e {
        AlgExpr::Pi => "pi".into(),
        _ => format!("({})", render_expr(e)),
    }
}

pub fn render_logcomb(lc: &LogCombination) -> String {
    let mut s = String::new();
    if !lc.constant_part().is_zero() {
        s.push_str(&render_expr(lc.constant_part()));
    }
    for t in lc.terms() {
        let arg = render_expr(&t.arg);
        let r = if t.coeff.is_one() {
            format!("log({arg})")
        } else if t.coeff.as_rational() == Some(Q::from_integer(-1)) {
            format!("-log({arg})")
        } else {
            format!("{}*log({arg})", render_factor(&t.coeff))
        };
        if !s.is_empty() && !r.starts_with('-') {
            s.push('+');
        }
        s.push_str(&r);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn parse_expr(s: &str) -> Result<AlgExpr> {
    let lc = parse_logcomb(s)?;
    if !lc.is_constant() {
        return Err(Error::Parse(format!("unexpected log in constant expression {s:?}")));
    }
    Ok(lc.constant_part().clone())
}

pub fn parse_logcomb(s: &str) -> Result<LogCombination> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {} in {s:?}", p.pos)));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Int(t.parse().map_err(|_| Error::Parse(format!("integer too large: {t}")))?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

fn constant_of(v: LogCombination, what: &str) -> Result<AlgExpr> {
    if !v.is_constant() {
        return Err(Error::Parse(format!("{what} must not contain log")));
    }
    Ok(v.constant_part().clone())
}

fn rational_of(v: LogCombination, what: &str) -> Result<Q> {
    constant_of(v, what)?.as_rational().ok_or_else(|| Error::Parse(format!("{what} must be rational")))
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {c:?} at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<LogCombination> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LogCombination> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let r = self.unary()?;
                acc = if acc.is_constant() {
                    r.scale(acc.constant_part())
                } else if r.is_constant() {
                    acc.scale(r.constant_part())
                } else {
                    return Err(Error::Parse("product of two logarithmic terms".into()));
                };
            } else if self.eat('/') {
                let r = constant_of(self.unary()?, "divisor")?;
                if r.is_zero() {
                    return Err(Error::DivisionNearZero);
                }
                acc = acc.div(&r)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LogCombination> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<LogCombination> {
        let base = self.primary()?;
        if self.eat('^') {
            let e = rational_of(self.unary()?, "exponent")?;
            let b = constant_of(base, "base of a power")?;
            return Ok(LogCombination::constant(b.pow(e)?));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<LogCombination> {
        let tok = self.peek().cloned().ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(LogCombination::constant(AlgExpr::integer(n))),
            Tok::Op('(') => {
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Ident(name) => match name.as_str() {
                "pi" => Ok(LogCombination::constant(AlgExpr::Pi)),
                "e" => {
                    self.expect('(')?;
                    let q = rational_of(self.expr()?, "argument of e()")?;
                    self.expect(')')?;
                    Ok(LogCombination::constant(AlgExpr::Mono(RadicalMonomial::unity(q))))
                }
                "log" => {
                    self.expect('(')?;
                    let a = constant_of(self.expr()?, "argument of log()")?;
                    self.expect(')')?;
                    if a.is_zero() {
                        return Err(Error::BranchAmbiguity("log(0)".into()));
                    }
                    Ok(LogCombination::new(AlgExpr::zero(), vec![LogTerm { coeff: AlgExpr::one(), arg: a }]))
                }
                other => Err(Error::Parse(format!("unknown name {other:?}"))),
            },
            Tok::Op(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn round_trip(e: &AlgExpr) {
        let s = render_expr(e);
        let back = parse_expr(&s).unwrap();
        assert_eq!(&back, e, "{s}");
    }

    #[test]
    fn render_examples() {
        let sqrt2 = AlgExpr::Mono(RadicalMonomial::root(2, q(1, 2)));
        let one_plus = AlgExpr::one().add(&sqrt2);
        assert_eq!(render_expr(&one_plus), "1+2^(1/2)");
        let lc = LogCombination::log(sqrt2.mul_rational(q(2, 1)), one_plus.clone());
        assert_eq!(render_logcomb(&lc), "2*2^(1/2)*log(1+2^(1/2))");
        let c = AlgExpr::Pi.mul(&AlgExpr::unity(q(1, 8))).mul_rational(q(-3, 2));
        assert_eq!(render_expr(&c), "-(3/2)*e(1/8)*pi");
        round_trip(&c);
        round_trip(&one_plus);
        round_trip(&AlgExpr::Pi.div(&one_plus).unwrap());
        round_trip(&one_plus.pow(q(-1, 3)).unwrap());
        round_trip(&AlgExpr::Pi.div(&one_plus).unwrap().neg());
    }

    #[test]
    fn parse_forms() {
        let e = parse_expr("2^(1/2) * 2^(1/2)").unwrap();
        assert_eq!(e, AlgExpr::integer(2));
        let e = parse_expr("e(1/2)").unwrap();
        assert_eq!(e, AlgExpr::integer(-1));
        let lc = parse_logcomb("pi - log(2) + 3*log(2)").unwrap();
        assert_eq!(lc.terms().len(), 1);
        assert_eq!(lc.terms()[0].coeff, AlgExpr::integer(2));
        assert!(parse_expr("log(2)").is_err());
        assert!(parse_expr("2^pi").is_err());
        assert!(parse_expr("1/0").is_err());
        assert!(parse_expr("(1+2").is_err());
        assert!(parse_logcomb("log(2)*log(3)").is_err());
    }

    #[test]
    fn logcomb_round_trip() {
        let s = "pi/(1+2^(1/2))-(1/2)*e(1/8)*log(1-e(1/8))+(1+e(1/3))*log(3)";
        let lc = parse_logcomb(s).unwrap();
        let r = render_logcomb(&lc);
        assert_eq!(parse_logcomb(&r).unwrap(), lc);
        assert_eq!(render_logcomb(&parse_logcomb(&r).unwrap()), r);
    }
}
