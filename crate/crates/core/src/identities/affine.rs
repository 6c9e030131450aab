//! Affine forms `c + k0·a + k1·b + k2·c` in the identity parameters.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::rational::{fmt_rational, to_f64, Q};

const VARS: [char; 3] = ['a', 'b', 'c'];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Affine {
    pub constant: Q,
    pub coeffs: [Q; 3],
}

impl Affine {
    pub fn constant(c: Q) -> Self {
        Self { constant: c, coeffs: [Q::from_integer(0); 3] }
    }

    /// Parses forms such as `"2a+5/3"`, `"b-a+1"`, `"-8a"`, `"1/2"`. Variable
    /// terms take integer coefficients. Panics on malformed input: the
    /// registry is static data.
    pub fn parse(s: &str) -> Self {
        let mut out = Self::constant(Q::from_integer(0));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(r) => (true, r),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            let sign = if neg { -1 } else { 1 };
            match body.chars().last() {
                Some(v) if VARS.contains(&v) => {
                    let idx = VARS.iter().position(|&c| c == v).unwrap();
                    let k = &body[..body.len() - 1];
                    let k: i64 = if k.is_empty() { 1 } else { k.parse().unwrap_or_else(|_| panic!("bad affine form {s:?}")) };
                    out.coeffs[idx] += Q::from_integer(sign * k);
                }
                _ => {
                    let c = crate::rational::parse_rational(body).unwrap_or_else(|_| panic!("bad affine form {s:?}"));
                    out.constant += c * Q::from_integer(sign);
                }
            }
        }
        out
    }

    pub fn eval(&self, p: &[Q]) -> Q {
        let mut v = self.constant;
        for (k, x) in self.coeffs.iter().zip(p) {
            v += k * x;
        }
        v
    }

    pub fn eval_f64(&self, p: &[Q]) -> f64 {
        to_f64(self.eval(p))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|k| *k == Q::from_integer(0))
    }

    /// Renders with the given parameter names.
    pub fn render(&self, names: &[&str]) -> String {
        let mut s = String::new();
        for (i, k) in self.coeffs.iter().enumerate() {
            if *k == Q::from_integer(0) {
                continue;
            }
            let name = names.get(i).copied().unwrap_or("?");
            let mag = crate::rational::abs(*k);
            let body = if mag == Q::from_integer(1) { name.to_string() } else { format!("{}{name}", fmt_rational(mag)) };
            if *k < Q::from_integer(0) {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            s.push_str(&body);
        }
        let c = self.constant;
        if c != Q::from_integer(0) || s.is_empty() {
            if c < Q::from_integer(0) {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            s.push_str(&fmt_rational(crate::rational::abs(c)));
        }
        s
    }

    /// Rendering wrapped in parentheses unless it is a single symbol or number.
    pub fn render_factor(&self, names: &[&str]) -> String {
        let s = self.render(names);
        if s.chars().skip(1).any(|c| c == '+' || c == '-') {
            format!("({s})")
        } else {
            s
        }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&["a", "b", "c"]))
    }
}

impl Serialize for Affine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
