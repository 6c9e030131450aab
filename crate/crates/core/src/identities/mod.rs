//! Registry of hypergeometric identities for `F(1,1,p3;p4,p5;1)` and their
//! verification by independent routes: series (A), boundary quadrature plus
//! exceptional-divisor term (B), exact closed form (C), and the Γ₁ double
//! integral (D).

mod affine;
mod permutation;
mod registry;
mod sample;
mod validity;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use affine::Affine;
pub use permutation::{permutation_reduction, Reduction};
pub use registry::{lookup, registry, IDS};
pub use sample::sample_parameters;
pub use validity::{validity, Route, RouteStatus, Validity};
pub use verify::{
    calibrate, closed_form, closed_form_rhs, verify, verify_many, Calibration, Residual, RouteValue, VerificationRecord,
};

use crate::rational::{fmt_rational, Q};
use crate::symbolic::{Denominator, Poly, TrigKind};

/// Real 2-chains in the (ξ, η)-plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    #[serde(rename = "Gamma1")]
    Gamma1,
    #[serde(rename = "Gamma2")]
    Gamma2,
    #[serde(rename = "Gamma3")]
    Gamma3,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Gamma1 => "Gamma1",
            Region::Gamma2 => "Gamma2",
            Region::Gamma3 => "Gamma3",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    /// `P·F = Σ ±∫_P boundary ± trig`, valid by analytic continuation.
    Hypergeometric,
    /// `scale·∫_{Γ₁} = Σ ±∫ boundary`, the form before continuation.
    Stokes,
    /// `∫_{Γ₁} = F/((α1+α2)(α1+α3))`.
    DoubleIntegral,
}

/// `coeff · Π num / Π den`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prefactor {
    pub coeff: Q,
    pub num: Vec<Affine>,
    pub den: Vec<Affine>,
}

impl Prefactor {
    pub fn new(coeff: Q, num: &[&str], den: &[&str]) -> Self {
        Self { coeff, num: num.iter().map(|s| Affine::parse(s)).collect(), den: den.iter().map(|s| Affine::parse(s)).collect() }
    }

    /// `None` when a denominator factor vanishes.
    pub fn eval(&self, p: &[Q]) -> Option<Q> {
        let mut v = self.coeff;
        for a in &self.num {
            v *= a.eval(p);
        }
        for a in &self.den {
            let d = a.eval(p);
            if d == Q::from_integer(0) {
                return None;
            }
            v /= d;
        }
        Some(v)
    }

    pub fn render(&self, names: &[&str]) -> String {
        let mut num: Vec<String> = Vec::new();
        if self.coeff != Q::from_integer(1) || self.num.is_empty() {
            num.push(fmt_rational(self.coeff));
        }
        num.extend(self.num.iter().map(|a| a.render_factor(names)));
        let num = num.join("*");
        if self.den.is_empty() {
            return num;
        }
        let den: Vec<String> = self.den.iter().map(|a| a.render_factor(names)).collect();
        if den.len() == 1 {
            format!("{num}/{}", den[0])
        } else {
            format!("{num}/({})", den.join("*"))
        }
    }
}

/// One term `sign · ∫_P t^{exponent} N(t)/D(t) dt` of the boundary side. With
/// `digamma = Some(b)` the integrand carries the extra factor `(1 − t^b)/(b(1 − t))`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryTerm {
    pub sign: i8,
    pub printed_sign: i8,
    pub var: char,
    pub exponent: Affine,
    pub numerator: Poly,
    pub denominator: Denominator,
    pub digamma: Option<Affine>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrigTerm {
    pub kind: TrigKind,
    pub sign: i8,
    pub printed_sign: i8,
}

/// Open parameter region in which the double integral and every boundary
/// integral converge.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// `lo < a < hi`.
    Interval { lo: Option<Q>, hi: Option<Q> },
    /// `−1 + |a| < b`.
    AbsBelow,
    /// `0 < a < 1` and `0 < b < 1`.
    UnitSquare,
    /// `a, b, c > 0`.
    Positive,
}

impl Domain {
    pub fn contains(&self, p: &[Q]) -> bool {
        let zero = Q::from_integer(0);
        let one = Q::from_integer(1);
        match self {
            Domain::Interval { lo, hi } => lo.is_none_or(|l| p[0] > l) && hi.is_none_or(|h| p[0] < h),
            Domain::AbsBelow => -one + crate::rational::abs(p[0]) < p[1],
            Domain::UnitSquare => p[..2].iter().all(|&x| x > zero && x < one),
            Domain::Positive => p.iter().all(|&x| x > zero),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Domain::Interval { lo: Some(l), hi: Some(h) } => format!("{} < a < {}", fmt_rational(*l), fmt_rational(*h)),
            Domain::Interval { lo: Some(l), hi: None } => format!("a > {}", fmt_rational(*l)),
            Domain::Interval { lo: None, hi: Some(h) } => format!("a < {}", fmt_rational(*h)),
            Domain::Interval { lo: None, hi: None } => "all a".into(),
            Domain::AbsBelow => "-1 + |a| < b".into(),
            Domain::UnitSquare => "0 < a < 1, 0 < b < 1".into(),
            Domain::Positive => "a, b, c > 0".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Identity {
    pub id: &'static str,
    pub kind: IdentityKind,
    /// Surface `X_{pm}` label such as `"X_3m"`.
    pub family: &'static str,
    pub region: Region,
    pub params: &'static [&'static str],
    /// Rational prefactor of `F` on the hypergeometric side.
    pub prefactor: Prefactor,
    /// `(p3, p4, p5)` in `F(1, 1, p3; p4, p5; 1)`.
    pub f_params: [Affine; 3],
    /// Coefficient in front of the region integral.
    pub double_scale: Prefactor,
    /// Exponent triple for `((ξ+η−1), ξ, η)` on `region`.
    pub triple: [Affine; 3],
    pub boundary: Vec<BoundaryTerm>,
    pub trig: Option<TrigTerm>,
    pub orientation: i8,
    pub printed_orientation: i8,
    pub domain: Domain,
    /// Affine forms that must be non-integral for the continued identity.
    pub nonintegral: Vec<Affine>,
    /// Parameters at which the signs were fixed against the series.
    pub calibration: Vec<Q>,
    pub citation: &'static str,
}

impl Identity {
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    pub fn f_values(&self, p: &[Q]) -> [Q; 3] {
        [self.f_params[0].eval(p), self.f_params[1].eval(p), self.f_params[2].eval(p)]
    }

    /// Exponent triple on Γ₁ after the permutation reduction.
    pub fn gamma1_triple(&self, p: &[Q]) -> [Q; 3] {
        let t = [self.triple[0].eval(p), self.triple[1].eval(p), self.triple[2].eval(p)];
        permutation_reduction(self.region, t).triple
    }

    /// Parameter excess `p4 + p5 − p3 − 2` of the series.
    pub fn excess(&self, p: &[Q]) -> Q {
        let [p3, p4, p5] = self.f_values(p);
        p4 + p5 - p3 - Q::from_integer(2)
    }

    /// Sign discrepancies between the printed statement and the resolved one.
    pub fn corrections(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.orientation != self.printed_orientation {
            out.push(format!("{}: overall orientation flipped to {}", self.id, self.orientation));
        }
        for (i, t) in self.boundary.iter().enumerate() {
            if t.sign != t.printed_sign {
                out.push(format!("{}: boundary term {} printed sign {:+}, resolved {:+}", self.id, i + 1, t.printed_sign, t.sign));
            }
        }
        if let Some(t) = &self.trig {
            if t.sign != t.printed_sign {
                out.push(format!("{}: {} term printed sign {:+}, resolved {:+}", self.id, t.kind, t.printed_sign, t.sign));
            }
        }
        out
    }

    /// Human-readable statement with the resolved signs.
    pub fn statement(&self) -> String {
        let names = self.params;
        let [p3, p4, p5] = &self.f_params;
        let lhs = match self.kind {
            IdentityKind::Stokes => format!(
                "{} * int_{} (xi+eta-1)^({}-1) xi^({}-1) eta^({}-1)",
                self.double_scale.render(names),
                self.region,
                self.triple[0].render(names),
                self.triple[1].render(names),
                self.triple[2].render(names)
            ),
            _ => format!(
                "{} * F(1,1,{};{},{};1)",
                self.prefactor.render(names),
                p3.render(names),
                p4.render(names),
                p5.render(names)
            ),
        };
        if self.kind == IdentityKind::DoubleIntegral {
            return format!("int_Gamma1 (xi+eta-1)^(a-1) xi^(b-1) eta^(c-1) = {lhs}");
        }
        let mut rhs = String::new();
        for t in &self.boundary {
            let s = t.sign * self.orientation;
            rhs.push_str(if s > 0 { " + " } else { " - " });
            let v = t.var;
            let extra = match &t.digamma {
                Some(b) => format!(" * (1-{v}^({}))/(({})*(1-{v}))", b.render(names), b.render(names)),
                None => String::new(),
            };
            let den = if t.denominator.poly.degree() == 0 { String::new() } else { format!(" / ({})", t.denominator.poly) };
            rhs.push_str(&format!(
                "int_P {v}^({}) * ({}){den}{extra} d{v}",
                t.exponent.render(names),
                t.numerator.to_string().replace('x', &v.to_string())
            ));
        }
        if let Some(t) = &self.trig {
            let s = t.sign * self.orientation;
            rhs.push_str(if s > 0 { " + " } else { " - " });
            rhs.push_str(t.kind.formula());
        }
        let rhs = rhs.trim_start_matches(" + ").trim_start();
        let rhs = if let Some(r) = rhs.strip_prefix("- ") { format!("-{r}") } else { rhs.to_string() };
        format!("{lhs} = {rhs}")
    }
}
