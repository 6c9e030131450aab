//! Which evaluation routes are defined at given parameters.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{lookup, Identity, IdentityKind};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, is_integer, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// A: the series at 1.
    Series,
    /// B: boundary quadrature plus the trigonometric term.
    Boundary,
    /// C: exact closed form.
    ClosedForm,
    /// D: the Γ₁ double integral.
    Double,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Series, Route::Boundary, Route::ClosedForm, Route::Double];

    pub fn letter(self) -> char {
        match self {
            Route::Series => 'A',
            Route::Boundary => 'B',
            Route::ClosedForm => 'C',
            Route::Double => 'D',
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Route::Series => "series",
            Route::Boundary => "boundary",
            Route::ClosedForm => "closed_form",
            Route::Double => "double",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RouteStatus {
    pub route: Route,
    pub admitted: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Validity {
    pub id: String,
    /// Parameters lie in the convergence box.
    pub valid: bool,
    /// The non-integrality conditions of the continued identity hold.
    pub continuation: bool,
    pub reason: String,
    pub routes: Vec<RouteStatus>,
}

impl Validity {
    pub fn admits(&self, r: Route) -> bool {
        self.routes.iter().any(|s| s.route == r && s.admitted)
    }

    pub fn admitted(&self) -> Vec<Route> {
        self.routes.iter().filter(|s| s.admitted).map(|s| s.route).collect()
    }
}

pub(crate) fn check_arity(id: &Identity, p: &[Q]) -> Result<()> {
    if p.len() != id.arity() {
        return Err(Error::InvalidParameters(format!(
            "{} takes {} parameter(s) ({}), got {}",
            id.id,
            id.arity(),
            id.params.join(", "),
            p.len()
        )));
    }
    Ok(())
}

fn fmt_params(id: &Identity, p: &[Q]) -> String {
    id.params.iter().zip(p).map(|(n, x)| format!("{n}={}", fmt_rational(*x))).collect::<Vec<_>>().join(", ")
}

fn series_status(id: &Identity, p: &[Q]) -> std::result::Result<(), String> {
    let [_, p4, p5] = id.f_values(p);
    for x in [p4, p5] {
        if is_integer(x) && !x.is_positive() {
            return Err(format!("lower parameter {} is a nonpositive integer", fmt_rational(x)));
        }
    }
    let s = id.excess(p);
    if !s.is_positive() {
        return Err(format!("parameter excess {} <= 0", fmt_rational(s)));
    }
    Ok(())
}

/// Checks shared by the boundary and closed-form routes.
fn boundary_status(id: &Identity, p: &[Q], in_box: bool, continuation: bool) -> std::result::Result<(), String> {
    if id.kind == IdentityKind::DoubleIntegral {
        return Err("no boundary side".into());
    }
    if !in_box && !continuation {
        return Err(if id.nonintegral.is_empty() {
            "outside the convergence box and no continued form".into()
        } else {
            "outside the convergence box and a non-integrality condition fails".into()
        });
    }
    let minus_one = Q::from_integer(-1);
    for (i, t) in id.boundary.iter().enumerate() {
        let zeros = t.numerator.coeffs().iter().take_while(|c| c.is_zero()).count();
        let e = t.exponent.eval(p) + Q::from_integer(zeros as i64);
        if let Some(b) = &t.digamma {
            let b = b.eval(p);
            if b.is_zero() {
                return Err("digamma parameter vanishes".into());
            }
            if e <= minus_one || e + b <= minus_one {
                return Err(format!("term {} is not integrable at 0 and has no regularization", i + 1));
            }
        } else if e <= minus_one && is_integer(e) {
            return Err(format!("term {} has integer exponent {} <= -1", i + 1, fmt_rational(e)));
        }
    }
    if let Some(t) = &id.trig {
        if t.kind.has_pole(p[0]) {
            return Err(format!("{} has a pole", t.kind));
        }
    }
    Ok(())
}

fn double_status(id: &Identity, p: &[Q]) -> std::result::Result<(), String> {
    let [a1, a2, a3] = id.gamma1_triple(p);
    if !(a1.is_positive() && (a1 + a2).is_positive() && (a1 + a3).is_positive()) {
        return Err(format!(
            "need a1 > 0, a1+a2 > 0, a1+a3 > 0 for triple ({}, {}, {})",
            fmt_rational(a1),
            fmt_rational(a2),
            fmt_rational(a3)
        ));
    }
    if id.double_scale.eval(p).is_none() {
        return Err("double-integral scale is singular".into());
    }
    Ok(())
}

pub(crate) fn validity_of(id: &Identity, p: &[Q]) -> Result<Validity> {
    check_arity(id, p)?;
    let in_box = id.domain.contains(p);
    let continuation = !id.nonintegral.is_empty() && id.nonintegral.iter().all(|a| !is_integer(a.eval(p)));
    let pre = id.prefactor.eval(p);
    let degenerate = match pre {
        None => Some("prefactor is singular".to_string()),
        Some(x) if x.is_zero() => Some("prefactor vanishes".to_string()),
        _ => None,
    };
    let mut routes = Vec::new();
    for r in Route::ALL {
        let st = if let Some(d) = &degenerate {
            Err(d.clone())
        } else {
            match r {
                Route::Series => series_status(id, p),
                Route::Boundary | Route::ClosedForm => boundary_status(id, p, in_box, continuation),
                Route::Double => double_status(id, p),
            }
        };
        routes.push(match st {
            Ok(()) => RouteStatus { route: r, admitted: true, reason: "ok".into() },
            Err(reason) => RouteStatus { route: r, admitted: false, reason },
        });
    }
    let reason = if in_box {
        format!("{} lies in the box {}", fmt_params(id, p), id.domain.describe())
    } else {
        format!("{} violates {}", fmt_params(id, p), id.domain.describe())
    };
    Ok(Validity { id: id.id.to_string(), valid: in_box, continuation, reason, routes })
}

/// Box membership, continuation conditions, and per-route admission.
pub fn validity(id: &str, params: &[Q]) -> Result<Validity> {
    validity_of(lookup(id)?, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, q};

    #[test]
    fn examples() {
        let v = validity("G1-m", &[parse_rational("0.9").unwrap(), parse_rational("-0.2").unwrap()]).unwrap();
        assert!(!v.valid);
        let v = validity("G2-3m", &[parse_rational("0.4").unwrap()]).unwrap();
        assert!(v.valid);
        let v = validity("G1-2m", &[q(1, 2)]).unwrap();
        assert!(v.valid && !v.continuation);
        assert!(matches!(validity("nope", &[q(1, 2)]), Err(Error::UnknownIdentity(_))));
        assert!(matches!(validity("G1-2m", &[q(1, 2), q(1, 3)]), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn route_admission() {
        // Below the box the series diverges but the continued routes remain.
        let v = validity("G1-2m", &[q(-1, 3)]).unwrap();
        assert_eq!(v.admitted(), vec![Route::Boundary, Route::ClosedForm]);
        let v = validity("G2-4m", &[q(3, 5)]).unwrap();
        assert!(!v.valid && v.continuation);
        assert!(v.admits(Route::Series) && v.admits(Route::Boundary) && !v.admits(Route::Double));
        let v = validity("P14", &[q(1, 1), q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(v.admitted(), vec![Route::Series, Route::Double]);
        let v = validity("G2-3m", &[q(0, 1)]).unwrap();
        assert!(v.admitted().is_empty());
    }
}
