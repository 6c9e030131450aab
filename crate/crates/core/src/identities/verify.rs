//! Multi-route evaluation of identities and sign calibration.

use rayon::prelude::*;
use rug::Float;
use serde::Serialize;

use super::validity::{check_arity, validity_of};
use super::{lookup, Identity, IdentityKind, Route};
use crate::ball::{fmt_float, Ball, CBall};
use crate::error::{Error, Result};
use crate::numerics::{f32_at_1_q, gamma1_double, poch_contour, quad_1d, IntegrandSpec, QuadResult};
use crate::rational::{fmt_rational, to_f64, Q};
use crate::symbolic::{digamma_difference, eval_logcomb, rational_integral, render_logcomb, trig_correction, LogCombination};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RouteValue {
    pub route: Route,
    pub value: f64,
    pub error: f64,
    /// The value at the requested number of digits (f64 routes carry 17).
    pub decimal: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub routes: [Route; 2],
    pub relative: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub id: String,
    pub params: Vec<String>,
    pub precision: u32,
    pub tolerance: f64,
    pub orientation: i8,
    pub corrections: Vec<String>,
    pub routes: Vec<RouteValue>,
    pub residuals: Vec<Residual>,
    pub max_residual: f64,
    /// Exact value of F when the closed-form route ran.
    pub closed_form: Option<String>,
    pub passed: bool,
}

impl VerificationRecord {
    pub fn value(&self, r: Route) -> Option<f64> {
        self.routes.iter().find(|v| v.route == r).map(|v| v.value)
    }

    pub fn residual(&self, a: Route, b: Route) -> Option<f64> {
        self.residuals.iter().find(|x| x.routes == [a, b] || x.routes == [b, a]).map(|x| x.relative)
    }
}

fn effective(id: &Identity, sign: i8) -> i64 {
    (sign * id.orientation) as i64
}

fn integrand(id: &Identity, t: &super::BoundaryTerm, p: &[Q], with_sign: bool) -> IntegrandSpec {
    let scale = if with_sign { effective(id, t.sign) as f64 } else { 1.0 };
    let spec = IntegrandSpec::rational(t.exponent.eval_f64(p), scale, t.numerator.clone(), t.denominator.clone());
    match &t.digamma {
        Some(b) => {
            let b = b.eval_f64(p);
            spec.with_digamma(b).scaled(1.0 / b)
        }
        None => spec,
    }
}

/// `∫_P` of one boundary integrand: ordinary quadrature when it converges,
/// the Pochhammer contour otherwise.
fn integrate(spec: &IntegrandSpec, tol: f64) -> Result<QuadResult> {
    if spec.exponent_at_zero() > -1.0 {
        quad_1d(spec, tol)
    } else {
        poch_contour(0.0, spec, None, tol)
    }
}

fn boundary_numeric(id: &Identity, p: &[Q], tol: f64) -> Result<QuadResult> {
    let mut out = QuadResult { value: 0.0, error: 0.0, evaluations: 0 };
    for t in &id.boundary {
        let r = integrate(&integrand(id, t, p, true), tol)?;
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
    }
    if let Some(t) = &id.trig {
        out.value += effective(id, t.sign) as f64 * t.kind.value_f64(to_f64(p[0]));
    }
    Ok(out)
}

/// `∫₀¹ x^e (1 − x^b)/(1 − x) dx = ψ(e + b + 1) − ψ(e + 1)`.
fn digamma_term(t: &super::BoundaryTerm, p: &[Q]) -> Result<LogCombination> {
    let b = t.digamma.as_ref().expect("digamma term").eval(p);
    if t.numerator.degree() != 0 || t.denominator.poly.degree() != 0 {
        return Err(Error::InvalidParameters("digamma terms take a constant rational factor".into()));
    }
    let c = t.numerator.coeffs()[0] / t.denominator.leading();
    let e = t.exponent.eval(p);
    let one = Q::from_integer(1);
    Ok(digamma_difference(e + b + one, e + one)?.scale_rational(c / b))
}

fn rhs_of(id: &Identity, p: &[Q]) -> Result<LogCombination> {
    if id.kind == IdentityKind::DoubleIntegral {
        return Err(Error::InvalidParameters(format!("{} has no boundary side", id.id)));
    }
    let mut out = LogCombination::zero();
    for t in &id.boundary {
        let lc = match &t.digamma {
            Some(_) => digamma_term(t, p)?,
            None => rational_integral(t.exponent.eval(p), &t.numerator, &t.denominator, true)?,
        };
        out = out.add(&lc.scale_rational(Q::from_integer(effective(id, t.sign))));
    }
    if let Some(t) = &id.trig {
        out = out.add(&trig_correction(t.kind, p[0])?.scale_rational(Q::from_integer(effective(id, t.sign))));
    }
    Ok(out)
}

fn require(id: &Identity, p: &[Q], r: Route) -> Result<()> {
    let v = validity_of(id, p)?;
    match v.routes.iter().find(|s| s.route == r) {
        Some(s) if s.admitted => Ok(()),
        Some(s) => Err(Error::InvalidParameters(format!("{} route not admitted for {}: {}", r, id.id, s.reason))),
        None => unreachable!(),
    }
}

/// Exact value of the identity's left side `P·F` (equivalently of the
/// boundary side), as a log combination.
pub fn closed_form_rhs(id: &str, params: &[Q]) -> Result<LogCombination> {
    let id = lookup(id)?;
    require(id, params, Route::ClosedForm)?;
    rhs_of(id, params)
}

/// Exact value of `F(1,1,p3;p4,p5;1)` at the identity's parameters.
pub fn closed_form(id: &str, params: &[Q]) -> Result<LogCombination> {
    let ident = lookup(id)?;
    let rhs = closed_form_rhs(id, params)?;
    let pre = ident.prefactor.eval(params).expect("admitted parameters have a finite prefactor");
    Ok(rhs.scale_rational(pre.recip()))
}

fn series_value(id: &Identity, p: &[Q], digits: u32) -> Result<(Float, f64)> {
    let [p3, p4, p5] = id.f_values(p);
    let r = f32_at_1_q(p3, p4, p5, digits)?;
    let pre = id.prefactor.eval(p).expect("admitted parameters have a finite prefactor");
    let prec = r.value.prec();
    let v = r.value * Ball::from_rational(prec, pre).mid();
    Ok((v, r.error))
}

fn double_value(id: &Identity, p: &[Q], tol: f64) -> Result<QuadResult> {
    let [a1, a2, a3] = id.gamma1_triple(p);
    let scale = to_f64(id.double_scale.eval(p).expect("admitted parameters have a finite scale"));
    let r = gamma1_double(to_f64(a1), to_f64(a2), to_f64(a3), tol)?;
    Ok(QuadResult { value: scale * r.value, error: scale.abs() * r.error, evaluations: r.evaluations })
}

fn fmt_f64(x: f64) -> String {
    fmt_float(&Float::with_val(53, x), 17)
}

fn relative(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    if d == 0.0 {
        return 0.0;
    }
    d / a.abs().max(b.abs())
}

/// Relative distance between the series value and the closed form, in
/// multiprecision.
fn relative_hp(a: &Float, c: &CBall) -> f64 {
    let prec = a.prec().min(c.prec());
    let dre = Float::with_val(prec, a - c.re.mid());
    let d = Float::with_val(prec, dre.hypot(c.im.mid()));
    let scale = Float::with_val(prec, a.abs_ref());
    if scale.is_zero() {
        return d.to_f64() + c.rad();
    }
    (d / &scale).to_f64() + c.rad() / scale.to_f64()
}

/// Evaluates every admitted route and all pairwise residuals. At least two
/// routes must be admitted. Returns `VerificationFailed` with the full record
/// when a residual exceeds `tol`.
pub fn verify(id: &str, params: &[Q], precision: u32, tol: f64) -> Result<VerificationRecord> {
    let ident = lookup(id)?;
    check_arity(ident, params)?;
    if precision < 15 {
        return Err(Error::InvalidParameters(format!("precision {precision} below 15 digits")));
    }
    if !(tol > 0.0) || tol < 10f64.powi(5 - precision as i32) {
        return Err(Error::InvalidParameters(format!("tolerance {tol:e} must be at least 1e{}", 5 - precision as i32)));
    }
    let v = validity_of(ident, params)?;
    let admitted = v.admitted();
    if admitted.len() < 2 {
        let why: Vec<String> = v.routes.iter().filter(|s| !s.admitted).map(|s| format!("{}: {}", s.route, s.reason)).collect();
        return Err(Error::InvalidParameters(format!("{id}: fewer than two routes admitted ({})", why.join("; "))));
    }
    let qtol = (tol * 1e-3).max(1e-13);
    let digits = precision as usize;

    let mut routes = Vec::new();
    let mut series_hp = None;
    let mut closed_hp = None;
    let mut closed_text = None;
    for r in &admitted {
        match r {
            Route::Series => {
                let (val, err) = series_value(ident, params, precision)?;
                routes.push(RouteValue {
                    route: *r,
                    value: val.to_f64(),
                    error: err * val.to_f64().abs(),
                    decimal: fmt_float(&val, digits),
                });
                series_hp = Some(val);
            }
            Route::Boundary => {
                let q = boundary_numeric(ident, params, qtol)?;
                routes.push(RouteValue { route: *r, value: q.value, error: q.error, decimal: fmt_f64(q.value) });
            }
            Route::ClosedForm => {
                let rhs = rhs_of(ident, params)?;
                let c = eval_logcomb(&rhs, precision)?;
                routes.push(RouteValue {
                    route: *r,
                    value: c.re.to_f64(),
                    error: c.rad() + c.im.mid().to_f64().abs(),
                    decimal: fmt_float(c.re.mid(), digits),
                });
                let pre = ident.prefactor.eval(params).expect("admitted parameters have a finite prefactor");
                closed_text = Some(render_logcomb(&rhs.scale_rational(pre.recip())));
                closed_hp = Some(c);
            }
            Route::Double => {
                let q = double_value(ident, params, (tol * 1e-2).max(1e-12))?;
                routes.push(RouteValue { route: *r, value: q.value, error: q.error, decimal: fmt_f64(q.value) });
            }
        }
    }

    let mut residuals = Vec::new();
    for i in 0..routes.len() {
        for j in i + 1..routes.len() {
            let (a, b) = (&routes[i], &routes[j]);
            let rel = match (a.route, b.route, &series_hp, &closed_hp) {
                (Route::Series, Route::ClosedForm, Some(s), Some(c)) => relative_hp(s, c),
                _ => relative(a.value, b.value),
            };
            residuals.push(Residual { routes: [a.route, b.route], relative: rel });
        }
    }
    let max_residual = residuals.iter().map(|r| r.relative).fold(0.0, f64::max);
    let passed = residuals.iter().all(|r| r.relative <= tol);
    let record = VerificationRecord {
        id: id.to_string(),
        params: params.iter().map(|x| fmt_rational(*x)).collect(),
        precision,
        tolerance: tol,
        orientation: ident.orientation,
        corrections: ident.corrections(),
        routes,
        residuals,
        max_residual,
        closed_form: closed_text,
        passed,
    };
    if passed {
        Ok(record)
    } else {
        Err(Error::VerificationFailed(Box::new(record)))
    }
}

/// [`verify`] over many `(id, parameters)` pairs in parallel; results keep
/// the input order.
pub fn verify_many(items: &[(String, Vec<Q>)], precision: u32, tol: f64) -> Vec<Result<VerificationRecord>> {
    items.par_iter().map(|(id, p)| verify(id, p, precision, tol)).collect()
}

/// Sign search against the series: every assignment of ±1 to the boundary
/// and trigonometric terms whose sum reproduces `P·F`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Calibration {
    pub id: String,
    pub params: Vec<String>,
    pub lhs: f64,
    /// Unsigned term values: boundary integrals, then the trigonometric term.
    pub terms: Vec<f64>,
    pub matches: Vec<Vec<i8>>,
    /// Effective signs in the registry (term sign times orientation).
    pub resolved: Vec<i8>,
    /// Signs as printed.
    pub printed: Vec<i8>,
    /// Exactly one assignment matches and it is the registry's.
    pub consistent: bool,
}

pub fn calibrate(id: &str) -> Result<Calibration> {
    let ident = lookup(id)?;
    if ident.kind == IdentityKind::DoubleIntegral {
        return Err(Error::InvalidParameters(format!("{id} has no signed terms to calibrate")));
    }
    let p = &ident.calibration;
    let (lhs, _) = series_value(ident, p, 30)?;
    let lhs = lhs.to_f64();
    let mut terms = Vec::new();
    let mut resolved = Vec::new();
    let mut printed = Vec::new();
    for t in &ident.boundary {
        terms.push(integrate(&integrand(ident, t, p, false), 1e-14)?.value);
        resolved.push(t.sign * ident.orientation);
        printed.push(t.printed_sign * ident.printed_orientation);
    }
    if let Some(t) = &ident.trig {
        terms.push(t.kind.value_f64(to_f64(p[0])));
        resolved.push(t.sign * ident.orientation);
        printed.push(t.printed_sign * ident.printed_orientation);
    }
    let n = terms.len();
    let mut matches = Vec::new();
    for mask in 0..(1u32 << n) {
        let signs: Vec<i8> = (0..n).map(|k| if mask & (1 << k) != 0 { -1 } else { 1 }).collect();
        let s: f64 = signs.iter().zip(&terms).map(|(g, v)| *g as f64 * v).sum();
        if (s - lhs).abs() <= 1e-10 * lhs.abs().max(1.0) {
            matches.push(signs);
        }
    }
    let consistent = matches.len() == 1 && matches[0] == resolved;
    Ok(Calibration {
        id: id.to_string(),
        params: p.iter().map(|x| fmt_rational(*x)).collect(),
        lhs,
        terms,
        matches,
        resolved,
        printed,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn g1_2m_quarter() {
        let r = verify("G1-2m", &[q(1, 4)], 30, 1e-8).unwrap();
        for v in &r.routes {
            assert!((v.value - 2.492900961).abs() < 1e-8, "{v:?}");
        }
        assert!(r.max_residual < 1e-8);
        // F = (3/4)·2√2·log(1+√2)
        let f = closed_form("G1-2m", &[q(1, 4)]).unwrap().to_c64().unwrap();
        let expect = 1.5 * std::f64::consts::SQRT_2 * (1.0 + std::f64::consts::SQRT_2).ln();
        assert!((f.re - expect).abs() < 1e-13 && f.im.abs() < 1e-13);
    }

    #[test]
    fn p14_unit_triple() {
        let r = verify("P14", &[q(1, 1), q(1, 1), q(1, 1)], 30, 1e-8).unwrap();
        assert!((r.value(Route::Series).unwrap() - 0.5).abs() < 1e-12);
        assert!((r.value(Route::Double).unwrap() - 0.5).abs() < 1e-10);
    }

    #[test]
    fn g2_2m_a_quarter_trig_term() {
        assert!((crate::symbolic::TrigKind::Cos2m.value_f64(0.25) - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        let r = verify("G2-2m-a", &[q(1, 5)], 30, 1e-8).unwrap();
        assert!(r.max_residual < 1e-8, "{r:?}");
    }

    #[test]
    fn ex0_digamma_shape() {
        let r = verify("EX0", &[q(1, 3), q(1, 5)], 30, 1e-8).unwrap();
        assert!(r.max_residual < 1e-8, "{r:?}");
        let lc = closed_form("EX0", &[q(1, 3), q(1, 3)]).unwrap();
        assert!(lc.size() > 0);
    }

    #[test]
    fn calibration_matches_registry() {
        for id in ["G2-2m-a", "S1-4m", "G3-4m"] {
            let c = calibrate(id).unwrap();
            assert!(c.consistent, "{c:?}");
        }
    }

    #[test]
    fn failing_record_is_reported() {
        assert!(matches!(verify("G1-2m", &[q(1, 4)], 30, 1e-40), Err(Error::InvalidParameters(_))));
        assert!(matches!(verify("G1-2m", &[q(-1, 3)], 30, 1e-8), Ok(_)));
        assert!(matches!(verify("G1-2m", &[q(-1, 2)], 30, 1e-8), Err(Error::InvalidParameters(_))));
    }
}
