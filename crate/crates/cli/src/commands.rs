use std::collections::BTreeSet;

use serde_json::{json, Value};

use hgperiod::ball::fmt_float;
use hgperiod::characters::{classify, enumerate_exceptional, is_hodge, orbit_size_histogram, CharacterTuple};
use hgperiod::identities::{
    closed_form, closed_form_rhs, lookup, sample_parameters, validity, verify, verify_many, Route, VerificationRecord, IDS,
};
use hgperiod::numerics::{excess, f32_at_1_q};
use hgperiod::rational::{fmt_rational, parse_rational, to_f64, Q};
use hgperiod::symbolic::{eval_logcomb, render_logcomb};
use hgperiod::Error;

use crate::args::{AppendixArgs, ClassifyArgs, Cli, Command, Common, EvalArgs, IdentityArgs, OrbitsArgs};
use crate::fixture::appendix;
use crate::report::{Outcome, Output, Report, Status};

const BASE_LOG_NOTE: &str = "base logarithmic integral int_0^1 x^(s-1)/(c-x) dx, s = n/m, gamma = c^(1/m): \
printed as -sum_i e(-n*i/m)*log(1-e(i/m)/gamma), corrected to -gamma^(n-m)*sum_i e(-n*i/m)*log(1-e(i/m)/gamma)";

/// Sample points per identity for `verify --all`.
const SAMPLES_PER_IDENTITY: usize = 5;

type CmdResult = Result<Output, Outcome>;

fn lib_error(e: Error) -> Outcome {
    match e {
        Error::UnknownIdentity(_)
        | Error::InvalidParameters(_)
        | Error::Parse(_)
        | Error::InvalidTuple(_)
        | Error::TrigPole(_)
        | Error::Divergent(_) => Outcome::Usage(e.to_string()),
        _ => Outcome::Failed(e.to_string()),
    }
}

fn check_common(c: &Common) -> Result<(), Outcome> {
    if c.precision < 15 {
        return Err(Outcome::Usage(format!("precision {} must be at least 15", c.precision)));
    }
    let floor = 10f64.powi(5 - c.precision as i32);
    if !(c.tolerance > 0.0) || c.tolerance < floor {
        return Err(Outcome::Usage(format!("tolerance {:e} must be at least {floor:e}", c.tolerance)));
    }
    Ok(())
}

fn common_inputs(r: &mut Report, c: &Common) {
    r.input("precision", c.precision);
    r.input("tolerance", c.tolerance);
}

pub fn execute(cli: &Cli) -> CmdResult {
    check_common(cli.common())?;
    match &cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Orbits(a) => cmd_orbits(a),
        Command::AppendixCheck(a) => cmd_appendix(a),
        Command::Verify(a) if a.all => cmd_verify_all(a),
        Command::Verify(a) => cmd_verify(a),
        Command::ClosedForm(a) => cmd_closed_form(a),
        Command::EvalF32(a) => cmd_eval(a),
    }
}

fn parse_list(s: &str) -> Result<Vec<Q>, Outcome> {
    s.split(',').map(|x| parse_rational(x).map_err(lib_error)).collect()
}

fn qs(p: &[Q]) -> Vec<String> {
    p.iter().map(|x| fmt_rational(*x)).collect()
}

fn cmd_classify(a: &ClassifyArgs) -> CmdResult {
    let vals = parse_list(&a.tuple)?;
    let vals: [Q; 4] = vals
        .try_into()
        .map_err(|v: Vec<Q>| Outcome::Usage(format!("a character tuple has 4 entries, got {}", v.len())))?;
    let t = match a.m {
        Some(m) => {
            let mut n = [0u32; 4];
            for (slot, x) in n.iter_mut().zip(vals) {
                if !x.is_integer() || *x.numer() < 0 {
                    return Err(Outcome::Usage(format!("with --m the tuple lists nonnegative integers, got {x}")));
                }
                *slot = *x.numer() as u32;
            }
            CharacterTuple::new(n, m)
        }
        None => CharacterTuple::from_rationals(vals),
    }
    .map_err(lib_error)?;

    let mut r = Report::new("classify");
    r.input("m", t.m());
    r.input("tuple", json!(t.numerators()));
    let hodge = is_hodge(&t);
    let label = if hodge { Some(classify(&t).map_err(lib_error)?) } else { None };
    let class = label.as_ref().map_or("NotHodge", |l| l.name());
    r.results = json!({
        "m": t.m(),
        "numerators": t.numerators(),
        "alphas": qs(&t.alphas()),
        "is_hodge": hodge,
        "class": class,
        "label": label,
    });
    r.text.push(class.to_string());
    r.text.push(format!("tuple {:?} / {}", t.numerators(), t.m()));
    Ok(Output { report: r })
}

fn orbit_results(m: u32) -> (Value, Vec<String>) {
    let rep = enumerate_exceptional(m);
    let hist: serde_json::Map<String, Value> =
        orbit_size_histogram(&rep).into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let orbits: Vec<Value> = rep
        .orbits
        .iter()
        .map(|o| json!({"representative": o.representative, "size": o.members.len(), "members": o.members}))
        .collect();
    let mut text = vec![format!("m={} e_m={} o_m={}", m, rep.e_m, rep.o_m)];
    for o in &rep.orbits {
        text.push(format!("  {:?} size {}", o.representative, o.members.len()));
    }
    let v = json!({"orbits": orbits, "e_m": rep.e_m, "o_m": rep.o_m, "m": m, "orbit_sizes": hist});
    (v, text)
}

fn cmd_orbits(a: &OrbitsArgs) -> CmdResult {
    let mut r = Report::new("orbits");
    r.input("m", a.m);
    let (v, text) = orbit_results(a.m);
    r.results = v;
    r.text = text;
    Ok(Output { report: r })
}

fn cmd_appendix(a: &AppendixArgs) -> CmdResult {
    let table = appendix();
    let entries: Vec<_> = match a.m {
        Some(m) => {
            let e: Vec<_> = table.entries.iter().filter(|e| e.m == m).collect();
            if e.is_empty() {
                return Err(Outcome::Usage(format!("m = {m} is not in the appendix table")));
            }
            e
        }
        None if a.all => table.entries.iter().collect(),
        None => return Err(Outcome::Usage("appendix-check needs --all or --m".into())),
    };
    let mut r = Report::new("appendix-check");
    r.input("all", a.all);
    if let Some(m) = a.m {
        r.input("m", m);
    }
    r.input("fixture_version", table.version);
    r.citations.push(table.citation.clone());

    let mut rows = Vec::new();
    let mut matched = 0;
    for e in &entries {
        let rep = enumerate_exceptional(e.m);
        let got: BTreeSet<[u32; 4]> = rep.representatives().into_iter().collect();
        let want: BTreeSet<[u32; 4]> = e.representatives.iter().copied().collect();
        let reps_ok = got == want;
        let ok = reps_ok && rep.e_m == e.e_m && rep.o_m == e.o_m;
        matched += ok as usize;
        r.text.push(format!(
            "{} m={} e_m={} (table {}) o_m={} (table {}) representatives {}",
            if ok { "ok  " } else { "FAIL" },
            e.m,
            rep.e_m,
            e.e_m,
            rep.o_m,
            e.o_m,
            if reps_ok { "match" } else { "differ" }
        ));
        let mut row = json!({
            "m": e.m,
            "e_m": rep.e_m,
            "o_m": rep.o_m,
            "expected_e_m": e.e_m,
            "expected_o_m": e.o_m,
            "representatives_match": reps_ok,
            "matched": ok,
        });
        if !reps_ok {
            row["missing"] = json!(want.difference(&got).collect::<Vec<_>>());
            row["unexpected"] = json!(got.difference(&want).collect::<Vec<_>>());
        }
        rows.push(row);
    }
    let total = entries.len();
    r.text.push(format!("{matched}/{total} m values matched"));
    r.results = json!({"entries": rows, "matched": matched, "total": total});
    r.status = if matched == total { Status::Pass } else { Status::Fail };
    Ok(Output { report: r })
}

/// Parameters from `--tuple`, `--alpha`/`--beta`, or one seeded sample.
fn identity_params(a: &IdentityArgs, id: &str) -> Result<(Vec<Q>, bool), Outcome> {
    let ident = lookup(id).map_err(lib_error)?;
    let p = if let Some(t) = &a.tuple {
        if a.alpha.is_some() || a.beta.is_some() {
            return Err(Outcome::Usage("give either --tuple or --alpha/--beta".into()));
        }
        parse_list(t)?
    } else if let Some(al) = &a.alpha {
        let mut p = vec![parse_rational(al).map_err(lib_error)?];
        if let Some(b) = &a.beta {
            p.push(parse_rational(b).map_err(lib_error)?);
        }
        p
    } else if a.beta.is_some() {
        return Err(Outcome::Usage("--beta needs --alpha".into()));
    } else {
        let mut s = sample_parameters(id, 1, a.common.seed).map_err(lib_error)?;
        return Ok((s.remove(0), true));
    };
    if p.len() != ident.params.len() {
        return Err(Outcome::Usage(format!(
            "{id} takes {} parameter(s) ({}), got {}",
            ident.params.len(),
            ident.params.join(", "),
            p.len()
        )));
    }
    Ok((p, false))
}

fn named_params(id: &str, p: &[Q]) -> serde_json::Map<String, Value> {
    let ident = lookup(id).expect("known identity");
    ident.params.iter().zip(p).map(|(n, x)| (n.to_string(), json!(fmt_rational(*x)))).collect()
}

fn residual_rows(rec: &VerificationRecord, with_id: bool) -> Vec<Value> {
    rec.residuals
        .iter()
        .map(|x| {
            let mut v = json!({"routes": x.routes, "relative": x.relative});
            if with_id {
                v["id"] = json!(rec.id);
                v["params"] = json!(rec.params);
            }
            v
        })
        .collect()
}

fn record_text(rec: &VerificationRecord) -> Vec<String> {
    let mut out = Vec::new();
    for v in &rec.routes {
        out.push(format!("  {:<12} {}", v.route.to_string(), v.decimal));
    }
    for x in &rec.residuals {
        out.push(format!("  residual {}/{} {:.3e}", x.routes[0], x.routes[1], x.relative));
    }
    out
}

fn cmd_verify(a: &IdentityArgs) -> CmdResult {
    let id = a.id.as_deref().expect("clap requires --id without --all");
    let (p, sampled) = identity_params(a, id)?;
    let ident = lookup(id).map_err(lib_error)?;
    let mut r = Report::new("verify");
    r.input("id", id);
    r.input("params", Value::Object(named_params(id, &p)));
    if sampled {
        r.input("seed", a.common.seed);
    }
    common_inputs(&mut r, &a.common);

    let v = validity(id, &p).map_err(lib_error)?;
    let (rec, passed) = match verify(id, &p, a.common.precision, a.common.tolerance) {
        Ok(rec) => (rec, true),
        Err(Error::VerificationFailed(rec)) => (*rec, false),
        Err(e) => return Err(lib_error(e)),
    };
    r.text.push(format!("{} {}", id, qs(&p).join(", ")));
    r.text.push(ident.statement());
    r.text.extend(record_text(&rec));
    r.residuals = residual_rows(&rec, false);
    r.closed_form = rec.closed_form.as_ref().map(|c| format!("F = {c}"));
    r.citations.push(ident.citation.to_string());
    r.citations.extend(rec.corrections.iter().map(|c| format!("sign correction: {c}")));
    if rec.value(Route::ClosedForm).is_some() {
        r.citations.push(BASE_LOG_NOTE.to_string());
    }
    r.results = json!({
        "id": id,
        "statement": ident.statement(),
        "valid": v.valid,
        "continuation": v.continuation,
        "admitted": v.admitted(),
        "routes": rec.routes,
        "max_residual": rec.max_residual,
        "orientation": rec.orientation,
        "corrections": rec.corrections,
        "passed": passed,
    });
    r.status = if passed { Status::Pass } else { Status::Fail };
    Ok(Output { report: r })
}

fn cmd_verify_all(a: &IdentityArgs) -> CmdResult {
    let mut r = Report::new("verify");
    r.input("all", true);
    r.input("seed", a.common.seed);
    r.input("samples_per_identity", SAMPLES_PER_IDENTITY);
    common_inputs(&mut r, &a.common);

    let mut items = Vec::new();
    for id in IDS {
        for p in sample_parameters(id, SAMPLES_PER_IDENTITY, a.common.seed).map_err(lib_error)? {
            items.push((id.to_string(), p));
        }
    }
    let results = verify_many(&items, a.common.precision, a.common.tolerance);
    let mut records = Vec::new();
    let mut passed = 0;
    let mut corrections = BTreeSet::new();
    for ((id, p), res) in items.iter().zip(results) {
        let rec = match res {
            Ok(rec) => rec,
            Err(Error::VerificationFailed(rec)) => *rec,
            Err(e) => {
                r.text.push(format!("FAIL {id:<8} {:<16} {e}", qs(p).join(",")));
                records.push(json!({"id": id, "params": qs(p), "error": e.to_string(), "passed": false}));
                continue;
            }
        };
        let ok = rec.passed;
        passed += ok as usize;
        r.text.push(format!(
            "{} {:<8} {:<16} max residual {:.3e}",
            if ok { "PASS" } else { "FAIL" },
            id,
            qs(p).join(","),
            rec.max_residual
        ));
        r.residuals.extend(residual_rows(&rec, true));
        corrections.extend(rec.corrections.iter().cloned());
        records.push(json!({
            "id": id,
            "params": rec.params,
            "routes": rec.routes,
            "max_residual": rec.max_residual,
            "passed": ok,
        }));
    }
    let total = items.len();
    r.text.push(format!("{passed}/{total} parameter points passed"));
    r.citations.extend(corrections.iter().map(|c| format!("sign correction: {c}")));
    r.results = json!({"records": records, "passed": passed, "total": total});
    r.status = if passed == total { Status::Pass } else { Status::Fail };
    Ok(Output { report: r })
}

fn cmd_closed_form(a: &IdentityArgs) -> CmdResult {
    let Some(id) = a.id.as_deref() else {
        return Err(Outcome::Usage("closed-form needs --id".into()));
    };
    let (p, sampled) = identity_params(a, id)?;
    let ident = lookup(id).map_err(lib_error)?;
    let f = closed_form(id, &p).map_err(lib_error)?;
    let rhs = closed_form_rhs(id, &p).map_err(lib_error)?;
    let value = eval_logcomb(&f, a.common.precision).map_err(lib_error)?;
    let decimal = fmt_float(value.re.mid(), a.common.precision as usize);
    let text = render_logcomb(&f);

    let mut r = Report::new("closed-form");
    r.input("id", id);
    r.input("params", Value::Object(named_params(id, &p)));
    if sampled {
        r.input("seed", a.common.seed);
    }
    common_inputs(&mut r, &a.common);
    let [p3, p4, p5] = ident.f_values(&p);
    r.results = json!({
        "id": id,
        "f_params": qs(&[p3, p4, p5]),
        "F": text,
        "value": decimal,
        "lhs": render_logcomb(&rhs),
        "statement": ident.statement(),
    });
    r.closed_form = Some(format!("F = {text}"));
    r.text.push(format!("F = {text}"));
    r.text.push(format!("  = {decimal}"));
    r.citations.push(ident.citation.to_string());
    r.citations.push(BASE_LOG_NOTE.to_string());
    Ok(Output { report: r })
}

fn cmd_eval(a: &EvalArgs) -> CmdResult {
    let p = parse_list(&a.tuple)?;
    let [p3, p4, p5]: [Q; 3] =
        p.try_into().map_err(|v: Vec<Q>| Outcome::Usage(format!("--tuple takes p3,p4,p5, got {} values", v.len())))?;
    let s = f32_at_1_q(p3, p4, p5, a.common.precision).map_err(lib_error)?;
    let decimal = fmt_float(&s.value, a.common.precision as usize);
    let mut r = Report::new("eval-f32");
    r.input("p3", fmt_rational(p3));
    r.input("p4", fmt_rational(p4));
    r.input("p5", fmt_rational(p5));
    common_inputs(&mut r, &a.common);
    r.results = json!({
        "value": decimal,
        "excess": excess(to_f64(p3), to_f64(p4), to_f64(p5)),
        "error_estimate": s.error,
        "terms": s.terms,
    });
    r.text.push(format!("F(1,1,{};{},{};1) = {decimal}", fmt_rational(p3), fmt_rational(p4), fmt_rational(p5)));
    Ok(Output { report: r })
}
