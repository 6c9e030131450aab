use rug::Float;

use hgperiod::identities::{closed_form, lookup, permutation_reduction, sample_parameters, verify, Region, Route, IDS};
use hgperiod::numerics::{f32_at_1_q, gamma1_double};
use hgperiod::rational::{q, to_f64, Q};
use hgperiod::symbolic::{eval_const, eval_logcomb, AlgExpr};

#[test]
fn closed_forms_match_series_to_thirty_digits() {
    for id in IDS.iter().filter(|id| **id != "P14") {
        let ident = lookup(id).unwrap();
        let p = &sample_parameters(id, 1, 99).unwrap()[0];
        let [p3, p4, p5] = ident.f_values(p);
        let series = f32_at_1_q(p3, p4, p5, 50).unwrap().value;
        let c = eval_logcomb(&closed_form(id, p).unwrap(), 50).unwrap();
        let prec = series.prec().min(c.prec());
        let d = Float::with_val(prec, &series - c.re.mid()).abs() / series.clone().abs();
        assert!(d.to_f64() < 1e-30, "{id} {p:?}: relative {}", d.to_f64());
        assert!(c.im.mid().to_f64().abs() < 1e-30 * series.to_f64().abs());
    }
}

#[test]
fn every_identity_verifies_at_sampled_points() {
    for id in IDS {
        for p in sample_parameters(id, 5, 2024).unwrap() {
            let r = verify(id, &p, 30, 1e-8).unwrap_or_else(|e| panic!("{id} {p:?}: {e}"));
            assert!(r.max_residual <= 1e-8);
            assert!(r.routes.len() >= 2);
        }
    }
}

/// The Γ₁ integrands in the published middle lines of the Γ₂ identities, as
/// `(ξ+η−1)^{a1−1} ξ^{a2−1} η^{a3−1}` exponent triples in α, together with
/// the printed phase exponent `x` of `(−1)^x` where one is printed.
fn middle_line(id: &str, a: Q) -> ([Q; 3], Option<Q>) {
    match id {
        "G2-2m-a" => ([q(1, 2) - a, q(2, 1) * a, -a], Some(a - q(1, 2))),
        "G2-3m" => ([q(2, 3) - a, q(3, 1) * a, q(1, 3) - a], Some(q(2, 1) * a + q(2, 3))),
        "G2-4m" => ([q(3, 4) - a, q(4, 1) * a, q(1, 4) - a], None),
        _ => unreachable!(),
    }
}

#[test]
fn gamma2_reduction_reproduces_middle_lines() {
    for id in ["G2-2m-a", "G2-3m", "G2-4m"] {
        let ident = lookup(id).unwrap();
        for p in sample_parameters(id, 4, 17).unwrap() {
            let base = ident.triple.clone().map(|x| x.eval(&p));
            let red = permutation_reduction(Region::Gamma2, base);
            let (triple, printed) = middle_line(id, p[0]);
            assert_eq!(red.triple, triple, "{id} {p:?}");
            assert_eq!(red.triple, ident.gamma1_triple(&p));

            if let Some(printed) = printed {
                let ours = eval_const(&red.phase, 30).unwrap().to_c64();
                let theirs = eval_const(&AlgExpr::unity(printed / Q::from_integer(2)), 30).unwrap().to_c64();
                if id == "G2-2m-a" {
                    // Printed (−1)^{α−1/2}; the substitution gives (−1)^{α+1/2}.
                    assert!((ours + theirs).norm() < 1e-25, "{id}: {ours} vs {theirs}");
                } else {
                    assert!((ours - theirs).norm() < 1e-25, "{id}: {ours} vs {theirs}");
                }
            }

            // The reduced integral is the F value of the three-parameter formula.
            let [a1, a2, a3] = red.triple;
            if !(a1 > Q::from_integer(0) && a1 + a2 > Q::from_integer(0) && a1 + a3 > Q::from_integer(0)) {
                continue;
            }
            let d = gamma1_double(to_f64(a1), to_f64(a2), to_f64(a3), 1e-10).unwrap().value;
            let one = Q::from_integer(1);
            let f = f32_at_1_q(a1 + a2 + a3, a1 + a2 + one, a1 + a3 + one, 20).unwrap().value.to_f64();
            let f = f / to_f64((a1 + a2) * (a1 + a3));
            assert!((d - f).abs() <= 1e-8 * f.abs(), "{id} {p:?}: {d} vs {f}");
        }
    }
}

#[test]
fn gamma3_reduction_matches_series_parameters() {
    for id in ["G3-3m", "G3-4m"] {
        let ident = lookup(id).unwrap();
        for p in sample_parameters(id, 4, 3).unwrap() {
            let base = ident.triple.clone().map(|x| x.eval(&p));
            let red = permutation_reduction(Region::Gamma3, base);
            assert_eq!(red.triple, ident.gamma1_triple(&p));
            let r = verify(id, &p, 30, 1e-8).unwrap();
            assert!(r.value(Route::Double).is_some(), "{id} {p:?}: double route not run");
        }
    }
}

#[test]
fn corrections_are_reported() {
    let p = &sample_parameters("G2-2m-a", 1, 1).unwrap()[0];
    let r = verify("G2-2m-a", p, 30, 1e-8).unwrap();
    assert_eq!(r.corrections.len(), 1);
    let r = verify("S1-4m", &sample_parameters("S1-4m", 1, 1).unwrap()[0], 30, 1e-8).unwrap();
    assert_eq!(r.orientation, -1);
}
