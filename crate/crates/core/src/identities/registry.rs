//! The identity table. Boundary integrands, prefactors and trigonometric
//! terms are transcribed term by term; `printed_sign` keeps the sign as
//! stated in the source, `sign` the one confirmed by calibration.

use std::sync::OnceLock;

use super::{Affine, BoundaryTerm, Domain, Identity, IdentityKind, Prefactor, Region, TrigTerm};
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use crate::symbolic::{Denominator, Poly, RadicalMonomial, TrigKind};

pub const IDS: [&str; 16] = [
    "EX0", "G1-m", "G1-2m", "G1-3m", "G1-4m", "S1-m", "S1-2m", "S1-3m", "S1-4m", "G2-2m-a", "G2-2m-b", "G2-3m", "G2-4m",
    "G3-3m", "G3-4m", "P14",
];

const A: &[&str] = &["a"];
const AB: &[&str] = &["a", "b"];
const ABC: &[&str] = &["a", "b", "c"];

fn unit() -> Denominator {
    Denominator::new(Poly::from_ints(&[1]), Vec::new()).expect("constant denominator")
}

fn binom(a: i64, n: usize, b: i64) -> Denominator {
    Denominator::binomial(Q::from_integer(a), n, Q::from_integer(b)).expect("registry denominator")
}

/// `2x² − 2x + 1 = 2(x − 2^{−1/2}e(1/8))(x − 2^{−1/2}e(−1/8))`.
fn quad_2m() -> Denominator {
    let r = RadicalMonomial::root(2, q(-1, 2));
    let roots = vec![r.mul(&RadicalMonomial::unity(q(1, 8))), r.mul(&RadicalMonomial::unity(q(-1, 8)))];
    Denominator::new(Poly::from_ints(&[1, -2, 2]), roots).expect("registry denominator")
}

fn term(sign: i8, printed: i8, var: char, exponent: &str, num: &[i64], den: Denominator) -> BoundaryTerm {
    BoundaryTerm {
        sign,
        printed_sign: printed,
        var,
        exponent: Affine::parse(exponent),
        numerator: Poly::from_ints(num),
        denominator: den,
        digamma: None,
    }
}

fn trig(kind: TrigKind, sign: i8, printed: i8) -> Option<TrigTerm> {
    Some(TrigTerm { kind, sign, printed_sign: printed })
}

fn triple(t: [&str; 3]) -> [Affine; 3] {
    t.map(Affine::parse)
}

fn interval(lo: Option<Q>, hi: Option<Q>) -> Domain {
    Domain::Interval { lo, hi }
}

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &'static str,
    kind: IdentityKind,
    family: &'static str,
    region: Region,
    params: &'static [&'static str],
    prefactor: Prefactor,
    f: [&str; 3],
    double_scale: Prefactor,
    t: [&str; 3],
    boundary: Vec<BoundaryTerm>,
    trig: Option<TrigTerm>,
    domain: Domain,
    nonintegral: &[&str],
    calibration: Vec<Q>,
    citation: &'static str,
) -> Identity {
    Identity {
        id,
        kind,
        family,
        region,
        params,
        prefactor,
        f_params: triple(f),
        double_scale,
        triple: triple(t),
        boundary,
        trig,
        orientation: 1,
        printed_orientation: 1,
        domain,
        nonintegral: nonintegral.iter().map(|s| Affine::parse(s)).collect(),
        calibration,
        citation,
    }
}

const CITE_EX0: &str = "first example: character (a, 1-a, b, 1-b) on Gamma1, continued by the Pochhammer integral";
const CITE_G1: &str = "Gamma1 identity from Stokes' theorem on the blown-up Fermat surface, continued analytically";
const CITE_S1: &str = "Stokes' theorem on Gamma1 before analytic continuation";
const CITE_G2: &str = "Gamma2 identity with the exceptional-divisor term";
const CITE_G3: &str = "Gamma3 identity with the exceptional-divisor term";
const CITE_P14: &str =
    "Gamma1 double integral as a 3F2 value via xi = (1-s)/(1-st), eta = (1-t)/(1-st)";

fn build() -> Vec<Identity> {
    use IdentityKind::*;
    use Region::*;
    let one = Q::from_integer(1);
    let zero = Some(Q::from_integer(0));
    let pf = Prefactor::new;
    let mut v = Vec::new();

    let mut ex0 = entry(
        "EX0",
        Hypergeometric,
        "X_m",
        Gamma1,
        AB,
        pf(one, &[], &["-a+b+1"]),
        ["b+1", "2", "-a+b+2"],
        pf(one, &[], &[]),
        ["1-a", "a", "b"],
        vec![term(1, 1, 'x', "-a", &[1], unit())],
        None,
        Domain::UnitSquare,
        &["a", "b", "a-b"],
        vec![q(1, 3), q(1, 5)],
        CITE_EX0,
    );
    ex0.boundary[0].digamma = Some(Affine::parse("b"));
    v.push(ex0);

    v.push(entry(
        "G1-m",
        Hypergeometric,
        "X_m",
        Gamma1,
        AB,
        pf(one, &["a"], &["b-a+1", "b+a+1"]),
        ["b+1", "b-a+2", "b+a+2"],
        pf(one, &["a"], &[]),
        ["b+1", "-a", "a"],
        vec![term(1, 1, 'x', "b-a", &[1], binom(1, 1, 1)), term(-1, -1, 'x', "b+a", &[1], binom(1, 1, 1))],
        None,
        Domain::AbsBelow,
        &["a"],
        vec![q(1, 4), q(1, 2)],
        CITE_G1,
    ));
    v.push(entry(
        "G1-2m",
        Hypergeometric,
        "X_2m",
        Gamma1,
        A,
        pf(one, &[], &["a+1/2"]),
        ["1/2", "a+1", "a+3/2"],
        pf(one, &["a"], &[]),
        ["2a", "-a", "1/2-a"],
        vec![term(1, 1, 'x', "2a-1", &[2], binom(-1, 1, 2))],
        None,
        interval(zero, None),
        &["2a"],
        vec![q(1, 4)],
        CITE_G1,
    ));
    v.push(entry(
        "G1-3m",
        Hypergeometric,
        "X_3m",
        Gamma1,
        A,
        pf(one, &["a"], &["6a+1", "2a+2/3"]),
        ["a+1", "2a+4/3", "2a+5/3"],
        pf(q(1, 3), &["a"], &[]),
        ["3a", "1/3-a", "2/3-a"],
        vec![term(1, 1, 'y', "6a+1", &[3, 0, 0, 1], binom(1, 6, 27)), term(1, 1, 'x', "6a", &[9, 0, 0, 1], binom(1, 6, 27))],
        None,
        interval(zero, None),
        &["3a"],
        vec![q(1, 4)],
        CITE_G1,
    ));
    v.push(entry(
        "G1-4m",
        Hypergeometric,
        "X_4m",
        Gamma1,
        A,
        pf(q(4, 1), &["a"], &["12a+1", "3a+3/4"]),
        ["2a+1", "3a+5/4", "3a+7/4"],
        pf(one, &["a"], &[]),
        ["4a", "1/4-a", "3/4-a"],
        vec![
            term(1, 1, 'y', "12a", &[0, 0, 16, 0, 0, 0, -8, 0, 0, 0, -2], binom(-1, 12, 64)),
            term(1, 1, 'x', "12a", &[64, 0, 0, 0, 16, 0, 0, 0, -2], binom(-1, 12, 64)),
        ],
        None,
        interval(zero, None),
        &["4a"],
        vec![q(1, 4)],
        CITE_G1,
    ));

    v.push(entry(
        "S1-m",
        Stokes,
        "X_m",
        Gamma1,
        AB,
        pf(one, &["a"], &["b-a+1", "b+a+1"]),
        ["b+1", "b-a+2", "b+a+2"],
        pf(one, &["a"], &[]),
        ["b+1", "-a", "a"],
        vec![term(-1, -1, 'y', "b+a", &[1], binom(1, 1, 1)), term(1, 1, 'x', "b-a", &[1], binom(1, 1, 1))],
        None,
        Domain::AbsBelow,
        &[],
        vec![q(1, 4), q(1, 2)],
        CITE_S1,
    ));
    v.push(entry(
        "S1-2m",
        Stokes,
        "X_2m",
        Gamma1,
        A,
        pf(one, &[], &["a+1/2"]),
        ["1/2", "a+1", "a+3/2"],
        pf(one, &["a"], &[]),
        ["2a", "-a", "1/2-a"],
        vec![term(1, 1, 'x', "2a-1", &[2], binom(-1, 1, 2))],
        None,
        interval(zero, None),
        &[],
        vec![q(1, 4)],
        CITE_S1,
    ));
    v.push(entry(
        "S1-3m",
        Stokes,
        "X_3m",
        Gamma1,
        A,
        pf(q(3, 1), &["a"], &["6a+1", "2a+2/3"]),
        ["a+1", "2a+4/3", "2a+5/3"],
        pf(one, &["a"], &[]),
        ["3a", "1/3-a", "2/3-a"],
        vec![
            term(1, 1, 'y', "6a", &[0, 9, 0, 0, 3], binom(1, 6, 27)),
            term(1, 1, 'x', "6a", &[27, 0, 0, 3], binom(1, 6, 27)),
        ],
        None,
        interval(zero, None),
        &[],
        vec![q(1, 4)],
        CITE_S1,
    ));
    let mut s14 = entry(
        "S1-4m",
        Stokes,
        "X_4m",
        Gamma1,
        A,
        pf(q(4, 1), &["a"], &["12a+1", "3a+3/4"]),
        ["2a+1", "3a+5/4", "3a+7/4"],
        pf(one, &["a"], &[]),
        ["4a", "1/4-a", "3/4-a"],
        vec![
            term(1, 1, 'y', "12a", &[0, 0, -16, 0, 0, 0, 8, 0, 0, 0, 2], binom(-1, 12, 64)),
            term(1, 1, 'x', "12a", &[-64, 0, 0, 0, -16, 0, 0, 0, 2], binom(-1, 12, 64)),
        ],
        None,
        interval(zero, None),
        &[],
        vec![q(1, 4)],
        CITE_S1,
    );
    s14.orientation = -1;
    v.push(s14);

    v.push(entry(
        "G2-2m-a",
        Hypergeometric,
        "X_2m",
        Gamma2,
        A,
        pf(one, &["a"], &["a+1/2", "-2a+1/2"]),
        ["1/2", "a+3/2", "-2a+3/2"],
        pf(one, &["a"], &[]),
        ["2a", "-a", "1/2-a"],
        vec![term(1, 1, 'x', "-4a", &[2], quad_2m())],
        trig(TrigKind::Cos2m, -1, 1),
        interval(zero, Some(q(1, 4))),
        &["2a"],
        vec![q(1, 5)],
        CITE_G2,
    ));
    v.push(entry(
        "G2-2m-b",
        Hypergeometric,
        "X_2m",
        Gamma2,
        A,
        pf(one, &["a-1/2"], &["-2a+3/2", "a"]),
        ["1/2", "a+1", "-2a+5/2"],
        pf(one, &["a-1/2"], &[]),
        ["2a-1", "1/2-a", "1-a"],
        vec![term(1, 1, 'x', "2-4a", &[2], quad_2m())],
        trig(TrigKind::Cos2mShift, -1, 1),
        interval(Some(q(1, 2)), Some(q(3, 4))),
        &["2a"],
        vec![q(3, 5)],
        CITE_G2,
    ));
    v.push(entry(
        "G2-3m",
        Hypergeometric,
        "X_3m",
        Gamma2,
        A,
        pf(q(3, 1), &["a"], &["2a+2/3", "-2a+1"]),
        ["a+1", "2a+5/3", "-2a+2"],
        pf(q(3, 1), &["a"], &[]),
        ["3a", "1/3-a", "2/3-a"],
        vec![
            term(1, 1, 'x', "2-6a", &[27, 0, 0, 81], binom(27, 6, 1)),
            term(-1, -1, 'x', "6a+1", &[27, 0, 0, -9], binom(1, 6, 27)),
        ],
        trig(TrigKind::Sin3mG2, -1, -1),
        interval(Some(q(-1, 3)), Some(q(1, 2))),
        &["3a"],
        vec![q(1, 4)],
        CITE_G2,
    ));
    v.push(entry(
        "G2-4m",
        Hypergeometric,
        "X_4m",
        Gamma2,
        A,
        pf(q(-1, 1), &["a"], &["3a+3/4", "-2a+1"]),
        ["2a+1", "3a+7/4", "-2a+2"],
        pf(q(-1, 1), &["a"], &[]),
        ["4a", "1/4-a", "3/4-a"],
        vec![
            term(-1, -1, 'x', "-8a", &[0, 0, 0, 8, 0, 0, 0, 64], binom(64, 8, 1)),
            term(-1, -1, 'x', "12a", &[0, 0, -16, 0, 0, 0, -8, 0, 0, 0, 2], binom(1, 12, 64)),
        ],
        trig(TrigKind::Sin4mG2, 1, 1),
        interval(Some(q(-1, 4)), Some(q(1, 2))),
        &["4a"],
        vec![q(1, 10)],
        CITE_G2,
    ));
    v.push(entry(
        "G3-3m",
        Hypergeometric,
        "X_3m",
        Gamma3,
        A,
        pf(q(3, 1), &["a"], &["-2a+1", "2a+1/3"]),
        ["a+1", "-2a+2", "2a+4/3"],
        pf(q(3, 1), &["a"], &[]),
        ["3a", "1/3-a", "2/3-a"],
        vec![
            term(-1, -1, 'y', "2-6a", &[27, 0, 0, -81], binom(27, 6, 1)),
            term(-1, -1, 'y', "6a", &[81, 0, 0, -9], binom(1, 6, 27)),
        ],
        trig(TrigKind::Sin3mG3, 1, 1),
        interval(Some(q(-1, 6)), Some(q(1, 3))),
        &["3a"],
        vec![q(1, 10)],
        CITE_G3,
    ));
    v.push(entry(
        "G3-4m",
        Hypergeometric,
        "X_4m",
        Gamma3,
        A,
        pf(q(-1, 1), &["a"], &["-2a+1", "3a+1/4"]),
        ["2a+1", "-2a+2", "3a+5/4"],
        pf(q(-1, 1), &["a"], &[]),
        ["4a", "1/4-a", "3/4-a"],
        vec![
            term(1, 1, 'y', "-8a", &[0, 0, 0, 8, 0, 0, 0, -64], binom(64, 8, 1)),
            term(-1, -1, 'y', "12a", &[-64, 0, 0, 0, 16, 0, 0, 0, 2], binom(1, 12, 64)),
        ],
        trig(TrigKind::Cos4mG3, -1, -1),
        interval(Some(q(-1, 12)), Some(q(1, 4))),
        &["4a"],
        vec![q(1, 20)],
        CITE_G3,
    ));

    v.push(entry(
        "P14",
        DoubleIntegral,
        "any",
        Gamma1,
        ABC,
        pf(one, &[], &["a+b", "a+c"]),
        ["a+b+c", "a+b+1", "a+c+1"],
        pf(one, &[], &[]),
        ["a", "b", "c"],
        Vec::new(),
        None,
        Domain::Positive,
        &[],
        vec![q(1, 2), q(1, 2), q(1, 2)],
        CITE_P14,
    ));
    v
}

/// All identities, in a fixed order.
pub fn registry() -> &'static [Identity] {
    static REG: OnceLock<Vec<Identity>> = OnceLock::new();
    REG.get_or_init(build)
}

pub fn lookup(id: &str) -> Result<&'static Identity> {
    registry().iter().find(|i| i.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn cardinality_and_order() {
        let r = registry();
        assert_eq!(r.len(), 16);
        let ids: Vec<&str> = r.iter().map(|i| i.id).collect();
        assert_eq!(ids, IDS);
        assert!(matches!(lookup("G9"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn lookup_examples() {
        let g = lookup("G1-2m").unwrap();
        assert_eq!(g.prefactor.eval(&[q(1, 4)]), Some(q(4, 3)));
        assert_eq!(g.f_values(&[q(1, 4)]), [q(1, 2), q(5, 4), q(7, 4)]);
        assert!(g.trig.is_none());
        assert_eq!(g.boundary.len(), 1);
        assert_eq!(g.boundary[0].exponent.eval(&[q(1, 4)]), q(-1, 2));
        assert_eq!(lookup("G2-2m-a").unwrap().trig.unwrap().kind, TrigKind::Cos2m);
    }

    // F's parameters are fixed by the reduced triple; the hgf prefactor
    // times (α1+α2)(α1+α3) must be the coefficient of the double integral.
    #[test]
    fn triples_match_series_parameters() {
        let pts = [q(1, 7), q(2, 9), q(-1, 11)];
        for id in registry() {
            for &x in &pts {
                let p: Vec<Q> = match id.arity() {
                    1 => vec![x],
                    2 => vec![x, q(3, 5)],
                    _ => vec![x, q(3, 5), q(2, 7)],
                };
                let [p3, p4, p5] = id.f_values(&p);
                let [a1, a2, a3] = id.gamma1_triple(&p);
                assert_eq!(a1 + a2 + a3, p3, "{}", id.id);
                assert_eq!(a1 + a2 + int(1), p4, "{}", id.id);
                assert_eq!(a1 + a3 + int(1), p5, "{}", id.id);
                assert_eq!(id.excess(&p), a1, "{}", id.id);
                if let (Some(pre), Some(sc)) = (id.prefactor.eval(&p), id.double_scale.eval(&p)) {
                    assert_eq!(pre * (a1 + a2) * (a1 + a3), sc, "{}", id.id);
                }
            }
        }
    }

    #[test]
    fn statements_render() {
        let s = lookup("G2-2m-a").unwrap().statement();
        assert!(s.starts_with("a/((a+1/2)*(-2a+1/2)) * F(1,1,1/2;a+3/2,-2a+3/2;1) = "), "{s}");
        assert!(s.ends_with(" - 4^a*pi/cos(pi*a)"), "{s}");
        assert_eq!(lookup("G2-2m-a").unwrap().corrections().len(), 1);
        assert_eq!(lookup("S1-4m").unwrap().corrections().len(), 1);
        assert!(lookup("G1-3m").unwrap().corrections().is_empty());
    }
}
