//! Character tuples on Fermat surfaces: the Hodge condition, the
//! classification into parametric families, and enumeration of the
//! exceptional Galois orbits.
//!
//! A tuple `(a0, a1, a2, a3)` with common denominator `m` stands for the
//! rationals `a_i / m` in `(0, 1)`. Tuples are compared as sorted multisets,
//! so characters are counted up to coordinate permutation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{frac, Q};

/// Largest denominator carrying an exceptional character.
pub const EXCEPTIONAL_MAX_M: u32 = 180;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CharacterTuple {
    a: [u32; 4],
    m: u32,
}

impl CharacterTuple {
    pub fn new(a: [u32; 4], m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidTuple(format!("denominator m = {m} must be >= 2")));
        }
        if let Some(x) = a.iter().find(|&&x| x == 0 || x >= m) {
            return Err(Error::InvalidTuple(format!(
                "numerator {x} outside 1..={} for m = {m}",
                m - 1
            )));
        }
        let g = a.iter().fold(m, |g, &x| g.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidTuple(format!(
                "{a:?} / {m} is not primitive (common factor {g})"
            )));
        }
        Ok(Self { a, m })
    }

    /// Builds a tuple from four rationals in (0, 1), using their common
    /// denominator.
    pub fn from_rationals(alphas: [Q; 4]) -> Result<Self> {
        let m = alphas.iter().fold(1i64, |l, x| l.lcm(x.denom()));
        let mut a = [0u32; 4];
        for (slot, x) in a.iter_mut().zip(alphas) {
            let n = x * Q::from_integer(m);
            if !n.is_integer() || *n.numer() <= 0 || *n.numer() >= m {
                return Err(Error::InvalidTuple(format!("{x} is not in (0, 1)")));
            }
            *slot = *n.numer() as u32;
        }
        Self::new(a, m as u32)
    }

    pub fn numerators(&self) -> [u32; 4] {
        self.a
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn alphas(&self) -> [Q; 4] {
        self.a.map(|x| Q::new(x as i64, self.m as i64))
    }

    pub fn sorted(&self) -> [u32; 4] {
        let mut s = self.a;
        s.sort_unstable();
        s
    }

    /// Multiplies by a unit `s` of Z/mZ and reduces.
    pub fn scale(&self, s: u32) -> Self {
        let m = self.m as u64;
        let a = self.a.map(|x| ((x as u64 * s as u64) % m) as u32);
        Self { a, m: self.m }
    }

    pub fn permute(&self, p: [usize; 4]) -> Self {
        Self { a: p.map(|i| self.a[i]), m: self.m }
    }
}

impl fmt::Display for CharacterTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.a;
        write!(f, "({a}, {b}, {c}, {d})/{}", self.m)
    }
}

/// Which family of the classification a Hodge tuple belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum ClassLabel {
    /// `(α, -α, β, -β)`; `pairing` lists indices so that entries
    /// `pairing[0], pairing[1]` and `pairing[2], pairing[3]` sum to 0 mod m.
    Type1 { pairing: [usize; 4] },
    /// `(2α, 1-α, -α+1/2, 1/2)`
    Type2a { alpha: Q },
    /// `(3α, 1-α, -α+1/3, -α+2/3)`
    Type2b { alpha: Q },
    /// `(4α, 1-2α, -α+1/4, -α+3/4)`
    Type2c { alpha: Q },
    Exceptional,
}

impl ClassLabel {
    pub fn name(&self) -> &'static str {
        match self {
            ClassLabel::Type1 { .. } => "Type1",
            ClassLabel::Type2a { .. } => "Type2a",
            ClassLabel::Type2b { .. } => "Type2b",
            ClassLabel::Type2c { .. } => "Type2c",
            ClassLabel::Exceptional => "Exceptional",
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self, ClassLabel::Exceptional)
    }
}

fn units(m: u32) -> impl Iterator<Item = u32> {
    (1..m).filter(move |t| t.gcd(&m) == 1)
}

fn euler_phi(m: u32) -> u32 {
    units(m).count() as u32
}

fn is_hodge_raw(a: [u32; 4], m: u32) -> bool {
    let m64 = m as u64;
    units(m).all(|t| {
        let s: u64 = a.iter().map(|&x| (x as u64 * t as u64) % m64).sum();
        s == 2 * m64
    })
}

/// True iff `Σ ⟨t·a_i/m⟩ = 2` for every unit `t` of Z/mZ.
pub fn is_hodge(t: &CharacterTuple) -> bool {
    is_hodge_raw(t.a, t.m)
}

const PAIRINGS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

fn type1_pairing(a: [u32; 4], m: u32) -> Option<[usize; 4]> {
    PAIRINGS
        .into_iter()
        .find(|p| (a[p[0]] + a[p[1]]) % m == 0 && (a[p[2]] + a[p[3]]) % m == 0)
}

#[derive(Clone, Copy)]
enum Family {
    A,
    B,
    C,
}

impl Family {
    /// Family members as rationals mod 1, before reduction.
    fn entries(self, alpha: Q) -> [Q; 4] {
        let one = Q::from_integer(1);
        let r = |n, d| Q::new(n, d);
        match self {
            Family::A => [alpha * 2, one - alpha, r(1, 2) - alpha, r(1, 2)],
            Family::B => [alpha * 3, one - alpha, r(1, 3) - alpha, r(2, 3) - alpha],
            Family::C => [alpha * 4, one - alpha * 2, r(1, 4) - alpha, r(3, 4) - alpha],
        }
    }

    /// Candidate parameters: the entry `1-α` (or `1-2α`) must equal one of
    /// the tuple's entries mod 1, which pins α to finitely many values.
    fn candidates(self, alphas: &[Q; 4]) -> Vec<Q> {
        let half = Q::new(1, 2);
        let mut out: Vec<Q> = match self {
            Family::A | Family::B => alphas.iter().map(|&x| frac(-x)).collect(),
            Family::C => alphas
                .iter()
                .flat_map(|&x| [frac(-x / 2), frac(-x / 2 + half)])
                .collect(),
        };
        out.sort();
        out.dedup();
        out
    }
}

fn family_witness(t: &CharacterTuple, family: Family) -> Option<Q> {
    let alphas = t.alphas();
    let mut target = alphas;
    target.sort();
    family.candidates(&alphas).into_iter().find(|&alpha| {
        let mut e = family.entries(alpha).map(frac);
        e.sort();
        e == target
    })
}

/// Classifies a Hodge tuple. Type1 is tested before the Type2 families,
/// and 2a before 2b before 2c.
pub fn classify(t: &CharacterTuple) -> Result<ClassLabel> {
    if !is_hodge(t) {
        return Err(Error::NotHodge(t.to_string()));
    }
    Ok(classify_hodge(t))
}

fn classify_hodge(t: &CharacterTuple) -> ClassLabel {
    if let Some(pairing) = type1_pairing(t.a, t.m) {
        return ClassLabel::Type1 { pairing };
    }
    if let Some(alpha) = family_witness(t, Family::A) {
        return ClassLabel::Type2a { alpha };
    }
    if let Some(alpha) = family_witness(t, Family::B) {
        return ClassLabel::Type2b { alpha };
    }
    if let Some(alpha) = family_witness(t, Family::C) {
        return ClassLabel::Type2c { alpha };
    }
    ClassLabel::Exceptional
}

/// Sorted tuples `sort(s·a mod m)` over all units `s`.
pub fn galois_orbit(t: &CharacterTuple) -> BTreeSet<[u32; 4]> {
    units(t.m).map(|s| t.scale(s).sorted()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub representative: [u32; 4],
    pub members: Vec<[u32; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalReport {
    pub m: u32,
    pub e_m: usize,
    pub o_m: usize,
    pub orbits: Vec<Orbit>,
}

impl ExceptionalReport {
    pub fn representatives(&self) -> Vec<[u32; 4]> {
        self.orbits.iter().map(|o| o.representative).collect()
    }
}

fn exceptional_with_first(m: u32, a0: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a1 in a0..m {
        for a2 in a1..m {
            let a3 = (3 * m - (a0 + a1 + a2) % m) % m;
            if a3 < a2 || a3 == 0 {
                continue;
            }
            // Σ a_i = 2m is forced by t = 1.
            if a0 + a1 + a2 + a3 != 2 * m {
                continue;
            }
            let a = [a0, a1, a2, a3];
            if a.iter().fold(m, |g, &x| g.gcd(&x)) != 1 || !is_hodge_raw(a, m) {
                continue;
            }
            let t = CharacterTuple { a, m };
            if classify_hodge(&t).is_exceptional() {
                out.push(a);
            }
        }
    }
    out
}

/// Lists every exceptional sorted tuple with denominator exactly `m`,
/// grouped into Galois orbits with lexicographically least representatives.
pub fn enumerate_exceptional(m: u32) -> ExceptionalReport {
    if m < 2 {
        return ExceptionalReport { m, e_m: 0, o_m: 0, orbits: Vec::new() };
    }
    let found: Vec<[u32; 4]> = (1..m)
        .into_par_iter()
        .flat_map_iter(|a0| exceptional_with_first(m, a0))
        .collect();
    let mut remaining: BTreeSet<[u32; 4]> = found.iter().copied().collect();
    let e_m = remaining.len();
    let mut orbits = Vec::new();
    while let Some(&first) = remaining.iter().next() {
        let t = CharacterTuple { a: first, m };
        let members: Vec<[u32; 4]> = galois_orbit(&t).into_iter().collect();
        for x in &members {
            remaining.remove(x);
        }
        let representative = members[0];
        orbits.push(Orbit { representative, members });
    }
    orbits.sort_by_key(|o| o.representative);
    ExceptionalReport { m, e_m, o_m: orbits.len(), orbits }
}

/// Tallies orbit sizes; each must divide φ(m).
pub fn orbit_size_histogram(report: &ExceptionalReport) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for o in &report.orbits {
        *h.entry(o.members.len()).or_insert(0) += 1;
    }
    h
}

pub fn totient(m: u32) -> u32 {
    euler_phi(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: [u32; 4], m: u32) -> CharacterTuple {
        CharacterTuple::new(a, m).unwrap()
    }

    #[test]
    fn rejects_invalid() {
        assert!(CharacterTuple::new([0, 1, 2, 3], 6).is_err());
        assert!(CharacterTuple::new([1, 2, 3, 6], 6).is_err());
        assert!(CharacterTuple::new([2, 4, 2, 4], 6).is_err());
        assert!(CharacterTuple::new([1, 2, 3, 4], 1).is_err());
    }

    #[test]
    fn hodge_examples() {
        assert!(is_hodge(&t([1, 4, 9, 10], 12)));
        assert!(is_hodge(&t([2, 5, 3, 4], 7)));
        assert!(!is_hodge(&t([1, 1, 1, 2], 5)));
    }

    #[test]
    fn classify_examples() {
        assert!(matches!(classify(&t([1, 6, 2, 5], 7)).unwrap(), ClassLabel::Type1 { .. }));
        assert_eq!(
            classify(&t([4, 8, 3, 5], 10)).unwrap(),
            ClassLabel::Type2a { alpha: Q::new(1, 5) }
        );
        assert_eq!(classify(&t([1, 4, 9, 10], 12)).unwrap(), ClassLabel::Exceptional);
        assert_eq!(
            classify(&t([1, 1, 1, 2], 5)),
            Err(Error::NotHodge("(1, 1, 1, 2)/5".into()))
        );
    }

    #[test]
    fn family_2c_with_odd_half_denominator() {
        // m = 14 is not divisible by 4, but α = 13/28 still lands in 2c.
        let x = t([1, 4, 11, 12], 14);
        assert!(is_hodge(&x));
        assert_eq!(classify(&x).unwrap(), ClassLabel::Type2c { alpha: Q::new(13, 28) });
    }

    #[test]
    fn orbit_examples() {
        let o = galois_orbit(&t([1, 4, 9, 10], 12));
        let want: BTreeSet<_> =
            [[1, 4, 9, 10], [2, 5, 8, 9], [3, 4, 7, 10], [2, 3, 8, 11]].into_iter().collect();
        assert_eq!(o, want);
        let o = galois_orbit(&t([1, 7, 9, 11], 14));
        assert_eq!(o, [[1, 7, 9, 11], [3, 5, 7, 13]].into_iter().collect());
    }

    #[test]
    fn small_reports() {
        let r = enumerate_exceptional(12);
        assert_eq!((r.e_m, r.o_m), (8, 2));
        assert_eq!(r.representatives(), vec![[1, 4, 9, 10], [1, 6, 8, 9]]);
        let r = enumerate_exceptional(13);
        assert_eq!((r.e_m, r.o_m), (0, 0));
        assert!(r.orbits.is_empty());
    }

    #[test]
    fn orbit_sizes_divide_phi() {
        for m in [12, 14, 15, 18, 20, 24] {
            let r = enumerate_exceptional(m);
            let total: usize = r.orbits.iter().map(|o| o.members.len()).sum();
            assert_eq!(total, r.e_m);
            for o in &r.orbits {
                assert_eq!(totient(m) as usize % o.members.len(), 0);
            }
        }
    }
}
