use num_integer::Integer;
use proptest::prelude::*;

use hgperiod::characters::{classify, enumerate_exceptional, galois_orbit, is_hodge, totient, CharacterTuple};

/// Primitive tuples with numerators in `1..m`.
fn tuple() -> impl Strategy<Value = CharacterTuple> {
    (2u32..=90).prop_flat_map(|m| (Just(m), prop::array::uniform4(1..m))).prop_filter_map("not primitive", |(m, a)| {
        CharacterTuple::new(a, m).ok()
    })
}

/// Tuples whose numerators sum to `2m`, so the Hodge side is reached often.
fn balanced_tuple() -> impl Strategy<Value = CharacterTuple> {
    (3u32..=90)
        .prop_flat_map(|m| (Just(m), 1..m, 1..m, 1..m))
        .prop_filter_map("fourth entry out of range", |(m, a, b, c)| {
            let s = a + b + c;
            (s > m && s < 2 * m).then(|| CharacterTuple::new([a, b, c, 2 * m - s], m).ok()).flatten()
        })
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn galois_invariance(t in prop_oneof![tuple(), balanced_tuple()], s in 1u32..1000) {
        let m = t.m();
        let s = s % m;
        prop_assume!(s > 0 && s.gcd(&m) == 1);
        prop_assert_eq!(is_hodge(&t), is_hodge(&t.scale(s)));
    }

    #[test]
    fn permutation_invariance(t in prop_oneof![tuple(), balanced_tuple()]) {
        let h = is_hodge(&t);
        let class = classify(&t).ok().map(|c| c.name());
        for p in permutations() {
            let u = t.permute(p);
            prop_assert_eq!(is_hodge(&u), h);
            prop_assert_eq!(classify(&u).ok().map(|c| c.name()), class);
        }
    }

    #[test]
    fn hodge_forces_sum_two_m(t in balanced_tuple()) {
        if is_hodge(&t) {
            prop_assert_eq!(t.numerators().iter().sum::<u32>(), 2 * t.m());
        }
    }

    #[test]
    fn non_hodge_tuples_are_rejected_by_classify(t in tuple()) {
        prop_assert_eq!(classify(&t).is_ok(), is_hodge(&t));
    }
}

#[test]
fn orbits_partition_the_exceptional_set() {
    for m in [12, 15, 20, 24, 30, 42, 60, 84, 120, 180] {
        let r = enumerate_exceptional(m);
        let phi = totient(m) as usize;
        let mut seen = std::collections::BTreeSet::new();
        for o in &r.orbits {
            assert_eq!(phi % o.members.len(), 0, "m = {m}: orbit size {} does not divide {phi}", o.members.len());
            assert_eq!(o.representative, o.members[0]);
            let t = CharacterTuple::new(o.representative, m).unwrap();
            assert_eq!(galois_orbit(&t).into_iter().collect::<Vec<_>>(), o.members);
            for x in &o.members {
                assert!(seen.insert(*x), "m = {m}: {x:?} in two orbits");
                let t = CharacterTuple::new(*x, m).unwrap();
                assert!(classify(&t).unwrap().is_exceptional(), "m = {m}: {x:?}");
            }
        }
        assert_eq!(seen.len(), r.e_m);
    }
}

#[test]
fn spot_counts() {
    for (m, e, o) in [(12, 8, 2), (30, 98, 15), (60, 204, 23), (120, 72, 5), (180, 24, 1)] {
        let r = enumerate_exceptional(m);
        assert_eq!((r.e_m, r.o_m), (e, o), "m = {m}");
    }
    for m in [13, 16, 22, 25, 181] {
        assert_eq!(enumerate_exceptional(m).e_m, 0, "m = {m}");
    }
}
