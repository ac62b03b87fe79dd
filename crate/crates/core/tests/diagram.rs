mod common;

use airframe_core::systems::{airplane, airplane_generators};
use airframe_core::{Diagram, EdgeAddress, Expansion, GroupWord, Image};
use common::{eval, random_word, rng, word, AIRPLANE_LETTERS};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn validation_examples() {
    let sys = airplane();
    let id = |n: &str| (sys.addr(n, &[]), Image::straight(sys.addr(n, &[])));
    assert!(Diagram::new(sys.clone(), ["bL", "bR", "rT", "rB"].map(id)).is_ok());
    // swapping the red halves of the circle while the blue edges stay put
    // reverses the circle, which no orientation-preserving map does
    let swap = [
        id("bL"),
        id("bR"),
        (sys.addr("rT", &[]), Image::straight(sys.addr("rB", &[]))),
        (sys.addr("rB", &[]), Image::straight(sys.addr("rT", &[]))),
    ];
    assert!(Diagram::new(sys.clone(), swap).is_err());
    let color_breaking = [
        (sys.addr("bL", &[]), Image::straight(sys.addr("rT", &[]))),
        (sys.addr("rT", &[]), Image::straight(sys.addr("bL", &[]))),
        id("bR"),
        id("rB"),
    ];
    assert!(Diagram::new(sys, color_breaking).is_err());
}

#[test]
fn expanding_a_pair_keeps_the_element() {
    let t = airplane_generators();
    let alpha = t.get("a").unwrap();
    for leaf in alpha.domain().leaves() {
        let e = alpha.expand_pair(leaf).unwrap();
        assert!(e.validate().is_ok());
        assert_eq!(e.reduce(), *alpha);
    }
    let id = Diagram::identity(airplane());
    let e = id.expand_pair(&airplane().addr("bR", &[])).unwrap();
    assert!(e.is_identity());
    assert!(!e.is_reduced());
}

#[test]
fn reduction_of_full_identity() {
    let sys = airplane();
    let full = Expansion::full(&sys, 2);
    let d = Diagram::new(sys.clone(), full.leaves().iter().map(|a| (a.clone(), Image::straight(a.clone())))).unwrap();
    assert_eq!(d.reduce(), Diagram::identity(sys));
    assert_eq!(d.reduce().reduce(), d.reduce());
}

#[test]
fn exact_identities() {
    let t = airplane_generators();
    assert!(eval(&t, "d b d b d b").is_identity());
    assert!(!eval(&t, "d b").is_identity());
    assert!(eval(&t, "d d").is_identity());
    assert!(eval(&t, "d").same_element(&eval(&t, "d^-1")));
    let alpha = eval(&t, "a");
    let (e, d) = (eval(&t, "e"), eval(&t, "d"));
    let rhs = e.commutator(&d).unwrap().compose(&eval(&t, "e^-1").commutator(&eval(&t, "a^-2")).unwrap()).unwrap();
    assert!(rhs.same_element(&alpha));
    for k in 1..=5 {
        let lhs = d.commutator(&e).unwrap().pow(k).unwrap();
        assert!(lhs.same_element(&d.commutator(&e.pow(k).unwrap()).unwrap()), "k = {k}");
    }
    assert!(eval(&t, "b").conjugate_by(&e).unwrap().same_element(&eval(&t, "b")));
    assert!(eval(&t, "g").conjugate_by(&e).unwrap().same_element(&eval(&t, "g")));
}

#[test]
fn word_evaluation_conventions() {
    let t = airplane_generators();
    assert!(t.evaluate(&GroupWord::new()).unwrap().is_identity());
    // the rightmost letter acts first
    let (a, b) = (eval(&t, "a"), eval(&t, "b"));
    assert_eq!(eval(&t, "a b"), a.compose(&b).unwrap());
    assert!(t.evaluate(&word("q")).is_err());
    assert_eq!(t.evaluate(&word("alpha")).unwrap(), a);
    let conj = word("b").conjugate(&word("e"));
    assert_eq!(conj.to_string(), "e^-1 b e");
    assert!(t.evaluate(&conj).unwrap().same_element(&b));
}

#[test]
fn orders() {
    let t = airplane_generators();
    assert_eq!(Diagram::identity(airplane()).order_up_to(5).unwrap(), Some(1));
    assert_eq!(eval(&t, "d b").order_up_to(10).unwrap(), Some(3));
    assert_eq!(eval(&t, "d").order_up_to(10).unwrap(), Some(2));
    assert_eq!(eval(&t, "e").order_up_to(12).unwrap(), None);
}

#[test]
fn inverse_of_identity() {
    let id = Diagram::identity(airplane());
    assert_eq!(id.inverse(), id);
}

#[test]
fn congruence_spot_check() {
    let t = airplane_generators();
    let mut r = rng(11);
    for _ in 0..20 {
        let (f, g, h) = (
            t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 6)).unwrap(),
            t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 6)).unwrap(),
            t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 6)).unwrap(),
        );
        let leaf = f.domain().leaves().iter().next().unwrap().clone();
        let f2 = f.expand_pair(&leaf).unwrap();
        assert!(f.same_element(&f2));
        assert!(f.compose(&g).unwrap().same_element(&f2.compose(&g).unwrap()));
        assert!(h.compose(&f).unwrap().same_element(&h.compose(&f2).unwrap()));
    }
}

fn arb_word() -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0usize..5, any::<bool>()), 0..=12).prop_map(|ls| {
        let mut w = GroupWord::new();
        for (i, pos) in ls {
            w.push(AIRPLANE_LETTERS[i], if pos { 1 } else { -1 });
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn group_laws(x in arb_word(), y in arb_word(), z in arb_word()) {
        let t = airplane_generators();
        let (f, g, h) = (t.evaluate(&x).unwrap(), t.evaluate(&y).unwrap(), t.evaluate(&z).unwrap());
        prop_assert_eq!(f.compose(&g).unwrap().compose(&h).unwrap(), f.compose(&g.compose(&h).unwrap()).unwrap());
        prop_assert!(f.compose(&f.inverse()).unwrap().is_identity());
        prop_assert!(f.inverse().compose(&f).unwrap().is_identity());
        prop_assert_eq!(f.compose(&Diagram::identity(t.system().clone())).unwrap(), f.clone());
        prop_assert!(f.validate().is_ok());
        prop_assert!(f.is_reduced());
        prop_assert_eq!(t.evaluate(&x.concat(&y)).unwrap(), f.compose(&g).unwrap());
    }

    #[test]
    fn expansion_invariance(x in arb_word(), picks in prop::collection::vec(any::<u32>(), 1..6)) {
        let t = airplane_generators();
        let f = t.evaluate(&x).unwrap();
        let mut e = f.clone();
        for p in picks {
            let leaves: Vec<EdgeAddress> = e.domain().leaves().iter().cloned().collect();
            e = e.expand_pair(&leaves[p as usize % leaves.len()]).unwrap();
            prop_assert!(e.validate().is_ok());
        }
        prop_assert_eq!(e.reduce(), f);
    }

    #[test]
    fn collapse_order_does_not_matter(x in arb_word(), picks in prop::collection::vec(any::<u32>(), 0..6), seed in any::<u64>()) {
        let t = airplane_generators();
        let mut e = t.evaluate(&x).unwrap();
        for p in picks {
            let leaves: Vec<EdgeAddress> = e.domain().leaves().iter().cloned().collect();
            e = e.expand_pair(&leaves[p as usize % leaves.len()]).unwrap();
        }
        let mut r = rng(seed);
        let first = e.reduce_by(|n| n - 1);
        let random = e.reduce_by(|n| r.gen_range(0..n));
        prop_assert_eq!(first, random);
    }
}
