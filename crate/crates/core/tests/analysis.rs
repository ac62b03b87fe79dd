mod common;

use airframe_core::analysis::*;
use airframe_core::airplane::ExtremeId;
use airframe_core::pl::{points, PlKind, PlMap};
use airframe_core::systems::{airplane_generators, interval_generators, interval_map};
use airframe_core::{Diagram, GeneratorTable, GroupWord};
use common::{eval, random_word, rng, word, AIRPLANE_LETTERS};

fn x0() -> PlMap {
    PlMap::new(PlKind::Interval, points(&[((0, 0), (0, 0)), ((1, 2), (1, 1)), ((1, 1), (3, 2)), ((1, 0), (1, 0))])).unwrap()
}

fn x1() -> PlMap {
    PlMap::new(
        PlKind::Interval,
        points(&[((0, 0), (0, 0)), ((1, 1), (1, 1)), ((5, 3), (3, 2)), ((3, 2), (7, 3)), ((1, 0), (1, 0))]),
    )
    .unwrap()
}

fn y0() -> PlMap {
    PlMap::new(PlKind::Circle, points(&[((0, 0), (0, 0)), ((1, 1), (1, 2)), ((3, 2), (1, 1))])).unwrap()
}

fn y1() -> PlMap {
    PlMap::new(PlKind::Circle, points(&[((0, 0), (0, 0)), ((1, 2), (1, 3)), ((3, 3), (1, 2)), ((1, 1), (1, 1))])).unwrap()
}

fn y2() -> PlMap {
    PlMap::new(PlKind::Circle, points(&[((0, 0), (1, 1)), ((1, 1), (0, 0))])).unwrap()
}

fn commutator_generators(t: &GeneratorTable) -> Vec<Diagram> {
    let mut out: Vec<Diagram> = ["a", "b", "g", "d"].iter().map(|n| t.get(n).unwrap().clone()).collect();
    out.push(eval(t, "d").commutator(&eval(t, "e")).unwrap());
    out.push(eval(t, "e^-1").commutator(&eval(t, "e^-1 a")).unwrap());
    out
}

#[test]
fn derivatives_of_generators() {
    let t = airplane_generators();
    for n in ["a", "b", "g", "d"] {
        assert_eq!(log2_global_derivative(t.get(n).unwrap()).unwrap(), 0, "{n}");
    }
    let eps = log2_global_derivative(t.get("e").unwrap()).unwrap();
    assert_eq!(eps.abs(), 1);
    for k in -6..=6i64 {
        assert_eq!(log2_global_derivative(&eval(&t, "e").pow(k).unwrap()).unwrap(), k * eps, "k = {k}");
    }
    assert_eq!(log2_global_derivative(&eval(&t, "e^-2")).unwrap().abs(), 2);
}

#[test]
fn derivative_table_of_epsilon() {
    let t = airplane_generators();
    let table = derivative_table(t.get("e").unwrap()).unwrap();
    let sys = t.system();
    // ε stretches the right end of the horizon and fixes everything else
    assert_eq!(table.get(&ExtremeId(sys.addr("bR", &[]))), Some(&1));
    assert_eq!(table.values().filter(|&&d| d != 0).count(), 1);
}

#[test]
fn derivative_is_a_homomorphism() {
    let t = airplane_generators();
    let mut r = rng(3);
    for _ in 0..60 {
        let f = t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 12)).unwrap();
        let g = t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 12)).unwrap();
        let fg = f.compose(&g).unwrap();
        assert_eq!(log2_global_derivative(&fg).unwrap(), log2_global_derivative(&f).unwrap() + log2_global_derivative(&g).unwrap());
    }
}

#[test]
fn derivative_counts_letters_of_epsilon() {
    // D only sees the exponent sum of ε, since the other generators have D = 1
    let t = airplane_generators();
    let eps = log2_global_derivative(t.get("e").unwrap()).unwrap();
    let mut r = rng(4);
    for _ in 0..40 {
        let w = random_word(&mut r, &AIRPLANE_LETTERS, 10);
        let count: i64 = w.0.iter().filter(|l| l.name == "e").map(|l| l.exp).sum();
        assert_eq!(log2_global_derivative(&t.evaluate(&w).unwrap()).unwrap(), count * eps, "{w}");
    }
}

#[test]
fn commutator_membership() {
    let t = airplane_generators();
    for g in commutator_generators(&t) {
        assert!(is_in_commutator(&g).unwrap());
    }
    assert!(!is_in_commutator(t.get("e").unwrap()).unwrap());
    let mut r = rng(5);
    for _ in 0..40 {
        let f = t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 10)).unwrap();
        assert_eq!(is_in_commutator(&f).unwrap(), abelianization_image(&f).unwrap() == 0);
    }
}

#[test]
fn semidirect_splitting() {
    let t = airplane_generators();
    let e = eval(&t, "e");
    let mut r = rng(6);
    for _ in 0..30 {
        let f = t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 10)).unwrap();
        let (c, k) = semidirect_split(&f, &t).unwrap();
        assert!(c.compose(&e.pow(k).unwrap()).unwrap().same_element(&f));
        assert_eq!(log2_global_derivative(&c).unwrap(), 0);
    }
}

#[test]
fn rigid_stabilizers() {
    let t = airplane_generators();
    for n in ["b", "g", "d"] {
        assert!(is_in_rist_central(t.get(n).unwrap()).unwrap(), "{n}");
    }
    for n in ["a", "e"] {
        assert!(!is_in_rist_central(t.get(n).unwrap()).unwrap(), "{n}");
        assert!(is_in_rist_horizon(t.get(n).unwrap()).unwrap(), "{n}");
    }
    // δ turns the horizon around, so it does not act on it as an element of F
    for n in ["b", "g", "d"] {
        assert!(!is_in_rist_horizon(t.get(n).unwrap()).unwrap(), "{n}");
    }
}

#[test]
fn induced_maps_match_thompson_generators() {
    let t = airplane_generators();
    assert_eq!(induced_boundary_map(&eval(&t, "b")).unwrap().breakpoints(), y0().breakpoints());
    assert_eq!(induced_boundary_map(&eval(&t, "g")).unwrap().breakpoints(), y1().breakpoints());
    assert_eq!(induced_boundary_map(&eval(&t, "d")).unwrap().breakpoints(), y2().breakpoints());
    assert_eq!(induced_horizon_map(&eval(&t, "a")).unwrap().breakpoints(), x0().breakpoints());
    assert_eq!(induced_horizon_map(&eval(&t, "e")).unwrap().breakpoints(), x1().breakpoints());
    assert!(induced_boundary_map(&eval(&t, "a")).is_err());
    assert!(induced_horizon_map(&eval(&t, "b")).is_err());
}

#[test]
fn interval_generators_match_reference_maps() {
    let t = interval_generators();
    assert_eq!(interval_map(t.get("x0").unwrap()).unwrap(), x0());
    assert_eq!(interval_map(t.get("x1").unwrap()).unwrap(), x1());
}

#[test]
fn induced_maps_are_functorial() {
    let t = airplane_generators();
    let mut r = rng(8);
    for _ in 0..20 {
        let (u, v) = (random_word(&mut r, &["b", "g", "d"], 8), random_word(&mut r, &["b", "g", "d"], 8));
        let (f, g) = (t.evaluate(&u).unwrap(), t.evaluate(&v).unwrap());
        let lhs = induced_boundary_map(&f.compose(&g).unwrap()).unwrap();
        assert_eq!(lhs, induced_boundary_map(&f).unwrap().compose(&induced_boundary_map(&g).unwrap()));
        let (u, v) = (random_word(&mut r, &["a", "e"], 8), random_word(&mut r, &["a", "e"], 8));
        let (f, g) = (t.evaluate(&u).unwrap(), t.evaluate(&v).unwrap());
        let lhs = induced_horizon_map(&f.compose(&g).unwrap()).unwrap();
        assert_eq!(lhs, induced_horizon_map(&f).unwrap().compose(&induced_horizon_map(&g).unwrap()));
        // the interval system computes the same map independently
        let renamed = GroupWord(u.0.iter().map(|l| airframe_core::Letter { name: if l.name == "a" { "x0".into() } else { "x1".into() }, exp: l.exp }).collect());
        assert_eq!(induced_horizon_map(&f).unwrap(), interval_map(&interval_generators().evaluate(&renamed).unwrap()).unwrap());
    }
}

fn reversed(w: &GroupWord) -> GroupWord {
    GroupWord(w.0.iter().rev().cloned().collect())
}

/// The two defining relators of F, with words read left to right.
fn f_relators_hold(t: &GeneratorTable, x0: &str, x1: &str) -> bool {
    let sub = |s: &str| word(&s.replace("X0", x0).replace("X1", x1));
    let el = |s: &str| t.evaluate(&reversed(&sub(s))).unwrap();
    let x = el("X0 X1^-1");
    [el("X0^-1 X1 X0"), el("X0^-2 X1 X0^2")].iter().all(|y| x.commutator(y).unwrap().is_identity())
}

#[test]
fn f_relations() {
    assert!(f_relators_hold(&interval_generators(), "x0", "x1"));
    assert!(f_relators_hold(&airplane_generators(), "a", "e"));
}

#[test]
fn f_relators_depend_on_reading_direction() {
    // composing right to left instead gives nontrivial elements
    let t = interval_generators();
    let x = eval(&t, "x0 x1^-1");
    assert!(!x.commutator(&eval(&t, "x0^-1 x1 x0")).unwrap().is_identity());
}

#[test]
fn e_membership() {
    let t = airplane_generators();
    assert!(!is_in_e(t.get("e").unwrap()).unwrap());
    let mut r = rng(9);
    for _ in 0..30 {
        let f = t.evaluate(&random_word(&mut r, &["b", "g", "d"], 10)).unwrap();
        assert!(is_in_e(&f).unwrap());
        assert!(is_in_commutator(&f).unwrap());
    }
    for _ in 0..30 {
        let f = t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 10)).unwrap();
        if is_in_e(&f).unwrap() {
            assert!(is_in_commutator(&f).unwrap());
        }
    }
}
