mod common;

use airframe_core::airplane::ComponentId;
use airframe_core::components::parse_component;
use airframe_core::systems::{airplane_generators, basilica_generators};
use airframe_core::tree::*;
use airframe_core::{Diagram, Dyadic};
use common::{random_word, rng};

fn d(s: &str) -> Dyadic {
    s.parse().unwrap()
}

#[test]
fn membership() {
    assert_eq!(frak_c_membership(&ComponentId::Central), Some(vec![]));
    assert_eq!(frak_c_membership(&parse_component("((1/2,1/2))").unwrap()), Some(vec![(d("1/2"), 1)]));
    assert_eq!(frak_c_membership(&parse_component("((0,7/8),(1/4,3/4))").unwrap()), Some(vec![(d("0"), 3), (d("1/4"), 2)]));
    assert_eq!(frak_c_membership(&parse_component("((0,1/4))").unwrap()), None);
}

#[test]
fn angle_sequences_round_trip() {
    for s in angle_sequences(3, 8) {
        let v = frak_c_from_angles(&s);
        assert_eq!(frak_c_angles(&v), s);
        let b = basilica_from_angles(&s).unwrap();
        assert_eq!(basilica_angles(&b), s);
        assert_eq!(frak_c_membership(&frak_c_component(&v).unwrap()), Some(v));
    }
    assert!(basilica_from_angles(&[d("1/2"), d("0")]).is_err());
    assert!(basilica_from_angles(&[d("1")]).is_err());
}

#[test]
fn airplane_action() {
    let t = airplane_generators();
    let id = Diagram::identity(t.system().clone());
    assert_eq!(airplane_tree_action(&id, &vec![(d("1/4"), 2)]).unwrap(), vec![(d("1/4"), 2)]);
    assert_eq!(airplane_tree_action(t.get("b").unwrap(), &vec![]).unwrap(), vec![]);
    let moved = airplane_tree_action(t.get("a").unwrap(), &vec![]).unwrap();
    assert_eq!(moved.len(), 1);
    assert!(moved[0].0 == d("0") || moved[0].0 == d("1/2"));
}

#[test]
fn basilica_generators_on_the_root() {
    let t = basilica_generators();
    let root = BasilicaComponent::Central;
    let image = |n: &str| basilica_angles(&basilica_tree_action(t.get(n).unwrap(), &root).unwrap());
    assert_eq!(image("a"), vec![d("0")]);
    assert_eq!(image("b"), vec![]);
    assert_eq!(image("g"), vec![]);
    assert_eq!(image("d"), vec![]);
}

#[test]
fn tree_is_invariant_under_the_four_generators() {
    let t = airplane_generators();
    let mut r = rng(31);
    let vertices = angle_sequences(2, 4);
    for _ in 0..20 {
        let f = t.evaluate(&random_word(&mut r, &["a", "b", "g", "d"], 8)).unwrap();
        for s in &vertices {
            airplane_tree_action(&f, &frak_c_from_angles(s)).unwrap();
        }
    }
}

/// Two vertices are adjacent when one extends the other by one angle.
fn adjacent(x: &[Dyadic], y: &[Dyadic]) -> bool {
    let (short, long) = if x.len() < y.len() { (x, y) } else { (y, x) };
    long.len() == short.len() + 1 && long.starts_with(short)
}

#[test]
fn actions_preserve_adjacency() {
    let (ta, tb) = (airplane_generators(), basilica_generators());
    let mut r = rng(32);
    let vertices = angle_sequences(2, 4);
    for _ in 0..10 {
        let wa = random_word(&mut r, &["a", "b", "g", "d"], 6);
        let (fa, fb) = (ta.evaluate(&wa).unwrap(), tb.evaluate(&wa).unwrap());
        let ia: Vec<_> = vertices.iter().map(|s| frak_c_angles(&airplane_tree_action(&fa, &frak_c_from_angles(s)).unwrap())).collect();
        let ib: Vec<_> =
            vertices.iter().map(|s| basilica_angles(&basilica_tree_action(&fb, &basilica_from_angles(s).unwrap()).unwrap())).collect();
        for i in 0..vertices.len() {
            for j in 0..vertices.len() {
                if adjacent(&vertices[i], &vertices[j]) {
                    assert!(adjacent(&ia[i], &ia[j]));
                    assert!(adjacent(&ib[i], &ib[j]));
                }
            }
        }
    }
}

#[test]
fn intertwining() {
    let (ta, tb) = (airplane_generators(), basilica_generators());
    for depth in [1, 2] {
        let report = intertwine_check(&ta, &tb, &CANONICAL_PAIRING, depth, 8).unwrap();
        assert!(report.passed(), "{:?}", report.mismatches.first());
        assert_eq!(report.checks, report.vertices * 8);
    }
    assert!(!intertwine_check(&ta, &tb, &SHUFFLED_PAIRING, 1, 8).unwrap().passed());
}

#[test]
fn short_words_act_nontrivially() {
    let ta = airplane_generators();
    let mut r = rng(33);
    let vertices = angle_sequences(2, 8);
    for _ in 0..20 {
        let w = random_word(&mut r, &["a", "b", "g", "d"], 6);
        let f = ta.evaluate(&w).unwrap();
        if f.is_identity() {
            continue;
        }
        let moves = vertices.iter().any(|s| frak_c_angles(&airplane_tree_action(&f, &frak_c_from_angles(s)).unwrap()) != *s);
        assert!(moves, "{w} acts trivially on the truncated tree");
    }
}
