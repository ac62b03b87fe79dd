mod common;

use std::collections::{BTreeMap, BTreeSet};

use airframe_core::circularize::*;
use airframe_core::systems::{airplane, airplane_generators, circular_airplane};
use airframe_core::{Diagram, EdgeAddress, Expansion};
use common::{random_word, rng, AIRPLANE_LETTERS};

/// Every sequence of at most `n` simple expansions from the base.
fn sequences(n: usize) -> Vec<Vec<EdgeAddress>> {
    let sys = airplane();
    let mut out = vec![vec![]];
    let mut layer: Vec<(Vec<EdgeAddress>, Expansion)> = vec![(vec![], Expansion::base(&sys))];
    for _ in 0..n {
        let mut next = Vec::new();
        for (seq, e) in &layer {
            for leaf in e.leaves() {
                let mut s = seq.clone();
                s.push(leaf.clone());
                next.push((s.clone(), e.expand_edge(&sys, leaf).unwrap()));
                out.push(s);
            }
        }
        layer = next;
    }
    out
}

#[test]
fn base_and_single_expansions() {
    let sys = airplane();
    let c = Circularization::base(sys.clone()).unwrap();
    assert_eq!(c.image().len(), 6);
    let reds = c.correspondence().values().filter(|x| matches!(x, Correspondent::Red(_))).count();
    assert_eq!((reds, c.correspondence().len()), (2, 4));
    let mut red = c.clone();
    red.expand(&sys.addr("rT", &[])).unwrap();
    assert_eq!(red.image().len(), 6 + 3);
    let mut blue = c.clone();
    blue.expand(&sys.addr("bL", &[])).unwrap();
    assert_eq!(blue.image().len(), 6 + 2 * 2);
    assert!(blue.expand(&sys.addr("bL", &[])).is_err());
}

#[test]
fn correspondence_partitions_the_image() {
    let sys = airplane();
    let circ = circular_airplane();
    for n in 0..=2 {
        let e = Expansion::full(&sys, n);
        let c = phi_expansion(&sys, &e).unwrap();
        assert_eq!(c.source(), e);
        let edges: Vec<EdgeAddress> = c.correspondence().values().flat_map(|x| x.edges()).collect();
        let set: BTreeSet<_> = edges.iter().cloned().collect();
        assert_eq!(set.len(), edges.len());
        assert_eq!(&set, c.image().leaves());
        for (a, x) in c.correspondence() {
            for y in x.edges() {
                assert_eq!(sys.color_of(a), circ.color_of(&y), "colors agree");
            }
            assert_eq!(*x, correspondent(&circ, a));
        }
    }
}

#[test]
fn expansion_order_does_not_matter() {
    // all orders of up to three simple expansions, and the injectivity of
    // the construction on the expansions they reach
    let sys = airplane();
    let mut images: BTreeMap<Expansion, Expansion> = BTreeMap::new();
    for seq in sequences(3) {
        let c = circularize_in_order(sys.clone(), &seq).unwrap();
        let src = c.source();
        match images.get(&src) {
            Some(img) => assert_eq!(img, c.image()),
            None => {
                images.insert(src.clone(), c.image().clone());
            }
        }
        let canonical = phi_expansion(&sys, &src).unwrap();
        assert_eq!(canonical.image(), c.image());
    }
    let distinct: BTreeSet<_> = images.values().collect();
    assert_eq!(distinct.len(), images.len());
}

#[test]
fn level_order_in_full_expansions() {
    let sys = airplane();
    let e = Expansion::full(&sys, 2);
    let order: Vec<EdgeAddress> = e.internal_nodes().into_iter().collect();
    let expected = circularize_in_order(sys.clone(), &order).unwrap();
    let mut rev = order.clone();
    rev.sort_by_key(|a| (a.depth(), std::cmp::Reverse(a.clone())));
    assert_eq!(circularize_in_order(sys.clone(), &rev).unwrap().image(), expected.image());
}

#[test]
fn phi_is_an_injective_homomorphism() {
    let t = airplane_generators();
    assert!(phi_diagram(&Diagram::identity(t.system().clone())).unwrap().is_identity());
    let mut r = rng(21);
    for _ in 0..40 {
        let f = t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 8)).unwrap();
        let g = t.evaluate(&random_word(&mut r, &AIRPLANE_LETTERS, 8)).unwrap();
        let lhs = phi_diagram(&f.compose(&g).unwrap()).unwrap();
        let rhs = phi_diagram(&f).unwrap().compose(&phi_diagram(&g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let pf = phi_diagram(&f).unwrap();
        assert_eq!(pf.is_identity(), f.is_identity());
        assert!(pf.len() >= f.len());
    }
}
