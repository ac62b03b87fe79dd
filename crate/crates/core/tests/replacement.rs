mod common;

use std::collections::BTreeSet;

use airframe_core::systems::{airplane, interval, BLUE, RED};
use airframe_core::{EdgeAddress, Expansion};
use proptest::prelude::*;

/// Leaf count after `n` full rounds, by the per-color recurrence of the
/// rules: a red edge becomes two red and one blue, a blue edge two blue
/// and two red.
fn leaf_count_by_recurrence(n: usize) -> usize {
    let (mut red, mut blue) = (2usize, 2usize);
    for _ in 0..n {
        (red, blue) = (2 * red + 2 * blue, red + 2 * blue);
    }
    red + blue
}

#[test]
fn full_expansion_leaf_counts() {
    let sys = airplane();
    for n in 0..=3 {
        assert_eq!(Expansion::full(&sys, n).len(), leaf_count_by_recurrence(n), "round {n}");
    }
    assert_eq!(Expansion::full(&sys, 1).len(), 14);
    assert_eq!(Expansion::full(&sys, 2).len(), 48);
}

#[test]
fn simple_expansions_add_rule_edges() {
    let sys = airplane();
    let base = Expansion::base(&sys);
    assert_eq!(base.expand_edge(&sys, &sys.addr("bL", &[])).unwrap().len(), 7);
    assert_eq!(base.expand_edge(&sys, &sys.addr("rT", &[])).unwrap().len(), 6);
    assert!(base.expand_edge(&sys, &sys.addr("rT", &[0])).is_err());
}

#[test]
fn base_graph_shape() {
    let sys = airplane();
    let g = Expansion::base(&sys).realize(&sys);
    assert_eq!(g.edges.len(), 4);
    assert_eq!(g.vertices.len(), 4);
    let ends: Vec<usize> = (0..g.vertices.len()).filter(|&v| g.degree(v) == 1).collect();
    assert_eq!(ends.len(), 2);
}

#[test]
fn full_expansion_red_pairs_are_two_cycles() {
    let sys = airplane();
    let g = Expansion::full(&sys, 1).realize(&sys);
    let edge = |name: &str, path: &[u8]| g.edges.iter().find(|e| e.address == sys.addr(name, path)).unwrap();
    for side in ["bL", "bR"] {
        let (top, bottom) = (edge(side, &[1]), edge(side, &[2]));
        assert_eq!((top.color, bottom.color), (RED, RED));
        assert_eq!((top.src, top.tgt), (bottom.tgt, bottom.src), "{side}");
        assert_ne!(top.src, top.tgt);
    }
    // the halves of the central circle chain into one 4-cycle
    let central = [edge("rT", &[0]), edge("rT", &[1]), edge("rB", &[0]), edge("rB", &[1])];
    for w in central.windows(2) {
        assert_eq!(w[0].tgt, w[1].src);
    }
    assert_eq!(central[3].tgt, central[0].src);
}

#[test]
fn vertex_count_grows_by_rule_vertices() {
    let sys = airplane();
    // each simple expansion adds the two inner vertices of a rule graph
    for n in 0..=2 {
        let e = Expansion::full(&sys, n);
        let g = e.realize(&sys);
        assert_eq!(g.vertices.len(), 4 + 2 * e.internal_nodes().len());
        assert_eq!(g.edges.len(), e.len());
    }
}

#[test]
fn degree_one_vertices_touch_one_blue_edge() {
    let sys = airplane();
    for n in 0..=2 {
        let g = Expansion::full(&sys, n).realize(&sys);
        for v in 0..g.vertices.len() {
            if g.degree(v) == 1 {
                let e = g.edges.iter().find(|e| e.src == v || e.tgt == v).unwrap();
                assert_eq!(e.color, BLUE);
            }
        }
    }
}

#[test]
fn single_edge_system_is_unchanged() {
    let sys = interval();
    let g = Expansion::base(&sys).realize(&sys);
    assert_eq!((g.vertices.len(), g.edges.len()), (2, 1));
}

#[test]
fn refinement_examples() {
    let sys = airplane();
    let base = Expansion::base(&sys);
    let full = Expansion::full(&sys, 1);
    assert_eq!(base.common_refinement(&base), base);
    assert_eq!(base.common_refinement(&full), full);
    let left = base.expand_edge(&sys, &sys.addr("bL", &[])).unwrap();
    let top = base.expand_edge(&sys, &sys.addr("rT", &[])).unwrap();
    let both = left.expand_edge(&sys, &sys.addr("rT", &[])).unwrap();
    assert_eq!(left.common_refinement(&top), both);
    assert_eq!(both.len(), 4 - 2 + 4 + 3);
}

#[test]
fn address_text_form() {
    let sys = airplane();
    let a = sys.parse_address("bR.3-0").unwrap();
    assert_eq!(a, sys.addr("bR", &[3, 0]));
    assert_eq!(sys.format_address(&a), "bR.3-0");
    assert_eq!(sys.format_address(&sys.addr("rT", &[])), "rT");
    assert!(sys.parse_address("bR.4").is_err());
    assert!(sys.parse_address("zz").is_err());
}

fn arb_expansion() -> impl Strategy<Value = Expansion> {
    prop::collection::vec(any::<u32>(), 0..12).prop_map(|picks| {
        let sys = airplane();
        let mut e = Expansion::base(&sys);
        for p in picks {
            let leaves: Vec<EdgeAddress> = e.leaves().iter().cloned().collect();
            let a = &leaves[p as usize % leaves.len()];
            e = e.expand_edge(&sys, a).unwrap();
        }
        e
    })
}

proptest! {
    #[test]
    fn refinement_is_a_join(x in arb_expansion(), y in arb_expansion(), z in arb_expansion()) {
        prop_assert_eq!(x.common_refinement(&y), y.common_refinement(&x));
        prop_assert_eq!(x.common_refinement(&x), x.clone());
        prop_assert_eq!(x.common_refinement(&y).common_refinement(&z), x.common_refinement(&y.common_refinement(&z)));
        let j = x.common_refinement(&y);
        let nodes: BTreeSet<_> = j.internal_nodes();
        prop_assert!(x.internal_nodes().is_subset(&nodes));
        prop_assert!(y.internal_nodes().is_subset(&nodes));
        prop_assert_eq!(nodes, x.internal_nodes().union(&y.internal_nodes()).cloned().collect::<BTreeSet<_>>());
    }

    #[test]
    fn distinct_simple_expansions_commute(e in arb_expansion(), i in any::<u32>(), j in any::<u32>()) {
        let sys = airplane();
        let leaves: Vec<EdgeAddress> = e.leaves().iter().cloned().collect();
        let a = &leaves[i as usize % leaves.len()];
        let b = &leaves[j as usize % leaves.len()];
        prop_assume!(a != b);
        let ab = e.expand_edge(&sys, a).unwrap().expand_edge(&sys, b).unwrap();
        let ba = e.expand_edge(&sys, b).unwrap().expand_edge(&sys, a).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn address_round_trip(e in arb_expansion()) {
        let sys = airplane();
        for a in e.leaves() {
            let text = sys.format_address(a);
            prop_assert_eq!(&sys.parse_address(&text).unwrap(), a);
        }
    }

    #[test]
    fn leaf_sets_validate(e in arb_expansion()) {
        let sys = airplane();
        prop_assert_eq!(Expansion::from_leaves(&sys, e.leaves().iter().cloned()).unwrap(), e);
    }
}
