//! Components as points of an orbit: alignment, breadth-first orbit search
//! and transitivity experiments.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::airplane::{component_from_path, component_path, map_component, ComponentId, ComponentPath};
use crate::diagram::Diagram;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::word::{GeneratorTable, GroupWord};

/// Progress of `z` along the route from the centre to `x`: `Some(key)` if
/// the route passes through `z`, with larger keys further out.
fn progress_towards(z: &ComponentPath, x: &ComponentPath) -> Option<(usize, Dyadic)> {
    let m = z.0.len();
    if m == 0 {
        return Some((0, Dyadic::ZERO));
    }
    if m > x.0.len() || z.0[..m - 1] != x.0[..m - 1] {
        return None;
    }
    let (zt, zl) = z.0[m - 1];
    let (xt, xl) = x.0[m - 1];
    (zt == xt && zl <= xl).then_some((m, zl))
}

/// The component where the routes from the centre to `a` and `b` part.
fn branch_point(a: &ComponentPath, b: &ComponentPath) -> ComponentPath {
    let mut common = Vec::new();
    for (p, q) in a.0.iter().zip(&b.0) {
        if p == q {
            common.push(*p);
            continue;
        }
        if p.0 == q.0 {
            common.push((p.0, p.1.min(q.1)));
        }
        return ComponentPath(common);
    }
    ComponentPath(common)
}

/// Whether the arc between `a` and `b` passes through `z` (ends included).
pub fn between(z: &ComponentPath, a: &ComponentPath, b: &ComponentPath) -> bool {
    let (on_a, on_b) = (progress_towards(z, a).is_some(), progress_towards(z, b).is_some());
    if on_a && on_b {
        return *z == branch_point(a, b);
    }
    on_a || on_b
}

/// If the components all lie on one arc between two of them, returns them
/// ordered along that arc.
pub fn aligned(cs: &[ComponentId]) -> Result<Option<Vec<ComponentId>>> {
    let set: BTreeSet<&ComponentId> = cs.iter().collect();
    if set.len() != cs.len() {
        return Err(Error::DuplicateComponents);
    }
    let paths: Vec<ComponentPath> = cs.iter().map(component_path).collect();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if !paths.iter().all(|z| between(z, &paths[i], &paths[j])) {
                continue;
            }
            let br = branch_point(&paths[i], &paths[j]);
            let mut side_a = Vec::new();
            let mut side_b = Vec::new();
            for (k, z) in paths.iter().enumerate() {
                if let Some(key) = progress_towards(z, &paths[i]).filter(|_| progress_towards(&br, z).is_some()) {
                    side_a.push((key, k));
                } else {
                    side_b.push((progress_towards(z, &paths[j]).expect("on the arc"), k));
                }
            }
            side_a.sort_by_key(|x| core::cmp::Reverse(x.0));
            side_b.sort();
            let order = side_a.into_iter().chain(side_b).map(|(_, k)| cs[k].clone()).collect();
            return Ok(Some(order));
        }
    }
    Ok(None)
}

/// Bounds on the intermediate components a search may pass through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    pub max_depth: usize,
    /// Largest allowed exponent of a coordinate denominator.
    pub max_exponent: u32,
}

impl SearchSpace {
    pub fn contains(&self, c: &ComponentId) -> bool {
        let p = component_path(c);
        p.depth() <= self.max_depth && p.0.iter().all(|(t, l)| t.exponent() <= self.max_exponent && l.exponent() <= self.max_exponent)
    }
}

impl Default for SearchSpace {
    fn default() -> SearchSpace {
        SearchSpace { max_depth: 3, max_exponent: 5 }
    }
}

/// A letter of a search alphabet: the word it stands for and its diagram.
#[derive(Clone, Debug)]
pub struct Move {
    pub word: GroupWord,
    pub diagram: Diagram,
}

/// Generators followed by their inverses, in table order.
pub fn alphabet(gens: &GeneratorTable) -> Vec<Move> {
    let mut out: Vec<Move> = gens.iter().map(|(n, d)| Move { word: GroupWord::letter(n, 1), diagram: d.clone() }).collect();
    out.extend(gens.iter().map(|(n, d)| Move { word: GroupWord::letter(n, -1), diagram: d.inverse() }));
    out
}

/// Moves applied to a tuple of components in turn (first move first).
fn word_of(moves: &[Move], applied: &[usize]) -> GroupWord {
    let mut w = GroupWord::new();
    for &i in applied.iter().rev() {
        w = w.concat(&moves[i].word);
    }
    w
}

/// Breadth-first search for a sequence of moves taking `src` to `tgt`
/// componentwise, staying inside `space`. Moves are tried in order, so
/// the witness is the shortlex-least one in order of application.
pub fn tuple_search(
    moves: &[Move],
    src: &[ComponentId],
    tgt: &[ComponentId],
    max_len: usize,
    space: SearchSpace,
) -> Option<GroupWord> {
    let start: Vec<ComponentId> = src.to_vec();
    if start == tgt {
        return Some(GroupWord::new());
    }
    let mut seen: BTreeMap<Vec<ComponentId>, (usize, usize)> = BTreeMap::new();
    let mut states: Vec<Vec<ComponentId>> = vec![start.clone()];
    seen.insert(start, (usize::MAX, usize::MAX));
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((si, len)) = queue.pop_front() {
        if len == max_len {
            continue;
        }
        for (mi, m) in moves.iter().enumerate() {
            let next: Vec<ComponentId> = states[si].iter().map(|c| map_component(&m.diagram, c)).collect();
            if seen.contains_key(&next) || !next.iter().all(|c| space.contains(c)) {
                continue;
            }
            seen.insert(next.clone(), (si, mi));
            let done = next == tgt;
            states.push(next);
            if done {
                let mut applied = Vec::new();
                let mut cur = states.len() - 1;
                while cur != 0 {
                    let (p, mv) = seen[&states[cur]];
                    applied.push(mv);
                    cur = p;
                }
                applied.reverse();
                return Some(word_of(moves, &applied));
            }
            queue.push_back((states.len() - 1, len + 1));
        }
    }
    None
}

/// Shortest word over the generators and their inverses sending `src` to
/// `tgt`, checked by evaluation before it is returned.
pub fn orbit_search(
    gens: &GeneratorTable,
    src: &ComponentId,
    tgt: &ComponentId,
    max_len: usize,
    space: SearchSpace,
) -> Result<Option<GroupWord>> {
    let moves = alphabet(gens);
    let Some(w) = tuple_search(&moves, core::slice::from_ref(src), core::slice::from_ref(tgt), max_len, space) else {
        return Ok(None);
    };
    verify(gens, &w, core::slice::from_ref(src), core::slice::from_ref(tgt))?;
    Ok(Some(w))
}

fn verify(gens: &GeneratorTable, w: &GroupWord, src: &[ComponentId], tgt: &[ComponentId]) -> Result<()> {
    let f = gens.evaluate(w)?;
    for (s, t) in src.iter().zip(tgt) {
        if map_component(&f, s) != *t {
            return Err(Error::NotInFamily(alloc::format!("search witness {w} does not map {s:?} to {t:?}")));
        }
    }
    Ok(())
}

/// Every component whose path has depth at most `max_depth` and whose
/// coordinates have denominators at most `2^exponent`.
pub fn components_up_to(max_depth: usize, exponent: u32) -> Vec<ComponentId> {
    let n = 1i64 << exponent;
    let positions: Vec<Dyadic> = (1..n).map(|i| Dyadic::new(i, exponent)).collect();
    let central_angles: Vec<Dyadic> = (0..n).map(|i| Dyadic::new(i, exponent)).collect();
    let other_angles: Vec<Dyadic> = positions.iter().copied().filter(|&t| t != Dyadic::HALF).collect();
    let mut layer = vec![ComponentPath::default()];
    let mut out = vec![ComponentId::Central];
    for d in 0..max_depth {
        let angles = if d == 0 { &central_angles } else { &other_angles };
        let mut next = Vec::new();
        for p in &layer {
            for &t in angles {
                for &l in &positions {
                    let mut q = p.clone();
                    q.0.push((t, l));
                    next.push(q);
                }
            }
        }
        out.extend(next.iter().map(|p| component_from_path(p).expect("well-formed")));
        layer = next;
    }
    out
}

/// Result of a transitivity experiment.
#[derive(Clone, Debug, Default)]
pub struct TransitivityReport {
    pub checked: usize,
    pub longest: usize,
    /// Tuples with the witness word found for each.
    pub witnesses: Vec<(Vec<ComponentId>, GroupWord)>,
    /// Tuples for which no word was found within the bounds.
    pub failures: Vec<Vec<ComponentId>>,
}

impl TransitivityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Words sending components back to a fixed root, read off one
/// breadth-first search outward from the root.
#[derive(Clone, Debug)]
pub struct OrbitTree {
    root: ComponentId,
    moves: Vec<Move>,
    parent: BTreeMap<ComponentId, (ComponentId, usize)>,
}

impl OrbitTree {
    /// Searches until every target is reached or the bounds are exhausted.
    pub fn grow(moves: Vec<Move>, root: ComponentId, targets: &[ComponentId], max_len: usize, space: SearchSpace) -> OrbitTree {
        let mut parent = BTreeMap::new();
        let mut wanted: BTreeSet<&ComponentId> = targets.iter().filter(|c| **c != root).collect();
        let mut frontier = vec![root.clone()];
        let mut seen = BTreeSet::from([root.clone()]);
        for _ in 0..max_len {
            if wanted.is_empty() || frontier.is_empty() {
                break;
            }
            let mut next = Vec::new();
            for c in &frontier {
                for (mi, m) in moves.iter().enumerate() {
                    let d = map_component(&m.diagram, c);
                    if !space.contains(&d) || !seen.insert(d.clone()) {
                        continue;
                    }
                    wanted.remove(&d);
                    parent.insert(d.clone(), (c.clone(), mi));
                    next.push(d);
                }
            }
            frontier = next;
        }
        OrbitTree { root, moves, parent }
    }

    pub fn root(&self) -> &ComponentId {
        &self.root
    }

    pub fn reached(&self) -> usize {
        self.parent.len() + 1
    }

    /// A word sending `c` to the root, if the search reached `c`.
    pub fn word_to_root(&self, c: &ComponentId) -> Option<GroupWord> {
        let mut w = GroupWord::new();
        let mut cur = c.clone();
        while cur != self.root {
            let (p, mi) = self.parent.get(&cur)?;
            w = self.moves[*mi].word.inverse().concat(&w);
            cur = p.clone();
        }
        Some(w)
    }
}

/// Sends each target to the central component with a word of length at most
/// `max_len`, using one breadth-first search from the centre.
pub fn transitive_to_center(
    gens: &GeneratorTable,
    targets: &[ComponentId],
    max_len: usize,
    space: SearchSpace,
) -> Result<TransitivityReport> {
    let tree = OrbitTree::grow(alphabet(gens), ComponentId::Central, targets, max_len, space);
    let mut report = TransitivityReport::default();
    for t in targets {
        report.checked += 1;
        match tree.word_to_root(t) {
            Some(w) => {
                verify(gens, &w, core::slice::from_ref(t), &[ComponentId::Central])?;
                report.longest = report.longest.max(w.length() as usize);
                report.witnesses.push((vec![t.clone()], w));
            }
            None => report.failures.push(vec![t.clone()]),
        }
    }
    Ok(report)
}

/// How far a component is from the centre, counting each step of its path
/// and the size of its coordinates.
pub fn complexity(c: &ComponentId) -> u32 {
    component_path(c).0.iter().map(|(t, l)| 1 + t.exponent() + l.exponent()).sum()
}

/// Best-first search for a word sending the tuple `src` to `tgt`: states
/// with the smallest total complexity are expanded first, ties broken by
/// discovery order. Gives up after visiting `max_states` states.
pub fn guided_search(gens: &GeneratorTable, src: &[ComponentId], tgt: &[ComponentId], max_states: usize) -> Result<Option<GroupWord>> {
    let moves = alphabet(gens);
    let score = |cs: &[ComponentId]| cs.iter().map(complexity).sum::<u32>();
    let mut states: Vec<(Vec<ComponentId>, usize, usize)> = vec![(src.to_vec(), usize::MAX, usize::MAX)];
    let mut seen: BTreeSet<Vec<ComponentId>> = BTreeSet::from([src.to_vec()]);
    let mut queue: alloc::collections::BinaryHeap<core::cmp::Reverse<(u32, usize)>> = alloc::collections::BinaryHeap::new();
    queue.push(core::cmp::Reverse((score(src), 0)));
    let mut found = (src == tgt).then_some(0);
    while found.is_none() && states.len() < max_states {
        let Some(core::cmp::Reverse((_, si))) = queue.pop() else { break };
        for (mi, m) in moves.iter().enumerate() {
            let next: Vec<ComponentId> = states[si].0.iter().map(|c| map_component(&m.diagram, c)).collect();
            if !seen.insert(next.clone()) {
                continue;
            }
            let done = next == tgt;
            queue.push(core::cmp::Reverse((score(&next), states.len())));
            states.push((next, si, mi));
            if done {
                found = Some(states.len() - 1);
                break;
            }
        }
    }
    let Some(mut cur) = found else { return Ok(None) };
    let mut w = GroupWord::new();
    while cur != 0 {
        let (_, p, mi) = states[cur];
        w = w.concat(&moves[mi].word);
        cur = p;
    }
    verify(gens, &w, src, tgt)?;
    Ok(Some(w))
}

/// Sends each ordered pair to `reference` with a guided search.
pub fn two_transitive_to(
    gens: &GeneratorTable,
    pairs: &[(ComponentId, ComponentId)],
    reference: &(ComponentId, ComponentId),
    max_states: usize,
) -> Result<TransitivityReport> {
    let mut report = TransitivityReport::default();
    let tgt = [reference.0.clone(), reference.1.clone()];
    for (a, b) in pairs {
        report.checked += 1;
        let tuple = vec![a.clone(), b.clone()];
        match guided_search(gens, &tuple, &tgt, max_states)? {
            Some(w) => {
                report.longest = report.longest.max(w.length() as usize);
                report.witnesses.push((tuple, w));
            }
            None => report.failures.push(tuple),
        }
    }
    Ok(report)
}

/// Outcome of asking whether one triple can be mapped onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleVerdict {
    /// Exactly one of the triples is aligned, and rearrangements preserve
    /// alignment.
    ObstructedByAlignment,
    /// Both or neither are aligned; alignment decides nothing.
    Undecided,
}

pub fn triple_obstruction(a: &[ComponentId], b: &[ComponentId]) -> Result<TripleVerdict> {
    let (x, y) = (aligned(a)?.is_some(), aligned(b)?.is_some());
    Ok(if x != y { TripleVerdict::ObstructedByAlignment } else { TripleVerdict::Undecided })
}

pub fn parse_component(s: &str) -> Result<ComponentId> {
    let p: ComponentPath = s.parse()?;
    component_from_path(&p)
}

pub fn show_component(c: &ComponentId) -> String {
    alloc::format!("{}", component_path(c))
}
