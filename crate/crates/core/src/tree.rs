//! The component trees of the Airplane and the Basilica, and the check
//! that `a, b, g, d` act on the Basilica tree as `α, β, γ, δ` act on the
//! matching Airplane components.
//!
//! Both trees are indexed the same way, by sequences of attachment angles:
//! the first angle lies in `[0,1)` on the central component, the rest in
//! `(0,1)` on the component reached so far, with `0` at the attachment
//! point.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::airplane::{component_from_path, component_path, map_component, ComponentId, ComponentPath};
use crate::diagram::Diagram;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::replacement::EdgeAddress;
use crate::word::{GeneratorTable, GroupWord};

/// A path of attachment angles from the root.
pub type AngleSequence = Vec<Dyadic>;

/// A vertex of the Airplane tree: steps `(θ, k)` standing for the
/// component at position `1 - 2^-k` on the ray at angle `θ`.
pub type FrakCVertex = Vec<(Dyadic, u32)>;

/// The vertex of a component whose path uses only positions `1 - 2^-k`.
pub fn frak_c_membership(c: &ComponentId) -> Option<FrakCVertex> {
    component_path(c).0.iter().map(|&(t, l)| outer_position_index(l).map(|k| (t, k))).collect()
}

/// `k` with `l = 1 - 2^-k`, if there is one.
fn outer_position_index(l: Dyadic) -> Option<u32> {
    let k = l.exponent();
    (k >= 1 && l == Dyadic::ONE - Dyadic::new(1, k)).then_some(k)
}

pub fn frak_c_component(v: &FrakCVertex) -> Result<ComponentId> {
    let steps = v
        .iter()
        .map(|&(t, k)| if k == 0 { Err(Error::MalformedPath("position index must be positive".into())) } else { Ok((t, Dyadic::ONE - Dyadic::new(1, k))) })
        .collect::<Result<Vec<_>>>()?;
    component_from_path(&ComponentPath(steps))
}

pub fn frak_c_angles(v: &FrakCVertex) -> AngleSequence {
    let mut out = Vec::new();
    for &(t, k) in v {
        out.push(t);
        out.extend(core::iter::repeat_n(Dyadic::HALF, k as usize - 1));
    }
    out
}

pub fn frak_c_from_angles(s: &[Dyadic]) -> FrakCVertex {
    let mut out: FrakCVertex = Vec::new();
    for (i, &a) in s.iter().enumerate() {
        match out.last_mut() {
            Some(last) if i > 0 && a == Dyadic::HALF => last.1 += 1,
            _ => out.push((a, 1)),
        }
    }
    out
}

const T: u16 = 0;
const B: u16 = 1;
const L: u16 = 2;
const R: u16 = 3;

/// A component of the Basilica: the central circle, or the loop created by
/// a loop edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasilicaComponent {
    Central,
    Loop(EdgeAddress),
}

/// Component and arc `[from, to]` of a Basilica edge; the edge runs from
/// `to` back to `from`.
pub fn basilica_geometry(a: &EdgeAddress) -> (BasilicaComponent, Dyadic, Dyadic) {
    let (mut comp, mut from, mut to) = match a.base {
        T => (BasilicaComponent::Central, Dyadic::ZERO, Dyadic::HALF),
        B => (BasilicaComponent::Central, Dyadic::HALF, Dyadic::ONE),
        _ => (BasilicaComponent::Loop(EdgeAddress::base(a.base)), Dyadic::ZERO, Dyadic::ONE),
    };
    let mut cur = EdgeAddress::base(a.base);
    for &i in &a.path {
        let mid = from.mid(to);
        cur = cur.child(i);
        match i {
            0 => from = mid,
            1 => to = mid,
            _ => (comp, from, to) = (BasilicaComponent::Loop(cur.clone()), Dyadic::ZERO, Dyadic::ONE),
        }
    }
    (comp, from, to)
}

/// Where a loop is attached: its parent component and the angle there.
fn attachment(x: &EdgeAddress) -> (BasilicaComponent, Dyadic) {
    match x.parent() {
        None if x.base == L => (BasilicaComponent::Central, Dyadic::HALF),
        None => (BasilicaComponent::Central, Dyadic::ZERO),
        Some(p) => {
            let (c, from, to) = basilica_geometry(&p);
            (c, from.mid(to))
        }
    }
}

pub fn basilica_angles(c: &BasilicaComponent) -> AngleSequence {
    let mut out = Vec::new();
    let mut c = c.clone();
    while let BasilicaComponent::Loop(x) = c {
        let (parent, angle) = attachment(&x);
        out.push(angle);
        c = parent;
    }
    out.reverse();
    out
}

pub fn basilica_from_angles(s: &[Dyadic]) -> Result<BasilicaComponent> {
    let mut c = BasilicaComponent::Central;
    for (i, &a) in s.iter().enumerate() {
        let bad = || Error::MalformedPath(format!("angle {a} at step {i}"));
        if a < Dyadic::ZERO || a >= Dyadic::ONE || (i > 0 && a == Dyadic::ZERO) {
            return Err(bad());
        }
        let (mut e, mut from, mut to) = match &c {
            BasilicaComponent::Central if a == Dyadic::HALF => {
                c = BasilicaComponent::Loop(EdgeAddress::base(L));
                continue;
            }
            BasilicaComponent::Central if a == Dyadic::ZERO => {
                c = BasilicaComponent::Loop(EdgeAddress::base(R));
                continue;
            }
            BasilicaComponent::Central if a < Dyadic::HALF => (EdgeAddress::base(T), Dyadic::ZERO, Dyadic::HALF),
            BasilicaComponent::Central => (EdgeAddress::base(B), Dyadic::HALF, Dyadic::ONE),
            BasilicaComponent::Loop(x) => (x.clone(), Dyadic::ZERO, Dyadic::ONE),
        };
        loop {
            let mid = from.mid(to);
            if mid == a {
                c = BasilicaComponent::Loop(e.child(2));
                break;
            }
            if from.exponent().max(to.exponent()) > a.exponent() {
                return Err(bad());
            }
            if a > mid {
                (e, from) = (e.child(0), mid);
            } else {
                (e, to) = (e.child(1), mid);
            }
        }
    }
    Ok(c)
}

/// The component an edge lies on.
pub fn basilica_owner(a: &EdgeAddress) -> BasilicaComponent {
    basilica_geometry(a).0
}

/// Image of a component under a Basilica element.
pub fn map_basilica_component(f: &Diagram, c: &BasilicaComponent) -> Result<BasilicaComponent> {
    if f.system().name() != "basilica" {
        return Err(Error::NotInFamily(format!("expected a Basilica diagram, got one over {:?}", f.system().name())));
    }
    let mut e = match c {
        BasilicaComponent::Central => EdgeAddress::base(T),
        BasilicaComponent::Loop(x) => x.clone(),
    };
    loop {
        if let Some(img) = f.push(&e) {
            return Ok(basilica_owner(&img.addr));
        }
        e = e.child(0);
    }
}

/// Image of an Airplane tree vertex; leaving the tree is an error.
pub fn airplane_tree_action(f: &Diagram, v: &FrakCVertex) -> Result<FrakCVertex> {
    let c = frak_c_component(v)?;
    let img = map_component(f, &c);
    frak_c_membership(&img).ok_or_else(|| Error::NotInFamily(format!("image {} of {:?} left the tree", component_path(&img), v)))
}

pub fn basilica_tree_action(f: &Diagram, v: &BasilicaComponent) -> Result<BasilicaComponent> {
    map_basilica_component(f, v)
}

/// Every angle sequence of length at most `depth` with denominators at
/// most `bound`.
pub fn angle_sequences(depth: usize, bound: u32) -> Vec<AngleSequence> {
    let exp = bound.max(1).ilog2();
    let n = 1i64 << exp;
    let mut layer: Vec<AngleSequence> = alloc::vec![Vec::new()];
    let mut out = layer.clone();
    for d in 0..depth {
        let start = if d == 0 { 0 } else { 1 };
        let mut next = Vec::new();
        for s in &layer {
            for i in start..n {
                let mut t = s.clone();
                t.push(Dyadic::new(i, exp));
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub pair: (String, String),
    pub vertex: AngleSequence,
    pub airplane_image: AngleSequence,
    pub basilica_image: AngleSequence,
}

#[derive(Clone, Debug, Default)]
pub struct IntertwineReport {
    pub vertices: usize,
    pub checks: usize,
    pub mismatches: Vec<Mismatch>,
}

impl IntertwineReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the two actions on all vertices of the truncated trees, for
/// each `(airplane name, basilica name)` pair and its inverse.
pub fn intertwine_check(
    airplane: &GeneratorTable,
    basilica: &GeneratorTable,
    pairing: &[(&str, &str)],
    depth: usize,
    bound: u32,
) -> Result<IntertwineReport> {
    let vertices = angle_sequences(depth, bound);
    let mut report = IntertwineReport { vertices: vertices.len(), ..Default::default() };
    let mut cache: BTreeMap<AngleSequence, (FrakCVertex, BasilicaComponent)> = BTreeMap::new();
    for s in &vertices {
        cache.insert(s.clone(), (frak_c_from_angles(s), basilica_from_angles(s)?));
    }
    for &(an, bn) in pairing {
        for exp in [1i64, -1] {
            let f = airplane.evaluate(&GroupWord::letter(an, exp))?;
            let g = basilica.evaluate(&GroupWord::letter(bn, exp))?;
            for s in &vertices {
                let (v, c) = &cache[s];
                let ai = frak_c_angles(&airplane_tree_action(&f, v)?);
                let bi = basilica_angles(&basilica_tree_action(&g, c)?);
                report.checks += 1;
                if ai != bi {
                    let suffix = if exp < 0 { "^-1" } else { "" };
                    report.mismatches.push(Mismatch {
                        pair: (format!("{an}{suffix}"), format!("{bn}{suffix}")),
                        vertex: s.clone(),
                        airplane_image: ai,
                        basilica_image: bi,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// The pairing `α↔a, β↔b, γ↔g, δ↔d`.
pub const CANONICAL_PAIRING: [(&str, &str); 4] = [("a", "a"), ("b", "b"), ("g", "g"), ("d", "d")];

/// A deliberately wrong pairing, used as a negative control.
pub const SHUFFLED_PAIRING: [(&str, &str); 4] = [("a", "b"), ("b", "a"), ("g", "d"), ("d", "g")];
