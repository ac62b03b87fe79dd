//! Geometry of Airplane expansions: where each edge sits, which component
//! it bounds, and the rays and extremes of the limit space.
//!
//! Red edges bound components and carry angle coordinates in `[0,1)`,
//! measured counterclockwise. The central component has angle 0 at `R`;
//! any other component has angle 0 at the point facing the centre. Blue
//! edges are pieces of rays with positions in `[0,1]` measured from the
//! inner end of the ray.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::Diagram;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::replacement::{EdgeAddress, Expansion, ReplacementSystem};
use crate::systems::{BLUE, RED};

pub const BL: u16 = 0;
pub const BR: u16 = 1;
pub const RT: u16 = 2;
pub const RB: u16 = 3;

/// A component of the Airplane limit space: the central one, or the one
/// created by expanding a blue edge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ComponentId {
    Central,
    Blue(EdgeAddress),
}

/// An extreme of the limit space, named by the root edge of its ray.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExtremeId(pub EdgeAddress);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeGeometry {
    /// Arc `[from, to]` of a component's boundary, traversed counterclockwise.
    Red { component: ComponentId, from: Dyadic, to: Dyadic },
    /// Segment `[lo, hi]` of the ray rooted at `ray`, which leaves component
    /// `origin` at angle `angle`.
    Blue { ray: EdgeAddress, origin: ComponentId, angle: Dyadic, lo: Dyadic, hi: Dyadic, source_inner: bool },
}

pub fn is_airplane(sys: &ReplacementSystem) -> bool {
    sys.name() == "airplane"
}

pub(crate) fn require_airplane(f: &Diagram) -> Result<()> {
    if is_airplane(f.system()) {
        Ok(())
    } else {
        Err(Error::NotInFamily(format!("expected an Airplane diagram, got one over {:?}", f.system().name())))
    }
}

pub fn geometry(a: &EdgeAddress) -> EdgeGeometry {
    let half = Dyadic::HALF;
    let mut g = match a.base {
        BL => EdgeGeometry::Blue {
            ray: EdgeAddress::base(BL),
            origin: ComponentId::Central,
            angle: half,
            lo: Dyadic::ZERO,
            hi: Dyadic::ONE,
            source_inner: true,
        },
        BR => EdgeGeometry::Blue {
            ray: EdgeAddress::base(BR),
            origin: ComponentId::Central,
            angle: Dyadic::ZERO,
            lo: Dyadic::ZERO,
            hi: Dyadic::ONE,
            source_inner: true,
        },
        RT => EdgeGeometry::Red { component: ComponentId::Central, from: Dyadic::ZERO, to: half },
        _ => EdgeGeometry::Red { component: ComponentId::Central, from: half, to: Dyadic::ONE },
    };
    let mut here = EdgeAddress::base(a.base);
    for &s in &a.path {
        g = match g {
            EdgeGeometry::Red { component, from, to } => {
                let mid = from.mid(to);
                match s {
                    0 => EdgeGeometry::Red { component, from, to: mid },
                    1 => EdgeGeometry::Red { component, from: mid, to },
                    _ => EdgeGeometry::Blue {
                        ray: here.child(2),
                        origin: component,
                        angle: mid,
                        lo: Dyadic::ZERO,
                        hi: Dyadic::ONE,
                        source_inner: true,
                    },
                }
            }
            EdgeGeometry::Blue { ray, origin, angle, lo, hi, source_inner } => {
                let mid = lo.mid(hi);
                let comp = ComponentId::Blue(here.clone());
                let (first, second) = if source_inner { (Dyadic::ZERO, half) } else { (half, Dyadic::ZERO) };
                match s {
                    0 => {
                        let (lo, hi) = if source_inner { (lo, mid) } else { (mid, hi) };
                        EdgeGeometry::Blue { ray, origin, angle, lo, hi, source_inner: !source_inner }
                    }
                    3 => {
                        let (lo, hi) = if source_inner { (mid, hi) } else { (lo, mid) };
                        EdgeGeometry::Blue { ray, origin, angle, lo, hi, source_inner }
                    }
                    1 => EdgeGeometry::Red { component: comp, from: second, to: second + half },
                    _ => EdgeGeometry::Red { component: comp, from: first, to: first + half },
                }
            }
        };
        here.path.push(s);
    }
    g
}

/// Length of a blue edge: `2^-k` where `k` counts the blue halvings.
pub fn blue_length(a: &EdgeAddress) -> Option<Dyadic> {
    match geometry(a) {
        EdgeGeometry::Blue { lo, hi, .. } => Some(hi - lo),
        EdgeGeometry::Red { .. } => None,
    }
}

/// `-log2` of the length of a blue edge.
pub fn blue_depth(a: &EdgeAddress) -> Option<u32> {
    blue_length(a).map(|l| l.exponent())
}

/// Root edge of the ray containing a blue edge.
pub fn ray_root(sys: &ReplacementSystem, a: &EdgeAddress) -> EdgeAddress {
    let mut a = a.clone();
    while let Some(p) = a.parent() {
        if sys.color_of(&p) != Some(BLUE) {
            break;
        }
        a = p;
    }
    a
}

/// The component bounded by a red edge.
pub fn owner(sys: &ReplacementSystem, a: &EdgeAddress) -> ComponentId {
    let mut a = a.clone();
    loop {
        match a.parent() {
            None => return ComponentId::Central,
            Some(p) => {
                if sys.color_of(&p) == Some(BLUE) {
                    return ComponentId::Blue(p);
                }
                a = p;
            }
        }
    }
}

/// A red edge on the boundary of a component.
pub fn boundary_edge(c: &ComponentId) -> EdgeAddress {
    match c {
        ComponentId::Central => EdgeAddress::base(RT),
        ComponentId::Blue(x) => x.child(1),
    }
}

/// Image of a component under a rearrangement.
pub fn map_component(f: &Diagram, c: &ComponentId) -> ComponentId {
    let sys = f.system();
    let mut e = boundary_edge(c);
    loop {
        if let Some(img) = f.push(&e) {
            return owner(sys, &img.addr);
        }
        e = e.child(0);
    }
}

/// Position `(angle, position)` of a non-central component on the ray it
/// sits on, with the component it hangs from.
fn placement(x: &EdgeAddress) -> (ComponentId, Dyadic, Dyadic) {
    match geometry(x) {
        EdgeGeometry::Blue { origin, angle, lo, hi, .. } => (origin, angle, lo.mid(hi)),
        EdgeGeometry::Red { .. } => unreachable!("components are created by blue edges"),
    }
}

/// The sequence of (angle, position) steps leading from the central
/// component to `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentPath(pub Vec<(Dyadic, Dyadic)>);

impl ComponentPath {
    pub fn depth(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for ComponentPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for (i, (t, l)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "({t},{l})")?;
        }
        Ok(())
    }
}

impl core::str::FromStr for ComponentPath {
    type Err = Error;

    /// `(θ,l);(θ,l);…` or `((θ,l),(θ,l),…)`, with `()` or an empty string
    /// for the centre.
    fn from_str(s: &str) -> Result<ComponentPath> {
        let t = s.trim();
        if t.is_empty() || t == "()" || t.eq_ignore_ascii_case("central") {
            return Ok(ComponentPath::default());
        }
        let lead = s.len() - s.trim_start().len();
        let (body, base) = match t.strip_prefix("((").and_then(|r| r.strip_suffix("))")) {
            Some(_) => (&t[1..t.len() - 1], lead + 1),
            None => (t, lead),
        };
        let mut out = Vec::new();
        let mut rest = body;
        let mut offset = base;
        loop {
            let err = |off: usize, m: &str| Error::Parse { offset: off, message: format!("{m} in {s:?}") };
            let open = rest.find(|c: char| !c.is_whitespace()).ok_or_else(|| err(offset, "expected (angle,position)"))?;
            if !rest[open..].starts_with('(') {
                return Err(err(offset + open, "expected ("));
            }
            let close = rest.find(')').ok_or_else(|| err(offset + open, "unclosed ("))?;
            let inner = &rest[open + 1..close];
            let (a, b) = inner.split_once(',').ok_or_else(|| err(offset + open, "expected a comma"))?;
            let a: Dyadic = a.trim().parse().map_err(|_| err(offset + open + 1, "bad angle"))?;
            let b: Dyadic = b.trim().parse().map_err(|_| err(offset + open + 2 + a_len(inner), "bad position"))?;
            out.push((a, b));
            let after = &rest[close + 1..];
            let trimmed = after.trim_start();
            offset += close + 1 + (after.len() - trimmed.len());
            if trimmed.is_empty() {
                break;
            }
            if !(trimmed.starts_with(';') || trimmed.starts_with(',')) {
                return Err(err(offset, "expected ; or , between steps"));
            }
            rest = &trimmed[1..];
            offset += 1;
        }
        Ok(ComponentPath(out))
    }
}

fn a_len(inner: &str) -> usize {
    inner.find(',').unwrap_or(0)
}

pub fn component_path(c: &ComponentId) -> ComponentPath {
    let mut steps = Vec::new();
    let mut c = c.clone();
    while let ComponentId::Blue(x) = c {
        let (origin, angle, pos) = placement(&x);
        steps.push((angle, pos));
        c = origin;
    }
    steps.reverse();
    ComponentPath(steps)
}

pub fn depth(c: &ComponentId) -> usize {
    component_path(c).depth()
}

/// Whether `x` lies strictly inside `(0,1)` and is not `1/2`.
fn off_axis(x: Dyadic) -> bool {
    x > Dyadic::ZERO && x < Dyadic::ONE && x != Dyadic::HALF
}

/// Root edge of the ray leaving `c` at angle `theta`.
pub fn ray_at(c: &ComponentId, theta: Dyadic) -> Result<EdgeAddress> {
    let bad = || Err(Error::MalformedPath(format!("no ray at angle {theta} of {c:?}")));
    let (mut edge, mut from, mut to) = match c {
        ComponentId::Central => {
            if theta == Dyadic::ZERO {
                return Ok(EdgeAddress::base(BR));
            }
            if theta == Dyadic::HALF {
                return Ok(EdgeAddress::base(BL));
            }
            if theta < Dyadic::ZERO || theta >= Dyadic::ONE {
                return bad();
            }
            if theta < Dyadic::HALF {
                (EdgeAddress::base(RT), Dyadic::ZERO, Dyadic::HALF)
            } else {
                (EdgeAddress::base(RB), Dyadic::HALF, Dyadic::ONE)
            }
        }
        ComponentId::Blue(x) => {
            if !off_axis(theta) {
                return bad();
            }
            let inner = matches!(geometry(x), EdgeGeometry::Blue { source_inner: true, .. });
            let low_step = if inner { 2 } else { 1 };
            if theta < Dyadic::HALF {
                (x.child(low_step), Dyadic::ZERO, Dyadic::HALF)
            } else {
                (x.child(3 - low_step), Dyadic::HALF, Dyadic::ONE)
            }
        }
    };
    loop {
        let mid = from.mid(to);
        if theta == mid {
            return Ok(edge.child(2));
        }
        if theta < mid {
            to = mid;
            edge = edge.child(0);
        } else {
            from = mid;
            edge = edge.child(1);
        }
    }
}

/// The component at position `pos` along the ray rooted at `ray`.
pub fn component_on_ray(ray: &EdgeAddress, pos: Dyadic) -> Result<ComponentId> {
    if pos <= Dyadic::ZERO || pos >= Dyadic::ONE {
        return Err(Error::MalformedPath(format!("position {pos} is not inside (0,1)")));
    }
    let (mut edge, mut lo, mut hi, mut inner) = (ray.clone(), Dyadic::ZERO, Dyadic::ONE, true);
    loop {
        let mid = lo.mid(hi);
        if pos == mid {
            return Ok(ComponentId::Blue(edge));
        }
        // child 0 covers the half next to the source and flips orientation
        let lower_is_child0 = inner;
        let go_lower = pos < mid;
        if go_lower == lower_is_child0 {
            edge = edge.child(0);
            inner = !inner;
        } else {
            edge = edge.child(3);
        }
        if go_lower {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

pub fn component_from_path(p: &ComponentPath) -> Result<ComponentId> {
    let mut c = ComponentId::Central;
    for &(theta, pos) in &p.0 {
        let ray = ray_at(&c, theta)?;
        c = component_on_ray(&ray, pos)?;
    }
    Ok(c)
}

/// Red edges of an expansion that bound `c`.
pub fn boundary_leaves(sys: &ReplacementSystem, e: &Expansion, c: &ComponentId) -> Vec<EdgeAddress> {
    e.leaves().iter().filter(|a| sys.color_of(a) == Some(RED) && owner(sys, a) == *c).cloned().collect()
}

/// Components with a boundary edge in the expansion (the central one plus
/// one per expanded blue edge).
pub fn components_of(sys: &ReplacementSystem, e: &Expansion) -> BTreeSet<ComponentId> {
    let mut out = BTreeSet::new();
    out.insert(ComponentId::Central);
    for a in e.internal_nodes() {
        if sys.color_of(&a) == Some(BLUE) {
            out.insert(ComponentId::Blue(a));
        }
    }
    out
}

/// The leaf of an expansion that contains the outer end of a ray.
pub fn outer_leaf(e: &Expansion, ray: &EdgeAddress) -> Option<EdgeAddress> {
    if let Some(l) = e.leaf_above(ray) {
        return (l == ray).then(|| l.clone());
    }
    if !e.is_node(ray) {
        return None;
    }
    let mut a = ray.clone();
    while !e.contains(&a) {
        let inner = matches!(geometry(&a), EdgeGeometry::Blue { source_inner: true, .. });
        a = a.child(if inner { 3 } else { 0 });
    }
    Some(a)
}

/// Extremes whose ray is present in the expansion.
pub fn extremes(sys: &ReplacementSystem, e: &Expansion) -> BTreeSet<ExtremeId> {
    e.leaves().iter().filter(|a| sys.color_of(a) == Some(BLUE)).map(|a| ExtremeId(ray_root(sys, a))).collect()
}

/// Image of an extreme under a rearrangement.
pub fn map_extreme(f: &Diagram, p: &ExtremeId) -> ExtremeId {
    let dom = f.domain();
    match outer_leaf(&dom, &p.0) {
        Some(leaf) => ExtremeId(ray_root(f.system(), &f.pairs()[&leaf].addr)),
        None => ExtremeId(f.push(&p.0).expect("ray below a domain leaf").addr),
    }
}

pub fn describe_component(c: &ComponentId) -> String {
    match c {
        ComponentId::Central => String::from("central"),
        ComponentId::Blue(_) => format!("{}", component_path(c)),
    }
}
