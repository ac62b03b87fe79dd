//! The embedding of the Airplane group into the rearrangement group of the
//! circular Airplane, where every blue edge is doubled into the two sides
//! of a cut.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::airplane::require_airplane;
use crate::diagram::{Diagram, Image};
use crate::error::{Error, Result};
use crate::replacement::{EdgeAddress, Expansion, ReplacementSystem};
use crate::systems::circular_airplane;

/// What an Airplane edge becomes: one red edge, or the two blue edges on
/// either side of it. For a blue pair the first entry lies on the same side
/// as the source end of the edge, and the second on the opposite side.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Correspondent {
    Red(EdgeAddress),
    Blue { same: EdgeAddress, opposite: EdgeAddress },
}

impl Correspondent {
    pub fn edges(&self) -> Vec<EdgeAddress> {
        match self {
            Correspondent::Red(a) => alloc::vec![a.clone()],
            Correspondent::Blue { same, opposite } => alloc::vec![same.clone(), opposite.clone()],
        }
    }

    /// Correspondent of child `i` of an edge with this correspondent.
    pub fn child(&self, i: u8) -> Correspondent {
        match self {
            Correspondent::Red(a) => match i {
                0 => Correspondent::Red(a.child(0)),
                1 => Correspondent::Red(a.child(3)),
                _ => Correspondent::Blue { same: a.child(1), opposite: a.child(2) },
            },
            Correspondent::Blue { same: s, opposite: o } => match i {
                0 => Correspondent::Blue { same: o.child(2), opposite: s.child(0) },
                1 => Correspondent::Red(o.child(1)),
                2 => Correspondent::Red(s.child(1)),
                _ => Correspondent::Blue { same: s.child(2), opposite: o.child(0) },
            },
        }
    }
}

fn circular_base(sys: &ReplacementSystem, name: &str) -> EdgeAddress {
    EdgeAddress::base(sys.base_edge(name).expect("circular airplane base edge"))
}

/// Correspondent of any Airplane address.
pub fn correspondent(circ: &ReplacementSystem, a: &EdgeAddress) -> Correspondent {
    let k = |n: &str| circular_base(circ, n);
    let mut c = match a.base {
        crate::airplane::BL => Correspondent::Blue { same: k("k2"), opposite: k("k3") },
        crate::airplane::BR => Correspondent::Blue { same: k("k5"), opposite: k("k0") },
        crate::airplane::RT => Correspondent::Red(k("k1")),
        _ => Correspondent::Red(k("k4")),
    };
    for &i in &a.path {
        c = c.child(i);
    }
    c
}

/// An Airplane expansion together with its circular counterpart, grown one
/// simple expansion at a time.
#[derive(Clone, Debug)]
pub struct Circularization {
    airplane: Arc<ReplacementSystem>,
    circular: Arc<ReplacementSystem>,
    leaves: BTreeMap<EdgeAddress, Correspondent>,
    image: Expansion,
}

impl Circularization {
    pub fn base(airplane: Arc<ReplacementSystem>) -> Result<Circularization> {
        if !crate::airplane::is_airplane(&airplane) {
            return Err(Error::NotInFamily("circularization needs the Airplane system".into()));
        }
        let circular = circular_airplane();
        let leaves = Expansion::base(&airplane).leaves().iter().map(|a| (a.clone(), correspondent(&circular, a))).collect();
        let image = Expansion::base(&circular);
        Ok(Circularization { airplane, circular, leaves, image })
    }

    /// Replaces the leaf `a`: a red leaf expands one circular edge, a blue
    /// leaf expands both of its circular edges.
    pub fn expand(&mut self, a: &EdgeAddress) -> Result<()> {
        let c = self
            .leaves
            .remove(a)
            .ok_or_else(|| Error::InvalidExpansion(alloc::format!("{} is not a leaf", self.airplane.format_address(a))))?;
        for e in c.edges() {
            self.image = self.image.expand_edge(&self.circular, &e)?;
        }
        let n = self.airplane.child_count(self.airplane.color_of(a).expect("valid leaf"));
        for i in 0..n as u8 {
            self.leaves.insert(a.child(i), c.child(i));
        }
        Ok(())
    }

    pub fn circular_system(&self) -> &Arc<ReplacementSystem> {
        &self.circular
    }

    pub fn correspondence(&self) -> &BTreeMap<EdgeAddress, Correspondent> {
        &self.leaves
    }

    pub fn image(&self) -> &Expansion {
        &self.image
    }

    pub fn source(&self) -> Expansion {
        Expansion::from_leaves(&self.airplane, self.leaves.keys().cloned()).expect("grown by simple expansions")
    }
}

/// Applies the simple expansions in the given order, starting from the base.
pub fn circularize_in_order(airplane: Arc<ReplacementSystem>, order: &[EdgeAddress]) -> Result<Circularization> {
    let mut c = Circularization::base(airplane)?;
    for a in order {
        c.expand(a)?;
    }
    Ok(c)
}

/// The circular counterpart of an Airplane expansion.
pub fn phi_expansion(airplane: &Arc<ReplacementSystem>, e: &Expansion) -> Result<Circularization> {
    // parents sort before their descendants
    let order: Vec<EdgeAddress> = e.internal_nodes().into_iter().collect();
    circularize_in_order(airplane.clone(), &order)
}

/// The image of an Airplane element in the circular Airplane group.
pub fn phi_diagram(f: &Diagram) -> Result<Diagram> {
    require_airplane(f)?;
    let circ = circular_airplane();
    let mut pairs = Vec::new();
    for (d, img) in f.pairs() {
        match (correspondent(&circ, d), correspondent(&circ, &img.addr)) {
            (Correspondent::Red(x), Correspondent::Red(y)) => pairs.push((x, Image::straight(y))),
            (Correspondent::Blue { same: s, opposite: o }, Correspondent::Blue { same: s2, opposite: o2 }) => {
                let (to_s, to_o) = if img.flipped { (o2, s2) } else { (s2, o2) };
                pairs.push((s, Image::straight(to_s)));
                pairs.push((o, Image::straight(to_o)));
            }
            _ => return Err(Error::InvalidDiagram("an edge is paired with one of another color".into())),
        }
    }
    Ok(Diagram::new(circ, pairs)?.reduce())
}
