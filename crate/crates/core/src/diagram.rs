//! Graph pair diagrams: an isomorphism between two expansions, given edge by
//! edge.
//!
//! An edge may be sent to its image with its ends swapped ("flipped") when
//! its colour's rule graph has a matching symmetry; the children of a flipped
//! edge are then permuted by that symmetry and are not themselves flipped.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::replacement::{leaf_above, EdgeAddress, Expansion, ReplacementSystem, VertexKey};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Image {
    pub addr: EdgeAddress,
    pub flipped: bool,
}

impl Image {
    pub fn straight(addr: EdgeAddress) -> Image {
        Image { addr, flipped: false }
    }
}

#[derive(Clone, Debug)]
pub struct Diagram {
    system: Arc<ReplacementSystem>,
    map: BTreeMap<EdgeAddress, Image>,
}

impl PartialEq for Diagram {
    /// Structural equality; use [`Diagram::same_element`] for group equality.
    fn eq(&self, other: &Diagram) -> bool {
        self.map == other.map && (Arc::ptr_eq(&self.system, &other.system) || self.system == other.system)
    }
}

impl Eq for Diagram {}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Diagram) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Diagram {
    fn cmp(&self, other: &Diagram) -> core::cmp::Ordering {
        self.map.cmp(&other.map)
    }
}

impl Diagram {
    /// Builds and validates a diagram; the result is not reduced.
    pub fn new(system: Arc<ReplacementSystem>, pairs: impl IntoIterator<Item = (EdgeAddress, Image)>) -> Result<Diagram> {
        let mut map = BTreeMap::new();
        for (d, r) in pairs {
            if map.insert(d.clone(), r).is_some() {
                return Err(Error::InvalidDiagram(format!("{} mapped twice", system.format_address(&d))));
            }
        }
        let f = Diagram { system, map };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(system: Arc<ReplacementSystem>) -> Diagram {
        let map = (0..system.base().edges.len() as u16)
            .map(|b| (EdgeAddress::base(b), Image::straight(EdgeAddress::base(b))))
            .collect();
        Diagram { system, map }
    }

    pub fn system(&self) -> &Arc<ReplacementSystem> {
        &self.system
    }

    pub fn pairs(&self) -> &BTreeMap<EdgeAddress, Image> {
        &self.map
    }

    pub fn domain(&self) -> Expansion {
        Expansion::from_leaves(&self.system, self.map.keys().cloned()).expect("validated domain")
    }

    pub fn range(&self) -> Expansion {
        Expansion::from_leaves(&self.system, self.map.values().map(|i| i.addr.clone())).expect("validated range")
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Checks that domain and range are expansions and that the edge map is
    /// a colour-preserving graph isomorphism.
    pub fn validate(&self) -> Result<()> {
        let sys = &*self.system;
        let bad = |m: String| Err(Error::InvalidDiagram(m));
        Expansion::from_leaves(sys, self.map.keys().cloned())?;
        Expansion::from_leaves(sys, self.map.values().map(|i| i.addr.clone()))?;
        let mut vmap: BTreeMap<VertexKey, VertexKey> = BTreeMap::new();
        let mut seen_targets: BTreeSet<VertexKey> = BTreeSet::new();
        for (d, img) in &self.map {
            let (cd, cr) = (sys.color_of(d), sys.color_of(&img.addr));
            if cd != cr {
                return bad(format!(
                    "{} and {} have different colours",
                    sys.format_address(d),
                    sys.format_address(&img.addr)
                ));
            }
            if img.flipped && sys.flip(cd.expect("valid")).is_none() {
                return bad(format!("{} cannot be flipped", sys.format_address(d)));
            }
            let (s, t) = sys.endpoints(d);
            let (mut s2, mut t2) = sys.endpoints(&img.addr);
            if img.flipped {
                core::mem::swap(&mut s2, &mut t2);
            }
            for (u, v) in [(s, s2), (t, t2)] {
                match vmap.get(&u) {
                    Some(w) if *w != v => {
                        return bad(format!("vertex map not single-valued near {}", sys.format_address(d)));
                    }
                    Some(_) => {}
                    None => {
                        if !seen_targets.insert(v.clone()) {
                            return bad(format!("vertex map not injective near {}", sys.format_address(d)));
                        }
                        vmap.insert(u, v);
                    }
                }
            }
        }
        Ok(())
    }

    /// Where a descendant of a domain leaf lands: its image address and
    /// whether it is flipped. `None` if `a` is above the domain leaves.
    pub fn push(&self, a: &EdgeAddress) -> Option<Image> {
        let leaf = leaf_above(&self.map, a)?;
        Some(transport(&self.system, leaf, &self.map[leaf], leaf.relative(a)))
    }

    /// Expand the pair whose domain edge is `a`.
    pub fn expand_pair(&self, a: &EdgeAddress) -> Result<Diagram> {
        let img = self
            .map
            .get(a)
            .ok_or_else(|| Error::InvalidDiagram(format!("{} is not a domain leaf", self.system.format_address(a))))?
            .clone();
        let mut map = self.map.clone();
        map.remove(a);
        let c = self.system.color_of(a).expect("valid");
        for i in 0..self.system.child_count(c) as u8 {
            map.insert(a.child(i), transport(&self.system, a, &img, &[i]));
        }
        Ok(Diagram { system: self.system.clone(), map })
    }

    fn collapse_target(&self, p: &EdgeAddress) -> Option<Image> {
        let sys = &*self.system;
        let c = sys.color_of(p)?;
        let n = sys.child_count(c) as u8;
        let mut imgs = Vec::with_capacity(n as usize);
        for i in 0..n {
            let img = self.map.get(&p.child(i))?;
            if img.flipped {
                return None;
            }
            imgs.push(&img.addr);
        }
        let parent = imgs[0].parent()?;
        if sys.color_of(&parent) != Some(c) {
            return None;
        }
        if imgs.iter().enumerate().all(|(i, a)| **a == parent.child(i as u8)) {
            return Some(Image::straight(parent));
        }
        let sigma = sys.flip(c)?;
        if imgs.iter().enumerate().all(|(i, a)| **a == parent.child(sigma[i])) {
            return Some(Image { addr: parent, flipped: true });
        }
        None
    }

    /// Undo all possible pair expansions.
    pub fn reduce(&self) -> Diagram {
        self.reduce_by(|n| n - 1)
    }

    /// Reduce, letting `pick` choose which pending candidate to try next
    /// (given the number of candidates, return an index). Any schedule
    /// reaches the same result.
    pub fn reduce_by(&self, mut pick: impl FnMut(usize) -> usize) -> Diagram {
        let mut f = self.clone();
        let mut pending: Vec<EdgeAddress> =
            self.map.keys().filter_map(|a| a.parent()).collect::<BTreeSet<_>>().into_iter().collect();
        while !pending.is_empty() {
            let i = pick(pending.len()).min(pending.len() - 1);
            let p = pending.swap_remove(i);
            if let Some(img) = f.collapse_target(&p) {
                let c = f.system.color_of(&p).expect("valid");
                for k in 0..f.system.child_count(c) as u8 {
                    f.map.remove(&p.child(k));
                }
                f.map.insert(p.clone(), img);
                if let Some(q) = p.parent() {
                    if !pending.contains(&q) {
                        pending.push(q);
                    }
                }
            }
        }
        f
    }

    pub fn is_reduced(&self) -> bool {
        self.map.keys().filter_map(|a| a.parent()).all(|p| self.collapse_target(&p).is_none())
    }

    pub fn inverse(&self) -> Diagram {
        let map = self.map.iter().map(|(d, img)| (img.addr.clone(), Image { addr: d.clone(), flipped: img.flipped })).collect();
        Diagram { system: self.system.clone(), map }
    }

    /// `self ∘ g`: apply `g` first. The result is reduced.
    pub fn compose(&self, g: &Diagram) -> Result<Diagram> {
        if !(Arc::ptr_eq(&self.system, &g.system) || self.system == g.system) {
            return Err(Error::SystemMismatch);
        }
        let sys = &*self.system;
        let mut map = BTreeMap::new();
        for (d, gi) in &g.map {
            let r = &gi.addr;
            if let Some(x) = leaf_above(&self.map, r) {
                let fi = transport(sys, x, &self.map[x], x.relative(r));
                map.insert(d.clone(), Image { addr: fi.addr, flipped: fi.flipped ^ gi.flipped });
            } else {
                for (x, fi) in self.map.range(r.clone()..).take_while(|(x, _)| r.is_prefix_of(x)) {
                    let t = r.relative(x);
                    let back = transport(sys, r, &Image { addr: d.clone(), flipped: gi.flipped }, t);
                    map.insert(back.addr, fi.clone());
                }
            }
        }
        Ok(Diagram { system: self.system.clone(), map }.reduce())
    }

    /// Equality as group elements.
    pub fn same_element(&self, other: &Diagram) -> bool {
        self.reduce() == other.reduce()
    }

    pub fn is_identity(&self) -> bool {
        self.reduce().map.iter().all(|(d, i)| !i.flipped && *d == i.addr)
    }

    pub fn pow(&self, k: i64) -> Result<Diagram> {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = Diagram::identity(self.system.clone());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.compose(&base)?;
            }
        }
        Ok(acc)
    }

    /// Least `k ≤ n` with `self^k` the identity.
    pub fn order_up_to(&self, n: u64) -> Result<Option<u64>> {
        let mut acc = self.reduce();
        for k in 1..=n {
            if acc.is_identity() {
                return Ok(Some(k));
            }
            acc = acc.compose(self)?;
        }
        Ok(None)
    }

    /// `h⁻¹ ∘ self ∘ h`.
    pub fn conjugate_by(&self, h: &Diagram) -> Result<Diagram> {
        h.inverse().compose(&self.compose(h)?)
    }

    /// `self ∘ h ∘ self⁻¹ ∘ h⁻¹`.
    pub fn commutator(&self, h: &Diagram) -> Result<Diagram> {
        self.compose(h)?.compose(&self.inverse())?.compose(&h.inverse())
    }
}

/// Image of `leaf·rel` under the pair `leaf ↦ img`.
pub(crate) fn transport(sys: &ReplacementSystem, leaf: &EdgeAddress, img: &Image, rel: &[u8]) -> Image {
    let Some((&first, rest)) = rel.split_first() else {
        return img.clone();
    };
    let step = if img.flipped {
        let c = sys.color_of(leaf).expect("valid");
        sys.flip(c).expect("flip checked at validation")[first as usize]
    } else {
        first
    };
    let mut addr = img.addr.child(step);
    addr.path.extend_from_slice(rest);
    Image::straight(addr)
}
