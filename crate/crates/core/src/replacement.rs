//! Replacement systems, edge addresses and expansions.
//!
//! An edge of an expansion is named by the base edge it descends from and the
//! sequence of rule-edge indices taken on the way down. Vertices are never
//! stored: a vertex is identified by the place it was created (a base vertex,
//! or an internal rule vertex of some expanded edge), which makes two
//! independently built copies of the same expansion agree exactly.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type Color = u8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedEdge {
    pub name: String,
    pub src: u32,
    pub tgt: u32,
    pub color: Color,
}

/// A finite directed graph with coloured, named edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: Vec<String>,
    pub edges: Vec<NamedEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub graph: Graph,
    pub initial: u32,
    pub terminal: u32,
}

/// A base graph plus one replacement rule per colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplacementSystem {
    name: String,
    colors: Vec<String>,
    base: Graph,
    rules: Vec<Rule>,
    /// Per colour: the edge permutation of the rule graph induced by an
    /// orientation-preserving automorphism that swaps initial and terminal.
    flips: Vec<Option<Vec<u8>>>,
}

/// Base edge index plus the path of child indices below it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeAddress {
    pub base: u16,
    pub path: Vec<u8>,
}

impl EdgeAddress {
    pub fn base(base: u16) -> EdgeAddress {
        EdgeAddress { base, path: Vec::new() }
    }

    pub fn child(&self, i: u8) -> EdgeAddress {
        let mut path = Vec::with_capacity(self.path.len() + 1);
        path.extend_from_slice(&self.path);
        path.push(i);
        EdgeAddress { base: self.base, path }
    }

    pub fn extend(&self, rel: &[u8]) -> EdgeAddress {
        let mut path = self.path.clone();
        path.extend_from_slice(rel);
        EdgeAddress { base: self.base, path }
    }

    pub fn parent(&self) -> Option<EdgeAddress> {
        if self.path.is_empty() {
            return None;
        }
        Some(EdgeAddress { base: self.base, path: self.path[..self.path.len() - 1].to_vec() })
    }

    pub fn last(&self) -> Option<u8> {
        self.path.last().copied()
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }

    /// True when `self` is `other` or an ancestor of it.
    pub fn is_prefix_of(&self, other: &EdgeAddress) -> bool {
        self.base == other.base && other.path.starts_with(&self.path)
    }

    /// Path of `other` below `self`; `other` must descend from `self`.
    pub fn relative<'a>(&self, other: &'a EdgeAddress) -> &'a [u8] {
        debug_assert!(self.is_prefix_of(other));
        &other.path[self.path.len()..]
    }
}

impl fmt::Debug for EdgeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.base)?;
        for (i, s) in self.path.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { '.' } else { '-' }, s)?;
        }
        Ok(())
    }
}

/// Where a vertex of an expansion was created.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKey {
    Base(u32),
    /// Internal vertex `v` of the rule graph that replaced `edge`.
    Inner(EdgeAddress, u32),
}

impl ReplacementSystem {
    pub fn new(name: &str, colors: Vec<String>, base: Graph, rules: Vec<Rule>) -> Result<ReplacementSystem> {
        let bad = |m: String| Err(Error::InvalidSystem(m));
        if colors.is_empty() {
            return bad("no colours".into());
        }
        if rules.len() != colors.len() {
            return bad(format!("{} colours but {} rules", colors.len(), rules.len()));
        }
        if base.edges.is_empty() {
            return bad("empty base graph".into());
        }
        if base.edges.len() > u16::MAX as usize {
            return bad("base graph too large".into());
        }
        check_graph(&base, colors.len(), "base graph")?;
        let mut seen = BTreeSet::new();
        for e in &base.edges {
            if e.name.is_empty() || e.name.contains(['.', '-', ',', ' ']) {
                return bad(format!("base edge name {:?} must be non-empty without '.', '-', ',' or spaces", e.name));
            }
            if !seen.insert(e.name.as_str()) {
                return bad(format!("duplicate base edge name {:?}", e.name));
            }
        }
        for (c, r) in rules.iter().enumerate() {
            let what = format!("rule for {}", colors[c]);
            check_graph(&r.graph, colors.len(), &what)?;
            let n = r.graph.vertices.len() as u32;
            if r.initial >= n || r.terminal >= n || r.initial == r.terminal {
                return bad(format!("{what}: initial and terminal must be distinct vertices"));
            }
            if r.graph.edges.len() < 2 || r.graph.edges.len() > u8::MAX as usize {
                return bad(format!("{what}: needs at least two edges"));
            }
        }
        let flips = rules.iter().map(end_swap).collect();
        Ok(ReplacementSystem { name: name.to_string(), colors, base, rules, flips })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn colors(&self) -> &[String] {
        &self.colors
    }

    pub fn color_index(&self, name: &str) -> Option<Color> {
        self.colors.iter().position(|c| c == name).map(|i| i as Color)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, c: Color) -> &Rule {
        &self.rules[c as usize]
    }

    pub fn child_count(&self, c: Color) -> usize {
        self.rules[c as usize].graph.edges.len()
    }

    /// Child permutation used when an edge of colour `c` is mapped with its
    /// ends swapped, if that colour allows it.
    pub fn flip(&self, c: Color) -> Option<&[u8]> {
        self.flips[c as usize].as_deref()
    }

    pub fn base_edge(&self, name: &str) -> Option<u16> {
        self.base.edges.iter().position(|e| e.name == name).map(|i| i as u16)
    }

    /// Address of a base edge by name; panics on unknown names.
    pub fn addr(&self, name: &str, path: &[u8]) -> EdgeAddress {
        let base = self.base_edge(name).unwrap_or_else(|| panic!("no base edge {name}"));
        EdgeAddress { base, path: path.to_vec() }
    }

    /// Colour of an address, or `None` if the path leaves the rule graphs.
    pub fn color_of(&self, a: &EdgeAddress) -> Option<Color> {
        let mut c = self.base.edges.get(a.base as usize)?.color;
        for &s in &a.path {
            c = self.rules[c as usize].graph.edges.get(s as usize)?.color;
        }
        Some(c)
    }

    pub fn is_valid_address(&self, a: &EdgeAddress) -> bool {
        self.color_of(a).is_some()
    }

    /// Colours along the address, from the base edge down to `a` itself.
    pub fn colors_along(&self, a: &EdgeAddress) -> Vec<Color> {
        let mut c = self.base.edges[a.base as usize].color;
        let mut out = Vec::with_capacity(a.path.len() + 1);
        out.push(c);
        for &s in &a.path {
            c = self.rules[c as usize].graph.edges[s as usize].color;
            out.push(c);
        }
        out
    }

    /// Canonical text form: base name, then `.` and the path joined by `-`.
    pub fn format_address(&self, a: &EdgeAddress) -> String {
        let mut s = self.base.edges[a.base as usize].name.clone();
        for (i, step) in a.path.iter().enumerate() {
            s.push(if i == 0 { '.' } else { '-' });
            s.push_str(&step.to_string());
        }
        s
    }

    pub fn parse_address(&self, text: &str) -> Result<EdgeAddress> {
        let err = |offset: usize, m: &str| Error::Parse { offset, message: format!("{m} in address {text:?}") };
        let (name, rest) = match text.find('.') {
            Some(i) => (&text[..i], Some((i + 1, &text[i + 1..]))),
            None => (text, None),
        };
        let base = self.base_edge(name).ok_or_else(|| err(0, "unknown base edge"))?;
        let mut path = Vec::new();
        if let Some((mut off, rest)) = rest {
            for part in rest.split('-') {
                let step: u8 = part.parse().map_err(|_| err(off, "bad child index"))?;
                path.push(step);
                off += part.len() + 1;
            }
        }
        let a = EdgeAddress { base, path };
        if !self.is_valid_address(&a) {
            return Err(err(0, "child index out of range"));
        }
        Ok(a)
    }

    /// Endpoints of an edge, as creation keys.
    pub fn endpoints(&self, a: &EdgeAddress) -> (VertexKey, VertexKey) {
        let e = &self.base.edges[a.base as usize];
        let (mut s, mut t, mut c) = (VertexKey::Base(e.src), VertexKey::Base(e.tgt), e.color);
        let mut here = EdgeAddress::base(a.base);
        for &step in &a.path {
            let rule = &self.rules[c as usize];
            let re = &rule.graph.edges[step as usize];
            let key = |v: u32| {
                if v == rule.initial {
                    s.clone()
                } else if v == rule.terminal {
                    t.clone()
                } else {
                    VertexKey::Inner(here.clone(), v)
                }
            };
            let (ns, nt) = (key(re.src), key(re.tgt));
            s = ns;
            t = nt;
            c = re.color;
            here.path.push(step);
        }
        (s, t)
    }
}

fn check_graph(g: &Graph, ncolors: usize, what: &str) -> Result<()> {
    let n = g.vertices.len() as u32;
    for e in &g.edges {
        if e.src >= n || e.tgt >= n {
            return Err(Error::InvalidSystem(format!("{what}: edge {:?} has an endpoint out of range", e.name)));
        }
        if e.color as usize >= ncolors {
            return Err(Error::InvalidSystem(format!("{what}: edge {:?} has an unknown colour", e.name)));
        }
    }
    Ok(())
}

/// Looks for the unique automorphism of a rule graph that swaps the initial
/// and terminal vertices while keeping every edge's direction and colour.
/// Only involutions are accepted.
fn end_swap(rule: &Rule) -> Option<Vec<u8>> {
    let g = &rule.graph;
    let n = g.vertices.len();
    let inner: Vec<u32> = (0..n as u32).filter(|&v| v != rule.initial && v != rule.terminal).collect();
    let mut found: Option<Vec<u8>> = None;
    let mut perm = inner.clone();
    let mut count = 0usize;
    permutations(&mut perm, 0, &mut |p| {
        let mut pi = vec![0u32; n];
        pi[rule.initial as usize] = rule.terminal;
        pi[rule.terminal as usize] = rule.initial;
        for (k, &v) in inner.iter().enumerate() {
            pi[v as usize] = p[k];
        }
        let mut sigma = Vec::with_capacity(g.edges.len());
        let mut used = vec![false; g.edges.len()];
        for e in &g.edges {
            let (s, t) = (pi[e.src as usize], pi[e.tgt as usize]);
            let hits: Vec<usize> = (0..g.edges.len())
                .filter(|&j| g.edges[j].src == s && g.edges[j].tgt == t && g.edges[j].color == e.color)
                .collect();
            if hits.len() != 1 || used[hits[0]] {
                return;
            }
            used[hits[0]] = true;
            sigma.push(hits[0] as u8);
        }
        count += 1;
        found = Some(sigma);
    });
    let sigma = found.filter(|_| count == 1)?;
    let involution = sigma.iter().enumerate().all(|(i, &j)| sigma[j as usize] as usize == i);
    involution.then_some(sigma)
}

fn permutations(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// An expansion of the base graph, stored as its set of leaf edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Expansion {
    leaves: BTreeSet<EdgeAddress>,
}

impl Expansion {
    pub fn base(sys: &ReplacementSystem) -> Expansion {
        Expansion { leaves: (0..sys.base.edges.len() as u16).map(EdgeAddress::base).collect() }
    }

    /// Builds an expansion from its leaves, checking that they form a
    /// complete leaf set.
    pub fn from_leaves(sys: &ReplacementSystem, leaves: impl IntoIterator<Item = EdgeAddress>) -> Result<Expansion> {
        let mut set = BTreeSet::new();
        for a in leaves {
            if !sys.is_valid_address(&a) {
                return Err(Error::InvalidExpansion(format!("invalid address {a:?}")));
            }
            if !set.insert(a.clone()) {
                return Err(Error::InvalidExpansion(format!("repeated leaf {}", sys.format_address(&a))));
            }
        }
        let e = Expansion { leaves: set };
        e.check(sys)?;
        Ok(e)
    }

    fn check(&self, sys: &ReplacementSystem) -> Result<()> {
        let internal = self.internal_nodes();
        for a in &self.leaves {
            if internal.contains(a) {
                return Err(Error::InvalidExpansion(format!("{} is both a leaf and expanded", sys.format_address(a))));
            }
        }
        let covered = |a: &EdgeAddress| self.leaves.contains(a) || internal.contains(a);
        for b in 0..sys.base.edges.len() as u16 {
            if !covered(&EdgeAddress::base(b)) {
                return Err(Error::InvalidExpansion(format!("base edge {} missing", sys.base.edges[b as usize].name)));
            }
        }
        for n in &internal {
            let c = sys.color_of(n).expect("valid prefix");
            for i in 0..sys.child_count(c) as u8 {
                if !covered(&n.child(i)) {
                    return Err(Error::InvalidExpansion(format!("{} missing", sys.format_address(&n.child(i)))));
                }
            }
        }
        Ok(())
    }

    pub fn leaves(&self) -> &BTreeSet<EdgeAddress> {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    pub fn contains(&self, a: &EdgeAddress) -> bool {
        self.leaves.contains(a)
    }

    /// Every strict ancestor of a leaf.
    pub fn internal_nodes(&self) -> BTreeSet<EdgeAddress> {
        let mut out = BTreeSet::new();
        for a in &self.leaves {
            let mut p = a.parent();
            while let Some(q) = p {
                if !out.insert(q.clone()) {
                    break;
                }
                p = q.parent();
            }
        }
        out
    }

    /// Whether `a` is a leaf or an internal node.
    pub fn is_node(&self, a: &EdgeAddress) -> bool {
        self.leaves.contains(a) || self.leaves.range(a.clone()..).next().is_some_and(|l| a.is_prefix_of(l))
    }

    /// The leaf that equals `a` or is an ancestor of it.
    pub fn leaf_above(&self, a: &EdgeAddress) -> Option<&EdgeAddress> {
        leaf_above(&self.leaves, a)
    }

    /// Replace leaf `a` by its children.
    pub fn expand_edge(&self, sys: &ReplacementSystem, a: &EdgeAddress) -> Result<Expansion> {
        if !self.leaves.contains(a) {
            return Err(Error::InvalidExpansion(format!("{} is not a leaf", sys.format_address(a))));
        }
        let mut leaves = self.leaves.clone();
        leaves.remove(a);
        let c = sys.color_of(a).expect("leaf is valid");
        for i in 0..sys.child_count(c) as u8 {
            leaves.insert(a.child(i));
        }
        Ok(Expansion { leaves })
    }

    /// The base graph expanded `rounds` times, every edge each round.
    pub fn full(sys: &ReplacementSystem, rounds: usize) -> Expansion {
        let mut e = Expansion::base(sys);
        for _ in 0..rounds {
            let mut next = BTreeSet::new();
            for a in &e.leaves {
                let c = sys.color_of(a).expect("valid");
                for i in 0..sys.child_count(c) as u8 {
                    next.insert(a.child(i));
                }
            }
            e.leaves = next;
        }
        e
    }

    /// Coarsest expansion refining both.
    pub fn common_refinement(&self, other: &Expansion) -> Expansion {
        let mut leaves = BTreeSet::new();
        for a in &self.leaves {
            if other.leaves.contains(a) || other.leaf_above(a).is_some() {
                leaves.insert(a.clone());
            }
        }
        for a in &other.leaves {
            if self.leaf_above(a).is_some() {
                leaves.insert(a.clone());
            }
        }
        Expansion { leaves }
    }

    /// The graph of this expansion with vertices glued by creation key.
    pub fn realize(&self, sys: &ReplacementSystem) -> RealizedGraph {
        let mut ends = Vec::with_capacity(self.leaves.len());
        let mut keys = BTreeSet::new();
        for a in &self.leaves {
            let (s, t) = sys.endpoints(a);
            keys.insert(s.clone());
            keys.insert(t.clone());
            ends.push((a.clone(), s, t));
        }
        let vertices: Vec<VertexKey> = keys.into_iter().collect();
        let index: BTreeMap<&VertexKey, usize> = vertices.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let edges = ends
            .iter()
            .map(|(a, s, t)| RealizedEdge {
                address: a.clone(),
                src: index[s],
                tgt: index[t],
                color: sys.color_of(a).expect("valid"),
            })
            .collect();
        RealizedGraph { vertices, edges }
    }
}

pub(crate) fn leaf_above<'a, V>(map: &'a impl LeafLookup<V>, a: &EdgeAddress) -> Option<&'a EdgeAddress> {
    map.last_at_or_before(a).filter(|l| l.is_prefix_of(a))
}

pub(crate) trait LeafLookup<V> {
    fn last_at_or_before(&self, a: &EdgeAddress) -> Option<&EdgeAddress>;
}

impl LeafLookup<()> for BTreeSet<EdgeAddress> {
    fn last_at_or_before(&self, a: &EdgeAddress) -> Option<&EdgeAddress> {
        self.range(..=a.clone()).next_back()
    }
}

impl<V> LeafLookup<V> for BTreeMap<EdgeAddress, V> {
    fn last_at_or_before(&self, a: &EdgeAddress) -> Option<&EdgeAddress> {
        self.range(..=a.clone()).next_back().map(|(k, _)| k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizedEdge {
    pub address: EdgeAddress,
    pub src: usize,
    pub tgt: usize,
    pub color: Color,
}

/// Concrete graph of an expansion; vertices are sorted creation keys and
/// edges follow leaf order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizedGraph {
    pub vertices: Vec<VertexKey>,
    pub edges: Vec<RealizedEdge>,
}

impl RealizedGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|e| (e.src == v) as usize + (e.tgt == v) as usize).sum()
    }
}

/// Shorthand for building graphs in code.
pub fn graph(vertices: &[&str], edges: &[(&str, u32, u32, Color)]) -> Graph {
    Graph {
        vertices: vertices.iter().map(|v| v.to_string()).collect(),
        edges: edges
            .iter()
            .map(|&(name, src, tgt, color)| NamedEdge { name: name.to_string(), src, tgt, color })
            .collect(),
    }
}
