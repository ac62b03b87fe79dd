//! JSON files for systems and diagrams, and DOT export of realized graphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use airframe_core::replacement::{Graph, NamedEdge, RealizedGraph, Rule};
use airframe_core::{systems, Diagram, EdgeAddress, Expansion, Image, ReplacementSystem};
use serde::{Deserialize, Serialize};

use crate::error::{AirframeError, Result};

/// Environment variable listing extra directories searched for
/// `<name>.json` system files.
pub const SYSTEM_PATH_VAR: &str = "AIRFRAME_SYSTEM_PATH";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    /// `[id, source, target, colour]`.
    pub edges: Vec<(String, u32, u32, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleFile {
    pub color: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, u32, u32, String)>,
    pub initial: u32,
    pub terminal: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub name: String,
    pub colors: Vec<String>,
    pub base: GraphFile,
    pub rules: Vec<RuleFile>,
}

fn edges_out(sys_colors: &[String], g: &Graph) -> Vec<(String, u32, u32, String)> {
    g.edges.iter().map(|e| (e.name.clone(), e.src, e.tgt, sys_colors[e.color as usize].clone())).collect()
}

fn edges_in(colors: &[String], edges: &[(String, u32, u32, String)]) -> Result<Vec<NamedEdge>> {
    edges
        .iter()
        .map(|(name, src, tgt, c)| {
            let color = colors
                .iter()
                .position(|x| x == c)
                .ok_or_else(|| AirframeError::Format(format!("edge {name:?} has unknown colour {c:?}")))?;
            Ok(NamedEdge { name: name.clone(), src: *src, tgt: *tgt, color: color as u8 })
        })
        .collect()
}

impl SystemFile {
    pub fn from_system(sys: &ReplacementSystem) -> SystemFile {
        let colors = sys.colors().to_vec();
        SystemFile {
            name: sys.name().to_string(),
            base: GraphFile { vertices: sys.base().vertices.clone(), edges: edges_out(&colors, sys.base()) },
            rules: sys
                .rules()
                .iter()
                .zip(&colors)
                .map(|(r, c)| RuleFile {
                    color: c.clone(),
                    vertices: r.graph.vertices.clone(),
                    edges: edges_out(&colors, &r.graph),
                    initial: r.initial,
                    terminal: r.terminal,
                })
                .collect(),
            colors,
        }
    }

    pub fn to_system(&self) -> Result<ReplacementSystem> {
        let base = Graph { vertices: self.base.vertices.clone(), edges: edges_in(&self.colors, &self.base.edges)? };
        let mut rules = Vec::new();
        for c in &self.colors {
            let r = self
                .rules
                .iter()
                .find(|r| &r.color == c)
                .ok_or_else(|| AirframeError::Format(format!("no rule for colour {c:?}")))?;
            rules.push(Rule {
                graph: Graph { vertices: r.vertices.clone(), edges: edges_in(&self.colors, &r.edges)? },
                initial: r.initial,
                terminal: r.terminal,
            });
        }
        if self.rules.len() != self.colors.len() {
            return Err(AirframeError::Format("one rule per colour expected".into()));
        }
        Ok(ReplacementSystem::new(&self.name, self.colors.clone(), base, rules)?)
    }
}

pub fn system_to_json(sys: &ReplacementSystem) -> String {
    serde_json::to_string_pretty(&SystemFile::from_system(sys)).expect("plain data")
}

pub fn system_from_json(text: &str) -> Result<ReplacementSystem> {
    serde_json::from_str::<SystemFile>(text)?.to_system()
}

fn search_dirs() -> Vec<PathBuf> {
    std::env::var_os(SYSTEM_PATH_VAR).map(|v| std::env::split_paths(&v).collect()).unwrap_or_default()
}

/// Finds a system: a built-in name, a path to a JSON file, or `<name>.json`
/// in one of the directories of [`SYSTEM_PATH_VAR`].
pub fn resolve_system(name: &str) -> Result<Arc<ReplacementSystem>> {
    if let Some(s) = systems::builtin(name) {
        return Ok(s);
    }
    let direct = Path::new(name);
    if direct.extension().is_some_and(|e| e == "json") && direct.is_file() {
        return Ok(Arc::new(system_from_json(&std::fs::read_to_string(direct)?)?));
    }
    for dir in search_dirs() {
        let p = dir.join(format!("{name}.json"));
        if p.is_file() {
            return Ok(Arc::new(system_from_json(&std::fs::read_to_string(p)?)?));
        }
    }
    Err(AirframeError::UnknownSystem(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub system: String,
    pub domain: Vec<String>,
    pub range: Vec<String>,
    /// `[domain, range]`, or `[domain, range, "reversed"]` for an edge sent
    /// to its image with the ends swapped.
    pub map: Vec<Vec<String>>,
}

const REVERSED: &str = "reversed";

impl DiagramFile {
    pub fn from_diagram(f: &Diagram) -> DiagramFile {
        let sys = f.system();
        let show = |a: &EdgeAddress| sys.format_address(a);
        let map = f
            .pairs()
            .iter()
            .map(|(d, img)| {
                let mut entry = vec![show(d), show(&img.addr)];
                if img.flipped {
                    entry.push(REVERSED.to_string());
                }
                entry
            })
            .collect();
        DiagramFile {
            system: sys.name().to_string(),
            domain: f.pairs().keys().map(show).collect(),
            range: f.range().leaves().iter().map(show).collect(),
            map,
        }
    }

    pub fn to_diagram(&self, sys: Arc<ReplacementSystem>) -> Result<Diagram> {
        let mut pairs = Vec::new();
        for entry in &self.map {
            let flipped = match entry.as_slice() {
                [_, _] => false,
                [_, _, tag] if tag == REVERSED => true,
                _ => return Err(AirframeError::Format(format!("bad map entry {entry:?}"))),
            };
            pairs.push((sys.parse_address(&entry[0])?, Image { addr: sys.parse_address(&entry[1])?, flipped }));
        }
        let listed = |xs: &[String]| -> Result<BTreeSet<EdgeAddress>> { xs.iter().map(|x| Ok(sys.parse_address(x)?)).collect() };
        let domain = listed(&self.domain)?;
        let range = listed(&self.range)?;
        if domain != pairs.iter().map(|(d, _)| d.clone()).collect() {
            return Err(AirframeError::Format("domain does not match the map".into()));
        }
        if range != pairs.iter().map(|(_, r)| r.addr.clone()).collect() {
            return Err(AirframeError::Format("range does not match the map".into()));
        }
        Ok(Diagram::new(sys, pairs)?)
    }
}

pub fn diagram_to_json(f: &Diagram) -> String {
    serde_json::to_string_pretty(&DiagramFile::from_diagram(f)).expect("plain data")
}

/// Reads a diagram, resolving its system by name.
pub fn diagram_from_json(text: &str) -> Result<Diagram> {
    let file: DiagramFile = serde_json::from_str(text)?;
    let sys = resolve_system(&file.system)?;
    file.to_diagram(sys)
}

fn dot_graph(out: &mut String, sys: &ReplacementSystem, g: &RealizedGraph, prefix: &str, labels: impl Fn(&EdgeAddress) -> String) {
    for i in 0..g.vertices.len() {
        writeln!(out, "    {prefix}{i} [label=\"\"];").unwrap();
    }
    for e in &g.edges {
        writeln!(
            out,
            "    {prefix}{} -> {prefix}{} [color=\"{}\", label=\"{}\"];",
            e.src,
            e.tgt,
            sys.colors()[e.color as usize],
            labels(&e.address)
        )
        .unwrap();
    }
}

/// The realized graph of an expansion; edges carry their address.
pub fn expansion_to_dot(sys: &ReplacementSystem, e: &Expansion) -> String {
    let mut out = format!("digraph \"{}\" {{\n    node [shape=point];\n", sys.name());
    dot_graph(&mut out, sys, &e.realize(sys), "v", |a| sys.format_address(a));
    out.push_str("}\n");
    out
}

/// Domain and range side by side; matching edges share a number, and a
/// reversed pair is marked with a prime on the range side.
pub fn diagram_to_dot(f: &Diagram) -> String {
    let sys = f.system();
    let index: std::collections::BTreeMap<&EdgeAddress, usize> = f.pairs().keys().enumerate().map(|(i, a)| (a, i)).collect();
    let back: std::collections::BTreeMap<EdgeAddress, (usize, bool)> =
        f.pairs().iter().map(|(d, img)| (img.addr.clone(), (index[d], img.flipped))).collect();
    let mut out = format!("digraph \"{}\" {{\n    node [shape=point];\n", sys.name());
    out.push_str("  subgraph cluster_domain {\n    label=\"domain\";\n");
    dot_graph(&mut out, sys, &f.domain().realize(sys), "d", |a| format!("{}: {}", index[a], sys.format_address(a)));
    out.push_str("  }\n  subgraph cluster_range {\n    label=\"range\";\n");
    dot_graph(&mut out, sys, &f.range().realize(sys), "r", |a| {
        let (i, flipped) = back[a];
        format!("{i}{}: {}", if flipped { "'" } else { "" }, sys.format_address(a))
    });
    out.push_str("  }\n}\n");
    out
}
