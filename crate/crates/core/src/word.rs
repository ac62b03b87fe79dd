//! Words in named generators and their evaluation.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::replacement::ReplacementSystem;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub name: String,
    pub exp: i64,
}

/// A word `l1 l2 … ln`; it denotes the composite `l1 ∘ l2 ∘ … ∘ ln`, so the
/// last letter acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn new() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn letter(name: &str, exp: i64) -> GroupWord {
        let mut w = GroupWord::new();
        w.push(name, exp);
        w
    }

    /// Appends a letter, merging with the last one and dropping zero powers.
    pub fn push(&mut self, name: &str, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.name == name {
                last.exp += exp;
                if last.exp == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push(Letter { name: name.to_string(), exp });
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for l in &other.0 {
            w.push(&l.name, l.exp);
        }
        w
    }

    pub fn inverse(&self) -> GroupWord {
        let mut w = GroupWord::new();
        for l in self.0.iter().rev() {
            w.push(&l.name, -l.exp);
        }
        w
    }

    pub fn pow(&self, k: i64) -> GroupWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = GroupWord::new();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// `h⁻¹ self h`.
    pub fn conjugate(&self, h: &GroupWord) -> GroupWord {
        h.inverse().concat(self).concat(h)
    }

    /// `self h self⁻¹ h⁻¹`.
    pub fn commutator(&self, h: &GroupWord) -> GroupWord {
        self.concat(h).concat(&self.inverse()).concat(&h.inverse())
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.0.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match l.exp {
                1 => write!(f, "{}", l.name)?,
                e => write!(f, "{}^{}", l.name, e)?,
            }
        }
        Ok(())
    }
}

/// Named generators of a group of diagrams over one system.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    system: Arc<ReplacementSystem>,
    entries: Vec<(Vec<String>, Diagram)>,
}

impl GeneratorTable {
    pub fn new(system: Arc<ReplacementSystem>) -> GeneratorTable {
        GeneratorTable { system, entries: Vec::new() }
    }

    /// Adds a generator under its primary name and any aliases.
    pub fn add(&mut self, names: &[&str], d: Diagram) {
        self.entries.push((names.iter().map(|s| s.to_string()).collect(), d.reduce()));
    }

    pub fn system(&self) -> &Arc<ReplacementSystem> {
        &self.system
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n[0].as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Diagram> {
        self.entries.iter().find(|(n, _)| n.iter().any(|m| m == name)).map(|(_, d)| d)
    }

    /// Primary name for a name or alias.
    pub fn canonical_name(&self, name: &str) -> Option<&str> {
        self.entries.iter().find(|(n, _)| n.iter().any(|m| m == name)).map(|(n, _)| n[0].as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Diagram)> {
        self.entries.iter().map(|(n, d)| (n[0].as_str(), d))
    }

    pub fn evaluate(&self, w: &GroupWord) -> Result<Diagram> {
        let mut acc = Diagram::identity(self.system.clone());
        for l in &w.0 {
            let g = self.get(&l.name).ok_or_else(|| Error::UnknownGenerator(l.name.clone()))?;
            acc = acc.compose(&g.pow(l.exp)?)?;
        }
        Ok(acc)
    }
}
